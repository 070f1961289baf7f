#include "mixlab/group.hpp"

#include <algorithm>
#include <sstream>

#include "mixlab/error.hpp"

namespace mixlab {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Int: return "Int";
    case GroupKind::IntVec: return "IntVec";
    case GroupKind::FinSupportIntSeq: return "FinSupportIntSeq";
  }
  return "?";
}

GroupCtx GroupCtx::integers() { return {GroupKind::Int, 1, "Z"}; }

GroupCtx GroupCtx::lattice(std::size_t d) {
  if (d == 0) raise(ErrorKind::InvalidArgument, "IntVec dimension must be >= 1");
  return {GroupKind::IntVec, d, "Z^" + std::to_string(d)};
}

GroupCtx GroupCtx::finite_support() {
  return {GroupKind::FinSupportIntSeq, 1, "(+)_N Z"};
}

std::string describe(const GroupCtx& ctx) {
  if (ctx.kind == GroupKind::IntVec) return "IntVec(" + std::to_string(ctx.dim) + ")";
  return to_string(ctx.kind);
}

GroupElement::GroupElement(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.coords_.size() <=> b.coords_.size();
}

std::string to_string(const GroupElement& g) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out << ',';
    out << g[i].get_str();
  }
  out << ']';
  return out.str();
}

namespace {

std::size_t expected_length(const GroupCtx& ctx) {
  return ctx.kind == GroupKind::IntVec ? ctx.dim : 1;
}

void canonicalize(std::vector<BigInt>& coords) {
  while (!coords.empty() && coords.back() == 0) coords.pop_back();
}

void require_member(const GroupCtx& ctx, const GroupElement& g, const char* what) {
  if (!belongs_to(ctx, g)) {
    raise(ctx.kind == GroupKind::FinSupportIntSeq ? ErrorKind::DomainMismatch
                                                  : ErrorKind::DimensionMismatch,
          std::string(what) + ": element " + to_string(g) + " is not in " + describe(ctx));
  }
}

}  // namespace

GroupElement make_element(const GroupCtx& ctx, std::vector<BigInt> coords) {
  if (ctx.kind == GroupKind::FinSupportIntSeq) {
    canonicalize(coords);
    return GroupElement(std::move(coords));
  }
  if (coords.size() != expected_length(ctx)) {
    raise(ErrorKind::DimensionMismatch,
          "expected " + std::to_string(expected_length(ctx)) + " coordinates for " +
              describe(ctx) + ", got " + std::to_string(coords.size()));
  }
  return GroupElement(std::move(coords));
}

GroupElement make_element(const GroupCtx& ctx, std::initializer_list<long> coords) {
  std::vector<BigInt> v;
  for (long c : coords) v.emplace_back(c);
  return make_element(ctx, std::move(v));
}

bool belongs_to(const GroupCtx& ctx, const GroupElement& g) {
  if (ctx.kind == GroupKind::FinSupportIntSeq) {
    return g.size() == 0 || g.coords().back() != 0;
  }
  return g.size() == expected_length(ctx);
}

GroupElement zero(const GroupCtx& ctx) {
  if (ctx.kind == GroupKind::FinSupportIntSeq) return GroupElement();
  return GroupElement(std::vector<BigInt>(expected_length(ctx), BigInt(0)));
}

GroupElement group_op(const GroupCtx& ctx, const GroupElement& a, const GroupElement& b,
                      GroupOpMode mode) {
  require_member(ctx, a, "group_op");
  require_member(ctx, b, "group_op");
  std::vector<BigInt> out(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (mode == GroupOpMode::Add) {
      out[i] += b[i];
    } else {
      out[i] -= b[i];
    }
  }
  return make_element(ctx, std::move(out));
}

GroupElement add(const GroupCtx& ctx, const GroupElement& a, const GroupElement& b) {
  return group_op(ctx, a, b, GroupOpMode::Add);
}

GroupElement sub(const GroupCtx& ctx, const GroupElement& a, const GroupElement& b) {
  return group_op(ctx, a, b, GroupOpMode::Sub);
}

GroupElement neg(const GroupCtx& ctx, const GroupElement& g) {
  return group_op(ctx, zero(ctx), g, GroupOpMode::Sub);
}

GroupElement scale(const GroupCtx& ctx, const BigInt& factor, const GroupElement& g) {
  require_member(ctx, g, "scale");
  std::vector<BigInt> out = g.coords();
  for (auto& c : out) c *= factor;
  return make_element(ctx, std::move(out));
}

BigInt escape_norm(const GroupCtx& ctx, const GroupElement& g) {
  require_member(ctx, g, "escape_norm");
  BigInt norm = 0;
  for (const auto& c : g.coords()) {
    BigInt a = ::abs(c);
    if (a > norm) norm = a;
  }
  if (ctx.kind == GroupKind::FinSupportIntSeq && BigInt(g.size()) > norm) {
    norm = BigInt(g.size());
  }
  return norm;
}

// ---------------------------------------------------------------------------

Homomorphism Homomorphism::scale(const GroupCtx& ctx, BigInt factor) {
  Homomorphism h;
  h.kind_ = HomKind::Scale;
  h.source_ = ctx;
  h.target_ = ctx;
  h.factor_ = std::move(factor);
  return h;
}

Homomorphism Homomorphism::matrix(std::vector<std::vector<BigInt>> rows) {
  const std::size_t d = rows.size();
  if (d == 0) raise(ErrorKind::InvalidArgument, "matrix homomorphism needs at least one row");
  for (const auto& r : rows) {
    if (r.size() != d) raise(ErrorKind::DimensionMismatch, "matrix homomorphism must be square");
  }
  Homomorphism h;
  h.kind_ = HomKind::Matrix;
  h.source_ = GroupCtx::lattice(d);
  h.target_ = GroupCtx::lattice(d);
  h.rows_ = std::move(rows);
  return h;
}

Homomorphism Homomorphism::interleave() {
  Homomorphism h;
  h.kind_ = HomKind::Interleave;
  h.source_ = h.target_ = GroupCtx::finite_support();
  return h;
}

Homomorphism Homomorphism::even_select() {
  Homomorphism h;
  h.kind_ = HomKind::EvenSelect;
  h.source_ = h.target_ = GroupCtx::finite_support();
  return h;
}

Homomorphism Homomorphism::prime_select(unsigned long p) {
  if (p < 2 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0) {
    raise(ErrorKind::InvalidArgument, "PrimeSelect needs a prime, got " + std::to_string(p));
  }
  Homomorphism h;
  h.kind_ = HomKind::PrimeSelect;
  h.source_ = h.target_ = GroupCtx::finite_support();
  h.prime_ = p;
  return h;
}

Homomorphism Homomorphism::compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!(inner.target() == outer.source())) {
    raise(ErrorKind::DomainMismatch, "cannot compose " + outer.describe() + " after " +
                                         inner.describe());
  }
  Homomorphism h;
  h.kind_ = HomKind::Compose;
  h.source_ = inner.source();
  h.target_ = outer.target();
  h.outer_ = std::make_shared<const Homomorphism>(outer);
  h.inner_ = std::make_shared<const Homomorphism>(inner);
  return h;
}

std::string Homomorphism::describe() const {
  switch (kind_) {
    case HomKind::Scale: return "Scale(" + factor_.get_str() + ")";
    case HomKind::Matrix: {
      std::string s = "Matrix[";
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
          if (j) s += ',';
          s += rows_[i][j].get_str();
        }
      }
      return s + "]";
    }
    case HomKind::Interleave: return "Interleave";
    case HomKind::EvenSelect: return "EvenSelect";
    case HomKind::PrimeSelect: return "PrimeSelect(" + std::to_string(prime_) + ")";
    case HomKind::Compose: return outer_->describe() + "o" + inner_->describe();
  }
  return "?";
}

GroupElement hom_apply(const Homomorphism& phi, const GroupElement& g) {
  require_member(phi.source(), g, "hom_apply");
  const GroupCtx& ctx = phi.source();
  switch (phi.kind()) {
    case HomKind::Scale:
      return scale(ctx, phi.factor(), g);
    case HomKind::Matrix: {
      const auto& rows = phi.rows();
      std::vector<BigInt> out(rows.size(), BigInt(0));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) out[i] += rows[i][j] * g[j];
      }
      return make_element(phi.target(), std::move(out));
    }
    case HomKind::Interleave: {
      std::vector<BigInt> out(2 * g.size(), BigInt(0));
      for (std::size_t i = 0; i < g.size(); ++i) out[2 * i + 1] = g[i];
      return make_element(phi.target(), std::move(out));
    }
    case HomKind::EvenSelect: {
      std::vector<BigInt> out;
      for (std::size_t pos = 2; pos <= g.size(); pos += 2) out.push_back(g[pos - 1]);
      return make_element(phi.target(), std::move(out));
    }
    case HomKind::PrimeSelect: {
      std::vector<BigInt> out;
      // positions p, p^2, ... that fall inside the support
      for (unsigned long long pos = phi.prime(); pos <= g.size(); pos *= phi.prime()) {
        out.push_back(g[pos - 1]);
      }
      return make_element(phi.target(), std::move(out));
    }
    case HomKind::Compose:
      return hom_apply(phi.outer(), hom_apply(phi.inner(), g));
  }
  raise(ErrorKind::InvalidArgument, "unknown homomorphism kind");
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

bool is_lattice(const Homomorphism& phi) {
  return phi.source().kind != GroupKind::FinSupportIntSeq;
}

Matrix lattice_matrix(const Homomorphism& phi) {
  const std::size_t d = phi.source().kind == GroupKind::IntVec ? phi.source().dim : 1;
  switch (phi.kind()) {
    case HomKind::Scale: {
      Matrix m(d, std::vector<BigInt>(d, BigInt(0)));
      for (std::size_t i = 0; i < d; ++i) m[i][i] = phi.factor();
      return m;
    }
    case HomKind::Matrix:
      return phi.rows();
    case HomKind::Compose: {
      Matrix a = lattice_matrix(phi.outer());
      Matrix b = lattice_matrix(phi.inner());
      Matrix m(d, std::vector<BigInt>(d, BigInt(0)));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
      return m;
    }
    default:
      raise(ErrorKind::DomainMismatch, "not a lattice homomorphism: " + phi.describe());
  }
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : v) {
    Rational scaled = x * lcm_den;
    out.push_back(scaled.get_num());
    g = gcd(g, out.back());
  }
  if (g != 0) {
    for (auto& x : out) x /= g;
  }
  auto first = std::find_if(out.begin(), out.end(), [](const BigInt& x) { return x != 0; });
  if (first != out.end() && *first < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

struct SequenceReads {
  bool reads_every_input = true;
  std::string culprit;
};

SequenceReads sequence_reads(const Homomorphism& phi) {
  switch (phi.kind()) {
    case HomKind::Scale:
      if (phi.factor() == 0) return {false, "Scale(0)"};
      return {};
    case HomKind::Interleave:
      return {};
    case HomKind::EvenSelect:
    case HomKind::PrimeSelect:
      return {false, phi.describe()};
    case HomKind::Compose: {
      auto inner = sequence_reads(phi.inner());
      if (!inner.reads_every_input) return inner;
      return sequence_reads(phi.outer());
    }
    case HomKind::Matrix:
      break;
  }
  raise(ErrorKind::DomainMismatch, "unexpected homomorphism on sequences");
}

}  // namespace

KernelReport hom_kernel_finite(const Homomorphism& phi) {
  KernelReport report;
  if (!is_lattice(phi)) {
    auto reads = sequence_reads(phi);
    report.finite = reads.reads_every_input;
    report.reason = reads.reads_every_input
                        ? "every input coordinate is read with a nonzero coefficient"
                        : reads.culprit + " ignores infinitely many input coordinates";
    return report;
  }
  Matrix m = lattice_matrix(phi);
  const std::size_t d = m.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m[i][j];
  auto pivots = rref(a);
  report.rank = pivots.size();
  report.finite = pivots.size() == d;
  if (report.finite) {
    report.reason = "full rank " + std::to_string(d);
    return report;
  }
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<Rational> v(d, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
  report.kernel_vector = primitive_integer_vector(v);
  report.reason = "rank " + std::to_string(pivots.size()) + " < " + std::to_string(d);
  return report;
}

// ---------------------------------------------------------------------------

FolnerFamily FolnerFamily::canonical(const GroupCtx& ctx, std::size_t max_index) {
  if (max_index == 0) raise(ErrorKind::InvalidArgument, "Folner family needs K >= 1");
  FolnerFamily fam;
  fam.ctx = ctx;
  fam.kind = ctx.kind == GroupKind::FinSupportIntSeq ? FolnerKind::SupportBoxes
                                                     : FolnerKind::Boxes;
  fam.max_index = max_index;
  return fam;
}

namespace {

std::size_t window_dims(const FolnerFamily& fam, std::size_t k) {
  if (fam.kind == FolnerKind::SupportBoxes) return k;
  return fam.ctx.kind == GroupKind::IntVec ? fam.ctx.dim : 1;
}

void check_index(const FolnerFamily& fam, std::size_t k) {
  if (k == 0 || k > fam.max_index) {
    raise(ErrorKind::OutOfRange, "Folner index " + std::to_string(k) + " outside [1, " +
                                     std::to_string(fam.max_index) + "]");
  }
}

}  // namespace

BigInt folner_window_size(const FolnerFamily& fam, std::size_t k) {
  check_index(fam, k);
  return pow(BigInt(2 * k + 1), window_dims(fam, k));
}

std::vector<GroupElement> folner_window(const FolnerFamily& fam, std::size_t k) {
  BigInt size = folner_window_size(fam, k);
  if (size > BigInt(static_cast<unsigned long>(kMaxWindowSize))) {
    raise(ErrorKind::Guard, "Folner window F_" + std::to_string(k) + " has " + size.get_str() +
                                " elements (limit " + std::to_string(kMaxWindowSize) + ")");
  }
  const std::size_t dims = window_dims(fam, k);
  const long radius = static_cast<long>(k);
  std::vector<GroupElement> out;
  out.reserve(size.get_ui());
  std::vector<long> cur(dims, -radius);
  while (true) {
    std::vector<BigInt> coords(cur.begin(), cur.end());
    out.push_back(make_element(fam.ctx, std::move(coords)));
    std::size_t i = dims;
    while (i > 0 && cur[i - 1] == radius) {
      cur[i - 1] = -radius;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  if (fam.kind == FolnerKind::SupportBoxes) {
    // canonical forms of distinct tuples stay distinct, but lose the tuple order
    std::sort(out.begin(), out.end());
  }
  return out;
}

Rational folner_overlap_ratio(const FolnerFamily& fam, std::size_t k, const GroupElement& g) {
  check_index(fam, k);
  require_member(fam.ctx, g, "folner_overlap_ratio");
  const std::size_t dims = window_dims(fam, k);
  if (g.size() > dims) return Rational(0);
  const BigInt side = BigInt(2 * k + 1);
  BigInt overlap = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    BigInt a = i < g.size() ? BigInt(::abs(g[i])) : BigInt(0);
    BigInt span = side - a;
    if (span <= 0) return Rational(0);
    overlap *= span;
  }
  return make_rational(overlap, pow(side, dims));
}

}  // namespace mixlab
