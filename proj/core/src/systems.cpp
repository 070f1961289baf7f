#include "mixlab/systems.hpp"

#include <algorithm>
#include <bit>

#include "mixlab/error.hpp"
#include "mixlab/gf2.hpp"

namespace mixlab {

CylinderPattern CylinderPattern::from_map(const GroupCtx& coords,
                                          std::map<GroupElement, int> items) {
  for (const auto& [g, sym] : items) {
    if (!belongs_to(coords, g)) {
      raise(ErrorKind::DomainMismatch,
            "pattern coordinate " + to_string(g) + " is not in " + describe(coords));
    }
    if (sym < 0) raise(ErrorKind::InvalidArgument, "negative symbol in pattern");
  }
  CylinderPattern p;
  p.constraints_ = std::move(items);
  return p;
}

CylinderPattern CylinderPattern::from_constraints(
    const GroupCtx& coords, const std::vector<std::pair<GroupElement, int>>& items) {
  std::map<GroupElement, int> map;
  for (const auto& [g, sym] : items) {
    GroupElement canon = make_element(coords, g.coords());
    if (!map.emplace(canon, sym).second) {
      raise(ErrorKind::InvalidArgument,
            "coordinate " + to_string(canon) + " constrained twice in one pattern");
    }
  }
  return from_map(coords, std::move(map));
}

// ---------------------------------------------------------------------------

SystemHandle SystemHandle::bernoulli(const GroupCtx& group, std::vector<Rational> probs) {
  if (probs.empty()) raise(ErrorKind::InvalidArgument, "Bernoulli alphabet is empty");
  Rational total = 0;
  for (auto& p : probs) {
    p.canonicalize();
    if (p < 0) raise(ErrorKind::InvalidArgument, "negative Bernoulli probability");
    total += p;
  }
  if (total != 1) {
    raise(ErrorKind::InvalidArgument, "Bernoulli probabilities sum to " + to_string(total));
  }
  SystemHandle s;
  s.kind_ = SystemKind::Bernoulli;
  s.acting_ = group;
  s.coords_ = group;
  s.probs_ = std::move(probs);
  return s;
}

SystemHandle SystemHandle::fair_coin(const GroupCtx& group) {
  return bernoulli(group, {make_rational(1, 2), make_rational(1, 2)});
}

SystemHandle SystemHandle::ledrappier() {
  SystemHandle s;
  s.kind_ = SystemKind::Ledrappier;
  s.acting_ = GroupCtx::lattice(2);
  s.coords_ = GroupCtx::lattice(2);
  return s;
}

SystemHandle SystemHandle::pulled_back(const SystemHandle& base, const Homomorphism& phi) {
  if (!(phi.target() == base.acting_group())) {
    raise(ErrorKind::DomainMismatch, "homomorphism target " + mixlab::describe(phi.target()) +
                                         " does not act on " + base.describe());
  }
  SystemHandle s;
  s.kind_ = SystemKind::PulledBack;
  s.acting_ = phi.source();
  s.coords_ = base.coordinate_group();
  s.base_ = std::make_shared<const SystemHandle>(base);
  s.phi_ = std::make_shared<const Homomorphism>(phi);
  return s;
}

std::size_t SystemHandle::alphabet_size() const noexcept {
  switch (kind_) {
    case SystemKind::Bernoulli: return probs_.size();
    case SystemKind::Ledrappier: return 2;
    case SystemKind::PulledBack: return base_->alphabet_size();
  }
  return 0;
}

std::string SystemHandle::describe() const {
  switch (kind_) {
    case SystemKind::Bernoulli: {
      std::string s = "Bernoulli(" + mixlab::describe(acting_) + ";";
      for (std::size_t i = 0; i < probs_.size(); ++i) {
        s += (i ? "," : "") + to_string(probs_[i]);
      }
      return s + ")";
    }
    case SystemKind::Ledrappier: return "Ledrappier";
    case SystemKind::PulledBack:
      return "PulledBack(" + base_->describe() + "," + phi_->describe() + ")";
  }
  return "?";
}

CylinderPattern make_pattern(const SystemHandle& sys,
                             const std::vector<std::pair<GroupElement, int>>& items) {
  for (const auto& item : items) {
    if (static_cast<std::size_t>(item.second) >= sys.alphabet_size()) {
      raise(ErrorKind::InvalidArgument, "symbol " + std::to_string(item.second) +
                                            " outside alphabet of " + sys.describe());
    }
  }
  return CylinderPattern::from_constraints(sys.coordinate_group(), items);
}

namespace {

void require_acting(const SystemHandle& sys, const GroupElement& g) {
  if (!belongs_to(sys.acting_group(), g)) {
    raise(ErrorKind::DomainMismatch,
          "shift " + to_string(g) + " is not in the acting group " + describe(sys.acting_group()));
  }
}

// Shift in coordinate space that realizes T_g for this system.
GroupElement coordinate_shift(const SystemHandle& sys, const GroupElement& g) {
  require_acting(sys, g);
  if (sys.kind() == SystemKind::PulledBack) {
    return coordinate_shift(sys.base(), hom_apply(sys.phi(), g));
  }
  return g;
}

CylinderPattern shift_pattern(const GroupCtx& coords, const GroupElement& shift,
                              const CylinderPattern& a) {
  if (shift.is_zero()) return a;
  std::map<GroupElement, int> out;
  for (const auto& [s, sym] : a.constraints()) out.emplace(add(coords, s, shift), sym);
  return CylinderPattern::from_map(coords, std::move(out));
}

const SystemHandle& ground(const SystemHandle& sys) {
  return sys.kind() == SystemKind::PulledBack ? ground(sys.base()) : sys;
}

// Exponent pairs normalized so the minimum in each variable is zero.
struct Normalized {
  std::vector<std::uint64_t> u;
  std::vector<std::uint64_t> v;
};

constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 62;
constexpr std::size_t kMaxTerms = std::size_t{1} << 22;

Normalized normalize(const std::vector<std::pair<BigInt, BigInt>>& monomials) {
  Normalized out;
  if (monomials.empty()) return out;
  BigInt min_u = monomials[0].first;
  BigInt min_v = monomials[0].second;
  for (const auto& [a, b] : monomials) {
    if (a < min_u) min_u = a;
    if (b < min_v) min_v = b;
  }
  for (const auto& [a, b] : monomials) {
    BigInt da = a - min_u;
    BigInt db = b - min_v;
    if (da >= BigInt(static_cast<unsigned long>(kMaxExponent)) ||
        db >= BigInt(static_cast<unsigned long>(kMaxExponent))) {
      raise(ErrorKind::Guard, "Ledrappier pattern spread exceeds 2^62");
    }
    out.u.push_back(da.get_ui());
    out.v.push_back(db.get_ui());
  }
  return out;
}

// Images of the monomials in GF(2)[t] under u -> t, v -> 1+t (or the mirrored
// substitution when it produces fewer terms; 1+u+v is symmetric in u and v).
std::vector<gf2::SparsePoly> substitute(const Normalized& n) {
  std::size_t cost_uv = 0;
  std::size_t cost_vu = 0;
  for (std::size_t i = 0; i < n.u.size(); ++i) {
    cost_uv += std::size_t{1} << std::popcount(n.v[i]);
    cost_vu += std::size_t{1} << std::popcount(n.u[i]);
  }
  const bool mirrored = cost_vu < cost_uv;
  if (std::min(cost_uv, cost_vu) > kMaxTerms) {
    raise(ErrorKind::Guard, "Ledrappier substitution needs more than 2^22 terms");
  }
  std::vector<gf2::SparsePoly> out;
  out.reserve(n.u.size());
  for (std::size_t i = 0; i < n.u.size(); ++i) {
    out.push_back(mirrored ? gf2::shifted_binomial(n.v[i], n.u[i])
                           : gf2::shifted_binomial(n.u[i], n.v[i]));
  }
  return out;
}

Rational bernoulli_measure(const SystemHandle& sys, const CylinderPattern& a) {
  Rational m = 1;
  for (const auto& [s, sym] : a.constraints()) {
    if (static_cast<std::size_t>(sym) >= sys.probs().size()) {
      raise(ErrorKind::InvalidArgument, "symbol outside Bernoulli alphabet");
    }
    m *= sys.probs()[static_cast<std::size_t>(sym)];
  }
  return m;
}

}  // namespace

bool in_ledrappier_ideal(const std::vector<std::pair<BigInt, BigInt>>& monomials) {
  auto polys = substitute(normalize(monomials));
  gf2::SparsePoly sum;
  for (const auto& p : polys) sum = gf2::add(sum, p);
  return sum.empty();
}

LedrappierAnalysis analyze_ledrappier(const CylinderPattern& a) {
  LedrappierAnalysis out;
  out.support_size = a.size();
  if (a.is_full_space()) return out;
  std::vector<std::pair<BigInt, BigInt>> monomials;
  gf2::BitVec bits(a.size());
  std::size_t i = 0;
  for (const auto& [s, sym] : a.constraints()) {
    if (sym > 1) raise(ErrorKind::InvalidArgument, "Ledrappier symbols are bits");
    monomials.emplace_back(s[0], s[1]);
    if (sym == 1) bits.set(i);
    ++i;
  }
  auto polys = substitute(normalize(monomials));
  auto ker = gf2::kernel(polys);
  out.rank = ker.rank;
  out.consistent = std::none_of(ker.dependencies.begin(), ker.dependencies.end(),
                                [&](const gf2::BitVec& dep) { return dep.dot(bits); });
  return out;
}

CylinderPattern translate_cylinder(const SystemHandle& sys, const GroupElement& g,
                                   const CylinderPattern& a) {
  return shift_pattern(sys.coordinate_group(), coordinate_shift(sys, g), a);
}

Rational cylinder_measure(const SystemHandle& sys, const CylinderPattern& a) {
  const SystemHandle& g = ground(sys);
  if (g.kind() == SystemKind::Bernoulli) return bernoulli_measure(g, a);
  auto analysis = analyze_ledrappier(a);
  if (!analysis.consistent) return Rational(0);
  Rational m = 1;
  mpz_mul_2exp(m.get_den_mpz_t(), m.get_den_mpz_t(), analysis.rank);
  return m;
}

Rational correlate(const SystemHandle& sys, const std::vector<CorrelationTerm>& terms) {
  if (terms.empty()) raise(ErrorKind::InvalidArgument, "correlate needs at least one term");
  const GroupCtx& coords = sys.coordinate_group();
  std::map<GroupElement, int> merged;
  for (const auto& term : terms) {
    GroupElement shift = coordinate_shift(sys, term.shift);
    for (const auto& [s, sym] : term.pattern.constraints()) {
      auto [it, inserted] = merged.emplace(add(coords, s, shift), sym);
      if (!inserted && it->second != sym) return Rational(0);
    }
  }
  return cylinder_measure(sys, CylinderPattern::from_map(coords, std::move(merged)));
}

Rational mixing_gap(const SystemHandle& sys, const std::vector<CorrelationTerm>& terms) {
  Rational product = 1;
  for (const auto& term : terms) product *= cylinder_measure(sys, term.pattern);
  return abs(Rational(correlate(sys, terms) - product));
}

MixingEvidence mixing_evidence(const SystemHandle& sys, const CylinderPattern& a0,
                               const CylinderPattern& a1, const std::vector<GroupElement>& gs,
                               const Rational& epsilon) {
  {
    std::vector<GroupElement> sorted = gs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      raise(ErrorKind::InvalidArgument, "mixing_evidence shifts must be pairwise distinct");
    }
  }
  MixingEvidence ev;
  ev.epsilon = epsilon;
  const GroupElement origin = zero(sys.acting_group());
  for (const auto& g : gs) {
    Rational gap = mixing_gap(sys, {{origin, a0}, {g, a1}});
    if (gap < epsilon) ++ev.below_epsilon;
    if (!ev.worst || gap > ev.worst->gap) ev.worst = MixingRow{g, gap};
    ev.rows.push_back({g, std::move(gap)});
  }
  return ev;
}

}  // namespace mixlab
