#include "mixlab/largeness.hpp"

#include <algorithm>
#include <unordered_map>

#include "mixlab/error.hpp"

namespace mixlab {

SeedMatrix SeedMatrix::from_columns(const GroupCtx& ctx,
                                    std::vector<std::vector<std::vector<GroupElement>>> entries) {
  if (entries.empty() || entries[0].empty()) {
    raise(ErrorKind::InvalidArgument, "seed needs d >= 1 components and m >= 1 slots");
  }
  SeedMatrix s;
  s.ctx_ = ctx;
  s.d_ = entries.size();
  s.m_ = entries[0].size();
  s.horizon_ = entries[0][0].size();
  for (auto& component : entries) {
    if (component.size() != s.m_) {
      raise(ErrorKind::DimensionMismatch, "every seed component needs m columns");
    }
    for (auto& column : component) {
      if (column.size() != s.horizon_) {
        raise(ErrorKind::DimensionMismatch, "seed columns have different horizons");
      }
      for (auto& g : column) g = make_element(ctx, g.coords());
    }
  }
  if (s.horizon_ < s.m_) {
    raise(ErrorKind::InvalidArgument, "seed horizon K must be at least m");
  }
  s.entries_ = std::move(entries);
  return s;
}

SeedMatrix SeedMatrix::generate(
    const GroupCtx& ctx, std::size_t m, std::size_t d, std::size_t horizon,
    const std::function<GroupElement(std::size_t, std::size_t, std::size_t)>& f) {
  std::vector<std::vector<std::vector<GroupElement>>> entries(
      d, std::vector<std::vector<GroupElement>>(m));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t k = 1; k <= horizon; ++k) entries[j][t].push_back(f(j, t, k));
  return from_columns(ctx, std::move(entries));
}

const GroupElement& SeedMatrix::at(std::size_t j, std::size_t t, std::size_t k) const {
  if (j >= d_ || t >= m_ || k == 0 || k > horizon_) {
    raise(ErrorKind::OutOfRange, "seed entry (" + std::to_string(j) + "," + std::to_string(t) +
                                     "," + std::to_string(k) + ") out of range");
  }
  return entries_[j][t][k - 1];
}

GroupElement seed_sum(const SeedMatrix& seed, std::size_t j, const IndexSet& alpha) {
  if (alpha.size() != seed.m()) {
    raise(ErrorKind::InvalidArgument, "seed_sum needs |alpha| = m = " + std::to_string(seed.m()));
  }
  IndexSet sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  if (!is_index_set(sorted, seed.horizon())) {
    raise(ErrorKind::OutOfRange, "alpha " + to_string(alpha) + " is not an m-subset of [K]");
  }
  GroupElement acc = zero(seed.ctx());
  for (std::size_t t = 0; t < sorted.size(); ++t) acc = add(seed.ctx(), acc, seed.at(j, t, sorted[t]));
  return acc;
}

Tuple seed_tuple(const SeedMatrix& seed, const IndexSet& alpha) {
  Tuple out;
  out.reserve(seed.d());
  for (std::size_t j = 0; j < seed.d(); ++j) out.push_back(seed_sum(seed, j, alpha));
  return out;
}

SeedValidation validate_seed(const SeedMatrix& seed) {
  const GroupCtx& ctx = seed.ctx();
  for (std::size_t j = 0; j < seed.d(); ++j) {
    for (std::size_t t = 0; t < seed.m(); ++t) {
      for (std::size_t k = 2; k <= seed.horizon(); ++k) {
        if (escape_norm(ctx, seed.at(j, t, k)) <= escape_norm(ctx, seed.at(j, t, k - 1))) {
          SeedViolation v{SeedViolation::Kind::NonDegenerate, j, j, t, k,
                          "escape norm of component " + std::to_string(j) + ", slot " +
                              std::to_string(t) + " does not increase at k=" + std::to_string(k)};
          return {false, std::move(v)};
        }
      }
    }
  }
  for (std::size_t t = 0; t < seed.m(); ++t) {
    for (std::size_t j = 0; j < seed.d(); ++j) {
      for (std::size_t jj = j + 1; jj < seed.d(); ++jj) {
        for (std::size_t k = 2; k <= seed.horizon(); ++k) {
          auto cur = escape_norm(ctx, sub(ctx, seed.at(j, t, k), seed.at(jj, t, k)));
          auto prev = escape_norm(ctx, sub(ctx, seed.at(j, t, k - 1), seed.at(jj, t, k - 1)));
          if (cur <= prev) {
            SeedViolation v{SeedViolation::Kind::EssentiallyDistinct, j, jj, t, k,
                            "components " + std::to_string(j) + " and " + std::to_string(jj) +
                                " of slot " + std::to_string(t) +
                                " do not grow apart at k=" + std::to_string(k)};
            return {false, std::move(v)};
          }
        }
      }
    }
  }
  return {};
}

std::vector<SigmaElement> enumerate_sigma(const SeedMatrix& seed) {
  std::vector<SigmaElement> out;
  for (auto& alpha : all_subsets(seed.horizon(), seed.m())) {
    Tuple value = seed_tuple(seed, alpha);
    out.push_back({std::move(alpha), std::move(value)});
  }
  return out;
}

// ---------------------------------------------------------------------------

FSFamily FSFamily::from_generators(const GroupCtx& ctx,
                                   std::vector<std::vector<GroupElement>> gens) {
  if (gens.empty() || gens[0].empty()) {
    raise(ErrorKind::InvalidArgument, "FS family needs at least one generator per component");
  }
  for (auto& component : gens) {
    if (component.size() != gens[0].size()) {
      raise(ErrorKind::DimensionMismatch, "FS components have different horizons");
    }
    for (auto& g : component) g = make_element(ctx, g.coords());
  }
  FSFamily fam;
  fam.ctx_ = ctx;
  fam.gens_ = std::move(gens);
  return fam;
}

FSFamily FSFamily::generate(const GroupCtx& ctx, std::size_t d, std::size_t horizon,
                            const std::function<GroupElement(std::size_t, std::size_t)>& f) {
  std::vector<std::vector<GroupElement>> gens(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 1; k <= horizon; ++k) gens[j].push_back(f(j, k));
  return from_generators(ctx, std::move(gens));
}

Tuple fs_value(const FSFamily& fam, const IndexSet& alpha) {
  if (alpha.empty() || !is_index_set(alpha, fam.horizon())) {
    raise(ErrorKind::OutOfRange, "alpha " + to_string(alpha) + " is not a nonempty subset of [K]");
  }
  Tuple out;
  for (std::size_t j = 0; j < fam.d(); ++j) {
    GroupElement acc = zero(fam.ctx());
    for (auto k : alpha) acc = add(fam.ctx(), acc, fam.at(j, k));
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<SigmaElement> enumerate_fs(const FSFamily& fam) {
  if (fam.horizon() > kMaxFsHorizon) {
    raise(ErrorKind::Guard, "FS enumeration limited to K <= " + std::to_string(kMaxFsHorizon));
  }
  std::vector<SigmaElement> out;
  for (auto& alpha : all_nonempty_subsets(fam.horizon())) {
    Tuple value = fs_value(fam, alpha);
    out.push_back({std::move(alpha), std::move(value)});
  }
  return out;
}

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::RefutesSigmaStar: return "RefutesSigmaStar";
    case CertKind::EvidenceSigmaStar: return "EvidenceSigmaStar";
    case CertKind::RefutesIPStar: return "RefutesIPStar";
    case CertKind::EvidenceIPStar: return "EvidenceIPStar";
  }
  return "?";
}

namespace {

template <typename Enumerate>
LargenessCert battery_certificate(const TuplePredicate& pred, std::size_t battery_size,
                                  Enumerate&& enumerate, CertKind evidence, CertKind refutes) {
  LargenessCert cert;
  cert.kind = evidence;
  cert.battery_size = battery_size;
  for (std::size_t i = 0; i < battery_size; ++i) {
    auto [elements, horizon] = enumerate(i);
    auto hit = std::find_if(elements.begin(), elements.end(),
                            [&](const SigmaElement& e) { return pred(e.value); });
    if (hit == elements.end()) {
      cert.kind = refutes;
      cert.witnesses.clear();
      cert.refuted_index = i;
      cert.refuted_horizon = horizon;
      cert.refutation = std::move(elements);
      return cert;
    }
    cert.witnesses.push_back({i, hit->alpha, hit->value});
  }
  return cert;
}

}  // namespace

LargenessCert sigma_star_evidence(const TuplePredicate& pred, std::span<const SeedMatrix> battery) {
  if (battery.empty()) raise(ErrorKind::InvalidArgument, "empty seed battery");
  const std::size_t m = battery[0].m();
  for (const auto& seed : battery) {
    if (seed.m() != m) raise(ErrorKind::InvalidArgument, "battery mixes different m");
    auto v = validate_seed(seed);
    if (!v.ok) raise(ErrorKind::InvalidArgument, "battery seed invalid: " + v.first_violation->message);
  }
  auto cert = battery_certificate(
      pred, battery.size(),
      [&](std::size_t i) {
        return std::pair{enumerate_sigma(battery[i]), battery[i].horizon()};
      },
      CertKind::EvidenceSigmaStar, CertKind::RefutesSigmaStar);
  cert.m = m;
  return cert;
}

LargenessCert ip_star_evidence(const TuplePredicate& pred, std::span<const FSFamily> battery) {
  if (battery.empty()) raise(ErrorKind::InvalidArgument, "empty FS battery");
  return battery_certificate(
      pred, battery.size(),
      [&](std::size_t i) { return std::pair{enumerate_fs(battery[i]), battery[i].horizon()}; },
      CertKind::EvidenceIPStar, CertKind::RefutesIPStar);
}

bool verify_certificate(const LargenessCert& cert, const TuplePredicate& pred) {
  if (!cert.is_refutation()) {
    if (cert.witnesses.size() != cert.battery_size) return false;
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
      if (cert.witnesses[i].seed_index != i || !pred(cert.witnesses[i].value)) return false;
    }
    return true;
  }
  const std::uint64_t expected = cert.kind == CertKind::RefutesSigmaStar
                                     ? binomial(cert.refuted_horizon, cert.m)
                                     : (std::uint64_t{1} << cert.refuted_horizon) - 1;
  if (cert.refutation.size() != expected) return false;
  std::vector<IndexSet> seen;
  for (const auto& e : cert.refutation) {
    if (pred(e.value)) return false;
    seen.push_back(e.alpha);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// ---------------------------------------------------------------------------

std::string to_string(DensityVerdict v) {
  switch (v) {
    case DensityVerdict::TendsToOne: return "TendsToOne";
    case DensityVerdict::TendsToZero: return "TendsToZero";
    case DensityVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

DensityReport folner_density(const ElementPredicate& pred, const FolnerFamily& fam,
                             std::size_t k_max, const Rational& delta) {
  if (k_max == 0 || k_max > fam.max_index) {
    raise(ErrorKind::OutOfRange, "k_max outside the Folner family range");
  }
  // F_k = {g : escape_norm(g) <= k} for both window kinds, so one pass over
  // F_{k_max} bins every element by the first window that contains it.
  std::vector<BigInt> members(k_max + 1, BigInt(0));
  std::vector<BigInt> sizes(k_max + 1, BigInt(0));
  for (const auto& g : folner_window(fam, k_max)) {
    BigInt norm = escape_norm(fam.ctx, g);
    std::size_t bin = norm <= 1 ? 1 : static_cast<std::size_t>(norm.get_ui());
    sizes[bin] += 1;
    if (pred(g)) members[bin] += 1;
  }
  DensityReport report;
  report.family = fam;
  report.delta = delta;
  BigInt in_e = 0;
  BigInt total = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    in_e += members[k];
    total += sizes[k];
    report.ratios.emplace_back(k, make_rational(in_e, total));
    report.counts.emplace_back(k, in_e);
  }
  if (report.ratios.size() >= 3) {
    auto tail = std::span(report.ratios).last(3);
    const Rational high = 1 - delta;
    if (std::all_of(tail.begin(), tail.end(), [&](const auto& r) { return r.second > high; })) {
      report.verdict = DensityVerdict::TendsToOne;
    } else if (std::all_of(tail.begin(), tail.end(),
                           [&](const auto& r) { return r.second < delta; })) {
      report.verdict = DensityVerdict::TendsToZero;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

AdmissibleReport admissible_check(const GroupCtx& ctx, const std::vector<Tuple>& generators) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "admissible_check needs generators");
  if (ctx.kind == GroupKind::FinSupportIntSeq) {
    raise(ErrorKind::DomainMismatch, "admissible_check works on lattice groups only");
  }
  const std::size_t d = generators[0].size();
  for (const auto& gen : generators) {
    if (gen.size() != d) raise(ErrorKind::DimensionMismatch, "generator tuples differ in length");
    for (const auto& g : gen) {
      if (!belongs_to(ctx, g)) raise(ErrorKind::DimensionMismatch, "generator not in " + describe(ctx));
    }
  }
  AdmissibleReport report;
  auto check = [&](std::size_t j, std::optional<std::size_t> i) {
    FunctionalWitness w{j, i, std::nullopt};
    for (std::size_t n = 0; n < generators.size(); ++n) {
      const auto& gen = generators[n];
      bool nonzero = i ? !(gen[j] == gen[*i]) : !gen[j].is_zero();
      if (nonzero) {
        w.generator = n;
        break;
      }
    }
    if (!w.generator && !report.vanishing) report.vanishing = w;
    report.functionals.push_back(w);
  };
  for (std::size_t j = 0; j < d; ++j) check(j, std::nullopt);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) check(j, i);
  report.admissible = !report.vanishing.has_value();
  return report;
}

SeedMatrix sigma_from_ip(const FSFamily& fam, std::size_t m) {
  if (m == 0 || fam.horizon() < m) {
    raise(ErrorKind::InvalidArgument, "sigma_from_ip needs 1 <= m <= K");
  }
  SeedMatrix seed = SeedMatrix::generate(
      fam.ctx(), m, fam.d(), fam.horizon(),
      [&](std::size_t j, std::size_t, std::size_t k) { return fam.at(j, k); });
  for (const auto& e : enumerate_sigma(seed)) {
    if (e.value != fs_value(fam, e.alpha)) {
      raise(ErrorKind::InvalidArgument, "Sigma_m sum at " + to_string(e.alpha) +
                                            " is not the matching FS value");
    }
  }
  return seed;
}

SumFreeResult sum_free_check(const std::vector<BigInt>& values) {
  if (values.size() > kMaxSumFreeSize) {
    raise(ErrorKind::Guard, "sum_free_check limited to " + std::to_string(kMaxSumFreeSize) +
                                " values");
  }
  std::vector<BigInt> v = values;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) return {};
  // Witnesses with a < b are reported before doubled ones (a = b).
  for (const auto& c : v) {
    std::size_t lo = 0;
    std::size_t hi = v.size() - 1;
    while (lo < hi) {
      BigInt s = v[lo] + v[hi];
      if (s == c) return {false, std::array<BigInt, 3>{v[lo], v[hi], c}};
      if (s < c) {
        ++lo;
      } else {
        --hi;
      }
    }
  }
  for (const auto& a : v) {
    BigInt c = 2 * a;
    if (std::binary_search(v.begin(), v.end(), c)) return {false, std::array<BigInt, 3>{a, a, c}};
  }
  return {};
}

std::vector<std::int64_t> polynomial_values(const std::vector<BigInt>& coeffs,
                                            std::int64_t window) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0) --deg;
  if (deg < 3) {
    raise(ErrorKind::Guard, "polynomial must have degree >= 2");
  }
  --deg;
  if (window < 0 || window > kMaxPolynomialWindow) {
    raise(ErrorKind::Guard, "window must lie in [0, " + std::to_string(kMaxPolynomialWindow) + "]");
  }
  // Past |i| >= max(2*sum_{j<deg}|c_j|, (2N)^{1/deg}) + 1 every |p(i)| > N.
  BigInt lower_sum = 0;
  for (std::size_t j = 0; j < deg; ++j) lower_sum += ::abs(coeffs[j]);
  BigInt root;
  mpz_root(root.get_mpz_t(), BigInt(2 * window).get_mpz_t(), deg);
  BigInt bound = std::max(BigInt(2 * lower_sum), BigInt(root + 1)) + 1;
  if (bound > 10'000'000) raise(ErrorKind::Guard, "polynomial scan range too large");
  const long limit = bound.get_si();
  std::vector<std::int64_t> out;
  for (long i = -limit; i <= limit; ++i) {
    BigInt val = 0;
    for (std::size_t j = deg + 1; j > 0; --j) val = val * i + coeffs[j - 1];
    if (::abs(val) <= window) out.push_back(val.get_si());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<PolynomialSigma2Witness> polynomial_sigma2_search(const std::vector<BigInt>& coeffs,
                                                                std::int64_t window,
                                                                std::size_t repeats) {
  if (repeats == 0) raise(ErrorKind::InvalidArgument, "repeat count must be positive");
  const auto values = polynomial_values(coeffs, window);
  std::unordered_map<std::int64_t, std::size_t> diff_count;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) ++diff_count[values[j] - values[i]];
  std::optional<std::int64_t> best;
  for (const auto& [c, count] : diff_count) {
    if (count >= repeats && (!best || c < *best)) best = c;
  }
  if (!best) return std::nullopt;
  PolynomialSigma2Witness w{BigInt(0), BigInt(*best), {}};
  for (auto v : values) {
    if (std::binary_search(values.begin(), values.end(), v + *best)) {
      w.shifts.emplace_back(v);
      if (w.shifts.size() == repeats) break;
    }
  }
  return w;
}

}  // namespace mixlab
