#include <algorithm>
#include <map>
#include <set>

#include "mixlab/error.hpp"
#include "mixlab/lab.hpp"

namespace mixlab::lab {

namespace {

// ---------------------------------------------------------------------------
// Parameter access on resolved params.

std::size_t get_size(const Json& p, const char* key, std::size_t lo, std::size_t hi) {
  const Json& v = require(p, key);
  if (!v.is_number_integer()) raise(ErrorKind::Schema, std::string("\"") + key + "\" must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < static_cast<std::int64_t>(lo)) {
    raise(ErrorKind::Schema, std::string("\"") + key + "\" must be at least " + std::to_string(lo));
  }
  if (x > static_cast<std::int64_t>(hi)) {
    raise(ErrorKind::Guard, std::string("guard ") + key + " <= " + std::to_string(hi) +
                                " exceeded (" + std::to_string(x) + ")");
  }
  return static_cast<std::size_t>(x);
}

Rational get_epsilon(const Json& p, const char* key = "epsilon") {
  Rational eps = rational_from_json(require(p, key));
  if (eps <= 0) raise(ErrorKind::Schema, std::string("\"") + key + "\" must be positive");
  return eps;
}

std::vector<BigInt> get_int_list(const Json& p, const char* key, std::size_t lo, std::size_t hi) {
  const Json& v = require(p, key);
  if (!v.is_array()) raise(ErrorKind::Schema, std::string("\"") + key + "\" must be an array");
  if (v.size() < lo || v.size() > hi) {
    raise(ErrorKind::Schema, std::string("\"") + key + "\" must hold " + std::to_string(lo) +
                                 ".." + std::to_string(hi) + " entries");
  }
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(bigint_from_json(x));
  return out;
}

// ---------------------------------------------------------------------------
// Formatting helpers.

std::string str(const Rational& q) { return to_string(q); }
std::string str(const BigInt& z) { return z.get_str(); }
std::string str(std::size_t n) { return std::to_string(n); }
std::string str(const GroupElement& g) { return to_string(g); }
std::string str(const IndexSet& a) { return to_string(a); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

GroupElement integer(const BigInt& n) { return GroupElement(std::vector<BigInt>{n}); }
GroupElement point(const BigInt& a, const BigInt& b) { return GroupElement(std::vector<BigInt>{a, b}); }

Rational product_measure(const SystemHandle& sys, const std::vector<CylinderPattern>& pats) {
  Rational p = 1;
  for (const auto& a : pats) p *= cylinder_measure(sys, a);
  return p;
}

std::vector<CorrelationTerm> terms(const std::vector<GroupElement>& shifts,
                                   const std::vector<CylinderPattern>& pats) {
  std::vector<CorrelationTerm> out;
  for (std::size_t i = 0; i < shifts.size(); ++i) out.push_back({shifts[i], pats[i]});
  return out;
}

// ---------------------------------------------------------------------------
// Certificate entries.

Json coloring_json(const Coloring& col) {
  Json j;
  j["m"] = col.m;
  j["N"] = col.n;
  j["colors"] = col.colors;
  j["color"] = col.color;
  return j;
}

Json homogeneous_entry(const std::string& label, const Coloring& col, const HomogeneousCert& cert) {
  Json j;
  j["type"] = "homogeneous";
  j["label"] = label;
  j["coloring"] = coloring_json(col);
  j["certificate"] = to_json(cert);
  return j;
}

Json rlimit_entry(const std::string& label, const SimplexArray& arr, const RLimitEstimate& est) {
  Json j;
  j["type"] = "rlimit";
  j["label"] = label;
  j["array"] = to_json(arr);
  j["estimate"] = to_json(est);
  return j;
}

using GapFn = std::function<Rational(const Tuple&)>;

Json largeness_entry(const std::string& label, const GroupCtx& ctx, const Rational& eps,
                     std::span<const SeedMatrix> battery, const LargenessCert& cert,
                     const GapFn& gap) {
  Json j;
  j["type"] = "largeness";
  j["label"] = label;
  j["group"] = to_json(ctx);
  j["epsilon"] = to_json(eps);
  Json seeds = Json::array();
  for (const auto& s : battery) seeds.push_back(to_json(s));
  j["battery"] = std::move(seeds);
  j["certificate"] = to_json(cert);
  Json gaps = Json::array();
  if (cert.is_refutation()) {
    for (const auto& e : cert.refutation) gaps.push_back(to_json(gap(e.value)));
  } else {
    for (const auto& w : cert.witnesses) gaps.push_back(to_json(gap(w.value)));
  }
  j["gaps"] = std::move(gaps);
  return j;
}

Json sum_free_entry(const std::string& label, const std::vector<BigInt>& values,
                    const SumFreeResult& r) {
  Json j;
  j["type"] = "sum_free";
  j["label"] = label;
  Json vs = Json::array();
  for (const auto& v : values) vs.push_back(to_json(v));
  j["values"] = std::move(vs);
  j["sum_free"] = r.sum_free;
  if (r.witness) {
    j["witness"] = Json::array({to_json((*r.witness)[0]), to_json((*r.witness)[1]),
                                to_json((*r.witness)[2])});
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json polynomial_entry(const std::vector<BigInt>& coeffs, std::int64_t window, std::size_t repeats,
                      const std::optional<PolynomialSigma2Witness>& w) {
  Json j;
  j["type"] = "polynomial";
  j["label"] = "difference search";
  Json cs = Json::array();
  for (const auto& c : coeffs) cs.push_back(to_json(c));
  j["coefficients"] = std::move(cs);
  j["window"] = window;
  j["repeats"] = repeats;
  if (w) {
    Json shifts = Json::array();
    for (const auto& n : w->shifts) shifts.push_back(to_json(n));
    j["witness"] = {{"a", to_json(w->a)}, {"b", to_json(w->b)}, {"shifts", std::move(shifts)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Report make_report(std::vector<Table> tables, Json certs, bool pass, std::string line) {
  Report rep;
  rep.tables = std::move(tables);
  rep.certificates = std::move(certs);
  rep.verdict = {pass, std::move(line)};
  return rep;
}

// ---------------------------------------------------------------------------
// Ledrappier.

CylinderPattern ledrappier_zero() {
  return CylinderPattern::from_constraints(GroupCtx::lattice(2), {{point(0, 0), 0}});
}

Report run_ledrappier_counterexample(const ScenarioContext& ctx) {
  const std::size_t n_max = get_size(ctx.params, "n_max", 1, 60);
  const std::size_t w = get_size(ctx.params, "window", 1, 16);
  const auto sys = SystemHandle::ledrappier();
  const auto a = ledrappier_zero();
  const Rational mu = cylinder_measure(sys, a);

  Table triple{"triple", {"n", "correlation", "gap"}, {}};
  bool triple_ok = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const BigInt big = pow(BigInt(2), n);
    auto t = terms({point(0, 0), point(big, 0), point(0, big)}, {a, a, a});
    Rational corr = correlate(sys, t);
    Rational gap = mixing_gap(sys, t);
    triple_ok = triple_ok && corr == make_rational(1, 4) && gap == make_rational(1, 8);
    triple.rows.push_back({str(n), str(corr), str(gap)});
  }

  Table pairs{"pairs", {"g", "correlation", "gap"}, {}};
  bool pairs_ok = true;
  const long wl = static_cast<long>(w);
  for (long x = -wl; x <= wl; ++x) {
    for (long y = -wl; y <= wl; ++y) {
      if (x == 0 && y == 0) continue;
      auto t = terms({point(0, 0), point(x, y)}, {a, a});
      Rational corr = correlate(sys, t);
      Rational gap = abs(Rational(corr - mu * mu));
      pairs_ok = pairs_ok && gap == 0;
      pairs.rows.push_back({str(point(x, y)), str(corr), str(gap)});
    }
  }

  std::string line;
  if (pairs_ok && triple_ok) {
    line = "2-mixing pair gaps all 0; triple gap persistent";
  } else {
    line = std::string("claim not reproduced:") + (pairs_ok ? "" : " nonzero pair gap") +
           (triple_ok ? "" : " triple values differ from 1/4, 1/8");
  }
  return make_report({std::move(triple), std::move(pairs)}, Json::array(), pairs_ok && triple_ok,
                     std::move(line));
}

std::vector<SeedMatrix> default_ledrappier_battery(std::size_t horizon) {
  const GroupCtx z2 = GroupCtx::lattice(2);
  auto axis_family = [&](unsigned long base) {
    return FSFamily::generate(z2, 2, horizon, [&](std::size_t j, std::size_t k) {
      const BigInt v = pow(BigInt(base), k);
      return j == 0 ? point(v, 0) : point(0, v);
    });
  };
  std::vector<SeedMatrix> out;
  out.push_back(sigma_from_ip(axis_family(2), 2));
  out.push_back(sigma_from_ip(axis_family(3), 2));
  out.push_back(SeedMatrix::generate(z2, 2, 2, horizon, [](std::size_t j, std::size_t t, std::size_t k) {
    const BigInt v = BigInt(static_cast<unsigned long>(t + 1)) * pow(BigInt(2), k);
    return j == 0 ? point(v, 0) : point(0, v);
  }));
  out.push_back(SeedMatrix::generate(z2, 2, 2, horizon, [](std::size_t j, std::size_t, std::size_t k) {
    const BigInt v = pow(BigInt(2), k);
    return j == 0 ? point(v, v) : point(0, v);
  }));
  return out;
}

Report run_ledrappier_sigma2_evidence(const ScenarioContext& ctx) {
  const std::size_t horizon = get_size(ctx.params, "K", 2, 16);
  const Rational eps = get_epsilon(ctx.params);
  const auto sys = SystemHandle::ledrappier();
  const auto a = ledrappier_zero();
  const GroupCtx z2 = GroupCtx::lattice(2);

  std::vector<SeedMatrix> battery;
  const Json& given = require(ctx.params, "battery");
  if (given.is_null()) {
    battery = default_ledrappier_battery(horizon);
  } else if (given.is_array() && !given.empty()) {
    for (const auto& s : given) {
      battery.push_back(seed_from_json(s));
      if (!(battery.back().ctx() == z2) || battery.back().d() != 2) {
        raise(ErrorKind::Schema, "Ledrappier battery seeds must live in IntVec(2) with d = 2");
      }
    }
  } else {
    raise(ErrorKind::Schema, "\"battery\" must be null or a nonempty array of seeds");
  }

  auto correlation = [&](const Tuple& g) {
    return correlate(sys, terms({point(0, 0), g[0], g[1]}, {a, a, a}));
  };
  const Rational mu3 = make_rational(1, 8);
  auto gap = [&](const Tuple& g) { return abs(Rational(correlation(g) - mu3)); };
  auto pred = [&](std::span<const GroupElement> g) { return gap(Tuple(g.begin(), g.end())) < eps; };

  const SeedMatrix m1 = SeedMatrix::generate(z2, 1, 2, horizon, [](std::size_t j, std::size_t, std::size_t k) {
    const BigInt v = pow(BigInt(2), k);
    return j == 0 ? point(v, 0) : point(0, v);
  });
  const auto refutation = sigma_star_evidence(pred, std::span(&m1, 1));
  const auto evidence = sigma_star_evidence(pred, battery);

  Table ref_table{"refutation", {"k", "g1", "g2", "correlation", "gap"}, {}};
  for (const auto& e : enumerate_sigma(m1)) {
    ref_table.rows.push_back({str(e.alpha[0]), str(e.value[0]), str(e.value[1]),
                              str(correlation(e.value)), str(gap(e.value))});
  }

  Table bat_table{"battery", {"seed", "alpha", "g1", "g2", "correlation", "gap"}, {}};
  std::size_t total = 0;
  std::size_t inside = 0;
  bool spot_ok = true;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    for (const auto& e : enumerate_sigma(battery[i])) {
      Rational corr = correlation(e.value);
      Rational g = abs(Rational(corr - mu3));
      ++total;
      if (g < eps) ++inside;
      if (given.is_null() && i == 0 && corr != mu3) spot_ok = false;
      bat_table.rows.push_back(
          {str(i), str(e.alpha), str(e.value[0]), str(e.value[1]), str(corr), str(g)});
    }
  }

  Json certs = Json::array();
  certs.push_back(largeness_entry("m=1 seed", z2, eps, std::span(&m1, 1), refutation, gap));
  certs.push_back(largeness_entry("tilde-Sigma_2 battery", z2, eps, battery, evidence, gap));

  const bool pass = refutation.is_refutation() && !evidence.is_refutation() && inside == total &&
                    spot_ok;
  std::string line = "m=1 seed " + std::string(refutation.is_refutation() ? "refuted" : "NOT refuted") +
                     "; tilde-Sigma_2 battery: " + str(inside) + "/" + str(total) +
                     " sums inside R_" + str(eps);
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(ref_table), std::move(bat_table)}, std::move(certs), pass,
                     std::move(line));
}

// ---------------------------------------------------------------------------
// Bernoulli on Z.

CylinderPattern coin_one(const GroupCtx& ctx) {
  return CylinderPattern::from_constraints(ctx, {{zero(ctx), 1}});
}

Report run_bernoulli_rlimit(const ScenarioContext& ctx) {
  const std::size_t l = get_size(ctx.params, "l", 1, 4);
  const std::size_t m = get_size(ctx.params, "m", 1, 3);
  const std::size_t n = get_size(ctx.params, "N", std::max<std::size_t>(m, 1), 40);
  const Rational eps = get_epsilon(ctx.params);
  const GroupCtx z = GroupCtx::integers();
  const auto sys = SystemHandle::fair_coin(z);
  const auto a = coin_one(z);
  const std::vector<CylinderPattern> pats(l + 1, a);

  const SeedMatrix seed = SeedMatrix::generate(z, m, l, n, [](std::size_t j, std::size_t, std::size_t k) {
    return integer(BigInt(static_cast<unsigned long>(2 * j + 1)) * pow(BigInt(2), k));
  });
  if (auto v = validate_seed(seed); !v.ok) raise(ErrorKind::InvalidArgument, v.first_violation->message);

  const SimplexArray arr = SimplexArray::generate(m, n, [&](const IndexSet& alpha) {
    std::vector<GroupElement> shifts{zero(z)};
    for (auto& g : seed_tuple(seed, alpha)) shifts.push_back(g);
    return correlate(sys, terms(shifts, pats));
  });
  const auto est = rlimit_estimate(arr, eps, {ctx.budget});
  const Rational expected = product_measure(sys, pats);

  Table estimate{"estimate", {"value", "expected", "S_size", "min_index", "max_deviation", "exhaustive"}, {}};
  estimate.rows.push_back({str(est.value), str(expected), str(est.subset.size()), str(est.min_index()),
                           str(est.max_deviation), str(est.exhaustive)});
  Table values{"array", {"alpha", "x"}, {}};
  IndexSet alpha = first_subset(m);
  std::size_t i = 0;
  do {
    values.rows.push_back({str(alpha), str(arr.values()[i++])});
  } while (next_colex(alpha, n));

  Json certs = Json::array();
  certs.push_back(rlimit_entry("triple correlation array", arr, est));
  const bool pass = est.value == expected && est.subset.size() == n;
  std::string line = "R-limit v = " + str(est.value) + (pass ? " = " : " vs ") + "product " +
                     str(expected) + " over |S| = " + str(est.subset.size()) + " of N = " + str(n);
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(estimate), std::move(values)}, std::move(certs), pass, std::move(line));
}

std::vector<BigInt> coefficient_list(const Json& p) {
  auto coeffs = get_int_list(p, "a", 1, 4);
  std::set<BigInt> seen;
  for (const auto& c : coeffs) {
    if (c == 0 || !seen.insert(c).second) {
      raise(ErrorKind::Schema, "\"a\" must hold distinct nonzero integers");
    }
  }
  return coeffs;
}

std::vector<SeedMatrix> integer_battery(std::size_t m, std::size_t horizon) {
  const GroupCtx z = GroupCtx::integers();
  std::vector<SeedMatrix> out;
  for (unsigned long base : {2UL, 3UL}) {
    out.push_back(SeedMatrix::generate(z, m, 1, horizon, [base](std::size_t, std::size_t, std::size_t k) {
      return integer(pow(BigInt(base), k));
    }));
  }
  out.push_back(SeedMatrix::generate(z, m, 1, horizon, [](std::size_t, std::size_t t, std::size_t k) {
    return integer(BigInt(static_cast<unsigned long>(k * (t + 1))));
  }));
  return out;
}

Report run_diagonal_z(const ScenarioContext& ctx) {
  const auto coeffs = coefficient_list(ctx.params);
  const Rational eps = get_epsilon(ctx.params);
  const std::size_t m = get_size(ctx.params, "m", 1, 3);
  const std::size_t horizon = get_size(ctx.params, "K", m, 16);
  const std::size_t k_max = get_size(ctx.params, "k_max", 3, 2000);
  const GroupCtx z = GroupCtx::integers();
  const auto sys = SystemHandle::fair_coin(z);
  const auto a = coin_one(z);
  const std::vector<CylinderPattern> pats(coeffs.size() + 1, a);
  const Rational expected = product_measure(sys, pats);

  auto gap_at = [&](const BigInt& n) {
    std::vector<GroupElement> shifts{zero(z)};
    for (const auto& c : coeffs) shifts.push_back(integer(c * n));
    return mixing_gap(sys, terms(shifts, pats));
  };
  auto gap = [&](const Tuple& g) { return gap_at(g[0][0]); };
  auto pred = [&](std::span<const GroupElement> g) { return gap_at(g[0][0]) < eps; };

  const auto battery = integer_battery(m, horizon);
  const auto cert = sigma_star_evidence(pred, battery);
  Table bat{"battery", {"seed", "alpha", "n", "gap"}, {}};
  for (std::size_t i = 0; i < battery.size(); ++i) {
    for (const auto& e : enumerate_sigma(battery[i])) {
      bat.rows.push_back({str(i), str(e.alpha), str(e.value[0][0]), str(gap(e.value))});
    }
  }

  const auto density = folner_density([&](const GroupElement& g) { return gap_at(g[0]) < eps; },
                                      FolnerFamily::canonical(z, k_max), k_max);
  Table dens{"density", {"k", "count", "ratio"}, {}};
  for (std::size_t i = 0; i < density.ratios.size(); ++i) {
    dens.rows.push_back({str(density.ratios[i].first), str(density.counts[i].second),
                         str(density.ratios[i].second)});
  }

  std::vector<Table> tables{std::move(bat), std::move(dens)};
  bool reduction_ok = true;
  if (coeffs.size() == 1) {
    std::vector<GroupElement> gs;
    const long km = static_cast<long>(k_max);
    for (long n = -km; n <= km; ++n) gs.push_back(integer(coeffs[0] * n));
    const auto ev = mixing_evidence(sys, a, a, gs, eps);
    Table red{"reduction", {"n", "r_gap", "pair_gap", "agree"}, {}};
    for (long n = -km; n <= km; ++n) {
      const auto& row = ev.rows[static_cast<std::size_t>(n + km)];
      Rational r = gap_at(BigInt(n));
      bool agree = r == row.gap && ((r < eps) == (row.gap < eps));
      reduction_ok = reduction_ok && agree;
      red.rows.push_back({std::to_string(n), str(r), str(row.gap), str(agree)});
    }
    tables.push_back(std::move(red));
  }

  Json certs = Json::array();
  certs.push_back(largeness_entry("Sigma_m battery", z, eps, battery, cert, gap));
  const bool pass = !cert.is_refutation() && density.verdict == DensityVerdict::TendsToOne && reduction_ok;
  std::string line = "Sigma_" + str(m) + " battery " + (cert.is_refutation() ? "refutes" : "supports") +
                     " R_" + str(eps) + " (product " + str(expected) + "); density " +
                     to_string(density.verdict) + " (" + str(density.ratios.back().second) + " at k=" +
                     str(k_max) + ")";
  if (coeffs.size() == 1) line += reduction_ok ? "; l=1 reduces to pair mixing" : "; l=1 reduction FAILED";
  if (!pass) line = "claim not reproduced: " + line;
  return make_report(std::move(tables), std::move(certs), pass, std::move(line));
}

// ---------------------------------------------------------------------------
// Direct sum of copies of Z.

GroupElement unit(std::size_t pos, const BigInt& value) {
  std::vector<BigInt> coords(pos + 1, BigInt(0));
  coords[pos] = value;
  return make_element(GroupCtx::finite_support(), std::move(coords));
}

Report run_pullback_nonmixing(const ScenarioContext& ctx) {
  const std::size_t horizon = get_size(ctx.params, "K", 2, 16);
  const std::size_t k_max = get_size(ctx.params, "k_max", 1, 1000);
  const Rational eps = get_epsilon(ctx.params);
  const GroupCtx fs = GroupCtx::finite_support();
  const auto base = SystemHandle::fair_coin(fs);
  const auto sys = SystemHandle::pulled_back(base, Homomorphism::even_select());
  const auto a = coin_one(fs);
  const Rational mu = cylinder_measure(sys, a);

  Table pair{"pairs", {"g", "correlation", "gap"}, {}};
  bool pairs_ok = true;
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto t = terms({zero(fs), unit(0, BigInt(static_cast<unsigned long>(k)))}, {a, a});
    Rational corr = correlate(sys, t);
    Rational gap = mixing_gap(sys, t);
    pairs_ok = pairs_ok && gap == mu - mu * mu;
    pair.rows.push_back({str(unit(0, BigInt(static_cast<unsigned long>(k)))), str(corr), str(gap)});
  }

  const auto phi1 = Homomorphism::interleave();
  const auto phi2 = Homomorphism::compose(Homomorphism::scale(fs, 2), phi1);
  Table homs{"homomorphisms", {"name", "kernel_finite", "reason"}, {}};
  for (const auto* phi : {&phi1, &phi2}) {
    auto rep = hom_kernel_finite(*phi);
    homs.rows.push_back({phi->describe(), str(rep.finite), rep.reason});
  }
  {
    auto rep = hom_kernel_finite(Homomorphism::even_select());
    homs.rows.push_back({"action " + Homomorphism::even_select().describe(), str(rep.finite), rep.reason});
  }

  const Rational mu3 = mu * mu * mu;
  auto gap_at = [&](const GroupElement& g) {
    return mixing_gap(sys, terms({zero(fs), hom_apply(phi1, g), hom_apply(phi2, g)}, {a, a, a}));
  };
  auto gap = [&](const Tuple& g) { return gap_at(g[0]); };
  auto pred = [&](std::span<const GroupElement> g) { return gap_at(g[0]) < eps; };
  const SeedMatrix seed = SeedMatrix::generate(fs, 2, 1, horizon, [](std::size_t, std::size_t t, std::size_t k) {
    return unit(t, BigInt(static_cast<unsigned long>(k + t)));
  });
  const auto cert = sigma_star_evidence(pred, std::span(&seed, 1));
  Table triple{"triple", {"alpha", "g", "gap"}, {}};
  bool triple_ok = true;
  for (const auto& e : enumerate_sigma(seed)) {
    Rational g = gap(e.value);
    triple_ok = triple_ok && g == 0;
    triple.rows.push_back({str(e.alpha), str(e.value[0]), str(g)});
  }

  Json certs = Json::array();
  certs.push_back(largeness_entry("phi-diagonal Sigma_2 seed", fs, eps, std::span(&seed, 1), cert, gap));
  const bool pass = pairs_ok && triple_ok && !cert.is_refutation();
  std::string line = "pair gap " + str(mu - mu * mu) + " along (k,0,0,...) for k=1.." + str(k_max) +
                     (pairs_ok ? "" : " (NOT constant)") + "; phi-diagonal triple gaps " +
                     (triple_ok ? "0" : "nonzero") + " on all " + str(triple.rows.size()) +
                     " Sigma_2 sums (mu^3 = " + str(mu3) + ")";
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(pair), std::move(triple), std::move(homs)}, std::move(certs), pass,
                     std::move(line));
}

Report run_prime_select_nonsigma(const ScenarioContext& ctx) {
  const std::size_t horizon = get_size(ctx.params, "K", 2, 16);
  const Rational eps = get_epsilon(ctx.params);
  const auto primes = get_int_list(ctx.params, "primes", 1, 4);
  const GroupCtx fs = GroupCtx::finite_support();
  const auto sys = SystemHandle::fair_coin(fs);
  const auto a = coin_one(fs);
  const Rational mu = cylinder_measure(sys, a);
  const std::size_t l = primes.size();
  if (horizon < l) raise(ErrorKind::Schema, "\"K\" must be at least the number of primes");

  std::vector<Homomorphism> phis;
  std::set<BigInt> seen;
  for (const auto& p : primes) {
    if (p < 2 || !p.fits_ulong_p() || !seen.insert(p).second) {
      raise(ErrorKind::Schema, "\"primes\" must hold distinct primes");
    }
    try {
      phis.push_back(Homomorphism::prime_select(p.get_ui()));
    } catch (const Error& e) {
      raise(ErrorKind::Schema, e.what());
    }
  }
  const std::vector<CylinderPattern> pats(l + 1, a);
  const Rational product = product_measure(sys, pats);
  auto correlation = [&](const GroupElement& g) {
    std::vector<GroupElement> shifts{zero(fs)};
    for (const auto& phi : phis) shifts.push_back(hom_apply(phi, g));
    return correlate(sys, terms(shifts, pats));
  };
  auto gap = [&](const Tuple& g) { return abs(Rational(correlation(g[0]) - product)); };
  auto pred = [&](std::span<const GroupElement> g) { return gap(Tuple(g.begin(), g.end())) < eps; };

  const SeedMatrix seed = SeedMatrix::generate(fs, l, 1, horizon, [](std::size_t, std::size_t, std::size_t k) {
    return unit(0, BigInt(static_cast<unsigned long>(k)));
  });
  const auto cert = sigma_star_evidence(pred, std::span(&seed, 1));

  Table sums{"sums", {"alpha", "g", "correlation", "gap"}, {}};
  bool all_mu = true;
  for (const auto& e : enumerate_sigma(seed)) {
    Rational corr = correlation(e.value[0]);
    all_mu = all_mu && corr == mu;
    sums.rows.push_back({str(e.alpha), str(e.value[0]), str(corr), str(gap(e.value))});
  }
  Table homs{"homomorphisms", {"name", "kernel_finite", "reason"}, {}};
  for (const auto& phi : phis) {
    auto rep = hom_kernel_finite(phi);
    homs.rows.push_back({phi.describe(), str(rep.finite), rep.reason});
  }

  Json certs = Json::array();
  certs.push_back(largeness_entry("kernel sums", fs, eps, std::span(&seed, 1), cert, gap));
  const bool pass = cert.is_refutation() && all_mu;
  std::string line = "Sigma_" + str(l) + " set of kernel sums: correlation " +
                     (all_mu ? str(mu) : std::string("varies")) + " != " + str(product) + "; R_" +
                     str(eps) + (cert.is_refutation() ? " refuted" : " NOT refuted");
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(sums), std::move(homs)}, std::move(certs), pass, std::move(line));
}

// ---------------------------------------------------------------------------
// Density and averages on Z.

Report run_density_one(const ScenarioContext& ctx) {
  const std::size_t k_max = get_size(ctx.params, "k_max", 3, 2000);
  const Rational eps = get_epsilon(ctx.params);
  const GroupCtx z = GroupCtx::integers();
  const auto sys = SystemHandle::fair_coin(z);
  const auto a = coin_one(z);
  auto in_r = [&](const GroupElement& g) { return mixing_gap(sys, terms({zero(z), g}, {a, a})) < eps; };
  const auto fam = FolnerFamily::canonical(z, k_max);
  const auto r = folner_density(in_r, fam, k_max);
  const auto c = folner_density([&](const GroupElement& g) { return !in_r(g); }, fam, k_max);

  Table dens{"density", {"k", "complement_count", "complement_ratio", "r_ratio"}, {}};
  bool counts_ok = true;
  for (std::size_t i = 0; i < r.ratios.size(); ++i) {
    counts_ok = counts_ok && c.counts[i].second <= 1;
    dens.rows.push_back({str(r.ratios[i].first), str(c.counts[i].second), str(c.ratios[i].second),
                         str(r.ratios[i].second)});
  }
  const Rational bound = make_rational(1, static_cast<long>(2 * k_max + 1));
  const Rational last = c.ratios.back().second;
  const bool pass = counts_ok && last <= bound && r.verdict == DensityVerdict::TendsToOne;
  std::string line = "complement of R_" + str(eps) + " has " + (counts_ok ? "at most 1" : "more than 1") +
                     " element in every F_k; density " + str(last) + " at k=" + str(k_max) +
                     "; R density " + to_string(r.verdict);
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(dens)}, Json::array(), pass, std::move(line));
}

Report run_cesaro_weakmixing(const ScenarioContext& ctx) {
  const std::size_t k_max = get_size(ctx.params, "k_max", 1, 2000);
  const Rational eps = get_epsilon(ctx.params);
  const auto coeffs = coefficient_list(ctx.params);
  const GroupCtx z = GroupCtx::integers();
  const auto sys = SystemHandle::fair_coin(z);
  const auto a = coin_one(z);
  const std::vector<CylinderPattern> pats(coeffs.size() + 1, a);

  auto gap_at = [&](long n) {
    std::vector<GroupElement> shifts{zero(z)};
    for (const auto& c : coeffs) shifts.push_back(integer(c * n));
    return mixing_gap(sys, terms(shifts, pats));
  };
  Table ces{"cesaro", {"k", "average_gap", "violators", "violator_ratio"}, {}};
  Rational sum = gap_at(0);
  std::size_t violators = sum >= eps ? 1 : 0;
  Rational average;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (long n : {static_cast<long>(k), -static_cast<long>(k)}) {
      Rational g = gap_at(n);
      sum += g;
      if (g >= eps) ++violators;
    }
    const long size = static_cast<long>(2 * k + 1);
    average = sum / size;
    ces.rows.push_back({str(k), str(average), str(violators),
                        str(make_rational(static_cast<long>(violators), size))});
  }
  const bool pass = average <= eps;
  std::string line = "Cesaro average of gaps over F_" + str(k_max) + " is " + str(average) +
                     (pass ? " <= " : " > ") + str(eps);
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(ces)}, Json::array(), pass, std::move(line));
}

// ---------------------------------------------------------------------------
// Finite sums and combinatorial fixtures.

std::vector<BigInt> two_power_sums(const BigInt& base, std::size_t k_max) {
  std::vector<BigInt> out;
  for (std::size_t k2 = 2; k2 <= k_max; ++k2)
    for (std::size_t k1 = 1; k1 < k2; ++k1) out.push_back(pow(base, k1) + pow(base, k2));
  std::sort(out.begin(), out.end());
  return out;
}

Report run_ip_truncated(const ScenarioContext& ctx) {
  const std::size_t horizon = get_size(ctx.params, "K", 2, kMaxFsHorizon);
  const std::size_t threshold = get_size(ctx.params, "threshold", 0, horizon - 1);
  const BigInt base = bigint_from_json(require(ctx.params, "base"));
  if (base < 2) raise(ErrorKind::Schema, "\"base\" must be at least 2");
  const GroupCtx z = GroupCtx::integers();
  const auto fam = FSFamily::generate(z, 1, horizon, [&](std::size_t, std::size_t k) {
    return integer(pow(base, k));
  });
  const auto e_values = two_power_sums(base, horizon);
  auto in_e = [&](const BigInt& x) { return std::binary_search(e_values.begin(), e_values.end(), x); };

  Table spread{"fs_spread", {"threshold", "count", "min", "max", "spread"}, {}};
  const auto fs = enumerate_fs(fam);
  Rational headline;
  for (std::size_t t = 0; t < horizon; ++t) {
    std::size_t count = 0;
    Rational lo = 1;
    Rational hi = 0;
    for (const auto& e : fs) {
      if (e.alpha.front() <= t) continue;
      Rational x = in_e(e.value[0][0]) ? 1 : 0;
      ++count;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (t == threshold) headline = hi - lo;
    spread.rows.push_back({str(t), str(count), str(lo), str(hi), str(Rational(hi - lo))});
  }

  const SimplexArray arr = SimplexArray::generate(2, horizon, [&](const IndexSet& alpha) {
    return Rational(in_e(fs_value(fam, alpha)[0][0]) ? 1 : 0);
  });
  const auto est = rlimit_estimate(arr, make_rational(1, 100), {ctx.budget});
  Table rl{"rlimit", {"value", "S_size", "min_index", "max_deviation"}, {}};
  rl.rows.push_back({str(est.value), str(est.subset.size()), str(est.min_index()), str(est.max_deviation)});
  const auto sf = sum_free_check(e_values);

  Json certs = Json::array();
  certs.push_back(rlimit_entry("indicator over S^(2)", arr, est));
  certs.push_back(sum_free_entry("E", e_values, sf));
  const bool pass = headline > 0 && est.value == 1 && est.subset.size() == horizon && sf.sum_free;
  std::string line = "1_E along FS(" + str(base) + "^k): spread " + str(headline) +
                     " for min alpha > " + str(threshold) + "; R-limit over S^(2) = " + str(est.value) +
                     "; E " + (sf.sum_free ? "sum-free" : "NOT sum-free");
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(spread), std::move(rl)}, std::move(certs), pass, std::move(line));
}

Report run_polynomial_paths(const ScenarioContext& ctx) {
  const auto coeffs = get_int_list(ctx.params, "coefficients", 1, 8);
  const std::size_t window = get_size(ctx.params, "window", 1, kMaxPolynomialWindow);
  const std::size_t repeats = get_size(ctx.params, "repeats", 1, 64);
  std::set<std::size_t> levels{2, 3, 4, repeats};
  Table search{"search", {"repeats", "found", "a", "b", "shifts"}, {}};
  std::optional<PolynomialSigma2Witness> headline;
  for (auto r : levels) {
    auto w = polynomial_sigma2_search(coeffs, static_cast<std::int64_t>(window), r);
    std::vector<std::string> shifts;
    if (w) {
      for (const auto& n : w->shifts) shifts.push_back(str(n));
    }
    search.rows.push_back({str(r), str(w.has_value()), w ? str(w->a) : "", w ? str(w->b) : "",
                           join(shifts, " ")});
    if (r == repeats) headline = std::move(w);
  }
  Json certs = Json::array();
  certs.push_back(polynomial_entry(coeffs, static_cast<std::int64_t>(window), repeats, headline));
  const bool pass = !headline.has_value();
  std::string line;
  if (pass) {
    line = "no a < b with " + str(repeats) + " shared shifts inside the window";
  } else {
    std::vector<std::string> shifts;
    for (const auto& n : headline->shifts) shifts.push_back(str(n));
    line = "claim not reproduced: a=" + str(headline->a) + ", b=" + str(headline->b) +
           " share shifts " + join(shifts, ",") + " (R=" + str(repeats) + ")";
  }
  return make_report({std::move(search)}, std::move(certs), pass, std::move(line));
}

Coloring pentagon_coloring() {
  Coloring col;
  col.m = 2;
  col.n = 5;
  col.colors = 2;
  for (const auto& alpha : all_subsets(5, 2)) {
    const std::size_t diff = alpha[1] - alpha[0];
    col.color.push_back(diff == 1 || diff == 4 ? 0 : 1);
  }
  return col;
}

Report run_ramsey_selftest(const ScenarioContext& ctx) {
  const std::size_t n = get_size(ctx.params, "N", 3, 6);
  const std::size_t edges = binomial(n, 2);
  const std::uint64_t colorings = std::uint64_t{1} << edges;
  const SearchOptions opts{ctx.budget};

  std::uint64_t admitted = 0;
  std::uint64_t verified = 0;
  Coloring col{2, n, 2, std::vector<std::uint32_t>(edges), {}};
  for (std::uint64_t mask = 0; mask < colorings; ++mask) {
    for (std::size_t e = 0; e < edges; ++e) col.color[e] = (mask >> e) & 1U;
    auto res = find_homogeneous(col, 3, opts);
    if (res.reached_target) ++admitted;
    if (verify_homogeneous(col, res.best)) ++verified;
  }
  const Coloring c5 = pentagon_coloring();
  const auto pent = find_homogeneous(c5, 3, opts);

  const bool all_ok = admitted == colorings && verified == colorings;
  const bool pent_ok = pent.best.size() == 2 && !pent.reached_target && pent.exhaustive &&
                       verify_homogeneous(c5, pent.best);
  Table checks{"selftest", {"check", "count", "result"}, {}};
  checks.rows.push_back({"colorings of [" + str(n) + "]^(2) with a size-3 homogeneous set",
                         std::to_string(admitted) + "/" + std::to_string(colorings), all_ok ? "pass" : "fail"});
  checks.rows.push_back({"certificates re-verified", std::to_string(verified) + "/" + std::to_string(colorings),
                         verified == colorings ? "pass" : "fail"});
  checks.rows.push_back({"pentagon coloring of [5]^(2): maximum homogeneous size", str(pent.best.size()),
                         pent_ok ? "pass" : "fail"});

  Json certs = Json::array();
  certs.push_back(homogeneous_entry("pentagon", c5, pent.best));
  const bool expect_all = n >= 6;
  const bool pass = (expect_all ? all_ok : true) && pent_ok;
  std::string line = "all " + std::to_string(colorings) + " colorings of [" + str(n) +
                     "]^(2) admit size-3 homogeneous set: " + (all_ok ? "pass" : "fail");
  if (!pent_ok) line += "; pentagon check failed";
  return make_report({std::move(checks)}, std::move(certs), pass, std::move(line));
}

Report run_sumfree_selftest(const ScenarioContext& ctx) {
  const BigInt base = bigint_from_json(require(ctx.params, "base"));
  if (base < 2) raise(ErrorKind::Schema, "\"base\" must be at least 2");
  const std::size_t k_max = get_size(ctx.params, "k_max", 2, 400);
  const auto e_values = two_power_sums(base, k_max);
  const std::vector<BigInt> small{1, 2, 3};

  const auto e_res = sum_free_check(e_values);
  const auto small_res = sum_free_check(small);
  const auto empty_res = sum_free_check({});
  auto witness = [](const SumFreeResult& r) {
    if (!r.witness) return std::string();
    return "(" + str((*r.witness)[0]) + "," + str((*r.witness)[1]) + "," + str((*r.witness)[2]) + ")";
  };
  Table checks{"checks", {"set", "size", "sum_free", "witness"}, {}};
  checks.rows.push_back({"{" + str(base) + "^k1+" + str(base) + "^k2 : 1<=k1<k2<=" + str(k_max) + "}",
                         str(e_values.size()), str(e_res.sum_free), witness(e_res)});
  checks.rows.push_back({"{1,2,3}", "3", str(small_res.sum_free), witness(small_res)});
  checks.rows.push_back({"{}", "0", str(empty_res.sum_free), witness(empty_res)});

  Json certs = Json::array();
  certs.push_back(sum_free_entry("E", e_values, e_res));
  certs.push_back(sum_free_entry("{1,2,3}", small, small_res));
  const bool small_ok = !small_res.sum_free && witness(small_res) == "(1,2,3)";
  const bool pass = e_res.sum_free && small_ok && empty_res.sum_free;
  std::string line = str(e_values.size()) + " values of E " +
                     (e_res.sum_free ? "are sum-free" : "are NOT sum-free " + witness(e_res)) +
                     "; {1,2,3} witness " + witness(small_res);
  if (!pass) line = "claim not reproduced: " + line;
  return make_report({std::move(checks)}, std::move(certs), pass, std::move(line));
}

}  // namespace

const std::vector<ScenarioEntry>& scenario_registry() {
  static const std::vector<ScenarioEntry> registry = [] {
    std::vector<ScenarioEntry> r;
    r.push_back({{"ledrappier_counterexample",
                  "Ledrappier triple correlation along (2^n,0),(0,2^n) and pair gaps on a window"},
                 {{"n_max", 10}, {"window", 8}},
                 run_ledrappier_counterexample});
    r.push_back({{"ledrappier_sigma2_evidence",
                  "m=1 refutation and tilde-Sigma_2 evidence for the Ledrappier triple R_eps set"},
                 {{"K", 8}, {"epsilon", "1/16"}, {"battery", nullptr}},
                 run_ledrappier_sigma2_evidence});
    r.push_back({{"bernoulli_rlimit", "R-limit of Bernoulli(1/2) correlations along a separated seed"},
                 {{"l", 2}, {"m", 2}, {"N", 14}, {"epsilon", "1/100"}},
                 run_bernoulli_rlimit});
    r.push_back({{"diagonal_Z", "Sigma_m evidence and density for T^{a_1 n}A_1 ∩ ... on Z"},
                 {{"a", {1, 2}}, {"epsilon", "1/100"}, {"m", 2}, {"K", 8}, {"k_max", 50}},
                 run_diagonal_z});
    r.push_back({{"pullback_nonmixing",
                  "non-mixing pulled-back action whose phi-diagonal triple gaps vanish"},
                 {{"K", 8}, {"k_max", 12}, {"epsilon", "1/10"}},
                 run_pullback_nonmixing});
    r.push_back({{"prime_select_nonsigma", "prime-select homomorphisms refute Sigma_l* via kernel sums"},
                 {{"K", 8}, {"epsilon", "1/10"}, {"primes", {2, 3}}},
                 run_prime_select_nonsigma});
    r.push_back({{"density_one", "density of the complement of R_eps(A,A) for Bernoulli(1/2) on Z"},
                 {{"k_max", 200}, {"epsilon", "1/100"}},
                 run_density_one});
    r.push_back({{"cesaro_weakmixing", "Cesaro average of diagonal triple gaps over boxes"},
                 {{"k_max", 200}, {"epsilon", "1/100"}, {"a", {1, 2}}},
                 run_cesaro_weakmixing});
    r.push_back({{"ip_truncated", "finite-sum spread versus R-limit for the indicator of base^k1+base^k2"},
                 {{"K", 10}, {"base", 3}, {"threshold", 5}},
                 run_ip_truncated});
    r.push_back({{"polynomial_paths", "shared-shift search inside the values of an integer polynomial"},
                 {{"coefficients", {0, 0, 1}}, {"window", 1000000}, {"repeats", 3}},
                 run_polynomial_paths});
    r.push_back({{"ramsey_selftest", "exhaustive R(3,3) check and the pentagon coloring"},
                 {{"N", 6}},
                 run_ramsey_selftest});
    r.push_back({{"sumfree_selftest", "sum-free fixtures"},
                 {{"base", 3}, {"k_max", 12}},
                 run_sumfree_selftest});
    return r;
  }();
  return registry;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> check_largeness(const Json& c) {
  std::vector<std::string> problems;
  const GroupCtx ctx = group_from_json(require(c, "group"));
  const Rational eps = rational_from_json(require(c, "epsilon"));
  std::vector<SeedMatrix> battery;
  for (const auto& s : require(c, "battery")) battery.push_back(seed_from_json(s));
  const LargenessCert cert = largeness_from_json(ctx, require(c, "certificate"));
  const Json& gaps = require(c, "gaps");
  if (cert.battery_size != battery.size()) problems.push_back("battery size mismatch");

  std::map<Tuple, Rational> recorded;
  const std::size_t items = cert.is_refutation() ? cert.refutation.size() : cert.witnesses.size();
  if (!gaps.is_array() || gaps.size() != items) {
    problems.push_back("gap list does not match certificate entries");
    return problems;
  }
  for (std::size_t i = 0; i < items; ++i) {
    const Tuple& t = cert.is_refutation() ? cert.refutation[i].value : cert.witnesses[i].value;
    recorded[t] = rational_from_json(gaps[i]);
  }
  auto pred = [&](std::span<const GroupElement> g) {
    auto it = recorded.find(Tuple(g.begin(), g.end()));
    if (it == recorded.end()) raise(ErrorKind::Schema, "tuple without a recorded gap");
    return it->second < eps;
  };
  if (!verify_certificate(cert, pred)) problems.push_back("certificate does not re-verify");

  if (cert.is_refutation()) {
    if (cert.refuted_index >= battery.size()) {
      problems.push_back("refuted seed index out of range");
      return problems;
    }
    const auto expected = enumerate_sigma(battery[cert.refuted_index]);
    bool same = expected.size() == cert.refutation.size();
    for (std::size_t i = 0; same && i < expected.size(); ++i) {
      same = expected[i].alpha == cert.refutation[i].alpha && expected[i].value == cert.refutation[i].value;
    }
    if (!same) problems.push_back("refutation does not enumerate the refuted seed");
  } else {
    for (const auto& w : cert.witnesses) {
      if (w.seed_index >= battery.size() || seed_tuple(battery[w.seed_index], w.alpha) != w.value) {
        problems.push_back("witness " + to_string(w.alpha) + " is not a sum of its seed");
      }
    }
  }
  return problems;
}

std::vector<std::string> check_sum_free(const Json& c) {
  std::vector<std::string> problems;
  std::vector<BigInt> values;
  for (const auto& v : require(c, "values")) values.push_back(bigint_from_json(v));
  const auto r = sum_free_check(values);
  const Json& flag = require(c, "sum_free");
  if (!flag.is_boolean() || flag.get<bool>() != r.sum_free) problems.push_back("sum-free flag differs");
  const Json& w = require(c, "witness");
  if (!w.is_null()) {
    if (!w.is_array() || w.size() != 3) {
      problems.push_back("malformed witness");
    } else {
      BigInt a = bigint_from_json(w[0]);
      BigInt b = bigint_from_json(w[1]);
      BigInt s = bigint_from_json(w[2]);
      auto member = [&](const BigInt& x) { return std::find(values.begin(), values.end(), x) != values.end(); };
      if (a + b != s || !member(a) || !member(b) || !member(s)) problems.push_back("witness is not a + b = c in the set");
    }
  } else if (!r.sum_free) {
    problems.push_back("missing witness");
  }
  return problems;
}

std::vector<std::string> check_polynomial(const Json& c) {
  std::vector<std::string> problems;
  const Json& w = require(c, "witness");
  if (w.is_null()) return problems;
  std::vector<BigInt> coeffs;
  for (const auto& x : require(c, "coefficients")) coeffs.push_back(bigint_from_json(x));
  const auto window = require(c, "window").get<std::int64_t>();
  const auto repeats = size_from_json(require(c, "repeats"), "repeats");
  const auto values = polynomial_values(coeffs, window);
  const BigInt a = bigint_from_json(require(w, "a"));
  const BigInt b = bigint_from_json(require(w, "b"));
  std::set<BigInt> shifts;
  for (const auto& s : require(w, "shifts")) shifts.insert(bigint_from_json(s));
  if (a >= b) problems.push_back("witness needs a < b");
  if (shifts.size() < repeats) problems.push_back("fewer distinct shifts than required");
  auto member = [&](const BigInt& x) {
    return x.fits_slong_p() && std::binary_search(values.begin(), values.end(), x.get_si());
  };
  for (const auto& n : shifts) {
    if (!member(a + n) || !member(b + n)) problems.push_back("shift " + n.get_str() + " leaves the value set");
  }
  return problems;
}

}  // namespace

std::vector<std::string> check_certificate(const Json& cert) {
  const Json& type = require(cert, "type");
  if (!type.is_string()) raise(ErrorKind::Schema, "certificate type must be a string");
  const auto kind = type.get<std::string>();
  if (kind == "homogeneous") {
    const Json& cj = require(cert, "coloring");
    Coloring col;
    col.m = size_from_json(require(cj, "m"), "m");
    col.n = size_from_json(require(cj, "N"), "N");
    col.colors = size_from_json(require(cj, "colors"), "colors");
    col.color = require(cj, "color").get<std::vector<std::uint32_t>>();
    if (col.color.size() != binomial(col.n, col.m)) return {"coloring is not total"};
    if (!verify_homogeneous(col, homogeneous_from_json(require(cert, "certificate")))) {
      return {"homogeneous set does not re-verify"};
    }
    return {};
  }
  if (kind == "rlimit") {
    const auto arr = simplex_from_json(require(cert, "array"));
    if (!verify_rlimit(arr, rlimit_from_json(require(cert, "estimate")))) {
      return {"R-limit estimate does not re-verify"};
    }
    return {};
  }
  if (kind == "largeness") return check_largeness(cert);
  if (kind == "sum_free") return check_sum_free(cert);
  if (kind == "polynomial") return check_polynomial(cert);
  raise(ErrorKind::Schema, "unknown certificate type \"" + kind + "\"");
}

}  // namespace mixlab::lab
