// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mixlab/lab.hpp"
#include "mixlab/largeness.hpp"
#include "mixlab/ramsey.hpp"
#include "mixlab/systems.hpp"
#include "support/ledrappier_oracle.hpp"

using namespace mixlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const GroupCtx kZ = GroupCtx::integers();
const GroupCtx kZ2 = GroupCtx::lattice(2);

BigInt p2(std::size_t k) { return pow(BigInt(2), k); }
GroupElement z(const BigInt& v) { return GroupElement(std::vector<BigInt>{v}); }
GroupElement xy(const BigInt& x, const BigInt& y) { return GroupElement(std::vector<BigInt>{x, y}); }
GroupElement axis(std::size_t j, const BigInt& v) { return j == 0 ? xy(v, 0) : xy(0, v); }

Outcome ledrappier_non_three_mixing() {
  Outcome o;
  const auto led = SystemHandle::ledrappier();
  const auto a = make_pattern(led, {{xy(0, 0), 0}});
  o.check(cylinder_measure(led, a) == make_rational(1, 2), "mu(A) != 1/2");
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::vector<CorrelationTerm> t = {{xy(0, 0), a}, {axis(0, p2(n)), a}, {axis(1, p2(n)), a}};
    o.check(correlate(led, t) == make_rational(1, 4), "triple correlation != 1/4 at n=" + std::to_string(n));
    o.check(mixing_gap(led, t) == make_rational(1, 8), "triple gap != 1/8 at n=" + std::to_string(n));
  }
  std::size_t pairs = 0;
  for (long x = -8; x <= 8; ++x) {
    for (long y = -8; y <= 8; ++y) {
      if (!x && !y) continue;
      ++pairs;
      const std::vector<CorrelationTerm> t = {{xy(0, 0), a}, {xy(x, y), a}};
      o.check(correlate(led, t) - make_rational(1, 4) == 0,
              "pair gap nonzero at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  if (o.pass) {
    o.detail = "n=1..10 correlation 1/4, gap 1/8; " + std::to_string(pairs) + " window pair gaps 0";
  }
  return o;
}

Outcome ledrappier_dichotomy() {
  Outcome o;
  const auto led = SystemHandle::ledrappier();
  const auto a = make_pattern(led, {{xy(0, 0), 0}});
  const Rational eps = make_rational(1, 16);
  auto gap = [&](std::span<const GroupElement> g) {
    return mixing_gap(led, {{xy(0, 0), a}, {g[0], a}, {g[1], a}});
  };
  auto pred = [&](std::span<const GroupElement> g) { return gap(g) < eps; };
  const std::size_t horizon = 8;

  const auto m1 = SeedMatrix::generate(kZ2, 1, 2, horizon, [](std::size_t j, std::size_t, std::size_t k) {
    return axis(j, p2(k));
  });
  const auto ref = sigma_star_evidence(pred, std::span(&m1, 1));
  o.check(ref.kind == CertKind::RefutesSigmaStar, "m=1 seed not refuted");
  for (const auto& e : ref.refutation) o.check(gap(e.value) == make_rational(1, 8), "refutation gap != 1/8");
  o.check(verify_certificate(ref, pred), "refutation certificate does not re-verify");

  // tilde-Sigma_2 battery: FS diagonals in bases 2 and 3, a linear-gap seed, and a sheared seed
  std::vector<SeedMatrix> battery;
  for (unsigned long base : {2UL, 3UL}) {
    battery.push_back(sigma_from_ip(FSFamily::generate(kZ2, 2, horizon, [base](std::size_t j, std::size_t k) {
                                      return axis(j, pow(BigInt(base), k));
                                    }),
                                    2));
  }
  battery.push_back(SeedMatrix::generate(kZ2, 2, 2, horizon, [](std::size_t j, std::size_t t, std::size_t k) {
    return axis(j, BigInt(static_cast<unsigned long>(t + 1)) * p2(k));
  }));
  battery.push_back(SeedMatrix::generate(kZ2, 2, 2, horizon, [](std::size_t j, std::size_t, std::size_t k) {
    return j == 0 ? xy(p2(k), p2(k)) : xy(0, p2(k));
  }));
  std::size_t sums = 0;
  for (const auto& s : battery) {
    o.check(validate_seed(s).ok, "battery seed fails validation");
    for (const auto& e : enumerate_sigma(s)) {
      ++sums;
      o.check(pred(e.value), "battery sum outside R_eps at " + to_string(e.alpha));
    }
  }
  const auto ev = sigma_star_evidence(pred, battery);
  o.check(ev.kind == CertKind::EvidenceSigmaStar, "battery certificate is not evidence");
  o.check(verify_certificate(ev, pred), "evidence certificate does not re-verify");
  for (const auto& e : enumerate_sigma(battery.front())) {
    o.check(correlate(led, {{xy(0, 0), a}, {e.value[0], a}, {e.value[1], a}}) == make_rational(1, 8),
            "diagonal pair correlation != 1/8 at " + to_string(e.alpha));
  }

  lab::ExperimentConfig cfg;
  cfg.scenario = "ledrappier_sigma2_evidence";
  o.check(lab::run_experiment(cfg).verdict.pass, "ledrappier_sigma2_evidence verdict fails");
  if (o.pass) {
    o.detail = "m=1 seed refuted (" + std::to_string(ref.refutation.size()) + " sums, gap 1/8); " +
               std::to_string(sums) + " tilde-Sigma_2 sums all in R_1/16";
  }
  return o;
}

Outcome bernoulli_rlimit() {
  Outcome o;
  const auto coin = SystemHandle::fair_coin(kZ);
  const auto a = make_pattern(coin, {{z(0), 1}});
  const std::size_t n = 14;
  const auto seed = SeedMatrix::generate(kZ, 2, 2, n, [](std::size_t j, std::size_t, std::size_t k) {
    return z(BigInt(static_cast<unsigned long>(2 * j + 1)) * p2(k));
  });
  o.check(validate_seed(seed).ok, "seed fails validation");
  const auto arr = SimplexArray::generate(2, n, [&](const IndexSet& alpha) {
    const auto g = seed_tuple(seed, alpha);
    return correlate(coin, {{z(0), a}, {g[0], a}, {g[1], a}});
  });
  for (const auto& v : arr.values()) o.check(v == make_rational(1, 8), "array entry != 1/8");
  const auto est = rlimit_estimate(arr, make_rational(1, 100));
  o.check(est.value == make_rational(1, 8), "R-limit value " + to_string(est.value));
  o.check(est.subset == all_subsets(n, n).front(), "S is not the full horizon");
  o.check(verify_rlimit(arr, est), "estimate does not re-verify");

  lab::ExperimentConfig cfg;
  cfg.scenario = "bernoulli_rlimit";
  o.check(lab::run_experiment(cfg).verdict.pass, "bernoulli_rlimit verdict fails");
  if (o.pass) o.detail = "C(14,2)=91 entries all 1/8; v=1/8 on S=[14]";
  return o;
}

Outcome ledrappier_oracle() {
  Outcome o;
  const auto sols = mixlab::testing::ledrappier_window_solutions(4);
  o.check(sols.size() == 128, "window has " + std::to_string(sols.size()) + " solutions");
  const auto led = SystemHandle::ledrappier();

  std::size_t patterns = 0;
  std::vector<int> cells;
  std::function<void(int)> rec = [&](int next) {
    // cells holds the chosen positions; iterate every symbol assignment
    const std::size_t size = cells.size();
    for (std::uint32_t symbols = 0; symbols < (1U << size); ++symbols) {
      std::uint32_t mask = 0;
      std::uint32_t want = 0;
      std::vector<std::pair<GroupElement, int>> items;
      for (std::size_t i = 0; i < size; ++i) {
        const int s = (symbols >> i) & 1U;
        mask |= 1U << cells[i];
        want |= static_cast<std::uint32_t>(s) << cells[i];
        items.emplace_back(xy(cells[i] % 4, cells[i] / 4), s);
      }
      long hits = 0;
      for (auto x : sols) hits += (x & mask) == want;
      ++patterns;
      if (cylinder_measure(led, make_pattern(led, items)) != make_rational(hits, 128)) {
        o.check(false, "mismatch on a pattern with " + std::to_string(size) + " constraints");
      }
    }
    if (size == 5) return;
    for (int c = next; c < 16; ++c) {
      cells.push_back(c);
      rec(c + 1);
      cells.pop_back();
    }
  };
  rec(0);
  o.check(patterns == 173889, "enumerated " + std::to_string(patterns) + " patterns");
  if (o.pass) o.detail = std::to_string(patterns) + " patterns match 128-solution window count";
  return o;
}

Outcome ramsey_selftest() {
  Outcome o;
  const std::size_t edges = 15;
  Coloring col{2, 6, 2, std::vector<std::uint32_t>(edges), {}};
  std::uint64_t ok = 0;
  for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
    for (std::size_t e = 0; e < edges; ++e) col.color[e] = (mask >> e) & 1U;
    const auto r = find_homogeneous(col, 3);
    if (r.best.size() >= 3 && verify_homogeneous(col, r.best)) ++ok;
  }
  o.check(ok == 32768, std::to_string(ok) + "/32768 colorings certified");

  Coloring pent{2, 5, 2, {}, {}};
  for (const auto& alpha : all_subsets(5, 2)) {
    const auto d = alpha[1] - alpha[0];
    pent.color.push_back(d == 1 || d == 4 ? 0 : 1);
  }
  const auto p = find_homogeneous(pent, 3);
  o.check(p.best.size() == 2 && p.exhaustive && !p.reached_target, "pentagon maximum is not 2");
  if (o.pass) o.detail = "32768/32768 colorings of [6]^(2) have size >= 3; pentagon maximum 2";
  return o;
}

Outcome pullback_counterexamples() {
  Outcome o;
  const auto fs = GroupCtx::finite_support();
  const auto coin = SystemHandle::fair_coin(fs);
  const auto a = make_pattern(coin, {{zero(fs), 1}});
  const auto pulled = SystemHandle::pulled_back(coin, Homomorphism::even_select());
  for (long k = 1; k <= 12; ++k) {
    o.check(mixing_gap(pulled, {{zero(fs), a}, {make_element(fs, {k}), a}}) == make_rational(1, 4),
            "pair gap along (k,0,...) != 1/4 at k=" + std::to_string(k));
  }

  const std::vector<Homomorphism> phis = {Homomorphism::prime_select(2), Homomorphism::prime_select(3)};
  const Rational eps = make_rational(1, 10);
  auto correlation = [&](const GroupElement& g) {
    std::vector<CorrelationTerm> t = {{zero(fs), a}};
    for (const auto& phi : phis) t.push_back({hom_apply(phi, g), a});
    return correlate(coin, t);
  };
  auto pred = [&](std::span<const GroupElement> g) {
    return abs(Rational(correlation(g[0]) - make_rational(1, 8))) < eps;
  };
  // kernel sums: multiples of the first coordinate, which no prime power reads
  const auto seed = SeedMatrix::generate(fs, 2, 1, 8, [&](std::size_t, std::size_t, std::size_t k) {
    return make_element(fs, std::vector<BigInt>{BigInt(static_cast<unsigned long>(k))});
  });
  o.check(validate_seed(seed).ok, "kernel seed fails validation");
  for (const auto& e : enumerate_sigma(seed)) {
    o.check(correlation(e.value[0]) == make_rational(1, 2), "kernel-sum correlation != 1/2");
  }
  const auto cert = sigma_star_evidence(pred, std::span(&seed, 1));
  o.check(cert.kind == CertKind::RefutesSigmaStar, "Sigma_2* not refuted");
  o.check(verify_certificate(cert, pred), "refutation does not re-verify");

  for (const char* id : {"pullback_nonmixing", "prime_select_nonsigma"}) {
    lab::ExperimentConfig cfg;
    cfg.scenario = id;
    o.check(lab::run_experiment(cfg).verdict.pass, std::string(id) + " verdict fails");
  }
  if (o.pass) o.detail = "pair gap 1/4 for k=1..12; 28 kernel sums with correlation 1/2 != 1/8";
  return o;
}

Outcome density_one() {
  Outcome o;
  const auto coin = SystemHandle::fair_coin(kZ);
  const auto a = make_pattern(coin, {{z(0), 1}});
  const Rational eps = make_rational(1, 100);
  const std::size_t k_max = 200;
  const auto fam = FolnerFamily::canonical(kZ, k_max);
  auto outside = [&](const GroupElement& g) { return !(mixing_gap(coin, {{z(0), a}, {g, a}}) < eps); };
  const auto rep = folner_density(outside, fam, k_max);
  for (const auto& [k, count] : rep.counts) o.check(count <= 1, "complement count > 1 at k=" + std::to_string(k));
  o.check(rep.ratios.back().second <= make_rational(1, 401), "complement density above 1/401");

  Rational total = 0;
  for (long n = -static_cast<long>(k_max); n <= static_cast<long>(k_max); ++n) {
    total += mixing_gap(coin, {{z(0), a}, {z(n), a}, {z(2 * n), a}});
  }
  const Rational avg = total / static_cast<long>(2 * k_max + 1);
  o.check(avg <= eps, "Cesaro average " + to_string(avg) + " above 1/100");

  for (const char* id : {"density_one", "cesaro_weakmixing"}) {
    lab::ExperimentConfig cfg;
    cfg.scenario = id;
    o.check(lab::run_experiment(cfg).verdict.pass, std::string(id) + " verdict fails");
  }
  if (o.pass) {
    o.detail = "complement density " + to_string(rep.ratios.back().second) + " at k=200; Cesaro average " +
               to_string(avg);
  }
  return o;
}

Outcome combinatorial_fixtures() {
  Outcome o;
  std::vector<BigInt> e;
  for (unsigned long k2 = 1; k2 <= 12; ++k2) {
    for (unsigned long k1 = 1; k1 < k2; ++k1) e.push_back(pow(BigInt(3), k1) + pow(BigInt(3), k2));
  }
  o.check(sum_free_check(e).sum_free, "3-power pair sums are not sum-free");

  const auto found = polynomial_sigma2_search({0, 0, 1}, 1'000'000, 3);
  if (found) {
    std::string shifts;
    for (const auto& s : found->shifts) shifts += (shifts.empty() ? "" : ",") + s.get_str();
    o.check(false, "n^2 search returned a=" + found->a.get_str() + ", b=" + found->b.get_str() +
                       " with shifts " + shifts);
  }

  o.check(admissible_check(kZ, {{z(1), z(2), z(3)}}).admissible, "span{(1,2,3)} not admissible");
  o.check(!admissible_check(kZ, {{z(1), z(0), z(0)}, {z(0), z(1), z(0)}}).admissible,
          "span{(1,0,0),(0,1,0)} admissible");
  if (o.pass) o.detail = "66 sums sum-free; n^2 search empty; both admissibility examples reproduced";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Ledrappier non-3-mixing", 10, ledrappier_non_three_mixing},
      {2, "Ledrappier largeness dichotomy", 30, ledrappier_dichotomy},
      {3, "Bernoulli R-limit", 5, bernoulli_rlimit},
      {4, "Ledrappier oracle equivalence", 60, ledrappier_oracle},
      {5, "Ramsey self-test", 30, ramsey_selftest},
      {6, "pullback counterexamples", 10, pullback_counterexamples},
      {7, "density-one battery", 20, density_one},
      {8, "combinatorial fixtures", 60, combinatorial_fixtures},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      if (o.pass) o.detail = "took longer than " + std::to_string(int(c.limit_s)) + " s";
      o.pass = false;
    }
    failures += !o.pass;
    std::printf("criterion %d: %s: %s (%.2f s): %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
