#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mixlab/error.hpp"
#include "mixlab/largeness.hpp"
#include "mixlab/systems.hpp"
#include "support/random.hpp"

using namespace mixlab;

namespace {

const GroupCtx kZ = GroupCtx::integers();
const GroupCtx kZ2 = GroupCtx::lattice(2);

GroupElement z(const BigInt& v) { return GroupElement(std::vector<BigInt>{v}); }

BigInt p2(std::size_t k) { return pow(BigInt(2), k); }
BigInt p3(std::size_t k) { return pow(BigInt(3), k); }

std::vector<BigInt> first_components(const std::vector<SigmaElement>& es) {
  std::vector<BigInt> out;
  for (const auto& e : es) out.push_back(e.value.at(0)[0]);
  return out;
}

// Number of 0 <= x < y <= root with y^2 - x^2 = c, via factor pairs c = d e.
std::size_t square_difference_count(long c, long root) {
  std::size_t count = 0;
  for (long d = 1; d * d < c; ++d) {
    if (c % d) continue;
    const long e = c / d;
    if ((d + e) % 2) continue;
    if ((d + e) / 2 <= root) ++count;
  }
  return count;
}

}  // namespace

TEST(Seed, SeedSums) {
  const auto seed = SeedMatrix::generate(kZ, 2, 1, 3, [](std::size_t, std::size_t t, std::size_t k) {
    return z(BigInt(t == 0 ? 10 : 100) * static_cast<unsigned long>(k));
  });
  EXPECT_EQ(seed_sum(seed, 0, {1, 3}), z(310));
  EXPECT_EQ(first_components(enumerate_sigma(seed)), (std::vector<BigInt>{210, 310, 320}));

  const auto single = SeedMatrix::generate(kZ, 1, 1, 4, [](std::size_t, std::size_t, std::size_t k) {
    return z(BigInt(static_cast<unsigned long>(7 * k)));
  });
  EXPECT_EQ(seed_sum(single, 0, {3}), z(21));
  EXPECT_EQ(first_components(enumerate_sigma(single)), (std::vector<BigInt>{7, 14, 21, 28}));

  const auto vec = SeedMatrix::generate(kZ2, 2, 1, 2, [](std::size_t, std::size_t, std::size_t k) {
    return GroupElement(std::vector<BigInt>{p2(k), 0});
  });
  EXPECT_EQ(seed_sum(vec, 0, {1, 2}), GroupElement({6, 0}));
}

TEST(Seed, DiagonalPairs) {
  const auto fam = FSFamily::generate(kZ2, 2, 3, [](std::size_t j, std::size_t k) {
    return j == 0 ? GroupElement(std::vector<BigInt>{p2(k), 0})
                  : GroupElement(std::vector<BigInt>{0, p2(k)});
  });
  const auto seed = sigma_from_ip(fam, 2);
  const auto sums = enumerate_sigma(seed);
  ASSERT_EQ(sums.size(), 3u);
  const long expect[] = {6, 10, 12};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(sums[i].value, (Tuple{{expect[i], 0}, {0, expect[i]}}));
  }
}

TEST(Seed, Validation) {
  auto linear = SeedMatrix::generate(kZ, 1, 1, 6, [](std::size_t, std::size_t, std::size_t k) {
    return z(BigInt(static_cast<unsigned long>(k)));
  });
  EXPECT_TRUE(validate_seed(linear).ok);

  auto alternating = SeedMatrix::generate(kZ, 1, 1, 6, [](std::size_t, std::size_t, std::size_t k) {
    return z(k % 2 ? -1 : 1);
  });
  const auto v = validate_seed(alternating);
  ASSERT_FALSE(v.ok);
  EXPECT_EQ(v.first_violation->kind, SeedViolation::Kind::NonDegenerate);
  EXPECT_EQ(v.first_violation->k, 2u);

  auto twins = SeedMatrix::generate(kZ, 1, 2, 6, [](std::size_t, std::size_t, std::size_t k) {
    return z(BigInt(static_cast<unsigned long>(k)));
  });
  const auto w = validate_seed(twins);
  ASSERT_FALSE(w.ok);
  EXPECT_EQ(w.first_violation->kind, SeedViolation::Kind::EssentiallyDistinct);

  EXPECT_THROW(SeedMatrix::from_columns(kZ, {{{z(1)}, {z(2)}}}), Error);  // K < m
}

TEST(FiniteSums, Enumeration) {
  const auto threes = FSFamily::generate(kZ, 1, 3, [](std::size_t, std::size_t k) { return z(p3(k)); });
  auto v = first_components(enumerate_fs(threes));
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<BigInt>{3, 9, 12, 27, 30, 36, 39}));

  const auto one = FSFamily::from_generators(kZ, {{z(5)}});
  EXPECT_EQ(first_components(enumerate_fs(one)), (std::vector<BigInt>{5}));

  const auto twos = FSFamily::generate(kZ, 1, 4, [](std::size_t, std::size_t k) { return z(p2(k)); });
  auto evens = first_components(enumerate_fs(twos));
  std::sort(evens.begin(), evens.end());
  std::vector<BigInt> expect;
  for (long e = 2; e <= 30; e += 2) expect.push_back(e);
  EXPECT_EQ(evens, expect);

  const auto big = FSFamily::generate(kZ, 1, 21, [](std::size_t, std::size_t k) {
    return z(BigInt(static_cast<unsigned long>(k)));
  });
  try {
    enumerate_fs(big);
    FAIL() << "expected a guard error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Guard);
  }
}

TEST(FiniteSums, SigmaFromIpIsSubsetOfFs) {
  const auto threes = FSFamily::generate(kZ, 1, 6, [](std::size_t, std::size_t k) { return z(p3(k)); });
  const auto seed = sigma_from_ip(threes, 2);
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(seed.at(0, t, k), z(p3(k)));
  }
  std::set<Tuple> fs2;
  for (const auto& e : enumerate_fs(threes)) {
    if (e.alpha.size() == 2) fs2.insert(e.value);
  }
  const auto sums = enumerate_sigma(seed);
  EXPECT_EQ(sums.size(), 15u);
  for (const auto& e : sums) EXPECT_TRUE(fs2.count(e.value));

  const auto gens = first_components(enumerate_sigma(sigma_from_ip(threes, 1)));
  EXPECT_EQ(gens, (std::vector<BigInt>{3, 9, 27, 81, 243, 729}));
}

TEST(Certificates, CofiniteGivesEvidence) {
  const std::set<long> excluded = {2, 3, 5, 6, 7};
  auto pred = [&](std::span<const GroupElement> g) { return !excluded.count(g[0][0].get_si()); };
  std::vector<SeedMatrix> battery;
  for (unsigned long c = 1; c <= 3; ++c) {
    battery.push_back(SeedMatrix::generate(kZ, 2, 1, 6, [c](std::size_t, std::size_t t, std::size_t k) {
      return z(BigInt(c * (k + t)));
    }));
  }
  const auto cert = sigma_star_evidence(pred, battery);
  EXPECT_EQ(cert.kind, CertKind::EvidenceSigmaStar);
  ASSERT_EQ(cert.witnesses.size(), 3u);
  // c=1: sums k1 + k2 + 1 in colex order start 4, 5, 6, ...
  EXPECT_EQ(cert.witnesses[0].alpha, (IndexSet{1, 2}));
  EXPECT_EQ(cert.witnesses[0].value, (Tuple{{4}}));
  EXPECT_TRUE(verify_certificate(cert, pred));
  // a predicate that rejects a witness invalidates the certificate
  EXPECT_FALSE(verify_certificate(cert, [](std::span<const GroupElement>) { return false; }));
}

TEST(Certificates, LedrappierDichotomy) {
  const auto led = SystemHandle::ledrappier();
  const auto a = CylinderPattern::from_constraints(kZ2, {{{0, 0}, 0}});
  const Rational eps = make_rational(1, 16);
  auto gap = [&](std::span<const GroupElement> g) {
    return mixing_gap(led, {{{0, 0}, a}, {g[0], a}, {g[1], a}});
  };
  auto pred = [&](std::span<const GroupElement> g) { return gap(g) < eps; };
  auto axis = [](std::size_t j, const BigInt& v) {
    return j == 0 ? GroupElement(std::vector<BigInt>{v, 0}) : GroupElement(std::vector<BigInt>{0, v});
  };

  const auto m1 = SeedMatrix::generate(kZ2, 1, 2, 8, [&](std::size_t j, std::size_t, std::size_t k) {
    return axis(j, p2(k));
  });
  const auto ref = sigma_star_evidence(pred, std::span(&m1, 1));
  EXPECT_EQ(ref.kind, CertKind::RefutesSigmaStar);
  EXPECT_EQ(ref.refutation.size(), 8u);
  for (const auto& e : ref.refutation) EXPECT_EQ(gap(e.value), make_rational(1, 8));
  EXPECT_TRUE(verify_certificate(ref, pred));

  const auto m2 = sigma_from_ip(
      FSFamily::generate(kZ2, 2, 8, [&](std::size_t j, std::size_t k) { return axis(j, p2(k)); }), 2);
  EXPECT_TRUE(validate_seed(m2).ok);
  const auto ev = sigma_star_evidence(pred, std::span(&m2, 1));
  EXPECT_EQ(ev.kind, CertKind::EvidenceSigmaStar);
  for (const auto& e : enumerate_sigma(m2)) {
    EXPECT_EQ(correlate(led, {{{0, 0}, a}, {e.value[0], a}, {e.value[1], a}}), make_rational(1, 8))
        << to_string(e.alpha);
  }
}

TEST(CertificatesProperty, ExactlyOneKindAndSelfVerifying) {
  mixlab::testing::Gen gen(33);
  for (int trial = 0; trial < 200; ++trial) {
    const long modulus = gen.integer(2, 9);
    const long residue = gen.integer(0, modulus - 1);
    auto pred = [=](std::span<const GroupElement> g) {
      BigInt r = g[0][0] % modulus;
      if (r < 0) r += modulus;
      return r == residue;
    };
    std::vector<SeedMatrix> battery;
    const std::size_t seeds = 1 + gen.index(3);
    const std::size_t m = 1 + gen.index(2);
    for (std::size_t s = 0; s < seeds; ++s) {
      const long mult = gen.integer(1, 5);
      battery.push_back(SeedMatrix::generate(kZ, m, 1, 5, [=](std::size_t, std::size_t t, std::size_t k) {
        return z(BigInt(mult * long(k * k + t)));
      }));
    }
    const auto cert = sigma_star_evidence(pred, battery);
    bool every_seed_hits = true;
    for (const auto& s : battery) {
      const auto sums = enumerate_sigma(s);
      every_seed_hits = every_seed_hits &&
                        std::any_of(sums.begin(), sums.end(), [&](const SigmaElement& e) { return pred(e.value); });
    }
    EXPECT_EQ(cert.is_refutation(), !every_seed_hits);
    EXPECT_TRUE(verify_certificate(cert, pred));
    if (!cert.is_refutation()) {
      for (const auto& w : cert.witnesses) {
        // colex-minimal witness
        for (const auto& e : enumerate_sigma(battery[w.seed_index])) {
          if (e.alpha == w.alpha) break;
          EXPECT_FALSE(pred(e.value));
        }
      }
    }
  }
}

TEST(Certificates, IpStar) {
  const auto twos = FSFamily::generate(kZ, 1, 5, [](std::size_t, std::size_t k) { return z(p2(k)); });
  auto odd = [](std::span<const GroupElement> g) { return g[0][0] % 2 != 0; };
  const auto ref = ip_star_evidence(odd, std::span(&twos, 1));
  EXPECT_EQ(ref.kind, CertKind::RefutesIPStar);
  EXPECT_EQ(ref.refutation.size(), 31u);
  EXPECT_TRUE(verify_certificate(ref, odd));

  auto mult6 = [](std::span<const GroupElement> g) { return g[0][0] % 6 == 0; };
  const auto ev = ip_star_evidence(mult6, std::span(&twos, 1));
  EXPECT_EQ(ev.kind, CertKind::EvidenceIPStar);
  EXPECT_EQ(ev.witnesses.at(0).value, (Tuple{{6}}));
}

TEST(Density, Ratios) {
  const auto fam = FolnerFamily::canonical(kZ, 100);
  const auto evens = folner_density([](const GroupElement& g) { return g[0] % 2 == 0; }, fam, 10);
  EXPECT_EQ(evens.ratios.at(9).second, make_rational(11, 21));

  const auto all = folner_density([](const GroupElement&) { return true; }, fam, 12);
  for (const auto& [k, r] : all.ratios) EXPECT_EQ(r, Rational(1));
  EXPECT_EQ(all.verdict, DensityVerdict::TendsToOne);

  const auto none = folner_density([](const GroupElement&) { return false; }, fam, 12);
  for (const auto& [k, r] : none.ratios) EXPECT_EQ(r, Rational(0));
  EXPECT_EQ(none.verdict, DensityVerdict::TendsToZero);

  auto is_square = [](const GroupElement& g) {
    return g[0] >= 0 && mpz_perfect_square_p(g[0].get_mpz_t()) != 0;
  };
  const auto squares = folner_density(is_square, fam, 100);
  EXPECT_EQ(squares.ratios.back().second, make_rational(11, 201));
  EXPECT_EQ(squares.counts.back().second, 11);

  EXPECT_THROW(folner_density(is_square, fam, 101), Error);
}

TEST(DensityProperty, CountsMatchWindowScan) {
  mixlab::testing::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ctx = gen.group();
    const std::size_t kmax = ctx.kind == GroupKind::FinSupportIntSeq ? 3 : 4;
    const auto fam = FolnerFamily::canonical(ctx, kmax);
    const long mod = gen.integer(2, 5);
    auto pred = [&](const GroupElement& g) {
      BigInt s = 0;
      for (const auto& c : g.coords()) s += c;
      return s % mod == 0;
    };
    const auto rep = folner_density(pred, fam, kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
      const auto win = folner_window(fam, k);
      const long hits = std::count_if(win.begin(), win.end(), pred);
      EXPECT_EQ(rep.counts[k - 1].second, hits);
      EXPECT_EQ(rep.ratios[k - 1].second, make_rational(hits, long(win.size())));
    }
  }
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(admissible_check(kZ, {{{1}, {2}, {3}}}).admissible);

  const auto flat = admissible_check(kZ, {{{1}, {0}, {0}}, {{0}, {1}, {0}}});
  EXPECT_FALSE(flat.admissible);
  ASSERT_TRUE(flat.vanishing.has_value());
  EXPECT_EQ(flat.vanishing->j, 2u);
  EXPECT_FALSE(flat.vanishing->i.has_value());

  const auto diag = admissible_check(kZ, {{{1}, {1}}});
  EXPECT_FALSE(diag.admissible);
  ASSERT_TRUE(diag.vanishing && diag.vanishing->i);
  EXPECT_EQ(diag.functionals.size(), 4u);

  EXPECT_THROW(admissible_check(kZ, {}), Error);
}

TEST(SumFree, Examples) {
  std::vector<BigInt> e;
  for (std::size_t k2 = 1; k2 <= 12; ++k2) {
    for (std::size_t k1 = 1; k1 < k2; ++k1) e.push_back(p3(k1) + p3(k2));
  }
  ASSERT_EQ(e.size(), 66u);
  EXPECT_TRUE(sum_free_check(e).sum_free);

  const auto r = sum_free_check({1, 2, 3});
  EXPECT_FALSE(r.sum_free);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (std::array<BigInt, 3>{1, 2, 3}));

  EXPECT_TRUE(sum_free_check({}).sum_free);
  const auto dbl = sum_free_check({5, 10});
  EXPECT_EQ(*dbl.witness, (std::array<BigInt, 3>{5, 5, 10}));
}

TEST(SumFreeProperty, AgreesWithTripleScan) {
  mixlab::testing::Gen gen(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::set<long> s;
    const std::size_t n = gen.index(12);
    while (s.size() < n) s.insert(gen.integer(-40, 40));
    std::vector<BigInt> v(s.begin(), s.end());
    bool found = false;
    for (long a : s)
      for (long b : s) found = found || s.count(a + b);
    const auto r = sum_free_check(v);
    EXPECT_EQ(r.sum_free, !found);
    if (r.witness) {
      const auto& [a, b, c] = *r.witness;
      EXPECT_LE(a, b);
      EXPECT_EQ(a + b, c);
      EXPECT_TRUE(s.count(a.get_si()) && s.count(b.get_si()) && s.count(c.get_si()));
    }
  }
}

TEST(Polynomial, Values) {
  const auto sq = polynomial_values({0, 0, 1}, 100);
  EXPECT_EQ(sq, (std::vector<std::int64_t>{0, 1, 4, 9, 16, 25, 36, 49, 64, 81, 100}));
  try {
    polynomial_values({0, 1}, 100);
    FAIL() << "degree 1 must be rejected";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Guard);
  }
  EXPECT_THROW(polynomial_sigma2_search({0, 1}, 1000), Error);
}

// The search reports the smallest difference with R representations; the
// factor-pair count pins down what that difference is for n^2 and 2n^2.
TEST(Polynomial, SmallestRepeatedDifferenceMatchesFactorPairs) {
  long c_sq = 1;
  while (square_difference_count(c_sq, 1000) < 3) ++c_sq;
  EXPECT_EQ(c_sq, 45);
  const auto sq = polynomial_sigma2_search({0, 0, 1}, 1'000'000, 3);
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(sq->a, 0);
  EXPECT_EQ(sq->b, c_sq);
  EXPECT_EQ(sq->shifts, (std::vector<BigInt>{4, 36, 484}));

  long c_half = 1;
  while (square_difference_count(c_half, 707) < 3) ++c_half;
  const auto twice = polynomial_sigma2_search({0, 0, 2}, 1'000'000, 3);
  ASSERT_TRUE(twice.has_value());
  EXPECT_EQ(twice->b, 2 * c_half);
  for (const auto& n : twice->shifts) {
    EXPECT_TRUE(mpz_perfect_square_p(BigInt(n / 2).get_mpz_t()));
    EXPECT_TRUE(mpz_perfect_square_p(BigInt((n + twice->b) / 2).get_mpz_t()));
  }
}

TEST(PolynomialProperty, SearchAgreesWithPairScan) {
  mixlab::testing::Gen gen(6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> coeffs = {gen.integer(-5, 5), gen.integer(-3, 3), gen.integer(1, 3)};
    const std::int64_t window = gen.integer(50, 400);
    const std::size_t repeats = 2 + gen.index(2);
    const auto vals = polynomial_values(coeffs, window);
    const std::set<std::int64_t> v(vals.begin(), vals.end());
    std::optional<std::int64_t> best;
    for (std::int64_t c = 1; c <= 2 * window && !best; ++c) {
      std::size_t hits = 0;
      for (auto x : v) hits += v.count(x + c);
      if (hits >= repeats) best = c;
    }
    const auto got = polynomial_sigma2_search(coeffs, window, repeats);
    ASSERT_EQ(got.has_value(), best.has_value());
    if (got) {
      EXPECT_EQ(got->b, *best);
      EXPECT_EQ(got->shifts.size(), repeats);
      for (const auto& n : got->shifts) {
        EXPECT_TRUE(v.count(n.get_si()) && v.count(n.get_si() + *best));
      }
    }
  }
}
