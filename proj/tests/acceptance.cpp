// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "eprop/ext_karoubi.hpp"
#include "eprop/group_algebra.hpp"
#include "eprop/partition_cat.hpp"
#include "eprop/prop_scom.hpp"

using namespace eprop;

namespace {

int g_failures = 0;
const int g_jobs = std::max(1u, std::thread::hardware_concurrency());

void report(int number, const std::string& what, bool ok, double seconds) {
  std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              seconds);
  if (!ok) ++g_failures;
}

template <class Fn>
void criterion(int number, const std::string& what, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report(number, what, ok, elapsed.count());
}

LambdaMorphism rho(const std::string& p) { return LambdaMorphism::basis(Partition::parse(p)); }

EMorphism nu(const std::string& images) {
  return EMorphism::basis(BasisTag::nu, Surjection::parse(images));
}

bool oracle_matches(const Surjection& f, const Surjection& h) {
  const auto xf = EMorphism::basis(BasisTag::nu, f);
  const auto xh = EMorphism::basis(BasisTag::nu, h);
  return nu_compose(xf, xh) == nu_from_mu(mu_compose(mu_from_nu(xf), mu_from_nu(xh)));
}

bool oracle_matches_act(const Permutation& s, const Surjection& f, const Permutation& t) {
  const auto x = EMorphism::basis(BasisTag::nu, f);
  return nu_act(s, x, t) ==
         nu_from_mu(mu_right_act(mu_left_act(s, mu_from_nu(x)), t));
}

bool oracle_matches_tensor(const Surjection& f, const Surjection& g) {
  const auto xf = EMorphism::basis(BasisTag::nu, f);
  const auto xg = EMorphism::basis(BasisTag::nu, g);
  return nu_tensor(xf, xg) == nu_from_mu(mu_tensor(mu_from_nu(xf), mu_from_nu(xg)));
}

}  // namespace

int main() {
  criterion(1, "rho_(3,3,1) * rho_(2,1^6) = (1/7)(6 rho_(4,3,1) + rho_(3,3,2))", [] {
    LinCombo<Partition> expect;
    expect.add(Partition::parse("4+3+1"), Rational(6, 7));
    expect.add(Partition::parse("3+3+2"), Rational(1, 7));
    return star_compose(rho("3+3+1"), rho("2+1+1+1+1+1+1")) == LambdaMorphism(8, 3, expect);
  });

  criterion(2, "P_{6,3} = (1/10)(3 rho_(4,1,1) + 6 rho_(3,2,1) + rho_(2,2,2)), both routes", [] {
    LinCombo<Partition> expect;
    expect.add(Partition::parse("4+1+1"), Rational(3, 10));
    expect.add(Partition::parse("3+2+1"), Rational(6, 10));
    expect.add(Partition::parse("2+2+2"), Rational(1, 10));
    const LambdaMorphism golden(6, 3, expect);
    return p_element(6, 3) == golden && p_element_recursive(6, 3) == golden;
  });

  criterion(3, "e_(1^2).nu_{[1,2,2]}.e_(1^3) = (1/6) sum nu_g and dim Ext^1(S_(1^2),S_(1^3)) = 1",
            [] {
              LinCombo<Surjection> expect;
              for (const auto& g : all_surjections(3, 2)) expect.add(g, Rational(1, 6));
              const bool golden = sandwich(e_sign(2), nu("1,2,2"), e_sign(3)) ==
                                  EMorphism(BasisTag::nu, 3, 2, expect);
              const auto r =
                  ext_dim(ExtQuery{Partition::parse("1+1"), Partition::parse("1+1+1")});
              return golden && r.dimension == 1 && r.degree == 1;
            });

  criterion(4, "nu_f.e_(2,1) expansion and dim Ext^1(S_(1^2),S_(2,1)) = dim Ext^1(S_(2),S_(2,1)) = 1",
            [] {
              const Surjection f = Surjection::parse("1,2,2");
              LinCombo<Surjection> expect;
              expect.add(f, Rational(1, 3));
              expect.add(compose(f, Permutation::parse("3,2,1")), Rational(1, 3));
              expect.add(compose(f, Permutation::parse("2,1,3")), Rational(-2, 3));
              const bool golden =
                  sandwich(GroupAlgebraElement::identity(2), EMorphism::basis(BasisTag::nu, f),
                           young_idempotent(Partition::parse("2+1"))) ==
                  EMorphism(BasisTag::nu, 3, 2, expect);
              return golden &&
                     ext_dim(ExtQuery{Partition::parse("1+1"), Partition::parse("2+1")})
                             .dimension == 1 &&
                     ext_dim(ExtQuery{Partition::parse("2"), Partition::parse("2+1")})
                             .dimension == 1;
            });

  criterion(5, "tensor-vs-symmetric table for m,n <= 5 is the identity pattern", [] {
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 5; ++m) {
        const auto r = ext_symmetric_power(n, m, ExtBounds::from_env(), g_jobs);
        if (r.dimension != (m == n ? 1 : 0)) return false;
        if (m >= n && r.degree != m - n) return false;
      }
    return true;
  });

  criterion(6, "dim e_(1^n).E(m,n).e_(1^m) = |Part(m,n)| for all m,n <= 6", [] {
    for (int n = 1; n <= 6; ++n)
      for (int m = 1; m <= 6; ++m) {
        const auto r = ext_dim(ExtQuery{Partition(std::vector<int>(n, 1)),
                                        Partition(std::vector<int>(m, 1))},
                               ExtBounds::from_env(), g_jobs);
        if (r.dimension != static_cast<int>(all_partitions(m, n).size())) return false;
      }
    return true;
  });

  criterion(7, "nu operations match the mu oracle (exhaustive <= 4, 1000 random <= 5)", [] {
    for (int n = 1; n <= 4; ++n)
      for (int m = n; m <= 4; ++m) {
        const auto outer = all_surjections(m, n);
        for (int l = m; l <= 4; ++l)
          for (const auto& f : outer)
            for (const auto& h : all_surjections(l, m))
              if (!oracle_matches(f, h)) return false;
        for (const auto& f : outer) {
          for (const auto& s : all_permutations(n))
            for (const auto& t : all_permutations(m))
              if (!oracle_matches_act(s, f, t)) return false;
          for (int m2 = 1; m2 <= 3; ++m2)
            for (int n2 = 1; n2 <= m2; ++n2)
              for (const auto& g : all_surjections(m2, n2))
                if (!oracle_matches_tensor(f, g)) return false;
        }
      }

    std::mt19937 rng(577215664);
    auto pick = [&rng](const auto& pool) {
      std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
      return pool[d(rng)];
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 5)(rng);
      const int m = std::uniform_int_distribution<int>(n, 5)(rng);
      const int l = std::uniform_int_distribution<int>(m, 5)(rng);
      const auto f = pick(all_surjections(m, n));
      const auto h = pick(all_surjections(l, m));
      if (!oracle_matches(f, h)) return false;
      const auto s = pick(all_permutations(n));
      const auto t = pick(all_permutations(m));
      if (!oracle_matches_act(s, f, t)) return false;
      const int m2 = std::uniform_int_distribution<int>(1, 5)(rng);
      const int n2 = std::uniform_int_distribution<int>(1, m2)(rng);
      const auto g = pick(all_surjections(m2, n2));
      if (!oracle_matches_tensor(f, g)) return false;
    }
    return true;
  });

  criterion(8, "star coefficients: sum 1 and m!-integral for m <= 7; associative on 200 triples",
            [] {
              for (int m = 1; m <= 7; ++m)
                for (int n = 1; n <= m; ++n)
                  for (int l = m; l <= m + 3; ++l)
                    for (const auto& lambda : all_partitions(m, n))
                      for (const auto& mu : all_partitions(l, m)) {
                        const auto prod = star_compose(LambdaMorphism::basis(lambda),
                                                       LambdaMorphism::basis(mu), g_jobs);
                        if (prod.value().coefficient_sum() != 1) return false;
                        for (const auto& [key, c] : prod.value().terms()) {
                          const Rational scaled = c * factorial(m);
                          if (boost::multiprecision::denominator(scaled) != 1) return false;
                        }
                      }

              std::mt19937 rng(1644934066);
              auto pick = [&rng](const auto& pool) {
                std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
                return pool[d(rng)];
              };
              for (int trial = 0; trial < 200; ++trial) {
                const int n = std::uniform_int_distribution<int>(1, 6)(rng);
                const int m = std::uniform_int_distribution<int>(n, 6)(rng);
                const int l = std::uniform_int_distribution<int>(m, 6)(rng);
                const int k = std::uniform_int_distribution<int>(l, 6)(rng);
                const auto x = LambdaMorphism::basis(pick(all_partitions(m, n)));
                const auto y = LambdaMorphism::basis(pick(all_partitions(l, m)));
                const auto z = LambdaMorphism::basis(pick(all_partitions(k, l)));
                if (star_compose(star_compose(x, y, g_jobs), z, g_jobs) !=
                    star_compose(x, star_compose(y, z, g_jobs), g_jobs))
                  return false;
              }
              return true;
            });

  criterion(9, "partition prop axioms (unit, assoc, interchange, symmetry) for size <= 5", [] {
    const auto report = verify_prop_axioms(5);
    return report.passed;
  });

  criterion(10, "|OSurj| recurrence up to 10 and Young idempotency/ideal dimensions for n <= 5",
            [] {
              for (int m = 1; m <= 10; ++m)
                for (int n = 1; n <= m; ++n) {
                  const auto count =
                      static_cast<long long>(all_order_preserving_surjections(m, n).size());
                  if (m < 10) {
                    const auto next = static_cast<long long>(
                        all_order_preserving_surjections(m + 1, n).size());
                    if (next * (m + 1 - n) != count * m) return false;
                  }
                }
              for (int n = 1; n <= 5; ++n)
                for (const auto& lambda : all_partitions_of(n)) {
                  const auto e = young_idempotent(lambda);
                  if (multiply(e, e) != e) return false;
                  std::vector<LinCombo<Permutation>> ideal;
                  for (const auto& s : all_permutations(n))
                    ideal.push_back(multiply(GroupAlgebraElement::of(s), e).value());
                  if (span_dimension(ideal) != hook_length_dim(lambda)) return false;
                }
              return true;
            });

  criterion(11, "sum dim(e_mu.E(m,n).e_lambda) dim S_mu dim S_lambda = |Surj(m,n)| for m,n <= 4",
            [] {
              for (int n = 1; n <= 4; ++n)
                for (int m = n; m <= 4; ++m) {
                  std::int64_t total = 0;
                  for (const auto& mu : all_partitions_of(n))
                    for (const auto& lambda : all_partitions_of(m))
                      total += static_cast<std::int64_t>(
                                   ext_dim(ExtQuery{mu, lambda}, ExtBounds::from_env(), g_jobs)
                                       .dimension) *
                               hook_length_dim(mu) * hook_length_dim(lambda);
                  if (total != static_cast<std::int64_t>(all_surjections(m, n).size()))
                    return false;
                }
              return true;
            });

  criterion(12, "rho_(m) |-> (-1)^{m(m-1)/2} mu_m respects operad composition up to arity 4", [] {
    const auto report = underlying_operad_check(4);
    return report.passed;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
