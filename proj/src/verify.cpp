#include "eprop/verify.hpp"

#include <stdexcept>

#include "eprop/ext_karoubi.hpp"
#include "eprop/group_algebra.hpp"

namespace eprop {

namespace {

EMorphism nu(const std::string& images) {
  return EMorphism::basis(BasisTag::nu, Surjection::parse(images));
}

EMorphism oracle_compose(const EMorphism& x, const EMorphism& y) {
  return nu_from_mu(mu_compose(mu_from_nu(x), mu_from_nu(y)));
}

EMorphism oracle_act(const Permutation& s, const EMorphism& x, const Permutation& t) {
  return nu_from_mu(mu_right_act(mu_left_act(s, mu_from_nu(x)), t));
}

EMorphism oracle_tensor(const EMorphism& x, const EMorphism& y) {
  return nu_from_mu(mu_tensor(mu_from_nu(x), mu_from_nu(y)));
}

SuiteResult suite_nu_mu_oracle(int max_size) {
  const int bound = max_size > 0 ? max_size : 4;
  SuiteResult result{"nu-mu-oracle", {}};

  for (int n = 1; n <= bound; ++n)
    for (int m = n; m <= bound; ++m)
      for (int l = m; l <= bound; ++l) {
        bool ok = true;
        for (const auto& f : all_surjections(m, n))
          for (const auto& h : all_surjections(l, m)) {
            const auto xf = EMorphism::basis(BasisTag::nu, f);
            const auto xh = EMorphism::basis(BasisTag::nu, h);
            ok = ok && nu_compose(xf, xh) == oracle_compose(xf, xh);
          }
        result.checks.push_back({"composition agrees with the mu oracle on Surj(" +
                                     std::to_string(m) + "," + std::to_string(n) + ") o Surj(" +
                                     std::to_string(l) + "," + std::to_string(m) + ")",
                                 ok});
      }

  for (int n = 1; n <= bound; ++n)
    for (int m = n; m <= bound; ++m) {
      bool ok = true;
      for (const auto& f : all_surjections(m, n)) {
        const auto x = EMorphism::basis(BasisTag::nu, f);
        for (const auto& s : all_permutations(n))
          for (const auto& t : all_permutations(m))
            ok = ok && nu_act(s, x, t) == oracle_act(s, x, t);
      }
      result.checks.push_back({"two-sided action agrees with the mu oracle on Surj(" +
                                   std::to_string(m) + "," + std::to_string(n) + ")",
                               ok});
    }

  for (int n = 1; n <= bound - 1; ++n)
    for (int m = n; m <= bound - 1; ++m)
      for (int n2 = 1; n2 <= bound - m; ++n2)
        for (int m2 = n2; m2 <= bound; ++m2) {
          if (m + m2 > bound + 2) continue;
          bool ok = true;
          for (const auto& f : all_surjections(m, n))
            for (const auto& g : all_surjections(m2, n2)) {
              const auto xf = EMorphism::basis(BasisTag::nu, f);
              const auto xg = EMorphism::basis(BasisTag::nu, g);
              const auto closed = nu_tensor(xf, xg);
              ok = ok && closed == oracle_tensor(xf, xg) &&
                   closed == nu_tensor_via_reduction(xf, xg);
            }
          result.checks.push_back(
              {"tensor agrees with the mu oracle and the reduction on Surj(" +
                   std::to_string(m) + "," + std::to_string(n) + ") x Surj(" +
                   std::to_string(m2) + "," + std::to_string(n2) + ")",
               ok});
        }

  for (int n = 1; n <= std::min(bound, 4); ++n) {
    bool ok = true;
    for (const auto& s : all_permutations(n))
      for (const auto& t : all_permutations(n)) {
        const auto lhs = phi(multiply(GroupAlgebraElement::of(s), GroupAlgebraElement::of(t)));
        ok = ok && lhs == nu_compose(phi(GroupAlgebraElement::of(s)),
                                     phi(GroupAlgebraElement::of(t)));
      }
    result.checks.push_back({"phi is an algebra map on S_" + std::to_string(n), ok});
  }

  return result;
}

SuiteResult suite_prop_axioms(int max_size) {
  const int bound = max_size > 0 ? max_size : 6;
  SuiteResult result{"prop-axioms", {}};

  // Interchange law with the Koszul sign, on nu generators.
  {
    bool ok = true;
    for (int n = 1; n <= bound; ++n)
      for (int m = n; m <= bound; ++m)
        for (int l = m; l <= bound; ++l)
          for (int n2 = 1; n2 <= bound; ++n2)
            for (int m2 = n2; m2 <= bound; ++m2)
              for (int l2 = m2; l2 + l <= bound; ++l2)
                for (const auto& f : all_surjections(m, n))
                  for (const auto& g : all_surjections(m2, n2))
                    for (const auto& h : all_surjections(l, m))
                      for (const auto& k : all_surjections(l2, m2)) {
                        const auto xf = EMorphism::basis(BasisTag::nu, f);
                        const auto xg = EMorphism::basis(BasisTag::nu, g);
                        const auto xh = EMorphism::basis(BasisTag::nu, h);
                        const auto xk = EMorphism::basis(BasisTag::nu, k);
                        const auto lhs = nu_compose(nu_tensor(xf, xg), nu_tensor(xh, xk));
                        const int sign =
                            ((m2 - n2) * (l - m)) % 2 == 0 ? 1 : -1;  // d(g) d(h)
                        const auto rhs = scale(
                            Rational(sign), nu_tensor(nu_compose(xf, xh), nu_compose(xg, xk)));
                        ok = ok && lhs == rhs;
                      }
    result.checks.push_back({"interchange law with Koszul sign on generators", ok});
  }

  // Symmetry axiom through the block-swap isomorphisms.
  {
    bool ok = true;
    for (int m = 0; m <= 5; ++m)
      for (int m2 = 0; m + m2 <= 5; ++m2)
        for (int n = (m ? 1 : 0); n <= m; ++n)
          for (int n2 = (m2 ? 1 : 0); n2 <= m2; ++n2)
            for (const auto& f : all_surjections(m, n))
              for (const auto& g : all_surjections(m2, n2)) {
                const auto xf = EMorphism::basis(BasisTag::nu, f);
                const auto xg = EMorphism::basis(BasisTag::nu, g);
                const int sign = ((m - n) * (m2 - n2)) % 2 == 0 ? 1 : -1;
                const auto lhs = scale(
                    Rational(sign), nu_compose(nu_tensor(xg, xf), symmetry_iso(m, m2)));
                const auto rhs = nu_compose(symmetry_iso(n, n2), nu_tensor(xf, xg));
                ok = ok && lhs == rhs;
              }
    result.checks.push_back({"symmetry axiom on generator pairs", ok});
  }

  // Associativity of composition and tensor at small sizes.
  {
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
      for (int m = n; m <= 3; ++m)
        for (int l = m; l <= 4; ++l)
          for (int k = l; k <= 4; ++k)
            for (const auto& f : all_surjections(m, n))
              for (const auto& g : all_surjections(l, m))
                for (const auto& h : all_surjections(k, l)) {
                  const auto xf = EMorphism::basis(BasisTag::nu, f);
                  const auto xg = EMorphism::basis(BasisTag::nu, g);
                  const auto xh = EMorphism::basis(BasisTag::nu, h);
                  ok = ok && nu_compose(nu_compose(xf, xg), xh) ==
                                 nu_compose(xf, nu_compose(xg, xh));
                }
    result.checks.push_back({"composition associativity on generators", ok});
  }
  {
    bool ok = true;
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= m; ++n)
        for (int m2 = 1; m2 <= 2; ++m2)
          for (int n2 = 1; n2 <= m2; ++n2)
            for (int m3 = 1; m3 <= 2; ++m3)
              for (int n3 = 1; n3 <= m3; ++n3)
                for (const auto& f : all_surjections(m, n))
                  for (const auto& g : all_surjections(m2, n2))
                    for (const auto& h : all_surjections(m3, n3)) {
                      const auto xf = EMorphism::basis(BasisTag::nu, f);
                      const auto xg = EMorphism::basis(BasisTag::nu, g);
                      const auto xh = EMorphism::basis(BasisTag::nu, h);
                      ok = ok && nu_tensor(nu_tensor(xf, xg), xh) ==
                                     nu_tensor(xf, nu_tensor(xg, xh));
                    }
    result.checks.push_back({"tensor associativity on generators", ok});
  }

  // The surjection basis is free: rank equals |Surj(m,n)|.
  {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
      for (int m = n; m <= 4; ++m) {
        std::vector<LinCombo<Surjection>> vs;
        for (const auto& f : all_surjections(m, n))
          vs.push_back(LinCombo<Surjection>::basis(f));
        ok = ok && span_dimension(vs) == static_cast<int>(all_surjections(m, n).size());
      }
    result.checks.push_back({"dim E(m,n) equals |Surj(m,n)|", ok});
  }

  return result;
}

SuiteResult suite_partition_prop(int max_size) {
  const int bound = max_size > 0 ? max_size : 4;
  const auto report = verify_prop_axioms(bound);
  SuiteResult result{"partition-prop", {}};
  result.checks.push_back({"partition prop axioms, total size <= " + std::to_string(bound) +
                               " (" + std::to_string(report.checks) + " identities)",
                           report.passed});
  for (const auto& f : report.failures) result.checks.push_back({"counterexample: " + f, false});
  return result;
}

SuiteResult suite_operad_remark(int max_size) {
  const int bound = max_size > 0 ? max_size : 4;
  const auto report = underlying_operad_check(bound);
  SuiteResult result{"operad-remark", {}};
  result.checks.push_back({"underlying operad map respects composition up to arity " +
                               std::to_string(bound) + " (" + std::to_string(report.checks) +
                               " composites)",
                           report.passed});
  for (const auto& f : report.failures) result.checks.push_back({"counterexample: " + f, false});
  return result;
}

SuiteResult suite_paper_examples(int /*max_size*/, int jobs) {
  SuiteResult result{"paper-examples", {}};
  auto check = [&](bool ok, const std::string& name) { result.checks.push_back({name, ok}); };

  // Displayed idempotents.
  {
    LinCombo<Permutation> v;
    v.add(Permutation::identity(2), Rational(1, 2));
    v.add(Permutation::parse("2,1"), Rational(-1, 2));
    check(e_sign(2) == GroupAlgebraElement(2, v), "e_(1^2) = (1/2)(1 - tau_{1,2})");
  }
  {
    LinCombo<Permutation> v;
    v.add(Permutation::identity(2), Rational(1, 2));
    v.add(Permutation::parse("2,1"), Rational(1, 2));
    check(e_triv(2) == GroupAlgebraElement(2, v), "e_(2) = (1/2)(1 + tau_{1,2})");
  }
  {
    LinCombo<Permutation> v;
    v.add(Permutation::identity(3), Rational(1, 3));
    v.add(Permutation::parse("3,2,1"), Rational(-1, 3));  // tau_{1,3}
    v.add(Permutation::parse("2,1,3"), Rational(1, 3));   // tau_{1,2}
    v.add(Permutation::parse("3,1,2"), Rational(-1, 3));  // the cycle (132)
    check(young_idempotent(Partition::parse("2+1")) == GroupAlgebraElement(3, v),
          "e_(2,1) = (1/3)(1 - tau_{1,3} + tau_{1,2} - (132))");
  }
  check(young_idempotent(Partition::parse("1+1+1")) == e_sign(3),
        "e_(1^3) equals the sign idempotent");

  // nu generators: theorem instances.
  check(nu_act(Permutation::parse("2,1"), nu("1,1,2"), Permutation::identity(3)) ==
            scale(Rational(-1), nu("2,2,1")),
        "tau_{1,2} . nu_{[1,1,2]} = -nu_{[2,2,1]}");
  check(nu_tensor(nu("1,1"), nu("1,1")) == nu("1,1,2,2"),
        "nu_{[1,1]} (x) nu_{[1,1]} = +nu_{[1,1,2,2]}");
  check(nu_compose(nu("1,1"), nu("1,2,2")) == nu("1,1,1"),
        "nu_{[1,1]} <> nu_{[1,2,2]} = nu_{[1,1,1]}");
  {
    bool ok = true;
    for (const auto& s : all_permutations(3)) {
      const auto left = nu_from_mu(EMorphism::basis(BasisTag::mu, Surjection(s)));
      ok = ok && left == scale(Rational(s.sign()), EMorphism::basis(BasisTag::nu, Surjection(s)));
    }
    check(ok, "nu_sigma = eps(sigma) mu_sigma on S_3");
  }

  // Suspended-commutative relation through the mu oracle.
  {
    const auto lhs = mu_compose(EMorphism::basis(BasisTag::mu, Surjection::parse("1,1")),
                                EMorphism::basis(BasisTag::mu, Surjection::parse("1,1,2")));
    const auto rhs = mu_compose(EMorphism::basis(BasisTag::mu, Surjection::parse("1,1")),
                                EMorphism::basis(BasisTag::mu, Surjection::parse("1,2,2")));
    check(lhs == scale(Rational(-1), rhs), "mu_2 o_1 mu_2 = -mu_2 o_2 mu_2");
  }

  // Composition of partitions.
  {
    LinCombo<Partition> expect;
    expect.add(Partition::parse("4+3+1"), Rational(6, 7));
    expect.add(Partition::parse("3+3+2"), Rational(1, 7));
    const auto lhs = star_compose(LambdaMorphism::basis(Partition::parse("3+3+1")),
                                  LambdaMorphism::basis(Partition::parse("2+1+1+1+1+1+1")), jobs);
    check(lhs == LambdaMorphism(8, 3, expect),
          "rho_(3,3,1) * rho_(2,1^6) = (1/7)(6 rho_(4,3,1) + rho_(3,3,2))");
    check(star_compose_fast(Partition::parse("3+3+1")) == LambdaMorphism(8, 3, expect),
          "fast path reproduces the displayed example");
  }
  {
    LinCombo<Partition> expect;
    expect.add(Partition::parse("4+1+1"), Rational(3, 10));
    expect.add(Partition::parse("3+2+1"), Rational(6, 10));
    expect.add(Partition::parse("2+2+2"), Rational(1, 10));
    const LambdaMorphism golden(6, 3, expect);
    check(p_element(6, 3) == golden, "P_{6,3} closed form");
    check(p_element_recursive(6, 3) == golden, "P_{6,3} recursive *-product");
  }
  {
    bool ok = true;
    for (int m = 1; m <= 6; ++m) {
      ok = ok && p_element(m, m) == LambdaMorphism::basis(Partition(std::vector<int>(m, 1)));
      if (m >= 2) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), m - 2, 1);
        ok = ok && p_element(m, m - 1) == LambdaMorphism::basis(Partition(parts));
      }
    }
    check(ok, "P_{m,m} = rho_(1^m) and P_{m,m-1} = rho_(2,1^{m-2})");
  }
  {
    bool ok = true;
    for (int m = 1; m <= 4; ++m) {
      const auto one = LambdaMorphism::basis(Partition(std::vector<int>{1}));
      ok = ok && odot_tensor(one, LambdaMorphism::basis(Partition(std::vector<int>(m, 1)))) ==
                     LambdaMorphism::basis(Partition(std::vector<int>(m + 1, 1)));
      std::vector<int> hook{2};
      hook.insert(hook.end(), m, 1);
      std::vector<int> hook_up{2};
      hook_up.insert(hook_up.end(), m + 1, 1);
      ok = ok && odot_tensor(one, LambdaMorphism::basis(Partition(hook))) ==
                     LambdaMorphism::basis(Partition(hook_up));
    }
    check(ok, "rho_(1) (.) rho_(1^m) and rho_(1) (.) rho_(2,1^m) normalizations");
  }

  // Idempotent sandwiches.
  {
    LinCombo<Surjection> expect;
    for (const auto& g : all_surjections(3, 2)) expect.add(g, Rational(1, 6));
    const auto lhs = sandwich(e_sign(2), nu("1,2,2"), e_sign(3));
    check(lhs == EMorphism(BasisTag::nu, 3, 2, expect),
          "e_(1^2) . nu_{[1,2,2]} . e_(1^3) = (1/6) sum nu_g");
  }
  {
    const Surjection f = Surjection::parse("1,2,2");
    LinCombo<Surjection> expect;
    expect.add(f, Rational(1, 3));
    expect.add(compose(f, Permutation::parse("3,2,1")), Rational(1, 3));
    expect.add(compose(f, Permutation::parse("2,1,3")), Rational(-2, 3));
    const auto lhs = sandwich(GroupAlgebraElement::identity(2),
                              EMorphism::basis(BasisTag::nu, f),
                              young_idempotent(Partition::parse("2+1")));
    check(lhs == EMorphism(BasisTag::nu, 3, 2, expect),
          "nu_f . e_(2,1) = (1/3)(nu_f + nu_{f tau_{1,3}} - 2 nu_{f tau_{1,2}})");
  }

  // Ext dimensions.
  check(ext_dim({Partition::parse("1+1"), Partition::parse("1+1+1")}, ExtBounds{}, jobs)
                .dimension == 1,
        "dim Ext^1(S_(1^2), S_(1^3)) = 1");
  check(ext_dim({Partition::parse("1+1"), Partition::parse("2+1")}, ExtBounds{}, jobs)
                .dimension == 1,
        "dim Ext^1(S_(1^2), S_(2,1)) = 1");
  check(ext_dim({Partition::parse("2"), Partition::parse("2+1")}, ExtBounds{}, jobs)
                .dimension == 1,
        "dim Ext^1(S_(2), S_(2,1)) = 1");
  check(ext_symmetric_power(3, 3, ExtBounds{}, jobs).dimension == 1,
        "Ext(T^3, S^3) is one-dimensional");
  check(ext_symmetric_power(2, 4, ExtBounds{}, jobs).dimension == 0,
        "Ext(T^2, S^4) vanishes");
  check(ext_dim({Partition::parse("1+1+1"), Partition::parse("1+1+1+1+1")}, ExtBounds{}, jobs)
                .dimension == static_cast<int>(all_partitions(5, 3).size()),
        "dim Ext^2(S_(1^3), S_(1^5)) = |Part(5,3)|");

  return result;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"nu-mu-oracle", "prop-axioms", "partition-prop", "paper-examples", "operad-remark"};
}

SuiteResult run_verify_suite(const std::string& suite, int max_size, int jobs) {
  if (suite == "nu-mu-oracle") return suite_nu_mu_oracle(max_size);
  if (suite == "prop-axioms") return suite_prop_axioms(max_size);
  if (suite == "partition-prop") return suite_partition_prop(max_size);
  if (suite == "paper-examples") return suite_paper_examples(max_size, jobs);
  if (suite == "operad-remark") return suite_operad_remark(max_size);
  throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace eprop
