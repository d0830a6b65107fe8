#include "eprop/partition_cat.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace eprop {

namespace {

constexpr int kStarMiddleBound = 9;

int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

// rho_lambda * rho_mu by brute force over the middle symmetric group, as a
// weighted average: count, over sigma in S_m, the partition classes of
// f o sigma o g for the canonical representatives f, g.
LinCombo<Partition> basis_star(const Partition& lambda, const Partition& mu, int jobs) {
  const int m = lambda.sum();
  if (mu.part_count() != m) throw std::invalid_argument("star_compose: arity mismatch");
  if (m > kStarMiddleBound) throw std::invalid_argument("star_compose: middle arity bound exceeded");

  static std::map<std::pair<Partition, Partition>, LinCombo<Partition>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }

  const Surjection f = canonical_surjection(lambda);
  const Surjection g = canonical_surjection(mu);
  const int l = g.domain_size(), n = f.codomain_size();
  const auto perms = all_permutations(m);

  auto count_range = [&](std::size_t begin, std::size_t end,
                         std::map<std::vector<int>, std::int64_t>& counts) {
    std::vector<int> fibers(n);
    for (std::size_t k = begin; k < end; ++k) {
      const auto& sigma = perms[k];
      std::fill(fibers.begin(), fibers.end(), 0);
      for (int i = 1; i <= l; ++i) ++fibers[f(sigma(g(i))) - 1];
      std::sort(fibers.begin(), fibers.end(), std::greater<int>());
      ++counts[fibers];
    }
  };

  std::map<std::vector<int>, std::int64_t> counts;
  if (jobs <= 1 || perms.size() < 1024) {
    count_range(0, perms.size(), counts);
  } else {
    const int workers = std::min<std::size_t>(jobs, perms.size());
    std::vector<std::map<std::vector<int>, std::int64_t>> partial(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = perms.size() * w / workers;
      std::size_t end = perms.size() * (w + 1) / workers;
      threads.emplace_back(count_range, begin, end, std::ref(partial[w]));
    }
    for (auto& t : threads) t.join();
    for (const auto& part : partial)
      for (const auto& [key, cnt] : part) counts[key] += cnt;
  }

  LinCombo<Partition> result;
  const Rational total(1, factorial(m));
  for (const auto& [fibers, cnt] : counts)
    result.add(Partition(fibers), Rational(cnt) * total);

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(lambda, mu), result);
  return result;
}

}  // namespace

LambdaMorphism::LambdaMorphism(int m, int n, LinCombo<Partition> value)
    : m_(m), n_(n), value_(std::move(value)) {
  for (const auto& [p, c] : value_.terms())
    if (p.sum() != m_ || p.part_count() != n_)
      throw std::invalid_argument("LambdaMorphism key outside Part(m,n)");
}

LambdaMorphism LambdaMorphism::basis(const Partition& lambda) {
  return LambdaMorphism(lambda.sum(), lambda.part_count(), LinCombo<Partition>::basis(lambda));
}

LambdaMorphism add(const LambdaMorphism& a, const LambdaMorphism& b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain())
    throw std::invalid_argument("LambdaMorphism shape mismatch");
  return LambdaMorphism(a.domain(), a.codomain(), a.value() + b.value());
}

LambdaMorphism scale(const Rational& s, const LambdaMorphism& x) {
  return LambdaMorphism(x.domain(), x.codomain(), s * x.value());
}

LambdaMorphism quotient(const EMorphism& x) {
  if (x.tag() != BasisTag::nu)
    throw std::invalid_argument("quotient: expects the nu basis");
  LinCombo<Partition> out;
  for (const auto& [f, c] : x.value().terms()) out.add(proj(f), c);
  return LambdaMorphism(x.domain(), x.codomain(), std::move(out));
}

LambdaMorphism star_compose(const LambdaMorphism& x, const LambdaMorphism& y, int jobs) {
  if (y.codomain() != x.domain())
    throw std::invalid_argument("star_compose: arity mismatch");
  LinCombo<Partition> out;
  for (const auto& [lam, c] : x.value().terms())
    for (const auto& [mu, d] : y.value().terms()) {
      LinCombo<Partition> term = basis_star(lam, mu, jobs);
      term *= c * d;
      out += term;
    }
  return LambdaMorphism(y.domain(), x.codomain(), std::move(out));
}

LambdaMorphism star_compose_fast(const Partition& lambda) {
  const int m = lambda.sum(), n = lambda.part_count();
  LinCombo<Partition> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> parts = lambda.parts();
    parts[i] += 1;
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    out.add(Partition(std::move(parts)), Rational(lambda.parts()[i], m));
  }
  return LambdaMorphism(m + 1, n, std::move(out));
}

LambdaMorphism p_element(int m, int n) {
  if (m < n || n < 0) throw std::invalid_argument("p_element: requires m >= n >= 0");
  const auto osurj = all_order_preserving_surjections(m, n);
  LinCombo<Partition> out;
  const Rational w(1, static_cast<std::int64_t>(osurj.size()));
  for (const auto& s : osurj) out.add(proj(s), w);
  return LambdaMorphism(m, n, std::move(out));
}

LambdaMorphism p_element_recursive(int m, int n) {
  if (m < n || n < 0) throw std::invalid_argument("p_element: requires m >= n >= 0");
  std::vector<int> ones(n, 1);
  LambdaMorphism result = LambdaMorphism::basis(Partition(ones));
  for (int k = n + 1; k <= m; ++k) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), k - 2, 1);
    result = star_compose(result, LambdaMorphism::basis(Partition(parts)));
  }
  return result;
}

LambdaMorphism odot_tensor(const LambdaMorphism& x, const LambdaMorphism& y) {
  const int m = x.domain() + y.domain(), n = x.codomain() + y.codomain();
  if (x.is_zero() || y.is_zero()) return LambdaMorphism(m, n);
  if (x.domain() == 0 && x.codomain() == 0)
    return scale(x.value().coefficient_sum(), LambdaMorphism(y.domain(), y.codomain(), y.value()));
  if (y.domain() == 0 && y.codomain() == 0)
    return scale(y.value().coefficient_sum(), LambdaMorphism(x.domain(), x.codomain(), x.value()));
  const int sign = parity_sign(static_cast<long long>(x.degree()) * y.codomain());
  const Rational coeff = sign * x.value().coefficient_sum() * y.value().coefficient_sum();
  return scale(coeff, p_element(m, n));
}

LambdaMorphism lambda_symmetry(int m, int m_prime) {
  std::vector<int> ones(m + m_prime, 1);
  const int sign = parity_sign(static_cast<long long>(m) * m_prime);
  return scale(Rational(sign), LambdaMorphism::basis(Partition(ones)));
}

VerifyReport verify_prop_axioms(int max_total_size) {
  VerifyReport report;

  struct BasisElem {
    int m, n;
    Partition p;
  };
  std::vector<BasisElem> basis{{0, 0, Partition()}};
  for (int m = 1; m <= max_total_size; ++m)
    for (int n = 1; n <= m; ++n)
      for (const auto& p : all_partitions(m, n)) basis.push_back({m, n, p});

  // Unit.
  const LambdaMorphism unit = LambdaMorphism::basis(Partition());
  for (const auto& b : basis) {
    const auto x = LambdaMorphism::basis(b.p);
    report.record(odot_tensor(unit, x) == x && odot_tensor(x, unit) == x,
                  "unit axiom at rho_" + b.p.str());
  }

  // (.)-associativity.
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        if (a.m + b.m + c.m > max_total_size) continue;
        const auto xa = LambdaMorphism::basis(a.p);
        const auto xb = LambdaMorphism::basis(b.p);
        const auto xc = LambdaMorphism::basis(c.p);
        report.record(
            odot_tensor(odot_tensor(xa, xb), xc) == odot_tensor(xa, odot_tensor(xb, xc)),
            "odot associativity at " + a.p.str() + " | " + b.p.str() + " | " + c.p.str());
      }

  // Interchange with the Koszul sign.
  for (const auto& lam : basis)
    for (const auto& lam2 : basis)
      for (const auto& beta : basis)
        for (const auto& beta2 : basis) {
          if (beta.n != lam.m || beta2.n != lam2.m) continue;
          if (beta.m + beta2.m > max_total_size) continue;
          const auto lhs = star_compose(
              odot_tensor(LambdaMorphism::basis(lam.p), LambdaMorphism::basis(lam2.p)),
              odot_tensor(LambdaMorphism::basis(beta.p), LambdaMorphism::basis(beta2.p)));
          auto rhs = odot_tensor(
              star_compose(LambdaMorphism::basis(lam.p), LambdaMorphism::basis(beta.p)),
              star_compose(LambdaMorphism::basis(lam2.p), LambdaMorphism::basis(beta2.p)));
          const int sign =
              parity_sign(static_cast<long long>(beta.m - beta.n) * (lam2.m - lam2.n));
          rhs = scale(Rational(sign), rhs);
          report.record(lhs == rhs, "interchange at (" + lam.p.str() + "," + lam2.p.str() +
                                        ")*(" + beta.p.str() + "," + beta2.p.str() + ")");
        }

  // Symmetry axiom.
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.m + b.m > max_total_size || a.m + b.m == 0) continue;
      const auto xa = LambdaMorphism::basis(a.p);
      const auto xb = LambdaMorphism::basis(b.p);
      const int koszul = parity_sign(static_cast<long long>(a.m - a.n) * (b.m - b.n));
      const auto lhs =
          scale(Rational(koszul), star_compose(odot_tensor(xb, xa), lambda_symmetry(a.m, b.m)));
      const auto mid = star_compose(lambda_symmetry(a.n, b.n), odot_tensor(xa, xb));
      bool ok = lhs == mid;
      if (a.m > 0 && b.m > 0) {
        // With both factors non-empty the product collapses onto P, giving a
        // closed form for both sides.
        const auto rhs = scale(Rational(parity_sign(static_cast<long long>(a.m) * b.n)),
                               p_element(a.m + b.m, a.n + b.n));
        ok = ok && mid == rhs;
      }
      report.record(ok, "symmetry axiom at (" + a.p.str() + "," + b.p.str() + ")");
    }

  return report;
}

VerifyReport underlying_operad_check(int max_arity) {
  VerifyReport report;
  // Compositions (n_1,...,n_k) with k >= 1 and sum <= max_arity.
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (!cur.empty()) comps.push_back(cur);
    for (int v = 1; v <= rest; ++v) {
      cur.push_back(v);
      self(self, rest - v);
      cur.pop_back();
    }
  };
  rec(rec, max_arity);

  for (const auto& ns : comps) {
    const int k = static_cast<int>(ns.size());
    const int total = std::accumulate(ns.begin(), ns.end(), 0);
    LambdaMorphism tensor = LambdaMorphism::basis(Partition(std::vector<int>{ns[0]}));
    for (int i = 1; i < k; ++i)
      tensor = odot_tensor(tensor, LambdaMorphism::basis(Partition(std::vector<int>{ns[i]})));
    const auto composite =
        star_compose(LambdaMorphism::basis(Partition(std::vector<int>{k})), tensor);

    // Transport through rho_{(m)} |-> (-1)^{m(m-1)/2} mu_m on both sides.
    long long exponent = static_cast<long long>(k) * (k - 1) / 2 +
                         static_cast<long long>(total) * (total - 1) / 2 + kappa(ns);
    for (int v : ns) exponent += static_cast<long long>(v) * (v - 1) / 2;
    const auto expected = scale(Rational(parity_sign(exponent)),
                                LambdaMorphism::basis(Partition(std::vector<int>{total})));
    std::string label = "operad composite mu_" + std::to_string(k) + "(";
    for (std::size_t i = 0; i < ns.size(); ++i)
      label += (i ? "," : "") + std::to_string(ns[i]);
    label += ")";
    report.record(composite == expected, label);
  }
  return report;
}

}  // namespace eprop
