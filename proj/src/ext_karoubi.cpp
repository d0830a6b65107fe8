#include "eprop/ext_karoubi.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "eprop/group_algebra.hpp"

namespace eprop {

namespace {

// A group algebra element scaled to integer coefficients, with the sign of
// each permutation folded in (phi twists by the sign).
struct ScaledElement {
  std::vector<std::pair<std::vector<int>, std::int64_t>> terms;
  std::int64_t denom = 1;
};

ScaledElement scale_to_integers(const GroupAlgebraElement& a) {
  BigInt lcm = 1;
  for (const auto& [p, c] : a.value().terms())
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  ScaledElement out;
  out.denom = static_cast<std::int64_t>(lcm);
  for (const auto& [p, c] : a.value().terms()) {
    const BigInt scaled = boost::multiprecision::numerator(c) *
                          (lcm / boost::multiprecision::denominator(c));
    out.terms.emplace_back(p.images(), static_cast<std::int64_t>(scaled) * p.sign());
  }
  return out;
}

// phi(a) <> nu_f <> phi(b) over integer accumulators: the coefficient of
// nu_g collects sum a'_sigma b'_tau over sigma o f o tau = g.
EMorphism sandwich_kernel(const ScaledElement& a, const Surjection& f, const ScaledElement& b,
                          const std::vector<Surjection>& surjs,
                          const std::vector<std::int32_t>& code_to_index) {
  const int m = f.domain_size(), n = f.codomain_size();
  std::vector<std::int64_t> acc(surjs.size(), 0);
  std::vector<int> sf(m), g(m);
  for (const auto& [sigma, c1] : a.terms) {
    for (int i = 0; i < m; ++i) sf[i] = sigma[f.images()[i] - 1];
    for (const auto& [tau, c2] : b.terms) {
      std::size_t code = 0;
      for (int i = m - 1; i >= 0; --i) code = code * n + (sf[tau[i] - 1] - 1);
      acc[code_to_index[code]] += c1 * c2;
    }
  }
  LinCombo<Surjection> value;
  const Rational unit(BigInt(1), BigInt(a.denom) * b.denom);
  for (std::size_t i = 0; i < surjs.size(); ++i)
    if (acc[i] != 0) value.add(surjs[i], Rational(acc[i]) * unit);
  return EMorphism(BasisTag::nu, m, n, std::move(value));
}

std::string normalized_fingerprint(const LinCombo<Surjection>& v) {
  if (v.is_zero()) return "0";
  const Rational lead = v.terms().begin()->second;
  std::string out;
  for (const auto& [k, c] : v.terms()) {
    out += k.str();
    out += '=';
    out += format_rational(c / lead);
    out += ';';
  }
  return out;
}

struct SandwichFamily {
  std::vector<EMorphism> unique_vectors;
};

// All sandwiches e_left . nu_f . e_right over f in Surj(m,n), with exact
// duplicates (up to scalar) collapsed before the rank step.
SandwichFamily sandwich_family(const GroupAlgebraElement& left,
                               const GroupAlgebraElement& right, int m, int n, int jobs) {
  const auto surjs = all_surjections(m, n);
  SandwichFamily family;
  if (surjs.empty()) return family;

  std::size_t code_space = 1;
  for (int i = 0; i < m; ++i) {
    code_space *= n;
    if (code_space > (1u << 26))
      throw std::invalid_argument("ext: work estimate above the configured ceiling");
  }
  std::vector<std::int32_t> code_to_index(code_space, -1);
  for (std::size_t i = 0; i < surjs.size(); ++i) {
    std::size_t code = 0;
    for (int k = m - 1; k >= 0; --k) code = code * n + (surjs[i].images()[k] - 1);
    code_to_index[code] = static_cast<std::int32_t>(i);
  }

  const ScaledElement a = scale_to_integers(left);
  const ScaledElement b = scale_to_integers(right);

  std::vector<EMorphism> vectors(surjs.size(), EMorphism::zero(BasisTag::nu, m, n));
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      vectors[i] = sandwich_kernel(a, surjs[i], b, surjs, code_to_index);
  };
  if (jobs <= 1 || surjs.size() < 8) {
    run(0, surjs.size());
  } else {
    const int workers = std::min<int>(jobs, static_cast<int>(surjs.size()));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(run, surjs.size() * w / workers, surjs.size() * (w + 1) / workers);
    for (auto& t : threads) t.join();
  }

  std::unordered_set<std::string> seen;
  for (auto& v : vectors) {
    if (v.is_zero()) continue;
    if (seen.insert(normalized_fingerprint(v.value())).second)
      family.unique_vectors.push_back(std::move(v));
  }
  return family;
}

ExtResult rank_result(SandwichFamily family, int degree) {
  ExtResult result;
  result.degree = degree;
  std::vector<LinCombo<Surjection>> raw;
  raw.reserve(family.unique_vectors.size());
  for (const auto& v : family.unique_vectors) raw.push_back(v.value());
  for (std::size_t i : independent_subset(raw))
    result.basis.push_back(family.unique_vectors[i]);
  result.dimension = static_cast<int>(result.basis.size());
  return result;
}

void check_bounds(int m, int n, const ExtBounds& bounds) {
  if (m > bounds.max_m || n > bounds.max_n)
    throw std::invalid_argument("ext: arity bound exceeded (raise EPROP_MAX_M/EPROP_MAX_N)");
}

}  // namespace

ExtBounds ExtBounds::from_env() {
  ExtBounds b;
  if (const char* v = std::getenv("EPROP_MAX_M")) b.max_m = std::atoi(v);
  if (const char* v = std::getenv("EPROP_MAX_N")) b.max_n = std::atoi(v);
  return b;
}

ExtResult ext_dim(const ExtQuery& q, const ExtBounds& bounds, int jobs) {
  const int n = q.mu.sum(), m = q.lambda.sum();
  if (m < n) return ExtResult{0, m - n, {}};
  check_bounds(m, n, bounds);
  return rank_result(
      sandwich_family(young_idempotent(q.mu), young_idempotent(q.lambda), m, n, jobs), m - n);
}

ExtResult ext_symmetric_power(int n, int m, const ExtBounds& bounds, int jobs) {
  if (m < n) return ExtResult{0, m - n, {}};
  check_bounds(m, n, bounds);
  return rank_result(
      sandwich_family(GroupAlgebraElement::identity(n), e_triv(m), m, n, jobs), m - n);
}

std::vector<ExtTableEntry> ext_table(int max_m, int max_n, ExtFamily family,
                                     const ExtBounds& bounds, int jobs) {
  std::vector<ExtTableEntry> table;
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n) {
      switch (family) {
        case ExtFamily::exterior: {
          std::vector<int> mu(n, 1), lambda(m, 1);
          const ExtQuery q{Partition(mu), Partition(lambda)};
          const auto r = ext_dim(q, bounds, jobs);
          table.push_back({q.mu.str(), q.lambda.str(), m, n, r.degree, r.dimension});
          break;
        }
        case ExtFamily::tensor_symmetric: {
          const auto r = ext_symmetric_power(n, m, bounds, jobs);
          table.push_back({"T^" + std::to_string(n), "S^" + std::to_string(m), m, n, r.degree,
                           r.dimension});
          break;
        }
        case ExtFamily::simple_simple: {
          for (const auto& mu : all_partitions_of(n))
            for (const auto& lambda : all_partitions_of(m)) {
              const auto r = ext_dim(ExtQuery{mu, lambda}, bounds, jobs);
              table.push_back({mu.str(), lambda.str(), m, n, r.degree, r.dimension});
            }
          break;
        }
      }
    }
  return table;
}

}  // namespace eprop
