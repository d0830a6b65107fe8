#include "eprop/prop_scom.hpp"

#include <cassert>
#include <stdexcept>

namespace eprop {

namespace {

void check_same_shape(const EMorphism& a, const EMorphism& b) {
  if (a.tag() != b.tag() || a.domain() != b.domain() || a.codomain() != b.codomain())
    throw std::invalid_argument("EMorphism shape/basis mismatch");
}

// Adjacent transposition indices a_1,...,a_k with
// sigma = tau_{a_k} o ... o tau_{a_1}.
std::vector<int> adjacent_word(const Permutation& sigma) {
  std::vector<int> v = sigma.images();
  std::vector<int> swaps;
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        swaps.push_back(static_cast<int>(j) + 1);
        dirty = true;
      }
    }
  }
  return swaps;
}

int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

// The diagonal basis-change coefficient nu_f / mu_f.
int nu_mu_factor(const Surjection& f) {
  auto dec = decompose(f);
  return dec.unshuffle.sign() * parity_sign(kappa(f));
}

EMorphism mu_left_act_adjacent(int i, const EMorphism& x) {
  LinCombo<Surjection> out;
  const auto tau = Permutation::adjacent_transposition(x.codomain(), i);
  for (const auto& [f, c] : x.value().terms()) {
    const auto p = f.fiber_sizes();
    const int sign = parity_sign(static_cast<long long>(p[i - 1] - 1) * (p[i] - 1));
    out.add(compose(tau, f), sign * c);
  }
  return EMorphism(BasisTag::mu, x.domain(), x.codomain(), std::move(out));
}

}  // namespace

EMorphism::EMorphism(BasisTag tag, int m, int n, LinCombo<Surjection> value)
    : tag_(tag), m_(m), n_(n), value_(std::move(value)) {
  for (const auto& [f, c] : value_.terms())
    if (f.domain_size() != m_ || f.codomain_size() != n_)
      throw std::invalid_argument("EMorphism key outside Surj(m,n)");
}

EMorphism EMorphism::basis(BasisTag tag, const Surjection& f) {
  return EMorphism(tag, f.domain_size(), f.codomain_size(), LinCombo<Surjection>::basis(f));
}

EMorphism add(const EMorphism& a, const EMorphism& b) {
  check_same_shape(a, b);
  return EMorphism(a.tag(), a.domain(), a.codomain(), a.value() + b.value());
}

EMorphism scale(const Rational& s, const EMorphism& x) {
  return EMorphism(x.tag(), x.domain(), x.codomain(), s * x.value());
}

EMorphism mu_left_act(const Permutation& sigma, const EMorphism& x) {
  if (x.tag() != BasisTag::mu) throw std::invalid_argument("mu_left_act: wrong basis");
  if (sigma.size() != x.codomain()) throw std::invalid_argument("mu_left_act: arity mismatch");
  EMorphism out = x;
  for (int i : adjacent_word(sigma)) out = mu_left_act_adjacent(i, out);
  // adjacent_word sorts sigma to the identity, i.e. applies sigma^{-1}'s
  // word; replaying it left-to-right rebuilds sigma acting on x.
  return out;
}

EMorphism mu_right_act(const EMorphism& x, const Permutation& tau) {
  if (x.tag() != BasisTag::mu) throw std::invalid_argument("mu_right_act: wrong basis");
  if (tau.size() != x.domain()) throw std::invalid_argument("mu_right_act: arity mismatch");
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms()) {
    const auto dec = decompose(f);
    const Surjection g = compose(f, tau);
    const auto dec_g = decompose(g);
    assert(dec_g.order_preserving == dec.order_preserving);
    // alpha o tau = sigma o u with sigma in the block subgroup.
    const Permutation block = dec.unshuffle.compose(tau).compose(dec_g.unshuffle.inverse());
#ifndef NDEBUG
    {  // block must preserve each fiber block of s
      const auto p = dec.order_preserving.fiber_sizes();
      int lo = 1;
      for (int pi : p) {
        for (int i = lo; i < lo + pi; ++i)
          assert(block(i) >= lo && block(i) < lo + pi);
        lo += pi;
      }
    }
#endif
    out.add(g, block.sign() * c);
  }
  return EMorphism(BasisTag::mu, x.domain(), x.codomain(), std::move(out));
}

EMorphism mu_compose(const EMorphism& x, const EMorphism& y) {
  if (x.tag() != BasisTag::mu || y.tag() != BasisTag::mu)
    throw std::invalid_argument("mu_compose: wrong basis");
  if (y.codomain() != x.domain()) throw std::invalid_argument("mu_compose: arity mismatch");
  const int l = y.domain(), n = x.codomain();
  LinCombo<Surjection> out;
  for (const auto& [f, cf] : x.value().terms()) {
    const auto dec = decompose(f);
    const auto& s = dec.order_preserving;
    const auto p = s.fiber_sizes();
    for (const auto& [h, ch] : y.value().terms()) {
      // mu_f <> mu_h = (mu_s . alpha) <> mu_h = mu_s <> (alpha . mu_h).
      const EMorphism shifted =
          mu_left_act(dec.unshuffle, EMorphism::basis(BasisTag::mu, h));
      for (const auto& [g, cg] : shifted.value().terms()) {
        // mu_g = mu_{s_g} . alpha_g: compose the order-preserving tensors
        // first, then push the unshuffle back through the right action.
        const auto dec_g = decompose(g);
        const auto q = dec_g.order_preserving.fiber_sizes();
        long long sign_exp = 0;
        // Operadic composition inside each fiber of s.
        std::vector<int> fiber_arity(p.size(), 0);
        int j = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
          std::vector<int> qs(q.begin() + j, q.begin() + j + p[i]);
          j += p[i];
          sign_exp += kappa(qs);
          for (int a : qs) fiber_arity[i] += a;
        }
        // Koszul exponent; the i=1 summand carries no y_0 factor and is 0.
        for (std::size_t i = 1; i < p.size(); ++i) {
          long long dy = fiber_arity[i - 1] - p[i - 1];
          long long dx_tail = 0;
          for (std::size_t k = i; k < p.size(); ++k) dx_tail += p[k] - 1;
          sign_exp += dy * dx_tail;
        }
        const auto stacked =
            EMorphism::basis(BasisTag::mu, compose(s, dec_g.order_preserving));
        const auto acted = mu_right_act(stacked, dec_g.unshuffle);
        for (const auto& [key, w] : acted.value().terms())
          out.add(key, parity_sign(sign_exp) * cf * ch * cg * w);
      }
    }
  }
  return EMorphism(BasisTag::mu, l, n, std::move(out));
}

EMorphism mu_tensor(const EMorphism& x, const EMorphism& y) {
  if (x.tag() != BasisTag::mu || y.tag() != BasisTag::mu)
    throw std::invalid_argument("mu_tensor: wrong basis");
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms())
    for (const auto& [g, d] : y.value().terms()) out.add(cross_product(f, g), c * d);
  return EMorphism(BasisTag::mu, x.domain() + y.domain(), x.codomain() + y.codomain(),
                   std::move(out));
}

EMorphism nu_from_mu(const EMorphism& x) {
  if (x.tag() != BasisTag::mu) throw std::invalid_argument("nu_from_mu: wrong basis");
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms()) out.add(f, nu_mu_factor(f) * c);
  return EMorphism(BasisTag::nu, x.domain(), x.codomain(), std::move(out));
}

EMorphism mu_from_nu(const EMorphism& x) {
  if (x.tag() != BasisTag::nu) throw std::invalid_argument("mu_from_nu: wrong basis");
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms()) out.add(f, nu_mu_factor(f) * c);
  return EMorphism(BasisTag::mu, x.domain(), x.codomain(), std::move(out));
}

EMorphism nu_compose(const EMorphism& x, const EMorphism& y) {
  if (x.tag() != BasisTag::nu || y.tag() != BasisTag::nu)
    throw std::invalid_argument("nu_compose: wrong basis");
  if (y.codomain() != x.domain()) throw std::invalid_argument("nu_compose: arity mismatch");
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms())
    for (const auto& [h, d] : y.value().terms()) out.add(compose(f, h), c * d);
  return EMorphism(BasisTag::nu, y.domain(), x.codomain(), std::move(out));
}

EMorphism nu_act(const Permutation& sigma, const EMorphism& x, const Permutation& tau) {
  if (x.tag() != BasisTag::nu) throw std::invalid_argument("nu_act: wrong basis");
  if (sigma.size() != x.codomain() || tau.size() != x.domain())
    throw std::invalid_argument("nu_act: arity mismatch");
  const int sign = sigma.sign() * tau.sign();
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms())
    out.add(compose(compose(sigma, f), tau), sign * c);
  return EMorphism(BasisTag::nu, x.domain(), x.codomain(), std::move(out));
}

EMorphism nu_tensor(const EMorphism& x, const EMorphism& y) {
  if (x.tag() != BasisTag::nu || y.tag() != BasisTag::nu)
    throw std::invalid_argument("nu_tensor: wrong basis");
  const int sign = parity_sign(static_cast<long long>(y.degree()) * x.domain());
  LinCombo<Surjection> out;
  for (const auto& [f, c] : x.value().terms())
    for (const auto& [g, d] : y.value().terms()) out.add(cross_product(f, g), sign * c * d);
  return EMorphism(BasisTag::nu, x.domain() + y.domain(), x.codomain() + y.codomain(),
                   std::move(out));
}

EMorphism nu_tensor_via_reduction(const EMorphism& x, const EMorphism& y) {
  if (x.tag() != BasisTag::nu || y.tag() != BasisTag::nu)
    throw std::invalid_argument("nu_tensor_via_reduction: wrong basis");
  const int m = x.domain() + y.domain(), n = x.codomain() + y.codomain();
  LinCombo<Surjection> acc;
  for (const auto& [f, c] : x.value().terms()) {
    const auto df = decompose(f);
    for (const auto& [g, d] : y.value().terms()) {
      const auto dg = decompose(g);
      // nu_f = eps(alpha) nu_s . alpha, likewise for g; tensor the
      // order-preserving parts with the displayed sign, then act back.
      const int tensor_sign =
          parity_sign(static_cast<long long>(g.domain_size() - g.codomain_size()) *
                      f.domain_size());
      const int eps = df.unshuffle.sign() * dg.unshuffle.sign();
      const Surjection st = cross_product(df.order_preserving, dg.order_preserving);
      const Permutation ab(cross_product(Surjection(df.unshuffle),
                                         Surjection(dg.unshuffle)).images());
      EMorphism term = nu_act(Permutation::identity(n),
                              EMorphism::basis(BasisTag::nu, st), ab);
      for (const auto& [k, w] : term.value().terms())
        acc.add(k, eps * tensor_sign * c * d * w);
    }
  }
  return EMorphism(BasisTag::nu, m, n, std::move(acc));
}

EMorphism phi(const GroupAlgebraElement& a) {
  LinCombo<Surjection> out;
  for (const auto& [p, c] : a.value().terms()) out.add(Surjection(p), p.sign() * c);
  return EMorphism(BasisTag::nu, a.arity(), a.arity(), std::move(out));
}

EMorphism symmetry_iso(int m, int m_prime) {
  std::vector<int> im(m + m_prime);
  for (int i = 1; i <= m; ++i) im[i - 1] = m_prime + i;
  for (int i = m + 1; i <= m + m_prime; ++i) im[i - 1] = i - m;
  return phi(GroupAlgebraElement::of(Permutation(std::move(im))));
}

EMorphism sandwich(const GroupAlgebraElement& a, const EMorphism& x,
                   const GroupAlgebraElement& b) {
  if (a.arity() != x.codomain() || b.arity() != x.domain())
    throw std::invalid_argument("sandwich: arity mismatch");
  const EMorphism xn = x.tag() == BasisTag::nu ? x : nu_from_mu(x);
  return nu_compose(nu_compose(phi(a), xn), phi(b));
}

}  // namespace eprop
