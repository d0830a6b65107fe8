#pragma once

#include "eprop/combinatorics.hpp"
#include "eprop/group_algebra.hpp"
#include "eprop/lincombo.hpp"

namespace eprop {

enum class BasisTag { mu, nu };

// An element of E(m,n), a linear combination of surjections {1..m} -> {1..n}
// in either generator system. Concentrated in degree m-n; E(m,n) = 0 for
// m < n (empty value).
class EMorphism {
 public:
  EMorphism(BasisTag tag, int m, int n, LinCombo<Surjection> value = {});

  static EMorphism basis(BasisTag tag, const Surjection& f);
  static EMorphism zero(BasisTag tag, int m, int n) { return EMorphism(tag, m, n); }

  BasisTag tag() const { return tag_; }
  int domain() const { return m_; }
  int codomain() const { return n_; }
  int degree() const { return m_ - n_; }
  bool is_zero() const { return value_.is_zero(); }
  const LinCombo<Surjection>& value() const { return value_; }

  bool operator==(const EMorphism&) const = default;

 private:
  BasisTag tag_;
  int m_, n_;
  LinCombo<Surjection> value_;
};

EMorphism add(const EMorphism& a, const EMorphism& b);
EMorphism scale(const Rational& s, const EMorphism& x);

// --- mu-basis operations, implemented directly from the free-prop
// definition. These serve as the independent oracle for the nu formulas.

// Left action of sigma, extended multiplicatively over an adjacent
// transposition decomposition.
EMorphism mu_left_act(const Permutation& sigma, const EMorphism& x);
EMorphism mu_right_act(const EMorphism& x, const Permutation& tau);
EMorphism mu_compose(const EMorphism& x, const EMorphism& y);
EMorphism mu_tensor(const EMorphism& x, const EMorphism& y);

// --- basis changes: nu_f = eps(alpha) (-1)^kappa(f) mu_f.

EMorphism nu_from_mu(const EMorphism& x);
EMorphism mu_from_nu(const EMorphism& x);

// --- nu-basis operations (the simple closed formulas).

EMorphism nu_compose(const EMorphism& x, const EMorphism& y);
EMorphism nu_act(const Permutation& sigma, const EMorphism& x, const Permutation& tau);
EMorphism nu_tensor(const EMorphism& x, const EMorphism& y);
// Same product computed by decomposing into order-preserving surjections and
// unshuffles; kept as a cross-check for the closed form.
EMorphism nu_tensor_via_reduction(const EMorphism& x, const EMorphism& y);

// Algebra map K[S_n] -> E(n,n), phi(sigma) = eps(sigma) nu_sigma.
EMorphism phi(const GroupAlgebraElement& a);

// The block-swap symmetry isomorphism s_{m,m'} in E(m+m', m+m').
EMorphism symmetry_iso(int m, int m_prime);

// phi(a) o x o phi(b).
EMorphism sandwich(const GroupAlgebraElement& a, const EMorphism& x,
                   const GroupAlgebraElement& b);

}  // namespace eprop
