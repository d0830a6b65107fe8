#pragma once

#include <string>
#include <vector>

#include "eprop/prop_scom.hpp"

namespace eprop {

// An element of the quotient category E_Lambda(m,n) over the partition basis
// rho_lambda, lambda in Part(m,n). Degree is uniformly m-n.
class LambdaMorphism {
 public:
  LambdaMorphism(int m, int n, LinCombo<Partition> value = {});

  static LambdaMorphism basis(const Partition& lambda);

  int domain() const { return m_; }
  int codomain() const { return n_; }
  int degree() const { return m_ - n_; }
  bool is_zero() const { return value_.is_zero(); }
  const LinCombo<Partition>& value() const { return value_; }

  bool operator==(const LambdaMorphism&) const = default;

 private:
  int m_, n_;
  LinCombo<Partition> value_;
};

LambdaMorphism add(const LambdaMorphism& a, const LambdaMorphism& b);
LambdaMorphism scale(const Rational& s, const LambdaMorphism& x);

// Push every surjection key through proj, summing coefficients.
LambdaMorphism quotient(const EMorphism& x);

// The composition *, a (1/m!)-average over the middle symmetric group,
// computed brute-force on canonical representatives. Memoized per basis
// pair; the middle arity is hard-bounded at 9.
LambdaMorphism star_compose(const LambdaMorphism& x, const LambdaMorphism& y, int jobs = 1);

// Closed form for rho_lambda * rho_{(2,1^{m-1})}.
LambdaMorphism star_compose_fast(const Partition& lambda);

// P_{m,n}: the uniform average of order-preserving surjection classes.
LambdaMorphism p_element(int m, int n);
// The same element through the iterated *-product definition (test path).
LambdaMorphism p_element_recursive(int m, int n);

// Monoidal product: rho_a (.) rho_b = (-1)^{d(rho_a) n'} P_{m+m',n+n'},
// extended bilinearly; the empty-object class is the unit.
LambdaMorphism odot_tensor(const LambdaMorphism& x, const LambdaMorphism& y);

// s_{m,m'} = (-1)^{mm'} rho_{(1^{m+m'})}.
LambdaMorphism lambda_symmetry(int m, int m_prime);

struct VerifyReport {
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

// Checks (.)-associativity, the interchange law with its Koszul sign, the
// unit, and the symmetry axiom on all basis elements within the size bound.
VerifyReport verify_prop_axioms(int max_total_size);

// Checks that rho_{(m)} |-> (-1)^{m(m-1)/2} mu_m intertwines the underlying
// operad composition of E_Lambda with the suspended-commutative one.
VerifyReport underlying_operad_check(int max_arity);

}  // namespace eprop
