#pragma once

#include <cstdint>

#include "eprop/combinatorics.hpp"
#include "eprop/lincombo.hpp"

namespace eprop {

// An element of the group algebra K[S_n].
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(int n, LinCombo<Permutation> value);

  static GroupAlgebraElement identity(int n);
  static GroupAlgebraElement of(const Permutation& p);

  int arity() const { return n_; }
  const LinCombo<Permutation>& value() const { return value_; }

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  int n_;
  LinCombo<Permutation> value_;
};

// Bilinear extension of group composition (keys compose as functions).
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement scale(const Rational& s, const GroupAlgebraElement& a);

// e_{(1^n)} = (1/n!) sum eps(s) s  and  e_{(n)} = (1/n!) sum s.
GroupAlgebraElement e_sign(int n);
GroupAlgebraElement e_triv(int n);

// Primitive idempotent attached to lambda |- n, built from the row
// symmetrizer and column antisymmetrizer of the row-major standard filling,
// normalized by dim(S_lambda)/n!. Idempotency is asserted at construction.
GroupAlgebraElement young_idempotent(const Partition& lambda);

// Conjugate tableau convention (column-major filling); Ext dimensions must
// not depend on the choice, which tests check against this variant.
GroupAlgebraElement young_idempotent_column_major(const Partition& lambda);

// dim S_lambda by the hook length formula.
std::int64_t hook_length_dim(const Partition& lambda);

}  // namespace eprop
