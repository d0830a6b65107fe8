#include "eprop/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace eprop {

GroupAlgebraElement::GroupAlgebraElement(int n, LinCombo<Permutation> value)
    : n_(n), value_(std::move(value)) {
  for (const auto& [p, c] : value_.terms())
    if (p.size() != n_) throw std::invalid_argument("group algebra arity mismatch");
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
  return of(Permutation::identity(n));
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p) {
  return GroupAlgebraElement(p.size(), LinCombo<Permutation>::basis(p));
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("group algebra arity mismatch");
  LinCombo<Permutation> out;
  for (const auto& [p, c] : a.value().terms())
    for (const auto& [q, d] : b.value().terms()) out.add(p.compose(q), c * d);
  return GroupAlgebraElement(a.arity(), std::move(out));
}

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("group algebra arity mismatch");
  return GroupAlgebraElement(a.arity(), a.value() + b.value());
}

GroupAlgebraElement scale(const Rational& s, const GroupAlgebraElement& a) {
  return GroupAlgebraElement(a.arity(), s * a.value());
}

GroupAlgebraElement e_sign(int n) {
  LinCombo<Permutation> v;
  const Rational w(1, factorial(n));
  for (const auto& p : all_permutations(n)) v.add(p, p.sign() * w);
  return GroupAlgebraElement(n, std::move(v));
}

GroupAlgebraElement e_triv(int n) {
  LinCombo<Permutation> v;
  const Rational w(1, factorial(n));
  for (const auto& p : all_permutations(n)) v.add(p, w);
  return GroupAlgebraElement(n, std::move(v));
}

namespace {

// Permutations of {1..n} that permute each listed block setwise, as image
// sequences; |result| is the product of the block factorials.
std::vector<Permutation> block_stabilizer(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(n)};
  for (const auto& block : blocks) {
    std::vector<int> target = block;
    std::sort(target.begin(), target.end());
    std::vector<Permutation> next;
    do {
      // The block permutation sending sorted block positions to `target`.
      auto id = Permutation::identity(n).images();
      std::vector<int> sorted_block = block;
      std::sort(sorted_block.begin(), sorted_block.end());
      for (std::size_t i = 0; i < block.size(); ++i) id[sorted_block[i] - 1] = target[i];
      Permutation g(id);
      for (const auto& prev : out) next.push_back(prev.compose(g));
    } while (std::next_permutation(target.begin(), target.end()));
    out = std::move(next);
  }
  return out;
}

// Row-major (by_rows=true) or column-major filling of the diagram of lambda.
// filling[r][c] is the entry in row r, column c.
std::vector<std::vector<int>> tableau_filling(const Partition& lambda, bool by_rows) {
  std::vector<std::vector<int>> filling(lambda.part_count());
  for (int r = 0; r < lambda.part_count(); ++r) filling[r].resize(lambda.parts()[r]);
  int next = 1;
  if (by_rows) {
    for (int r = 0; r < lambda.part_count(); ++r)
      for (int c = 0; c < lambda.parts()[r]; ++c) filling[r][c] = next++;
  } else {
    const int width = lambda.part_count() ? lambda.parts()[0] : 0;
    for (int c = 0; c < width; ++c)
      for (int r = 0; r < lambda.part_count(); ++r)
        if (c < lambda.parts()[r]) filling[r][c] = next++;
  }
  return filling;
}

GroupAlgebraElement young_from_filling(const Partition& lambda, bool by_rows) {
  const int n = lambda.sum();
  if (n == 0) return GroupAlgebraElement(0, LinCombo<Permutation>::basis(Permutation()));
  if (n > 8) throw std::invalid_argument("young_idempotent: arity bound exceeded");
  const auto filling = tableau_filling(lambda, by_rows);

  std::vector<std::vector<int>> rows(filling.begin(), filling.end());
  std::vector<std::vector<int>> cols;
  const int width = lambda.parts()[0];
  for (int c = 0; c < width; ++c) {
    std::vector<int> col;
    for (int r = 0; r < lambda.part_count(); ++r)
      if (c < lambda.parts()[r]) col.push_back(filling[r][c]);
    cols.push_back(std::move(col));
  }

  LinCombo<Permutation> row_sym, col_antisym;
  for (const auto& p : block_stabilizer(n, rows)) row_sym.add(p, Rational(1));
  for (const auto& p : block_stabilizer(n, cols)) col_antisym.add(p, Rational(p.sign()));

  auto c_lambda = multiply(GroupAlgebraElement(n, std::move(row_sym)),
                           GroupAlgebraElement(n, std::move(col_antisym)));
  auto e = scale(Rational(hook_length_dim(lambda), factorial(n)), c_lambda);
  if (multiply(e, e) != e)
    throw std::logic_error("young_idempotent: constructed element is not idempotent");
  return e;
}

}  // namespace

GroupAlgebraElement young_idempotent(const Partition& lambda) {
  return young_from_filling(lambda, /*by_rows=*/true);
}

GroupAlgebraElement young_idempotent_column_major(const Partition& lambda) {
  return young_from_filling(lambda, /*by_rows=*/false);
}

std::int64_t hook_length_dim(const Partition& lambda) {
  const int n = lambda.sum();
  if (n == 0) return 1;
  std::vector<int> col_heights(lambda.parts()[0], 0);
  for (int r = 0; r < lambda.part_count(); ++r)
    for (int c = 0; c < lambda.parts()[r]; ++c) ++col_heights[c];
  // dim = n! / prod hooks; divide factors in as we go to stay in 64 bits.
  BigInt num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  BigInt den = 1;
  for (int r = 0; r < lambda.part_count(); ++r)
    for (int c = 0; c < lambda.parts()[r]; ++c) {
      int hook = (lambda.parts()[r] - c - 1) + (col_heights[c] - r - 1) + 1;
      den *= hook;
    }
  BigInt dim = num / den;
  if (dim * den != num) throw std::logic_error("hook length formula: non-integral dimension");
  return static_cast<std::int64_t>(dim);
}

}  // namespace eprop
