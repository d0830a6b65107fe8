#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eprop/rational.hpp"

namespace eprop {

// A sparse exact-rational linear combination over an ordered basis-key type.
// Zero coefficients are never stored; iteration order is the key order.
template <class B>
class LinCombo {
 public:
  LinCombo() = default;

  static LinCombo basis(B key) {
    LinCombo v;
    v.terms_.emplace(std::move(key), Rational(1));
    return v;
  }

  static LinCombo term(B key, Rational coeff) {
    LinCombo v;
    v.add(std::move(key), std::move(coeff));
    return v;
  }

  void add(B key, Rational coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinCombo& operator+=(const LinCombo& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }

  LinCombo& operator-=(const LinCombo& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }

  LinCombo& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinCombo operator+(LinCombo a, const LinCombo& b) { return a += b; }
  friend LinCombo operator-(LinCombo a, const LinCombo& b) { return a -= b; }
  friend LinCombo operator*(const Rational& s, LinCombo v) { return v *= s; }
  LinCombo operator-() const {
    LinCombo v = *this;
    for (auto& [k, c] : v.terms_) c = -c;
    return v;
  }

  bool operator==(const LinCombo&) const = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<B, Rational>& terms() const { return terms_; }

  Rational coefficient(const B& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient_sum() const {
    Rational s(0);
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

 private:
  std::map<B, Rational> terms_;
};

// Incremental exact Gaussian elimination. Rows are kept reduced and
// normalized to a unit leading coefficient, keyed by their pivot.
template <class B>
class RowReducer {
 public:
  // Returns true when v was independent of the rows seen so far.
  bool insert(LinCombo<B> v) {
    std::map<B, Rational> row(v.terms().begin(), v.terms().end());
    while (!row.empty()) {
      const B& pivot = row.begin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        Rational lead = row.begin()->second;
        for (auto& [k, c] : row) c /= lead;
        rows_.emplace(pivot, std::move(row));
        return true;
      }
      Rational factor = row.begin()->second;
      for (const auto& [k, c] : it->second) {
        auto pos = row.find(k);
        Rational nc = (pos == row.end() ? Rational(0) : pos->second) - factor * c;
        if (nc == 0) {
          if (pos != row.end()) row.erase(pos);
        } else if (pos == row.end()) {
          row.emplace(k, std::move(nc));
        } else {
          pos->second = std::move(nc);
        }
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<B, std::map<B, Rational>> rows_;
};

// Rank of the span over the rationals; independent of input order.
template <class B>
int span_dimension(const std::vector<LinCombo<B>>& vectors) {
  RowReducer<B> reducer;
  for (const auto& v : vectors) reducer.insert(v);
  return reducer.rank();
}

// Indices of a greedy maximal linearly independent subfamily.
template <class B>
std::vector<std::size_t> independent_subset(const std::vector<LinCombo<B>>& vectors) {
  RowReducer<B> reducer;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (reducer.insert(vectors[i])) picked.push_back(i);
  return picked;
}

}  // namespace eprop
