#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>

#include "eprop/lincombo.hpp"

using namespace eprop;

using V = LinCombo<std::string>;

TEST_CASE("linear combination arithmetic and zero pruning") {
  V v = V::term("a", Rational(1, 2));
  v.add("b", Rational(3));
  v.add("a", Rational(-1, 2));
  CHECK(v.term_count() == 1);
  CHECK(v.coefficient("a") == 0);
  CHECK(v.coefficient("b") == 3);

  V w = V::basis("b");
  CHECK((v - Rational(3) * w).is_zero());
  CHECK(v + (-v) == V());
  CHECK(v.coefficient_sum() == 3);
}

TEST_CASE("rational formatting round trips") {
  CHECK(format_rational(Rational(6, 7)) == "6/7");
  CHECK(format_rational(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("6/7") == Rational(6, 7));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("span dimension on hand examples") {
  std::vector<V> cycle;
  cycle.push_back(V::basis("1") + V::basis("2"));
  cycle.push_back(V::basis("2") + V::basis("3"));
  cycle.push_back(V::basis("1") + V::basis("3"));
  CHECK(span_dimension(cycle) == 3);

  std::vector<V> degenerate;
  degenerate.push_back(V::basis("1") - V::basis("2"));
  degenerate.push_back(V::basis("2") - V::basis("3"));
  degenerate.push_back(V::basis("1") - V::basis("3"));
  CHECK(span_dimension(degenerate) == 2);

  // Six proportional vectors span one dimension.
  std::vector<V> line;
  for (int k = 1; k <= 6; ++k)
    line.push_back(Rational(k, 7) * (V::basis("x") - V::basis("y")));
  CHECK(span_dimension(line) == 1);
}

TEST_CASE("independent subset is greedy and spanning") {
  std::vector<V> vs;
  vs.push_back(V::basis("1"));
  vs.push_back(Rational(2) * V::basis("1"));
  vs.push_back(V::basis("2"));
  vs.push_back(V::basis("1") + V::basis("2"));
  const auto picked = independent_subset(vs);
  CHECK(picked == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rank does not depend on insertion order") {
  std::mt19937 rng(4711);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<V> vs;
    for (int i = 0; i < 8; ++i) {
      V v;
      for (int j = 0; j < 5; ++j) v.add(std::to_string(j), Rational(coeff(rng), den(rng)));
      vs.push_back(std::move(v));
    }
    const int rank = span_dimension(vs);
    CHECK(rank <= 5);
    for (int shuffles = 0; shuffles < 3; ++shuffles) {
      std::shuffle(vs.begin(), vs.end(), rng);
      CHECK(span_dimension(vs) == rank);
    }
  }
}
