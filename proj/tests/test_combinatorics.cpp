#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "eprop/combinatorics.hpp"

using namespace eprop;

TEST_CASE("permutation composition, inverse and sign") {
  const auto s = Permutation::parse("2,3,1");
  const auto t = Permutation::parse("2,1,3");
  CHECK(s.compose(t).images() == std::vector<int>{3, 2, 1});
  CHECK(s.compose(s.inverse()) == Permutation::identity(3));
  CHECK(s.sign() == 1);
  CHECK(t.sign() == -1);
  CHECK(Permutation::transposition(4, 1, 3) == Permutation::parse("3,2,1,4"));
  CHECK(Permutation::adjacent_transposition(3, 2) == Permutation::parse("1,3,2"));
  CHECK(Permutation::parse(s.str()) == s);
}

TEST_CASE("sign is a homomorphism") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_permutations(n))
      for (const auto& t : all_permutations(n))
        CHECK(s.compose(t).sign() == s.sign() * t.sign());

  std::mt19937 rng(20240811);
  const auto perms = all_permutations(7);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& s = perms[pick(rng)];
    const auto& t = perms[pick(rng)];
    CHECK(s.compose(t).sign() == s.sign() * t.sign());
  }
}

TEST_CASE("surjection parsing and fiber sizes") {
  const auto f = Surjection::parse("1,2,2,3");
  CHECK(f.domain_size() == 4);
  CHECK(f.codomain_size() == 3);
  CHECK(f.fiber_sizes() == std::vector<int>{1, 2, 1});
  CHECK(Surjection::parse(f.str()) == f);
  CHECK_THROWS(Surjection::parse("1,3,3"));  // misses 2
}

TEST_CASE("enumeration sizes match closed counts") {
  // |Surj(m,n)| = n! S(m,n).
  CHECK(all_surjections(3, 2).size() == 6);
  CHECK(all_surjections(4, 2).size() == 14);
  CHECK(all_surjections(4, 3).size() == 36);
  CHECK(all_surjections(5, 3).size() == 150);
  CHECK(all_surjections(2, 3).empty());
  CHECK(all_surjections(0, 0).size() == 1);

  // |OSurj(m,n)| = C(m-1, n-1).
  CHECK(all_order_preserving_surjections(6, 3).size() == 10);
  CHECK(all_order_preserving_surjections(5, 5).size() == 1);

  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n) {
      const auto all = all_surjections(m, n);
      const std::set<Surjection> dedup(all.begin(), all.end());
      CHECK(dedup.size() == all.size());
      int ops = 0;
      for (const auto& f : all) {
        CHECK(f.domain_size() == m);
        CHECK(f.codomain_size() == n);
        if (is_order_preserving(f)) ++ops;
      }
      CHECK(ops == static_cast<int>(all_order_preserving_surjections(m, n).size()));
    }
}

TEST_CASE("decomposition f = s o alpha is correct and unique") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n)
      for (const auto& f : all_surjections(m, n)) {
        const auto dec = decompose(f);
        CHECK(is_order_preserving(dec.order_preserving));
        CHECK(is_unshuffle_for(dec.unshuffle, dec.order_preserving.fiber_sizes()));
        CHECK(compose(dec.order_preserving, dec.unshuffle) == f);
        // Uniqueness by exhaustive search over the middle symmetric group.
        int count = 0;
        for (const auto& a : all_permutations(m)) {
          const Surjection s = compose(f, a.inverse());
          if (is_order_preserving(s) && is_unshuffle_for(a, s.fiber_sizes())) ++count;
        }
        CHECK(count == 1);
      }
}

TEST_CASE("unshuffle enumeration agrees with the structural test") {
  const std::vector<std::vector<int>> shapes{{2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 1, 2}};
  for (const auto& p : shapes) {
    int m = 0;
    for (int v : p) m += v;
    std::set<Permutation> structural;
    for (const auto& a : all_permutations(m))
      if (is_unshuffle_for(a, p)) structural.insert(a);
    const auto listed = all_unshuffles(p);
    CHECK(structural == std::set<Permutation>(listed.begin(), listed.end()));
    // Multinomial count m! / prod p_i!.
    std::int64_t expect = factorial(m);
    for (int v : p) expect /= factorial(v);
    CHECK(static_cast<std::int64_t>(listed.size()) == expect);
  }
}

TEST_CASE("kappa values") {
  CHECK(kappa(std::vector<int>{2}) == 0);
  CHECK(kappa(std::vector<int>{1, 2}) == 1);
  CHECK(kappa(std::vector<int>{2, 1}) == 0);
  CHECK(kappa(std::vector<int>{2, 2}) == 2);
  CHECK(kappa(std::vector<int>{3, 2}) == 3);
  CHECK(kappa(Surjection::parse("1,2,2")) == 1);
  // Both closed forms are cross-checked internally; sweep them at size <= 12.
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= m; ++n)
      for (const auto& p : all_partitions(m, n)) CHECK_NOTHROW(kappa(p.parts()));
}

TEST_CASE("partition ordering, parsing and enumeration") {
  CHECK(Partition::parse("3+2+1").parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition::parse("[3,2,1]") == Partition::parse("3+2+1"));
  CHECK(Partition::parse("0") == Partition());
  CHECK(Partition::parse("4+1+1") < Partition::parse("3+2+1"));
  CHECK(Partition::parse("3+2+1") < Partition::parse("2+2+2"));

  const auto p63 = all_partitions(6, 3);
  REQUIRE(p63.size() == 3);
  CHECK(p63[0] == Partition::parse("4+1+1"));
  CHECK(p63[1] == Partition::parse("3+2+1"));
  CHECK(p63[2] == Partition::parse("2+2+2"));
  CHECK(all_partitions_of(5).size() == 7);
  CHECK(all_partitions(5, 3).size() == 2);
}

TEST_CASE("proj is invariant under both actions") {
  for (const auto& f : all_surjections(4, 2))
    for (const auto& s : all_permutations(2))
      for (const auto& t : all_permutations(4))
        CHECK(proj(compose(compose(s, f), t)) == proj(f));
}

TEST_CASE("canonical surjection realizes its partition") {
  const auto f = canonical_surjection(Partition::parse("2+1"));
  CHECK(f == Surjection::parse("1,1,2"));
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= m; ++n)
      for (const auto& p : all_partitions(m, n)) {
        const auto g = canonical_surjection(p);
        CHECK(is_order_preserving(g));
        CHECK(proj(g) == p);
      }
}
