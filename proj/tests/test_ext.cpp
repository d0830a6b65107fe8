#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eprop/ext_karoubi.hpp"
#include "eprop/group_algebra.hpp"

using namespace eprop;

namespace {

ExtResult dim(const std::string& mu, const std::string& lambda) {
  return ext_dim(ExtQuery{Partition::parse(mu), Partition::parse(lambda)});
}

// Independent computation of the sandwich rank, letting the caller pick the
// idempotents; used to check tableau-convention invariance.
int direct_rank(const GroupAlgebraElement& e_mu, const GroupAlgebraElement& e_lambda, int m,
                int n) {
  std::vector<LinCombo<Surjection>> vectors;
  for (const auto& f : all_surjections(m, n))
    vectors.push_back(sandwich(e_mu, EMorphism::basis(BasisTag::nu, f), e_lambda).value());
  return span_dimension(vectors);
}

}  // namespace

TEST_CASE("displayed Ext dimensions") {
  CHECK(dim("1+1", "1+1+1").dimension == 1);
  CHECK(dim("1+1", "1+1+1").degree == 1);
  CHECK(dim("1+1", "2+1").dimension == 1);
  CHECK(dim("2", "2+1").dimension == 1);
  // Forced by multiplicity: |Surj(3,2)| = 6 = 1 + 2*2 + dim Ext(S_(2), S_(1^3)).
  CHECK(dim("2", "1+1+1").dimension == 1);
  CHECK(dim("1+1+1", "1+1").dimension == 0);  // negative degree vanishes
}

TEST_CASE("exterior powers see every partition") {
  for (int n = 1; n <= 4; ++n)
    for (int m = n; m <= 5; ++m) {
      const auto r = ext_dim(ExtQuery{Partition(std::vector<int>(n, 1)),
                                      Partition(std::vector<int>(m, 1))});
      CHECK(r.dimension == static_cast<int>(all_partitions(m, n).size()));
      CHECK(r.degree == m - n);
    }
}

TEST_CASE("tensor powers against symmetric powers form the identity pattern") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto r = ext_symmetric_power(n, m);
      CHECK(r.dimension == (m == n ? 1 : 0));
    }
}

TEST_CASE("basis vectors are fixed by both idempotents") {
  const std::vector<std::pair<std::string, std::string>> queries{
      {"1+1", "1+1+1"}, {"1+1", "2+1"}, {"2", "2+1"}, {"1+1+1", "1+1+1+1+1"}, {"2+1", "2+2"}};
  for (const auto& [mu, lambda] : queries) {
    const auto q = ExtQuery{Partition::parse(mu), Partition::parse(lambda)};
    const auto r = ext_dim(q);
    const auto e_mu = young_idempotent(q.mu);
    const auto e_lambda = young_idempotent(q.lambda);
    for (const auto& b : r.basis) {
      CHECK(sandwich(e_mu, b, e_lambda) == b);
      CHECK(b.degree() == r.degree);
    }
  }
}

TEST_CASE("dimensions do not depend on the tableau filling convention") {
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= 4; ++m)
      for (const auto& mu : all_partitions_of(n))
        for (const auto& lambda : all_partitions_of(m)) {
          const int row = direct_rank(young_idempotent(mu), young_idempotent(lambda), m, n);
          const int col = direct_rank(young_idempotent_column_major(mu),
                                      young_idempotent_column_major(lambda), m, n);
          CHECK(row == col);
          CHECK(row == ext_dim(ExtQuery{mu, lambda}).dimension);
        }
}

TEST_CASE("multiplicity consistency against the free hom-space") {
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= 3; ++m) {
      std::int64_t total = 0;
      for (const auto& mu : all_partitions_of(n))
        for (const auto& lambda : all_partitions_of(m))
          total += static_cast<std::int64_t>(ext_dim(ExtQuery{mu, lambda}).dimension) *
                   hook_length_dim(mu) * hook_length_dim(lambda);
      CHECK(total == static_cast<std::int64_t>(all_surjections(m, n).size()));
    }
}

TEST_CASE("ext table families") {
  const auto table = ext_table(3, 3, ExtFamily::exterior);
  REQUIRE(table.size() == 9);
  for (const auto& row : table)
    CHECK(row.dimension ==
          (row.m >= row.n ? static_cast<int>(all_partitions(row.m, row.n).size()) : 0));

  const auto ts = ext_table(3, 3, ExtFamily::tensor_symmetric);
  for (const auto& row : ts) CHECK(row.dimension == (row.m == row.n ? 1 : 0));
}

TEST_CASE("arity bounds are enforced but overridable") {
  ExtBounds tight{2, 2};
  CHECK_THROWS(ext_dim(ExtQuery{Partition::parse("1+1"), Partition::parse("1+1+1")}, tight));
  ExtBounds loose{7, 7};
  CHECK(ext_dim(ExtQuery{Partition::parse("1+1"), Partition::parse("1+1+1")}, loose).dimension ==
        1);
}
