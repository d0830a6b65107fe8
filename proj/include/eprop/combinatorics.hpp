#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace eprop {

// A permutation of {1,...,n}, stored as its image sequence: images()[i-1] is
// the image of i. All indices in this library are 1-based, matching the
// usual cycle/one-line notations.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Swaps i and i+1 inside S_n.
  static Permutation adjacent_transposition(int n, int i);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;

  auto operator<=>(const Permutation&) const = default;

  std::string str() const;
  static Permutation parse(const std::string& text);

 private:
  std::vector<int> images_;
};

// A surjection {1,...,m} -> {1,...,n}, stored as its image sequence. The
// empty surjection (m = n = 0) is allowed; it indexes the monoidal unit.
class Surjection {
 public:
  Surjection() = default;
  Surjection(std::vector<int> images, int codomain);
  explicit Surjection(const Permutation& p);

  static Surjection identity(int n);

  int domain_size() const { return static_cast<int>(images_.size()); }
  int codomain_size() const { return codomain_; }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // Fiber cardinalities |f^{-1}(1)|, ..., |f^{-1}(n)| in codomain order.
  std::vector<int> fiber_sizes() const;

  auto operator<=>(const Surjection&) const = default;

  std::string str() const;
  static Surjection parse(const std::string& text);

 private:
  int codomain_ = 0;
  std::vector<int> images_;
};

// (f o h)(i) = f(h(i)); requires h's codomain = f's domain.
Surjection compose(const Surjection& f, const Surjection& h);
Surjection compose(const Permutation& s, const Surjection& f);   // s o f
Surjection compose(const Surjection& f, const Permutation& t);   // f o t

// Block sum: first m images from f, remaining images from g shifted by n.
Surjection cross_product(const Surjection& f, const Surjection& g);

bool is_order_preserving(const Surjection& f);

// Structural membership test for the unshuffle set Sh_f: the inverse must be
// increasing on each consecutive fiber block of sizes fiber_sizes.
bool is_unshuffle_for(const Permutation& a, const std::vector<int>& fiber_sizes);

// The unique factorization f = s o a with s order preserving and a in Sh_f.
struct SurjectionDecomposition {
  Surjection order_preserving;
  Permutation unshuffle;
};
SurjectionDecomposition decompose(const Surjection& f);

// A partition: weakly decreasing sequence of positive parts. The empty
// partition (of 0 into 0 parts) is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int sum() const;
  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  // Ordered first by sum, then by part count, then reverse-lexicographically
  // on the parts, so enumeration and term iteration agree, e.g.
  // (4,1,1) < (3,2,1) < (2,2,2).
  bool operator<(const Partition& other) const;

  std::string str() const;  // "3+2+1"; "0" for the empty partition
  static Partition parse(const std::string& text);  // also accepts "[3,2,1]"

 private:
  std::vector<int> parts_;
};

// Decreasingly sorted fiber sizes of f.
Partition proj(const Surjection& f);

// The unique order-preserving surjection with fiber sizes lambda in order.
Surjection canonical_surjection(const Partition& lambda);

// Sign exponent kappa(p_1,...,p_n) = sum_j (p_j - 1)(p_1 + ... + p_{j-1}).
// Both displayed forms are computed and checked against each other.
int kappa(const std::vector<int>& fiber_sizes);
int kappa(const Surjection& f);

// Enumerations; all duplicate-free and lexicographically ordered on the
// canonical image/part encodings. Surjection kinds return empty when m < n.
std::vector<Permutation> all_permutations(int n);
std::vector<Surjection> all_surjections(int m, int n);
std::vector<Surjection> all_order_preserving_surjections(int m, int n);
std::vector<Partition> all_partitions(int m, int n);
std::vector<Partition> all_partitions_of(int n);
std::vector<Permutation> all_unshuffles(const std::vector<int>& fiber_sizes);

std::int64_t factorial(int n);

}  // namespace eprop
