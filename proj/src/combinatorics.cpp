#include "eprop/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eprop {

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) {
    if (token.empty()) throw std::invalid_argument("empty token in '" + text + "'");
    out.push_back(std::stoi(token));
  }
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1])
      throw std::invalid_argument("not a permutation: " + join(images_, ','));
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i] - 1] = i + 1;
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int inversions = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::str() const { return join(images_, ','); }

Permutation Permutation::parse(const std::string& text) {
  return Permutation(parse_int_list(text, ','));
}

Surjection::Surjection(std::vector<int> images, int codomain)
    : codomain_(codomain), images_(std::move(images)) {
  if (codomain_ < 0) throw std::invalid_argument("negative codomain");
  std::vector<bool> hit(codomain_, false);
  for (int v : images_) {
    if (v < 1 || v > codomain_)
      throw std::invalid_argument("image out of range: " + join(images_, ','));
    hit[v - 1] = true;
  }
  for (bool h : hit)
    if (!h) throw std::invalid_argument("not surjective: " + join(images_, ','));
}

Surjection::Surjection(const Permutation& p) : Surjection(p.images(), p.size()) {}

Surjection Surjection::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Surjection(std::move(im), n);
}

std::vector<int> Surjection::fiber_sizes() const {
  std::vector<int> p(codomain_, 0);
  for (int v : images_) ++p[v - 1];
  return p;
}

std::string Surjection::str() const { return join(images_, ','); }

Surjection Surjection::parse(const std::string& text) {
  auto im = parse_int_list(text, ',');
  int n = im.empty() ? 0 : *std::max_element(im.begin(), im.end());
  return Surjection(std::move(im), n);
}

Surjection compose(const Surjection& f, const Surjection& h) {
  if (h.codomain_size() != f.domain_size())
    throw std::invalid_argument("surjection composition size mismatch");
  std::vector<int> im(h.domain_size());
  for (int i = 1; i <= h.domain_size(); ++i) im[i - 1] = f(h(i));
  return Surjection(std::move(im), f.codomain_size());
}

Surjection compose(const Permutation& s, const Surjection& f) {
  return compose(Surjection(s), f);
}

Surjection compose(const Surjection& f, const Permutation& t) {
  return compose(f, Surjection(t));
}

Surjection cross_product(const Surjection& f, const Surjection& g) {
  std::vector<int> im;
  im.reserve(f.domain_size() + g.domain_size());
  for (int v : f.images()) im.push_back(v);
  for (int v : g.images()) im.push_back(v + f.codomain_size());
  return Surjection(std::move(im), f.codomain_size() + g.codomain_size());
}

bool is_order_preserving(const Surjection& f) {
  return std::is_sorted(f.images().begin(), f.images().end());
}

bool is_unshuffle_for(const Permutation& a, const std::vector<int>& fiber_sizes) {
  const Permutation inv = a.inverse();
  int pos = 1;
  for (int p : fiber_sizes) {
    for (int k = 1; k < p; ++k)
      if (inv(pos + k - 1) >= inv(pos + k)) return false;
    pos += p;
  }
  return pos - 1 == a.size();
}

SurjectionDecomposition decompose(const Surjection& f) {
  const int m = f.domain_size();
  const auto p = f.fiber_sizes();
  // a^{-1} lists the positions of fiber 1 in increasing order, then fiber 2,
  // and so on; s is the canonical order-preserving surjection with fibers p.
  std::vector<int> inv;
  inv.reserve(m);
  for (int v = 1; v <= f.codomain_size(); ++v)
    for (int i = 1; i <= m; ++i)
      if (f(i) == v) inv.push_back(i);
  Permutation a = Permutation(std::move(inv)).inverse();
  std::vector<int> s_im;
  s_im.reserve(m);
  for (int v = 1; v <= f.codomain_size(); ++v)
    s_im.insert(s_im.end(), p[v - 1], v);
  Surjection s(std::move(s_im), f.codomain_size());
  assert(compose(s, a) == f);
  assert(is_unshuffle_for(a, p));
  return {std::move(s), std::move(a)};
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition part < 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition not weakly decreasing");
  }
}

bool Partition::operator<(const Partition& other) const {
  if (sum() != other.sum()) return sum() < other.sum();
  if (parts_.size() != other.parts_.size()) return parts_.size() < other.parts_.size();
  return parts_ > other.parts_;  // reverse-lexicographic
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  return join(parts_, '+');
}

Partition Partition::parse(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '[' && t.back() == ']') {
    t = t.substr(1, t.size() - 2);
    return Partition(t.empty() ? std::vector<int>{} : parse_int_list(t, ','));
  }
  if (t == "0" || t.empty()) return Partition();
  return Partition(parse_int_list(t, '+'));
}

Partition proj(const Surjection& f) {
  auto p = f.fiber_sizes();
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

Surjection canonical_surjection(const Partition& lambda) {
  std::vector<int> im;
  im.reserve(lambda.sum());
  for (int i = 0; i < lambda.part_count(); ++i)
    im.insert(im.end(), lambda.parts()[i], i + 1);
  return Surjection(std::move(im), lambda.part_count());
}

int kappa(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  int first = 0, prefix = 0;
  for (int j = 0; j < n; ++j) {
    first += (p[j] - 1) * prefix;
    prefix += p[j];
  }
  int second = 0;
  for (int k = 0; k < n; ++k) {
    int tail = 0;
    for (int l = k + 1; l < n; ++l) tail += p[l] - 1;
    second += p[k] * tail;
  }
  if (first != second) throw std::logic_error("kappa: the two closed forms disagree");
  return first;
}

int kappa(const Surjection& f) { return kappa(f.fiber_sizes()); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

namespace {

void surjection_rec(int m, int n, std::vector<int>& im, std::vector<bool>& used, int distinct,
                    std::vector<Surjection>& out) {
  const int pos = static_cast<int>(im.size());
  if (pos == m) {
    if (distinct == n) out.emplace_back(im, n);
    return;
  }
  // Prune branches that cannot reach all n values with the slots left.
  const int remaining = m - pos;
  for (int v = 1; v <= n; ++v) {
    const int new_distinct = distinct + (used[v - 1] ? 0 : 1);
    if (n - new_distinct > remaining - 1) continue;
    const bool was_used = used[v - 1];
    used[v - 1] = true;
    im.push_back(v);
    surjection_rec(m, n, im, used, new_distinct, out);
    im.pop_back();
    used[v - 1] = was_used;
  }
}

}  // namespace

std::vector<Surjection> all_surjections(int m, int n) {
  if (n < 0 || m < n) return {};
  if (n == 0) return m == 0 ? std::vector<Surjection>{Surjection()} : std::vector<Surjection>{};
  std::vector<int> im;
  im.reserve(m);
  std::vector<bool> used(n, false);
  std::vector<Surjection> out;
  surjection_rec(m, n, im, used, 0, out);
  return out;
}

std::vector<Surjection> all_order_preserving_surjections(int m, int n) {
  if (n < 0 || m < n) return {};
  if (n == 0) return m == 0 ? std::vector<Surjection>{Surjection()} : std::vector<Surjection>{};
  // Compositions of m into n positive parts; image sequences are produced in
  // lexicographic order by taking p_1 decreasing.
  std::vector<Surjection> out;
  std::vector<int> p(n);
  auto rec = [&](auto&& self, int idx, int rest) -> void {
    if (idx == n - 1) {
      p[idx] = rest;
      std::vector<int> im;
      im.reserve(m);
      for (int i = 0; i < n; ++i) im.insert(im.end(), p[i], i + 1);
      out.emplace_back(std::move(im), n);
      return;
    }
    for (int v = rest - (n - 1 - idx); v >= 1; --v) {
      p[idx] = v;
      self(self, idx + 1, rest - v);
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> all_partitions(int m, int n) {
  if (n < 0 || m < n) return {};
  if (n == 0) return m == 0 ? std::vector<Partition>{Partition()} : std::vector<Partition>{};
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest, int left, int max_part) -> void {
    if (left == 0) {
      if (rest == 0) out.emplace_back(parts);
      return;
    }
    int hi = std::min(max_part, rest - (left - 1));
    int lo = (rest + left - 1) / left;
    for (int v = hi; v >= lo; --v) {
      parts.push_back(v);
      self(self, rest - v, left - 1, v);
      parts.pop_back();
    }
  };
  rec(rec, m, n, m);
  return out;
}

std::vector<Partition> all_partitions_of(int n) {
  std::vector<Partition> out;
  for (int k = (n == 0 ? 0 : 1); k <= n; ++k) {
    auto part = all_partitions(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (n == 0) out.push_back(Partition());
  return out;
}

std::vector<Permutation> all_unshuffles(const std::vector<int>& fiber_sizes) {
  // Each surjection with exactly these fiber sizes factors as s o a with a
  // distinct unshuffle a, and every unshuffle arises this way.
  const int n = static_cast<int>(fiber_sizes.size());
  std::vector<int> word;
  for (int i = 0; i < n; ++i) word.insert(word.end(), fiber_sizes[i], i + 1);
  std::sort(word.begin(), word.end());
  std::vector<Permutation> out;
  do {
    out.push_back(decompose(Surjection(word, n)).unshuffle);
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace eprop
