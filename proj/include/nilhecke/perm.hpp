#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilhecke {

/// Largest number of strands a Permutation may carry.
inline constexpr int kMaxStrands = 12;

/// Largest n for which the full S_n lookup tables are materialized.
inline constexpr int kMaxTableStrands = 9;

class SizeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Element of S_n in one-line notation: image[p-1] = w(p), values 1..n.
///
/// Composition follows (u * v)(x) = u(v(x)). Left multiplication by s_i
/// swaps the values i and i+1, right multiplication swaps positions.
class Permutation {
public:
  Permutation() : image_{1} {}

  static Permutation identity(int n);
  /// Validates that `image` is a bijection of {1..n} with 1 <= n <= kMaxStrands.
  static Permutation from_one_line(std::vector<int> image);
  /// The adjacent transposition s_i = (i i+1), 1 <= i <= n-1.
  static Permutation generator(int n, int i);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int p) const { return image_[static_cast<std::size_t>(p - 1)]; }
  std::span<const int> one_line() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on one-line notation (sizes compared first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// Generator indices, each in 1..n-1.
using Word = std::vector<int>;

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

/// Inversion count.
int length(const Permutation& w);

/// l(s_i w) < l(w): value i sits to the right of value i+1.
bool left_descent(const Permutation& w, int i);
/// l(w s_i) < l(w): w(i) > w(i+1).
bool right_descent(const Permutation& w, int i);

Permutation evaluate(const Word& word, int n);

/// Lexicographically smallest reduced word.
Word reduced_word(const Permutation& w);

Permutation longest_element(int n);

/// w0 * w * w0; sends s_i to s_{n-i}.
Permutation conjugate_by_w0(const Permutation& w);

std::uint64_t factorial(int n);

/// Rank of `w` among all permutations of its size in lexicographic order.
std::size_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::size_t rank);

std::string to_string(const Permutation& w);
std::string to_string(const Word& word);

/// Cached lookup tables for S_n with elements indexed by lexicographic rank.
///
/// Immutable after construction; obtain shared instances via symmetric_group().
class SymmetricGroup {
public:
  explicit SymmetricGroup(int n);

  int strands() const { return n_; }
  std::size_t order() const { return elements_.size(); }

  const Permutation& element(std::size_t idx) const { return elements_[idx]; }
  std::size_t index_of(const Permutation& w) const;

  int length(std::size_t idx) const { return lengths_[idx]; }
  /// Index of s_i * w.
  std::size_t left_mul(int i, std::size_t idx) const { return left_[offset(idx, i)]; }
  /// Index of w * s_i.
  std::size_t right_mul(std::size_t idx, int i) const { return right_[offset(idx, i)]; }
  bool left_descent(int i, std::size_t idx) const { return lengths_[left_mul(i, idx)] < lengths_[idx]; }
  bool right_descent(std::size_t idx, int i) const { return lengths_[right_mul(idx, i)] < lengths_[idx]; }

  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return elements_.size() - 1; }
  std::size_t inverse(std::size_t idx) const { return inverse_[idx]; }
  std::size_t conjugate_by_w0(std::size_t idx) const { return conjugate_[idx]; }

  /// Canonical reduced word of element `idx`.
  Word reduced_word(std::size_t idx) const;

private:
  std::size_t offset(std::size_t idx, int i) const {
    return idx * static_cast<std::size_t>(n_ > 1 ? n_ - 1 : 1) + static_cast<std::size_t>(i - 1);
  }

  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> conjugate_;
};

/// Shared, lazily built tables for 1 <= n <= kMaxTableStrands. Thread-safe.
const SymmetricGroup& symmetric_group(int n);

}  // namespace nilhecke
