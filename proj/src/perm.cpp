#include "nilhecke/perm.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nilhecke {

namespace {

void check_strands(int n) {
  if (n < 1 || n > kMaxStrands) {
    throw std::invalid_argument("number of strands must lie in 1.." + std::to_string(kMaxStrands) +
                                ", got " + std::to_string(n));
  }
}

void check_generator(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n - 1));
  }
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_strands(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  check_strands(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::generator(int n, int i) {
  check_strands(n);
  check_generator(n, i);
  auto w = identity(n);
  std::swap(w.image_[static_cast<std::size_t>(i - 1)], w.image_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t p = 0; p < image_.size(); ++p) {
    inv[static_cast<std::size_t>(image_[p] - 1)] = static_cast<int>(p) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (image_[p] != static_cast<int>(p) + 1) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.image_.begin(), a.image_.end(), b.image_.begin(),
                                                b.image_.end());
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw SizeMismatch("cannot compose permutations of " + std::to_string(u.size()) + " and " +
                       std::to_string(v.size()) + " strands");
  }
  std::vector<int> image(static_cast<std::size_t>(u.size()));
  for (int x = 1; x <= u.size(); ++x) image[static_cast<std::size_t>(x - 1)] = u(v(x));
  return Permutation::from_one_line(std::move(image));
}

int length(const Permutation& w) {
  const auto img = w.one_line();
  int count = 0;
  for (std::size_t x = 0; x < img.size(); ++x) {
    for (std::size_t y = x + 1; y < img.size(); ++y) {
      if (img[x] > img[y]) ++count;
    }
  }
  return count;
}

bool left_descent(const Permutation& w, int i) {
  check_generator(w.size(), i);
  const auto img = w.one_line();
  const auto pos_i = std::find(img.begin(), img.end(), i);
  const auto pos_next = std::find(img.begin(), img.end(), i + 1);
  return pos_i > pos_next;
}

bool right_descent(const Permutation& w, int i) {
  check_generator(w.size(), i);
  return w(i) > w(i + 1);
}

Permutation evaluate(const Word& word, int n) {
  check_strands(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  // Right multiplication by each letter in turn swaps positions.
  for (int letter : word) {
    check_generator(n, letter);
    std::swap(image[static_cast<std::size_t>(letter - 1)], image[static_cast<std::size_t>(letter)]);
  }
  return Permutation::from_one_line(std::move(image));
}

Word reduced_word(const Permutation& w) {
  // The first letter of a reduced word is a left descent; taking the smallest
  // one at each step gives the lexicographically smallest reduced word.
  Word word;
  std::vector<int> img(w.one_line().begin(), w.one_line().end());
  std::vector<int> pos(img.size() + 1);
  for (std::size_t p = 0; p < img.size(); ++p) pos[static_cast<std::size_t>(img[p])] = static_cast<int>(p);
  const int n = w.size();
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i = 1; i < n; ++i) {
      auto& pi = pos[static_cast<std::size_t>(i)];
      auto& pj = pos[static_cast<std::size_t>(i + 1)];
      if (pi > pj) {
        std::swap(img[static_cast<std::size_t>(pi)], img[static_cast<std::size_t>(pj)]);
        std::swap(pi, pj);
        word.push_back(i);
        progressed = true;
        break;
      }
    }
  }
  return word;
}

Permutation longest_element(int n) {
  check_strands(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) image[static_cast<std::size_t>(p - 1)] = n + 1 - p;
  return Permutation::from_one_line(std::move(image));
}

Permutation conjugate_by_w0(const Permutation& w) {
  const int n = w.size();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) image[static_cast<std::size_t>(p - 1)] = n + 1 - w(n + 1 - p);
  return Permutation::from_one_line(std::move(image));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::size_t lex_rank(const Permutation& w) {
  const auto img = w.one_line();
  const int n = w.size();
  std::size_t rank = 0;
  for (int p = 0; p < n; ++p) {
    std::size_t smaller_later = 0;
    for (int q = p + 1; q < n; ++q) {
      if (img[static_cast<std::size_t>(q)] < img[static_cast<std::size_t>(p)]) ++smaller_later;
    }
    rank += smaller_later * factorial(n - 1 - p);
  }
  return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
  check_strands(n);
  if (rank >= factorial(n)) throw IndexOutOfRange("lexicographic rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> image;
  image.reserve(pool.size());
  for (int p = 0; p < n; ++p) {
    const auto f = factorial(n - 1 - p);
    const auto k = rank / f;
    rank %= f;
    image.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation::from_one_line(std::move(image));
}

std::string to_string(const Permutation& w) {
  std::ostringstream os;
  os << '[';
  for (int p = 1; p <= w.size(); ++p) os << (p > 1 ? "," : "") << w(p);
  os << ']';
  return os.str();
}

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "." : "") << word[k];
  return os.str();
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > kMaxTableStrands) {
    throw std::invalid_argument("symmetric group tables support 1.." +
                                std::to_string(kMaxTableStrands) + " strands, got " +
                                std::to_string(n));
  }
  const auto order = static_cast<std::size_t>(factorial(n));
  const auto gens = static_cast<std::size_t>(n > 1 ? n - 1 : 1);
  elements_.reserve(order);
  lengths_.reserve(order);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    elements_.push_back(Permutation::from_one_line(image));
    lengths_.push_back(nilhecke::length(elements_.back()));
  } while (std::next_permutation(image.begin(), image.end()));

  left_.assign(order * gens, 0);
  right_.assign(order * gens, 0);
  inverse_.resize(order);
  conjugate_.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    const auto& w = elements_[idx];
    for (int i = 1; i < n; ++i) {
      left_[offset(idx, i)] =
          static_cast<std::uint32_t>(lex_rank(compose(Permutation::generator(n, i), w)));
      right_[offset(idx, i)] =
          static_cast<std::uint32_t>(lex_rank(compose(w, Permutation::generator(n, i))));
    }
    inverse_[idx] = static_cast<std::uint32_t>(lex_rank(w.inverse()));
    conjugate_[idx] = static_cast<std::uint32_t>(lex_rank(nilhecke::conjugate_by_w0(w)));
  }
}

std::size_t SymmetricGroup::index_of(const Permutation& w) const {
  if (w.size() != n_) {
    throw SizeMismatch("permutation on " + std::to_string(w.size()) + " strands used with S_" +
                       std::to_string(n_));
  }
  return lex_rank(w);
}

Word SymmetricGroup::reduced_word(std::size_t idx) const {
  Word word;
  while (lengths_[idx] > 0) {
    for (int i = 1; i < n_; ++i) {
      if (left_descent(i, idx)) {
        word.push_back(i);
        idx = left_mul(i, idx);
        break;
      }
    }
  }
  return word;
}

const SymmetricGroup& symmetric_group(int n) {
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxTableStrands + 1> cache;
  static std::mutex mutex;
  if (n < 1 || n > kMaxTableStrands) {
    throw std::invalid_argument("symmetric group tables support 1.." +
                                std::to_string(kMaxTableStrands) + " strands, got " +
                                std::to_string(n));
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot = std::make_unique<SymmetricGroup>(n);
  return *slot;
}

}  // namespace nilhecke
