#include "nilhecke/rational.hpp"

#include <ostream>
#include <random>
#include <stdexcept>

namespace nilhecke {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num_text) || !valid_int(den_text) || den_text.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Integer num(strip_plus(num_text), 10);
  Integer den(strip_plus(den_text), 10);
  if (den == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational inverse(const Rational& x) { return Rational(1) / x; }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

std::uint64_t ModP::adopt(const ModP& o) {
  if (modulus_ == 0) modulus_ = o.modulus_;
  return modulus_;
}

ModP& ModP::operator+=(const ModP& o) {
  const auto p = adopt(o);
  if (p == 0) return *this;
  const auto s = static_cast<unsigned __int128>(value_) + o.value_;
  value_ = static_cast<std::uint64_t>(s % p);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  const auto p = adopt(o);
  if (p == 0) return *this;
  value_ = value_ >= o.value_ ? value_ - o.value_ : p - (o.value_ - value_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  const auto p = adopt(o);
  if (p == 0) return *this;
  value_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * o.value_ % p);
  return *this;
}

ModP& ModP::operator/=(const ModP& o) { return *this *= inverse(o); }

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

ModP inverse(const ModP& x) {
  if (x.value() == 0) throw std::domain_error("inverse of zero modulo p");
  // Fermat: the modulus is prime.
  return ModP(pow_mod(x.value(), x.modulus() - 2, x.modulus()), x.modulus());
}

ModP reduce_mod(const Rational& x, std::uint64_t prime) {
  const Integer p(std::to_string(prime), 10);
  Integer num = x.numerator() % p;
  if (num < 0) num += p;
  const Integer den = x.denominator() % p;
  if (den == 0) throw std::domain_error("prime divides denominator of " + x.str());
  const ModP n(std::stoull(num.get_str()), prime);
  const ModP d(std::stoull(den.get_str()), prime);
  return n / d;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    auto x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < r; ++k) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 61, (1ULL << 62) - 1);
  for (;;) {
    const auto candidate = dist(rng) | 1ULL;
    if (is_prime_u64(candidate)) return candidate;
  }
}

}  // namespace nilhecke
