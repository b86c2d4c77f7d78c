#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgt/numeric.hpp"

namespace fgt {

namespace detail {

// Verification primes P = 1 (mod e) near 2^61, each with a fixed primitive
// e-th root of unity, generated on demand and cached per conductor.
struct ZeroTestPrime {
  std::uint64_t p;
  std::uint64_t root;  // element of multiplicative order exactly e
};

inline std::uint64_t find_root_of_order(std::uint64_t e, std::uint64_t p) {
  std::vector<std::uint64_t> prime_divs;
  std::uint64_t m = e;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_divs.push_back(m);
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint64_t z = powmod(a, (p - 1) / e, p);
    if (z == 1) continue;
    bool full_order = true;
    for (std::uint64_t q : prime_divs)
      if (powmod(z, e / q, p) == 1) {
        full_order = false;
        break;
      }
    if (full_order) return z;
  }
  throw std::logic_error("no element of the requested order found");
}

inline const std::vector<ZeroTestPrime>& zero_test_primes(std::uint64_t e,
                                                          std::size_t count) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<ZeroTestPrime>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& list = cache[e];
  std::uint64_t next = list.empty() ? ((1ull << 61) / e + 1) * e + 1
                                    : list.back().p + e;
  while (list.size() < count) {
    for (;; next += e) {
      if (is_prime_u64(next)) break;
    }
    list.push_back({next, find_root_of_order(e, next)});
    next += e;
  }
  return list;
}

}  // namespace detail

// An element of Z[z] for z a primitive e-th root of unity, stored as an
// integer coefficient vector modulo x^e - 1. Two representatives are equal
// when their difference is a multiple of the e-th cyclotomic polynomial;
// equality is decided by evaluating at all primitive e-th roots modulo
// verification primes whose product exceeds the norm bound, which makes the
// test exact.
class CyclotomicInteger {
 public:
  CyclotomicInteger() : conductor_(1), coeffs_(1, 0) {}

  explicit CyclotomicInteger(std::uint64_t conductor)
      : conductor_(conductor), coeffs_(conductor, 0) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  }

  static CyclotomicInteger integer(std::uint64_t conductor, long long n) {
    CyclotomicInteger c(conductor);
    c.coeffs_[0] = n;
    return c;
  }

  // z^k
  static CyclotomicInteger root_power(std::uint64_t conductor, std::uint64_t k) {
    CyclotomicInteger c(conductor);
    c.coeffs_[k % conductor] = 1;
    return c;
  }

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long& coeff(std::size_t k) { return coeffs_[k]; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const {
    check_same(o);
    CyclotomicInteger r(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      r.coeffs_[k] = add_checked(coeffs_[k], o.coeffs_[k]);
    return r;
  }

  CyclotomicInteger operator-(const CyclotomicInteger& o) const {
    check_same(o);
    CyclotomicInteger r(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      r.coeffs_[k] = add_checked(coeffs_[k], -o.coeffs_[k]);
    return r;
  }

  // Cyclic convolution modulo x^e - 1.
  CyclotomicInteger operator*(const CyclotomicInteger& o) const {
    check_same(o);
    CyclotomicInteger r(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (o.coeffs_[j] == 0) continue;
        std::size_t k = i + j;
        if (k >= conductor_) k -= conductor_;
        r.coeffs_[k] = add_checked(r.coeffs_[k], mul_checked(coeffs_[i], o.coeffs_[j]));
      }
    }
    return r;
  }

  CyclotomicInteger scaled(long long s) const {
    CyclotomicInteger r(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      r.coeffs_[k] = mul_checked(coeffs_[k], s);
    return r;
  }

  // Complex conjugation: coefficient index reversal k -> (e - k) mod e.
  CyclotomicInteger conj() const {
    CyclotomicInteger r(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      r.coeffs_[(conductor_ - k) % conductor_] = coeffs_[k];
    return r;
  }

  // The Galois map z -> z^m; m must be coprime to the conductor.
  CyclotomicInteger galois(std::uint64_t m) const {
    if (std::gcd(m, conductor_) != 1)
      throw std::invalid_argument("galois exponent not coprime to conductor");
    CyclotomicInteger r(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      r.coeffs_[(k * m) % conductor_] = coeffs_[k];
    return r;
  }

  bool is_zero() const {
    long long bound = 0;
    for (long long c : coeffs_) bound = std::max(bound, std::llabs(c));
    if (bound == 0) return true;
    if (conductor_ == 1) return coeffs_[0] == 0;

    std::vector<std::uint64_t> primitive;
    for (std::uint64_t j = 1; j < conductor_; ++j)
      if (std::gcd(j, conductor_) == 1) primitive.push_back(j);
    if (conductor_ == 1) primitive.push_back(0);
    double phi = static_cast<double>(primitive.size());

    // Need prod(P_i) > (e * bound)^phi; each prime contributes ~61 bits.
    double needed_bits =
        phi * std::log2(static_cast<double>(conductor_) * static_cast<double>(bound) + 1.0);
    std::size_t prime_count = static_cast<std::size_t>(needed_bits / 61.0) + 1;
    const auto& primes = detail::zero_test_primes(conductor_, prime_count);

    for (std::size_t t = 0; t < prime_count; ++t) {
      std::uint64_t p = primes[t].p;
      for (std::uint64_t j : primitive) {
        std::uint64_t zj = powmod(primes[t].root, j, p);
        // Horner from the top coefficient
        std::uint64_t acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
          acc = mulmod(acc, zj, p);
          long long c = coeffs_[k] % static_cast<long long>(p);
          std::uint64_t cc = c < 0 ? static_cast<std::uint64_t>(c + static_cast<long long>(p))
                                   : static_cast<std::uint64_t>(c);
          acc += cc;
          if (acc >= p) acc -= p;
        }
        if (acc != 0) return false;
      }
    }
    return true;
  }

  bool equals(const CyclotomicInteger& o) const { return (*this - o).is_zero(); }

  // Rational iff invariant under every Galois map z -> z^m, gcd(m, e) = 1.
  bool is_rational() const {
    for (std::uint64_t m = 2; m < conductor_; ++m) {
      if (std::gcd(m, conductor_) != 1) continue;
      if (!equals(galois(m))) return false;
    }
    return true;
  }

  // The integer value of a rational cyclotomic integer (a rational algebraic
  // integer is a rational integer). Throws when the value is irrational.
  long long rational_value() const {
    std::complex<double> a = approx();
    long long guess = std::llround(a.real());
    if (equals(integer(conductor_, guess))) return guess;
    throw std::domain_error("cyclotomic value is not rational");
  }

  std::complex<double> approx() const {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI / static_cast<double>(conductor_));
    std::complex<double> acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;)
      acc = acc * z + static_cast<double>(coeffs_[k]);
    return acc;
  }

  std::string to_string() const {
    if (is_rational()) return std::to_string(rational_value());
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      long long c = coeffs_[k];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? "+" : "-");
      else if (c < 0) os << "-";
      long long a = std::llabs(c);
      if (a != 1 || k == 0) os << a;
      if (k > 0) {
        if (a != 1) os << "*";
        os << "z";
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void check_same(const CyclotomicInteger& o) const {
    if (conductor_ != o.conductor_)
      throw std::invalid_argument("conductor mismatch");
  }

  static long long add_checked(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
  }
  static long long mul_checked(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
  }

  std::uint64_t conductor_;
  std::vector<long long> coeffs_;
};

}  // namespace fgt
