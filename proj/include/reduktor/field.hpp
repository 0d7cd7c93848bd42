#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "reduktor/errors.hpp"
#include "reduktor/rng.hpp"

namespace reduktor {

// Deterministic Miller-Rabin, exact for n < 3'215'031'751 (bases 2,3,5,7).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return (unsigned __int128)a * b % n;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e) {
      if (e & 1) x = mulmod(x, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Prime field F_p with canonical representatives in [0, p).  p < 2^32 keeps
// products inside 64 bits.
class PrimeField {
public:
  using Elem = std::uint64_t;

  static constexpr std::uint64_t default_characteristic = 2147483647ull;

  explicit PrimeField(std::uint64_t p = default_characteristic) : p_(p) {
    if (p >= (1ull << 32))
      throw unsupported_error("field characteristic must be below 2^32");
    if (!is_prime_u64(p))
      throw error("field characteristic " + std::to_string(p) +
                  " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }
  static constexpr bool is_rational = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return a * b % p_; }

  Elem inv(Elem a) const {
    if (a == 0) throw error("division by zero in prime field");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = (std::int64_t)p_, nr = (std::int64_t)a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += (std::int64_t)p_;
    return (Elem)t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const {
    long long m = v % (long long)p_;
    if (m < 0) m += (long long)p_;
    return (Elem)m;
  }

  // Decimal digit fold; handles literals of any length.
  Elem from_decimal(const std::string& digits) const {
    Elem acc = 0;
    for (char c : digits) acc = add(mul(acc, 10 % p_), (Elem)((c - '0') % p_));
    return acc;
  }

  Elem random(SeededRng& rng) const { return rng.below(p_); }
  Elem random_nonzero(SeededRng& rng) const { return 1 + rng.below(p_ - 1); }

  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

// Exact rationals.  Noticeably slower than F_p; selected with `field 0`.
class RationalField {
public:
  using Elem = boost::multiprecision::cpp_rational;

  std::uint64_t characteristic() const { return 0; }
  static constexpr bool is_rational = true;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw error("division by zero in rational field");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const { return Elem(v); }
  Elem from_decimal(const std::string& digits) const { return Elem(digits); }

  // Uniform integer below the default prime; generic enough for sampling.
  Elem random(SeededRng& rng) const {
    return Elem(rng.below(PrimeField::default_characteristic));
  }
  Elem random_nonzero(SeededRng& rng) const {
    return Elem(1 + rng.below(PrimeField::default_characteristic - 1));
  }

  std::string str(const Elem& a) const { return a.str(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace reduktor
