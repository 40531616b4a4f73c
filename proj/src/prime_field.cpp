#include "lincert/prime_field.hpp"

#include <array>
#include <stdexcept>

namespace lincert {

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p < 2 || p >> 63 != 0) throw std::invalid_argument("PrimeField modulus out of range");
}

u64 PrimeField::pow(u64 base, u64 exp) const noexcept {
  u64 result = 1 % p_;
  base %= p_;
  while (exp != 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

MontgomeryField::MontgomeryField(u64 p) : p_(p) {
  if (p % 2 == 0 || p >> 62 != 0) throw std::invalid_argument("Montgomery modulus must be odd and < 2^62");
  // Newton iteration for p^{-1} mod 2^64.
  u64 inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  neg_inv_ = ~inv + 1;
  one_ = to_mont(1);
}

u64 MontgomeryField::inv(u64 a) const noexcept {
  u64 result = one_;
  u64 exp = p_ - 2;
  while (exp != 0) {
    if (exp & 1) result = mul(result, a);
    a = mul(a, a);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n >> 63 != 0) throw std::invalid_argument("is_prime supports n < 2^63");
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  const PrimeField f(n);
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::span<const u64> oracle_primes() {
  static constexpr std::array<u64, 16> primes = {
      4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL, 4611686018427387761ULL,
      4611686018427387751ULL, 4611686018427387737ULL, 4611686018427387733ULL, 4611686018427387709ULL,
      4611686018427387701ULL, 4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387587ULL,
      4611686018427387461ULL, 4611686018427387421ULL, 4611686018427387409ULL, 4611686018427387329ULL,
  };
  return primes;
}

}  // namespace lincert
