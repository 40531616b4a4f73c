#pragma once

#include <cstdint>
#include <span>

namespace lincert {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

/// Arithmetic modulo a prime p < 2^63 on canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 modulus() const noexcept { return p_; }
  u64 reduce(u64 x) const noexcept { return x % p_; }
  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 pow(u64 base, u64 exp) const noexcept;
  u64 inv(u64 a) const noexcept { return pow(a, p_ - 2); }

 private:
  u64 p_;
};

/// Montgomery representation for p < 2^62, R = 2^64. Values in the field are
/// stored as aR mod p; only mul/add/sub are needed inside elimination.
class MontgomeryField {
 public:
  explicit MontgomeryField(u64 p);

  u64 modulus() const noexcept { return p_; }
  u64 to_mont(u64 a) const noexcept { return static_cast<u64>((static_cast<u128>(a) << 64) % p_); }
  u64 from_mont(u64 a) const noexcept { return redc(a); }

  u64 mul(u64 a, u64 b) const noexcept { return redc(static_cast<u128>(a) * b); }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 inv(u64 a) const noexcept;  // a and the result in Montgomery form

 private:
  u64 redc(u128 t) const noexcept {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 neg_inv_;  // -p^{-1} mod 2^64
  u64 one_;      // R mod p
};

/// Deterministic Miller-Rabin for n < 2^63.
bool is_prime(u64 n);

/// Fixed table of primes just below 2^62.
std::span<const u64> oracle_primes();

}  // namespace lincert
