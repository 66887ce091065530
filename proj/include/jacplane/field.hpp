#pragma once

#include <random>

#include "jacplane/common.hpp"

namespace jacplane {

// Deterministic Miller-Rabin for 64-bit inputs (fixed 12-base set).
bool is_prime_u64(u64 n);

// GF(p) for a prime modulus in (2^30, 2^31).  Elements are canonical
// representatives in [0, p) stored as u32; products are reduced with a
// precomputed Barrett constant so elimination inner loops avoid hardware
// division.
class PrimeField {
public:
  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }

  u32 add(u32 a, u32 b) const {
    u64 s = u64(a) + b;
    return s >= p_ ? u32(s - p_) : u32(s);
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : u32(u64(a) + p_ - b); }
  u32 neg(u32 a) const { return a ? u32(p_ - a) : 0; }
  u32 mul(u32 a, u32 b) const { return reduce(u64(a) * b); }
  u32 pow(u32 a, u64 e) const;
  u32 inv(u32 a) const;  // a != 0

  // Reduce any t < 2^62 (covers products of canonical elements).
  u32 reduce(u64 t) const {
    u64 q = u64((unsigned __int128)t * mu_ >> 64);
    u64 r = t - q * p_;
    while (r >= p_) r -= p_;
    return u32(r);
  }

  u32 from_i64(i64 v) const {
    i64 r = v % i64(p_);
    return u32(r < 0 ? r + i64(p_) : r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  u64 p_;
  u64 mu_;  // floor(2^64 / p)
};

// Next random prime in (2^30, 2^31) from the generator state; deterministic
// for a fixed seed.
u64 random_prime(std::mt19937_64& rng);

}  // namespace jacplane
