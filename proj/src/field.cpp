#include "jacplane/field.hpp"

namespace jacplane {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return u64((unsigned __int128)a * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : kMrBases) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kMrBases) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p <= (u64(1) << 30) || p >= (u64(1) << 31))
    throw InputError("prime field modulus must lie in (2^30, 2^31), got " +
                     std::to_string(p));
  if (!is_prime_u64(p))
    throw InputError("modulus " + std::to_string(p) + " is not prime");
  mu_ = u64(((unsigned __int128)1 << 64) / p);
}

u32 PrimeField::pow(u32 a, u64 e) const {
  u32 r = 1;
  u32 base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

u32 PrimeField::inv(u32 a) const {
  if (a == 0) throw InternalError("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

u64 random_prime(std::mt19937_64& rng) {
  for (;;) {
    u64 v = rng() & 0x7FFFFFFFu;
    if (v <= (u64(1) << 30)) continue;
    v |= 1;
    if (v < (u64(1) << 31) && is_prime_u64(v)) return v;
  }
}

}  // namespace jacplane
