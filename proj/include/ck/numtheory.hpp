#pragma once

#include <optional>
#include <vector>

namespace ck {

struct PrimePower {
  long long prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(long long n);

/// (p, k) with n = p^k and k >= 1, or nullopt (n = 1 or several prime divisors).
std::optional<PrimePower> prime_power_info(long long n);

std::vector<long long> prime_divisors(long long n);
std::vector<PrimePower> factorize(long long n);

/// Largest power of p dividing n.
long long p_part(long long n, long long p);

long long isqrt(long long n);
long long pow_mod(long long base, long long exp, long long mod);
long long inv_mod(long long a, long long p);

/// Smallest generator of GF(p)*.
long long primitive_root(long long p);

}  // namespace ck
