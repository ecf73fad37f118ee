#include "ck/numtheory.hpp"

#include <cmath>
#include <stdexcept>

namespace ck {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_info(long long n) {
  if (n <= 1) return std::nullopt;
  long long p = n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> ps;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<PrimePower> factorize(long long n) {
  std::vector<PrimePower> fs;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int k = 0;
      while (n % d == 0) {
        n /= d;
        ++k;
      }
      fs.push_back({d, k});
    }
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

long long p_part(long long n, long long p) {
  long long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

long long isqrt(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

long long pow_mod(long long base, long long exp, long long mod) {
  base %= mod;
  if (base < 0) base += mod;
  long long r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

long long primitive_root(long long p) {
  if (p == 2) return 1;
  const auto qs = prime_divisors(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : qs) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: search exhausted");
}

}  // namespace ck
