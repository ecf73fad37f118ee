#include "ck/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ck {

namespace {

// Exact division of integer polynomials, both low-first; divisor monic.
std::vector<long long> divide_exact(std::vector<long long> num,
                                    const std::vector<long long>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<long long> q(dn - dd + 1, 0);
  for (int d = dn; d >= dd; --d) {
    const long long c = num[d];
    if (c == 0) continue;
    q[d - dd] = c;
    for (int k = 0; k <= dd; ++k) num[d - dd + k] -= c * den[k];
  }
  for (long long c : num) {
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  }
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int e) {
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be >= 1");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;

  // x^e - 1 divided by all lower-index cyclotomic factors.
  std::function<const std::vector<long long>&(int)> get =
      [&](int m) -> const std::vector<long long>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) num = divide_exact(std::move(num), get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(e);
}

CycValue::CycValue(int e, std::vector<long long> raw) : e_(e) {
  if (e < 1) throw std::invalid_argument("CycValue: e must be >= 1");
  const auto& phi = cyclotomic_polynomial(e);
  const int deg = static_cast<int>(phi.size()) - 1;
  // Fold exponents mod e (zeta^e = 1), then reduce modulo the cyclotomic.
  std::vector<long long> folded(e, 0);
  for (size_t i = 0; i < raw.size(); ++i) folded[i % e] += raw[i];
  for (int d = e - 1; d >= deg; --d) {
    const long long c = folded[d];
    if (c == 0) continue;
    folded[d] = 0;
    for (int k = 0; k < deg; ++k) folded[d - deg + k] -= c * phi[k];
  }
  folded.resize(deg);
  coeffs_ = std::move(folded);
}

CycValue CycValue::integer(int e, long long n) {
  return CycValue(e, {n});
}

CycValue CycValue::root_power(int e, long long k) {
  k %= e;
  if (k < 0) k += e;
  std::vector<long long> raw(static_cast<size_t>(k) + 1, 0);
  raw.back() = 1;
  return CycValue(e, std::move(raw));
}

CycValue CycValue::from_root_multiplicities(int e, int m, const std::vector<long long>& mults) {
  if (m < 1 || e % m != 0)
    throw std::invalid_argument("from_root_multiplicities: m must divide e");
  std::vector<long long> raw(e, 0);
  for (size_t k = 0; k < mults.size(); ++k)
    raw[(static_cast<long long>(e / m) * k) % e] += mults[k];
  return CycValue(e, std::move(raw));
}

bool CycValue::is_zero() const {
  for (long long c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycValue::is_integer(long long n) const {
  if (coeffs_.empty()) return n == 0;
  if (coeffs_[0] != n) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycValue CycValue::conjugate() const {
  std::vector<long long> raw(e_, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    raw[(e_ - static_cast<int>(i)) % e_] += coeffs_[i];
  return CycValue(e_, std::move(raw));
}

std::complex<double> CycValue::to_complex() const {
  std::complex<double> out = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(i) / e_;
    out += static_cast<double>(coeffs_[i]) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return out;
}

namespace {
void check_same_ring(const CycValue& a, const CycValue& b) {
  if (a.exponent_ring() != b.exponent_ring())
    throw std::logic_error("CycValue: mixed exponent rings");
}
}  // namespace

CycValue operator+(const CycValue& a, const CycValue& b) {
  check_same_ring(a, b);
  std::vector<long long> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return CycValue(a.exponent_ring(), std::move(c));
}

CycValue operator-(const CycValue& a, const CycValue& b) {
  check_same_ring(a, b);
  std::vector<long long> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return CycValue(a.exponent_ring(), std::move(c));
}

CycValue operator*(const CycValue& a, const CycValue& b) {
  check_same_ring(a, b);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<long long> conv(ca.size() + cb.size(), 0);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j) conv[i + j] += ca[i] * cb[j];
  }
  return CycValue(a.exponent_ring(), std::move(conv));
}

}  // namespace ck
