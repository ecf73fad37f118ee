#pragma once

#include <complex>
#include <vector>

namespace ck {

/// Coefficients of the e-th cyclotomic polynomial, low degree first, monic.
const std::vector<long long>& cyclotomic_polynomial(int e);

/// An element of Z[zeta_e] in the canonical power basis 1, zeta, ...,
/// zeta^(phi(e)-1); coefficients are reduced modulo the e-th cyclotomic
/// polynomial, so equality is coefficient-wise.
class CycValue {
 public:
  CycValue() : CycValue(1, {}) {}
  CycValue(int e, std::vector<long long> raw_power_coeffs);  // reduces

  static CycValue integer(int e, long long n);
  static CycValue root_power(int e, long long k);  // zeta_e^k

  /// sum_k mults[k] * zeta_m^k with m dividing e.
  static CycValue from_root_multiplicities(int e, int m, const std::vector<long long>& mults);

  int exponent_ring() const { return e_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer(long long n) const;
  CycValue conjugate() const;  // zeta -> zeta^(-1)
  std::complex<double> to_complex() const;

  friend CycValue operator+(const CycValue& a, const CycValue& b);
  friend CycValue operator-(const CycValue& a, const CycValue& b);
  friend CycValue operator*(const CycValue& a, const CycValue& b);
  bool operator==(const CycValue&) const = default;

 private:
  int e_ = 1;
  std::vector<long long> coeffs_;  // size = deg of the e-th cyclotomic
};

}  // namespace ck
