#include "asg/bigint.hpp"

#include <gmp.h>

#include "asg/errors.hpp"

namespace asg {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.backend().data(), n, k);
  return out;
}

BigInt floor(const BigRational& q) {
  if (q < 0) throw ContractViolation("floor of a negative big rational");
  return BigInt(numerator(q) / denominator(q));
}

BigInt ceil(const BigRational& q) {
  if (q < 0) throw ContractViolation("ceil of a negative big rational");
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  return BigInt((num + den - 1) / den);
}

Real to_real(const Rational& c) { return Real(c.num()) / Real(c.den()); }

Real to_real(const BigRational& q) { return Real(numerator(q)) / Real(denominator(q)); }

Real ln2() { return log(Real(2)); }

Real euler_e() { return exp(Real(1)); }

Real log2(const Real& x) { return log(x) / ln2(); }

Real log2(const BigInt& x) {
  if (x <= 0) throw DomainError("log2 of a non-positive integer");
  return log2(Real(x));
}

Real log2_ratio(const BigInt& a, const BigInt& b) { return log2(a) - log2(b); }

std::uint64_t ceil_log2(const BigInt& m) {
  if (m <= 1) return 0;
  BigInt below = m - 1;
  return mpz_sizeinbase(below.backend().data(), 2);
}

}  // namespace asg
