#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "asg/rational.hpp"

namespace asg {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;
/// 100 decimal digits, far beyond the 64 fractional bits the log slacks need.
using Real = boost::multiprecision::mpfr_float_100;

/// binom(n, k), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// ceil / floor of a non-negative big rational.
BigInt ceil(const BigRational& q);
BigInt floor(const BigRational& q);

Real to_real(const Rational& c);
Real to_real(const BigRational& q);
Real log2(const Real& x);
/// log2 of a positive big integer, evaluated in Real precision.
Real log2(const BigInt& x);
/// log2(a / b) for positive big integers.
Real log2_ratio(const BigInt& a, const BigInt& b);

Real euler_e();
Real ln2();

/// Smallest b with 2^b >= m (0 for m <= 1).
std::uint64_t ceil_log2(const BigInt& m);

}  // namespace asg
