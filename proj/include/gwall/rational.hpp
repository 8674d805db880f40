#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gwall {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). The result is
/// canonical. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Comma separated list of rationals, e.g. "1/2,-3,0".
QVec parse_rational_list(std::string_view text, char sep = ',');
std::string to_string(const QVec& v, std::string_view sep = ",");

bool is_integer(const Rational& q);
bool all_integer(const QVec& v);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Largest integer n with n*n <= q, q >= 0.
Integer isqrt_floor(const Rational& q);

/// Decimal rendering, rounded half away from zero, with `digits` decimals.
std::string format_fixed(const Rational& q, int digits);

/// Decimal rendering of sqrt(q), truncated to `digits` decimals. q >= 0.
std::string format_sqrt_fixed(const Rational& q, int digits);

/// Floating approximation, only for rendering and diagnostics.
double to_double(const Rational& q);

/// True iff q is the square of a rational; stores the root in `root`.
bool rational_sqrt(const Rational& q, Rational& root);

// Elementwise helpers.
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& s, const QVec& a);
bool is_zero(const QVec& v);

}  // namespace gwall
