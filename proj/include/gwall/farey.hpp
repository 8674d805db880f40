#pragma once

#include <functional>
#include <optional>

#include "gwall/rational.hpp"

namespace gwall {

/// Reduced fraction with positive denominator; mpq_class is kept canonical.
using Fraction = Rational;

/// Largest fraction strictly below x with denominator <= n (n >= 1).
Fraction farey_predecessor(const Fraction& x, long n);

/// Smallest fraction strictly above x with denominator <= n (n >= 1).
Fraction farey_successor(const Fraction& x, long n);

/// (num_a + num_b) / (den_a + den_b), reduced. Requires a < b.
Fraction mediant(const Fraction& a, const Fraction& b);

/// num_b den_a - num_a den_b == 1. Requires a < b.
bool are_farey_neighbors(const Fraction& a, const Fraction& b);

/// Minimal-denominator fraction in the open interval (lo, hi) with
/// denominator <= nmax; ties at denominator 1 go to the integer of least
/// absolute value. Requires lo < hi.
std::optional<Fraction> fraction_in_interval(const Fraction& lo, const Fraction& hi, long nmax);

/// Same search with the endpoints given by predicates, so that irrational
/// endpoints can be handled exactly. `above_lo(x)` must be monotone
/// (false then true), `below_hi(x)` monotone (true then false), and
/// `floor_hint` an integer with above_lo(floor_hint) false.
std::optional<Fraction> fraction_in_interval(const std::function<bool(const Fraction&)>& above_lo,
                                             const std::function<bool(const Fraction&)>& below_hi,
                                             const Integer& floor_hint, long nmax);

/// Reduced slope of the extremal character for a character of reduced slope
/// mu_v and rank r_v, on a surface whose effective line bundles have reduced
/// slope at least d.
Rational extremal_reduced_slope(const Rational& mu_v, long r_v, const Rational& d);

}  // namespace gwall
