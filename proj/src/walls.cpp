#include "gwall/walls.hpp"

#include <algorithm>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

void require_semicircle(const Wall& w, const char* what) {
  if (!w.is_semicircle()) throw DomainError(std::string(what) + " needs a semicircular wall");
}

// sign(sqrt(a) - sqrt(b) - c) for a, b >= 0.
int sign_sqrt_difference(const Rational& a, const Rational& b, const Rational& c) {
  // Compare sqrt(a) with rhs = sqrt(b) + c.
  const int rhs_sign = sgn(c) >= 0 ? (sgn(b) > 0 || sgn(c) > 0 ? 1 : 0) : sgn(b - c * c);
  if (rhs_sign < 0) return 1;
  if (rhs_sign == 0) return sgn(a) > 0 ? 1 : 0;
  // Both sides nonnegative: compare a with b + c² + 2c sqrt(b).
  const Rational E = a - b - c * c;
  const Rational F2 = 4 * c * c * b;  // (2c sqrt(b))²
  if (sgn(c) >= 0) {
    if (sgn(E) < 0) return -1;
    return sgn(E * E - F2);
  }
  if (sgn(E) >= 0) return (sgn(E) == 0 && sgn(F2) == 0) ? 0 : 1;
  return sgn(F2 - E * E);
}

}  // namespace

Wall Wall::circle(const Rational& center, const Rational& radius_sq) {
  return {sgn(radius_sq) > 0 ? Kind::semicircle : Kind::empty, 0, center, radius_sq};
}

Wall wall_from_invariants(const SlopeDisc& v, const SlopeDisc& w) {
  if (v.mu == w.mu) return Wall::vertical_at(v.mu);
  const Rational s = (v.mu + w.mu) / 2 - (v.delta - w.delta) / (v.mu - w.mu);
  const Rational x = s - v.mu;
  return Wall::circle(s, x * x - 2 * v.delta);
}

Wall numerical_wall(const ChernCharacter& v, const ChernCharacter& w, const TwistDivisor& D,
                    const SurfaceData& S) {
  if (v.rank < 0 || w.rank < 0) throw DomainError("numerical_wall needs nonnegative ranks");
  if (v.rank == 0 && w.rank == 0) throw DomainError("numerical_wall: both ranks are 0");
  const ChernCharacter vv = v.rank == 0 ? v + w : v;
  const ChernCharacter ww = w.rank == 0 ? v + w : w;
  return wall_from_invariants(slope_disc(vv, D, S, SlopeMode::bar),
                              slope_disc(ww, D, S, SlopeMode::bar));
}

Nesting compare_walls(const Wall& w1, const Wall& w2) {
  require_semicircle(w1, "compare_walls");
  require_semicircle(w2, "compare_walls");
  if (w1.center > w2.center) return Nesting::nested_1_in_2;
  if (w1.center < w2.center) return Nesting::nested_2_in_1;
  return w1.radius_sq == w2.radius_sq ? Nesting::equal : Nesting::disjoint_or_incomparable;
}

Rational alpha_sq_on_wall(const Wall& w, const Rational& beta) {
  require_semicircle(w, "alpha_sq_on_wall");
  const Rational x = beta - w.center;
  return w.radius_sq - x * x;
}

int compare_with_right_endpoint(const Wall& w, const Rational& x) {
  require_semicircle(w, "compare_with_right_endpoint");
  const Rational d = x - w.center;
  if (sgn(d) <= 0) return -1;
  return sgn(d * d - w.radius_sq);
}

int compare_right_endpoints(const Wall& w1, const Wall& w2) {
  require_semicircle(w1, "compare_right_endpoints");
  require_semicircle(w2, "compare_right_endpoints");
  // x1 - x2 = sqrt(r1) - sqrt(r2) - (s2 - s1).
  return sign_sqrt_difference(w1.radius_sq, w2.radius_sq, w2.center - w1.center);
}

Rational higher_rank_radius_bound(long r_prime, const ChernCharacter& v, const TwistDivisor& D,
                                  const SurfaceData& S) {
  if (r_prime < 1) throw DomainError("higher_rank_radius_bound needs r' >= 1");
  const SlopeDisc sv = slope_disc(v, D, S, SlopeMode::bar);
  const Rational m = std::min(r_prime - 1, v.rank);
  return m * m / (2 * Rational(r_prime)) * sv.delta;
}

SlopeMap SlopeMap::for_slice(const SurfaceData& S, const TwistDivisor& D) {
  const Rational h2 = pair(S.H, S.H, S);
  return {Rational(S.e) / h2, pair(S.H, bar_twist(D, S).coords, S) / h2};
}

std::optional<Fraction> gap_check(const Wall& w, const Rational& mu_bar_w, const SlopeMap& map,
                                  long nmax) {
  require_semicircle(w, "gap_check");
  if (sgn(map.scale) <= 0) throw DomainError("slope map must be increasing");
  if (compare_with_right_endpoint(w, mu_bar_w) <= 0) return std::nullopt;  // empty interval
  return fraction_in_interval(
      [&](const Fraction& x) { return compare_with_right_endpoint(w, map.to_bar(x)) > 0; },
      [&](const Fraction& x) { return map.to_bar(x) < mu_bar_w; },
      floor(map.to_reduced(w.center)), nmax);
}

}  // namespace gwall
