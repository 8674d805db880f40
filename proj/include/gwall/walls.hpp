#pragma once

#include <optional>

#include "gwall/farey.hpp"
#include "gwall/invariants.hpp"

namespace gwall {

/// Numerical wall W(w, v) in the (β, α) half-plane of an (H,D)-slice. The radius
/// is kept squared; the right endpoint x_W = center + sqrt(radius_sq) is only
/// ever compared exactly (sign, then square).
struct Wall {
  enum class Kind { vertical, semicircle, empty };

  Kind kind = Kind::empty;
  Rational beta;       // vertical only
  Rational center;     // semicircle and empty
  Rational radius_sq;  // semicircle: > 0; empty: the nonpositive value, for diagnostics

  static Wall vertical_at(const Rational& beta) { return {Kind::vertical, beta, 0, 0}; }
  static Wall circle(const Rational& center, const Rational& radius_sq);

  bool is_semicircle() const { return kind == Kind::semicircle; }
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Wall between characters with the given bar-twisted invariants.
Wall wall_from_invariants(const SlopeDisc& v, const SlopeDisc& w);

/// W(w, v). A rank-0 argument is replaced by v + w, which has the same wall.
Wall numerical_wall(const ChernCharacter& v, const ChernCharacter& w, const TwistDivisor& D,
                    const SurfaceData& S);

enum class Nesting { nested_1_in_2, nested_2_in_1, equal, disjoint_or_incomparable };

/// Nesting of two semicircular walls of one character's family, left of its
/// vertical wall: the wall with the larger center is inside.
Nesting compare_walls(const Wall& w1, const Wall& w2);

/// radius_sq - (beta - center)²; negative means beta is off the wall.
Rational alpha_sq_on_wall(const Wall& w, const Rational& beta);

/// sign(x - x_W) for a semicircular wall.
int compare_with_right_endpoint(const Wall& w, const Rational& x);

/// sign(x_W1 - x_W2) for semicircular walls.
int compare_right_endpoints(const Wall& w1, const Wall& w2);

/// Upper bound on ρ² for walls of subobjects of rank r_prime whose sheaf map is
/// not injective: min(r'-1, r(v))² / (2r') · Δ̄(v).
Rational higher_rank_radius_bound(long r_prime, const ChernCharacter& v, const TwistDivisor& D,
                                  const SurfaceData& S);

/// μ̄ = scale·μ̃ - offset, with scale = e/H² and offset = H·(D+K/2)/H².
struct SlopeMap {
  Rational scale = 1;
  Rational offset = 0;

  static SlopeMap for_slice(const SurfaceData& S, const TwistDivisor& D);
  Rational to_bar(const Rational& reduced) const { return scale * reduced - offset; }
  Rational to_reduced(const Rational& bar) const { return (bar + offset) / scale; }
};

/// Minimal-denominator reduced slope (denominator <= nmax) whose μ̄-image
/// lies in (x_W, mu_bar_w), or nullopt if there is none.
std::optional<Fraction> gap_check(const Wall& w, const Rational& mu_bar_w, const SlopeMap& map,
                                  long nmax);

}  // namespace gwall
