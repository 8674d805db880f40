#pragma once

#include "gwall/lattice.hpp"

namespace gwall {

/// ch^B = e^{-B} ch.
struct TwistedChern {
  Rational ch0;
  QVec ch1;
  Rational ch2;
};

TwistedChern twisted_chern(const ChernCharacter& v, const TwistDivisor& B, const SurfaceData& S);

/// plain: (H,D)-invariants. bar: the same after the extra twist by K/2.
enum class SlopeMode { plain, bar };

struct SlopeDisc {
  Rational mu;
  Rational delta;
  long rank = 0;
};

SlopeDisc slope_disc(const ChernCharacter& v, const TwistDivisor& D, const SurfaceData& S,
                     SlopeMode mode);

/// D + K/2.
TwistDivisor bar_twist(const TwistDivisor& D, const SurfaceData& S);

/// μ̃_H(v) = H·c1 / (r e).
Rational reduced_slope(const ChernCharacter& v, const SurfaceData& S);

/// Lattice discriminant c1²/(2r²) - ch2/r. Bogomolov: >= 0 for semistable sheaves.
Rational lattice_discriminant(const ChernCharacter& v, const SurfaceData& S);

/// Bridgeland slope ν of v at σ_{β,α}, as a function of α² to stay inside Q.
Rational bridgeland_slope(const ChernCharacter& v, const TwistDivisor& D, const SurfaceData& S,
                          const Rational& beta, const Rational& alpha_sq);
Rational bridgeland_slope(const SlopeDisc& bar, const Rational& beta, const Rational& alpha_sq);

/// LHS - RHS of r(v)Δ̄(v) = r(w)Δ̄(w) + r(u)Δ̄(u) - r(w)r(u)/(2r(v)) (μ̄(w)-μ̄(u))²
/// with u = v - w. Always zero; kept as a cross-check of slope_disc.
Rational discriminant_identity_residual(const ChernCharacter& v, const ChernCharacter& w,
                                        const TwistDivisor& D, const SurfaceData& S);

}  // namespace gwall
