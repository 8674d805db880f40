#include "gwall/invariants.hpp"

#include "gwall/errors.hpp"

namespace gwall {

namespace {

void require_positive_rank(const ChernCharacter& v, const char* what) {
  if (v.rank <= 0) {
    throw DomainError(std::string("slope undefined at rank ") + std::to_string(v.rank) + " (" +
                      what + ")");
  }
}

}  // namespace

TwistedChern twisted_chern(const ChernCharacter& v, const TwistDivisor& B, const SurfaceData& S) {
  require_dimension(v.c1, S, "c1");
  require_dimension(B.coords, S, "twist divisor");
  const Rational r = v.rank;
  return {r, v.c1 - r * B.coords,
          v.ch2 - pair(B.coords, v.c1, S) + pair(B.coords, B.coords, S) / 2 * r};
}

TwistDivisor bar_twist(const TwistDivisor& D, const SurfaceData& S) {
  require_dimension(D.coords, S, "twist divisor");
  return {D.coords + Rational(1, 2) * S.K};
}

SlopeDisc slope_disc(const ChernCharacter& v, const TwistDivisor& D, const SurfaceData& S,
                     SlopeMode mode) {
  require_positive_rank(v, "slope_disc");
  const TwistDivisor B = mode == SlopeMode::bar ? bar_twist(D, S) : D;
  const TwistedChern t = twisted_chern(v, B, S);
  const Rational h2r = pair(S.H, S.H, S) * t.ch0;
  const Rational mu = pair(S.H, t.ch1, S) / h2r;
  return {mu, mu * mu / 2 - t.ch2 / h2r, v.rank};
}

Rational reduced_slope(const ChernCharacter& v, const SurfaceData& S) {
  require_positive_rank(v, "reduced_slope");
  if (S.e == 0) throw ValidationError("surface '" + S.name + "' has not been validated (e = 0)");
  return pair(v.c1, S.H, S) / (Rational(v.rank) * Rational(S.e));
}

Rational lattice_discriminant(const ChernCharacter& v, const SurfaceData& S) {
  require_positive_rank(v, "lattice_discriminant");
  const Rational r = v.rank;
  return pair(v.c1, v.c1, S) / (2 * r * r) - v.ch2 / r;
}

Rational bridgeland_slope(const SlopeDisc& bar, const Rational& beta, const Rational& alpha_sq) {
  if (sgn(alpha_sq) <= 0) throw DomainError("alpha^2 must be positive");
  const Rational x = bar.mu - beta;
  if (sgn(x) == 0) throw DomainError("beta lies on the vertical wall of the character");
  return (x * x - alpha_sq - 2 * bar.delta) / x;
}

Rational bridgeland_slope(const ChernCharacter& v, const TwistDivisor& D, const SurfaceData& S,
                          const Rational& beta, const Rational& alpha_sq) {
  return bridgeland_slope(slope_disc(v, D, S, SlopeMode::bar), beta, alpha_sq);
}

Rational discriminant_identity_residual(const ChernCharacter& v, const ChernCharacter& w,
                                        const TwistDivisor& D, const SurfaceData& S) {
  const ChernCharacter u = v - w;
  if (v.rank <= 0 || w.rank <= 0 || u.rank <= 0) {
    throw DomainError("discriminant identity needs r(v), r(w), r(v-w) > 0");
  }
  const SlopeDisc sv = slope_disc(v, D, S, SlopeMode::bar);
  const SlopeDisc sw = slope_disc(w, D, S, SlopeMode::bar);
  const SlopeDisc su = slope_disc(u, D, S, SlopeMode::bar);
  const Rational rv = v.rank, rw = w.rank, ru = u.rank;
  const Rational gap = sw.mu - su.mu;
  const Rational rhs = rw * sw.delta + ru * su.delta - rw * ru / (2 * rv) * gap * gap;
  return rv * sv.delta - rhs;
}

}  // namespace gwall
