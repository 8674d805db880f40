#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwall/oracles.hpp"
#include "gwall/walls.hpp"

namespace gwall {

/// All integral c1 with H·c1 = target, as c0 + Σ k_i g_i over a basis g_i of
/// H^⊥ ∩ Z^n. `particular` is empty when target is not in H·Pic(X).
struct HyperplaneLattice {
  QVec particular;
  std::vector<QVec> kernel;
};

HyperplaneLattice solve_hyperplane(const SurfaceData& S, const Integer& target);

/// Outcome of forming u = v - w for one extremal candidate.
struct QuotientCheck {
  ChernCharacter u;
  bool ok = false;
  std::string note;
};

QuotientCheck check_quotient(const ChernCharacter& v, const ChernCharacter& w,
                             const SurfaceData& S);

/// u = v - w, validated: a rank-0 quotient must have effective c1 of the
/// minimal effective reduced slope; a positive-rank quotient must satisfy the
/// discriminant identity. Throws DomainError or ValidationError.
ChernCharacter quotient_character(const ChernCharacter& v, const ChernCharacter& w,
                                  const SurfaceData& S);

struct ExtremalCandidate {
  ChernCharacter w;
  QuotientCheck quotient;
  std::string provenance;
};

/// Solution of the extremal-character conditions for v in an (H,D)-slice.
/// Minimizers that are multiples of one another (same μ̃, Δ̄ and wall) form one
/// class; each class contributes its largest-rank member. `unique` is true
/// when there is a single class.
struct ExtremalResult {
  Rational mu_tilde_w;
  long rank_w = 0;  // largest candidate rank
  Rational delta_bar_w;
  std::vector<ExtremalCandidate> candidates;
  Wall wall;
  bool unique = true;
};

/// Requires rank(v) >= 1 and effective-cone data when picard_rank >= 2. The
/// oracle must never answer below the Bogomolov floor (the c1 search window
/// relies on it). Throws NoCandidateError when the oracle admits nothing.
ExtremalResult extremal_character(const ChernCharacter& v, const TwistDivisor& D,
                                  const SurfaceData& S, const DeltaOracle& oracle);

Wall gieseker_wall(const ChernCharacter& v, const TwistDivisor& D, const SurfaceData& S,
                   const DeltaOracle& oracle);

/// max over r' >= 1 of min(r'-1, r)² / (2r'), attained at r' = r + 1.
Rational injectivity_constant(long r);

struct PolystableFactor {
  ChernCharacter factor;
  long multiplicity = 1;
};

/// χ(u, F_i) <= -n_i for every factor and Σ n_i χ(u, F_i) < -Σ n_i².
/// When `expected_w` is given, Σ n_i F_i must equal it (ValidationError).
bool curve_existence_check(const ChernCharacter& u, const std::vector<PolystableFactor>& decomposition,
                           const SurfaceData& S, const ChernCharacter* expected_w = nullptr);

struct CertificateOptions {
  std::optional<long> nmax;  // default r(v)
  bool check_nesting = true;
  std::optional<std::vector<PolystableFactor>> decomposition;
};

/// Checkable sufficient conditions for "Δ̄(v) large enough". A false
/// certificate is inconclusive, not a disproof.
struct RegimeCertificate {
  Rational constant_C;
  Rational injectivity_margin;  // ρ²_W - C Δ̄(v)
  bool injectivity_ok = false;
  bool gap_ok = false;
  std::optional<Fraction> gap_witness;
  std::optional<bool> nesting_ok;
  std::optional<bool> curve_ok;

  bool passes() const {
    return injectivity_ok && gap_ok && nesting_ok.value_or(true) && curve_ok.value_or(true);
  }
};

RegimeCertificate regime_certificate(const ChernCharacter& v, const TwistDivisor& D,
                                     const SurfaceData& S, const DeltaOracle& oracle,
                                     const CertificateOptions& options = {});
RegimeCertificate regime_certificate(const ChernCharacter& v, const ExtremalResult& ext,
                                     const TwistDivisor& D, const SurfaceData& S,
                                     const DeltaOracle& oracle,
                                     const CertificateOptions& options = {});

/// (-1, s_W H + D, m) with m fixed by χ(ray ⊗ v) = 0.
ChernCharacter nef_ray(const ChernCharacter& v, const Wall& W, const TwistDivisor& D,
                       const SurfaceData& S);

/// (0, H, n) with χ(ray ⊗ v) = 0.
ChernCharacter duy_ray(const ChernCharacter& v, const SurfaceData& S);

/// Recovers δ(r, mu) (as Δ_{H,0}) from a Gieseker wall computation: builds a
/// probe character of mediant slope and large discriminant and returns the
/// discriminant of its extremal character. Picard rank 1 only; mu is a
/// reduced slope whose denominator divides r.
Rational delta_from_gieseker(long r, const Fraction& mu, const SurfaceData& S,
                             const TwistDivisor& D, const DeltaOracle& oracle);

/// Same, also returning the probe character used.
Rational delta_from_gieseker(long r, const Fraction& mu, const SurfaceData& S,
                             const TwistDivisor& D, const DeltaOracle& oracle,
                             ChernCharacter* probe);

}  // namespace gwall
