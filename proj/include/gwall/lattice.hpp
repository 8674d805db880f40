#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwall/rational.hpp"

namespace gwall {

/// Numerical data of a polarized surface, in a fixed basis of Pic(X).
/// Integer-valued fields are stored as rationals and checked by
/// validate_surface().
struct SurfaceData {
  std::string name;
  int picard_rank = 0;
  std::vector<QVec> intersection_matrix;  // symmetric, row-major
  QVec H;                                 // ample polarization
  QVec K;                                 // canonical class
  Integer chi_O;
  Rational min_effective_slope_d;         // minimal reduced slope of an effective line bundle
  std::optional<std::vector<QVec>> effective_generators;
  Integer e;                              // generator of H·Pic(X); 0 until validated
};

/// A Q-divisor in the Picard basis.
struct TwistDivisor {
  QVec coords;

  static TwistDivisor zero(int n) { return TwistDivisor{QVec(static_cast<std::size_t>(n))}; }
  friend bool operator==(const TwistDivisor&, const TwistDivisor&) = default;
};

/// (ch0, ch1, ch2) of a class in K_num(X). c1 is stored over Q so that
/// numerical classes such as nef rays fit the same type; integrality is a
/// separate check.
struct ChernCharacter {
  long rank = 0;
  QVec c1;
  Rational ch2;

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator*(long k, const ChernCharacter& a);

/// ch(O_X(L)).
ChernCharacter line_bundle(const QVec& L, const SurfaceData& S);

/// Intersection pairing a^T M b.
Rational pair(const QVec& a, const QVec& b, const SurfaceData& S);

/// χ(v ⊗ w) by Hirzebruch–Riemann–Roch.
Rational euler_chi_tensor(const ChernCharacter& v, const ChernCharacter& w, const SurfaceData& S);

/// Σ(-1)^i ext^i(v, w) = χ(v^∨ ⊗ w).
Rational euler_chi_hom(const ChernCharacter& v, const ChernCharacter& w, const SurfaceData& S);

ChernCharacter dual(const ChernCharacter& v);

/// v · ch(O(L)).
ChernCharacter twist_by_line_bundle(const ChernCharacter& v, const QVec& L, const SurfaceData& S);

/// c1 integral and ch2 - c1²/2 ∈ Z.
bool is_integral(const ChernCharacter& v, const SurfaceData& S);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Signature of a symmetric rational matrix, via congruence diagonalization.
Inertia inertia(std::vector<QVec> matrix);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  Integer e;
};

ValidationReport validate_surface(const SurfaceData& S);

/// Validates S and fills in e; throws ValidationError listing every failure.
SurfaceData validated(SurfaceData S);

/// True iff the integral class c is effective: in the cone spanned by
/// effective_generators, or (without generators, Picard rank 1) zero or of
/// reduced slope at least min_effective_slope_d.
bool is_effective(const QVec& c, const SurfaceData& S);

/// Throws DimensionError unless v has length picard_rank.
void require_dimension(const QVec& v, const SurfaceData& S, const char* what);

}  // namespace gwall
