#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwall/extremal.hpp"

namespace gwall {

struct SweepRow {
  Rational t;
  std::optional<ExtremalResult> extremal;
  std::optional<ChernCharacter> ray;  // unset when the wall is not a semicircle
  bool ray_changed = false;           // differs from the previous row's ray
  std::string error;                  // set instead of `extremal` on failure
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by t, duplicates removed
  std::vector<Rational> breakpoints;
};

/// Extremal character and nef ray of v for D = t·D_unit, t over the grid.
/// D_unit must be orthogonal to H. Rows are independent and computed in
/// parallel; the result does not depend on the thread count.
SweepResult sweep_twist(const ChernCharacter& v, const TwistDivisor& D_unit,
                        const std::vector<Rational>& t_values, const SurfaceData& S,
                        const DeltaOracle& oracle);

/// Single-threaded reference for sweep_twist.
SweepResult sweep_twist_serial(const ChernCharacter& v, const TwistDivisor& D_unit,
                               const std::vector<Rational>& t_values, const SurfaceData& S,
                               const DeltaOracle& oracle);

/// One row, as computed by both sweeps.
SweepRow sweep_row(const ChernCharacter& v, const TwistDivisor& D_unit, const Rational& t,
                   const SurfaceData& S, const DeltaOracle& oracle);

/// Rational t in the open interval (t0, t1) where Δ̄_{D_t}(a) = Δ̄_{D_t}(b).
std::vector<Rational> tie_points(const ChernCharacter& a, const ChernCharacter& b,
                                 const TwistDivisor& D_unit, const SurfaceData& S,
                                 const Rational& t0, const Rational& t1);

}  // namespace gwall
