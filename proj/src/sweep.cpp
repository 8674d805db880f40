#include "gwall/sweep.hpp"

#include <algorithm>
#include <exception>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

std::vector<Rational> sorted_grid(std::vector<Rational> t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

void check_unit(const TwistDivisor& D_unit, const SurfaceData& S) {
  require_dimension(D_unit.coords, S, "twist direction");
  if (pair(S.H, D_unit.coords, S) != 0)
    throw ValidationError("twist direction must be orthogonal to H");
}

Rational delta_at(const ChernCharacter& w, const TwistDivisor& D_unit, const Rational& t,
                  const SurfaceData& S) {
  return slope_disc(w, TwistDivisor{t * D_unit.coords}, S, SlopeMode::bar).delta;
}

bool share_class(const ExtremalResult& a, const ExtremalResult& b) {
  for (const auto& x : a.candidates)
    for (const auto& y : b.candidates)
      if (x.w.rank * y.w.ch2 == y.w.rank * x.w.ch2 &&
          Rational(x.w.rank) * y.w.c1 == Rational(y.w.rank) * x.w.c1)
        return true;
  return false;
}

SweepResult finish(std::vector<SweepRow> rows, const ChernCharacter&, const TwistDivisor& D_unit,
                   const SurfaceData& S) {
  SweepResult out;
  for (std::size_t i = 1; i < rows.size(); ++i)
    rows[i].ray_changed = rows[i].ray && rows[i - 1].ray && !(*rows[i].ray == *rows[i - 1].ray);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.extremal && !row.extremal->unique) out.breakpoints.push_back(row.t);
    if (i + 1 == rows.size()) continue;
    const auto& next = rows[i + 1];
    if (!row.extremal || !next.extremal || share_class(*row.extremal, *next.extremal)) continue;
    for (const auto& a : row.extremal->candidates)
      for (const auto& b : next.extremal->candidates)
        for (const auto& t : tie_points(a.w, b.w, D_unit, S, row.t, next.t))
          out.breakpoints.push_back(t);
  }
  out.breakpoints = sorted_grid(std::move(out.breakpoints));
  out.rows = std::move(rows);
  return out;
}

}  // namespace

std::vector<Rational> tie_points(const ChernCharacter& a, const ChernCharacter& b,
                                 const TwistDivisor& D_unit, const SurfaceData& S,
                                 const Rational& t0, const Rational& t1) {
  // q(t) = Δ̄_t(a) - Δ̄_t(b) is quadratic in t: interpolate at -1, 0, 1.
  auto q = [&](const Rational& t) -> Rational { return delta_at(a, D_unit, t, S) - delta_at(b, D_unit, t, S); };
  const Rational qm = q(-1), q0 = q(0), qp = q(1);
  const Rational A = (qp + qm) / 2 - q0;
  const Rational B = (qp - qm) / 2;
  const Rational& C = q0;
  std::vector<Rational> roots;
  if (A == 0) {
    if (B != 0) roots.push_back(-C / B);
  } else {
    const Rational disc = B * B - 4 * A * C;
    Rational root;
    if (disc >= 0 && rational_sqrt(disc, root)) {
      roots.push_back((-B - root) / (2 * A));
      roots.push_back((-B + root) / (2 * A));
    }
  }
  std::vector<Rational> inside;
  for (const auto& r : roots)
    if (r > t0 && r < t1) inside.push_back(r);
  return sorted_grid(std::move(inside));
}

SweepRow sweep_row(const ChernCharacter& v, const TwistDivisor& D_unit, const Rational& t,
                   const SurfaceData& S, const DeltaOracle& oracle) {
  SweepRow row;
  row.t = t;
  const TwistDivisor D{t * D_unit.coords};
  try {
    row.extremal = extremal_character(v, D, S, oracle);
    if (row.extremal->wall.is_semicircle()) row.ray = nef_ray(v, row.extremal->wall, D, S);
  } catch (const Error& e) {
    row.extremal.reset();
    row.error = e.what();
  }
  return row;
}

SweepResult sweep_twist_serial(const ChernCharacter& v, const TwistDivisor& D_unit,
                               const std::vector<Rational>& t_values, const SurfaceData& S,
                               const DeltaOracle& oracle) {
  check_unit(D_unit, S);
  const auto grid = sorted_grid(t_values);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& t : grid) rows.push_back(sweep_row(v, D_unit, t, S, oracle));
  return finish(std::move(rows), v, D_unit, S);
}

SweepResult sweep_twist(const ChernCharacter& v, const TwistDivisor& D_unit,
                        const std::vector<Rational>& t_values, const SurfaceData& S,
                        const DeltaOracle& oracle) {
  check_unit(D_unit, S);
  const auto grid = sorted_grid(t_values);
  const long n = static_cast<long>(grid.size());
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = sweep_row(v, D_unit, grid[static_cast<std::size_t>(i)], S, oracle);
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return finish(std::move(rows), v, D_unit, S);
}

}  // namespace gwall
