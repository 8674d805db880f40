#include "gwall/lattice.hpp"

#include <functional>
#include <utility>

#include "gwall/errors.hpp"

namespace gwall {

void require_dimension(const QVec& v, const SurfaceData& S, const char* what) {
  if (v.size() != static_cast<std::size_t>(S.picard_rank)) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", surface '" + S.name + "' has Picard rank " +
                         std::to_string(S.picard_rank));
  }
}

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.rank + b.rank, a.c1 + b.c1, a.ch2 + b.ch2};
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.rank - b.rank, a.c1 - b.c1, a.ch2 - b.ch2};
}

ChernCharacter operator*(long k, const ChernCharacter& a) {
  return {k * a.rank, Rational(k) * a.c1, Rational(k) * a.ch2};
}

Rational pair(const QVec& a, const QVec& b, const SurfaceData& S) {
  require_dimension(a, S, "left argument of pairing");
  require_dimension(b, S, "right argument of pairing");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < b.size(); ++j) row += S.intersection_matrix[i][j] * b[j];
    sum += a[i] * row;
  }
  return sum;
}

ChernCharacter line_bundle(const QVec& L, const SurfaceData& S) {
  return {1, L, pair(L, L, S) / 2};
}

Rational euler_chi_tensor(const ChernCharacter& v, const ChernCharacter& w, const SurfaceData& S) {
  require_dimension(v.c1, S, "c1 of first character");
  require_dimension(w.c1, S, "c1 of second character");
  const Rational rv = v.rank;
  const Rational rw = w.rank;
  const Rational rp = rv * rw;
  const QVec cp = rv * w.c1 + rw * v.c1;
  const Rational ch2p = rv * w.ch2 + rw * v.ch2 + pair(v.c1, w.c1, S);
  return ch2p - pair(S.K, cp, S) / 2 + rp * Rational(S.chi_O);
}

ChernCharacter dual(const ChernCharacter& v) { return {v.rank, -v.c1, v.ch2}; }

Rational euler_chi_hom(const ChernCharacter& v, const ChernCharacter& w, const SurfaceData& S) {
  return euler_chi_tensor(dual(v), w, S);
}

ChernCharacter twist_by_line_bundle(const ChernCharacter& v, const QVec& L, const SurfaceData& S) {
  require_dimension(v.c1, S, "c1");
  require_dimension(L, S, "line bundle");
  const Rational r = v.rank;
  return {v.rank, v.c1 + r * L, v.ch2 + pair(v.c1, L, S) + r * pair(L, L, S) / 2};
}

bool is_integral(const ChernCharacter& v, const SurfaceData& S) {
  require_dimension(v.c1, S, "c1");
  return all_integer(v.c1) && is_integer(v.ch2 - pair(v.c1, v.c1, S) / 2);
}

Inertia inertia(std::vector<QVec> a) {
  const std::size_t n = a.size();
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    // Bring a nonzero entry onto the diagonal at (k, k) by congruence.
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][p]) == 0) ++p;
      if (p < n) {
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
      } else {
        std::size_t q = k + 1;
        while (q < n && sgn(a[k][q]) == 0) ++q;
        if (q == n) {
          ++out.zero;  // row k vanishes beyond the processed block
          continue;
        }
        // Replace e_k with e_k + e_q: a_kk becomes 2 a_kq.
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[q][j];
        for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][q];
      }
    }
    const Rational pivot = a[k][k];
    (sgn(pivot) > 0 ? out.positive : out.negative)++;
    // Schur complement of the pivot.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
  }
  return out;
}

ValidationReport validate_surface(const SurfaceData& S) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  const auto n = static_cast<std::size_t>(S.picard_rank);
  if (S.picard_rank <= 0) {
    fail("picard_rank must be positive");
    return rep;
  }
  bool shape_ok = S.intersection_matrix.size() == n;
  for (const auto& row : S.intersection_matrix) shape_ok = shape_ok && row.size() == n;
  if (!shape_ok) {
    fail("intersection_matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    return rep;
  }
  if (S.H.size() != n) fail("H has wrong length");
  if (S.K.size() != n) fail("K has wrong length");
  if (!rep.ok) return rep;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(S.intersection_matrix[i][j])) {
        fail("intersection_matrix has a non-integer entry");
        i = n;
        break;
      }
      if (S.intersection_matrix[i][j] != S.intersection_matrix[j][i]) {
        fail("intersection_matrix is not symmetric");
        i = n;
        break;
      }
    }
  }
  if (!all_integer(S.H)) fail("H is not integral");
  if (!all_integer(S.K)) fail("K is not integral");
  if (!rep.ok) return rep;

  const Rational h2 = pair(S.H, S.H, S);
  if (sgn(h2) <= 0) fail("H^2 = " + to_string(h2) + " <= 0, H is not ample");
  const Inertia sig = inertia(S.intersection_matrix);
  if (sig.positive != 1) {
    fail("Hodge index: intersection form has " + std::to_string(sig.positive) +
         " positive eigenvalues, expected exactly 1");
  }
  if (sgn(S.min_effective_slope_d) <= 0) fail("min_effective_slope_d must be positive");
  if (S.effective_generators) {
    for (const auto& g : *S.effective_generators) {
      if (g.size() != n || !all_integer(g)) {
        fail("effective generator has wrong length or is not integral");
        break;
      }
    }
  }

  // e = gcd over the basis of |H·b_i|, i.e. the gcd of the entries of M·H.
  Integer e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational hb = 0;
    for (std::size_t j = 0; j < n; ++j) hb += S.intersection_matrix[i][j] * S.H[j];
    Integer z = hb.get_num();
    mpz_gcd(e.get_mpz_t(), e.get_mpz_t(), z.get_mpz_t());
  }
  if (e == 0) fail("H·Pic(X) = 0");
  if (S.e != 0 && S.e != e) {
    fail("supplied e = " + to_string(S.e) + " does not generate H·Pic(X) (expected " +
         to_string(e) + ")");
  }
  rep.e = e;
  return rep;
}

SurfaceData validated(SurfaceData S) {
  const ValidationReport rep = validate_surface(S);
  if (!rep.ok) {
    std::string msg = "invalid surface '" + S.name + "':";
    for (const auto& f : rep.failures) msg += "\n  - " + f;
    throw ValidationError(msg);
  }
  S.e = rep.e;
  return S;
}

namespace {

// Solves A x = b for the columns `cols` of A (vectors of length n). Returns
// nullopt when the columns are dependent or the system is inconsistent.
std::optional<QVec> solve_columns(const std::vector<QVec>& cols, const QVec& b) {
  const std::size_t n = b.size();
  const std::size_t k = cols.size();
  std::vector<QVec> m(n, QVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = b[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t p = row;
    while (p < n && sgn(m[p][j]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[row], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || sgn(m[i][j]) == 0) continue;
      const Rational f = m[i][j] / m[row][j];
      for (std::size_t c = j; c <= k; ++c) m[i][c] -= f * m[row][c];
    }
    pivot_row[j] = row++;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (sgn(m[i][k]) != 0) return std::nullopt;
  }
  QVec x(k);
  for (std::size_t j = 0; j < k; ++j) x[j] = m[pivot_row[j]][k] / m[pivot_row[j]][j];
  return x;
}

bool in_cone(const QVec& c, const std::vector<QVec>& gens) {
  if (is_zero(c)) return true;
  const std::size_t n = c.size();
  std::vector<QVec> chosen;
  // Carathéodory: c lies in the cone iff it lies in the cone of some linearly
  // independent subset of the generators.
  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      if (auto x = solve_columns(chosen, c)) {
        bool nonneg = true;
        for (const auto& xi : *x) nonneg = nonneg && sgn(xi) >= 0;
        if (nonneg) return true;
      }
    }
    if (chosen.size() == n) return false;
    for (std::size_t i = start; i < gens.size(); ++i) {
      chosen.push_back(gens[i]);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(0);
}

}  // namespace

bool is_effective(const QVec& c, const SurfaceData& S) {
  require_dimension(c, S, "divisor class");
  if (S.effective_generators) return in_cone(c, *S.effective_generators);
  if (S.picard_rank != 1) {
    throw ValidationError("surface '" + S.name +
                          "' has Picard rank >= 2 but no effective_generators");
  }
  if (is_zero(c)) return true;
  return pair(S.H, c, S) / Rational(S.e) >= S.min_effective_slope_d;
}

}  // namespace gwall
