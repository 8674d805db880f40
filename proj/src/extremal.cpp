#include "gwall/extremal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

Rational h_squared(const SurfaceData& S) { return pair(S.H, S.H, S); }

QVec unit_vector(std::size_t n, std::size_t i) {
  QVec u(n);
  u[i] = 1;
  return u;
}

// Exact inverse of a small nonsingular matrix by Gauss–Jordan elimination.
std::vector<QVec> inverse(std::vector<QVec> a) {
  const std::size_t n = a.size();
  std::vector<QVec> inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular matrix in window search");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Candidate key for grouping multiples: (c1/r, ch2/r).
QVec class_key(const ChernCharacter& w) {
  QVec key;
  key.reserve(w.c1.size() + 1);
  const Rational r = w.rank;
  for (const auto& c : w.c1) key.push_back(c / r);
  key.push_back(w.ch2 / r);
  return key;
}

bool lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational reduced_of(const QVec& c1, long rank, const SurfaceData& S) {
  return pair(S.H, c1, S) / (Rational(rank) * Rational(S.e));
}

void require_surface_ready(const SurfaceData& S) {
  if (S.e == 0) throw ValidationError("surface has not been validated (e unset)");
}

struct Found {
  ChernCharacter w;
  Rational delta_bar;
  std::string provenance;
};

// Enumerates c1 = c0 + Σ k_i g_i for one rank, querying the oracle at every
// lattice point whose Bogomolov-floor Δ̄ does not exceed `best`.
class RankSearch {
 public:
  RankSearch(const ChernCharacter& v, long rank, const HyperplaneLattice& lat,
             const TwistDivisor& bar, const TwistDivisor& D, const SurfaceData& S,
             const DeltaOracle& oracle, std::vector<Found>& out)
      : v_(v), rank_(rank), lat_(lat), bar_(bar), D_(D), S_(S), oracle_(oracle), out_(out) {
    const std::size_t m = lat_.kernel.size();
    if (m == 0) return;
    std::vector<QVec> q(m, QVec(m));
    QVec rhs(m);
    const QVec shifted = lat_.particular - Rational(rank_) * bar_.coords;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) q[i][j] = -pair(lat_.kernel[i], lat_.kernel[j], S_);
      rhs[i] = pair(shifted, lat_.kernel[i], S_);
    }
    qinv_ = inverse(q);
    center_.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) center_[i] += qinv_[i][j] * rhs[j];
  }

  QVec c1_at(const std::vector<Integer>& k) const {
    QVec c = lat_.particular;
    for (std::size_t i = 0; i < k.size(); ++i) c = c + Rational(k[i]) * lat_.kernel[i];
    return c;
  }

  // Δ̄ of (rank, c1, c1²/(2 rank)), the lower bound for any oracle answer.
  Rational floor_delta(const QVec& c1) const {
    const Rational inv = 1 / Rational(rank_);
    const QVec x = inv * c1 - bar_.coords;
    const Rational h2 = h_squared(S_);
    const Rational hx = pair(S_.H, x, S_);
    const Rational perp_sq = pair(x, x, S_) - hx * hx / h2;
    return -perp_sq / (2 * h2);
  }

  std::vector<Integer> rounded_center() const {
    std::vector<Integer> k;
    for (const auto& c : center_) k.push_back(floor(c + Rational(1, 2)));
    return k;
  }

  // Queries one lattice point; returns its Δ̄ if admissible.
  std::optional<Rational> probe(const std::vector<Integer>& k) const {
    const QVec c1 = c1_at(k);
    if (rank_ == v_.rank && !is_effective(v_.c1 - c1, S_)) return std::nullopt;
    auto ans = oracle_.min_character(S_, rank_, c1);
    if (!ans) return std::nullopt;
    const Rational db = slope_disc(ans->character, D_, S_, SlopeMode::bar).delta;
    out_.push_back({ans->character, db, ans->provenance});
    return db;
  }

  // Seeds an upper bound by searching growing cubes around the real minimizer.
  std::optional<Rational> seed() const {
    const std::size_t m = center_.size();
    const auto base = rounded_center();
    for (long radius = 0; radius <= 32; ++radius) {
      std::optional<Rational> best;
      std::vector<Integer> k(m);
      walk_cube(base, radius, 0, k, best);
      if (m == 0 || best) return best;
    }
    return std::nullopt;
  }

  // All lattice points with floor_delta <= best.
  void enumerate(const Rational& best) const {
    const std::size_t m = center_.size();
    if (m == 0) {
      const std::vector<Integer> none;
      if (floor_delta(c1_at(none)) <= best) probe(none);
      return;
    }
    const Rational floor_min = floor_delta(real_point());
    const Rational h2 = h_squared(S_);
    const Rational T = 2 * h2 * Rational(rank_) * Rational(rank_) * (best - floor_min);
    if (T < 0) return;
    std::vector<std::pair<Integer, Integer>> ranges;
    Integer volume = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational bound = T * qinv_[i][i];
      Integer lo = floor(center_[i]);
      Integer hi = lo + 1;
      while (sq(Rational(lo) - center_[i]) <= bound) --lo;
      while (sq(Rational(hi) - center_[i]) <= bound) ++hi;
      ranges.emplace_back(lo + 1, hi - 1);
      const Integer width = hi - lo - 1;
      if (width > 1) volume *= width;
    }
    if (volume > 2000000) throw Error("c1 search window too large");
    std::vector<Integer> k(m);
    walk_box(ranges, 0, k, best);
  }

 private:
  static Rational sq(const Rational& a) { return a * a; }

  QVec real_point() const {
    QVec c = lat_.particular;
    for (std::size_t i = 0; i < center_.size(); ++i) c = c + center_[i] * lat_.kernel[i];
    return c;
  }

  void walk_cube(const std::vector<Integer>& base, long radius, std::size_t i,
                 std::vector<Integer>& k, std::optional<Rational>& best) const {
    if (i == base.size()) {
      bool on_shell = radius == 0;
      for (std::size_t j = 0; j < base.size() && !on_shell; ++j) {
        Integer d = k[j] - base[j];
        if (abs(d) == radius) on_shell = true;
      }
      if (!on_shell) return;
      if (auto db = probe(k); db && (!best || *db < *best)) best = db;
      return;
    }
    for (long off = -radius; off <= radius; ++off) {
      k[i] = base[i] + off;
      walk_cube(base, radius, i + 1, k, best);
    }
  }

  void walk_box(const std::vector<std::pair<Integer, Integer>>& ranges, std::size_t i,
                std::vector<Integer>& k, const Rational& best) const {
    if (i == ranges.size()) {
      if (floor_delta(c1_at(k)) <= best) probe(k);
      return;
    }
    for (Integer x = ranges[i].first; x <= ranges[i].second; ++x) {
      k[i] = x;
      walk_box(ranges, i + 1, k, best);
    }
  }

  const ChernCharacter& v_;
  long rank_;
  const HyperplaneLattice& lat_;
  const TwistDivisor& bar_;
  const TwistDivisor& D_;
  const SurfaceData& S_;
  const DeltaOracle& oracle_;
  std::vector<Found>& out_;
  std::vector<QVec> qinv_;
  QVec center_;
};

}  // namespace

HyperplaneLattice solve_hyperplane(const SurfaceData& S, const Integer& target) {
  require_surface_ready(S);
  const std::size_t n = static_cast<std::size_t>(S.picard_rank);
  // Linear form a_i = H·b_i, reduced by unimodular column operations.
  std::vector<Integer> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = pair(unit_vector(n, i), S.H, S).get_num();
  std::vector<QVec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(unit_vector(n, i));

  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0 && (piv == n || abs(a[i]) < abs(a[piv]))) piv = i;
    if (piv == n) throw ValidationError("H is orthogonal to the whole lattice");
    bool reduced = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv || a[i] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i].get_mpz_t(), a[piv].get_mpz_t());
      a[i] -= q * a[piv];
      cols[i] = cols[i] - Rational(q) * cols[piv];
      if (a[i] != 0) reduced = false;
    }
    if (reduced) {
      if (a[piv] < 0) {
        a[piv] = -a[piv];
        cols[piv] = -cols[piv];
      }
      HyperplaneLattice out;
      if (target % a[piv] == 0) {
        const Integer k = target / a[piv];
        out.particular = Rational(k) * cols[piv];
      }
      for (std::size_t i = 0; i < n; ++i)
        if (i != piv) out.kernel.push_back(cols[i]);
      return out;
    }
  }
}

QuotientCheck check_quotient(const ChernCharacter& v, const ChernCharacter& w,
                             const SurfaceData& S) {
  QuotientCheck out;
  out.u = v - w;
  const ChernCharacter& u = out.u;
  if (u.rank < 0) {
    out.note = "quotient has negative rank";
    return out;
  }
  if (u.rank == 0 && is_zero(u.c1) && u.ch2 == 0) {
    out.note = "quotient is zero";
    return out;
  }
  if (u.rank == 0) {
    if (!all_integer(u.c1) || !is_effective(u.c1, S)) {
      out.note = "rank-0 quotient with non-effective c1";
      return out;
    }
    const Rational slope = pair(S.H, u.c1, S) / Rational(S.e);
    if (slope != S.min_effective_slope_d) {
      out.note = "rank-0 quotient c1 has reduced slope " + to_string(slope) +
                 ", expected " + to_string(S.min_effective_slope_d);
      return out;
    }
    out.ok = true;
    out.note = "curve class of minimal reduced slope";
    return out;
  }
  const TwistDivisor zero = TwistDivisor::zero(S.picard_rank);
  const Rational residual = discriminant_identity_residual(v, w, zero, S);
  if (residual != 0) {
    out.note = "discriminant identity residual " + to_string(residual);
    return out;
  }
  out.ok = true;
  out.note = "discriminant identity holds";
  return out;
}

ChernCharacter quotient_character(const ChernCharacter& v, const ChernCharacter& w,
                                  const SurfaceData& S) {
  require_dimension(v.c1, S, "v.c1");
  require_dimension(w.c1, S, "w.c1");
  QuotientCheck c = check_quotient(v, w, S);
  if (c.u.rank < 0) throw DomainError(c.note);
  if (!c.ok) throw ValidationError(c.note);
  return c.u;
}

ExtremalResult extremal_character(const ChernCharacter& v, const TwistDivisor& D,
                                  const SurfaceData& S, const DeltaOracle& oracle) {
  require_surface_ready(S);
  require_dimension(v.c1, S, "v.c1");
  require_dimension(D.coords, S, "twist");
  if (v.rank < 1) throw DomainError("extremal character needs rank >= 1, got " + std::to_string(v.rank));
  if (S.picard_rank >= 2 && !S.effective_generators)
    throw ValidationError("picard rank >= 2 needs effective_generators");

  ExtremalResult res;
  res.mu_tilde_w = extremal_reduced_slope(reduced_slope(v, S), v.rank, S.min_effective_slope_d);
  const long step = res.mu_tilde_w.get_den().get_si();
  const TwistDivisor bar = bar_twist(D, S);

  std::vector<Found> found;
  std::vector<std::pair<long, HyperplaneLattice>> lattices;
  for (long r = step; r <= v.rank; r += step) {
    const Rational target = Rational(r) * res.mu_tilde_w * Rational(S.e);
    HyperplaneLattice lat = solve_hyperplane(S, target.get_num());
    if (lat.particular.empty()) continue;
    lattices.emplace_back(r, std::move(lat));
  }

  std::optional<Rational> best;
  std::vector<Found> scratch;
  for (const auto& [r, lat] : lattices) {
    RankSearch rs(v, r, lat, bar, D, S, oracle, scratch);
    if (auto b = rs.seed(); b && (!best || *b < *best)) best = b;
  }
  if (!best)
    throw NoCandidateError("no admissible extremal candidate: nothing of reduced slope " +
                           to_string(res.mu_tilde_w) + " and rank <= " + std::to_string(v.rank));
  for (const auto& [r, lat] : lattices) {
    RankSearch rs(v, r, lat, bar, D, S, oracle, found);
    rs.enumerate(*best);
  }
  if (found.empty()) throw NoCandidateError("no admissible extremal candidate");

  Rational min_db = found.front().delta_bar;
  for (const auto& f : found) min_db = std::min(min_db, f.delta_bar);

  // One representative per proportionality class: the largest rank.
  std::vector<std::pair<QVec, Found>> classes;
  for (const auto& f : found) {
    if (f.delta_bar != min_db) continue;
    QVec key = class_key(f.w);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return c.first == key; });
    if (it == classes.end()) {
      classes.emplace_back(std::move(key), f);
    } else if (f.w.rank > it->second.w.rank) {
      it->second = f;
    }
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.second.w.rank != b.second.w.rank) return a.second.w.rank > b.second.w.rank;
    return lex_less(a.second.w.c1, b.second.w.c1);
  });

  res.delta_bar_w = min_db;
  res.unique = classes.size() == 1;
  for (auto& [key, f] : classes) {
    res.rank_w = std::max(res.rank_w, f.w.rank);
    ExtremalCandidate c{f.w, check_quotient(v, f.w, S), f.provenance};
    res.candidates.push_back(std::move(c));
  }
  res.wall = numerical_wall(v, res.candidates.front().w, D, S);
  for (const auto& c : res.candidates) {
    if (numerical_wall(v, c.w, D, S) != res.wall)
      throw Error("extremal candidates disagree on the wall");
    if (reduced_of(c.w.c1, c.w.rank, S) != res.mu_tilde_w)
      throw Error("oracle answered with a different reduced slope");
  }
  return res;
}

Wall gieseker_wall(const ChernCharacter& v, const TwistDivisor& D, const SurfaceData& S,
                   const DeltaOracle& oracle) {
  return extremal_character(v, D, S, oracle).wall;
}

Rational injectivity_constant(long r) {
  if (r < 1) throw DomainError("injectivity constant needs rank >= 1");
  Rational c = Rational(r) * Rational(r) / Rational(2 * (r + 1));
  return c;
}

bool curve_existence_check(const ChernCharacter& u, const std::vector<PolystableFactor>& decomposition,
                           const SurfaceData& S, const ChernCharacter* expected_w) {
  if (decomposition.empty()) throw ValidationError("empty polystable decomposition");
  require_dimension(u.c1, S, "u.c1");
  ChernCharacter total{0, QVec(static_cast<std::size_t>(S.picard_rank)), 0};
  Rational weighted = 0;
  Rational squares = 0;
  bool each_ok = true;
  for (const auto& [F, n] : decomposition) {
    require_dimension(F.c1, S, "factor.c1");
    if (n < 1) throw ValidationError("factor multiplicity must be positive");
    total = total + n * F;
    const Rational chi = euler_chi_hom(u, F, S);
    if (chi > -n) each_ok = false;
    weighted += n * chi;
    squares += Rational(n) * Rational(n);
  }
  if (expected_w && !(total == *expected_w))
    throw ValidationError("decomposition does not sum to the extremal character");
  return each_ok && weighted < -squares;
}

RegimeCertificate regime_certificate(const ChernCharacter& v, const ExtremalResult& ext,
                                     const TwistDivisor& D, const SurfaceData& S,
                                     const DeltaOracle& oracle,
                                     const CertificateOptions& options) {
  RegimeCertificate cert;
  cert.constant_C = injectivity_constant(v.rank);
  const SlopeDisc vb = slope_disc(v, D, S, SlopeMode::bar);
  const Wall& W = ext.wall;
  cert.injectivity_margin = W.radius_sq - cert.constant_C * vb.delta;
  cert.injectivity_ok = W.is_semicircle() && cert.injectivity_margin > 0;

  if (W.is_semicircle()) {
    const long nmax = options.nmax.value_or(v.rank);
    const Rational mu_w = slope_disc(ext.candidates.front().w, D, S, SlopeMode::bar).mu;
    cert.gap_witness = gap_check(W, mu_w, SlopeMap::for_slice(S, D), nmax);
    cert.gap_ok = !cert.gap_witness.has_value();
  }

  if (options.check_nesting && W.is_semicircle()) {
    std::optional<bool> all;
    for (const auto& c : ext.candidates) {
      const ChernCharacter& u = c.quotient.u;
      if (u.rank <= 0) continue;
      try {
        const Wall Wu = gieseker_wall(u, D, S, oracle);
        const bool nested = !Wu.is_semicircle() || compare_walls(Wu, W) == Nesting::nested_1_in_2;
        all = all.value_or(true) && nested;
      } catch (const Error&) {
      }
    }
    cert.nesting_ok = all;
  }

  if (options.decomposition) {
    ChernCharacter total{0, QVec(static_cast<std::size_t>(S.picard_rank)), 0};
    for (const auto& f : *options.decomposition) total = total + f.multiplicity * f.factor;
    const ExtremalCandidate* match = nullptr;
    for (const auto& c : ext.candidates)
      if (c.w == total) match = &c;
    if (!match) throw ValidationError("decomposition does not sum to an extremal candidate");
    cert.curve_ok = curve_existence_check(match->quotient.u, *options.decomposition, S, &match->w);
  }
  return cert;
}

RegimeCertificate regime_certificate(const ChernCharacter& v, const TwistDivisor& D,
                                     const SurfaceData& S, const DeltaOracle& oracle,
                                     const CertificateOptions& options) {
  return regime_certificate(v, extremal_character(v, D, S, oracle), D, S, oracle, options);
}

ChernCharacter nef_ray(const ChernCharacter& v, const Wall& W, const TwistDivisor& D,
                       const SurfaceData& S) {
  if (!W.is_semicircle()) throw DomainError("nef ray needs a semicircular wall");
  if (v.rank <= 0) throw DomainError("nef ray needs rank(v) > 0");
  require_dimension(D.coords, S, "twist");
  ChernCharacter a{-1, W.center * S.H + D.coords, 0};
  // χ(a ⊗ v) = χ|_{m=0} + r(v) m.
  const Rational base = euler_chi_tensor(a, v, S);
  a.ch2 = -base / Rational(v.rank);
  return a;
}

ChernCharacter duy_ray(const ChernCharacter& v, const SurfaceData& S) {
  if (v.rank <= 0) throw DomainError("DUY ray needs rank(v) > 0");
  require_dimension(v.c1, S, "v.c1");
  ChernCharacter a{0, S.H, 0};
  const Rational base = euler_chi_tensor(a, v, S);
  a.ch2 = -base / Rational(v.rank);
  return a;
}

Rational delta_from_gieseker(long r, const Fraction& mu, const SurfaceData& S,
                             const TwistDivisor& D, const DeltaOracle& oracle,
                             ChernCharacter* probe) {
  if (S.picard_rank != 1) throw DomainError("delta_from_gieseker needs picard rank 1");
  if (r < 1) throw DomainError("rank must be positive");
  const long s = mu.get_den().get_si();
  if (r % s != 0)
    throw DomainError("slope " + to_string(mu) + " is not attained at rank " + std::to_string(r));

  const Fraction next = farey_successor(mu, r);
  const Fraction mid = mediant(mu, next);
  const long r_probe = mid.get_den().get_si();
  const HyperplaneLattice lat = solve_hyperplane(S, Integer(mid.get_num() * S.e));
  if (lat.particular.empty()) throw DomainError("probe slope is not realizable");
  const QVec& c1 = lat.particular;
  const Rational half_sq = pair(c1, c1, S) / 2;

  CertificateOptions opts;
  opts.check_nesting = false;
  Integer k = 1;
  for (int iter = 0; iter < 64; ++iter, k *= 2) {
    ChernCharacter v{r_probe, c1, half_sq - Rational(k)};
    const ExtremalResult ext = extremal_character(v, D, S, oracle);
    const RegimeCertificate cert = regime_certificate(v, ext, D, S, oracle, opts);
    if (cert.injectivity_ok && cert.gap_ok) {
      if (probe) *probe = v;
      const TwistDivisor zero = TwistDivisor::zero(S.picard_rank);
      return slope_disc(ext.candidates.front().w, zero, S, SlopeMode::plain).delta;
    }
  }
  throw Error("no probe discriminant passed the regime certificate");
}

Rational delta_from_gieseker(long r, const Fraction& mu, const SurfaceData& S,
                             const TwistDivisor& D, const DeltaOracle& oracle) {
  return delta_from_gieseker(r, mu, S, D, oracle, nullptr);
}

}  // namespace gwall
