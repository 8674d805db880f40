#include "gwall/farey.hpp"

#include <limits>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

// Endpoint of a Stern–Brocot interval, kept unreduced-free (neighbors are
// always in lowest terms).
struct Node {
  Integer p;
  Integer q;
  Fraction value() const { return Fraction(p, q); }
};

Node combine(const Node& a, const Node& b, const Integer& k) { return {a.p + k * b.p, a.q + k * b.q}; }

// Largest k in [0, kmax] with pred(k) true, pred monotone and pred(0) true.
Integer last_true(const std::function<bool(const Integer&)>& pred, const Integer& kmax) {
  Integer lo = 0;
  Integer step = 1;
  // Gallop.
  while (lo + step <= kmax && pred(lo + step)) {
    lo += step;
    step *= 2;
  }
  Integer hi = lo + step;  // pred(hi) false or hi > kmax
  if (hi > kmax + 1) hi = kmax + 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void require_order(const Fraction& a, const Fraction& b, const char* what) {
  if (!(a < b)) throw DomainError(std::string(what) + " requires a < b");
}

}  // namespace

Fraction farey_predecessor(const Fraction& x, long n) {
  if (n < 1) throw DomainError("Farey order must be >= 1");
  const Integer N = n;
  if (is_integer(x)) {
    // Left neighbor of m/1 in F_n is (m n - 1)/n.
    return Fraction(x.get_num() * N - 1, N);
  }
  Node left{floor(x), 1};
  Node right{left.p + 1, 1};
  while (true) {
    const Node m = combine(left, right, 1);
    if (m.q > N) return left.value();
    const Fraction mv = m.value();
    if (mv == x) {
      // x's left neighbor in F_n is left + k x with k maximal.
      const Integer k = (N - left.q) / m.q;
      return combine(left, m, k).value();
    }
    if (mv < x) {
      const Integer kmax = (N - left.q) / right.q;
      const Integer k = last_true(
          [&](const Integer& j) { return j == 0 || combine(left, right, j).value() < x; }, kmax);
      left = combine(left, right, k);
    } else {
      const Integer kmax = (N - right.q) / left.q;
      const Integer k = last_true(
          [&](const Integer& j) { return j == 0 || combine(right, left, j).value() > x; }, kmax);
      right = combine(right, left, k);
    }
  }
}

Fraction farey_successor(const Fraction& x, long n) { return -farey_predecessor(-x, n); }

Fraction mediant(const Fraction& a, const Fraction& b) {
  require_order(a, b, "mediant");
  Fraction m(a.get_num() + b.get_num(), a.get_den() + b.get_den());
  const Integer unreduced_den = m.get_den();
  m.canonicalize();
  if (are_farey_neighbors(a, b) && m.get_den() != unreduced_den) {
    throw Error("internal: mediant of Farey neighbors was not in lowest terms");
  }
  return m;
}

bool are_farey_neighbors(const Fraction& a, const Fraction& b) {
  require_order(a, b, "are_farey_neighbors");
  return b.get_num() * a.get_den() - a.get_num() * b.get_den() == 1;
}

std::optional<Fraction> fraction_in_interval(const std::function<bool(const Fraction&)>& above_lo,
                                             const std::function<bool(const Fraction&)>& below_hi,
                                             const Integer& floor_hint, long nmax) {
  if (nmax < 1) return std::nullopt;
  const Integer N = nmax;
  // L = largest integer <= lo.
  const Integer L =
      floor_hint + last_true(
                       [&](const Integer& j) { return j == 0 || !above_lo(Fraction(floor_hint + j)); },
                       Integer(std::numeric_limits<long>::max()));
  const Integer first = L + 1;
  if (below_hi(Fraction(first))) {
    if (sgn(first) >= 0) return Fraction(first);
    if (below_hi(Fraction(0))) return Fraction(0);
    // All integers in the interval are negative: take the largest.
    const Integer top =
        first + last_true([&](const Integer& j) { return below_hi(Fraction(first + j)); },
                          Integer(std::numeric_limits<long>::max()));
    return Fraction(top);
  }

  // The interval lies inside (L, L+1): descend the Stern–Brocot tree.
  Node left{L, 1};
  Node right{L + 1, 1};
  while (true) {
    const Node m = combine(left, right, 1);
    if (m.q > N) return std::nullopt;
    const Fraction mv = m.value();
    if (!above_lo(mv)) {
      const Integer kmax = (N - left.q) / right.q;
      const Integer k = last_true(
          [&](const Integer& j) { return j == 0 || !above_lo(combine(left, right, j).value()); },
          kmax);
      left = combine(left, right, k);
    } else if (!below_hi(mv)) {
      const Integer kmax = (N - right.q) / left.q;
      const Integer k = last_true(
          [&](const Integer& j) { return j == 0 || !below_hi(combine(right, left, j).value()); },
          kmax);
      right = combine(right, left, k);
    } else {
      return mv;
    }
  }
}

std::optional<Fraction> fraction_in_interval(const Fraction& lo, const Fraction& hi, long nmax) {
  require_order(lo, hi, "fraction_in_interval");
  return fraction_in_interval([&](const Fraction& x) { return x > lo; },
                              [&](const Fraction& x) { return x < hi; }, floor(lo), nmax);
}

Rational extremal_reduced_slope(const Rational& mu_v, long r_v, const Rational& d) {
  if (r_v < 1) throw DomainError("extremal_reduced_slope needs r(v) >= 1");
  if (sgn(d) <= 0) throw DomainError("minimal effective slope d must be positive");
  if (r_v == 1) return mu_v - d;
  if (!is_integer(mu_v) || d == 1) return farey_predecessor(mu_v, r_v);
  return mu_v - Rational(1, r_v - 1);
}

}  // namespace gwall
