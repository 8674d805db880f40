#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gwall/errors.hpp"
#include "gwall/io.hpp"
#include "gwall/oracles.hpp"

namespace gwall::test {

inline std::string fixture(const std::string& name) { return std::string(GWALL_FIXTURE_DIR) + "/" + name; }

inline const SurfaceData& p1xp1() {
  static const SurfaceData S = load_surface_file(fixture("p1xp1.json"));
  return S;
}

inline const SurfaceData& quintic() {
  static const SurfaceData S = load_surface_file(fixture("quintic.json"));
  return S;
}

inline SurfaceData degree_surface(int d) {
  switch (d) {
    case 4: return load_surface_file(fixture("quartic.json"));
    case 5: return load_surface_file(fixture("quintic.json"));
    case 6: return load_surface_file(fixture("sextic.json"));
  }
  throw Error("no fixture for degree " + std::to_string(d));
}

inline SurfaceData double_cover(int d) {
  return load_surface_file(fixture("double_cover_" + std::to_string(d) + ".json"));
}

inline const TableOracle& rudakov() {
  static const TableOracle oracle(load_delta_table_file(fixture("p1xp1_rudakov.csv"), p1xp1()));
  return oracle;
}

inline Rational q(const std::string& s) { return parse_rational(s); }
inline Rational q(long p, long d = 1) {
  Rational x(p);
  x /= d;
  return x;
}

inline ChernCharacter ch(long r, QVec c1, const Rational& ch2) { return {r, std::move(c1), ch2}; }

/// D_t = (t, -t).
inline TwistDivisor D_t(const Rational& t) { return TwistDivisor{{t, -t}}; }

/// All reduced fractions with denominator <= n in [lo, hi], by enumeration.
inline std::vector<Rational> farey_brute(long n, long lo, long hi) {
  std::set<Rational> s;
  for (long den = 1; den <= n; ++den)
    for (long num = lo * den; num <= hi * den; ++num) s.insert(q(num, den));
  return {s.begin(), s.end()};
}

/// farey_brute(n, -4, 4), memoized for n <= 30.
inline const std::vector<Rational>& farey_cached(long n) {
  static const std::vector<std::vector<Rational>> table = [] {
    std::vector<std::vector<Rational>> t(31);
    for (long k = 1; k <= 30; ++k) t[k] = farey_brute(k, -4, 4);
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

/// Largest element of a sorted list strictly below x.
inline Rational brute_predecessor(const std::vector<Rational>& sorted, const Rational& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return *std::prev(it);
}

inline Rational brute_successor(const std::vector<Rational>& sorted, const Rational& x) {
  return *std::upper_bound(sorted.begin(), sorted.end(), x);
}

/// Minimal-denominator element of (lo, hi) among `sorted`; integer ties go
/// to the least absolute value.
inline std::optional<Rational> brute_interval(const std::vector<Rational>& sorted, const Rational& lo,
                                              const Rational& hi) {
  std::optional<Rational> best;
  for (auto it = std::upper_bound(sorted.begin(), sorted.end(), lo); it != sorted.end() && *it < hi; ++it) {
    if (!best || it->get_den() < best->get_den() ||
        (it->get_den() == best->get_den() && abs(*it) < abs(*best)))
      best = *it;
  }
  return best;
}

inline Rational random_rational(std::mt19937_64& rng, long maxnum, long maxden) {
  std::uniform_int_distribution<long> num(-maxnum, maxnum), den(1, maxden);
  return q(num(rng), den(rng));
}

inline long random_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random integral character of the given rank on S.
inline ChernCharacter random_character(std::mt19937_64& rng, const SurfaceData& S, long rank) {
  QVec c1;
  for (int i = 0; i < S.picard_rank; ++i) c1.push_back(Rational(random_int(rng, -6, 6)));
  const Rational half = pair(c1, c1, S) / 2;
  return {rank, c1, half + Rational(random_int(rng, -12, 4))};
}

inline TwistDivisor random_twist(std::mt19937_64& rng, const SurfaceData& S) {
  TwistDivisor D;
  for (int i = 0; i < S.picard_rank; ++i) D.coords.push_back(random_rational(rng, 6, 4));
  return D;
}

}  // namespace gwall::test
