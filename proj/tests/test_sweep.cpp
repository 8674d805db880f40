#include <doctest.h>

#include "gwall/errors.hpp"
#include "gwall/sweep.hpp"
#include "support.hpp"

using namespace gwall;
using namespace gwall::test;

namespace {

const TwistDivisor unit{{q(1), q(-1)}};
const ChernCharacter v = ch(2, {q(1), q(0)}, -6);

void check_same(const SweepResult& a, const SweepResult& b) {
  REQUIRE(a.rows.size() == b.rows.size());
  CHECK(a.breakpoints == b.breakpoints);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].t == b.rows[i].t);
    CHECK(a.rows[i].ray == b.rows[i].ray);
    CHECK(a.rows[i].ray_changed == b.rows[i].ray_changed);
    REQUIRE(a.rows[i].extremal.has_value() == b.rows[i].extremal.has_value());
    if (!a.rows[i].extremal) continue;
    CHECK(a.rows[i].extremal->wall == b.rows[i].extremal->wall);
    REQUIRE(a.rows[i].extremal->candidates.size() == b.rows[i].extremal->candidates.size());
    for (std::size_t k = 0; k < a.rows[i].extremal->candidates.size(); ++k)
      CHECK(a.rows[i].extremal->candidates[k].w == b.rows[i].extremal->candidates[k].w);
  }
}

}  // namespace

TEST_CASE("sweep over the twist family") {
  const SweepResult r = sweep_twist(v, unit, {q(0), q(1, 2), q(1)}, p1xp1(), rudakov());
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].extremal->wall.center == -5);
  CHECK(r.rows[1].extremal->wall.center == q(-9, 2));
  CHECK(r.rows[2].extremal->wall.center == -6);
  CHECK(r.breakpoints == std::vector<Rational>{q(1, 2)});
  CHECK(r.rows[1].ray_changed);

  const SweepResult gap = sweep_twist(v, unit, {q(0), q(1)}, p1xp1(), rudakov());
  CHECK(gap.breakpoints == std::vector<Rational>{q(1, 2)});

  std::vector<Rational> grid;
  for (long k = -2; k <= 2; ++k) grid.push_back(q(k, 2));
  const SweepResult g = sweep_twist(v, unit, grid, p1xp1(), rudakov());
  CHECK(g.rows.size() == 5);
  CHECK(g.breakpoints == std::vector<Rational>{q(-1, 2), q(1, 2)});
}

TEST_CASE("sweep edge cases") {
  CHECK(sweep_twist(v, unit, {}, p1xp1(), rudakov()).rows.empty());
  CHECK_THROWS_AS(sweep_twist(v, TwistDivisor{{q(1), q(0)}}, {q(0)}, p1xp1(), rudakov()), ValidationError);
  const SweepResult one = sweep_twist(v, unit, {q(2, 3)}, p1xp1(), rudakov());
  REQUIRE(one.rows.size() == 1);
  const TwistDivisor D{{q(2, 3), q(-2, 3)}};
  const ExtremalResult direct = extremal_character(v, D, p1xp1(), rudakov());
  CHECK(one.rows[0].extremal->wall == direct.wall);
  CHECK(one.rows[0].extremal->candidates[0].w == direct.candidates[0].w);
  CHECK(one.rows[0].ray == nef_ray(v, direct.wall, D, p1xp1()));
}

TEST_CASE("parallel sweep matches the serial reference") {
  std::vector<Rational> grid;
  for (long k = -40; k <= 40; ++k) grid.push_back(q(k, 8));
  for (long ch2 : {-6L, -10L, -30L}) {
    const ChernCharacter w = ch(2, {q(1), q(0)}, Rational(ch2));
    check_same(sweep_twist(w, unit, grid, p1xp1(), rudakov()),
               sweep_twist_serial(w, unit, grid, p1xp1(), rudakov()));
  }
}

TEST_CASE("half-integer twists tie") {
  std::vector<Rational> grid;
  for (long k = -3; k <= 3; k += 2) grid.push_back(q(k, 2));
  const SweepResult r = sweep_twist(v, unit, grid, p1xp1(), rudakov());
  for (const auto& row : r.rows) {
    REQUIRE(row.extremal);
    CHECK_FALSE(row.extremal->unique);
    CHECK(row.extremal->candidates.size() == 2);
  }
}

TEST_CASE("tie points") {
  const ChernCharacter O = ch(1, {q(0), q(0)}, 0);
  const ChernCharacter L = line_bundle({q(1), q(-1)}, p1xp1());
  CHECK(tie_points(O, L, unit, p1xp1(), 0, 1) == std::vector<Rational>{q(1, 2)});
  CHECK(tie_points(O, L, unit, p1xp1(), q(1, 2), 1).empty());
}
