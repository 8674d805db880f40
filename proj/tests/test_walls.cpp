#include <doctest.h>

#include "gwall/errors.hpp"
#include "gwall/walls.hpp"
#include "support.hpp"

using namespace gwall;
using namespace gwall::test;

TEST_CASE("numerical walls") {
  const Wall a = numerical_wall(ch(2, {q(1)}, -10), ch(2, {q(0)}, 0), TwistDivisor{{q(0)}}, quintic());
  CHECK(a == Wall::circle(q(-5, 2), 4));
  const Wall b = numerical_wall(ch(2, {q(1), q(0)}, -6), ch(2, {q(0), q(0)}, 0), D_t(0), p1xp1());
  CHECK(b == Wall::circle(-5, 36));
  CHECK(b.is_semicircle());
  const Wall c = numerical_wall(ch(2, {q(1), q(0)}, -6), ch(4, {q(2), q(0)}, 3), D_t(0), p1xp1());
  CHECK(c.kind == Wall::Kind::vertical);
  CHECK(c.beta == q(5, 4));
  // Rank-0 destabilizer: same wall as v + w.
  const ChernCharacter v = ch(2, {q(1), q(0)}, -6);
  const ChernCharacter u = ch(0, {q(1), q(0)}, -6);
  CHECK(numerical_wall(v, u, D_t(0), p1xp1()) == numerical_wall(v, v + u, D_t(0), p1xp1()));
  CHECK_THROWS_AS(numerical_wall(u, u, D_t(0), p1xp1()), DomainError);
  // Negative radius squared gives an empty wall.
  const Wall e = numerical_wall(ch(1, {q(0)}, -5), ch(1, {q(1)}, -5), TwistDivisor{{q(0)}}, quintic());
  CHECK(e.kind == Wall::Kind::empty);
}

TEST_CASE("nesting of walls") {
  CHECK(compare_walls(Wall::circle(-3, 1), Wall::circle(-5, 36)) == Nesting::nested_1_in_2);
  CHECK(compare_walls(Wall::circle(-5, 36), Wall::circle(-5, 36)) == Nesting::equal);
  CHECK(compare_walls(Wall::circle(-5, 36), Wall::circle(-3, 1)) == Nesting::nested_2_in_1);
  CHECK_THROWS_AS(compare_walls(Wall::vertical_at(0), Wall::circle(-3, 1)), DomainError);
}

TEST_CASE("points on a wall") {
  const Wall w = Wall::circle(-5, 36);
  CHECK(alpha_sq_on_wall(w, -5) == 36);
  CHECK(alpha_sq_on_wall(w, 1) == 0);
  CHECK(alpha_sq_on_wall(w, 2) == -13);
  CHECK_THROWS_AS(alpha_sq_on_wall(Wall::vertical_at(1), 0), DomainError);
}

TEST_CASE("right endpoints") {
  const Wall w = Wall::circle(-2, 2);  // x_W = -2 + sqrt 2
  CHECK(compare_with_right_endpoint(w, q(-1, 2)) == 1);
  CHECK(compare_with_right_endpoint(w, q(-5, 8)) == -1);
  CHECK(compare_with_right_endpoint(Wall::circle(-5, 36), 1) == 0);
  CHECK(compare_right_endpoints(Wall::circle(-5, 36), Wall::circle(-3, 16)) == 0);
  CHECK(compare_right_endpoints(Wall::circle(-5, 37), Wall::circle(-3, 16)) == 1);
  CHECK(compare_right_endpoints(Wall::circle(0, 2), Wall::circle(0, 3)) == -1);
  CHECK(compare_right_endpoints(Wall::circle(q(1, 2), 2), Wall::circle(0, 3)) == 1);
}

TEST_CASE("higher-rank radius bound") {
  const ChernCharacter v = ch(2, {q(1), q(0)}, -6);
  CHECK(higher_rank_radius_bound(1, v, D_t(0), p1xp1()) == 0);
  CHECK(higher_rank_radius_bound(3, v, D_t(0), p1xp1()) == q(49, 48));
  const ChernCharacter big = ch(5, {q(0)}, -25);
  REQUIRE(slope_disc(big, TwistDivisor{{q(0)}}, quintic(), SlopeMode::bar).delta == 1);
  CHECK(higher_rank_radius_bound(3, big, TwistDivisor{{q(0)}}, quintic()) == q(2, 3));
  Rational prev = -1;
  for (long ch2 = 0; ch2 >= -20; --ch2) {
    const Rational b = higher_rank_radius_bound(3, ch(2, {q(1), q(0)}, ch2), D_t(0), p1xp1());
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("slope gap") {
  const SlopeMap identity{1, 0};
  const SlopeMap quintic_map = SlopeMap::for_slice(quintic(), TwistDivisor{{q(0)}});
  CHECK(quintic_map.scale == 1);
  CHECK(quintic_map.offset == q(1, 2));
  CHECK_FALSE(gap_check(Wall::circle(q(-5, 2), 4), q(-1, 2), quintic_map, 2).has_value());
  // The interval (-1, -1/4) already contains -1/2.
  CHECK(gap_check(Wall::circle(-2, 1), q(-1, 4), identity, 3) == q(-1, 2));
  CHECK_FALSE(gap_check(Wall::circle(-2, 1), q(-1, 2), identity, 1).has_value());
  CHECK(gap_check(Wall::circle(-2, 2), q(-1, 4), identity, 3) == q(-1, 2));
  CHECK_THROWS_AS(gap_check(Wall::vertical_at(0), q(-1, 4), identity, 3), DomainError);
}

TEST_CASE("wall properties") {
  std::mt19937_64 rng(23);
  for (const SurfaceData* S : {&p1xp1(), &quintic()}) {
    int checked = 0;
    while (checked < 100) {
      const ChernCharacter v = random_character(rng, *S, random_int(rng, 1, 4));
      const ChernCharacter w = random_character(rng, *S, random_int(rng, 1, 4));
      const TwistDivisor D = random_twist(rng, *S);
      const SlopeDisc vb = slope_disc(v, D, *S, SlopeMode::bar);
      const SlopeDisc wb = slope_disc(w, D, *S, SlopeMode::bar);
      if (vb.mu == wb.mu) continue;
      const Wall W = numerical_wall(v, w, D, *S);
      if (!W.is_semicircle()) continue;
      ++checked;
      CHECK(W == numerical_wall(w, v, D, *S));
      for (int k = 1; k <= 5; ++k) {
        const Rational beta = W.center + (Rational(2 * k - 6) / 5) * (isqrt_floor(W.radius_sq) + 1) / 2;
        const Rational a2 = alpha_sq_on_wall(W, beta);
        if (a2 <= 0 || beta == vb.mu || beta == wb.mu) continue;
        CHECK(bridgeland_slope(vb, beta, a2) == bridgeland_slope(wb, beta, a2));
      }
    }
  }
}

TEST_CASE("walls of a family nest as the discriminant grows") {
  const auto& S = p1xp1();
  const ChernCharacter w = ch(1, {q(0), q(0)}, 0);
  const TwistDivisor D = D_t(0);
  const SlopeDisc wb = slope_disc(w, D, S, SlopeMode::bar);
  std::optional<Wall> prev;
  for (long ch2 = -4; ch2 >= -40; ch2 -= 4) {
    const Wall W = numerical_wall(ch(2, {q(1), q(0)}, ch2), w, D, S);
    REQUIRE(W.is_semicircle());
    if (prev) {
      CHECK(W.center < prev->center);
      CHECK(W.radius_sq > prev->radius_sq);
      CHECK(compare_right_endpoints(W, *prev) == 0);  // x_W pinned at mu_bar(w)
    }
    prev = W;
  }
  REQUIRE(wb.delta == 0);
  for (long ch2 = -2; ch2 >= -30; ch2 -= 4) {
    const Wall W = numerical_wall(ch(2, {q(1), q(0)}, ch2), w, D, S);
    REQUIRE(W.is_semicircle());
    CHECK((wb.mu - W.center) * (wb.mu - W.center) == W.radius_sq);
  }
}

TEST_CASE("right endpoints increase when the destabilizer has positive discriminant") {
  const auto& S = p1xp1();
  const ChernCharacter w = ch(1, {q(0), q(0)}, 0);
  const TwistDivisor D = D_t(q(1, 2));
  REQUIRE(slope_disc(w, D, S, SlopeMode::bar).delta == q(1, 8));
  std::optional<Wall> prev;
  for (long ch2 = -10; ch2 >= -46; ch2 -= 4) {
    const Wall W = numerical_wall(ch(2, {q(1), q(0)}, ch2), w, D, S);
    REQUIRE(W.is_semicircle());
    if (prev) {
      CHECK(W.center < prev->center);
      CHECK(compare_right_endpoints(W, *prev) == 1);
    }
    prev = W;
  }
}
