#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gwall/cli.hpp"
#include "gwall/errors.hpp"
#include "gwall/svg.hpp"
#include "support.hpp"

using namespace gwall;
using namespace gwall::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string P() { return fixture("p1xp1.json"); }
std::string Q5() { return fixture("quintic.json"); }
std::string T() { return "table:" + fixture("p1xp1_rudakov.csv"); }

}  // namespace

TEST_CASE("character syntax") {
  CHECK(parse_character("2; 1,0; -6") == ch(2, {q(1), q(0)}, -6));
  CHECK(parse_character(" 1;0 ; 1/2") == ch(1, {q(0)}, q(1, 2)));
  CHECK_THROWS_AS(parse_character("2; 1"), ParseError);
  CHECK_THROWS_AS(parse_character("x; 1; 0"), ParseError);
  CHECK(format_character(ch(-1, {q(-5), q(-5)}, 11)) == "(-1, (-5,-5), 11)");
}

TEST_CASE("surface files") {
  const Json j = surface_to_json(p1xp1());
  const SurfaceData back = surface_from_json(j);
  CHECK(back.intersection_matrix == p1xp1().intersection_matrix);
  CHECK(back.e == 1);
  CHECK(surface_from_json(surface_to_json(quintic())).e == 5);
  Json bad = j;
  bad["H"] = Json::array({1, -1});
  CHECK_THROWS_AS(surface_from_json(bad), ValidationError);
  Json missing = j;
  missing.erase("K");
  CHECK_THROWS_AS(surface_from_json(missing), ParseError);
  Json stringy = j;
  stringy["min_effective_slope_d"] = "2/2";
  CHECK(surface_from_json(stringy).min_effective_slope_d == 1);
  CHECK_THROWS_AS(load_surface_file("/nonexistent.json"), ParseError);
}

TEST_CASE("json round trip of results") {
  const BogomolovOracle bog;
  const ExtremalResult r = extremal_character(ch(2, {q(1), q(0)}, -6), D_t(q(1, 2)), p1xp1(), rudakov());
  const Json j = to_json(r);
  const Json parsed = Json::parse(j.dump());
  CHECK(wall_from_json(parsed.at("wall")) == r.wall);
  CHECK(character_from_json(parsed.at("candidates")[1].at("w")) == r.candidates[1].w);
  CHECK(rational_from_json(parsed.at("delta_bar_w")) == r.delta_bar_w);
  (void)bog;
}

TEST_CASE("invariants command") {
  const Run a = run({"--surface", Q5(), "invariants", "2; 1; -10"});
  CHECK(a.code == 0);
  CHECK(a.out.find("mu_tilde   1/2") != std::string::npos);
  const Run b = run({"--surface", P(), "--json", "invariants", "2; 1,0; -6"});
  CHECK(b.code == 0);
  const Json j = Json::parse(b.out);
  CHECK(j.at("mu_bar") == "5/4");
  CHECK(j.at("delta_bar") == "49/32");
  const Run c = run({"--surface", P(), "invariants", "0; 1,0; 0"});
  CHECK(c.code == 1);
  CHECK(c.err.find("slope undefined at rank 0") != std::string::npos);
}

TEST_CASE("gieseker command") {
  const Run a = run({"--surface", Q5(), "gieseker", "2; 1; -10"});
  CHECK(a.code == 0);
  CHECK(a.out.find("s=-5/2 rho2=4") != std::string::npos);
  CHECK(a.out.find("(-1, -5/2 H, -5/4)") != std::string::npos);
  CHECK(a.out.find("(0, H, 0)") != std::string::npos);

  const Run b = run({"--surface", P(), "--oracle", T(), "--twist", "1/2,-1/2", "--json", "gieseker", "2; 1,0; -6"});
  CHECK(b.code == 0);
  const Json j = Json::parse(b.out);
  CHECK(j.at("extremal").at("candidates").size() == 2);
  CHECK(j.at("wall").at("center") == "-9/2");

  const Run c = run({"--surface", Q5(), "gieseker", "2; 1; -1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("WARNING") != std::string::npos);

  std::ofstream deny("deny_table.csv");
  deny << "rank,c1,delta,provenance\n1,0,none,test\n";
  deny.close();
  const Run d = run({"--surface", Q5(), "--oracle", "table:deny_table.csv", "gieseker", "1; 1; -10"});
  CHECK(d.code == 2);
  CHECK(d.err.find("no admissible extremal candidate") != std::string::npos);

  CHECK(run({"--surface", Q5(), "--oracle", "magic", "gieseker", "2; 1; -10"}).code == 1);
  CHECK(run({"gieseker", "2; 1; -10"}).code == 1);
  CHECK(run({"--surface", Q5(), "bogus"}).code == 1);
  CHECK(run({"--surface", Q5(), "--twist", "1,2", "gieseker", "2; 1; -10"}).code == 1);
}

TEST_CASE("ray, delta and curve commands") {
  const Run a = run({"--surface", P(), "--oracle", T(), "nef-ray", "2; 1,0; -6"});
  CHECK(a.code == 0);
  CHECK(a.out.find("(-1, (-5,-5), 11)") != std::string::npos);
  const Run b = run({"--surface", P(), "duy-ray", "2; 1,0; -6"});
  CHECK(b.out.find("(0, (1,1), -5/2)") != std::string::npos);
  const Run c = run({"--surface", Q5(), "delta", "--rank", "2", "--mu", "1/2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("delta  3/40") != std::string::npos);
  const Run d = run({"--surface", P(), "check-curve", "0; 1,0; -6", "--factor", "1; 0,0; 0*2"});
  CHECK(d.out.find("curve-check  true") != std::string::npos);
  const Run e = run({"--surface", P(), "check-curve", "0; 1,0; 0", "--factor", "1; 0,0; 0"});
  CHECK(e.out.find("curve-check  false") != std::string::npos);
  const Run w = run({"--surface", Q5(), "wall", "2; 1; -10", "2; 0; 0"});
  CHECK(w.out.find("s=-5/2 rho2=4") != std::string::npos);
}

TEST_CASE("sweep command") {
  const Run a = run({"--surface", P(), "--oracle", T(), "sweep", "2; 1,0; -6", "--unit", "1,-1", "--from", "-1",
                     "--to", "1", "--step", "1/2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("breakpoints -1/2 1/2") != std::string::npos);
  const Run b = run({"--surface", P(), "--oracle", T(), "--json", "sweep", "2; 1,0; -6", "--unit", "1,-1"});
  CHECK(b.code == 0);
  CHECK(Json::parse(b.out).at("rows").empty());
  const Run c = run({"--surface", P(), "sweep", "2; 1,0; -6", "--unit", "1,0", "--t", "0"});
  CHECK(c.code == 1);
}

TEST_CASE("svg rendering") {
  const std::string one = render_walls_svg({{Wall::circle(-5, 36), "g", true}}, q(5, 4));
  CHECK(one.find("data-apex=\"6.000000\"") != std::string::npos);
  CHECK(one.find("A 6.000000 6.000000 0 0 1 1.000000 0.000000") != std::string::npos);
  CHECK(one.find("stroke-dasharray") != std::string::npos);
  CHECK(one == render_walls_svg({{Wall::circle(-5, 36), "g", true}}, q(5, 4)));
  CHECK_THROWS_AS(render_walls_svg({}, std::nullopt), DomainError);

  // Nested walls of one family do not cross: sample the upper arcs.
  const auto& S = p1xp1();
  const ChernCharacter w = ch(1, {q(0), q(0)}, 0);
  std::vector<Wall> family;
  for (long ch2 = -4; ch2 >= -24; ch2 -= 5) family.push_back(numerical_wall(ch(2, {q(1), q(0)}, ch2), w, D_t(0), S));
  for (std::size_t i = 0; i + 1 < family.size(); ++i) {
    const Wall& inner = family[i];
    const Wall& outer = family[i + 1];
    for (long k = -20; k <= 20; ++k) {
      const Rational beta = inner.center + Rational(k) / 4;
      const Rational ai = alpha_sq_on_wall(inner, beta);
      if (ai <= 0) continue;
      CHECK(alpha_sq_on_wall(outer, beta) > ai);
    }
  }
}
