#include "gwall/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gwall/errors.hpp"
#include "gwall/io.hpp"
#include "gwall/svg.hpp"
#include "gwall/sweep.hpp"

namespace gwall {

namespace {

struct Globals {
  std::string surface;
  std::string twist;
  std::string oracle = "bogomolov";
  bool json = false;
  std::string out;
};

struct Context {
  SurfaceData S;
  TwistDivisor D;
  std::unique_ptr<DeltaOracle> oracle;
  bool json = false;
};

Context make_context(const Globals& g) {
  if (g.surface.empty()) throw ParseError("--surface PATH is required");
  Context c;
  c.S = load_surface_file(g.surface);
  c.D = TwistDivisor::zero(c.S.picard_rank);
  if (!g.twist.empty()) {
    c.D.coords = parse_rational_list(g.twist);
    require_dimension(c.D.coords, c.S, "--twist");
  }
  if (g.oracle == "bogomolov") {
    c.oracle = std::make_unique<BogomolovOracle>();
  } else if (g.oracle.rfind("table:", 0) == 0) {
    c.oracle = std::make_unique<TableOracle>(load_delta_table_file(g.oracle.substr(6), c.S));
  } else {
    throw ParseError("--oracle must be 'bogomolov' or 'table:PATH', got '" + g.oracle + "'");
  }
  c.json = g.json;
  return c;
}

ChernCharacter character_arg(const std::string& text, const SurfaceData& S, const char* what) {
  ChernCharacter v = parse_character(text);
  require_dimension(v.c1, S, what);
  return v;
}

// Characters on a Picard-rank-1 surface are written with c1 as a multiple of H.
std::string show(const ChernCharacter& v, const SurfaceData& S) {
  if (S.picard_rank != 1 || S.H[0] == 0) return format_character(v);
  const Rational c = v.c1[0] / S.H[0];
  std::string c1;
  if (c == 0) {
    c1 = "0";
  } else if (c == 1) {
    c1 = "H";
  } else if (c == -1) {
    c1 = "-H";
  } else {
    c1 = to_string(c) + " H";
  }
  return "(" + std::to_string(v.rank) + ", " + c1 + ", " + to_string(v.ch2) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<long> max_denom_from_env() {
  const char* env = std::getenv("WALLS_MAX_DENOM");
  if (!env || !*env) return std::nullopt;
  const Rational q = parse_rational(env);
  if (!is_integer(q) || q < 1 || !q.get_num().fits_slong_p())
    throw ParseError("WALLS_MAX_DENOM must be a positive integer");
  return q.get_num().get_si();
}

PolystableFactor factor_arg(const std::string& text, const SurfaceData& S) {
  PolystableFactor f;
  std::string body = text;
  const auto star = text.rfind('*');
  if (star != std::string::npos) {
    body = text.substr(0, star);
    const Rational n = parse_rational(text.substr(star + 1));
    if (!is_integer(n) || n < 1 || !n.get_num().fits_slong_p())
      throw ParseError("factor multiplicity must be a positive integer: '" + text + "'");
    f.multiplicity = n.get_num().get_si();
  }
  f.factor = character_arg(body, S, "factor c1");
  return f;
}

std::vector<std::string> character_warnings(const ChernCharacter& v, const SurfaceData& S) {
  std::vector<std::string> w;
  if (!is_integral(v, S))
    w.push_back("character " + show(v, S) + " is not integral (ch2 - c1^2/2 is not an integer)");
  return w;
}

void print_warnings(std::ostream& out, const std::vector<std::string>& warnings) {
  if (warnings.empty()) return;
  out << "WARNING:\n";
  for (const auto& w : warnings) out << "  " << w << "\n";
}

Json warnings_json(const std::vector<std::string>& warnings) {
  Json a = Json::array();
  for (const auto& w : warnings) a.push_back(w);
  return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void cmd_invariants(const Context& c, const std::string& vtext, std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "character c1");
  const SlopeDisc plain = slope_disc(v, c.D, c.S, SlopeMode::plain);
  const SlopeDisc bar = slope_disc(v, c.D, c.S, SlopeMode::bar);
  const Rational mu_tilde = reduced_slope(v, c.S);
  const auto warnings = character_warnings(v, c.S);
  if (c.json) {
    Json j;
    j["character"] = to_json(v);
    j["twist"] = to_json(c.D.coords);
    j["integral"] = is_integral(v, c.S);
    j["mu"] = to_json(plain.mu);
    j["delta"] = to_json(plain.delta);
    j["mu_bar"] = to_json(bar.mu);
    j["delta_bar"] = to_json(bar.delta);
    j["mu_tilde"] = to_json(mu_tilde);
    j["warnings"] = warnings_json(warnings);
    emit(out, j);
    return;
  }
  out << "character  " << show(v, c.S) << "\n"
      << "twist      (" << to_string(c.D.coords) << ")\n"
      << "integral   " << yes_no(is_integral(v, c.S)) << "\n"
      << "mu         " << to_string(plain.mu) << "\n"
      << "delta      " << to_string(plain.delta) << "\n"
      << "mu_bar     " << to_string(bar.mu) << "\n"
      << "delta_bar  " << to_string(bar.delta) << "\n"
      << "mu_tilde   " << to_string(mu_tilde) << "\n";
  print_warnings(out, warnings);
}

void cmd_wall(const Context& c, const std::string& vtext, const std::string& wtext,
              std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "v c1");
  const ChernCharacter w = character_arg(wtext, c.S, "w c1");
  const Wall W = numerical_wall(v, w, c.D, c.S);
  if (c.json) {
    Json j;
    j["v"] = to_json(v);
    j["w"] = to_json(w);
    j["wall"] = to_json(W);
    emit(out, j);
    return;
  }
  out << "wall  " << format_wall(W) << "\n";
}

std::vector<std::string> certificate_warnings(const RegimeCertificate& cert) {
  std::vector<std::string> w;
  if (cert.passes()) return w;
  w.push_back("regime certificate not satisfied; the wall is that of the extremal character "
              "but is not certified to be the Gieseker wall");
  if (!cert.injectivity_ok)
    w.push_back("injectivity: rho2 - C*delta_bar = " + to_string(cert.injectivity_margin) +
                " is not positive");
  if (!cert.gap_ok)
    w.push_back(cert.gap_witness ? "gap: reduced slope " + to_string(*cert.gap_witness) +
                                       " lies in (x_W, mu_bar(w))"
                                 : "gap: wall is not a semicircle");
  if (cert.nesting_ok && !*cert.nesting_ok) w.push_back("nesting: quotient wall is not nested");
  if (cert.curve_ok && !*cert.curve_ok) w.push_back("curve: Euler characteristic conditions fail");
  return w;
}

void cmd_gieseker(const Context& c, const std::string& vtext,
                  const std::vector<std::string>& factors, std::optional<long> max_denom,
                  std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "character c1");
  const ExtremalResult ext = extremal_character(v, c.D, c.S, *c.oracle);
  CertificateOptions opts;
  opts.nmax = max_denom ? max_denom : max_denom_from_env();
  if (!factors.empty()) {
    std::vector<PolystableFactor> dec;
    for (const auto& f : factors) dec.push_back(factor_arg(f, c.S));
    opts.decomposition = std::move(dec);
  }
  const RegimeCertificate cert = regime_certificate(v, ext, c.D, c.S, *c.oracle, opts);
  std::optional<ChernCharacter> ray;
  if (ext.wall.is_semicircle()) ray = nef_ray(v, ext.wall, c.D, c.S);
  const ChernCharacter duy = duy_ray(v, c.S);
  auto warnings = character_warnings(v, c.S);
  for (auto& w : certificate_warnings(cert)) warnings.push_back(std::move(w));

  if (c.json) {
    Json j;
    j["surface"] = c.S.name;
    j["character"] = to_json(v);
    j["twist"] = to_json(c.D.coords);
    j["extremal"] = to_json(ext);
    j["wall"] = to_json(ext.wall);
    j["certificate"] = to_json(cert);
    j["nef_ray"] = ray ? to_json(*ray) : Json(nullptr);
    j["duy_ray"] = to_json(duy);
    j["warnings"] = warnings_json(warnings);
    emit(out, j);
    return;
  }
  out << "surface      " << c.S.name << "\n"
      << "character    " << show(v, c.S) << "\n"
      << "twist        (" << to_string(c.D.coords) << ")\n"
      << "extremal     mu_tilde=" << to_string(ext.mu_tilde_w) << " rank=" << ext.rank_w
      << " delta_bar=" << to_string(ext.delta_bar_w) << " unique=" << yes_no(ext.unique) << "\n";
  for (const auto& cand : ext.candidates) {
    out << "candidate    w=" << show(cand.w, c.S) << " u=" << show(cand.quotient.u, c.S)
        << " quotient=" << (cand.quotient.ok ? "ok" : "failed") << " [" << cand.provenance
        << "]\n";
  }
  out << "wall         " << format_wall(ext.wall) << "\n"
      << "nef-ray      " << (ray ? show(*ray, c.S) : std::string("none")) << "\n"
      << "duy-ray      " << show(duy, c.S) << "\n"
      << "certificate  C=" << to_string(cert.constant_C)
      << " injectivity=" << (cert.injectivity_ok ? "ok" : "fail")
      << " margin=" << to_string(cert.injectivity_margin)
      << " gap=" << (cert.gap_ok ? "ok" : "fail");
  if (cert.nesting_ok) out << " nesting=" << (*cert.nesting_ok ? "ok" : "fail");
  if (cert.curve_ok) out << " curve=" << (*cert.curve_ok ? "ok" : "fail");
  out << "\n";
  print_warnings(out, warnings);
}

void cmd_nef_ray(const Context& c, const std::string& vtext, std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "character c1");
  const Wall W = gieseker_wall(v, c.D, c.S, *c.oracle);
  const ChernCharacter ray = nef_ray(v, W, c.D, c.S);
  if (c.json) {
    Json j;
    j["character"] = to_json(v);
    j["wall"] = to_json(W);
    j["nef_ray"] = to_json(ray);
    j["pairing"] = to_json(euler_chi_tensor(ray, v, c.S));
    emit(out, j);
    return;
  }
  out << "wall     " << format_wall(W) << "\n"
      << "nef-ray  " << show(ray, c.S) << "\n";
}

void cmd_duy_ray(const Context& c, const std::string& vtext, std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "character c1");
  const ChernCharacter ray = duy_ray(v, c.S);
  if (c.json) {
    Json j;
    j["character"] = to_json(v);
    j["duy_ray"] = to_json(ray);
    j["pairing"] = to_json(euler_chi_tensor(ray, v, c.S));
    emit(out, j);
    return;
  }
  out << "duy-ray  " << show(ray, c.S) << "\n";
}

std::vector<Rational> grid_arg(const std::string& list, const std::string& from,
                               const std::string& to, const std::string& step) {
  if (!list.empty()) {
    if (!from.empty() || !to.empty() || !step.empty())
      throw ParseError("give either --t or --from/--to/--step");
    return parse_rational_list(list);
  }
  if (from.empty() && to.empty() && step.empty()) return {};
  if (from.empty() || to.empty() || step.empty())
    throw ParseError("--from, --to and --step go together");
  const Rational a = parse_rational(from), b = parse_rational(to), h = parse_rational(step);
  if (h <= 0) throw ParseError("--step must be positive");
  std::vector<Rational> t;
  for (Rational x = a; x <= b; x += h) {
    t.push_back(x);
    if (t.size() > 100000) throw ParseError("sweep grid too large");
  }
  return t;
}

void cmd_sweep(const Context& c, const std::string& vtext, const std::string& unit,
               const std::vector<Rational>& grid, bool serial, std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "character c1");
  TwistDivisor D_unit{parse_rational_list(unit)};
  const SweepResult res = serial ? sweep_twist_serial(v, D_unit, grid, c.S, *c.oracle)
                                 : sweep_twist(v, D_unit, grid, c.S, *c.oracle);
  if (c.json) {
    Json j;
    j["character"] = to_json(v);
    j["unit"] = to_json(D_unit.coords);
    Json rows = Json::array();
    for (const auto& r : res.rows) {
      Json rj;
      rj["t"] = to_json(r.t);
      rj["extremal"] = r.extremal ? to_json(*r.extremal) : Json(nullptr);
      rj["nef_ray"] = r.ray ? to_json(*r.ray) : Json(nullptr);
      rj["ray_changed"] = r.ray_changed;
      if (!r.error.empty()) rj["error"] = r.error;
      rows.push_back(rj);
    }
    j["rows"] = rows;
    Json bp = Json::array();
    for (const auto& t : res.breakpoints) bp.push_back(to_string(t));
    j["breakpoints"] = bp;
    emit(out, j);
    return;
  }
  out << "t\twall\tnef-ray\tcandidates\n";
  for (const auto& r : res.rows) {
    out << to_string(r.t) << "\t";
    if (!r.extremal) {
      out << "error: " << r.error << "\n";
      continue;
    }
    out << format_wall(r.extremal->wall) << "\t" << (r.ray ? show(*r.ray, c.S) : "none")
        << (r.ray_changed ? " *" : "") << "\t";
    for (std::size_t i = 0; i < r.extremal->candidates.size(); ++i)
      out << (i ? " " : "") << show(r.extremal->candidates[i].w, c.S);
    out << "\n";
  }
  out << "breakpoints";
  if (res.breakpoints.empty()) out << " none";
  for (const auto& t : res.breakpoints) out << " " << to_string(t);
  out << "\n";
}

void cmd_delta(const Context& c, long rank, const std::string& mu_text, std::ostream& out) {
  const Fraction mu = parse_rational(mu_text);
  ChernCharacter probe;
  const Rational delta = delta_from_gieseker(rank, mu, c.S, c.D, *c.oracle, &probe);
  if (c.json) {
    Json j;
    j["rank"] = rank;
    j["mu"] = to_json(mu);
    j["delta"] = to_json(delta);
    j["probe"] = to_json(probe);
    emit(out, j);
    return;
  }
  out << "delta  " << to_string(delta) << "\n"
      << "probe  " << show(probe, c.S) << "\n";
}

void cmd_check_curve(const Context& c, const std::string& utext,
                     const std::vector<std::string>& factors, const std::string& expect,
                     std::ostream& out) {
  const ChernCharacter u = character_arg(utext, c.S, "u c1");
  std::vector<PolystableFactor> dec;
  for (const auto& f : factors) dec.push_back(factor_arg(f, c.S));
  std::optional<ChernCharacter> w;
  if (!expect.empty()) w = character_arg(expect, c.S, "--expect-w c1");
  const bool ok = curve_existence_check(u, dec, c.S, w ? &*w : nullptr);
  if (c.json) {
    Json j;
    j["u"] = to_json(u);
    Json fs = Json::array();
    for (const auto& f : dec) {
      Json fj;
      fj["factor"] = to_json(f.factor);
      fj["multiplicity"] = f.multiplicity;
      fj["chi"] = to_json(euler_chi_hom(u, f.factor, c.S));
      fs.push_back(fj);
    }
    j["factors"] = fs;
    j["ok"] = ok;
    emit(out, j);
    return;
  }
  for (const auto& f : dec)
    out << "chi(u, " << show(f.factor, c.S) << ") = " << to_string(euler_chi_hom(u, f.factor, c.S))
        << "  n=" << f.multiplicity << "\n";
  out << "curve-check  " << (ok ? "true" : "false") << "\n";
}

void cmd_plot(const Context& c, const std::string& vtext, const std::vector<std::string>& others,
              std::ostream& out) {
  const ChernCharacter v = character_arg(vtext, c.S, "character c1");
  const SlopeDisc vb = slope_disc(v, c.D, c.S, SlopeMode::bar);
  std::vector<SvgWall> walls;
  walls.push_back({gieseker_wall(v, c.D, c.S, *c.oracle), "gieseker", true});
  for (const auto& o : others) {
    const ChernCharacter w = character_arg(o, c.S, "--with c1");
    walls.push_back({numerical_wall(v, w, c.D, c.S), format_character(w), false});
  }
  out << render_walls_svg(walls, vb.mu);
}

int classify(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
      dynamic_cast<const DimensionError*>(&e) || dynamic_cast<const DomainError*>(&e))
    return 1;
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gieseker walls and extremal characters on surfaces", "gwall"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--surface", g.surface, "surface JSON file");
  app.add_option("--twist", g.twist, "twisting divisor D, e.g. \"1/2,-1/2\"");
  app.add_option("--oracle", g.oracle, "bogomolov or table:PATH")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--out", g.out, "write output to PATH");

  std::function<void(const Context&, std::ostream&)> action;
  std::string v, w, unit, tlist, from, to, step, mu, expect;
  std::vector<std::string> factors, with;
  std::optional<long> max_denom;
  long rank = 0;
  bool serial = false;

  auto* inv = app.add_subcommand("invariants", "slopes and discriminants of a character");
  inv->add_option("character", v, "\"r; c1,...; ch2\"")->required();
  inv->callback([&] { action = [&](const Context& c, std::ostream& o) { cmd_invariants(c, v, o); }; });

  auto* wall = app.add_subcommand("wall", "numerical wall W(w, v)");
  wall->add_option("v", v)->required();
  wall->add_option("w", w)->required();
  wall->callback([&] { action = [&](const Context& c, std::ostream& o) { cmd_wall(c, v, w, o); }; });

  auto* gies = app.add_subcommand("gieseker", "extremal character, Gieseker wall and certificate");
  gies->add_option("character", v)->required();
  gies->add_option("--max-denom", max_denom, "denominator cap for the gap check");
  gies->add_option("--factor", factors, "polystable factor \"r; c1; ch2*n\"");
  gies->callback([&] {
    action = [&](const Context& c, std::ostream& o) { cmd_gieseker(c, v, factors, max_denom, o); };
  });

  auto* nef = app.add_subcommand("nef-ray", "nef ray of the Gieseker wall");
  nef->add_option("character", v)->required();
  nef->callback([&] { action = [&](const Context& c, std::ostream& o) { cmd_nef_ray(c, v, o); }; });

  auto* duy = app.add_subcommand("duy-ray", "Donaldson-Uhlenbeck-Yau ray");
  duy->add_option("character", v)->required();
  duy->callback([&] { action = [&](const Context& c, std::ostream& o) { cmd_duy_ray(c, v, o); }; });

  auto* sweep = app.add_subcommand("sweep", "Gieseker walls over the family D = t*unit");
  sweep->add_option("character", v)->required();
  sweep->add_option("--unit", unit, "direction orthogonal to H")->required();
  sweep->add_option("--t", tlist, "comma separated t values");
  sweep->add_option("--from", from);
  sweep->add_option("--to", to);
  sweep->add_option("--step", step);
  sweep->add_flag("--serial", serial, "single-threaded reference path");
  sweep->callback([&] {
    action = [&](const Context& c, std::ostream& o) {
      cmd_sweep(c, v, unit, grid_arg(tlist, from, to, step), serial, o);
    };
  });

  auto* delta = app.add_subcommand("delta", "minimal discriminant recovered from a Gieseker wall");
  delta->add_option("--rank", rank)->required();
  delta->add_option("--mu", mu, "reduced slope p/q")->required();
  delta->callback([&] { action = [&](const Context& c, std::ostream& o) { cmd_delta(c, rank, mu, o); }; });

  auto* curve = app.add_subcommand("check-curve", "Euler characteristic conditions for a curve quotient");
  curve->add_option("u", v)->required();
  curve->add_option("--factor", factors, "polystable factor \"r; c1; ch2*n\"")->required();
  curve->add_option("--expect-w", expect, "extremal character the factors must sum to");
  curve->callback([&] {
    action = [&](const Context& c, std::ostream& o) { cmd_check_curve(c, v, factors, expect, o); };
  });

  auto* plot = app.add_subcommand("plot", "SVG diagram of the Gieseker wall");
  plot->add_option("character", v)->required();
  plot->add_option("--with", with, "extra characters whose walls with v are drawn");
  plot->callback([&] { action = [&](const Context& c, std::ostream& o) { cmd_plot(c, v, with, o); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Context ctx = make_context(g);
    std::ostringstream buffer;
    action(ctx, buffer);
    if (g.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(g.out, std::ios::binary);
      if (!f) throw ParseError("cannot write '" + g.out + "'");
      f << buffer.str();
      if (!f) throw Error("write to '" + g.out + "' failed");
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return classify(e);
  }
}

}  // namespace gwall
