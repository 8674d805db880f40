#include "gwall/io.hpp"

#include <fstream>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("surface file: missing key '") + key + "'");
  return j.at(key);
}

QVec vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  QVec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Integer integer_from_json(const Json& j, const char* what) {
  const Rational q = rational_from_json(j);
  if (!is_integer(q)) throw ParseError(std::string(what) + " must be an integer");
  return q.get_num();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

SurfaceData surface_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("surface file must hold a JSON object");
  SurfaceData S;
  S.name = j.value("name", std::string("surface"));
  const Integer n = integer_from_json(field(j, "picard_rank"), "picard_rank");
  if (n < 1 || n > 64) throw ValidationError("picard_rank must be between 1 and 64");
  S.picard_rank = static_cast<int>(n.get_si());
  const Json& M = field(j, "intersection_matrix");
  if (!M.is_array()) throw ParseError("intersection_matrix must be an array of rows");
  for (const auto& row : M) S.intersection_matrix.push_back(vector_from_json(row, "matrix row"));
  S.H = vector_from_json(field(j, "H"), "H");
  S.K = vector_from_json(field(j, "K"), "K");
  S.chi_O = integer_from_json(field(j, "chi_O"), "chi_O");
  S.min_effective_slope_d = rational_from_json(field(j, "min_effective_slope_d"));
  if (j.contains("effective_generators") && !j.at("effective_generators").is_null()) {
    std::vector<QVec> gens;
    for (const auto& g : j.at("effective_generators")) gens.push_back(vector_from_json(g, "generator"));
    S.effective_generators = std::move(gens);
  }
  if (j.contains("e")) S.e = integer_from_json(j.at("e"), "e");
  return validated(std::move(S));
}

SurfaceData load_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open surface file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("surface file '" + path + "': " + e.what());
  }
  return surface_from_json(j);
}

Json surface_to_json(const SurfaceData& S) {
  Json j;
  j["name"] = S.name;
  j["picard_rank"] = S.picard_rank;
  Json M = Json::array();
  for (const auto& row : S.intersection_matrix) M.push_back(to_json(row));
  j["intersection_matrix"] = M;
  j["H"] = to_json(S.H);
  j["K"] = to_json(S.K);
  j["chi_O"] = to_string(S.chi_O);
  j["min_effective_slope_d"] = to_json(S.min_effective_slope_d);
  if (S.effective_generators) {
    Json g = Json::array();
    for (const auto& v : *S.effective_generators) g.push_back(to_json(v));
    j["effective_generators"] = g;
  }
  j["e"] = to_string(S.e);
  return j;
}

ChernCharacter parse_character(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(';', start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3)
    throw ParseError("character must look like \"r; c1,...; ch2\", got \"" + std::string(text) + "\"");
  const Rational r = parse_rational(parts[0]);
  if (!is_integer(r) || !r.get_num().fits_slong_p()) throw ParseError("rank must be an integer");
  ChernCharacter v;
  v.rank = r.get_num().get_si();
  v.c1 = parse_rational_list(parts[1]);
  v.ch2 = parse_rational(parts[2]);
  return v;
}

std::string format_character(const ChernCharacter& v) {
  return "(" + std::to_string(v.rank) + ", (" + to_string(v.c1) + "), " + to_string(v.ch2) + ")";
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const ChernCharacter& v) {
  Json j;
  j["rank"] = v.rank;
  j["c1"] = to_json(v.c1);
  j["ch2"] = to_json(v.ch2);
  return j;
}

ChernCharacter character_from_json(const Json& j) {
  ChernCharacter v;
  const Integer r = integer_from_json(j.at("rank"), "rank");
  v.rank = r.get_si();
  v.c1 = vector_from_json(j.at("c1"), "c1");
  v.ch2 = rational_from_json(j.at("ch2"));
  return v;
}

Json to_json(const Wall& w) {
  Json j;
  switch (w.kind) {
    case Wall::Kind::vertical:
      j["kind"] = "vertical";
      j["beta"] = to_json(w.beta);
      break;
    case Wall::Kind::semicircle:
      j["kind"] = "semicircle";
      j["center"] = to_json(w.center);
      j["radius_sq"] = to_json(w.radius_sq);
      break;
    case Wall::Kind::empty:
      j["kind"] = "empty";
      j["center"] = to_json(w.center);
      j["radius_sq"] = to_json(w.radius_sq);
      break;
  }
  return j;
}

Wall wall_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "vertical") return Wall::vertical_at(rational_from_json(j.at("beta")));
  if (kind == "semicircle" || kind == "empty")
    return Wall::circle(rational_from_json(j.at("center")), rational_from_json(j.at("radius_sq")));
  throw ParseError("unknown wall kind '" + kind + "'");
}

Json to_json(const ExtremalResult& r) {
  Json j;
  j["mu_tilde_w"] = to_json(r.mu_tilde_w);
  j["rank_w"] = r.rank_w;
  j["delta_bar_w"] = to_json(r.delta_bar_w);
  j["unique"] = r.unique;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json cj;
    cj["w"] = to_json(c.w);
    cj["u"] = to_json(c.quotient.u);
    cj["quotient_ok"] = c.quotient.ok;
    cj["quotient_note"] = c.quotient.note;
    cj["provenance"] = c.provenance;
    cands.push_back(cj);
  }
  j["candidates"] = cands;
  j["wall"] = to_json(r.wall);
  return j;
}

Json to_json(const RegimeCertificate& c) {
  Json j;
  j["constant_C"] = to_json(c.constant_C);
  j["injectivity_ok"] = c.injectivity_ok;
  j["injectivity_margin"] = to_json(c.injectivity_margin);
  j["gap_ok"] = c.gap_ok;
  j["gap_witness"] = c.gap_witness ? to_json(*c.gap_witness) : Json(nullptr);
  j["nesting_ok"] = c.nesting_ok ? Json(*c.nesting_ok) : Json(nullptr);
  j["curve_ok"] = c.curve_ok ? Json(*c.curve_ok) : Json(nullptr);
  j["passes"] = c.passes();
  return j;
}

std::string format_wall(const Wall& w) {
  switch (w.kind) {
    case Wall::Kind::vertical:
      return "vertical beta=" + to_string(w.beta);
    case Wall::Kind::semicircle:
      return "s=" + to_string(w.center) + " rho2=" + to_string(w.radius_sq);
    case Wall::Kind::empty:
      break;
  }
  return "empty s=" + to_string(w.center) + " rho2=" + to_string(w.radius_sq);
}

}  // namespace gwall
