#include "gwall/oracles.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "gwall/errors.hpp"

namespace gwall {

std::optional<Rational> DeltaOracle::min_delta_bar(const SurfaceData& S, const TwistDivisor& D,
                                                   long rank, const QVec& c1) const {
  const auto ans = min_character(S, rank, c1);
  if (!ans) return std::nullopt;
  return slope_disc(ans->character, D, S, SlopeMode::bar).delta;
}

bool DeltaOracle::is_nonempty(const SurfaceData& S, const TwistDivisor& D,
                              const ChernCharacter& v) const {
  require_dimension(D.coords, S, "twist divisor");
  if (v.rank <= 0 || !is_integral(v, S)) return false;
  const auto ans = min_character(S, v.rank, v.c1);
  // Larger Δ means smaller ch2 at fixed (rank, c1).
  return ans && v.ch2 <= ans->character.ch2;
}

ChernCharacter bogomolov_min_character(const SurfaceData& S, long rank, const QVec& c1) {
  if (rank < 1) throw DomainError("bogomolov_min_delta needs rank >= 1");
  require_dimension(c1, S, "c1");
  if (!all_integer(c1)) throw DomainError("c1 must be integral");
  const Rational half_sq = pair(c1, c1, S) / 2;
  // ch2 = c1²/2 + k with k <= c1²/(2r) - c1²/2.
  const Integer k = floor(half_sq / Rational(rank) - half_sq);
  return {rank, c1, half_sq + Rational(k)};
}

Rational bogomolov_min_delta(const SurfaceData& S, const TwistDivisor& D, long rank,
                             const QVec& c1) {
  return slope_disc(bogomolov_min_character(S, rank, c1), D, S, SlopeMode::bar).delta;
}

std::optional<OracleAnswer> BogomolovOracle::min_character(const SurfaceData& S, long rank,
                                                           const QVec& c1) const {
  return OracleAnswer{bogomolov_min_character(S, rank, c1), "bogomolov"};
}

const DeltaRow* DeltaTable::find(long rank, const QVec& c1) const {
  for (const auto& row : rows) {
    if (row.rank == rank && row.c1 == c1) return &row;
  }
  return nullptr;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in δ-table line: " + line);
  out.push_back(trim(cur));
  return out;
}

QVec parse_c1_field(std::string field) {
  field = trim(field);
  if (!field.empty() && field.front() == '(' && field.back() == ')') {
    field = field.substr(1, field.size() - 2);
  }
  QVec c1;
  std::istringstream in(field);
  std::string tok;
  while (in >> tok) {
    const Rational x = parse_rational(tok);
    if (!is_integer(x)) throw ParseError("c1 entries must be integers: '" + tok + "'");
    c1.push_back(x);
  }
  return c1;
}

ChernCharacter character_of_row(const DeltaRow& row, const SurfaceData& S) {
  // ch2 = c1²/(2r) - r Δ.
  const Rational r = row.rank;
  return {row.rank, row.c1, pair(row.c1, row.c1, S) / (2 * r) - r * row.delta};
}

}  // namespace

DeltaTable load_delta_table(std::istream& in, const SurfaceData& S) {
  DeltaTable table;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields.size() < 4 || fields[0] != "rank" || fields[1] != "c1" || fields[2] != "delta" ||
          fields[3] != "provenance") {
        throw ParseError("δ-table header must be 'rank,c1,delta,provenance'");
      }
      header_seen = true;
      continue;
    }
    const std::string where = "δ-table line " + std::to_string(lineno) + ": ";
    if (fields.size() != 4) throw ParseError(where + "expected 4 fields");
    DeltaRow row;
    const Rational rank = parse_rational(fields[0]);
    if (!is_integer(rank) || sgn(rank) <= 0 || !rank.get_num().fits_slong_p()) {
      throw ParseError(where + "rank must be a positive integer");
    }
    row.rank = rank.get_num().get_si();
    row.c1 = parse_c1_field(fields[1]);
    require_dimension(row.c1, S, "δ-table c1");
    row.provenance = fields[3];
    if (table.find(row.rank, row.c1)) throw ValidationError(where + "duplicate (rank, c1) key");
    if (fields[2] == "none") {
      row.empty = true;
      table.rows.push_back(std::move(row));
      continue;
    }
    row.delta = parse_rational(fields[2]);
    const Rational floor_delta =
        lattice_discriminant(bogomolov_min_character(S, row.rank, row.c1), S);
    if (row.delta < floor_delta) {
      throw ValidationError(where + "delta " + to_string(row.delta) +
                            " is below the Bogomolov floor " + to_string(floor_delta));
    }
    const ChernCharacter ch = character_of_row(row, S);
    if (!is_integral(ch, S)) {
      throw ValidationError(where + "delta " + to_string(row.delta) +
                            " is not attained by an integral character (ch2 = " +
                            to_string(ch.ch2) + ")");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DeltaTable load_delta_table_file(const std::string& path, const SurfaceData& S) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open δ-table '" + path + "'");
  return load_delta_table(in, S);
}

std::optional<OracleAnswer> TableOracle::min_character(const SurfaceData& S, long rank,
                                                       const QVec& c1) const {
  if (const DeltaRow* row = table_.find(rank, c1)) {
    if (row->empty) return std::nullopt;
    return OracleAnswer{character_of_row(*row, S), "table:" + row->provenance};
  }
  return OracleAnswer{bogomolov_min_character(S, rank, c1), "bogomolov-fallback"};
}

}  // namespace gwall
