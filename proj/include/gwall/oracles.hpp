#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwall/invariants.hpp"

namespace gwall {

/// The minimal-discriminant integral character with a given (rank, c1), and
/// where the answer came from.
struct OracleAnswer {
  ChernCharacter character;
  std::string provenance;
};

/// Source of minimal discriminants of semistable characters. For fixed
/// (rank, c1) only ch2 varies, so minimizing Δ̄_{H,D} is the same for every
/// twist D and the oracle answers with the minimizing character itself.
/// Implementations are immutable and safe for concurrent queries.
class DeltaOracle {
 public:
  virtual ~DeltaOracle() = default;

  /// nullopt: no semistable character with this (rank, c1) exists.
  virtual std::optional<OracleAnswer> min_character(const SurfaceData& S, long rank,
                                                    const QVec& c1) const = 0;

  /// v integral of positive rank with a discriminant at or above the minimum.
  bool is_nonempty(const SurfaceData& S, const TwistDivisor& D, const ChernCharacter& v) const;

  std::optional<Rational> min_delta_bar(const SurfaceData& S, const TwistDivisor& D, long rank,
                                        const QVec& c1) const;
};

/// Largest ch2 in c1²/2 + Z with c1² - 2 r ch2 >= 0.
ChernCharacter bogomolov_min_character(const SurfaceData& S, long rank, const QVec& c1);

/// Δ̄_{H,D} of bogomolov_min_character.
Rational bogomolov_min_delta(const SurfaceData& S, const TwistDivisor& D, long rank,
                             const QVec& c1);

/// Every integral character allowed by the Bogomolov inequality is treated as
/// nonempty. Optimistic: correctness-critical runs should supply a table.
class BogomolovOracle final : public DeltaOracle {
 public:
  std::optional<OracleAnswer> min_character(const SurfaceData& S, long rank,
                                            const QVec& c1) const override;
};

struct DeltaRow {
  long rank = 0;
  QVec c1;
  Rational delta;  // lattice discriminant c1²/(2r²) - ch2/r
  std::string provenance;
  bool empty = false;  // delta "none": no semistable character with this key
};

struct DeltaTable {
  std::vector<DeltaRow> rows;

  const DeltaRow* find(long rank, const QVec& c1) const;
};

/// Parses and validates a δ-table CSV (header: rank,c1,delta,provenance).
/// A delta of "none" records that the moduli space is empty for that key.
/// Rejects duplicate keys, non-integral discriminants and values below the
/// Bogomolov floor. Throws ParseError or ValidationError.
DeltaTable load_delta_table(std::istream& in, const SurfaceData& S);
DeltaTable load_delta_table_file(const std::string& path, const SurfaceData& S);

/// Table lookup with Bogomolov fallback for missing keys.
class TableOracle final : public DeltaOracle {
 public:
  explicit TableOracle(DeltaTable table) : table_(std::move(table)) {}

  std::optional<OracleAnswer> min_character(const SurfaceData& S, long rank,
                                            const QVec& c1) const override;
  const DeltaTable& table() const { return table_; }

 private:
  DeltaTable table_;
};

}  // namespace gwall
