#pragma once

// Command implementations behind tools/afinv.  Each command returns both a
// JSON document (sorted keys, exact values) and a text rendering; the
// executable only picks one and sets the exit status.

#include "afinv/abelian_group.hpp"
#include "afinv/elliptic.hpp"
#include "afinv/error.hpp"
#include "afinv/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace afinv::cli {

inline constexpr std::uint64_t kDefaultSeed = 20091229;
inline constexpr const char* kCorpusEnvVar = "AFINV_CORPUS";

struct CommandResult {
  Json json;
  std::string text;
  int exit_code = 0;
};

/// {"error": <ErrorKind name>, "message": ...} (+ "position" for parse errors).
Json error_json(const Error& e);

CommandResult cmd_snf(std::string_view matrix);
CommandResult cmd_abelianize(std::string_view matrix, std::string_view polynomial);
CommandResult cmd_bowen_franks(std::string_view matrix);
CommandResult cmd_probe(std::string_view matrix, std::string_view polynomial, unsigned trials,
                        unsigned steps, std::uint64_t seed);
CommandResult cmd_cf(std::string_view surd, bool with_matrix);
CommandResult cmd_torsion(std::string_view curve);
/// `lambda=<r>` gives j and the orbit; `j=<r>` gives the rational lambdas.
CommandResult cmd_jmap(std::string_view spec);
CommandResult cmd_zeta(std::string_view curve, std::string_view matrix,
                       std::vector<BigInt> primes, unsigned order, std::optional<int> alpha);

// ---------------------------------------------------------------------------
// Conjecture corpus

/// One row of the torsion table.  Fields are kept as text so that a bad row
/// fails on evaluation, not on load.
struct CorpusEntry {
  enum class IncidenceKind { Theta, Matrix };

  std::string label;
  std::string curve;  // curve spec, e.g. "lambda=-1"
  IncidenceKind incidence_kind = IncidenceKind::Theta;
  std::string incidence;  // surd or matrix text
  std::vector<std::string> polynomials;
  std::optional<AbelianGroup> expected_torsion;
  /// Structural problem found while loading.
  std::optional<std::string> load_error;
};

enum class Verdict { Match, Mismatch, NotComputed };
std::string_view verdict_name(Verdict v);

struct InvariantCheck {
  IntPolynomial polynomial;
  AbelianGroup group;
  Verdict verdict = Verdict::NotComputed;
};

struct ConjectureReport {
  CorpusEntry entry;
  std::optional<Json> error;
  std::optional<CurveQ> curve;
  Rational j;
  IntMatrix matrix;
  AbelianGroup computed_torsion;
  std::vector<Point> torsion_points;
  std::vector<InvariantCheck> invariants;
  /// Set when the entry carries an expected torsion group.
  std::optional<bool> expected_ok;
};

std::vector<CorpusEntry> parse_corpus_json(const Json& doc);
/// Header `label,lambda,theta,poly,expected`; `poly` lists polynomials
/// separated by spaces, `expected` lists torsion coefficients separated by
/// spaces ("1" for the trivial group, empty for none).  Fields containing
/// commas must be double-quoted.
std::vector<CorpusEntry> parse_corpus_csv(std::string_view text);
/// Dispatches on the file extension (.csv, otherwise JSON).
std::vector<CorpusEntry> load_corpus(const std::string& path);
/// $AFINV_CORPUS if set, else the corpus bundled with the source tree.
std::string default_corpus_path();

/// x - 1 is compared against rational torsion; every
/// other polynomial needs torsion over an extension field and is reported
/// as not computed.
ConjectureReport evaluate_entry(const CorpusEntry& entry);

Json report_json(const ConjectureReport& r);

/// Exit status 1 iff some entry's expected torsion disagrees with the
/// computed one.  Conjecture verdicts never affect the status.
CommandResult cmd_conjecture(const std::vector<CorpusEntry>& entries);
CommandResult cmd_conjecture(const std::string& corpus_path);

}  // namespace afinv::cli
