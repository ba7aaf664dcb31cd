#pragma once

// Embedded data rows with provenance, abbreviated-row expansion and a
// verification pass. The data file is compiled in and checked against its
// SHA-256 sum at first use.
//
// Line format: source|kind|q|p|poly|row|row|...
// Rows are bracketed comma lists over {+,-,0}; source is "<section>:<key>".

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negadesigns/gf.hpp"
#include "negadesigns/seqcore.hpp"

namespace negadesigns {

enum class RecordKind {
  NGPairAbbrevC,       // ng-abbrev-c
  NGPairAbbrevD,       // ng-abbrev-d
  SymmetricBlocksB,    // sym-blocks-b
  WeighingQuadE,       // weighing-quad-e
  NegacyclicConferenceRow,  // nega-conference-row
  QuasiWilliamson35,   // quasi-williamson-35
  WorkedNGPair,        // worked-ng-pair
  WorkedMultiplier,    // worked-multiplier
  WorkedConferenceRow, // worked-conference-row
  WorkedSplit,         // worked-split
};

std::string_view to_string(RecordKind kind);

enum class ParseStatus { Ok, Corrupt };

/// How a reversal-type abbreviation was resolved.
enum class Reading {
  None,         // kind has no such choice
  Primary,      // b_{v-1-i} = -b_i
  Alternative,  // b_{v-i} = -b_i, i >= 1
  Ambiguous,    // both verify
};

std::string_view to_string(Reading r);

struct CorpusRecord {
  std::string source;   // e.g. "B:6"
  std::string section;  // "B"
  std::string key;      // "6"
  RecordKind kind;
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::string poly;     // empty when absent
  std::vector<std::string> raw_rows;

  ParseStatus status = ParseStatus::Ok;
  std::string status_note;
  /// Parsed rows, one per raw row. A row that fails to parse or has the wrong
  /// length is left empty and listed in `corrupt_rows`.
  std::vector<TernarySeq> rows;
  std::vector<std::size_t> corrupt_rows;

  std::optional<Polynomial> polynomial() const;
};

/// Parses the line format and assigns parse status. Never throws on
/// malformed rows; throws Parse on a malformed record line.
std::vector<CorpusRecord> parse_corpus(std::string_view text);

/// The embedded corpus. Throws Corrupt when the checksum does not match.
const std::vector<CorpusRecord>& corpus();
std::string_view embedded_corpus_text();
std::string embedded_corpus_checksum();  // from SHA256SUMS
std::string sha256_hex(std::string_view data);

const CorpusRecord* find_record(std::string_view source);

struct ExpandedRecord {
  std::vector<TernarySeq> rows;  // full-length rows
  Reading reading = Reading::None;
};

/// Full rows for an Ok record. C/D pairs try the primary reading and then the
/// alternative one; no verifying reading gives Corrupt.
ExpandedRecord expand_record(const CorpusRecord& r);

struct RecordVerdict {
  std::string source;
  RecordKind kind;
  ParseStatus status;
  /// Ok records: the kind's predicate. Corrupt records: every parseable row
  /// passes its row-level check (false when there is none).
  bool passed = false;
  Reading reading = Reading::None;
  std::string detail;
};

/// Verifies every record; Corrupt records are reported, not skipped.
std::vector<RecordVerdict> verify_all(std::string_view section = {});
RecordVerdict verify_record(const CorpusRecord& r);

struct GapLists {
  std::vector<int> no_paley;             // odd t <= 125 with no Paley NG-pair of length 2t
  std::vector<int> no_williamson_known;  // the former minus 23, 29, 39, 43
};

/// The printed lists.
GapLists gap_lists();
/// Odd t <= limit such that neither 2t - 1 nor 4t - 1 is an odd prime power.
std::vector<int> recompute_no_paley(int limit = 125);

/// Corpus polynomial for the Ito series at this q, if any.
std::optional<Polynomial> corpus_ito_polynomial(std::uint64_t q);

struct CorpusConference {
  TernarySeq row;
  std::string source;
};

/// A verifying negacyclic conference row of order n from the corpus:
/// full printed rows first, then rows recovered from the symmetric blocks.
std::optional<CorpusConference> corpus_conference_row(std::size_t order);

/// Reverses the symmetric-block procedure: expands a', b'', undoes the shift
/// by m = (t - 1) / 2 and the alternating signs, then interleaves.
TernarySeq conference_from_blocks(const TernarySeq& a_prime, const TernarySeq& b_dprime);

}  // namespace negadesigns
