#include "negadesigns/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <sstream>

#include "negadesigns/constructions.hpp"
#include "negadesigns/equiv.hpp"
#include "negadesigns/error.hpp"

namespace negadesigns {

namespace detail {
extern const unsigned char kCorpusData[];
extern const std::size_t kCorpusSize;
extern const char kCorpusSha256[];
}  // namespace detail

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::NGPairAbbrevC: return "ng-abbrev-c";
    case RecordKind::NGPairAbbrevD: return "ng-abbrev-d";
    case RecordKind::SymmetricBlocksB: return "sym-blocks-b";
    case RecordKind::WeighingQuadE: return "weighing-quad-e";
    case RecordKind::NegacyclicConferenceRow: return "nega-conference-row";
    case RecordKind::QuasiWilliamson35: return "quasi-williamson-35";
    case RecordKind::WorkedNGPair: return "worked-ng-pair";
    case RecordKind::WorkedMultiplier: return "worked-multiplier";
    case RecordKind::WorkedConferenceRow: return "worked-conference-row";
    case RecordKind::WorkedSplit: return "worked-split";
  }
  return "?";
}

std::string_view to_string(Reading r) {
  switch (r) {
    case Reading::None: return "none";
    case Reading::Primary: return "primary";
    case Reading::Alternative: return "alternative";
    case Reading::Ambiguous: return "ambiguous";
  }
  return "?";
}

std::optional<Polynomial> CorpusRecord::polynomial() const {
  if (poly.empty() || !p) return std::nullopt;
  return Polynomial::parse(poly, *p);
}

namespace {

RecordKind kind_from(std::string_view s) {
  for (int k = 0; k <= static_cast<int>(RecordKind::WorkedSplit); ++k) {
    if (to_string(static_cast<RecordKind>(k)) == s) return static_cast<RecordKind>(k);
  }
  throw Error(ErrorCode::Parse, "unknown record kind '" + std::string(s) + "'");
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <class T>
std::optional<T> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error(ErrorCode::Parse, "bad integer '" + std::string(s) + "'");
  return v;
}

// Bracketed comma list over {+,-,0}; nullopt on any malformed token.
std::optional<TernarySeq> parse_row(std::string_view raw) {
  if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']') return std::nullopt;
  std::vector<Entry> e;
  for (const auto& tok : split(raw.substr(1, raw.size() - 2), ',')) {
    if (tok == "+") e.push_back(1);
    else if (tok == "-") e.push_back(-1);
    else if (tok == "0") e.push_back(0);
    else return std::nullopt;
  }
  return TernarySeq(std::move(e));
}

std::size_t order_of(const CorpusRecord& r) {
  std::size_t n = 0;
  for (char c : r.key) {
    if (c < '0' || c > '9') break;
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

// Printed row lengths for each kind, keyed by the record's order.
std::vector<std::size_t> expected_lengths(const CorpusRecord& r) {
  const std::size_t v = order_of(r), t = v / 2;
  switch (r.kind) {
    case RecordKind::SymmetricBlocksB: return {(t + 1) / 2, (t + 1) / 2};
    case RecordKind::NGPairAbbrevC:
    case RecordKind::NGPairAbbrevD: return {t + 1, t};
    case RecordKind::WeighingQuadE: return {v / 4, v / 4, v / 4, v / 4};
    case RecordKind::NegacyclicConferenceRow:
    case RecordKind::WorkedConferenceRow: return {v};
    case RecordKind::QuasiWilliamson35: return {v, v, v, v};
    case RecordKind::WorkedNGPair: return {v, v};
    case RecordKind::WorkedMultiplier: return {v, v, v, v, v};
    case RecordKind::WorkedSplit: return {t, t, t, t, t};
  }
  return {};
}

bool binary_rows(const std::vector<TernarySeq>& rows, std::initializer_list<std::size_t> idx) {
  return std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return rows[i].is_binary(); });
}

// Quasi-symmetric a from its first t + 1 terms.
TernarySeq expand_quasi_symmetric(const TernarySeq& head, std::size_t v) {
  std::vector<Entry> a(v);
  for (std::size_t i = 0; i < v; ++i) a[i] = i < head.size() ? head[i] : head[v - i];
  return TernarySeq(std::move(a));
}

// b_{v-1-i} = -b_i from the first t terms.
std::optional<TernarySeq> expand_primary(const TernarySeq& head, std::size_t v) {
  std::vector<Entry> b(v);
  for (std::size_t i = 0; i < v; ++i) b[i] = i < head.size() ? head[i] : static_cast<Entry>(-head[v - 1 - i]);
  return TernarySeq(std::move(b));
}

// b_{v-i} = -b_i for i >= 1. The middle entry would satisfy b_t = -b_t,
// which no sign does, so this reading never yields a binary sequence.
std::optional<TernarySeq> expand_alternative(const TernarySeq& head, std::size_t v) {
  if (v % 2 == 0 && v >= 2) return std::nullopt;
  std::vector<Entry> b(v);
  for (std::size_t i = 0; i < v; ++i) b[i] = i < head.size() ? head[i] : static_cast<Entry>(-head[v - i]);
  return TernarySeq(std::move(b));
}

bool is_ng(const TernarySeq& a, const TernarySeq& b) {
  return a.is_binary() && b.is_binary() && a.size() == b.size() && is_complementary(a, b, CorrelationKind::Negaperiodic);
}

struct PairExpansion {
  TernarySeq a, b;
  Reading reading = Reading::None;
};

std::optional<PairExpansion> expand_pair(const CorpusRecord& r) {
  const std::size_t v = order_of(r);
  const auto a = expand_quasi_symmetric(r.rows[0], v);
  const auto p = expand_primary(r.rows[1], v);
  const auto q = expand_alternative(r.rows[1], v);
  const bool ok_p = p && is_ng(a, *p), ok_q = q && is_ng(a, *q);
  if (ok_p && ok_q) return PairExpansion{a, *p, *p == *q ? Reading::Primary : Reading::Ambiguous};
  if (ok_p) return PairExpansion{a, *p, Reading::Primary};
  if (ok_q) return PairExpansion{a, *q, Reading::Alternative};
  return std::nullopt;
}

// Circulant-symmetric row of length 2h - 1 from its first h terms.
TernarySeq expand_circulant(const TernarySeq& head, std::size_t t) {
  std::vector<Entry> a(t);
  for (std::size_t i = 0; i < t; ++i) a[i] = i < head.size() ? head[i] : head[t - i];
  return TernarySeq(std::move(a));
}

// Internal consistency of the worked multiplier example: the rows are
// a, b, c, d, d' with (a, b) and (c, d) NG-pairs, multiplier 9 taking c to a
// and d to d'.
std::string multiplier_inconsistency(const std::vector<TernarySeq>& rows) {
  if (!binary_rows(rows, {0, 1, 2, 3, 4})) return "rows are not binary";
  if (!is_ng(rows[0], rows[1])) return "(a, b) is not an NG-pair";
  if (!is_ng(rows[2], rows[3])) return "printed d is not NG with c (it repeats b)";
  const auto m = SeqMotion::multiplier(9);
  if (transform(rows[2], m) != rows[0]) return "multiplier 9 does not take c to a";
  if (transform(rows[3], m) != rows[4]) return "multiplier 9 does not take d to d'";
  return {};
}

void assign_status(CorpusRecord& r) {
  const auto want = expected_lengths(r);
  if (want.size() != r.raw_rows.size()) {
    r.status = ParseStatus::Corrupt;
    r.status_note = "expected " + std::to_string(want.size()) + " rows, found " + std::to_string(r.raw_rows.size());
  }
  r.rows.assign(r.raw_rows.size(), TernarySeq{});
  std::string notes;
  for (std::size_t i = 0; i < r.raw_rows.size(); ++i) {
    const auto row = parse_row(r.raw_rows[i]);
    const std::size_t expect = i < want.size() ? want[i] : 0;
    if (!row) {
      r.corrupt_rows.push_back(i);
      notes += " row " + std::to_string(i) + " has a malformed token;";
    } else if (row->size() != expect) {
      r.corrupt_rows.push_back(i);
      notes += " row " + std::to_string(i) + " has " + std::to_string(row->size()) + " entries, expected " +
               std::to_string(expect) + ";";
    } else {
      r.rows[i] = *row;
    }
  }
  if (!r.corrupt_rows.empty()) {
    r.status = ParseStatus::Corrupt;
    notes.pop_back();
    r.status_note += notes.substr(1);
    return;
  }
  if (r.status == ParseStatus::Corrupt) return;

  if (r.kind == RecordKind::NGPairAbbrevC || r.kind == RecordKind::NGPairAbbrevD) {
    if (!binary_rows(r.rows, {0, 1}) || !expand_pair(r)) {
      r.status = ParseStatus::Corrupt;
      r.status_note = "no reading of the abbreviated b gives an NG-pair";
    }
  } else if (r.kind == RecordKind::WorkedMultiplier) {
    if (auto why = multiplier_inconsistency(r.rows); !why.empty()) {
      r.status = ParseStatus::Corrupt;
      r.status_note = why;
    }
  }
}

}  // namespace

std::vector<CorpusRecord> parse_corpus(std::string_view text) {
  std::vector<CorpusRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, '|');
    if (f.size() < 6) throw Error(ErrorCode::Parse, "record needs at least one row: " + line);
    CorpusRecord r;
    r.source = f[0];
    const auto colon = r.source.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "source lacks ':' in " + r.source);
    r.section = r.source.substr(0, colon);
    r.key = r.source.substr(colon + 1);
    r.kind = kind_from(f[1]);
    r.q = parse_uint<std::uint64_t>(f[2]);
    r.p = parse_uint<std::uint32_t>(f[3]);
    r.poly = f[4];
    r.raw_rows.assign(f.begin() + 5, f.end());
    assign_status(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string_view embedded_corpus_text() {
  return {reinterpret_cast<const char*>(detail::kCorpusData), detail::kCorpusSize};
}

std::string embedded_corpus_checksum() { return detail::kCorpusSha256; }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::ImplementationFault, "SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

const std::vector<CorpusRecord>& corpus() {
  static const std::vector<CorpusRecord> records = [] {
    const auto text = embedded_corpus_text();
    if (sha256_hex(text) != embedded_corpus_checksum()) {
      throw Error(ErrorCode::Corrupt, "embedded corpus does not match its SHA256SUMS entry");
    }
    return parse_corpus(text);
  }();
  return records;
}

const CorpusRecord* find_record(std::string_view source) {
  for (const auto& r : corpus())
    if (r.source == source) return &r;
  return nullptr;
}

ExpandedRecord expand_record(const CorpusRecord& r) {
  if (r.status != ParseStatus::Ok) throw Error(ErrorCode::Corrupt, r.source + ": " + r.status_note);
  const std::size_t v = order_of(r);
  switch (r.kind) {
    case RecordKind::SymmetricBlocksB:
      return {{expand_circulant(r.rows[0], v / 2), expand_circulant(r.rows[1], v / 2)}, Reading::None};
    case RecordKind::NGPairAbbrevC:
    case RecordKind::NGPairAbbrevD: {
      auto e = expand_pair(r);
      if (!e) throw Error(ErrorCode::Corrupt, r.source + ": no reading verifies");
      return {{e->a, e->b}, e->reading};
    }
    default: return {r.rows, Reading::None};
  }
}

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

// Skew-type circulant first row: a_0 = + and a_{t-i} = -a_i.
std::vector<std::pair<std::size_t, std::size_t>> skew_type_defects(const TernarySeq& a) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const std::size_t t = a.size();
  for (std::size_t i = 1; i <= t / 2; ++i)
    if (a[t - i] != -a[i]) bad.emplace_back(i, t - i);
  return bad;
}

void check_ok(RecordVerdict& v, const CorpusRecord& r) {
  const auto ex = expand_record(r);
  v.reading = ex.reading;
  const auto& rows = ex.rows;
  switch (r.kind) {
    case RecordKind::SymmetricBlocksB: {
      if (!rows[1].is_binary()) {
        v.detail = "B-row is not binary";
        return;
      }
      const SymmetricBlocks blocks{rows[0], BinarySeq(rows[1])};
      if (!verify(two_circulant_conference(blocks), MatrixClass::conference())) {
        v.detail = "2C array is not a conference matrix";
        return;
      }
      try {
        const auto quad = turyn_williamson(blocks);
        v.passed = verify(quad.williamson_matrix(), MatrixClass::hadamard());
        v.detail = v.passed ? "conference 2C array; (A+I, A-I, B, B) quasi-Williamson" : "Williamson array not Hadamard";
      } catch (const Error& e) {
        v.detail = e.what();
      }
      return;
    }
    case RecordKind::NGPairAbbrevC:
    case RecordKind::NGPairAbbrevD: {
      const BinarySeq a(rows[0]), b(rows[1]);
      const BinarySeq an = a[0] > 0 ? a : a.negated();
      v.passed = is_skew_hadamard(two_negacyclic_array(an, b));
      v.detail = std::string(v.passed ? "NG-pair, skew-Hadamard 2N array" : "2N array is not skew-Hadamard") +
                 " (" + std::string(to_string(ex.reading)) + " reading)";
      return;
    }
    case RecordKind::WeighingQuadE: {
      const std::array<TernarySeq, 4> q{rows[0], rows[1], rows[2], rows[3]};
      const auto paf = quad_paf_sum(q), cross = quad_cross_residual(q);
      const bool eq27 = std::all_of(paf.begin(), paf.end(), [](long x) { return x == 0; });
      const bool eq28 = std::all_of(cross.begin(), cross.end(), [](long x) { return x == 0; });
      const int n = static_cast<int>(rows[0].size());
      auto c = [&](int i) { return StructuredMatrix::from_first_row(rows[i], Structure::Cyclic); };
      const bool w = verify(williamson_array(c(0), c(1), c(2), c(3)), MatrixClass::weighing(4 * n - 2));
      v.passed = eq27 && eq28 && w;
      v.detail = "W(" + std::to_string(4 * n) + "," + std::to_string(4 * n - 2) + ") " + (w ? "ok" : "fails") +
                 ", autocorrelation sum " + (eq27 ? "ok" : "fails") + ", cross condition " + (eq28 ? "ok" : "fails");
      return;
    }
    case RecordKind::NegacyclicConferenceRow:
    case RecordKind::WorkedConferenceRow: {
      try {
        ConferenceRow row(rows[0], r.source);
        v.passed = true;
        v.detail = "negacyclic conference order " + std::to_string(row.order()) + ", Belevitch ok";
        if (r.kind == RecordKind::WorkedConferenceRow && r.q) {
          const bool same = negacyclic_conference(*r.q).row() == rows[0];
          v.passed = same;
          if (!same) v.detail += "; differs from negacyclic_conference(" + std::to_string(*r.q) + ")";
        }
      } catch (const Error& e) {
        v.detail = e.what();
      }
      return;
    }
    case RecordKind::WorkedNGPair:
      v.passed = is_ng(rows[0], rows[1]);
      v.detail = v.passed ? "NG-pair" : "not an NG-pair";
      return;
    case RecordKind::WorkedMultiplier:
      v.passed = multiplier_inconsistency(rows).empty();
      v.detail = v.passed ? "consistent" : multiplier_inconsistency(rows);
      return;
    case RecordKind::WorkedSplit: {
      // Rows: a, b, a', b', b'' for the worked conference row of the same order.
      const auto* src = find_record("S6:" + std::to_string(order_of(r)));
      if (!src || src->status != ParseStatus::Ok) {
        v.detail = "no worked conference row of this order";
        return;
      }
      const auto blocks = symmetric_2c_blocks(ConferenceRow(src->rows[0]));
      const auto& c = src->rows[0];
      const std::size_t t = rows[0].size();
      bool split_ok = true, alt_ok = true;
      for (std::size_t j = 0; j < t; ++j) {
        split_ok &= rows[0][j] == c[2 * j] && rows[1][j] == c[2 * j + 1];
        const int z = j % 2 == 0 ? 1 : -1;
        alt_ok &= rows[2][j] == z * rows[0][j] && rows[3][j] == z * rows[1][j];
      }
      const bool final_ok = blocks.a == rows[2] && blocks.b.ternary() == rows[4];
      v.passed = split_ok && alt_ok && final_ok;
      v.detail = std::string("split ") + (split_ok ? "ok" : "fails") + ", alternating signs " + (alt_ok ? "ok" : "fails") +
                 ", symmetric blocks " + (final_ok ? "match" : "differ");
      return;
    }
    case RecordKind::QuasiWilliamson35: {
      try {
        const QuasiWilliamsonQuad q{BinarySeq(rows[0]), BinarySeq(rows[1]), BinarySeq(rows[2]), BinarySeq(rows[3])};
        (void)q;
        v.passed = true;
        v.detail = "quasi-Williamson quadruple";
      } catch (const Error& e) {
        v.detail = e.what();
      }
      return;
    }
  }
}

void check_corrupt(RecordVerdict& v, const CorpusRecord& r) {
  v.detail = "CORRUPT: " + r.status_note;
  if (r.kind != RecordKind::QuasiWilliamson35) return;
  // The only checkable property of a lone row is the stated skew type of A.
  v.detail += "; corrupt rows " + join_indices(r.corrupt_rows);
  bool any = false, all_ok = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (std::find(r.corrupt_rows.begin(), r.corrupt_rows.end(), i) != r.corrupt_rows.end()) continue;
    any = true;
    if (i == 0) {
      const auto bad = skew_type_defects(r.rows[0]);
      const bool ok = r.rows[0][0] == 1 && bad.empty();
      all_ok &= ok;
      v.detail += "; row 0 skew-type " + std::string(ok ? "ok" : "fails at index pairs");
      for (auto [x, y] : bad) v.detail += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
  }
  v.passed = any && all_ok;
}

}  // namespace

RecordVerdict verify_record(const CorpusRecord& r) {
  RecordVerdict v{r.source, r.kind, r.status, false, Reading::None, {}};
  try {
    if (r.status == ParseStatus::Ok) check_ok(v, r);
    else check_corrupt(v, r);
  } catch (const Error& e) {
    v.passed = false;
    v.detail = e.what();
  }
  return v;
}

std::vector<RecordVerdict> verify_all(std::string_view section) {
  std::vector<RecordVerdict> out;
  for (const auto& r : corpus())
    if (section.empty() || r.section == section) out.push_back(verify_record(r));
  return out;
}

GapLists gap_lists() {
  GapLists g;
  g.no_paley = {23, 29, 39, 43, 47, 59, 65, 67, 73, 81, 89, 93, 101, 103, 107, 109, 113, 119};
  g.no_williamson_known = {47, 59, 65, 67, 73, 81, 89, 93, 101, 103, 107, 109, 113, 119};
  return g;
}

std::vector<int> recompute_no_paley(int limit) {
  std::vector<int> out;
  for (int t = 1; t <= limit; t += 2)
    if (!odd_prime_power(2 * t - 1) && !odd_prime_power(4 * t - 1)) out.push_back(t);
  return out;
}

std::optional<Polynomial> corpus_ito_polynomial(std::uint64_t q) {
  const auto pp = odd_prime_power(q);
  if (!pp || q % 4 != 3) return std::nullopt;
  for (auto kind : {RecordKind::NGPairAbbrevD, RecordKind::NegacyclicConferenceRow}) {
    for (const auto& r : corpus()) {
      if (r.kind != kind || r.q != q || r.poly.empty()) continue;
      auto f = r.polynomial();
      if (f && f->degree() == static_cast<int>(2 * pp->n)) return f;
    }
  }
  return std::nullopt;
}

TernarySeq conference_from_blocks(const TernarySeq& a_prime, const TernarySeq& b_dprime) {
  const std::size_t t = a_prime.size();
  if (b_dprime.size() != t || t % 2 == 0) throw Error(ErrorCode::LengthMismatch, "blocks need a common odd order");
  const std::size_t m = (t - 1) / 2;
  std::vector<Entry> c(2 * t);
  for (std::size_t j = 0; j < t; ++j) {
    const int z = j % 2 == 0 ? 1 : -1;
    c[2 * j] = static_cast<Entry>(z * a_prime[j]);
    c[2 * j + 1] = static_cast<Entry>(z * b_dprime[(j + t - m) % t]);
  }
  return TernarySeq(std::move(c));
}

std::optional<CorpusConference> corpus_conference_row(std::size_t order) {
  for (auto kind : {RecordKind::WorkedConferenceRow, RecordKind::NegacyclicConferenceRow}) {
    for (const auto& r : corpus()) {
      if (r.kind != kind || r.status != ParseStatus::Ok || order_of(r) != order) continue;
      try {
        ConferenceRow row(r.rows[0], r.source);
        return CorpusConference{row.row(), r.source};
      } catch (const Error&) {
      }
    }
  }
  for (const auto& r : corpus()) {
    if (r.kind != RecordKind::SymmetricBlocksB || r.status != ParseStatus::Ok || order_of(r) != order) continue;
    const auto ex = expand_record(r);
    try {
      ConferenceRow row(conference_from_blocks(ex.rows[0], ex.rows[1]), r.source + " inverted");
      return CorpusConference{row.row(), row.provenance()};
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace negadesigns
