#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "negadesigns/constructions.hpp"
#include "negadesigns/corpus.hpp"
#include "negadesigns/equiv.hpp"
#include "negadesigns/error.hpp"

using namespace negadesigns;

namespace {

const CorpusRecord& rec(std::string_view source) {
  const auto* r = find_record(source);
  REQUIRE(r != nullptr);
  return *r;
}

std::vector<std::string> row_strs(const ExpandedRecord& e) {
  std::vector<std::string> out;
  for (const auto& r : e.rows) out.push_back(r.str());
  return out;
}

}  // namespace

TEST_CASE("checksum and embedded text") {
  CHECK(sha256_hex(embedded_corpus_text()) == embedded_corpus_checksum());
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK_FALSE(corpus().empty());
}

TEST_CASE("expansion examples") {
  auto c2 = expand_record(rec("C:2"));
  CHECK(row_strs(c2) == std::vector<std::string>{"+-", "+-"});
  CHECK(c2.reading == Reading::Primary);
  auto d2 = expand_record(rec("D:2"));
  CHECK(row_strs(d2) == std::vector<std::string>{"++", "+-"});
  auto b6 = expand_record(rec("B:6"));
  CHECK(row_strs(b6) == std::vector<std::string>{"0--", "-++"});
  auto blk = SymmetricBlocks{b6.rows[0], BinarySeq(b6.rows[1])};
  CHECK(verify(two_circulant_conference(blk), MatrixClass::conference()));
}

TEST_CASE("parser keeps malformed rows as corrupt, never guessed") {
  auto recs = parse_corpus("X:2|worked-ng-pair||||[+,-]|[+,,-]\nX:2|worked-ng-pair||||[+,-]|[+,-,+]\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].status == ParseStatus::Corrupt);
  CHECK(recs[0].corrupt_rows == std::vector<std::size_t>{1});
  CHECK(recs[0].rows[1].empty());
  CHECK(recs[1].status == ParseStatus::Corrupt);
  CHECK_THROWS_AS(parse_corpus("no separators here\n"), Error);
}

TEST_CASE("every OK record passes its predicate") {
  std::size_t ok = 0, corrupt = 0;
  for (const auto& v : verify_all()) {
    CAPTURE(v.source);
    CAPTURE(v.detail);
    if (v.status == ParseStatus::Ok) {
      CHECK(v.passed);
      ++ok;
    } else {
      ++corrupt;
    }
  }
  CHECK(ok > 40);
  CHECK(corrupt > 0);
  auto b = verify_all("B");
  CHECK(std::all_of(b.begin(), b.end(), [](const RecordVerdict& v) { return v.source.starts_with("B:"); }));
}

TEST_CASE("the order-54 conference row verifies") {
  const auto& r = rec("B:54");
  CHECK(verify_record(r).passed);
  auto row = corpus_conference_row(54);
  REQUIRE(row);
  CHECK(verify(StructuredMatrix::from_first_row(row->row, Structure::Negacyclic), MatrixClass::conference()));
}

TEST_CASE("order-35 rows: malformed rows are reported") {
  const auto& r = rec("S9:35");
  CHECK(r.status == ParseStatus::Corrupt);
  CHECK(r.corrupt_rows == std::vector<std::size_t>{1, 2, 3});
  CHECK(r.rows[0].size() == 35);
  CHECK_FALSE(verify_record(r).passed);
}

TEST_CASE("C and D records agree up to equivalence") {
  for (const auto& r : corpus()) {
    if (r.section != "C" || r.status != ParseStatus::Ok) continue;
    const auto* d = find_record("D:" + r.key);
    if (!d || d->status != ParseStatus::Ok) continue;
    auto ec = expand_record(r), ed = expand_record(*d);
    if (ec.rows[0].size() > 30) continue;
    CAPTURE(r.source);
    NGPair pc(BinarySeq(ec.rows[0]), BinarySeq(ec.rows[1]));
    NGPair pd(BinarySeq(ed.rows[0]), BinarySeq(ed.rows[1]));
    CHECK(are_equivalent(pc, pd).verdict == Verdict::Equivalent);
  }
}

TEST_CASE("the order-14 block record matches the worked pipeline") {
  auto e = expand_record(rec("B:14"));
  auto blk = symmetric_2c_blocks(negacyclic_conference(13));
  CHECK(e.rows[0] == blk.a);
  CHECK(e.rows[1] == blk.b.ternary());
}

TEST_CASE("conference rows obey Belevitch symmetry") {
  for (const auto& r : corpus()) {
    if (r.kind != RecordKind::NegacyclicConferenceRow && r.kind != RecordKind::WorkedConferenceRow) continue;
    if (r.status != ParseStatus::Ok) continue;
    CAPTURE(r.source);
    CHECK(satisfies_belevitch(r.rows[0]));
  }
}

TEST_CASE("gap lists") {
  auto g = gap_lists();
  std::vector<int> l25{23, 29, 39, 43, 47, 59, 65, 67, 73, 81, 89, 93, 101, 103, 107, 109, 113, 119};
  std::vector<int> l31{47, 59, 65, 67, 73, 81, 89, 93, 101, 103, 107, 109, 113, 119};
  CHECK(g.no_paley == l25);
  CHECK(g.no_paley.size() == 18);
  CHECK(g.no_williamson_known == l31);
  CHECK(recompute_no_paley(125) == l25);
  std::vector<int> diff;
  std::set_difference(l25.begin(), l25.end(), l31.begin(), l31.end(), std::back_inserter(diff));
  CHECK(diff == std::vector<int>{23, 29, 39, 43});
}

TEST_CASE("blocks to row inversion") {
  auto e = expand_record(rec("B:14"));
  CHECK(conference_from_blocks(e.rows[0], e.rows[1]) == negacyclic_conference(13).row());
}

TEST_CASE("ito polynomials from the corpus") {
  auto p = corpus_ito_polynomial(7);
  REQUIRE(p);
  CHECK(*p == Polynomial::parse("x^2-x+3", 7));
  CHECK_FALSE(corpus_ito_polynomial(5));
}
