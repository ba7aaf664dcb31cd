#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "negadesigns/constructions.hpp"
#include "negadesigns/corpus.hpp"
#include "negadesigns/equiv.hpp"
#include "negadesigns/error.hpp"
#include "negadesigns/search.hpp"

using namespace negadesigns;

namespace {

bool gram_is(const StructuredMatrix& m, long w) {
  std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += m(i, k) * m(j, k);
      if (s != (i == j ? w : 0)) return false;
    }
  return true;
}

bool equivalent(const NGPair& p, const NGPair& q) {
  return are_equivalent(p, q).verdict == Verdict::Equivalent;
}

NGPair corpus_pair(std::string_view source) {
  auto e = expand_record(*find_record(source));
  return NGPair(BinarySeq(e.rows[0]), BinarySeq(e.rows[1]));
}

}  // namespace

TEST_CASE("paley conference matrices") {
  auto c3 = paley_conference(3);
  CHECK(c3.order() == 4);
  CHECK(gram_is(c3, 3));
  CHECK(c3.is_skew_symmetric());
  auto c5 = paley_conference(5);
  CHECK(gram_is(c5, 5));
  CHECK(c5.is_symmetric());
  auto c9 = paley_conference(9);
  CHECK(c9.order() == 10);
  CHECK(verify(c9, MatrixClass::conference()));
  CHECK_THROWS_AS(paley_conference(15), Error);
  CHECK_THROWS_AS(paley_conference(8), Error);
}

TEST_CASE("negacyclic conference rows") {
  CHECK(negacyclic_conference(13).row().str() == "0+++++--++-+-+");
  auto r3 = negacyclic_conference(3);
  CHECK(verify(r3.matrix(), MatrixClass::conference()));
  CHECK(ConferenceRow(TernarySeq::parse("0++-")).order() == 4);
  auto r53 = negacyclic_conference(53);
  CHECK(r53.order() == 54);
  CHECK(verify(r53.matrix(), MatrixClass::conference()));
  auto rs = negacyclic_conference(17, std::nullopt, ConferenceSource::Search);
  CHECK(verify(rs.matrix(), MatrixClass::conference()));
  try {
    negacyclic_conference(89);
    FAIL("expected an unsupported-order error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedOrder);
  }
  CHECK_THROWS_AS(ConferenceRow(TernarySeq::parse("0+++")), Error);
}

TEST_CASE("paley NG pairs") {
  auto p13 = paley_ng(13);
  auto c = negacyclic_conference(13).row();
  CHECK(p13.length() == 14);
  CHECK(p13.a()[0] == 1);
  CHECK(p13.b()[0] == -1);
  for (std::size_t i = 1; i < 14; ++i) {
    CHECK(p13.a()[i] == c[i]);
    CHECK(p13.b()[i] == c[i]);
  }
  auto p3 = paley_ng(3);
  CHECK(p3.length() == 2);
  CHECK(equivalent(p3, corpus_pair("C:2")));
  CHECK(equivalent(NGPair(BinarySeq::parse("++"), BinarySeq::parse("+-")), p3));
  CHECK(equivalent(paley_ng(7), corpus_pair("C:4")));
}

TEST_CASE("ito NG pairs") {
  auto r3 = ito_ng(3, Polynomial::parse("x^2-x-1", 3));
  CHECK(r3.raw_a.str() == "-+");
  CHECK(r3.raw_b[0] == 1);
  CHECK(is_skew_hadamard(r3.pair.hadamard()));
  auto r7 = ito_ng(7, Polynomial::parse("x^2-x+3", 7));
  CHECK(equivalent(r7.pair, corpus_pair("D:4")));
  auto r11 = ito_ng(11, Polynomial::parse("x^2+x+7", 11));
  CHECK(r11.pair.length() == 6);
  CHECK(equivalent(r11.pair, corpus_pair("D:6")));
  CHECK_THROWS_AS(ito_ng(13), Error);
  CHECK_THROWS_AS(ito_ng(7, Polynomial::parse("x^2+1", 7)), Error);
}

TEST_CASE("property: ito and second-paley symmetries for every q = 3 mod 4 up to 83") {
  for (std::uint64_t q = 3; q <= 83; q += 4) {
    if (!odd_prime_power(q)) continue;
    CAPTURE(q);
    auto r = ito_ng(q);
    std::size_t v = r.raw_a.size();
    CHECK(r.raw_a[0] == -1);
    for (std::size_t i = 1; i < v; ++i) CHECK(r.raw_a[v - i] == r.raw_a[i]);
    for (std::size_t i = 0; i < v; ++i) CHECK(r.raw_b[v - 1 - i] == -r.raw_b[i]);
    CHECK(is_skew_hadamard(r.pair.hadamard()));
    auto row = ConferenceRow(ito_interleave(r.raw_a, r.raw_b));
    CHECK(satisfies_belevitch(row.row()));
    auto p = paley_ng(q);
    CHECK(symmetry_kind(p.a()).quasi_symmetric);
  }
}

TEST_CASE("symmetric 2C blocks") {
  auto b13 = symmetric_2c_blocks(negacyclic_conference(13));
  CHECK(b13.a.str() == "0-++++-");
  CHECK(b13.b.str() == "++-++-+");
  auto b5 = symmetric_2c_blocks(negacyclic_conference(5));
  CHECK(b5.a.str() == "0--");
  CHECK(b5.b.str() == "-++");
  CHECK_THROWS_AS(symmetric_2c_blocks(negacyclic_conference(3)), Error);
  for (std::uint64_t q : {5ULL, 9ULL, 13ULL, 17ULL, 25ULL, 29ULL}) {
    auto row = negacyclic_conference(q);
    auto blk = symmetric_2c_blocks(row);
    CHECK(is_circulant_symmetric(blk.a));
    CHECK(is_circulant_symmetric(blk.b));
    CHECK(verify(two_circulant_conference(blk), MatrixClass::conference()));
    // Even-lag NAF of the row splits over its even and odd parts; after the
    // sign and shift changes the blocks are periodic complementary.
    std::size_t t = blk.b.size();
    std::vector<Entry> ev(t), od(t);
    for (std::size_t j = 0; j < t; ++j) {
      ev[j] = row.row()[2 * j];
      od[j] = row.row()[2 * j + 1];
    }
    for (std::size_t k = 1; k < t; ++k) {
      CHECK(autocorrelation(row.row(), 2 * k, CorrelationKind::Negaperiodic) ==
            autocorrelation(TernarySeq(ev), k, CorrelationKind::Negaperiodic) +
                autocorrelation(TernarySeq(od), k, CorrelationKind::Negaperiodic));
      CHECK(autocorrelation(blk.a, k, CorrelationKind::Periodic) + autocorrelation(blk.b, k, CorrelationKind::Periodic) ==
            0);
    }
  }
}

TEST_CASE("turyn williamson quadruples") {
  auto q13 = turyn_williamson(symmetric_2c_blocks(negacyclic_conference(13)));
  CHECK(q13.order() == 7);
  CHECK(gram_is(q13.williamson_matrix(), 28));
  auto from_b = [](std::string_view source) {
    auto e = expand_record(*find_record(source));
    return turyn_williamson(SymmetricBlocks{e.rows[0], BinarySeq(e.rows[1])});
  };
  CHECK(from_b("B:6").order() == 3);
  auto q5 = from_b("B:10");
  CHECK(q5.order() == 5);
  CHECK(verify(q5.williamson_matrix(), MatrixClass::hadamard()));
  for (const auto& r : q5.rows()) CHECK(is_circulant_symmetric(r));
}

TEST_CASE("turyn multiplication") {
  auto two = multiply_by_two(NGPair(BinarySeq::parse("++"), BinarySeq::parse("+-")));
  CHECK(two.length() == 4);
  auto twelve = multiply_by_two(NGPair(BinarySeq::parse("+--+--"), BinarySeq::parse("+----+")));
  CHECK(twelve.length() == 12);
  CHECK(verify(twelve.hadamard(), MatrixClass::hadamard()));
  TernaryPair w{TernarySeq::parse("0+"), TernarySeq::parse("+0")};
  REQUIRE(is_complementary(w.a, w.b, CorrelationKind::Negaperiodic));
  auto d = multiply_by_two(w);
  CHECK(d.length() == 4);
  CHECK(d.weight() == 2 * w.weight());
  CHECK(is_complementary(d.a, d.b, CorrelationKind::Negaperiodic));
  CHECK_THROWS_AS(turyn_multiply(BinarySeq::parse("++"), BinarySeq::parse("++"), w, CorrelationKind::Negaperiodic),
                  Error);
  CHECK_THROWS_AS(multiply_by_two(TernaryPair{TernarySeq::parse("++++"), TernarySeq::parse("++++")}), Error);
}

TEST_CASE("property: turyn multiplication by random golay pairs keeps the length and weight law") {
  std::vector<std::pair<std::string, std::string>> golay{{"+", "+"}, {"+-", "++"}, {"++", "+-"}, {"+++-", "++-+"}};
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-1, 1);
  int tested = 0;
  for (int trial = 0; trial < 4000 && tested < 200; ++trial) {
    std::size_t v = 2 + 2 * (rng() % 3);
    std::vector<Entry> ea(v), eb(v);
    for (auto& x : ea) x = static_cast<Entry>(d(rng));
    for (auto& x : eb) x = static_cast<Entry>(d(rng));
    TernaryPair p{TernarySeq(ea), TernarySeq(eb)};
    for (auto kind : {CorrelationKind::Periodic, CorrelationKind::Negaperiodic}) {
      if (!is_complementary(p.a, p.b, kind)) continue;
      ++tested;
      for (auto& [ga, gb] : golay) {
        auto out = turyn_multiply(BinarySeq::parse(ga), BinarySeq::parse(gb), p, kind);
        CHECK(out.length() == ga.size() * v);
        CHECK(out.weight() == static_cast<int>(ga.size()) * p.weight());
        CHECK(is_complementary(out.a, out.b, kind));
      }
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("quasi-williamson conversions") {
  QuasiWilliamsonQuad ones(BinarySeq::parse("+"), BinarySeq::parse("+"), BinarySeq::parse("+"),
                           BinarySeq::parse("+"));
  CHECK(qw_to_ng(ones).length() == 2);
  auto q1 = ng_to_qw(NGPair(BinarySeq::parse("++"), BinarySeq::parse("+-")));
  CHECK(q1.order() == 1);
  auto q13 = turyn_williamson(symmetric_2c_blocks(negacyclic_conference(13)));
  auto p14 = qw_to_ng(q13);
  CHECK(p14.length() == 14);
  CHECK(classify_pair(p14.a(), p14.b()).negaperiodic);
  CHECK_THROWS_AS(ng_to_qw(NGPair(BinarySeq::parse("+--+"), BinarySeq::parse("++-+"))), Error);
  CHECK_THROWS_AS(QuasiWilliamsonQuad(BinarySeq::parse("+++"), BinarySeq::parse("+++"), BinarySeq::parse("+++"),
                                      BinarySeq::parse("+++")),
                  Error);
}

TEST_CASE("exhaustive: quasi-williamson round trips at t = 1 and t = 3") {
  SearchOptions all;
  all.mode = SearchMode::All;
  for (std::size_t v : {2U, 6U}) {
    auto rep = search_ng(v, all);
    REQUIRE(!rep.witnesses.empty());
    for (const auto& w : rep.witnesses) {
      NGPair p{BinarySeq(w[0]), BinarySeq(w[1])};
      auto quad = ng_to_qw(p);
      auto back = qw_to_ng(quad);
      CHECK(equivalent(p, back));
      CHECK(ng_to_qw(back) == quad);
      CHECK(verify(quad.williamson_matrix(), MatrixClass::hadamard()));
    }
  }
}

TEST_CASE("weighing matrices from NG pairs") {
  auto expect = [](std::uint64_t q, std::vector<std::pair<std::size_t, int>> shapes) {
    auto out = weighing_from_ng(q);
    REQUIRE(out.size() == shapes.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i].order == shapes[i].first);
      CHECK(out[i].weight == shapes[i].second);
      CHECK(gram_is(out[i].matrix, shapes[i].second));
      CHECK(verify(out[i].matrix, MatrixClass::weighing(shapes[i].second)));
    }
  };
  expect(3, {{4, 3}, {8, 6}, {8, 7}, {16, 14}});
  expect(5, {{6, 5}, {12, 10}});
  expect(7, {{8, 7}, {16, 14}, {16, 15}, {32, 30}});
}
