#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "negadesigns/error.hpp"
#include "negadesigns/matalg.hpp"

using namespace negadesigns;

namespace {

StructuredMatrix nega(std::string_view row) {
  return StructuredMatrix::from_first_row(TernarySeq::parse(row), Structure::Negacyclic);
}
StructuredMatrix cyc(std::string_view row) {
  return StructuredMatrix::from_first_row(TernarySeq::parse(row), Structure::Cyclic);
}

BinarySeq from_mask(std::uint32_t mask, std::size_t v) {
  std::vector<Entry> e(v);
  for (std::size_t i = 0; i < v; ++i) e[i] = (mask >> i) & 1U ? -1 : 1;
  return BinarySeq(e);
}

// Independent Gram oracle: plain triple loop.
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

}  // namespace

TEST_CASE("from_first_row") {
  auto m = nega("0++-");
  CHECK(m.row(1).str() == "+0++");
  CHECK(nega("+-").str() == "negacyclic:+-");
  CHECK(nega("+-").row(1).str() == "++");
  auto ones = cyc("++++");
  for (auto e : ones.entries()) CHECK(e == 1);
}

TEST_CASE("order-4 negacyclic conference oracle") {
  // All 8 sign patterns of (0,c1,c2,c3), judged by the triple-loop Gram.
  int found = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Entry> row{0, Entry(mask & 1 ? -1 : 1), Entry(mask & 2 ? -1 : 1), Entry(mask & 4 ? -1 : 1)};
    auto m = StructuredMatrix::from_first_row(TernarySeq(row), Structure::Negacyclic);
    bool oracle = gram_is(m, 3);
    CHECK(verify(m, MatrixClass::conference()) == oracle);
    found += oracle;
  }
  CHECK(found > 0);
  CHECK(verify(nega("0++-"), MatrixClass::conference()));
  CHECK_FALSE(verify(nega("0+++"), MatrixClass::conference()));
  CHECK(verify(nega("++"), MatrixClass::hadamard()));
}

TEST_CASE("two-block array examples") {
  auto h = two_block_array(nega("+--+--"), nega("+----+"));
  CHECK(h.order() == 12);
  CHECK(verify(h, MatrixClass::hadamard()));
  auto one = StructuredMatrix::parse("+");
  auto h2 = two_block_array(one, one);
  CHECK(h2.str() == "++\n-+");
  CHECK(verify(h2, MatrixClass::hadamard()));
  CHECK(verify(two_block_array(cyc("++"), cyc("+-")), MatrixClass::hadamard()));
  CHECK_THROWS_AS(two_block_array(one, nega("++")), Error);
}

TEST_CASE("williamson array examples") {
  auto one = StructuredMatrix::parse("+");
  // The all-plus quadruple does give an order-4 Hadamard matrix.
  auto w = williamson_array(one, one, one, one);
  CHECK(gram_is(w, 4));
  CHECK(verify(w, MatrixClass::hadamard()));
  auto zero = StructuredMatrix::parse("0");
  auto w42 = williamson_array(zero, one, zero, one);
  CHECK(verify(w42, MatrixClass::weighing(2)));
}

TEST_CASE("toeplitz hadamard classification") {
  CHECK(classify_toeplitz_hadamard(StructuredMatrix::parse("++\n-+")) == Structure::Negacyclic);
  // Not Toeplitz: h00 = + but h11 = -.
  CHECK_THROWS_AS(classify_toeplitz_hadamard(StructuredMatrix::parse("++\n+-")), Error);
  CHECK_THROWS_AS(classify_toeplitz_hadamard(StructuredMatrix::parse("++\n++")), Error);
  // All 2^7 order-4 Toeplitz sign matrices.
  int hadamards = 0;
  for (int mask = 0; mask < 128; ++mask) {
    auto diag = [&](int d) -> Entry { return (mask >> (d + 3)) & 1 ? -1 : 1; };  // d = j - i in -3..3
    std::vector<Entry> e(16);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) e[i * 4 + j] = diag(j - i);
    StructuredMatrix m(4, e);
    CHECK(m.is_toeplitz());
    if (!gram_is(m, 4)) {
      CHECK_THROWS_AS(classify_toeplitz_hadamard(m), Error);
      continue;
    }
    ++hadamards;
    auto s = classify_toeplitz_hadamard(m);
    CHECK((s == Structure::Cyclic || s == Structure::Negacyclic));
    CHECK(m.matches_shift_structure(s));
  }
  CHECK(hadamards > 0);
}

TEST_CASE("gram naf decomposition") {
  CHECK(gram_naf_decomposition(nega("0++-")) == std::vector<long>{3, 0, 0, 0});
  CHECK(gram_naf_decomposition(nega("++")) == std::vector<long>{2, 0});
  CHECK(gram_naf_decomposition(nega("+--+--")) == std::vector<long>{6, 0, -2, 0, 2, 0});
  CHECK_THROWS_AS(gram_naf_decomposition(cyc("+-+")), Error);
}

TEST_CASE("parse and tags") {
  CHECK_THROWS_AS(StructuredMatrix(2, {1, 1, -1, 1}, Structure::Cyclic), Error);
  CHECK(StructuredMatrix(2, {1, 1, -1, 1}, Structure::Negacyclic).structure() == Structure::Negacyclic);
  CHECK_THROWS_AS(StructuredMatrix::parse("++\n+"), Error);
  auto m = StructuredMatrix::parse("cyclic:+-0");
  CHECK(m.row(2).str() == "-0+");
}

TEST_CASE("property: gram of negacyclic equals naf, transpose is negacyclic") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-1, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t v = 1 + rng() % 16;
    std::vector<Entry> e(v);
    for (auto& x : e) x = static_cast<Entry>(d(rng));
    TernarySeq a(e);
    auto m = StructuredMatrix::from_first_row(a, Structure::Negacyclic);
    CHECK(gram_naf_decomposition(m) == autocorrelation_vector(a, CorrelationKind::Negaperiodic));
    std::vector<Entry> t(v);
    t[0] = e[0];
    for (std::size_t i = 1; i < v; ++i) t[i] = static_cast<Entry>(-e[v - i]);
    CHECK(m.transpose() == StructuredMatrix::from_first_row(TernarySeq(t), Structure::Negacyclic));
  }
}

TEST_CASE("exhaustive: NG pairs and 2N Hadamard matrices correspond") {
  for (std::size_t v : {1U, 2U, 4U, 6U}) {
    for (std::uint32_t ma = 0; ma < (1U << v); ++ma)
      for (std::uint32_t mb = 0; mb < (1U << v); ++mb) {
        auto a = from_mask(ma, v), b = from_mask(mb, v);
        auto h = two_block_array(StructuredMatrix::from_first_row(a, Structure::Negacyclic),
                                 StructuredMatrix::from_first_row(b, Structure::Negacyclic));
        CHECK(verify(h, MatrixClass::hadamard()) == classify_pair(a, b).negaperiodic);
      }
  }
}

TEST_CASE("property: negacyclic conference rows obey Belevitch symmetry") {
  for (std::size_t n : {2U, 4U, 6U, 8U}) {
    std::size_t h = n / 2;
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::vector<Entry> row(n, 0);
      for (std::size_t i = 1; i < n; ++i) row[i] = (mask >> (i - 1)) & 1U ? -1 : 1;
      auto m = StructuredMatrix::from_first_row(TernarySeq(row), Structure::Negacyclic);
      if (!verify(m, MatrixClass::conference())) continue;
      for (std::size_t j = 1; j < h; ++j) CHECK(row[h + j] == (j % 2 ? -1 : 1) * row[h - j]);
    }
  }
}
