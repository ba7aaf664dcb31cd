#pragma once

// Conference matrices, NG-pair series, Turyn multiplication, quasi-Williamson
// conversion and the 2N-type weighing matrices built from them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negadesigns/gf.hpp"
#include "negadesigns/matalg.hpp"
#include "negadesigns/seqcore.hpp"

namespace negadesigns {

/// Binary pair of common length with vanishing NAF sum at every nonzero lag.
class NGPair {
 public:
  /// Throws LengthMismatch or ComplementarityViolation.
  NGPair(BinarySeq a, BinarySeq b);

  /// Two lines, one sequence each.
  static NGPair parse(std::string_view text);

  const BinarySeq& a() const noexcept { return a_; }
  const BinarySeq& b() const noexcept { return b_; }
  std::size_t length() const noexcept { return a_.size(); }
  std::string str() const { return a_.str() + "\n" + b_.str() + "\n"; }

  /// [A B; -B^T A^T] with negacyclic blocks.
  StructuredMatrix hadamard() const;

  friend bool operator==(const NGPair&, const NGPair&) = default;
  friend auto operator<=>(const NGPair&, const NGPair&) = default;

 private:
  BinarySeq a_;
  BinarySeq b_;
};

/// Two ternary sequences of common length; the complementarity class is a
/// property checked by callers.
struct TernaryPair {
  TernarySeq a;
  TernarySeq b;

  std::size_t length() const noexcept { return a.size(); }
  int weight() const noexcept { return a.weight() + b.weight(); }
  std::string str() const { return a.str() + "\n" + b.str() + "\n"; }

  static TernaryPair parse(std::string_view text);
  friend bool operator==(const TernaryPair&, const TernaryPair&) = default;
};

/// Four binary circulant first rows of common order t with
/// AA^T + BB^T + CC^T + DD^T = 4tI and AB^T + CD^T = BA^T + DC^T.
class QuasiWilliamsonQuad {
 public:
  /// Throws LengthMismatch or InvalidQuad.
  QuasiWilliamsonQuad(BinarySeq a, BinarySeq b, BinarySeq c, BinarySeq d);

  /// Four lines.
  static QuasiWilliamsonQuad parse(std::string_view text);

  std::size_t order() const noexcept { return rows_[0].size(); }
  const BinarySeq& row(std::size_t i) const { return rows_.at(i); }
  const std::array<BinarySeq, 4>& rows() const noexcept { return rows_; }
  std::string str() const;

  /// The 4t x 4t block array with circulant blocks.
  StructuredMatrix williamson_matrix() const;

  friend bool operator==(const QuasiWilliamsonQuad&, const QuasiWilliamsonQuad&) = default;

 private:
  std::array<BinarySeq, 4> rows_;
};

/// Sum of periodic autocorrelations of four rows, lags 1..t-1.
std::vector<long> quad_paf_sum(const std::array<TernarySeq, 4>& rows);
/// First row of AB^T + CD^T - BA^T - DC^T for circulants.
std::vector<long> quad_cross_residual(const std::array<TernarySeq, 4>& rows);

/// First row of a negacyclic conference matrix.
class ConferenceRow {
 public:
  /// Throws InvalidInput when c_0 != 0, an entry off c_0 is zero, the
  /// Belevitch symmetry fails, or the negacyclic matrix is not a conference matrix.
  explicit ConferenceRow(TernarySeq row, std::string provenance = {});

  const TernarySeq& row() const noexcept { return row_; }
  std::size_t order() const noexcept { return row_.size(); }
  const std::string& provenance() const noexcept { return provenance_; }
  StructuredMatrix matrix() const { return StructuredMatrix::from_first_row(row_, Structure::Negacyclic); }

 private:
  TernarySeq row_;
  std::string provenance_;
};

/// c_{v/2+j} = (-1)^j c_{v/2-j}, j = 1..v/2-1.
bool satisfies_belevitch(const TernarySeq& row);

/// q must be an odd prime power. Uses X = {(0,1)} then (1,beta) for beta in
/// element-code order.
StructuredMatrix paley_conference(std::uint64_t q);

enum class ConferenceSource {
  Auto,    // q = 3 mod 4: Ito interleave; q = 1 mod 4: corpus, then search
  Search,  // q = 1 mod 4: Belevitch-constrained search only
};

/// Throws NotPrimePower, or UnsupportedOrder when q = 1 mod 4 has no corpus
/// row and 1 + q > kConferenceSearchLimit.
ConferenceRow negacyclic_conference(std::uint64_t q, const std::optional<Polynomial>& poly = std::nullopt,
                                    ConferenceSource source = ConferenceSource::Auto);

inline constexpr std::size_t kConferenceSearchLimit = 50;

/// q = 1 mod 4: ((+, c_1..c_q), (-, c_1..c_q)) of length 1 + q.
/// q = 3 mod 4: ((+, c_2, c_4, ..), (c_1, c_3, ..)) of length (1 + q) / 2.
NGPair paley_ng(std::uint64_t q, const std::optional<Polynomial>& poly = std::nullopt);

struct ItoResult {
  BinarySeq raw_a;  // a_0 = -1
  BinarySeq raw_b;
  NGPair pair;      // (-a, b)
  Polynomial poly;
};

/// q = 3 mod 4. The default polynomial is the corpus one for this q when
/// present, else find_primitive_poly. Throws WrongOrderClass, NotPrimitive,
/// or ImplementationFault when a postcondition fails.
ItoResult ito_ng(std::uint64_t q, const std::optional<Polynomial>& poly = std::nullopt);

/// (0, b_0, a_1, b_1, ..., a_{v-1}, b_{v-1}).
TernarySeq ito_interleave(const BinarySeq& a, const BinarySeq& b);

struct SymmetricBlocks {
  TernarySeq a;  // a', leading 0
  BinarySeq b;   // b''
};

/// Order v = 2 mod 4. a' = Z a Z and b'' = Z b Z P^m with m = (v - 2) / 4,
/// where a, b are the even and odd parts of the row.
SymmetricBlocks symmetric_2c_blocks(const ConferenceRow& row);

/// Circulant 2C array of the blocks.
StructuredMatrix two_circulant_conference(const SymmetricBlocks& blocks);

/// (A + I, A - I, B, B).
QuasiWilliamsonQuad turyn_williamson(const SymmetricBlocks& blocks);

/// (a, b) in GP_g times (c, d) complementary of the given kind:
///   e(z) = (a+b)/2 (z) c(z^g) + (a-b)/2 (z) d(z^-g) z^(gv-g)
///   f(z) = (b-a)/2 (z) c(z^-g) z^(gv-g) + (a+b)/2 (z) d(z^g)
/// Throws ComplementarityViolation on inputs outside their class.
TernaryPair turyn_multiply(const BinarySeq& ga, const BinarySeq& gb, const TernaryPair& p, CorrelationKind kind);

/// Turyn multiplication by ((+,-),(+,+)).
TernaryPair multiply_by_two(const TernaryPair& p, CorrelationKind kind = CorrelationKind::Negaperiodic);
NGPair multiply_by_two(const NGPair& p);

/// t odd. Throws InvalidQuad when X or Y leaves the image of Phi.
NGPair qw_to_ng(const QuasiWilliamsonQuad& quad);

/// Length 2t with t odd. Throws InconsistentPair when a lift pair does not
/// split into one A/C index and one B/D index.
QuasiWilliamsonQuad ng_to_qw(const NGPair& pair);

struct WeighingOutput {
  std::string label;  // e.g. "W(16,14) doubled conference"
  std::size_t order;
  int weight;
  TernaryPair pair;   // negacyclic first rows of the blocks
  StructuredMatrix matrix;
};

/// W(1+q, q), W(2+2q, 2q) and, for q = 3 mod 4, W(2+2q, 1+2q) and
/// W(4+4q, 2+4q), all 2N-type and each verified exactly.
std::vector<WeighingOutput> weighing_from_ng(std::uint64_t q);

/// [A B; -B^T A^T] with negacyclic blocks built from the two rows.
StructuredMatrix two_negacyclic_array(const TernarySeq& a, const TernarySeq& b);

}  // namespace negadesigns
