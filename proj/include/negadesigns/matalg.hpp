#pragma once

// Square {-1,0,+1} matrices with structure claims, exact Gram verification
// and the block arrays used to assemble 2N/2C and Williamson-type matrices.
//
// Text form: one row per line in the sequence alphabet, or the shorthand
// `cyclic:<first row>` / `negacyclic:<first row>`.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "negadesigns/seqcore.hpp"

namespace negadesigns {

enum class Structure { Dense, Toeplitz, Cyclic, Negacyclic };

std::string_view to_string(Structure s);

class StructuredMatrix {
 public:
  /// Row-major entries. A non-Dense tag is checked against the entries.
  StructuredMatrix(std::size_t order, std::vector<Entry> entries, Structure tag = Structure::Dense);

  /// Row i is the i-th cyclic or negacyclic shift of `row`.
  static StructuredMatrix from_first_row(const TernarySeq& row, Structure tag);
  static StructuredMatrix identity(std::size_t order);

  /// Reads either the shorthand `tag:row` or one row per line.
  static StructuredMatrix parse(std::string_view text);

  std::size_t order() const noexcept { return order_; }
  Structure structure() const noexcept { return tag_; }
  Entry operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  TernarySeq row(std::size_t i) const;
  StructuredMatrix transpose() const;
  StructuredMatrix negated() const;
  /// Entrywise sum; throws if an entry leaves {-1,0,1}.
  StructuredMatrix plus(const StructuredMatrix& other) const;
  StructuredMatrix with_zero_diagonal() const;

  /// Row-major M M^T.
  std::vector<long> gram() const;

  bool is_toeplitz() const;
  bool matches_shift_structure(Structure tag) const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  /// Free-form provenance note, e.g. "2N-type".
  const std::string& provenance() const noexcept { return provenance_; }
  StructuredMatrix& set_provenance(std::string note) {
    provenance_ = std::move(note);
    return *this;
  }

  /// `tag:row` for cyclic/negacyclic matrices, otherwise one row per line.
  std::string str() const;

  friend bool operator==(const StructuredMatrix& a, const StructuredMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  struct Trusted {};
  // Shift structure already holds by construction.
  StructuredMatrix(std::size_t order, std::vector<Entry> entries, Structure tag, Trusted)
      : order_(order), entries_(std::move(entries)), tag_(tag) {}

  std::size_t order_;
  std::vector<Entry> entries_;
  Structure tag_;
  std::string provenance_;
};

struct MatrixClass {
  enum class Kind { Hadamard, Conference, Weighing };
  Kind kind;
  int weight = 0;

  static MatrixClass hadamard() { return {Kind::Hadamard, 0}; }
  static MatrixClass conference() { return {Kind::Conference, 0}; }
  static MatrixClass weighing(int w) { return {Kind::Weighing, w}; }
};

std::string to_string(MatrixClass c);

/// Exact Gram identity plus the entry pattern of the class: Hadamard has no
/// zeros, Conference has zeros exactly on the diagonal, Weighing(w) has w
/// nonzero entries per row.
bool verify(const StructuredMatrix& m, MatrixClass c);

/// Hadamard with H + H^T = 2I.
bool is_skew_hadamard(const StructuredMatrix& h);

/// [A B; -B^T A^T].
StructuredMatrix two_block_array(const StructuredMatrix& a, const StructuredMatrix& b);

/// [ A    B    C    D  ]
/// [ -B   A   -D    C  ]
/// [ -C^T D^T  A^T -B^T]
/// [ -D^T -C^T B^T  A^T]
StructuredMatrix williamson_array(const StructuredMatrix& a, const StructuredMatrix& b, const StructuredMatrix& c,
                                  const StructuredMatrix& d);

/// A Toeplitz Hadamard matrix is cyclic or negacyclic; returns which, after
/// checking the matrix really has that shift structure.
Structure classify_toeplitz_hadamard(const StructuredMatrix& h);

/// First row of A A^T for negacyclic A, i.e. (NAF_a(0), ..., NAF_a(v-1)).
std::vector<long> gram_naf_decomposition(const StructuredMatrix& a);

}  // namespace negadesigns
