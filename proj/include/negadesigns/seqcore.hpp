#pragma once

// Sequences over {-1,0,+1}, their three autocorrelation functions and the
// elementary sequence motions.
//
// Text form: one character per entry, '+' for 1, '-' for -1, '0' for 0,
// index 0 leftmost.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negadesigns {

using Entry = std::int8_t;

class TernarySeq {
 public:
  TernarySeq() = default;
  explicit TernarySeq(std::vector<Entry> entries);

  static TernarySeq parse(std::string_view text);
  static TernarySeq zeros(std::size_t length) { return TernarySeq(std::vector<Entry>(length, 0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Entry> values() const noexcept { return entries_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Number of nonzero entries.
  int weight() const noexcept;
  bool is_binary() const noexcept;
  std::string str() const;

  friend bool operator==(const TernarySeq&, const TernarySeq&) = default;
  friend auto operator<=>(const TernarySeq&, const TernarySeq&) = default;

 private:
  std::vector<Entry> entries_;
};

/// A nonempty sequence of signs.
class BinarySeq {
 public:
  explicit BinarySeq(std::vector<Entry> entries);
  explicit BinarySeq(const TernarySeq& seq);

  static BinarySeq parse(std::string_view text);
  static BinarySeq ones(std::size_t length) { return BinarySeq(std::vector<Entry>(length, 1)); }

  std::size_t size() const noexcept { return seq_.size(); }
  Entry operator[](std::size_t i) const { return seq_[i]; }
  std::span<const Entry> values() const noexcept { return seq_.values(); }
  const std::vector<Entry>& entries() const noexcept { return seq_.entries(); }
  const TernarySeq& ternary() const noexcept { return seq_; }
  operator const TernarySeq&() const noexcept { return seq_; }  // NOLINT(google-explicit-constructor)
  std::string str() const { return seq_.str(); }

  BinarySeq negated() const;

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;
  friend auto operator<=>(const BinarySeq&, const BinarySeq&) = default;

 private:
  TernarySeq seq_;
};

enum class CorrelationKind { Aperiodic, Periodic, Negaperiodic };

std::string_view to_string(CorrelationKind kind);

/// AF, PAF or NAF at lag k. Any integer k is accepted: AF is zero for |k| >= v,
/// PAF is reduced mod v and NAF mod 2v with NAF(k + v) = -NAF(k).
long autocorrelation(const TernarySeq& a, long k, CorrelationKind kind);

/// Values at lags 0..v-1.
std::vector<long> autocorrelation_vector(const TernarySeq& a, CorrelationKind kind);

/// Componentwise sum of the chosen autocorrelation over lags 1..v-1.
/// With no sequences the result is the zero vector of length `length - 1`
/// (or empty when `length` is not given).
std::vector<long> complementarity_sum(std::span<const TernarySeq> seqs, CorrelationKind kind,
                                      std::optional<std::size_t> length = std::nullopt);

bool is_complementary(std::span<const TernarySeq> seqs, CorrelationKind kind);
bool is_complementary(const TernarySeq& a, const TernarySeq& b, CorrelationKind kind);

struct PairClasses {
  bool golay = false;
  bool periodic = false;
  bool negaperiodic = false;

  friend bool operator==(const PairClasses&, const PairClasses&) = default;
};

/// G, PG and NG membership, each decided by evaluation.
PairClasses classify_pair(const BinarySeq& a, const BinarySeq& b);

enum class Motion { Reverse, CyclicShift, NegacyclicShift, AlternatingNegate, Multiplier };

struct SeqMotion {
  Motion kind;
  long k = 1;  // multiplier only

  static SeqMotion reverse() { return {Motion::Reverse}; }
  static SeqMotion cyclic_shift() { return {Motion::CyclicShift}; }
  static SeqMotion negacyclic_shift() { return {Motion::NegacyclicShift}; }
  static SeqMotion alternating_negate() { return {Motion::AlternatingNegate}; }
  static SeqMotion multiplier(long k) { return {Motion::Multiplier, k}; }
};

/// Multiplier k sends index i to z_i * a_{ki mod v}, z_i = -1 iff ki mod 2v >= v.
/// Throws InvalidMultiplier when gcd(k, v) != 1.
TernarySeq transform(const TernarySeq& a, SeqMotion motion);
BinarySeq transform(const BinarySeq& a, SeqMotion motion);

struct SymmetryFlags {
  bool quasi_symmetric = false;  // a_i = a_{v-i}, 0 < i < v
  bool reversal_negates = false;  // a_{v-1-i} = -a_i
};

SymmetryFlags symmetry_kind(const TernarySeq& a);

/// Palindromic: a_i = a_{v-1-i}.
bool is_palindrome(const TernarySeq& a);

/// Symmetric as a circulant first row: a_i = a_{v-i mod v}.
bool is_circulant_symmetric(const TernarySeq& a);

}  // namespace negadesigns
