#pragma once

// The map Phi from sign sequences of length v to v-subsets of Z_2v, relative
// difference families, the two families of elementary transformations and
// orbit-based equivalence of NG-pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negadesigns/constructions.hpp"
#include "negadesigns/seqcore.hpp"

namespace negadesigns {

/// Sorted elements of Z_m.
using Subset = std::vector<std::uint32_t>;

/// Phi(a) = {i : a_i = +1} U {v + i : a_i = -1}, as a subset of Z_2v.
Subset phi(const BinarySeq& a);

/// Throws NotInImage unless |X| = v and no two elements differ by v.
BinarySeq phi_inverse(const Subset& x, std::size_t v);

struct RDFWitness {
  bool ok = false;
  long lambda = 0;
  std::vector<long> counts;  // counts[m], m in Z_modulus; counts[0] unused
  std::string reason;
};

/// Differences x - y within each set, over all sets. Ok iff the counts are
/// constant on Z_modulus \ {0, modulus/2}, zero at modulus/2, and the sizes
/// satisfy sum k_i (k_i - 1) = 2 lambda (modulus/2 - 1).
RDFWitness rdf_check(const std::vector<Subset>& sets, std::size_t modulus);

enum class PairOp {
  ReverseA,
  ReverseB,
  NegashiftA,
  NegashiftB,
  Switch,
  Multiplier,
  AlternatingNegate,
};

struct PairStep {
  PairOp op;
  long k = 1;  // multiplier only

  std::string str() const;
  friend bool operator==(const PairStep&, const PairStep&) = default;
};

using BinaryPair = std::pair<BinarySeq, BinarySeq>;

/// Sequence-side transformation. Multiplier needs gcd(k, v) = 1.
BinaryPair pair_transform(const BinaryPair& p, PairStep step);

struct SubsetPair {
  Subset x;
  Subset y;
  std::size_t modulus;

  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// Subset-side transformation: i -> v-1-i, i -> i+1, switch, i -> k i
/// (gcd(k, 2v) = 1), and odd i -> v+i.
SubsetPair family_transform(const SubsetPair& f, PairStep step);

/// The subset-side step with Phi(pair_transform(p, s)) =
/// family_transform(Phi(p), family_counterpart(s, v)). Multiplier k maps to
/// its inverse mod 2v.
PairStep family_counterpart(PairStep s, std::size_t v);

SubsetPair phi_pair(const BinaryPair& p);

enum class Verdict { Equivalent, Inequivalent, Undecided };

std::string_view to_string(Verdict v);

struct EquivOptions {
  std::size_t max_length = 32;
  std::size_t max_orbit = std::size_t{1} << 24;
};

struct EquivResult {
  Verdict verdict = Verdict::Undecided;
  std::vector<PairStep> script;  // applied in order to the first pair
  std::size_t explored = 0;
};

/// Generators: reverse a or b, negashift a or b, switch, alternating negate
/// and every multiplier 1 < k < 2v coprime to 2v.
std::vector<PairStep> generators(std::size_t v);

EquivResult are_equivalent(const BinaryPair& p1, const BinaryPair& p2, const EquivOptions& opt = {});
EquivResult are_equivalent(const NGPair& p1, const NGPair& p2, const EquivOptions& opt = {});

/// Every element of the orbit; nullopt when a cap is exceeded.
std::optional<std::vector<BinaryPair>> orbit(const BinaryPair& p, const EquivOptions& opt = {});

/// Least orbit element, comparing a then b entrywise with + before -.
/// Throws UnsupportedOrder when a cap is exceeded.
BinaryPair canonical_form(const BinaryPair& p, const EquivOptions& opt = {});
NGPair canonical_form(const NGPair& p, const EquivOptions& opt = {});

/// Applies a script in order.
BinaryPair apply_script(BinaryPair p, const std::vector<PairStep>& script);

}  // namespace negadesigns
