#include "negadesigns/seqcore.hpp"

#include <algorithm>
#include <numeric>

#include "negadesigns/error.hpp"

namespace negadesigns {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::InvalidMultiplier: return "invalid-multiplier";
    case ErrorCode::OrderMismatch: return "order-mismatch";
    case ErrorCode::NotToeplitz: return "not-toeplitz";
    case ErrorCode::NotHadamard: return "not-hadamard";
    case ErrorCode::NotNegacyclic: return "not-negacyclic";
    case ErrorCode::NotPrime: return "not-prime";
    case ErrorCode::NotPrimePower: return "not-odd-prime-power";
    case ErrorCode::ReducibleModulus: return "reducible-modulus";
    case ErrorCode::NotPrimitive: return "not-primitive";
    case ErrorCode::WrongOrderClass: return "wrong-order-class";
    case ErrorCode::UnsupportedOrder: return "unsupported-order";
    case ErrorCode::NotInImage: return "not-in-image";
    case ErrorCode::InvalidQuad: return "invalid-quad";
    case ErrorCode::InconsistentPair: return "inconsistent-pair";
    case ErrorCode::ComplementarityViolation: return "complementarity-violation";
    case ErrorCode::Corrupt: return "corrupt";
    case ErrorCode::ImplementationFault: return "implementation-fault";
  }
  return "unknown";
}

std::string_view to_string(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Aperiodic: return "aperiodic";
    case CorrelationKind::Periodic: return "periodic";
    case CorrelationKind::Negaperiodic: return "negaperiodic";
  }
  return "unknown";
}

TernarySeq::TernarySeq(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (Entry e : entries_) {
    if (e < -1 || e > 1) throw Error(ErrorCode::InvalidInput, "entry outside {-1,0,+1}");
  }
}

TernarySeq TernarySeq::parse(std::string_view text) {
  std::vector<Entry> out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '+': out.push_back(1); break;
      case '-': out.push_back(-1); break;
      case '0': out.push_back(0); break;
      case ' ': case '\t': case '\r': case '\n': break;
      default:
        throw Error(ErrorCode::Parse, std::string("unexpected character '") + ch + "' in sequence");
    }
  }
  return TernarySeq(std::move(out));
}

int TernarySeq::weight() const noexcept {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](Entry e) { return e != 0; }));
}

bool TernarySeq::is_binary() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e != 0; });
}

std::string TernarySeq::str() const {
  std::string s;
  s.reserve(entries_.size());
  for (Entry e : entries_) s.push_back(e > 0 ? '+' : (e < 0 ? '-' : '0'));
  return s;
}

BinarySeq::BinarySeq(std::vector<Entry> entries) : BinarySeq(TernarySeq(std::move(entries))) {}

BinarySeq::BinarySeq(const TernarySeq& seq) : seq_(seq) {
  if (seq_.empty()) throw Error(ErrorCode::InvalidInput, "binary sequence must have length >= 1");
  if (!seq_.is_binary()) throw Error(ErrorCode::InvalidInput, "binary sequence has a zero entry");
}

BinarySeq BinarySeq::parse(std::string_view text) { return BinarySeq(TernarySeq::parse(text)); }

BinarySeq BinarySeq::negated() const {
  std::vector<Entry> out(seq_.entries());
  for (auto& e : out) e = static_cast<Entry>(-e);
  return BinarySeq(std::move(out));
}

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long aperiodic(std::span<const Entry> a, long k) {
  const long v = static_cast<long>(a.size());
  if (k < 0) k = -k;
  if (k >= v) return 0;
  long s = 0;
  for (long i = 0; i + k < v; ++i) s += a[i] * a[i + k];
  return s;
}

}  // namespace

long autocorrelation(const TernarySeq& seq, long k, CorrelationKind kind) {
  auto a = seq.values();
  const long v = static_cast<long>(a.size());
  if (v == 0) return 0;
  switch (kind) {
    case CorrelationKind::Aperiodic:
      return aperiodic(a, k);
    case CorrelationKind::Periodic: {
      const long r = floor_mod(k, v);
      long s = 0;
      for (long i = 0; i < v; ++i) s += a[i] * a[(i + v - r) % v];
      return s;
    }
    case CorrelationKind::Negaperiodic: {
      long r = floor_mod(k, 2 * v);
      long sign = 1;
      if (r >= v) {
        r -= v;
        sign = -1;
      }
      // a . aN^r: (aN^r)_i = a_{i-r} for i >= r, -a_{i-r+v} otherwise.
      long s = 0;
      for (long i = 0; i < v; ++i) s += (i >= r) ? a[i] * a[i - r] : -a[i] * a[i - r + v];
      return sign * s;
    }
  }
  return 0;
}

std::vector<long> autocorrelation_vector(const TernarySeq& a, CorrelationKind kind) {
  std::vector<long> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = autocorrelation(a, static_cast<long>(k), kind);
  return out;
}

std::vector<long> complementarity_sum(std::span<const TernarySeq> seqs, CorrelationKind kind,
                                      std::optional<std::size_t> length) {
  std::size_t v = 0;
  if (!seqs.empty()) {
    v = seqs.front().size();
    for (const auto& s : seqs) {
      if (s.size() != v) throw Error(ErrorCode::LengthMismatch, "complementarity_sum: sequences differ in length");
    }
    if (length && *length != v) throw Error(ErrorCode::LengthMismatch, "complementarity_sum: declared length differs");
  } else if (length) {
    v = *length;
  }
  if (v <= 1) return {};
  std::vector<long> out(v - 1, 0);
  for (const auto& s : seqs) {
    for (std::size_t k = 1; k < v; ++k) out[k - 1] += autocorrelation(s, static_cast<long>(k), kind);
  }
  return out;
}

bool is_complementary(std::span<const TernarySeq> seqs, CorrelationKind kind) {
  auto sums = complementarity_sum(seqs, kind);
  return std::all_of(sums.begin(), sums.end(), [](long x) { return x == 0; });
}

bool is_complementary(const TernarySeq& a, const TernarySeq& b, CorrelationKind kind) {
  const TernarySeq both[] = {a, b};
  return is_complementary(both, kind);
}

PairClasses classify_pair(const BinarySeq& a, const BinarySeq& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "classify_pair: lengths differ");
  PairClasses c;
  c.golay = is_complementary(a, b, CorrelationKind::Aperiodic);
  c.periodic = is_complementary(a, b, CorrelationKind::Periodic);
  c.negaperiodic = is_complementary(a, b, CorrelationKind::Negaperiodic);
  return c;
}

TernarySeq transform(const TernarySeq& seq, SeqMotion motion) {
  const auto& a = seq.entries();
  const long v = static_cast<long>(a.size());
  std::vector<Entry> out(a.size());
  if (v == 0) return seq;
  switch (motion.kind) {
    case Motion::Reverse:
      std::reverse_copy(a.begin(), a.end(), out.begin());
      break;
    case Motion::CyclicShift:
      out[0] = a[v - 1];
      std::copy(a.begin(), a.end() - 1, out.begin() + 1);
      break;
    case Motion::NegacyclicShift:
      out[0] = static_cast<Entry>(-a[v - 1]);
      std::copy(a.begin(), a.end() - 1, out.begin() + 1);
      break;
    case Motion::AlternatingNegate:
      for (long i = 0; i < v; ++i) out[i] = (i % 2 == 1) ? static_cast<Entry>(-a[i]) : a[i];
      break;
    case Motion::Multiplier: {
      const long k = floor_mod(motion.k, 2 * v);
      if (std::gcd(k, v) != 1) {
        throw Error(ErrorCode::InvalidMultiplier,
                    "multiplier " + std::to_string(motion.k) + " is not coprime to length " + std::to_string(v));
      }
      for (long i = 0; i < v; ++i) {
        const long ki = (k * i) % (2 * v);
        const Entry z = ki < v ? 1 : -1;
        out[i] = static_cast<Entry>(z * a[ki % v]);
      }
      break;
    }
  }
  return TernarySeq(std::move(out));
}

BinarySeq transform(const BinarySeq& a, SeqMotion motion) { return BinarySeq(transform(a.ternary(), motion)); }

SymmetryFlags symmetry_kind(const TernarySeq& seq) {
  const auto& a = seq.entries();
  const std::size_t v = a.size();
  SymmetryFlags f;
  f.quasi_symmetric = true;
  for (std::size_t i = 1; i < v; ++i) {
    if (a[i] != a[v - i]) {
      f.quasi_symmetric = false;
      break;
    }
  }
  f.reversal_negates = true;
  for (std::size_t i = 0; i < v; ++i) {
    if (a[v - 1 - i] != -a[i]) {
      f.reversal_negates = false;
      break;
    }
  }
  return f;
}

bool is_palindrome(const TernarySeq& seq) {
  const auto& a = seq.entries();
  return std::equal(a.begin(), a.end(), a.rbegin());
}

bool is_circulant_symmetric(const TernarySeq& seq) {
  const auto& a = seq.entries();
  const std::size_t v = a.size();
  for (std::size_t i = 1; i < v; ++i) {
    if (a[i] != a[v - i]) return false;
  }
  return true;
}

}  // namespace negadesigns
