#include "negadesigns/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "negadesigns/corpus.hpp"
#include "negadesigns/equiv.hpp"
#include "negadesigns/error.hpp"
#include "negadesigns/search.hpp"

namespace negadesigns {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

PrimePower require_prime_power(std::uint64_t q) {
  auto pp = odd_prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not an odd prime power");
  return *pp;
}

}  // namespace

// ---------------------------------------------------------------------------

NGPair::NGPair(BinarySeq a, BinarySeq b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw Error(ErrorCode::LengthMismatch, "NG-pair members differ in length");
  const auto sums = complementarity_sum(std::vector<TernarySeq>{a_, b_}, CorrelationKind::Negaperiodic);
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (sums[k] != 0) {
      throw Error(ErrorCode::ComplementarityViolation,
                  "NAF sum is " + std::to_string(sums[k]) + " at lag " + std::to_string(k + 1));
    }
  }
}

NGPair NGPair::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2) throw Error(ErrorCode::Parse, "a pair needs exactly two sequence lines");
  return NGPair(BinarySeq::parse(lines[0]), BinarySeq::parse(lines[1]));
}

StructuredMatrix NGPair::hadamard() const { return two_negacyclic_array(a_, b_); }

TernaryPair TernaryPair::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2) throw Error(ErrorCode::Parse, "a pair needs exactly two sequence lines");
  TernaryPair p{TernarySeq::parse(lines[0]), TernarySeq::parse(lines[1])};
  if (p.a.size() != p.b.size()) throw Error(ErrorCode::LengthMismatch, "pair members differ in length");
  return p;
}

StructuredMatrix two_negacyclic_array(const TernarySeq& a, const TernarySeq& b) {
  return two_block_array(StructuredMatrix::from_first_row(a, Structure::Negacyclic),
                         StructuredMatrix::from_first_row(b, Structure::Negacyclic));
}

// ---------------------------------------------------------------------------

std::vector<long> quad_paf_sum(const std::array<TernarySeq, 4>& rows) {
  return complementarity_sum(std::vector<TernarySeq>(rows.begin(), rows.end()), CorrelationKind::Periodic);
}

std::vector<long> quad_cross_residual(const std::array<TernarySeq, 4>& rows) {
  const long t = static_cast<long>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<long>(r.size()) != t) throw Error(ErrorCode::LengthMismatch, "quadruple rows differ in length");
  }
  auto cross = [t](const TernarySeq& x, const TernarySeq& y, long j) {
    long s = 0;
    for (long l = 0; l < t; ++l) s += x[l] * y[floor_mod(l - j, t)];
    return s;
  };
  std::vector<long> out(t);
  for (long j = 0; j < t; ++j) {
    out[j] = cross(rows[0], rows[1], j) + cross(rows[2], rows[3], j) - cross(rows[1], rows[0], j) -
             cross(rows[3], rows[2], j);
  }
  return out;
}

QuasiWilliamsonQuad::QuasiWilliamsonQuad(BinarySeq a, BinarySeq b, BinarySeq c, BinarySeq d)
    : rows_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const std::array<TernarySeq, 4> r{rows_[0], rows_[1], rows_[2], rows_[3]};
  const auto residual = quad_cross_residual(r);
  for (long x : quad_paf_sum(r)) {
    if (x != 0) throw Error(ErrorCode::InvalidQuad, "sum of AA^T over the four blocks is not 4tI");
  }
  for (long x : residual) {
    if (x != 0) throw Error(ErrorCode::InvalidQuad, "AB^T + CD^T differs from BA^T + DC^T");
  }
}

QuasiWilliamsonQuad QuasiWilliamsonQuad::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 4) throw Error(ErrorCode::Parse, "a quadruple needs exactly four sequence lines");
  return QuasiWilliamsonQuad(BinarySeq::parse(lines[0]), BinarySeq::parse(lines[1]), BinarySeq::parse(lines[2]),
                             BinarySeq::parse(lines[3]));
}

std::string QuasiWilliamsonQuad::str() const {
  std::string s;
  for (const auto& r : rows_) s += r.str() + "\n";
  return s;
}

StructuredMatrix QuasiWilliamsonQuad::williamson_matrix() const {
  auto c = [this](int i) { return StructuredMatrix::from_first_row(rows_[i], Structure::Cyclic); };
  return williamson_array(c(0), c(1), c(2), c(3));
}

// ---------------------------------------------------------------------------

bool satisfies_belevitch(const TernarySeq& row) {
  const std::size_t v = row.size();
  if (v % 2 != 0) return false;
  const std::size_t h = v / 2;
  for (std::size_t j = 1; j < h; ++j) {
    const int sign = j % 2 == 0 ? 1 : -1;
    if (row[h + j] != sign * row[h - j]) return false;
  }
  return true;
}

ConferenceRow::ConferenceRow(TernarySeq row, std::string provenance)
    : row_(std::move(row)), provenance_(std::move(provenance)) {
  if (row_.empty() || row_[0] != 0) throw Error(ErrorCode::InvalidInput, "conference row must start with 0");
  if (row_.weight() != static_cast<int>(row_.size()) - 1) {
    throw Error(ErrorCode::InvalidInput, "conference row has a zero off position 0");
  }
  if (!satisfies_belevitch(row_)) throw Error(ErrorCode::InvalidInput, "conference row breaks the Belevitch symmetry");
  if (!verify(matrix(), MatrixClass::conference())) {
    throw Error(ErrorCode::InvalidInput, "negacyclic matrix of the row is not a conference matrix");
  }
}

StructuredMatrix paley_conference(std::uint64_t q) {
  const auto pp = require_prime_power(q);
  const FieldCtx ctx(pp.p, find_primitive_poly(pp.p, pp.n));
  std::vector<Vec2> x;
  x.reserve(q + 1);
  x.push_back({ctx.zero(), ctx.one()});
  for (std::uint64_t i = 0; i < q; ++i) x.push_back({ctx.one(), ctx.element(i)});
  const std::size_t n = x.size();
  std::vector<Entry> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = static_cast<Entry>(ctx.quadratic_character(det2(ctx, x[i], x[j])));
  StructuredMatrix c(n, std::move(e));
  c.set_provenance("paley q=" + std::to_string(q));
  return c;
}

ConferenceRow negacyclic_conference(std::uint64_t q, const std::optional<Polynomial>& poly, ConferenceSource source) {
  require_prime_power(q);
  if (q % 4 == 3) {
    const auto ito = ito_ng(q, poly);
    return ConferenceRow(ito_interleave(ito.raw_a, ito.raw_b), "ito q=" + std::to_string(q) + " " + ito.poly.str());
  }
  const std::size_t n = q + 1;
  if (source == ConferenceSource::Auto) {
    if (auto hit = corpus_conference_row(n)) return ConferenceRow(hit->row, hit->source);
  }
  if (n > kConferenceSearchLimit) {
    throw Error(ErrorCode::UnsupportedOrder, "no corpus row for order " + std::to_string(n) +
                                                 " and the search fallback stops at order " +
                                                 std::to_string(kConferenceSearchLimit));
  }
  SearchOptions opt;
  opt.mode = SearchMode::Exists;
  const auto report = search_negacyclic_conference(n, opt);
  if (report.witnesses.empty()) {
    throw Error(ErrorCode::ImplementationFault, "no negacyclic conference row found at order " + std::to_string(n));
  }
  return ConferenceRow(report.witnesses.front().front(), "search order=" + std::to_string(n));
}

NGPair paley_ng(std::uint64_t q, const std::optional<Polynomial>& poly) {
  const auto c = negacyclic_conference(q, poly).row();
  const std::size_t n = c.size();
  if (q % 4 == 1) {
    std::vector<Entry> a(c.entries()), b(c.entries());
    a[0] = 1;
    b[0] = -1;
    return NGPair(BinarySeq(std::move(a)), BinarySeq(std::move(b)));
  }
  std::vector<Entry> a, b;
  for (std::size_t i = 0; i < n; i += 2) a.push_back(i == 0 ? Entry{1} : c[i]);
  for (std::size_t i = 1; i < n; i += 2) b.push_back(c[i]);
  return NGPair(BinarySeq(std::move(a)), BinarySeq(std::move(b)));
}

ItoResult ito_ng(std::uint64_t q, const std::optional<Polynomial>& poly) {
  const auto pp = require_prime_power(q);
  if (q % 4 != 3) throw Error(ErrorCode::WrongOrderClass, "Ito series needs q = 3 mod 4, got " + std::to_string(q));
  Polynomial f = poly ? *poly : corpus_ito_polynomial(q).value_or(find_primitive_poly(pp.p, 2 * pp.n));
  if (f.prime() != pp.p || f.degree() != static_cast<int>(2 * pp.n)) {
    throw Error(ErrorCode::InvalidInput, "polynomial must have degree " + std::to_string(2 * pp.n) + " over Z_" +
                                             std::to_string(pp.p));
  }
  const FieldCtx ctx(pp.p, f);
  if (!ctx.is_primitive()) throw Error(ErrorCode::NotPrimitive, f.str() + " is not primitive");

  const std::uint64_t t = (1 + q) / 4;
  const std::size_t v = 2 * t;
  const FieldElem x = ctx.generator();
  const FieldElem alpha = ctx.pow(x, 2 * t);
  const FieldElem w = ctx.pow(x, 2 * t - 1);
  auto in_u = [&ctx](FieldElem z) { return z != ctx.zero() && ctx.subfield_character(z) == 1; };

  std::vector<Entry> a(v), b(v);
  FieldElem cur = alpha;  // alpha w^j
  for (std::size_t j = 0; j < 2 * v; ++j) {
    const Entry s = in_u(ctx.rel_trace(cur)) ? 1 : -1;
    (j % 2 == 0 ? a[j / 2] : b[j / 2]) = s;
    cur = ctx.mul(cur, w);
  }
  const std::string where = " (q=" + std::to_string(q) + ", " + f.str() + ")";
  if (a[0] != -1) throw Error(ErrorCode::ImplementationFault, "a_0 is not -1" + where);
  BinarySeq raw_a(a), raw_b(b);
  const auto sym_a = symmetry_kind(raw_a), sym_b = symmetry_kind(raw_b);
  if (!sym_a.quasi_symmetric) throw Error(ErrorCode::ImplementationFault, "a is not quasi-symmetric" + where);
  if (!sym_b.reversal_negates) throw Error(ErrorCode::ImplementationFault, "b is not reversal-negating" + where);
  NGPair pair(raw_a.negated(), raw_b);
  if (!is_skew_hadamard(pair.hadamard())) {
    throw Error(ErrorCode::ImplementationFault, "2N array of (-a, b) is not skew-Hadamard" + where);
  }
  return ItoResult{std::move(raw_a), std::move(raw_b), std::move(pair), std::move(f)};
}

TernarySeq ito_interleave(const BinarySeq& a, const BinarySeq& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "interleave needs equal lengths");
  std::vector<Entry> c(2 * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[2 * i] = i == 0 ? Entry{0} : a[i];
    c[2 * i + 1] = b[i];
  }
  return TernarySeq(std::move(c));
}

SymmetricBlocks symmetric_2c_blocks(const ConferenceRow& row) {
  const std::size_t v = row.order();
  if (v % 4 != 2) throw Error(ErrorCode::WrongOrderClass, "symmetric blocks need order 2 mod 4");
  const std::size_t t = v / 2, m = (t - 1) / 2;
  const auto& c = row.row();
  std::vector<Entry> ap(t), bp(t), bpp(t);
  for (std::size_t j = 0; j < t; ++j) {
    const Entry z = j % 2 == 0 ? 1 : -1;
    ap[j] = static_cast<Entry>(z * c[2 * j]);
    bp[j] = static_cast<Entry>(z * c[2 * j + 1]);
  }
  for (std::size_t j = 0; j < t; ++j) bpp[j] = bp[(j + m) % t];
  SymmetricBlocks out{TernarySeq(std::move(ap)), BinarySeq(std::move(bpp))};
  if (!is_circulant_symmetric(out.a) || !is_circulant_symmetric(out.b)) {
    throw Error(ErrorCode::ImplementationFault, "symmetric block transform gave an asymmetric block");
  }
  if (!verify(two_circulant_conference(out), MatrixClass::conference())) {
    throw Error(ErrorCode::ImplementationFault, "2C array of the symmetric blocks is not a conference matrix");
  }
  return out;
}

StructuredMatrix two_circulant_conference(const SymmetricBlocks& blocks) {
  return two_block_array(StructuredMatrix::from_first_row(blocks.a, Structure::Cyclic),
                         StructuredMatrix::from_first_row(blocks.b, Structure::Cyclic));
}

QuasiWilliamsonQuad turyn_williamson(const SymmetricBlocks& blocks) {
  const auto& a = blocks.a;
  if (a.empty() || a[0] != 0 || a.weight() != static_cast<int>(a.size()) - 1) {
    throw Error(ErrorCode::InvalidInput, "block A must have zero diagonal and no other zeros");
  }
  if (!is_circulant_symmetric(a) || !is_circulant_symmetric(blocks.b)) {
    throw Error(ErrorCode::InvalidInput, "Turyn quadruple needs symmetric circulant blocks");
  }
  std::vector<Entry> plus(a.entries()), minus(a.entries());
  plus[0] = 1;
  minus[0] = -1;
  return QuasiWilliamsonQuad(BinarySeq(std::move(plus)), BinarySeq(std::move(minus)), blocks.b, blocks.b);
}

// ---------------------------------------------------------------------------

TernaryPair turyn_multiply(const BinarySeq& ga, const BinarySeq& gb, const TernaryPair& p, CorrelationKind kind) {
  if (kind == CorrelationKind::Aperiodic) throw Error(ErrorCode::InvalidInput, "multiplication target must be P or N");
  if (ga.size() != gb.size()) throw Error(ErrorCode::LengthMismatch, "Golay pair members differ in length");
  if (p.a.size() != p.b.size()) throw Error(ErrorCode::LengthMismatch, "pair members differ in length");
  if (!is_complementary(ga, gb, CorrelationKind::Aperiodic)) {
    throw Error(ErrorCode::ComplementarityViolation, "first factor is not a Golay pair");
  }
  if (!is_complementary(p.a, p.b, kind)) {
    throw Error(ErrorCode::ComplementarityViolation,
                "second factor is not " + std::string(to_string(kind)) + " complementary");
  }
  const std::size_t g = ga.size(), v = p.length();
  std::vector<int> e(g * v, 0), f(g * v, 0);
  for (std::size_t r = 0; r < g; ++r) {
    const int x = (ga[r] + gb[r]) / 2, y = (ga[r] - gb[r]) / 2;
    for (std::size_t i = 0; i < v; ++i) {
      const std::size_t fwd = g * i + r, back = g * (v - 1 - i) + r;
      e[fwd] += x * p.a[i];
      e[back] += y * p.b[i];
      f[back] += -y * p.a[i];
      f[fwd] += x * p.b[i];
    }
  }
  auto to_seq = [](const std::vector<int>& s) {
    std::vector<Entry> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < -1 || s[i] > 1) throw Error(ErrorCode::ImplementationFault, "Turyn product left {-1,0,+1}");
      out[i] = static_cast<Entry>(s[i]);
    }
    return TernarySeq(std::move(out));
  };
  TernaryPair out{to_seq(e), to_seq(f)};
  if (!is_complementary(out.a, out.b, kind)) {
    throw Error(ErrorCode::ImplementationFault, "Turyn product is not complementary");
  }
  if (out.weight() != static_cast<int>(g) * p.weight()) {
    throw Error(ErrorCode::ImplementationFault, "Turyn product breaks the weight law");
  }
  return out;
}

TernaryPair multiply_by_two(const TernaryPair& p, CorrelationKind kind) {
  return turyn_multiply(BinarySeq::parse("+-"), BinarySeq::parse("++"), p, kind);
}

NGPair multiply_by_two(const NGPair& p) {
  const auto out = multiply_by_two(TernaryPair{p.a(), p.b()});
  return NGPair(BinarySeq(out.a), BinarySeq(out.b));
}

// ---------------------------------------------------------------------------

namespace {

long qw_z(std::size_t t) { return t % 4 == 1 ? 1 : -1; }

std::uint32_t psi(std::size_t t, long i, long j) {
  return static_cast<std::uint32_t>(j + static_cast<long>(t) * floor_mod(qw_z(t) * (i - j), 4));
}

BinarySeq qw_half(const BinarySeq& first, const BinarySeq& second) {
  const std::size_t t = first.size();
  Subset x;
  for (std::size_t j = 0; j < t; ++j) {
    x.push_back(psi(t, first[j] > 0 ? 0 : 2, static_cast<long>(j)));
    x.push_back(psi(t, second[j] > 0 ? 1 : 3, static_cast<long>(j)));
  }
  std::sort(x.begin(), x.end());
  try {
    return phi_inverse(x, 2 * t);
  } catch (const Error& err) {
    throw Error(ErrorCode::InvalidQuad, std::string("quadruple set is outside the image of Phi: ") + err.what());
  }
}

}  // namespace

NGPair qw_to_ng(const QuasiWilliamsonQuad& quad) {
  const std::size_t t = quad.order();
  if (t % 2 == 0) throw Error(ErrorCode::InvalidInput, "quasi-Williamson conversion needs odd order");
  return NGPair(qw_half(quad.row(0), quad.row(1)), qw_half(quad.row(2), quad.row(3)));
}

QuasiWilliamsonQuad ng_to_qw(const NGPair& pair) {
  const std::size_t v = pair.length();
  if (v % 2 != 0 || (v / 2) % 2 == 0) throw Error(ErrorCode::InvalidInput, "NG-pair length must be 2t with t odd");
  const std::size_t t = v / 2;
  const long z = qw_z(t);
  auto split = [&](const BinarySeq& s) {
    std::vector<int> block(4 * t, -1);  // block index per element of Z_4t
    std::vector<Entry> first(t, 0), second(t, 0);
    for (std::uint32_t x : phi(s)) {
      const long j = x % t, r = x / t;
      const long i = floor_mod(z * r + j, 4);
      Entry& slot = (i % 2 == 0) ? first[j] : second[j];
      if (slot != 0) {
        throw Error(ErrorCode::InconsistentPair,
                    "both lifts of " + std::to_string(j) + " land on the same block");
      }
      slot = (i < 2) ? Entry{1} : Entry{-1};
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (first[j] == 0 || second[j] == 0) {
        throw Error(ErrorCode::InconsistentPair, "missing lift of " + std::to_string(j));
      }
    }
    return std::pair{BinarySeq(std::move(first)), BinarySeq(std::move(second))};
  };
  auto [a, b] = split(pair.a());
  auto [c, d] = split(pair.b());
  return QuasiWilliamsonQuad(std::move(a), std::move(b), std::move(c), std::move(d));
}

// ---------------------------------------------------------------------------

namespace {

WeighingOutput make_weighing(std::string label, const TernaryPair& pair, std::size_t order, int weight) {
  auto m = two_negacyclic_array(pair.a, pair.b);
  if (m.order() != order || !verify(m, MatrixClass::weighing(weight))) {
    throw Error(ErrorCode::ImplementationFault, "construction did not give W(" + std::to_string(order) + "," +
                                                    std::to_string(weight) + ")");
  }
  return WeighingOutput{std::move(label), order, weight, pair, std::move(m)};
}

TernaryPair zero_first(const TernarySeq& a, const TernarySeq& b) {
  std::vector<Entry> z(a.entries());
  z[0] = 0;
  return TernaryPair{TernarySeq(std::move(z)), b};
}

std::string wlabel(std::size_t n, int w) { return "W(" + std::to_string(n) + "," + std::to_string(w) + ")"; }

}  // namespace

std::vector<WeighingOutput> weighing_from_ng(std::uint64_t q) {
  require_prime_power(q);
  std::vector<WeighingOutput> out;
  const int qi = static_cast<int>(q);
  TernaryPair base;
  if (q % 4 == 1) {
    const auto c = negacyclic_conference(q).row();
    std::vector<Entry> a, b;
    for (std::size_t i = 0; i < c.size(); i += 2) a.push_back(c[i]);
    for (std::size_t i = 1; i < c.size(); i += 2) b.push_back(c[i]);
    base = TernaryPair{TernarySeq(std::move(a)), TernarySeq(std::move(b))};
    out.push_back(make_weighing(wlabel(1 + q, qi) + " split conference row", base, 1 + q, qi));
  } else {
    const auto ito = ito_ng(q);
    base = zero_first(ito.pair.a(), ito.pair.b());
    out.push_back(make_weighing(wlabel(1 + q, qi) + " zero-diagonal skew 2N", base, 1 + q, qi));
  }
  const auto doubled = multiply_by_two(base);
  out.push_back(make_weighing(wlabel(2 + 2 * q, 2 * qi) + " doubled", doubled, 2 + 2 * q, 2 * qi));
  if (q % 4 == 3) {
    // Alternating signs make the first row quasi-symmetric and the second
    // palindromic, so the doubled first row is quasi-symmetric.
    const auto ito = ito_ng(q);
    const auto c = transform(ito.pair.a(), SeqMotion::alternating_negate());
    const auto d = transform(ito.pair.b(), SeqMotion::alternating_negate());
    const auto ef = multiply_by_two(TernaryPair{c, d});
    if (!symmetry_kind(ef.a).quasi_symmetric || ef.a[0] != 1) {
      throw Error(ErrorCode::ImplementationFault, "doubled Ito row is not quasi-symmetric");
    }
    const auto conf = zero_first(ef.a, ef.b);
    out.push_back(make_weighing(wlabel(2 + 2 * q, 1 + 2 * qi) + " conference", conf, 2 + 2 * q, 1 + 2 * qi));
    out.push_back(make_weighing(wlabel(4 + 4 * q, 2 + 4 * qi) + " doubled conference", multiply_by_two(conf),
                                4 + 4 * q, 2 + 4 * qi));
  }
  return out;
}

}  // namespace negadesigns
