#include "negadesigns/pipeline.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <variant>

#include "negadesigns/constructions.hpp"
#include "negadesigns/corpus.hpp"
#include "negadesigns/error.hpp"

namespace negadesigns {

std::string_view to_string(ValueType t) {
  switch (t) {
    case ValueType::None: return "none";
    case ValueType::ConferenceRow: return "conference-row";
    case ValueType::Blocks: return "symmetric-blocks";
    case ValueType::Quad: return "quadruple";
    case ValueType::NGPair: return "ng-pair";
    case ValueType::Matrix: return "matrix";
  }
  return "?";
}

StageSpec StageSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {std::string(text), {}};
  return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

namespace {

using Value = std::variant<std::monostate, ConferenceRow, SymmetricBlocks, QuasiWilliamsonQuad, NGPair,
                           StructuredMatrix>;

struct Outcome {
  Value value;
  std::string note;
  bool failed = false;  // verification stages only
};

struct Stage {
  ValueType in;
  ValueType out;
  bool needs_arg;
  Outcome (*run)(const Value&, const std::string&);
};

std::uint64_t to_uint(const std::string& s) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw Error(ErrorCode::InvalidInput, "bad integer '" + s + "'");
  return v;
}

template <class T>
const T& as(const Value& v) {
  return std::get<T>(v);
}

Outcome verdict(Value v, bool ok, std::string what) {
  return {std::move(v), std::move(what) + (ok ? " verified" : " FAILED"), !ok};
}

const std::map<std::string, Stage>& stages() {
  static const std::map<std::string, Stage> table{
      {"negacyclic-conference",
       {ValueType::None, ValueType::ConferenceRow, true,
        [](const Value&, const std::string& a) {
          auto row = negacyclic_conference(to_uint(a));
          const std::string note = "row " + row.row().str() + " (" + row.provenance() + ")";
          return Outcome{std::move(row), note};
        }}},
      {"ito-ng",
       {ValueType::None, ValueType::NGPair, true,
        [](const Value&, const std::string& a) {
          auto r = ito_ng(to_uint(a));
          return Outcome{r.pair, "pair " + r.pair.a().str() + " " + r.pair.b().str() + " (" + r.poly.str() + ")"};
        }}},
      {"paley-ng",
       {ValueType::None, ValueType::NGPair, true,
        [](const Value&, const std::string& a) {
          auto p = paley_ng(to_uint(a));
          return Outcome{p, "pair " + p.a().str() + " " + p.b().str()};
        }}},
      {"corpus-pair",
       {ValueType::None, ValueType::NGPair, true,
        [](const Value&, const std::string& a) {
          const auto* r = find_record(a);
          if (!r) throw Error(ErrorCode::InvalidInput, "no corpus record " + a);
          const auto ex = expand_record(*r);
          if (ex.rows.size() != 2) throw Error(ErrorCode::InvalidInput, a + " is not a pair record");
          NGPair p(BinarySeq(ex.rows[0]), BinarySeq(ex.rows[1]));
          return Outcome{p, "pair " + p.a().str() + " " + p.b().str()};
        }}},
      {"symmetric-2c",
       {ValueType::ConferenceRow, ValueType::Blocks, false,
        [](const Value& v, const std::string&) {
          auto b = symmetric_2c_blocks(as<ConferenceRow>(v));
          return Outcome{b, "a' " + b.a.str() + " b'' " + b.b.str()};
        }}},
      {"turyn-williamson",
       {ValueType::Blocks, ValueType::Quad, false,
        [](const Value& v, const std::string&) {
          auto q = turyn_williamson(as<SymmetricBlocks>(v));
          return Outcome{q, "quadruple of order " + std::to_string(q.order())};
        }}},
      {"williamson-array",
       {ValueType::Quad, ValueType::Matrix, false,
        [](const Value& v, const std::string&) {
          auto m = as<QuasiWilliamsonQuad>(v).williamson_matrix();
          return Outcome{m, "matrix of order " + std::to_string(m.order())};
        }}},
      {"two-circulant",
       {ValueType::Blocks, ValueType::Matrix, false,
        [](const Value& v, const std::string&) {
          auto m = two_circulant_conference(as<SymmetricBlocks>(v));
          return Outcome{m, "matrix of order " + std::to_string(m.order())};
        }}},
      {"conference-matrix",
       {ValueType::ConferenceRow, ValueType::Matrix, false,
        [](const Value& v, const std::string&) {
          auto m = as<ConferenceRow>(v).matrix();
          return Outcome{m, "matrix of order " + std::to_string(m.order())};
        }}},
      {"double",
       {ValueType::NGPair, ValueType::NGPair, false,
        [](const Value& v, const std::string&) {
          auto p = multiply_by_two(as<NGPair>(v));
          return Outcome{p, "pair " + p.a().str() + " " + p.b().str()};
        }}},
      {"ng-to-qw",
       {ValueType::NGPair, ValueType::Quad, false,
        [](const Value& v, const std::string&) {
          auto q = ng_to_qw(as<NGPair>(v));
          return Outcome{q, "quadruple " + q.row(0).str() + " " + q.row(1).str() + " " + q.row(2).str() + " " +
                                q.row(3).str()};
        }}},
      {"qw-to-ng",
       {ValueType::Quad, ValueType::NGPair, false,
        [](const Value& v, const std::string&) {
          auto p = qw_to_ng(as<QuasiWilliamsonQuad>(v));
          return Outcome{p, "pair " + p.a().str() + " " + p.b().str()};
        }}},
      {"hadamard-2n",
       {ValueType::NGPair, ValueType::Matrix, false,
        [](const Value& v, const std::string&) {
          auto m = as<NGPair>(v).hadamard();
          return Outcome{m, "matrix of order " + std::to_string(m.order())};
        }}},
      {"verify-hadamard",
       {ValueType::Matrix, ValueType::Matrix, false,
        [](const Value& v, const std::string& a) {
          const auto& m = as<StructuredMatrix>(v);
          const bool ok = verify(m, MatrixClass::hadamard()) && (a.empty() || m.order() == to_uint(a));
          return verdict(v, ok, "Hadamard of order " + std::to_string(m.order()));
        }}},
      {"verify-conference",
       {ValueType::Matrix, ValueType::Matrix, false,
        [](const Value& v, const std::string& a) {
          const auto& m = as<StructuredMatrix>(v);
          const bool ok = verify(m, MatrixClass::conference()) && (a.empty() || m.order() == to_uint(a));
          return verdict(v, ok, "conference of order " + std::to_string(m.order()));
        }}},
      {"verify-skew-hadamard",
       {ValueType::Matrix, ValueType::Matrix, false,
        [](const Value& v, const std::string&) {
          const auto& m = as<StructuredMatrix>(v);
          return verdict(v, is_skew_hadamard(m), "skew-Hadamard of order " + std::to_string(m.order()));
        }}},
      {"verify-ng",
       {ValueType::NGPair, ValueType::NGPair, false,
        [](const Value& v, const std::string& a) {
          // An NGPair value is complementary by construction; recheck independently.
          const auto& p = as<NGPair>(v);
          const bool ok = is_complementary(p.a(), p.b(), CorrelationKind::Negaperiodic) &&
                          verify(p.hadamard(), MatrixClass::hadamard()) && (a.empty() || p.length() == to_uint(a));
          return verdict(v, ok, "NG-pair of length " + std::to_string(p.length()));
        }}},
      {"verify-qw",
       {ValueType::Quad, ValueType::Quad, false,
        [](const Value& v, const std::string&) {
          const auto& q = as<QuasiWilliamsonQuad>(v);
          const std::array<TernarySeq, 4> r{q.row(0), q.row(1), q.row(2), q.row(3)};
          bool ok = verify(q.williamson_matrix(), MatrixClass::hadamard());
          for (long x : quad_paf_sum(r)) ok &= x == 0;
          for (long x : quad_cross_residual(r)) ok &= x == 0;
          return verdict(v, ok, "quasi-Williamson quadruple of order " + std::to_string(q.order()));
        }}},
  };
  return table;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidInput:
    case ErrorCode::Parse:
    case ErrorCode::NotPrimePower:
    case ErrorCode::NotPrime:
    case ErrorCode::WrongOrderClass:
    case ErrorCode::InvalidMultiplier: return 1;
    case ErrorCode::UnsupportedOrder: return 4;
    default: return 2;
  }
}

}  // namespace

std::vector<std::string> pipeline_stage_help() {
  std::vector<std::string> out;
  for (const auto& [name, st] : stages()) {
    out.push_back(name + (st.needs_arg ? ":ARG" : "") + "  " + std::string(to_string(st.in)) + " -> " +
                  std::string(to_string(st.out)));
  }
  return out;
}

PipelineResult run_pipeline(const std::vector<StageSpec>& specs) {
  PipelineResult res;
  if (specs.empty()) {
    res.exit_code = 1;
    res.log.push_back("error: empty pipeline");
    return res;
  }
  ValueType cur = ValueType::None;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto it = stages().find(specs[i].name);
    if (it == stages().end()) {
      res.exit_code = 1;
      res.log.push_back("error: unknown stage '" + specs[i].name + "'");
      return res;
    }
    const Stage& st = it->second;
    if (st.in != cur) {
      res.exit_code = 1;
      res.log.push_back("error: stage " + std::to_string(i + 1) + " '" + specs[i].name + "' takes " +
                        std::string(to_string(st.in)) + " but receives " + std::string(to_string(cur)));
      return res;
    }
    if (st.needs_arg && specs[i].arg.empty()) {
      res.exit_code = 1;
      res.log.push_back("error: stage '" + specs[i].name + "' needs an argument");
      return res;
    }
    cur = st.out;
  }
  Value v;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Stage& st = stages().at(specs[i].name);
    const std::string label = "[" + std::to_string(i + 1) + "] " + specs[i].name +
                              (specs[i].arg.empty() ? "" : ":" + specs[i].arg) + ": ";
    try {
      auto o = st.run(v, specs[i].arg);
      res.log.push_back(label + o.note);
      if (o.failed) {
        res.exit_code = 2;
        return res;
      }
      v = std::move(o.value);
    } catch (const Error& e) {
      res.log.push_back(label + e.what());
      res.exit_code = exit_for(e);
      return res;
    }
  }
  return res;
}

}  // namespace negadesigns
