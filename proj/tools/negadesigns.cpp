// Command-line front end. Exit codes: 0 success, 1 usage, 2 verification
// failure, 3 negative search or equivalence answer, 4 undecided or budget.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "negadesigns/constructions.hpp"
#include "negadesigns/corpus.hpp"
#include "negadesigns/equiv.hpp"
#include "negadesigns/error.hpp"
#include "negadesigns/pipeline.hpp"
#include "negadesigns/search.hpp"

using namespace negadesigns;

namespace {

bool porcelain = false;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& key, const std::string& value) {
  if (porcelain) std::cout << key << "=" << value << "\n";
  else std::cout << key << ": " << value << "\n";
}

void emit_pair(const TernarySeq& a, const TernarySeq& b) {
  emit("a", a.str());
  emit("b", b.str());
}

void emit_matrix(const StructuredMatrix& m) {
  emit("order", std::to_string(m.order()));
  if (porcelain) {
    for (std::size_t i = 0; i < m.order(); ++i) std::cout << "row=" << m.row(i).str() << "\n";
  } else {
    std::cout << m.str();
    if (m.str().back() != '\n') std::cout << "\n";
  }
}

int check(bool ok, const std::string& what) {
  emit("verify", std::string(ok ? "ok " : "FAILED ") + what);
  return ok ? 0 : 2;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidInput:
    case ErrorCode::Parse:
    case ErrorCode::NotPrimePower:
    case ErrorCode::NotPrime:
    case ErrorCode::WrongOrderClass:
    case ErrorCode::InvalidMultiplier:
    case ErrorCode::LengthMismatch: return 1;
    case ErrorCode::UnsupportedOrder: return 4;
    default: return 2;
  }
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string what;  // subcommand name
  std::string series = "ito";
  std::uint64_t q = 0;
  std::string poly;
  std::string source = "auto";
  std::string pair_file;
  std::string golay_file;
  std::string rows_file;
  std::string kind = "N";
  bool verify_output = false;
};

std::optional<Polynomial> poly_arg(const ConstructArgs& a) {
  if (a.poly.empty()) return std::nullopt;
  const auto pp = odd_prime_power(a.q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(a.q) + " is not an odd prime power");
  return Polynomial::parse(a.poly, pp->p);
}

int emit_ng(const NGPair& p, bool verify_output) {
  emit("length", std::to_string(p.length()));
  emit_pair(p.a(), p.b());
  if (verify_output) return check(verify(p.hadamard(), MatrixClass::hadamard()), "2N Hadamard");
  return 0;
}

int emit_quad(const QuasiWilliamsonQuad& q, bool verify_output) {
  for (int i = 0; i < 4; ++i) emit(std::string(1, static_cast<char>('a' + i)), q.row(i).str());
  if (verify_output) return check(verify(q.williamson_matrix(), MatrixClass::hadamard()), "Williamson array");
  return 0;
}

NGPair series_ng(const ConstructArgs& a) {
  if (a.series == "ito") return ito_ng(a.q, poly_arg(a)).pair;
  // paley_ng picks the series from q mod 4; the flag states which one is wanted.
  const std::uint64_t want = a.series == "first-paley" ? 1 : 3;
  if (a.q % 4 != want) {
    throw Error(ErrorCode::WrongOrderClass, a.series + " needs q = " + std::to_string(want) + " mod 4, got " +
                                                std::to_string(a.q));
  }
  return paley_ng(a.q, poly_arg(a));
}

int run_construct(const ConstructArgs& a) {
  if (a.what == "ng") return emit_ng(series_ng(a), a.verify_output);
  if (a.what == "negacyclic-conference") {
    const auto row = negacyclic_conference(a.q, poly_arg(a),
                                           a.source == "search" ? ConferenceSource::Search : ConferenceSource::Auto);
    emit("order", std::to_string(row.order()));
    emit("row", row.row().str());
    emit("provenance", row.provenance());
    if (a.verify_output) return check(verify(row.matrix(), MatrixClass::conference()), "negacyclic conference");
    return 0;
  }
  if (a.what == "paley-conference") {
    const auto m = paley_conference(a.q);
    emit_matrix(m);
    if (a.verify_output) return check(verify(m, MatrixClass::conference()), "conference");
    return 0;
  }
  if (a.what == "blocks") {
    const auto blocks = symmetric_2c_blocks(negacyclic_conference(a.q));
    emit_pair(blocks.a, blocks.b);
    if (a.verify_output) return check(verify(two_circulant_conference(blocks), MatrixClass::conference()), "2C conference");
    return 0;
  }
  if (a.what == "williamson") return emit_quad(turyn_williamson(symmetric_2c_blocks(negacyclic_conference(a.q))),
                                               a.verify_output);
  if (a.what == "weighing") {
    int rc = 0;
    for (const auto& w : weighing_from_ng(a.q)) {
      emit("weighing", w.label);
      emit_pair(w.pair.a, w.pair.b);
      if (a.verify_output) rc = std::max(rc, check(verify(w.matrix, MatrixClass::weighing(w.weight)), w.label));
    }
    return rc;
  }
  if (a.what == "turyn-mult") {
    const auto g = TernaryPair::parse(read_input(a.golay_file));
    const auto p = TernaryPair::parse(read_input(a.pair_file));
    const auto kind = a.kind == "P" ? CorrelationKind::Periodic : CorrelationKind::Negaperiodic;
    const auto out = turyn_multiply(BinarySeq(g.a), BinarySeq(g.b), p, kind);
    emit("length", std::to_string(out.length()));
    emit("weight", std::to_string(out.weight()));
    emit_pair(out.a, out.b);
    if (a.verify_output) {
      return check(is_complementary(out.a, out.b, kind), std::string(a.kind == "P" ? "P" : "N") + "-complementary");
    }
    return 0;
  }
  if (a.what == "double") return emit_ng(multiply_by_two(NGPair::parse(read_input(a.pair_file))), a.verify_output);
  if (a.what == "ng-to-qw") return emit_quad(ng_to_qw(NGPair::parse(read_input(a.pair_file))), a.verify_output);
  if (a.what == "qw-to-ng") {
    return emit_ng(qw_to_ng(QuasiWilliamsonQuad::parse(read_input(a.rows_file))), a.verify_output);
  }
  throw Error(ErrorCode::InvalidInput, "unknown construct target " + a.what);
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& kind, const std::string& file, int weight) {
  const auto text = read_input(file);
  if (kind == "ng") {
    const auto p = TernaryPair::parse(text);
    const bool ok = p.a.is_binary() && p.b.is_binary() && is_complementary(p.a, p.b, CorrelationKind::Negaperiodic);
    return check(ok, "NG-pair of length " + std::to_string(p.length()));
  }
  if (kind == "qw") {
    try {
      const auto q = QuasiWilliamsonQuad::parse(text);
      return check(verify(q.williamson_matrix(), MatrixClass::hadamard()), "quasi-Williamson order " +
                                                                               std::to_string(q.order()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidQuad) throw;
      return check(false, e.what());
    }
  }
  const auto m = StructuredMatrix::parse(text);
  if (kind == "hadamard") return check(verify(m, MatrixClass::hadamard()), "Hadamard order " + std::to_string(m.order()));
  if (kind == "skew-hadamard") return check(is_skew_hadamard(m), "skew-Hadamard order " + std::to_string(m.order()));
  if (kind == "conference") return check(verify(m, MatrixClass::conference()), "conference order " + std::to_string(m.order()));
  if (kind == "weighing") {
    return check(verify(m, MatrixClass::weighing(weight)),
                 "W(" + std::to_string(m.order()) + "," + std::to_string(weight) + ")");
  }
  if (kind == "toeplitz-hadamard") {
    const auto s = classify_toeplitz_hadamard(m);
    emit("structure", std::string(to_string(s)));
    return 0;
  }
  throw Error(ErrorCode::InvalidInput, "unknown kind " + kind);
}

// ---- search ----------------------------------------------------------------

int report(const SearchReport& r, bool timing) {
  if (porcelain) {
    emit("target", r.target);
    emit("verdict", std::string(to_string(r.verdict)));
    emit("nodes", std::to_string(r.nodes));
    emit("shards", std::to_string(r.shards_run) + "/" + std::to_string(r.shards_total));
    emit("witnesses", std::to_string(r.witnesses.size()));
    for (const auto& w : r.witnesses) {
      std::string line;
      for (const auto& s : w) line += (line.empty() ? "" : " ") + s.str();
      emit("witness", line);
    }
  } else {
    std::cout << r.str();
  }
  if (timing) emit("seconds", std::to_string(r.seconds));
  switch (r.verdict) {
    case SearchVerdict::Found: return 0;
    case SearchVerdict::Exhausted: return 3;
    case SearchVerdict::BudgetExceeded: return 4;
  }
  return 4;
}

// ---- equiv -----------------------------------------------------------------

int run_equiv(const std::string& f1, const std::string& f2, std::size_t max_length, std::size_t max_orbit) {
  const auto p1 = TernaryPair::parse(read_input(f1)), p2 = TernaryPair::parse(read_input(f2));
  const BinaryPair b1{BinarySeq(p1.a), BinarySeq(p1.b)}, b2{BinarySeq(p2.a), BinarySeq(p2.b)};
  const auto r = are_equivalent(b1, b2, {max_length, max_orbit});
  emit("verdict", std::string(to_string(r.verdict)));
  emit("explored", std::to_string(r.explored));
  if (r.verdict == Verdict::Equivalent) {
    std::string s;
    for (const auto& st : r.script) s += (s.empty() ? "" : " ") + st.str();
    emit("script", s.empty() ? "identity" : s);
  }
  switch (r.verdict) {
    case Verdict::Equivalent: return 0;
    case Verdict::Inequivalent: return 3;
    case Verdict::Undecided: return 4;
  }
  return 4;
}

// ---- corpus ----------------------------------------------------------------

int run_corpus_list() {
  for (const auto& r : corpus()) {
    std::string line = r.source + " " + std::string(to_string(r.kind)) + " " +
                       (r.status == ParseStatus::Ok ? "OK" : "CORRUPT");
    if (porcelain) emit("record", line);
    else std::cout << line << "\n";
  }
  return 0;
}

int run_corpus_check(const std::string& section) {
  int rc = 0;
  std::size_t ok = 0, corrupt = 0, failed = 0;
  for (const auto& v : verify_all(section)) {
    std::string status;
    if (v.status == ParseStatus::Corrupt) {
      status = "CORRUPT";
      ++corrupt;
    } else if (v.passed) {
      status = "OK";
      ++ok;
    } else {
      status = "FAIL";
      ++failed;
      rc = 2;
    }
    const std::string line = v.source + " " + status + " " + v.detail;
    if (porcelain) emit("record", line);
    else std::cout << line << "\n";
  }
  emit("summary", std::to_string(ok) + " ok, " + std::to_string(failed) + " failed, " + std::to_string(corrupt) +
                      " corrupt");
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negaperiodic Golay pairs and 2N-type matrices"};
  app.require_subcommand(1);
  app.add_flag("--porcelain", porcelain, "Line-stable key=value output");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a design");
  construct->require_subcommand(1);
  construct->add_flag("--verify", ca.verify_output, "Re-verify the output");
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* c = construct->add_subcommand(name, help);
    c->callback([&ca, name] { ca.what = name; });
    c->add_flag("--verify", ca.verify_output, "Re-verify the output");
    return c;
  };
  auto q_opt = [&](CLI::App* c) { c->add_option("--q", ca.q, "Odd prime power")->required(); };
  q_opt(sub("paley-conference", "Paley conference matrix of order 1 + q"));
  auto* c_nc = sub("negacyclic-conference", "Negacyclic conference first row of order 1 + q");
  q_opt(c_nc);
  c_nc->add_option("--poly", ca.poly, "Primitive polynomial (q = 3 mod 4)");
  c_nc->add_option("--source", ca.source, "auto|search")->check(CLI::IsMember({"auto", "search"}));
  auto* c_ng = sub("ng", "NG-pair from a series");
  q_opt(c_ng);
  c_ng->add_option("--series", ca.series, "first-paley|second-paley|ito")
      ->check(CLI::IsMember({"first-paley", "second-paley", "ito"}));
  c_ng->add_option("--poly", ca.poly, "Primitive polynomial of degree 2n");
  q_opt(sub("blocks", "Symmetric 2C blocks, order 1 + q = 2 mod 4"));
  q_opt(sub("williamson", "Turyn-series Williamson quadruple"));
  q_opt(sub("weighing", "2N-type weighing matrices from q"));
  auto* c_tm = sub("turyn-mult", "Turyn product of a G-pair and a complementary pair");
  c_tm->add_option("--golay", ca.golay_file, "G-pair file")->required();
  c_tm->add_option("--pair", ca.pair_file, "Pair file")->required();
  c_tm->add_option("--kind", ca.kind, "P|N")->check(CLI::IsMember({"P", "N"}));
  sub("double", "Multiplication by 2")->add_option("--pair", ca.pair_file, "NG-pair file")->required();
  sub("ng-to-qw", "Quasi-Williamson rows from an NG-pair")->add_option("--pair", ca.pair_file, "NG-pair file")->required();
  sub("qw-to-ng", "NG-pair from quasi-Williamson rows")->add_option("--rows", ca.rows_file, "Four-row file")->required();

  std::string vkind, vfile;
  int vweight = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a matrix, pair or quadruple");
  verify_cmd->add_option("--kind", vkind)
      ->required()
      ->check(CLI::IsMember({"hadamard", "skew-hadamard", "conference", "weighing", "ng", "qw", "toeplitz-hadamard"}));
  verify_cmd->add_option("--file", vfile)->required();
  verify_cmd->add_option("--weight", vweight);

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  SearchOptions so;
  std::size_t slen = 0, sorder = 0;
  int sweight = 0;
  bool s_all = false, s_canon = false, s_exists = false, timing = false;
  auto common = [&](CLI::App* c) {
    c->add_option("--budget", so.node_budget, "Candidate budget, 0 = unlimited");
    c->add_option("--threads", so.threads, "Worker threads, 0 = NEGADESIGNS_THREADS or all cores");
    c->add_option("--shard-bits", so.shard_bits, "log2 of the shard count");
    c->add_flag("--exists", s_exists, "Stop at the first witness");
    c->add_flag("--timing", timing, "Print wall time");
  };
  auto* s_ng = search->add_subcommand("ng", "NG-pairs of a given length");
  s_ng->add_option("--length", slen)->required();
  s_ng->add_flag("--all", s_all);
  s_ng->add_flag("--canonical", s_canon);
  common(s_ng);
  auto* s_had = search->add_subcommand("nega-hadamard", "Negacyclic Hadamard first rows");
  s_had->add_option("--order", sorder)->required();
  common(s_had);
  auto* s_conf = search->add_subcommand("nega-conference", "Negacyclic conference first rows");
  s_conf->add_option("--order", sorder)->required();
  common(s_conf);
  auto* s_w = search->add_subcommand("weighing", "2N-type weighing matrices");
  s_w->add_option("--order", sorder)->required();
  s_w->add_option("--weight", sweight)->required();
  common(s_w);

  std::string ef1, ef2;
  std::size_t emax_len = 32, emax_orbit = std::size_t{1} << 24;
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two pairs");
  equiv->add_option("--pair1", ef1, "First pair file")->required();
  equiv->add_option("--pair2", ef2, "Second pair file")->required();
  equiv->add_option("--max-length", emax_len);
  equiv->add_option("--max-orbit", emax_orbit);

  auto* corpus_cmd = app.add_subcommand("corpus", "Embedded data rows");
  corpus_cmd->require_subcommand(1);
  auto* c_list = corpus_cmd->add_subcommand("list", "List records");
  std::string csource;
  auto* c_check = corpus_cmd->add_subcommand("check", "Verify records");
  c_check->add_option("--source", csource, "Section: B, C, D, E, S3, S6, S9, S10");

  std::vector<std::string> pstages;
  bool plist = false;
  auto* pipe = app.add_subcommand("pipeline", "Run a typed chain of stages");
  pipe->add_option("stages", pstages, "Stages as name or name:arg");
  pipe->add_flag("--list", plist, "List stages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*verify_cmd) return run_verify(vkind, vfile, vweight);
    if (*search) {
      if (*s_ng) {
        so.mode = s_canon ? SearchMode::Canonical : s_exists ? SearchMode::Exists : SearchMode::All;
        (void)s_all;
        return report(search_ng(slen, so), timing);
      }
      so.mode = s_exists ? SearchMode::Exists : SearchMode::All;
      if (*s_had) return report(search_negacyclic_hadamard(sorder, so), timing);
      if (*s_conf) return report(search_negacyclic_conference(sorder, so), timing);
      if (*s_w) return report(search_2n_weighing(sorder, sweight, so), timing);
    }
    if (*equiv) return run_equiv(ef1, ef2, emax_len, emax_orbit);
    if (*corpus_cmd) {
      if (*c_list) return run_corpus_list();
      if (*c_check) return run_corpus_check(csource);
    }
    if (*pipe) {
      if (plist) {
        for (const auto& s : pipeline_stage_help()) std::cout << s << "\n";
        return 0;
      }
      std::vector<StageSpec> specs;
      for (const auto& s : pstages) specs.push_back(StageSpec::parse(s));
      const auto r = run_pipeline(specs);
      for (const auto& line : r.log) {
        if (porcelain) emit("stage", line);
        else std::cout << line << "\n";
      }
      return r.exit_code;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return 1;
}
