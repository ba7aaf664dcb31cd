#include "negadesigns/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "negadesigns/constructions.hpp"
#include "negadesigns/equiv.hpp"
#include "negadesigns/error.hpp"
#include "negadesigns/matalg.hpp"

namespace negadesigns {

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Exists: return "exists";
    case SearchMode::All: return "all";
    case SearchMode::Canonical: return "canonical";
  }
  return "?";
}

std::string_view to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::Found: return "found";
    case SearchVerdict::Exhausted: return "exhausted";
    case SearchVerdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string SearchReport::str() const {
  std::ostringstream os;
  os << "target: " << target << "\n"
     << "verdict: " << to_string(verdict) << "\n"
     << "nodes: " << nodes << "\n"
     << "shards: " << shards_run << "/" << shards_total << "\n"
     << "witnesses: " << witnesses.size() << "\n";
  for (const auto& w : witnesses) {
    os << " ";
    for (const auto& s : w) os << " " << s.str();
    os << "\n";
  }
  return os.str();
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("NEGADESIGNS_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

inline std::uint64_t low_bits(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Ternary NAF: `supp` marks nonzero entries, `sign` marks -1 among them.
inline long naf_ternary(std::uint64_t supp, std::uint64_t sign, unsigned v, unsigned k) {
  const std::uint64_t s1 = supp & (supp >> k) & low_bits(v - k);
  const std::uint64_t x1 = (sign ^ (sign >> k)) & s1;
  const std::uint64_t s2 = supp & (supp >> (v - k)) & low_bits(k);
  const std::uint64_t x2 = (sign ^ (sign >> (v - k))) & s2;
  return (std::popcount(s1) - 2L * std::popcount(x1)) - (std::popcount(s2) - 2L * std::popcount(x2));
}

TernarySeq unpack_binary(std::uint64_t m, unsigned v) {
  std::vector<Entry> e(v);
  for (unsigned i = 0; i < v; ++i) e[i] = (m >> i) & 1 ? Entry{-1} : Entry{1};
  return TernarySeq(std::move(e));
}

TernarySeq unpack_ternary(std::uint64_t supp, std::uint64_t sign, unsigned v) {
  std::vector<Entry> e(v, 0);
  for (unsigned i = 0; i < v; ++i)
    if ((supp >> i) & 1) e[i] = (sign >> i) & 1 ? Entry{-1} : Entry{1};
  return TernarySeq(std::move(e));
}

using Witness = std::vector<TernarySeq>;

struct ShardResult {
  std::uint64_t nodes = 0;
  std::vector<Witness> witnesses;
};

struct ShardPlan {
  std::uint64_t count;
  std::function<std::uint64_t(std::uint64_t)> size;  // candidates in a shard
  std::function<ShardResult(std::uint64_t, bool)> run;  // (shard, stop at first)
};

// Admits whole shards in order under the budget, runs them on a pool and
// merges in shard order. In Exists mode the witness comes from the lowest
// shard that found one.
SearchReport run_plan(std::string target, const ShardPlan& plan, const SearchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.target = std::move(target);
  rep.shards_total = plan.count;

  std::uint64_t admitted = 0, total = 0;
  for (; admitted < plan.count; ++admitted) {
    const auto s = plan.size(admitted);
    if (opt.node_budget != 0 && total + s > opt.node_budget) break;
    total += s;
  }

  const bool exists = opt.mode == SearchMode::Exists;
  std::vector<ShardResult> results(admitted);
  std::vector<char> done(admitted, 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= admitted) return;
      if (exists && i > best.load()) continue;
      results[i] = plan.run(i, exists);
      done[i] = 1;
      if (exists && !results[i].witnesses.empty()) {
        auto cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, opt.threads ? opt.threads : default_thread_count());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::uint64_t>(threads, admitted); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (exists && best.load() != UINT64_MAX) {
    const auto b = best.load();
    // Every shard up to b ran, so the report is independent of scheduling.
    for (std::uint64_t i = 0; i <= b; ++i) rep.nodes += results[i].nodes;
    rep.shards_run = b + 1;
    rep.witnesses.push_back(results[b].witnesses.front());
    rep.verdict = SearchVerdict::Found;
  } else {
    for (std::uint64_t i = 0; i < admitted; ++i) {
      rep.nodes += results[i].nodes;
      for (auto& w : results[i].witnesses) rep.witnesses.push_back(std::move(w));
    }
    rep.shards_run = admitted;
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    if (admitted < plan.count) rep.verdict = SearchVerdict::BudgetExceeded;
    else rep.verdict = rep.witnesses.empty() ? SearchVerdict::Exhausted : SearchVerdict::Found;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// Spreads the low bits of `bits` over the set positions of `mask`.
inline std::uint64_t deposit(std::uint64_t bits, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (; mask != 0; mask &= mask - 1, bits >>= 1)
    if (bits & 1) out |= mask & -mask;
  return out;
}

// Shards are fixed values of the top `bits` free bits.
unsigned clamp_shard_bits(unsigned want, unsigned free_bits) { return std::min(want, free_bits); }

void require_verified(const StructuredMatrix& m, MatrixClass c, const std::string& what) {
  if (!verify(m, c)) throw Error(ErrorCode::ImplementationFault, "search witness failed re-verification: " + what);
}

// Lexicographic order with + before - (0 between).
bool plus_first_less(const Witness& x, const Witness& y) {
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t i = 0; i < x[r].size(); ++i) {
      if (x[r][i] != y[r][i]) return -x[r][i] < -y[r][i];
    }
  }
  return false;
}

}  // namespace

long naf_mask(std::uint64_t mask, unsigned v, unsigned k) {
  if (k == 0) return v;
  return naf_ternary(low_bits(v), mask, v, k % v == 0 ? v : k);
}

SearchReport search_ng(std::size_t v, const SearchOptions& opt) {
  if (v == 0 || (v % 2 != 0 && v != 1)) throw Error(ErrorCode::InvalidInput, "NG-pair length must be even or 1");
  if (v > 32) throw Error(ErrorCode::UnsupportedOrder, "NG search is limited to length 32");
  const auto n = static_cast<unsigned>(v);
  const unsigned lags = n / 2 == 0 ? 0 : n / 2 - 1;
  const unsigned free_bits = n - 1;  // entry 0 is fixed to +
  const std::uint64_t count = std::uint64_t{1} << free_bits;

  // Index every normalized mask by its signature over lags 1..v/2-1.
  auto signature = [&](std::uint64_t m) {
    std::string s(lags, '\0');
    for (unsigned k = 1; k <= lags; ++k) s[k - 1] = static_cast<char>(naf_mask(m, n, k));
    return s;
  };
  std::unordered_map<std::string, std::vector<std::uint64_t>> index;
  for (std::uint64_t f = 0; f < count; ++f) index[signature(f << 1)].push_back(f << 1);

  const unsigned bits = clamp_shard_bits(opt.shard_bits, free_bits);
  const unsigned inner = free_bits - bits;
  ShardPlan plan;
  plan.count = std::uint64_t{1} << bits;
  plan.size = [inner](std::uint64_t) { return std::uint64_t{1} << inner; };
  plan.run = [&](std::uint64_t shard, bool first) {
    ShardResult r;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << inner); ++f) {
      const std::uint64_t a = ((shard << inner) | f) << 1;
      ++r.nodes;
      std::string neg = signature(a);
      for (auto& c : neg) c = static_cast<char>(-c);
      const auto it = index.find(neg);
      if (it == index.end()) continue;
      for (std::uint64_t b : it->second) {
        const auto sa = unpack_binary(a, n), sb = unpack_binary(b, n);
        // Negating either member is negashift^v, so all four sign choices are NG.
        for (int sgn = 0; sgn < 4; ++sgn) {
          const auto wa = sgn & 1 ? unpack_binary(a ^ low_bits(n), n) : sa;
          const auto wb = sgn & 2 ? unpack_binary(b ^ low_bits(n), n) : sb;
          require_verified(two_negacyclic_array(wa, wb), MatrixClass::hadamard(), "NG pair " + wa.str());
          r.witnesses.push_back({wa, wb});
        }
        if (first) return r;
      }
    }
    return r;
  };
  SearchOptions o = opt;
  if (o.mode == SearchMode::Canonical) o.mode = SearchMode::All;
  auto rep = run_plan("ng length=" + std::to_string(v) + " mode=" + std::string(to_string(opt.mode)), plan, o);
  if (opt.mode != SearchMode::Canonical || rep.verdict == SearchVerdict::BudgetExceeded) return rep;

  // One least orbit element per class; orbits stay inside the NG set.
  std::unordered_set<std::string> covered;
  std::vector<Witness> classes;
  for (const auto& w : rep.witnesses) {
    if (covered.contains(w[0].str() + w[1].str())) continue;
    const auto orb = orbit(BinaryPair{BinarySeq(w[0]), BinarySeq(w[1])});
    if (!orb) throw Error(ErrorCode::UnsupportedOrder, "orbit cap exceeded during canonical search");
    Witness best;
    for (const auto& [a, b] : *orb) {
      covered.insert(a.str() + b.str());
      Witness cand{a.ternary(), b.ternary()};
      if (best.empty() || plus_first_less(cand, best)) best = std::move(cand);
    }
    classes.push_back(std::move(best));
  }
  std::sort(classes.begin(), classes.end(), plus_first_less);
  rep.witnesses = std::move(classes);
  return rep;
}

SearchReport search_negacyclic_hadamard(std::size_t n, const SearchOptions& opt) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "order must be positive");
  if (n > 40) throw Error(ErrorCode::UnsupportedOrder, "negacyclic Hadamard search is limited to order 40");
  const auto v = static_cast<unsigned>(n);
  const unsigned last = v / 2;  // lags 1..last cover 0 < k < n by NAF(n-k) = -NAF(k)
  const unsigned free_bits = v - 1;
  const unsigned bits = clamp_shard_bits(opt.shard_bits, free_bits);
  const unsigned inner = free_bits - bits;
  ShardPlan plan;
  plan.count = std::uint64_t{1} << bits;
  plan.size = [inner](std::uint64_t) { return std::uint64_t{1} << inner; };
  plan.run = [=](std::uint64_t shard, bool first) {
    ShardResult r;
    const std::uint64_t hi = shard << inner;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << inner); ++f) {
      const std::uint64_t a = (hi | f) << 1;
      ++r.nodes;
      bool ok = true;
      for (unsigned k = 1; k <= last && ok; ++k) ok = naf_mask(a, v, k) == 0;
      if (!ok) continue;
      for (std::uint64_t m : {a, a ^ low_bits(v)}) {
        const auto row = unpack_binary(m, v);
        require_verified(StructuredMatrix::from_first_row(row, Structure::Negacyclic), MatrixClass::hadamard(),
                         "negacyclic row " + row.str());
        r.witnesses.push_back({row});
      }
      if (first) return r;
    }
    return r;
  };
  return run_plan("nega-hadamard order=" + std::to_string(n), plan, opt);
}

SearchReport search_negacyclic_conference(std::size_t n, const SearchOptions& opt) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidInput, "conference order must be even");
  if (n > 64) throw Error(ErrorCode::UnsupportedOrder, "conference search is limited to order 64");
  const auto v = static_cast<unsigned>(n), h = v / 2;
  // Free entries c_1..c_h; c_1 = + (negation is NAF-preserving).
  const unsigned free_bits = h - 1;
  const unsigned bits = clamp_shard_bits(opt.shard_bits, free_bits);
  const unsigned inner = free_bits - bits;
  const std::uint64_t supp = low_bits(v) & ~std::uint64_t{1};
  auto complete = [=](std::uint64_t m) {
    for (unsigned j = 1; j < h; ++j) {
      const std::uint64_t bit = (m >> (h - j)) & 1;
      m |= (bit ^ (j % 2)) << (h + j);  // c_{h+j} = (-1)^j c_{h-j}
    }
    return m;
  };
  ShardPlan plan;
  plan.count = std::uint64_t{1} << bits;
  plan.size = [inner](std::uint64_t) { return std::uint64_t{1} << inner; };
  plan.run = [=](std::uint64_t shard, bool first) {
    ShardResult r;
    const std::uint64_t hi = shard << inner;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << inner); ++f) {
      const std::uint64_t m = complete((hi | f) << 2);
      ++r.nodes;
      bool ok = true;
      for (unsigned k = 1; k < h && ok; ++k) ok = naf_ternary(supp, m, v, k) == 0;
      if (!ok) continue;
      for (std::uint64_t s : {m, m ^ supp}) {
        const auto row = unpack_ternary(supp, s, v);
        require_verified(StructuredMatrix::from_first_row(row, Structure::Negacyclic), MatrixClass::conference(),
                         "conference row " + row.str());
        r.witnesses.push_back({row});
      }
      if (first) return r;
    }
    return r;
  };
  return run_plan("nega-conference order=" + std::to_string(n), plan, opt);
}

SearchReport search_2n_weighing(std::size_t n, int w, const SearchOptions& opt) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidInput, "2N weighing order must be even");
  if (w < 1 || w > static_cast<int>(n)) throw Error(ErrorCode::InvalidInput, "weight must lie in 1..order");
  if (n > 32) throw Error(ErrorCode::UnsupportedOrder, "weighing search is limited to order 32");
  const auto v = static_cast<unsigned>(n / 2);
  const unsigned last = v / 2;

  // Support pairs of total weight w; each shard is one support pair and
  // enumerates every sign pattern on it.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> supports;
  for (std::uint64_t sa = 0; sa < (std::uint64_t{1} << v); ++sa)
    for (std::uint64_t sb = 0; sb < (std::uint64_t{1} << v); ++sb)
      if (std::popcount(sa) + std::popcount(sb) == w) supports.emplace_back(sa, sb);

  ShardPlan plan;
  plan.count = supports.size();
  plan.size = [w](std::uint64_t) { return std::uint64_t{1} << w; };
  plan.run = [&](std::uint64_t i, bool first) {
    ShardResult r;
    const auto [sa, sb] = supports[i];
    const int wa = std::popcount(sa);
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << w); ++signs) {
      ++r.nodes;
      const std::uint64_t ma = deposit(signs, sa), mb = deposit(signs >> wa, sb);
      bool ok = true;
      for (unsigned k = 1; k <= last && ok; ++k) ok = naf_ternary(sa, ma, v, k) + naf_ternary(sb, mb, v, k) == 0;
      if (!ok) continue;
      const auto a = unpack_ternary(sa, ma, v), b = unpack_ternary(sb, mb, v);
      require_verified(two_negacyclic_array(a, b), MatrixClass::weighing(w), "weighing pair " + a.str());
      r.witnesses.push_back({a, b});
      if (first) return r;
    }
    return r;
  };
  return run_plan("weighing order=" + std::to_string(n) + " weight=" + std::to_string(w), plan, opt);
}

}  // namespace negadesigns
