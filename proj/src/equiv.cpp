#include "negadesigns/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "negadesigns/error.hpp"

namespace negadesigns {

Subset phi(const BinarySeq& a) {
  const std::size_t v = a.size();
  Subset x;
  x.reserve(v);
  for (std::size_t i = 0; i < v; ++i) x.push_back(static_cast<std::uint32_t>(a[i] > 0 ? i : v + i));
  std::sort(x.begin(), x.end());
  return x;
}

BinarySeq phi_inverse(const Subset& x, std::size_t v) {
  if (x.size() != v) throw Error(ErrorCode::NotInImage, "subset size is not " + std::to_string(v));
  std::vector<Entry> a(v, 0);
  for (std::uint32_t e : x) {
    if (e >= 2 * v) throw Error(ErrorCode::NotInImage, std::to_string(e) + " is outside Z_" + std::to_string(2 * v));
    const std::size_t i = e % v;
    if (a[i] != 0) throw Error(ErrorCode::NotInImage, "subset holds both " + std::to_string(i) + " and its shift by v");
    a[i] = e < v ? Entry{1} : Entry{-1};
  }
  return BinarySeq(std::move(a));
}

RDFWitness rdf_check(const std::vector<Subset>& sets, std::size_t modulus) {
  RDFWitness w;
  if (modulus < 4 || modulus % 2 != 0) {
    w.reason = "modulus must be even and at least 4";
    return w;
  }
  w.counts.assign(modulus, 0);
  long pairs = 0;
  for (const auto& s : sets) {
    pairs += static_cast<long>(s.size()) * (static_cast<long>(s.size()) - 1);
    for (auto x : s)
      for (auto y : s)
        if (x != y) ++w.counts[(x + modulus - y % modulus) % modulus];
  }
  const std::size_t half = modulus / 2;
  if (w.counts[half] != 0) {
    w.reason = "difference " + std::to_string(half) + " occurs " + std::to_string(w.counts[half]) + " times";
    return w;
  }
  w.lambda = w.counts[1];
  for (std::size_t m = 1; m < modulus; ++m) {
    if (m == half) continue;
    if (w.counts[m] != w.lambda) {
      w.reason = "difference " + std::to_string(m) + " occurs " + std::to_string(w.counts[m]) + " times, not " +
                 std::to_string(w.lambda);
      return w;
    }
  }
  if (pairs != 2 * w.lambda * static_cast<long>(half - 1)) {
    w.reason = "set sizes do not match lambda";
    return w;
  }
  w.ok = true;
  return w;
}

std::string PairStep::str() const {
  switch (op) {
    case PairOp::ReverseA: return "reverse-a";
    case PairOp::ReverseB: return "reverse-b";
    case PairOp::NegashiftA: return "negashift-a";
    case PairOp::NegashiftB: return "negashift-b";
    case PairOp::Switch: return "switch";
    case PairOp::Multiplier: return "multiplier-" + std::to_string(k);
    case PairOp::AlternatingNegate: return "alternate";
  }
  return "?";
}

BinaryPair pair_transform(const BinaryPair& p, PairStep step) {
  switch (step.op) {
    case PairOp::ReverseA: return {transform(p.first, SeqMotion::reverse()), p.second};
    case PairOp::ReverseB: return {p.first, transform(p.second, SeqMotion::reverse())};
    case PairOp::NegashiftA: return {transform(p.first, SeqMotion::negacyclic_shift()), p.second};
    case PairOp::NegashiftB: return {p.first, transform(p.second, SeqMotion::negacyclic_shift())};
    case PairOp::Switch: return {p.second, p.first};
    case PairOp::Multiplier:
      return {transform(p.first, SeqMotion::multiplier(step.k)), transform(p.second, SeqMotion::multiplier(step.k))};
    case PairOp::AlternatingNegate:
      return {transform(p.first, SeqMotion::alternating_negate()),
              transform(p.second, SeqMotion::alternating_negate())};
  }
  throw Error(ErrorCode::InvalidInput, "unknown pair step");
}

namespace {

long mod_inverse(long k, long m) {
  k %= m;
  if (k < 0) k += m;
  for (long x = 1; x < m; ++x)
    if ((k * x) % m == 1) return x;
  throw Error(ErrorCode::InvalidMultiplier, std::to_string(k) + " has no inverse mod " + std::to_string(m));
}

Subset map_set(const Subset& s, std::size_t m, auto&& f) {
  Subset out;
  out.reserve(s.size());
  for (auto e : s) out.push_back(static_cast<std::uint32_t>(f(static_cast<long>(e)) % static_cast<long>(m)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SubsetPair family_transform(const SubsetPair& f, PairStep step) {
  const long m = static_cast<long>(f.modulus), v = m / 2;
  auto rev = [&](long i) { return ((v - 1 - i) % m + m); };
  auto shift = [&](long i) { return i + 1; };
  auto alt = [&](long i) { return i % 2 == 1 ? i + v : i; };
  switch (step.op) {
    case PairOp::ReverseA: return {map_set(f.x, f.modulus, rev), f.y, f.modulus};
    case PairOp::ReverseB: return {f.x, map_set(f.y, f.modulus, rev), f.modulus};
    case PairOp::NegashiftA: return {map_set(f.x, f.modulus, shift), f.y, f.modulus};
    case PairOp::NegashiftB: return {f.x, map_set(f.y, f.modulus, shift), f.modulus};
    case PairOp::Switch: return {f.y, f.x, f.modulus};
    case PairOp::Multiplier: {
      if (std::gcd(step.k, m) != 1) {
        throw Error(ErrorCode::InvalidMultiplier, std::to_string(step.k) + " is not a unit mod " + std::to_string(m));
      }
      const long k = ((step.k % m) + m) % m;
      auto mul = [&](long i) { return k * i; };
      return {map_set(f.x, f.modulus, mul), map_set(f.y, f.modulus, mul), f.modulus};
    }
    case PairOp::AlternatingNegate: return {map_set(f.x, f.modulus, alt), map_set(f.y, f.modulus, alt), f.modulus};
  }
  throw Error(ErrorCode::InvalidInput, "unknown family step");
}

PairStep family_counterpart(PairStep s, std::size_t v) {
  if (s.op != PairOp::Multiplier) return s;
  return {PairOp::Multiplier, mod_inverse(s.k, static_cast<long>(2 * v))};
}

SubsetPair phi_pair(const BinaryPair& p) { return {phi(p.first), phi(p.second), 2 * p.first.size()}; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

std::vector<PairStep> generators(std::size_t v) {
  std::vector<PairStep> g{{PairOp::ReverseA},   {PairOp::ReverseB}, {PairOp::NegashiftA},
                          {PairOp::NegashiftB}, {PairOp::Switch},   {PairOp::AlternatingNegate}};
  const long m = static_cast<long>(2 * v);
  for (long k = 2; k < m; ++k)
    if (std::gcd(k, m) == 1) g.push_back({PairOp::Multiplier, k});
  return g;
}

namespace {

// Packed pair: a in bits 0..v-1, b in bits 32..32+v-1; a set bit is -1.
using State = std::uint64_t;

std::uint32_t pack(const BinarySeq& s) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0) m |= 1u << i;
  return m;
}

BinarySeq unpack(std::uint32_t m, std::size_t v) {
  std::vector<Entry> e(v);
  for (std::size_t i = 0; i < v; ++i) e[i] = (m >> i) & 1u ? Entry{-1} : Entry{1};
  return BinarySeq(std::move(e));
}

class Mover {
 public:
  explicit Mover(std::size_t v) : v_(v), gens_(generators(v)) {
    low_ = v == 32 ? 0xffffffffu : ((1u << v) - 1);
    for (std::size_t i = 1; i < v; i += 2) odd_ |= 1u << i;
    for (const auto& g : gens_) {
      if (g.op != PairOp::Multiplier) continue;
      std::vector<std::pair<unsigned, bool>> perm(v);
      for (std::size_t i = 0; i < v; ++i) {
        const auto ki = static_cast<std::uint64_t>(g.k) * i;
        perm[i] = {static_cast<unsigned>(ki % v), ki % (2 * v) >= v};
      }
      mult_.push_back(std::move(perm));
    }
  }

  const std::vector<PairStep>& gens() const { return gens_; }

  State apply(State s, std::size_t g) const {
    auto a = static_cast<std::uint32_t>(s), b = static_cast<std::uint32_t>(s >> 32);
    switch (gens_[g].op) {
      case PairOp::ReverseA: a = rev(a); break;
      case PairOp::ReverseB: b = rev(b); break;
      case PairOp::NegashiftA: a = nshift(a); break;
      case PairOp::NegashiftB: b = nshift(b); break;
      case PairOp::Switch: std::swap(a, b); break;
      case PairOp::AlternatingNegate: a ^= odd_; b ^= odd_; break;
      case PairOp::Multiplier: {
        const auto& perm = mult_[g - 6];
        a = mul(a, perm);
        b = mul(b, perm);
        break;
      }
    }
    return a | (State{b} << 32);
  }

 private:
  std::uint32_t rev(std::uint32_t m) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < v_; ++i)
      if ((m >> i) & 1u) r |= 1u << (v_ - 1 - i);
    return r;
  }
  std::uint32_t nshift(std::uint32_t m) const {
    const std::uint32_t top = (m >> (v_ - 1)) & 1u;
    return ((m << 1) & low_) | (top ^ 1u);
  }
  static std::uint32_t mul(std::uint32_t m, const std::vector<std::pair<unsigned, bool>>& perm) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (((m >> perm[i].first) & 1u) ^ static_cast<unsigned>(perm[i].second)) r |= 1u << i;
    return r;
  }

  std::size_t v_;
  std::vector<PairStep> gens_;
  std::uint32_t low_ = 0, odd_ = 0;
  std::vector<std::vector<std::pair<unsigned, bool>>> mult_;
};

struct Parent {
  State from;
  std::uint32_t gen;
};

struct BFS {
  std::unordered_map<State, Parent> seen;
  bool capped = false;
  bool hit = false;
};

// Explores the orbit of `start`, stopping early when `target` is reached.
BFS explore(const Mover& mv, State start, std::optional<State> target, std::size_t cap) {
  BFS r;
  r.seen.emplace(start, Parent{start, UINT32_MAX});
  std::vector<State> frontier{start};
  if (target && *target == start) {
    r.hit = true;
    return r;
  }
  while (!frontier.empty()) {
    std::vector<State> next;
    for (State s : frontier) {
      for (std::size_t g = 0; g < mv.gens().size(); ++g) {
        const State t = mv.apply(s, g);
        if (!r.seen.emplace(t, Parent{s, static_cast<std::uint32_t>(g)}).second) continue;
        if (target && t == *target) {
          r.hit = true;
          return r;
        }
        if (r.seen.size() > cap) {
          r.capped = true;
          return r;
        }
        next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return r;
}

State pack_pair(const BinaryPair& p) { return pack(p.first) | (State{pack(p.second)} << 32); }

BinaryPair unpack_pair(State s, std::size_t v) {
  return {unpack(static_cast<std::uint32_t>(s), v), unpack(static_cast<std::uint32_t>(s >> 32), v)};
}

void check_pair(const BinaryPair& p) {
  if (p.first.size() != p.second.size()) throw Error(ErrorCode::LengthMismatch, "pair members differ in length");
}

}  // namespace

EquivResult are_equivalent(const BinaryPair& p1, const BinaryPair& p2, const EquivOptions& opt) {
  check_pair(p1);
  check_pair(p2);
  EquivResult res;
  const std::size_t v = p1.first.size();
  if (v != p2.first.size()) {
    res.verdict = Verdict::Inequivalent;
    return res;
  }
  if (v > opt.max_length || v > 32) return res;
  const Mover mv(v);
  const State target = pack_pair(p2);
  const auto bfs = explore(mv, pack_pair(p1), target, opt.max_orbit);
  res.explored = bfs.seen.size();
  if (bfs.hit) {
    res.verdict = Verdict::Equivalent;
    for (State s = target;;) {
      const auto& par = bfs.seen.at(s);
      if (par.gen == UINT32_MAX) break;
      res.script.push_back(mv.gens()[par.gen]);
      s = par.from;
    }
    std::reverse(res.script.begin(), res.script.end());
  } else if (!bfs.capped) {
    res.verdict = Verdict::Inequivalent;
  }
  return res;
}

EquivResult are_equivalent(const NGPair& p1, const NGPair& p2, const EquivOptions& opt) {
  return are_equivalent(BinaryPair{p1.a(), p1.b()}, BinaryPair{p2.a(), p2.b()}, opt);
}

std::optional<std::vector<BinaryPair>> orbit(const BinaryPair& p, const EquivOptions& opt) {
  check_pair(p);
  const std::size_t v = p.first.size();
  if (v > opt.max_length || v > 32) return std::nullopt;
  const Mover mv(v);
  const auto bfs = explore(mv, pack_pair(p), std::nullopt, opt.max_orbit);
  if (bfs.capped) return std::nullopt;
  std::vector<State> states;
  states.reserve(bfs.seen.size());
  for (const auto& [s, par] : bfs.seen) states.push_back(s);
  std::sort(states.begin(), states.end());
  std::vector<BinaryPair> out;
  out.reserve(states.size());
  for (State s : states) out.push_back(unpack_pair(s, v));
  return out;
}

namespace {

// Entry 0 most significant, + below -.
std::uint64_t order_key(State s, std::size_t v) {
  auto rev = [v](std::uint32_t m) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < v; ++i)
      if ((m >> i) & 1u) r |= std::uint64_t{1} << (v - 1 - i);
    return r;
  };
  return (rev(static_cast<std::uint32_t>(s)) << v) | rev(static_cast<std::uint32_t>(s >> 32));
}

}  // namespace

BinaryPair canonical_form(const BinaryPair& p, const EquivOptions& opt) {
  check_pair(p);
  const std::size_t v = p.first.size();
  if (v > opt.max_length || v > 32) {
    throw Error(ErrorCode::UnsupportedOrder, "canonical form is capped at length " + std::to_string(opt.max_length));
  }
  const Mover mv(v);
  const auto bfs = explore(mv, pack_pair(p), std::nullopt, opt.max_orbit);
  if (bfs.capped) throw Error(ErrorCode::UnsupportedOrder, "orbit exceeds " + std::to_string(opt.max_orbit));
  State best = pack_pair(p);
  // v = 32 needs 64 key bits; compare the halves separately there.
  auto less = [v](State x, State y) {
    if (v < 32) return order_key(x, v) < order_key(y, v);
    return std::pair{order_key(x & 0xffffffffu, v), order_key(x >> 32, v)} <
           std::pair{order_key(y & 0xffffffffu, v), order_key(y >> 32, v)};
  };
  for (const auto& [s, par] : bfs.seen)
    if (less(s, best)) best = s;
  return unpack_pair(best, v);
}

NGPair canonical_form(const NGPair& p, const EquivOptions& opt) {
  auto c = canonical_form(BinaryPair{p.a(), p.b()}, opt);
  return NGPair(std::move(c.first), std::move(c.second));
}

BinaryPair apply_script(BinaryPair p, const std::vector<PairStep>& script) {
  for (const auto& s : script) p = pair_transform(p, s);
  return p;
}

}  // namespace negadesigns
