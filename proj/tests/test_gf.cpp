#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "negadesigns/error.hpp"
#include "negadesigns/gf.hpp"

using namespace negadesigns;

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first

// Naive reduction of a*b modulo a monic f over Z_p.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  std::size_t n = f.size() - 1;
  Poly r(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    std::uint64_t c = r[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) r[d - n + i] = (r[d - n + i] + (p - c) * f[i] % p) % p;
  }
  r.resize(n);
  return r;
}

// Order of x modulo f by repeated multiplication; 0 if x^k never returns to 1.
std::uint64_t order_of_x(const Poly& f, std::uint64_t p) {
  std::size_t n = f.size() - 1;
  Poly one(n, 0), x(n, 0), cur;
  one[0] = 1;
  if (n == 1) x[0] = (p - f[0]) % p; else x[1] = 1;
  cur = x;
  std::uint64_t limit = 1;
  for (std::size_t i = 0; i < n; ++i) limit *= p;
  for (std::uint64_t k = 1; k < limit; ++k) {
    if (cur == one) return k;
    cur = mulmod(cur, x, f, p);
  }
  return 0;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Smallest primitive monic polynomial by brute force, in (c_0, ..., c_{n-1}) order.
Poly brute_primitive(std::uint64_t p, unsigned n) {
  std::uint64_t total = ipow(p, n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly f(n + 1, 0);
    std::uint64_t r = idx;
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      f[i] = r % p;
      r /= p;
    }
    f[n] = 1;
    if (f[0] == 0) continue;
    if (order_of_x(f, p) == total - 1) return f;
  }
  return {};
}

FieldCtx gf9() { return make_field(3, 2, Polynomial::parse("x^2-x-1", 3)); }

}  // namespace

TEST_CASE("make_field examples") {
  auto f9 = gf9();
  CHECK(f9.is_primitive());
  CHECK(f9.size() == 9);
  auto g = make_field(3, 2, Polynomial::parse("x^2+1", 3));
  CHECK_FALSE(g.is_primitive());
  CHECK(g.multiplicative_order(g.generator()) == 4);
  CHECK(make_field(7, 2, Polynomial::parse("x^2-x+3", 7)).is_primitive());
  CHECK_THROWS_AS(make_field(3, 2, Polynomial::parse("x^2-1", 3)), Error);
  CHECK_THROWS_AS(make_field(4, 1, Polynomial::parse("x+1", 4)), Error);
  CHECK_THROWS_AS(make_field(3, 3, Polynomial::parse("x^2+1", 3)), Error);
}

TEST_CASE("find_primitive_poly matches the brute-force oracle") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {5, 2}, {7, 2}, {11, 2}, {3, 3}, {3, 4}}) {
    auto f = find_primitive_poly(p, n);
    auto expect = brute_primitive(p, n);
    std::vector<std::uint64_t> got(f.coeffs().begin(), f.coeffs().end());
    CHECK(got == expect);
    CHECK(order_of_x(expect, p) == ipow(p, n) - 1);
  }
  auto f36 = find_primitive_poly(3, 6);
  CHECK(f36.degree() == 6);
  CHECK(make_field(3, 6, f36).is_primitive());
}

TEST_CASE("polynomial text form") {
  CHECK(Polynomial::parse("x^2 - x - 1", 3).str() == "x^2+2x+2");
  CHECK(Polynomial::parse("x^6-x^5+2", 3).coeffs() == std::vector<std::uint32_t>{2, 0, 0, 0, 0, 2, 1});
  CHECK_THROWS_AS(Polynomial::parse("x^2+y", 3), Error);
}

TEST_CASE("quadratic character") {
  auto f3 = make_field(3, 1, Polynomial::parse("x+1", 3));
  CHECK(f3.quadratic_character(f3.from_int(1)) == 1);
  CHECK(f3.quadratic_character(f3.from_int(2)) == -1);
  CHECK(f3.quadratic_character(f3.zero()) == 0);
  auto f9 = gf9();
  CHECK(f9.quadratic_character(f9.from_int(-1)) == 1);
}

TEST_CASE("relative trace in GF(9)") {
  auto f9 = gf9();
  auto x = f9.generator();
  CHECK(f9.rel_trace(f9.pow(x, 2)) == f9.zero());
  CHECK(f9.rel_trace(f9.pow(x, 3)) == f9.one());
  CHECK(f9.rel_trace(f9.one()) == f9.from_int(2));
}

TEST_CASE("det2") {
  auto f9 = gf9();
  auto b = f9.element(4), c = f9.element(7);
  CHECK(det2(f9, {f9.one(), f9.zero()}, {f9.zero(), f9.one()}) == f9.one());
  CHECK(det2(f9, {f9.one(), b}, {f9.one(), c}) == f9.sub(c, b));
  CHECK(det2(f9, {b, c}, {b, c}) == f9.zero());
}

TEST_CASE("property: field axioms and Fermat on random triples") {
  std::mt19937_64 rng(5);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {7, 2}, {5, 3}, {3, 6}, {127, 1}, {11, 2}}) {
    auto ctx = make_field(p, n, find_primitive_poly(p, n));
    for (int t = 0; t < 200; ++t) {
      auto a = ctx.element(rng() % ctx.size()), b = ctx.element(rng() % ctx.size()),
           c = ctx.element(rng() % ctx.size());
      CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
      CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
      CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
      if (a != ctx.zero()) {
        CHECK(ctx.pow(a, ctx.size() - 1) == ctx.one());
        CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
      }
      if (a != ctx.zero() && b != ctx.zero())
        CHECK(ctx.quadratic_character(ctx.mul(a, b)) == ctx.quadratic_character(a) * ctx.quadratic_character(b));
    }
  }
}

TEST_CASE("chi(-1) is +1 exactly when q = 1 mod 4, all q up to 128") {
  for (std::uint64_t q = 3; q <= 128; q += 2) {
    auto pp = odd_prime_power(q);
    if (!pp) continue;
    auto ctx = make_field(pp->p, pp->n, find_primitive_poly(pp->p, pp->n));
    CHECK(ctx.quadratic_character(ctx.from_int(-1)) == (q % 4 == 1 ? 1 : -1));
  }
}

TEST_CASE("property: trace is linear, surjective and Frobenius-invariant") {
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    auto ctx = make_field(p, 2, find_primitive_poly(p, 2));
    std::vector<bool> hit(p, false);
    for (std::uint64_t i = 0; i < ctx.size(); ++i) {
      auto y = ctx.element(i);
      auto t = ctx.rel_trace(y);
      CHECK(ctx.in_subfield(t));
      CHECK(ctx.rel_trace(ctx.pow(y, p)) == t);
      for (std::uint32_t s = 0; s < p; ++s)
        CHECK(ctx.rel_trace(ctx.mul(ctx.from_int(s), y)) == ctx.mul(ctx.from_int(s), t));
      hit[ctx.coeffs(t)[0]] = true;
    }
    for (bool h : hit) CHECK(h);
  }
}

TEST_CASE("orders of u and w in GF(q^2), q = 4t - 1") {
  for (std::uint64_t q : {3ULL, 7ULL, 11ULL, 19ULL, 23ULL, 27ULL, 31ULL, 43ULL}) {
    auto pp = odd_prime_power(q);
    REQUIRE(pp);
    auto ctx = make_field(pp->p, 2 * pp->n, find_primitive_poly(pp->p, 2 * pp->n));
    std::uint64_t t = (q + 1) / 4;
    auto x = ctx.generator();
    CHECK(ctx.multiplicative_order(ctx.pow(x, 8 * t)) == (q - 1) / 2);
    CHECK(ctx.multiplicative_order(ctx.pow(x, 2 * t - 1)) == 2 * (q + 1));
  }
}

TEST_CASE("primality helpers") {
  CHECK(is_prime(127));
  CHECK_FALSE(is_prime(1));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_FALSE(odd_prime_power(15));
  CHECK_FALSE(odd_prime_power(8));
  CHECK(odd_prime_power(81)->n == 4);
}
