#include "negadesigns/gf.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "negadesigns/error.hpp"

namespace negadesigns {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) return std::nullopt;
  const auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  std::uint32_t n = 0;
  for (std::uint64_t r = q; r > 1; r /= f[0]) ++n;
  return PrimePower{static_cast<std::uint32_t>(f[0]), n};
}

// ---------------------------------------------------------------------------
// Dense polynomials over Z_p, low degree first, no trailing zeros.

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly to_poly(const Polynomial& f) { return Poly(f.coeffs().begin(), f.coeffs().end()); }

}  // namespace

Polynomial::Polynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p_ < 2) throw Error(ErrorCode::NotPrime, "polynomial modulus prime must be >= 2");
  for (auto& c : coeffs_) c %= p_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text, std::uint32_t p) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (!std::isspace(ch) && ch != '*') {
      s.push_back(static_cast<char>(ch));
    }
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  std::vector<long long> acc;
  std::size_t i = 0;
  auto read_int = [&](long long& out) {
    std::size_t start = i;
    long long value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = value * 10 + (s[i] - '0');
      if (value > std::numeric_limits<int>::max()) throw Error(ErrorCode::Parse, "polynomial number too large");
      ++i;
    }
    if (i > start) out = value;
    return i > start;
  };
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw Error(ErrorCode::Parse, "expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    long long coef = 1;
    const bool has_coef = read_int(coef);
    long long exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(exponent)) throw Error(ErrorCode::Parse, "missing exponent after '^'");
      }
    } else if (!has_coef) {
      throw Error(ErrorCode::Parse, "malformed term in polynomial '" + std::string(text) + "'");
    }
    if (exponent > 64) throw Error(ErrorCode::Parse, "polynomial degree too large");
    if (acc.size() <= static_cast<std::size_t>(exponent)) acc.resize(exponent + 1, 0);
    acc[exponent] += sign * coef;
  }
  std::vector<std::uint32_t> c(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    long long r = acc[k] % static_cast<long long>(p);
    if (r < 0) r += p;
    c[k] = static_cast<std::uint32_t>(r);
  }
  return Polynomial(p, std::move(c));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const std::uint32_t c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

bool is_irreducible(const Polynomial& f) {
  const std::uint64_t p = f.prime();
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly m = to_poly(f);
  // Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n.
  std::vector<Poly> frob(n + 1);
  frob[0] = Poly{0, 1};
  for (int i = 1; i <= n; ++i) frob[i] = poly_powmod(frob[i - 1], p, m, p);
  auto minus_x = [p](Poly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[n]).empty()) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
    const Poly g = poly_gcd(minus_x(frob[n / r]), m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kTableCap = std::uint64_t{1} << 16;

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, Polynomial modulus) : p_(p), n_(0), size_(1), modulus_(std::move(modulus)) {
  if (p_ % 2 == 0 || !is_prime(p_)) throw Error(ErrorCode::NotPrime, std::to_string(p_) + " is not an odd prime");
  if (modulus_.prime() != p_) throw Error(ErrorCode::InvalidInput, "modulus is over a different prime field");
  if (modulus_.degree() < 1 || !modulus_.is_monic()) {
    throw Error(ErrorCode::InvalidInput, "modulus must be monic of degree >= 1");
  }
  n_ = static_cast<std::uint32_t>(modulus_.degree());
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (size_ > (std::uint64_t{1} << 31) / p_) throw Error(ErrorCode::InvalidInput, "field too large");
    size_ *= p_;
  }
  if (!is_irreducible(modulus_)) {
    throw Error(ErrorCode::ReducibleModulus, modulus_.str() + " is reducible over Z_" + std::to_string(p_));
  }
  if (n_ == 1) {
    x_ = FieldElem{static_cast<std::uint32_t>((p_ - modulus_.coeffs()[0]) % p_)};
  } else {
    x_ = FieldElem{p_};
  }
  const std::uint64_t group = size_ - 1;
  primitive_ = x_ != zero();
  if (primitive_) {
    for (std::uint64_t r : prime_factors(group)) {
      if (pow(x_, group / r) == one()) {
        primitive_ = false;
        break;
      }
    }
  }
  if (primitive_ && size_ <= kTableCap) {
    exp_.resize(group);
    log_.assign(size_, 0);
    FieldElem cur = one();
    for (std::uint64_t i = 0; i < group; ++i) {
      exp_[i] = cur.code;
      log_[cur.code] = static_cast<std::uint32_t>(i);
      cur = poly_mul(cur, x_);
    }
    if (cur != one()) throw Error(ErrorCode::ImplementationFault, "exp table does not close");
  }
}

FieldCtx make_field(std::uint32_t p, std::uint32_t n, const Polynomial& modulus) {
  if (modulus.degree() != static_cast<int>(n)) {
    throw Error(ErrorCode::InvalidInput, "modulus degree " + std::to_string(modulus.degree()) + " differs from " +
                                             std::to_string(n));
  }
  return FieldCtx(p, modulus);
}

FieldElem FieldCtx::from_int(long value) const {
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > n_) throw Error(ErrorCode::InvalidInput, "too many coefficients for field element");
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + (c[i] % p_);
  return FieldElem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem a) const {
  std::vector<std::uint32_t> c(n_);
  std::uint32_t code = a.code;
  for (std::uint32_t i = 0; i < n_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

FieldElem FieldCtx::element(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::InvalidInput, "element index out of range");
  return FieldElem{static_cast<std::uint32_t>(index)};
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElem{out};
}

FieldElem FieldCtx::neg(FieldElem a) const {
  std::uint32_t x = a.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return FieldElem{out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::poly_mul(FieldElem a, FieldElem b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  Poly pa(ca.begin(), ca.end()), pb(cb.begin(), cb.end());
  trim(pa);
  trim(pb);
  Poly r = poly_mulmod(pa, pb, to_poly(modulus_), p_);
  std::vector<std::uint32_t> c(r.begin(), r.end());
  return from_coeffs(c);
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (a == zero() || b == zero()) return zero();
  if (has_tables()) {
    const std::uint64_t group = size_ - 1;
    return FieldElem{exp_[(std::uint64_t{log_[a.code]} + log_[b.code]) % group]};
  }
  return poly_mul(a, b);
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
  if (has_tables() && a != zero()) {
    const std::uint64_t group = size_ - 1;
    const std::uint64_t l = std::uint64_t{log_[a.code]} * (e % group);  // both factors < 2^16
    return FieldElem{exp_[l % group]};
  }
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a == zero()) throw Error(ErrorCode::InvalidInput, "inverse of zero");
  return pow(a, size_ - 2);
}

std::uint64_t FieldCtx::multiplicative_order(FieldElem a) const {
  if (a == zero()) throw Error(ErrorCode::InvalidInput, "zero has no multiplicative order");
  std::uint64_t order = size_ - 1;
  for (std::uint64_t r : prime_factors(size_ - 1)) {
    while (order % r == 0 && pow(a, order / r) == one()) order /= r;
  }
  return order;
}

int FieldCtx::quadratic_character(FieldElem y) const {
  if (y == zero()) return 0;
  if (has_tables()) return log_[y.code] % 2 == 0 ? 1 : -1;
  const FieldElem h = pow(y, (size_ - 1) / 2);
  if (h == one()) return 1;
  if (h == neg(one())) return -1;
  throw Error(ErrorCode::ImplementationFault, "Euler criterion gave neither 1 nor -1");
}

std::uint64_t FieldCtx::subfield_size() const {
  if (n_ % 2 != 0) throw Error(ErrorCode::InvalidInput, "relative trace needs an even-degree field");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n_ / 2; ++i) q *= p_;
  return q;
}

FieldElem FieldCtx::rel_trace(FieldElem y) const {
  const std::uint64_t q = subfield_size();
  const FieldElem t = add(y, pow(y, q));
  if (pow(t, q) != t) throw Error(ErrorCode::ImplementationFault, "trace left the subfield");
  return t;
}

bool FieldCtx::in_subfield(FieldElem y) const { return pow(y, subfield_size()) == y; }

int FieldCtx::subfield_character(FieldElem z) const {
  if (!in_subfield(z)) throw Error(ErrorCode::InvalidInput, "element is not in the subfield");
  if (z == zero()) return 0;
  const FieldElem h = pow(z, (subfield_size() - 1) / 2);
  if (h == one()) return 1;
  if (h == neg(one())) return -1;
  throw Error(ErrorCode::ImplementationFault, "subfield Euler criterion gave neither 1 nor -1");
}

std::string FieldCtx::str(FieldElem a) const {
  const auto c = coeffs(a);
  std::vector<std::uint32_t> v(c.begin(), c.end());
  return Polynomial(p_, v).str();
}

Polynomial find_primitive_poly(std::uint32_t p, std::uint32_t n) {
  if (p % 2 == 0 || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
  if (n < 1) throw Error(ErrorCode::InvalidInput, "degree must be >= 1");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= p;
  // idx enumerates (c_0, ..., c_{n-1}) with c_0 most significant.
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> c(n + 1, 0);
    std::uint64_t r = idx;
    for (std::uint32_t k = n; k-- > 0;) {
      c[k] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    if (c[0] == 0) continue;
    c[n] = 1;
    Polynomial f(p, c);
    if (!is_irreducible(f)) continue;
    FieldCtx ctx(p, f);
    if (ctx.is_primitive()) return f;
  }
  throw Error(ErrorCode::ImplementationFault, "no primitive polynomial found");
}

FieldElem det2(const FieldCtx& ctx, Vec2 u, Vec2 v) { return ctx.sub(ctx.mul(u.x, v.y), ctx.mul(u.y, v.x)); }

}  // namespace negadesigns
