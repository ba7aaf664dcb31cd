#pragma once

// Exact arithmetic in GF(p^n) for odd p, built from a monic modulus over Z_p.
// Elements are packed coefficient vectors: code = sum c_i p^i.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negadesigns {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct PrimePower {
  std::uint32_t p;
  std::uint32_t n;
};

/// p^n with p odd, else nullopt.
std::optional<PrimePower> odd_prime_power(std::uint64_t q);

/// Polynomial over Z_p with coefficients stored low degree first.
class Polynomial {
 public:
  Polynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  /// Accepts forms like `x^2+x+5`, `x^2 - x - 1`, `x^6 - x^5 + 2`.
  static Polynomial parse(std::string_view text, std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Descending powers with coefficients in [0, p), e.g. `x^2+2x+2`.
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

struct FieldElem {
  std::uint32_t code = 0;

  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

class FieldCtx {
 public:
  /// Throws NotPrime, ReducibleModulus or InvalidInput.
  FieldCtx(std::uint32_t p, Polynomial modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  bool is_primitive() const noexcept { return primitive_; }
  const Polynomial& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// The class of x.
  FieldElem generator() const noexcept { return x_; }
  FieldElem from_int(long value) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;
  /// Elements in enumeration order are exactly the codes 0..size-1.
  FieldElem element(std::uint64_t index) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  FieldElem inv(FieldElem a) const;
  std::uint64_t multiplicative_order(FieldElem a) const;

  /// 0 at zero, +1 on nonzero squares, -1 otherwise.
  int quadratic_character(FieldElem y) const;

  /// For even degree 2m, with q = p^m: y + y^q.
  FieldElem rel_trace(FieldElem y) const;
  /// y^q == y.
  bool in_subfield(FieldElem y) const;
  /// Quadratic character of GF(q) on an element of the subfield.
  int subfield_character(FieldElem z) const;
  std::uint64_t subfield_size() const;

  std::string str(FieldElem a) const;

 private:
  FieldElem poly_mul(FieldElem a, FieldElem b) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t size_;
  Polynomial modulus_;
  FieldElem x_;
  bool primitive_ = false;
  std::vector<std::uint32_t> exp_;  // exp_[i] = code of x^i
  std::vector<std::uint32_t> log_;  // log_[code], unused at 0
};

/// Validates that `modulus` has degree n before building the context.
FieldCtx make_field(std::uint32_t p, std::uint32_t n, const Polynomial& modulus);

/// Smallest monic primitive polynomial of degree n over Z_p, comparing
/// coefficient tuples (c_0, c_1, ..., c_{n-1}) lexicographically.
Polynomial find_primitive_poly(std::uint32_t p, std::uint32_t n);

bool is_irreducible(const Polynomial& f);

struct Vec2 {
  FieldElem x;
  FieldElem y;
};

/// u.x * v.y - u.y * v.x
FieldElem det2(const FieldCtx& ctx, Vec2 u, Vec2 v);

}  // namespace negadesigns
