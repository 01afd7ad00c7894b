#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace rspir {

bool is_prime(std::uint32_t p);

// Throws std::invalid_argument unless p is prime. Entry points that accept a
// modulus from the outside world call this once; elements then trust it.
void check_prime_modulus(std::uint32_t p);

// Element of the prime field GF(p). The modulus travels with the value and is
// checked whenever two elements meet, so cross-field mixups fail immediately
// instead of producing silently wrong residues.
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;

  FieldElement() = default;
  FieldElement(std::uint64_t v, std::uint32_t p);

  bool is_zero() const { return value == 0; }
  FieldElement inv() const;  // throws std::domain_error on zero
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement&) const = default;
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);

FieldElement field_zero(std::uint32_t p);
FieldElement field_one(std::uint32_t p);

// Univariate polynomial over GF(p), coefficient i belongs to z^i. Stored
// normalized: the top stored coefficient is nonzero, and the zero polynomial
// stores no coefficients at all. Its degree is reported as std::nullopt, a
// sentinel that cannot be confused with a real degree.
class Polynomial {
 public:
  explicit Polynomial(std::uint32_t modulus);
  static Polynomial from_coefficients(std::uint32_t modulus, std::vector<std::uint32_t> coeffs);
  static Polynomial monomial(std::uint32_t modulus, int exponent, std::uint64_t coefficient = 1);

  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  bool degree_below(int bound) const;  // deg(f) < bound; the zero polynomial passes for any bound >= 0
  int coefficient_count() const { return static_cast<int>(coeffs_.size()); }
  FieldElement coefficient(int i) const;  // zero beyond the stored range
  std::span<const std::uint32_t> coefficients() const { return coeffs_; }

  FieldElement eval(FieldElement x) const;
  Polynomial shifted(int e) const;          // multiply by z^e, e >= 0
  Polynomial slice(int lo, int len) const;  // sum of coeff[lo+i] z^i over 0 <= i < len

  Polynomial scaled(FieldElement c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> coeffs_;
  void normalize();
};

// Quotient and remainder of num / den; den must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

// Unique polynomial of degree < |points| through the given points.
// Throws std::invalid_argument on duplicate x coordinates or empty input.
Polynomial interpolate(std::span<const std::pair<FieldElement, FieldElement>> points);

FieldElement uniform_element(std::mt19937_64& rng, std::uint32_t p);

// Uniform polynomial with coeff_count i.i.d. coefficients (degree < coeff_count;
// lower when top draws are zero). coeff_count 0 gives the zero polynomial.
Polynomial uniform_polynomial(std::mt19937_64& rng, std::uint32_t p, int coeff_count);

}  // namespace rspir
