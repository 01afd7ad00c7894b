#include "rspir/galois.hpp"

#include <stdexcept>
#include <string>

#include "rspir/rng.hpp"

namespace rspir {

namespace {

void check_same_field(FieldElement a, FieldElement b) {
  if (a.modulus != b.modulus) {
    throw std::invalid_argument("mixing elements of GF(" + std::to_string(a.modulus) +
                                ") and GF(" + std::to_string(b.modulus) + ")");
  }
  if (a.modulus == 0) throw std::invalid_argument("operation on uninitialized field element");
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_prime_modulus(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElement::FieldElement(std::uint64_t v, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("field modulus must be >= 2");
  modulus = p;
  value = static_cast<std::uint32_t>(v % p);
}

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  std::uint64_t s = static_cast<std::uint64_t>(a.value) + b.value;
  if (s >= a.modulus) s -= a.modulus;
  return FieldElement{s, a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  std::uint64_t s = static_cast<std::uint64_t>(a.value) + a.modulus - b.value;
  if (s >= a.modulus) s -= a.modulus;
  return FieldElement{s, a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  return FieldElement{static_cast<std::uint64_t>(a.value) * b.value, a.modulus};
}

FieldElement operator/(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  return a * b.inv();
}

FieldElement operator-(FieldElement a) {
  if (a.modulus == 0) throw std::invalid_argument("operation on uninitialized field element");
  return FieldElement{a.value == 0 ? 0ULL : static_cast<std::uint64_t>(a.modulus) - a.value,
                      a.modulus};
}

FieldElement FieldElement::inv() const {
  if (modulus == 0) throw std::invalid_argument("operation on uninitialized field element");
  if (value == 0) throw std::domain_error("division by zero in GF(" + std::to_string(modulus) + ")");
  // Extended Euclid; the modulus is prime, so gcd(value, p) = 1.
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = modulus, r1 = value;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
  }
  if (t0 < 0) t0 += modulus;
  return FieldElement{static_cast<std::uint64_t>(t0), modulus};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (modulus == 0) throw std::invalid_argument("operation on uninitialized field element");
  FieldElement base = *this;
  FieldElement acc = field_one(modulus);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement field_zero(std::uint32_t p) { return FieldElement{0, p}; }
FieldElement field_one(std::uint32_t p) { return FieldElement{1, p}; }

Polynomial::Polynomial(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("polynomial modulus must be >= 2");
}

Polynomial Polynomial::from_coefficients(std::uint32_t modulus, std::vector<std::uint32_t> coeffs) {
  Polynomial f(modulus);
  for (auto& c : coeffs) c %= modulus;
  f.coeffs_ = std::move(coeffs);
  f.normalize();
  return f;
}

Polynomial Polynomial::monomial(std::uint32_t modulus, int exponent, std::uint64_t coefficient) {
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  Polynomial f(modulus);
  const std::uint32_t c = static_cast<std::uint32_t>(coefficient % modulus);
  if (c != 0) {
    f.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, 0);
    f.coeffs_.back() = c;
  }
  return f;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

bool Polynomial::degree_below(int bound) const {
  const auto d = degree();
  return !d.has_value() || *d < bound;
}

FieldElement Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_zero(modulus_);
  return FieldElement{coeffs_[static_cast<std::size_t>(i)], modulus_};
}

FieldElement Polynomial::eval(FieldElement x) const {
  if (x.modulus != modulus_) {
    throw std::invalid_argument("evaluating polynomial at a point from another field");
  }
  // Horner, top coefficient first.
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (acc * x.value + *it) % modulus_;
  }
  return FieldElement{acc, modulus_};
}

Polynomial Polynomial::shifted(int e) const {
  if (e < 0) throw std::invalid_argument("shift exponent must be >= 0");
  if (is_zero() || e == 0) {
    Polynomial f = *this;
    return f;
  }
  Polynomial f(modulus_);
  f.coeffs_.assign(static_cast<std::size_t>(e), 0);
  f.coeffs_.insert(f.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return f;
}

Polynomial Polynomial::slice(int lo, int len) const {
  if (lo < 0 || len < 0) throw std::invalid_argument("bad slice bounds");
  Polynomial f(modulus_);
  f.coeffs_.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int src = lo + i;
    f.coeffs_.push_back(src < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(src)]
                                                               : 0);
  }
  f.normalize();
  return f;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.modulus != modulus_) throw std::invalid_argument("scaling by element of another field");
  Polynomial f(modulus_);
  if (c.value == 0) return f;
  f.coeffs_.reserve(coeffs_.size());
  for (auto v : coeffs_) {
    f.coeffs_.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c.value % modulus_));
  }
  f.normalize();
  return f;
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("mixing polynomials over different fields");
  }
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  const std::uint32_t p = a.modulus();
  std::vector<std::uint32_t> out(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = 0;
    if (i < a.coefficients().size()) s += a.coefficients()[i];
    if (i < b.coefficients().size()) s += b.coefficients()[i];
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  return Polynomial::from_coefficients(p, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  const std::uint32_t p = a.modulus();
  std::vector<std::uint32_t> out(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = p;
    if (i < a.coefficients().size()) s += a.coefficients()[i];
    if (i < b.coefficients().size()) s -= b.coefficients()[i];
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  return Polynomial::from_coefficients(p, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  const std::uint32_t p = a.modulus();
  if (a.is_zero() || b.is_zero()) return Polynomial(p);
  std::vector<std::uint32_t> out(a.coefficients().size() + b.coefficients().size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (a.coefficients()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
      const std::uint64_t t =
          out[i + j] + static_cast<std::uint64_t>(a.coefficients()[i]) * b.coefficients()[j] % p;
      out[i + j] = static_cast<std::uint32_t>(t % p);
    }
  }
  return Polynomial::from_coefficients(p, std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  check_same_ring(num, den);
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint32_t p = num.modulus();
  const int dd = *den.degree();
  std::vector<std::uint32_t> rem(num.coefficients().begin(), num.coefficients().end());
  if (static_cast<int>(rem.size()) - 1 < dd) {
    return {Polynomial(p), num};
  }
  const FieldElement lead_inv = FieldElement{den.coefficients()[static_cast<std::size_t>(dd)], p}.inv();
  std::vector<std::uint32_t> quot(rem.size() - static_cast<std::size_t>(dd), 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const std::uint32_t top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const std::uint64_t q = static_cast<std::uint64_t>(top) * lead_inv.value % p;
    quot[static_cast<std::size_t>(i - dd)] = static_cast<std::uint32_t>(q);
    for (int j = 0; j <= dd; ++j) {
      auto& cell = rem[static_cast<std::size_t>(i - dd + j)];
      const std::uint64_t sub = q * den.coefficients()[static_cast<std::size_t>(j)] % p;
      cell = static_cast<std::uint32_t>((cell + p - sub) % p);
    }
  }
  return {Polynomial::from_coefficients(p, std::move(quot)),
          Polynomial::from_coefficients(p, std::move(rem))};
}

Polynomial interpolate(std::span<const std::pair<FieldElement, FieldElement>> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const std::uint32_t p = points[0].first.modulus;
  for (const auto& [x, y] : points) {
    if (x.modulus != p || y.modulus != p) {
      throw std::invalid_argument("interpolation points from different fields");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("duplicate x coordinate in interpolation");
      }
    }
  }

  // Lagrange via the master numerator N(z) = prod (z - x_i); each basis
  // numerator is N / (z - x_i), obtained by synthetic division.
  Polynomial master = Polynomial::from_coefficients(p, {1});
  for (const auto& [x, y] : points) {
    master = master * Polynomial::from_coefficients(p, {(p - x.value) % p, 1});
  }

  Polynomial acc(p);
  for (const auto& [x, y] : points) {
    // Synthetic division of master by (z - x): exact, remainder zero.
    const auto& mc = master.coefficients();
    std::vector<std::uint32_t> basis(mc.size() - 1, 0);
    std::uint64_t carry = 0;
    for (int i = static_cast<int>(mc.size()) - 1; i >= 1; --i) {
      carry = (carry * x.value + mc[static_cast<std::size_t>(i)]) % p;
      basis[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(carry);
    }
    Polynomial numer = Polynomial::from_coefficients(p, std::move(basis));
    const FieldElement w = y / numer.eval(x);
    acc = acc + numer.scaled(w);
  }
  return acc;
}

FieldElement uniform_element(std::mt19937_64& rng, std::uint32_t p) {
  return FieldElement{uniform_below(rng, p), p};
}

Polynomial uniform_polynomial(std::mt19937_64& rng, std::uint32_t p, int coeff_count) {
  if (coeff_count < 0) throw std::invalid_argument("negative coefficient count");
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(coeff_count));
  for (auto& c : coeffs) c = static_cast<std::uint32_t>(uniform_below(rng, p));
  return Polynomial::from_coefficients(p, std::move(coeffs));
}

}  // namespace rspir
