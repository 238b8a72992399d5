#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace toricq {

class FieldElement;

/// Arithmetic in GF(p^m) for prime powers q = p^m <= 2^16.
///
/// The representation modulus is the lexicographically smallest monic
/// irreducible polynomial of degree m over GF(p) (smallest canonical integer
/// encoding), so Field instances with equal (p, m) are interchangeable and
/// reproducible across machines. Elements are identified by their canonical
/// encoding sum_i coeffs[i] * p^i in [0, q).
class Field {
public:
  using enc_t = std::uint32_t;

  static Field make(std::int64_t p, std::int64_t m);
  /// Factors q as p^m and builds that field. Throws std::invalid_argument
  /// if q is not a prime power.
  static Field of_order(std::int64_t q);

  std::int64_t p() const noexcept;
  std::int64_t m() const noexcept;
  std::int64_t q() const noexcept;
  /// Modulus coefficients, low degree first, length m+1, monic.
  const std::vector<std::int64_t>& modulus() const noexcept;

  FieldElement element(std::int64_t encoding) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q-1 nonzero elements, ascending encoding order.
  std::vector<FieldElement> units() const;

  // Encoding-level arithmetic. These are the kernels the matrix code runs on;
  // FieldElement wraps them with operand checking.
  enc_t add(enc_t a, enc_t b) const;
  enc_t sub(enc_t a, enc_t b) const;
  enc_t neg(enc_t a) const;
  enc_t mul(enc_t a, enc_t b) const;
  enc_t inv(enc_t a) const;
  /// base^e with any integer exponent; negative exponents use the inverse.
  /// pow(0, 0) = 1, pow(0, e<0) throws.
  enc_t pow(enc_t base, std::int64_t e) const;
  /// Unique square root in characteristic 2. Throws in odd characteristic.
  enc_t sqrt(enc_t a) const;

  /// Base-p digits of an encoding, length m.
  std::vector<std::int64_t> coeffs(enc_t a) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t);
  std::shared_ptr<const Tables> t_;
};

/// A value of a specific Field. Mixed-field operands throw.
class FieldElement {
public:
  std::int64_t encoding() const noexcept { return v_; }
  const Field& field() const noexcept { return f_; }
  std::vector<std::int64_t> coeffs() const { return f_.coeffs(v_); }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;
  FieldElement sqrt() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
  friend class Field;
  FieldElement(Field f, Field::enc_t v) : f_(std::move(f)), v_(v) {}
  Field f_;
  Field::enc_t v_;
};

}  // namespace toricq
