#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace koszul_lift {

/// Coefficient field: characteristic 0 is the rationals, otherwise F_p with
/// p prime and p < 2^31.
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element. Rationals are kept canonical (lowest terms, positive
/// denominator); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Field field) { return from_int(field, 0); }
  static Scalar one(Field field) { return from_int(field, 1); }
  static Scalar from_int(Field field, long value);
  static Scalar from_rational(Field field, const mpz_class& num,
                              const mpz_class& den);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other) { return *this *= other.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// True when the printed form starts with a minus sign. Residues print
  /// with the balanced representative in (-p/2, p/2].
  bool prints_negative() const;
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;
  };

  std::variant<mpq_class, Residue> rep_;

  void require_same_field(const Scalar& other) const;
};

}  // namespace koszul_lift
