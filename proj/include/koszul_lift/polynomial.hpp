#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "koszul_lift/scalar.hpp"

namespace koszul_lift {

/// Exponent vector. Ordered by total degree, then lexicographically with the
/// first variable largest, so x^2 > x*y > y^2 > x > y > 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// All monomials of the given degree in nvars variables, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Sparse polynomial with exact coefficients; terms are kept largest first
/// and zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, std::greater<Monomial>>;

  Poly() = default;
  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly term(const Monomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m, Field field) const;

  /// Degree of the leading term; nullopt for zero.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// True if the zero-degree coefficient is nonzero.
  bool has_constant_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

}  // namespace koszul_lift
