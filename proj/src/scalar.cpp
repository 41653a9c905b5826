#include "koszul_lift/scalar.hpp"

#include <stdexcept>

#include "koszul_lift/error.hpp"

namespace koszul_lift {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::invalid_input,
                "field characteristic must be a prime below 2^31, got " +
                    std::to_string(p));
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

Scalar Scalar::from_int(Field field, long value) {
  Scalar s;
  if (field.is_rational()) {
    s.rep_ = mpq_class(value);
  } else {
    s.rep_ = Residue{reduce_mpz(mpz_class(value), field.characteristic),
                     field.characteristic};
  }
  return s;
}

Scalar Scalar::from_rational(Field field, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw Error(Errc::parse, "zero denominator");
  Scalar s;
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    s.rep_ = q;
    return s;
  }
  std::uint32_t p = field.characteristic;
  std::uint32_t d = reduce_mpz(den, p);
  if (d == 0)
    throw Error(Errc::parse, "denominator vanishes in " + field.name());
  std::uint64_t n = reduce_mpz(num, p);
  s.rep_ = Residue{static_cast<std::uint32_t>(n * mod_pow(d, p - 2, p) % p), p};
  return s;
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (rep_.index() != other.rep_.index() ||
      (rep_.index() == 1 && std::get<Residue>(rep_).modulus !=
                                std::get<Residue>(other.rep_).modulus))
    throw std::logic_error("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto* r = std::get_if<Residue>(&s.rep_)) {
    if (r->value != 0) r->value = r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(s.rep_);
    q = -q;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::precondition, "inverse of zero");
  Scalar s = *this;
  if (auto* r = std::get_if<Residue>(&s.rep_)) {
    r->value = mod_pow(r->value, r->modulus - 2, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(s.rep_);
    q = 1 / q;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    std::uint64_t v = std::uint64_t{r->value} + std::get<Residue>(other.rep_).value;
    if (v >= r->modulus) v -= r->modulus;
    r->value = static_cast<std::uint32_t>(v);
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(other.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = static_cast<std::uint32_t>(
        std::uint64_t{r->value} * std::get<Residue>(other.rep_).value % r->modulus);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(other.rep_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.rep_)) {
    const auto& s = std::get<Scalar::Residue>(b.rep_);
    return r->modulus == s.modulus && r->value == s.value;
  }
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

bool Scalar::prints_negative() const {
  if (const auto* r = std::get_if<Residue>(&rep_))
    return r->value > r->modulus / 2;
  return sgn(std::get<mpq_class>(rep_)) < 0;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    if (r->value > r->modulus / 2)
      return "-" + std::to_string(r->modulus - r->value);
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(rep_).get_str();
}

}  // namespace koszul_lift
