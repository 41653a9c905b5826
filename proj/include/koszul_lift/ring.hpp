#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "koszul_lift/polynomial.hpp"

namespace koszul_lift {

/// Q = k[x_1..x_n]/J with J a monomial ideal and all variables of degree 1,
/// together with a homogeneous sequence f_1..f_c in the maximal ideal of Q.
/// R = Q/(f_1..f_c). Elements of Q are represented by J-reduced polynomials.
class GradedRing {
 public:
  GradedRing(Field field, std::vector<std::string> variables,
             std::vector<Monomial> relations = {}, std::vector<Poly> sequence = {});

  /// Builds the ring from text: relations and sequence use the polynomial
  /// grammar over the given variables.
  static GradedRing from_strings(Field field, std::vector<std::string> variables,
                                 const std::vector<std::string>& relations,
                                 const std::vector<std::string>& sequence);

  Field field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Monomial>& relations() const { return relations_; }
  const std::vector<Poly>& sequence() const { return sequence_; }
  std::size_t codim() const { return sequence_.size(); }
  /// Degree of f_i, 1-based like the Koszul generators e_i.
  int sequence_degree(std::size_t i) const { return sequence_degrees_.at(i - 1); }
  const Poly& sequence_element(std::size_t i) const { return sequence_.at(i - 1); }

  /// The same Q with the sequence replaced.
  GradedRing with_sequence(std::vector<Poly> sequence) const;

  bool in_relations(const Monomial& m) const;
  /// Deletes every term lying in J.
  Poly normal_form(const Poly& p) const;
  /// normal_form(a * b) without materialising terms in J.
  Poly multiply(const Poly& a, const Poly& b) const;
  /// Basis of Q_d: monomials of degree d outside J, largest first.
  std::vector<Monomial> standard_monomials(int degree) const;

  Scalar scalar(long value) const { return Scalar::from_int(field_, value); }
  Poly constant(long value) const { return Poly::constant(nvars(), scalar(value)); }
  Poly variable(std::size_t index) const;

  Poly parse(std::string_view text) const;
  std::string format(const Poly& p) const;
  std::string format(const Monomial& m) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<Monomial> relations_;
  std::vector<Poly> sequence_;
  std::vector<int> sequence_degrees_;
};

}  // namespace koszul_lift
