#include "koszul_lift/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "koszul_lift/error.hpp"

namespace koszul_lift {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

class PolyParser {
 public:
  PolyParser(const GradedRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Poly result;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_space();
      auto [mono, coeff] = term();
      result.add_term(mono, negative ? -coeff : coeff);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  const GradedRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse, "polynomial '" + std::string(text_) + "' at column " +
                                 std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Scalar> term() {
    Monomial mono = Monomial::one(ring_.nvars());
    Scalar coeff = ring_.scalar(1);
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits()), den(1);
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        den = mpz_class(digits());
      }
      coeff = Scalar::from_rational(ring_.field(), num, den);
      skip_space();
      if (at_end() || peek() != '*') return {mono, coeff};
      ++pos_;
    }
    while (need_factor) {
      skip_space();
      mono = mono * power();
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return {mono, coeff};
  }

  Monomial power() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!is_identifier(name)) {
      pos_ = start;
      fail("expected a variable name");
    }
    const auto& vars = ring_.variables();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    int exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      exponent = std::stoi(e);
    }
    std::vector<int> exps(vars.size(), 0);
    exps[static_cast<std::size_t>(it - vars.begin())] = exponent;
    return Monomial(std::move(exps));
  }
};

}  // namespace

GradedRing::GradedRing(Field field, std::vector<std::string> variables,
                       std::vector<Monomial> relations, std::vector<Poly> sequence)
    : field_(field), vars_(std::move(variables)), relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) throw Error(Errc::invalid_input, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(Errc::invalid_input, "duplicate variable '" + v + "'");
  }
  for (const auto& m : relations_) {
    if (m.nvars() != vars_.size())
      throw Error(Errc::invalid_input, "monomial relation has wrong arity");
    if (m.degree() == 0)
      throw Error(Errc::invalid_input, "monomial relation 1 makes Q the zero ring");
  }
  sequence_.reserve(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    Poly fi = normal_form(sequence[i]);
    std::string label = "f_" + std::to_string(i + 1);
    if (fi.is_zero()) throw Error(Errc::invalid_input, label + " is zero in Q");
    if (!fi.is_homogeneous()) throw Error(Errc::invalid_input, label + " is not homogeneous");
    if (*fi.degree() == 0)
      throw Error(Errc::invalid_input, label + " is a unit, not in the maximal ideal");
    sequence_degrees_.push_back(*fi.degree());
    sequence_.push_back(std::move(fi));
  }
}

GradedRing GradedRing::from_strings(Field field, std::vector<std::string> variables,
                                    const std::vector<std::string>& relations,
                                    const std::vector<std::string>& sequence) {
  GradedRing bare(field, std::move(variables));
  std::vector<Monomial> monos;
  for (const auto& r : relations) {
    Poly p = bare.parse(r);
    if (p.size() != 1)
      throw Error(Errc::invalid_input, "relation '" + r + "' is not a monomial");
    monos.push_back(p.terms().begin()->first);
  }
  std::vector<Poly> seq;
  for (const auto& s : sequence) seq.push_back(bare.parse(s));
  return GradedRing(field, bare.vars_, std::move(monos), std::move(seq));
}

GradedRing GradedRing::with_sequence(std::vector<Poly> sequence) const {
  return GradedRing(field_, vars_, relations_, std::move(sequence));
}

bool GradedRing::in_relations(const Monomial& m) const {
  return std::any_of(relations_.begin(), relations_.end(),
                     [&](const Monomial& r) { return r.divides(m); });
}

Poly GradedRing::normal_form(const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p.terms())
    if (!in_relations(m)) out.add_term(m, c);
  return out;
}

Poly GradedRing::multiply(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      if (!in_relations(m)) out.add_term(m, ca * cb);
    }
  return out;
}

std::vector<Monomial> GradedRing::standard_monomials(int degree) const {
  auto all = monomials_of_degree(nvars(), degree);
  std::erase_if(all, [&](const Monomial& m) { return in_relations(m); });
  return all;
}

Poly GradedRing::variable(std::size_t index) const {
  return Poly::term(Monomial::variable(nvars(), index), scalar(1));
}

Poly GradedRing::parse(std::string_view text) const {
  return normal_form(PolyParser(*this, text).run());
}

std::string GradedRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string GradedRing::format(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c.prints_negative();
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += format(m);
    } else {
      out += mag.to_string() + "*" + format(m);
    }
  }
  return out;
}

}  // namespace koszul_lift
