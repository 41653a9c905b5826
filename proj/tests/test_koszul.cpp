#include <doctest.h>

#include "koszul_lift/error.hpp"
#include "koszul_lift/koszul.hpp"
#include "support.hpp"

using namespace koszul_lift;

namespace {

// Sign of the permutation sorting the concatenation a, b, counted by bubble sort.
int sort_sign(std::vector<int> v) {
  int swaps = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        ++swaps;
      }
  return swaps % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("index parsing and ordering") {
  CHECK(KoszulIndex::from_list({1, 3}).to_string() == "[1,3]");
  CHECK(KoszulIndex().to_string() == "[]");
  CHECK(KoszulIndex::zero().to_string() == "null");
  CHECK(KoszulIndex::parse("[2, 4]") == KoszulIndex::from_list({2, 4}));
  CHECK(KoszulIndex::parse("[]").is_one());
  CHECK_THROWS_AS(KoszulIndex::from_list({3, 1}), Error);
  CHECK_THROWS_AS(KoszulIndex::from_list({1, 1}), Error);
  CHECK_THROWS_AS(KoszulIndex::from_list({0}), Error);
  CHECK_THROWS_AS(KoszulIndex::from_list({17}), Error);
  CHECK_THROWS_AS(KoszulIndex::parse("[1,"), Error);
  CHECK(KoszulIndex::zero() < KoszulIndex());
  CHECK(KoszulIndex::from_list({3}) < KoszulIndex::from_list({1, 2}));
  CHECK(KoszulIndex::from_list({1, 3}) < KoszulIndex::from_list({2, 3}));
  CHECK(KoszulIndex::zero().degree() == -1);
}

TEST_CASE("wedge examples") {
  const auto e = [](std::vector<int> v) { return KoszulIndex::from_list(v); };
  CHECK(wedge(e({2}), e({1})) == SignedIndex{e({1, 2}), -1});
  CHECK(wedge(e({1, 3}), e({2})) == SignedIndex{e({1, 2, 3}), -1});
  CHECK(wedge(e({1}), e({1})).sign == 0);
  CHECK(wedge(e({1}), e({1})).index.is_zero());
  CHECK(wedge(KoszulIndex(), e({2, 3})) == SignedIndex{e({2, 3}), 1});
  CHECK(insertion_count(2, e({1, 3})) == 1);
  CHECK(inversion_count(e({2, 3}), e({1})) == 2);
}

TEST_CASE("wedge signs agree with a sorting oracle, c <= 4") {
  for (std::size_t c = 0; c <= 4; ++c) {
    const auto basis = koszul_basis(c);
    CHECK(basis.size() == (1u << c));
    for (const auto& a : basis)
      for (const auto& b : basis) {
        const SignedIndex w = wedge(a, b);
        if (!a.disjoint(b)) {
          CHECK(w.sign == 0);
          continue;
        }
        std::vector<int> cat = a.elements();
        for (int x : b.elements()) cat.push_back(x);
        CHECK(w.sign == sort_sign(cat));
        CHECK(w.index == KoszulIndex::from_mask(a.mask() | b.mask()));
      }
  }
}

TEST_CASE("Koszul differential of basis elements") {
  auto r = support::ring(Field::rationals(), {"a", "b", "c"}, {}, {"a", "b", "c"});
  const auto terms = koszul_differential(KoszulIndex::from_list({1, 2, 3}), *r);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].coefficient == r->parse("a"));
  CHECK(terms[0].index == KoszulIndex::from_list({2, 3}));
  CHECK(terms[1].coefficient == r->parse("-b"));
  CHECK(terms[2].coefficient == r->parse("c"));
  CHECK(koszul_differential(KoszulIndex(), *r).empty());
}

TEST_CASE("Koszul complex is a complex and resolves R for a regular sequence") {
  auto r = support::ring(Field::rationals(), {"x", "y", "z"}, {}, {"x^2", "y^2", "x*y + z^2"});
  const FreeComplex k = koszul_complex(r);
  CHECK(check_complex(k).pass);
  CHECK(k.rank(0) == 1);
  CHECK(k.rank(1) == 3);
  CHECK(k.rank(2) == 3);
  CHECK(k.rank(3) == 1);
  CHECK(k.twists(3) == std::vector<int>{6});
  const auto rep = check_regular_up_to(r, 8);
  CHECK(rep.pass);
  CHECK_FALSE(rep.first_failure);
}

TEST_CASE("regularity probe finds the first failure") {
  auto r = support::ring(Field::rationals(), {"x", "y"}, {}, {"x^2", "x*y"});
  const auto rep = check_regular_up_to(r, 6);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.first_failure);
  CHECK(*rep.first_failure == std::pair<int, int>{1, 3});  // y*e1 - x*e2
  auto q = support::ring(Field::rationals(), {"x", "y"}, {"y^3"}, {"y"});
  CHECK_FALSE(check_regular_up_to(q, 6).pass);
  auto ok = support::ring(Field::rationals(), {"x", "y"}, {"y^3"}, {"x^2"});
  CHECK(check_regular_up_to(ok, 6).pass);
}
