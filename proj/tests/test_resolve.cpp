#include <doctest.h>

#include <random>

#include "koszul_lift/error.hpp"
#include "koszul_lift/resolve.hpp"
#include "support.hpp"

using namespace koszul_lift;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::parse;
}

}  // namespace

TEST_CASE("residue field over k[x,y]/(x^2,y^2)") {
  auto r = support::ring(Field::rationals(), {"x", "y"}, {}, {"x^2", "y^2"});
  const Resolution res =
      resolve_over_R(r, {{0}, support::mat(*r, {{"x", "y"}})}, 3, 8);
  const FreeComplex& c = res.complex;
  CHECK(res.exact_up_to_degree == 8);
  CHECK(c.over() == Base::R);
  // Poincare series (1+t)^2 / (1-t^2)^2 = 1 / (1-t)^2.
  for (int n = 0; n <= 3; ++n) CHECK(c.rank(n) == static_cast<std::size_t>(n + 1));
  for (int n = 0; n <= 3; ++n)
    for (int t : c.twists(n)) CHECK(t == n);
  CHECK(check_complex(c).pass);
  CHECK(is_minimal(c));
  for (int n = 1; n < 3; ++n)
    for (int d = 0; d <= 8; ++d) CHECK(homology_dim(c, n, d) == 0);
  for (int d = 0; d <= 8; ++d) CHECK(homology_dim(c, 0, d) == (d == 0 ? 1 : 0));
}

TEST_CASE("free module") {
  auto r = support::ring(Field::rationals(), {"x", "y"}, {}, {"x^2", "y^2"});
  const Resolution res = resolve_over_R(r, {{0}, PolyMatrix(1, 0)}, 2, 4);
  CHECK(res.complex.rank(0) == 1);
  CHECK(res.complex.rank(1) == 0);
  CHECK(res.complex.rank(2) == 0);
  // H_0 is R itself: Hilbert function 1, 2, 1.
  const std::vector<long> hilbert = {1, 2, 1, 0, 0};
  for (int d = 0; d <= 4; ++d) CHECK(homology_dim(res.complex, 0, d) == hilbert[d]);
}

TEST_CASE("cyclic module over uv") {
  auto r = support::ring(Field::rationals(), {"u", "v"}, {}, {"u*v"});
  const Resolution res = resolve_over_R(r, {{0}, support::mat(*r, {{"u + v"}})}, 2, 6);
  CHECK(res.complex.rank(1) == 1);
  CHECK(res.complex.rank(2) == 0);
  CHECK(res.complex.differential(1) == support::mat(*r, {{"u + v"}}));

  const Resolution per = resolve_over_R(r, {{0}, support::mat(*r, {{"u"}})}, 4, 8);
  for (int n = 1; n <= 4; ++n)
    CHECK(per.complex.differential(n) == support::mat(*r, {{n % 2 ? "u" : "v"}}));
}

TEST_CASE("redundant relations are dropped") {
  auto r = support::ring(Field::rationals(), {"x", "y"}, {}, {"x^2", "y^2"});
  const Resolution res = resolve_over_R(
      r, {{0}, support::mat(*r, {{"x", "y", "x + y", "x*y", "x^2"}})}, 1, 6);
  CHECK(res.complex.rank(1) == 2);
}

TEST_CASE("errors") {
  auto r = support::ring(Field::rationals(), {"x", "y"}, {}, {"x^2", "y^2"});
  const Presentation k{{0}, support::mat(*r, {{"x", "y"}})};
  CHECK(code_of([&] { resolve_over_R(r, k, 0, 8); }) == Errc::precondition);
  CHECK(code_of([&] { resolve_over_R(r, k, 2, 0); }) == Errc::precondition);
  CHECK(code_of([&] { resolve_over_R(r, k, 3, 2); }) == Errc::degree_bound_too_low);
  CHECK(code_of([&] {
          resolve_over_R(r, {{1, 0}, support::mat(*r, {{"1"}, {"x"}})}, 2, 6);
        }) == Errc::invalid_input);
  CHECK(code_of([&] {
          resolve_over_R(r, {{0}, support::mat(*r, {{"x + y^2"}})}, 2, 6);
        }) == Errc::invalid_input);
  CHECK(code_of([&] { resolve_over_R(r, {{0, 0}, support::mat(*r, {{"x"}})}, 2, 6); }) ==
        Errc::invalid_input);
}

TEST_CASE("random resolutions are minimal complexes exact below the bound") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto r = support::random_ring(1 + trial % 3, rng);
    const FreeComplex c = support::random_resolution(r, 3, rng);
    CHECK(check_complex(c).pass);
    CHECK(is_minimal(c));
    int top = 0;
    for (int n = 0; n <= 3; ++n)
      for (int t : c.twists(n)) top = std::max(top, t);
    for (int n = 1; n < 3; ++n)
      for (int d = 0; d <= 7 - top; ++d) CHECK(homology_dim(c, n, d) == 0);
  }
}
