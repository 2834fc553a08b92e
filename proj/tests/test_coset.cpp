#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxkit/coset.hpp"
#include "coxkit/errors.hpp"

using namespace coxkit;

namespace {

Word power(int g, int e) { return Word(static_cast<std::size_t>(e), g); }

Word alternate(int a, int b, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Presentation symmetric(int n) {
  Presentation p;
  p.generators = n - 1;
  for (int i = 1; i < n; ++i) {
    p.relators.push_back(power(i, 2));
    for (int j = i + 1; j < n; ++j) p.relators.push_back(alternate(i, j, j == i + 1 ? 6 : 4));
  }
  return p;
}

}  // namespace

TEST_CASE("dihedral groups") {
  for (int m = 2; m <= 12; ++m) {
    Presentation p{2, {power(1, 2), power(2, 2), alternate(1, 2, 2 * m)}};
    CHECK(presented_order(p, 1000) == 2 * m);
    CHECK(coset_enumerate(p, {Word{1}}, 1000) == m);
  }
}

TEST_CASE("symmetric groups from Coxeter presentations") {
  CHECK(presented_order(symmetric(3), 1000) == 6);
  CHECK(presented_order(symmetric(4), 1000) == 24);
  CHECK(presented_order(symmetric(5), 10000) == 120);
  CHECK(coset_enumerate(symmetric(5), {Word{1}, Word{2}, Word{3}}, 10000) == 5);
}

TEST_CASE("cyclic and quaternion groups") {
  CHECK(presented_order(Presentation{1, {power(1, 7)}}, 100) == 7);
  CHECK(presented_order(Presentation{1, {Word{1}}}, 100) == 1);
  // <a, b | a^4, a^2 b^-2, b^-1 a b a>
  const Presentation q8{2, {power(1, 4), concat(power(1, 2), Word{-2, -2}), Word{-2, 1, 2, 1}}};
  CHECK(presented_order(q8, 1000) == 8);
  CHECK(coset_enumerate(q8, {Word{1}}, 1000) == 2);
}

TEST_CASE("braid relation with unequal generator orders") {
  // s^3, t^2, (st)^2 (ts)^-2 style relation of G(3,1,2) with m = 4
  const Presentation p{2, {power(1, 3), power(2, 2), concat(alternate(1, 2, 4), Word{-1, -2, -1, -2})}};
  CHECK(presented_order(p, 10000) == 18);
}

TEST_CASE("infinite presentations exhaust the coset cap") {
  CHECK_THROWS_AS(presented_order(Presentation{2, {}}, 500), ResourceError);
  CHECK_THROWS_AS(presented_order(Presentation{2, {power(1, 2), power(2, 2)}}, 500), ResourceError);
}
