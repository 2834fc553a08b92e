#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "coxkit/catalog.hpp"
#include "coxkit/invariants.hpp"

using namespace coxkit;

namespace {

int totient_brute(int j) {
  int c = 0;
  for (int k = 1; k <= j; ++k) c += std::gcd(k, j) == 1 ? 1 : 0;
  return c;
}

// For real groups: d is regular iff it divides as many degrees as
// codegrees, with codegrees d_i - 2.
std::vector<int> real_regular_numbers(const std::vector<int>& degrees) {
  std::vector<int> out;
  const int top = *std::max_element(degrees.begin(), degrees.end());
  for (int d = 1; d <= 2 * top; ++d) {
    int a = 0, b = 0;
    for (int x : degrees) {
      a += x % d == 0 ? 1 : 0;
      b += (x - 2) % d == 0 ? 1 : 0;
    }
    if (a == b) out.push_back(d);
  }
  return out;
}

struct Known {
  const char* spec;
  std::vector<int> degrees;
  int field_degree;
};

const std::vector<Known>& known() {
  static const std::vector<Known> k = {
      {"I2(5)", {2, 5}, 2},      {"A2", {2, 3}, 1},          {"A3", {2, 3, 4}, 1},   {"B3", {2, 4, 6}, 1},
      {"D4", {2, 4, 4, 6}, 1},   {"H3", {2, 6, 10}, 2},      {"G(3,3,3)", {3, 3, 6}, 2},
      {"G(3,1,2)", {3, 6}, 2},   {"G(4,2,2)", {4, 4}, 2},    {"G4", {4, 6}, 2},      {"G(6,6,2)", {2, 6}, 1},
      {"G(4,1,2)", {4, 8}, 2},   {"G(5,1,1)", {5}, 4},
  };
  return k;
}

}  // namespace

TEST_CASE("euler totient") {
  CHECK(phi(1) == 1);
  CHECK(phi(5) == 4);
  CHECK(phi(10) == 4);
  for (int j = 1; j <= 200; ++j) CHECK(phi(j) == totient_brute(j));
  CHECK(units_mod(12) == std::vector<int>{1, 5, 7, 11});
  CHECK(units_mod(1) == std::vector<int>{0});
}

TEST_CASE("phi_W counts exponents coprime to j") {
  CHECK(phi_W(5, {1, 4}) == 2);
  CHECK(phi_W(10, {1, 5, 9}) == 2);
  CHECK(phi_W(6, {1, 3, 5}) == 2);
  CHECK(phi_W(30, {1, 11, 19, 29}) == 4);
  CHECK(phi_W(1, {1, 2, 3}) == 1);
}

TEST_CASE("degrees, exponents and sanity identities") {
  for (const auto& k : known()) {
    const std::string name = k.spec;
    CAPTURE(name);
    const GroupTable T = load_group(k.spec);
    const DegreeData D = degrees_and_exponents(T);
    CHECK(D.degrees == k.degrees);
    CHECK(D.coxeter_number == k.degrees.back());
    long long prod = 1;
    int sum = 0;
    for (std::size_t i = 0; i < D.degrees.size(); ++i) {
      CHECK(D.exponents[i] == D.degrees[i] - 1);
      prod *= D.degrees[i];
      sum += D.exponents[i];
    }
    CHECK(prod == T.order());
    CHECK(sum == static_cast<int>(T.reflections().size()));
  }
}

TEST_CASE("fixed space polynomial coefficients") {
  const GroupTable T = load_group("B3");
  const auto P = fixed_space_polynomial(T);
  REQUIRE(P.size() == 4);
  CHECK(P[3] == 1);
  CHECK(P[2] == 9);
  CHECK(std::accumulate(P.begin(), P.end(), 0LL) == 48);
  // (t + 1)(t + 3)(t + 5)
  CHECK(P == std::vector<long long>{15, 23, 9, 1});
}

TEST_CASE("field of definition") {
  for (const auto& k : known()) {
    const std::string name = k.spec;
    CAPTURE(name);
    const GroupTable T = load_group(k.spec);
    const FieldData F = field_of_definition(T);
    CHECK(F.field_degree == k.field_degree);
    CHECK(F.ambient_conductor == T.conductor());
    CHECK(phi(F.ambient_conductor) == F.field_degree * static_cast<int>(F.trace_stabilizer.size()));
    const std::set<int> S(F.trace_stabilizer.begin(), F.trace_stabilizer.end());
    for (int a : S) {
      for (int b : S) CHECK(S.count(static_cast<int>(1LL * a * b % F.ambient_conductor)) == 1);
    }
  }
}

TEST_CASE("G_W stabilizers") {
  CHECK(gw_stabilizer({1, 4}, 5) == std::vector<int>{1, 4});
  CHECK(gw_stabilizer({1, 5, 9}, 10) == std::vector<int>{1, 9});
  CHECK(gw_stabilizer({1, 3, 5}, 6) == std::vector<int>{1, 5});
  CHECK(gw_stabilizer({1, 11, 19, 29}, 30) == std::vector<int>{1, 11, 19, 29});
  CHECK(gw_matches_exponents({1, 4}, 5));
  CHECK(gw_matches_exponents({1, 3, 5}, 6));
  CHECK(gw_matches_exponents({1, 11, 19, 29}, 30));
  CHECK(gw_matches_exponents({1, 5, 9}, 10));
}

TEST_CASE("well generation") {
  CHECK(is_well_generated(load_group("I2(5)")));
  CHECK(is_well_generated(load_group("G(3,3,3)")));
  CHECK(is_well_generated(load_group("G4")));
  CHECK_FALSE(is_well_generated(load_group("G(4,2,2)")));
  CHECK_FALSE(is_well_generated(load_group("G(6,3,2)")));
}

TEST_CASE("regular numbers of real groups") {
  for (const char* spec : {"I2(5)", "A2", "A3", "B3", "H3", "D4", "G(6,6,2)"}) {
    CAPTURE(spec);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const auto reg = regular_numbers(T, D);
    CHECK(reg == real_regular_numbers(D.degrees));
    CHECK(reg.back() == D.coxeter_number);
  }
  CHECK(regular_numbers(load_group("I2(5)"), {{2, 5}, {1, 4}, 5}) == std::vector<int>{1, 2, 5});
}

TEST_CASE("field degree equals phi(h) / phi_W(h)") {
  for (const char* spec : {"I2(5)", "A3", "B3", "D4", "H3", "G(3,3,3)", "G(3,1,2)", "G4", "G(4,1,2)"}) {
    CAPTURE(spec);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const int h = D.coxeter_number;
    CHECK(field_of_definition(T).field_degree * phi_W(h, D.exponents) == phi(h));
  }
}
