#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "coxkit/catalog.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/group.hpp"

using namespace coxkit;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Mpn {
  int m, p, n;
};

const Mpn kSmall[] = {{1, 1, 3}, {2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {3, 3, 3}, {3, 1, 2}, {4, 2, 2},
                      {4, 4, 3}, {5, 5, 2}, {6, 3, 2}, {2, 2, 4}, {3, 1, 3}, {6, 2, 2}, {4, 1, 1}};

}  // namespace

TEST_CASE("orders and reflection counts of G(m,p,n)") {
  for (const auto& g : kSmall) {
    CAPTURE(g.m);
    CAPTURE(g.p);
    CAPTURE(g.n);
    const GroupTable T = GroupTable::enumerate(imprimitive_generators(g.m, g.p, g.n));
    CHECK(T.order() == ipow(g.m, g.n) * factorial(g.n) / g.p);
    const long long refl = static_cast<long long>(g.m) * g.n * (g.n - 1) / 2 + g.n * (g.m / g.p - 1);
    CHECK(static_cast<long long>(T.reflections().size()) == refl);
    const long long hyper = static_cast<long long>(g.m) * g.n * (g.n - 1) / 2 + (g.m / g.p > 1 ? g.n : 0);
    CHECK(static_cast<long long>(T.hyperplanes().size()) == hyper);
  }
}

TEST_CASE("G(e,e,n) has order e^(n-1) n!") {
  for (int e = 2; e <= 5; ++e) {
    for (int n = 2; n <= 3; ++n) {
      const GroupTable T = GroupTable::enumerate(imprimitive_generators(e, e, n));
      CHECK(T.order() == ipow(e, n - 1) * factorial(n));
    }
  }
}

TEST_CASE("table multiplication agrees with matrix multiplication") {
  std::mt19937 rng(42);
  for (const char* spec : {"B3", "G(3,1,2)", "H3"}) {
    const GroupTable T = load_group(spec);
    std::uniform_int_distribution<int> pick(0, T.order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(T.find(T.element(a) * T.element(b)) == T.mult(a, b));
      CHECK(T.mult(T.mult(a, b), c) == T.mult(a, T.mult(b, c)));
      CHECK(T.mult(a, T.inv(a)) == T.identity());
      CHECK(T.order_of(a) == matrix_order(T.element(a), 1000));
      CHECK(T.power(a, T.order_of(a)) == T.identity());
      CHECK(T.power(a, -1) == T.inv(a));
      int x = T.identity();
      for (int k : T.word(a)) x = T.mult(x, T.generators()[k]);
      CHECK(x == a);
    }
  }
}

TEST_CASE("large groups use the word walk consistently") {
  const GroupTable T = load_group("H4");
  CHECK_FALSE(T.has_full_table());
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(0, T.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = pick(rng), b = pick(rng);
    CHECK(T.find(T.element(a) * T.element(b)) == T.mult(a, b));
    CHECK(T.mult(T.inv(a), a) == T.identity());
  }
}

TEST_CASE("conjugacy classes partition the group") {
  for (const char* spec : {"A3", "D4", "G(3,3,3)", "G4"}) {
    const GroupTable T = load_group(spec);
    std::vector<int> seen(static_cast<std::size_t>(T.order()), 0);
    for (std::size_t c = 0; c < T.classes().size(); ++c) {
      const auto& cls = T.classes()[c];
      CHECK(T.order() % static_cast<int>(cls.members.size()) == 0);
      CHECK(cls.representative == cls.members.front());
      for (int x : cls.members) {
        ++seen[x];
        CHECK(T.class_of(x) == static_cast<int>(c));
        for (int g : T.generators()) CHECK(T.class_of(T.conjugate(g, x)) == static_cast<int>(c));
      }
    }
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("hyperplane stabilizers") {
  for (const char* spec : {"G(4,1,2)", "G(3,1,2)", "G4", "B3"}) {
    const GroupTable T = load_group(spec);
    for (const auto& hc : T.hyperplanes()) {
      CHECK(hc.e_H == static_cast<int>(hc.reflections.size()) + 1);
      CHECK(pointwise_stabilizer_order(T, hc.hyperplane) == hc.e_H);
      CHECK(hc.hyperplane.dim() == T.rank() - 1);
      for (int r : hc.reflections) CHECK(T.hyperplane_of(r) >= 0);
    }
  }
  const GroupTable T = load_group("G(4,1,2)");
  std::multiset<int> eh;
  for (const auto& hc : T.hyperplanes()) eh.insert(hc.e_H);
  CHECK(eh.count(4) == 2);
  CHECK(eh.count(2) == 4);
}

TEST_CASE("irreducibility by character norm") {
  CHECK(is_irreducible(load_group("A3")));
  CHECK(is_irreducible(load_group("G4")));
  CHECK_FALSE(is_irreducible(load_group("G(1,1,4)")));
  CHECK_FALSE(is_irreducible(load_group("G(2,2,2)")));
  CHECK(is_irreducible(GroupTable::enumerate(imprimitive_generators(2, 1, 1))));
}

TEST_CASE("subgroup closure") {
  const GroupTable T = load_group("B3");
  const auto& g = T.generators();
  CHECK(generates(T, g));
  CHECK(subgroup_closure(T, {g[1], g[2]}).size() == 6);
  CHECK(subgroup_closure(T, {g[0]}).size() == 2);
  CHECK(subgroup_closure(T, {}).size() == 1);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(load_group("H4", 1000), ResourceError);
  CHECK_NOTHROW(load_group("H3", 120));
}

TEST_CASE("root system realisations") {
  CHECK(load_group("A3").order() == 24);
  CHECK(GroupTable::enumerate(root_system_generators({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}})).order() == 48);
  CHECK(GroupTable::enumerate(root_system_generators({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}})).order() == 120);
  CHECK(GroupTable::enumerate(root_system_generators({{1, 6}, {6, 1}})).order() == 12);
  CHECK(GroupTable::enumerate(root_system_generators({{1, 3}, {3, 1}})).entry_conductor() == 1);
  CHECK_THROWS_AS(root_system_generators({{1, 1}, {1, 1}}), UsageError);
}

TEST_CASE("group specifications") {
  CHECK(load_group("I2(5)").order() == 10);
  CHECK(load_group(" G(5, 5, 2) ").order() == 10);
  CHECK(load_group("D4").order() == 192);
  CHECK(resolve_group_spec("H3").source == "catalog");
  CHECK_THROWS_AS(resolve_group_spec("Q7"), ParseError);
  CHECK_THROWS_AS(resolve_group_spec(""), ParseError);
  CHECK_THROWS_AS(resolve_group_spec("G(4,3,2)"), UsageError);
  CHECK_THROWS_AS(resolve_group_spec("missing_file.json"), ParseError);
}

TEST_CASE("group file round trip and validation") {
  const GroupDefinition g4 = resolve_group_spec("G4");
  const std::string text = group_definition_to_json(g4);
  const GroupDefinition back = parse_group_definition(text, "round trip");
  CHECK(back.generators == g4.generators);
  CHECK(back.expected.order == g4.expected.order);

  CHECK_THROWS_AS(parse_group_definition("{", "broken"), ParseError);
  CHECK_THROWS_AS(parse_group_definition(R"({"rank": 1, "conductor": 2, "generators": [[[[[0, 1, 0]]]]]})", "zero"),
                  ParseError);
  CHECK_THROWS_AS(parse_group_definition(R"({"rank": 2, "conductor": 1, "generators": [[[[[0, 1, 1]]]]]})", "shape"),
                  ParseError);

  GroupDefinition wrong = g4;
  wrong.expected.order = 25;
  CHECK_THROWS_AS(build_group(wrong), IntegrityError);
  wrong = g4;
  wrong.expected.degrees = std::vector<int>{2, 12};
  CHECK_THROWS_AS(build_group(wrong), IntegrityError);
}

TEST_CASE("catalog directory override") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "coxkit_catalog_test";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "Z3.json");
    f << R"({"name": "Z3", "rank": 1, "conductor": 3, "generators": [[[[[1, 1, 1]]]]],
            "expected": {"order": 3, "reflections": 2, "degrees": [3]}})";
  }
  setenv("COXKIT_DATA", dir.string().c_str(), 1);
  CHECK(data_directory() == dir.string());
  const GroupTable T = load_group("Z3");
  CHECK(T.order() == 3);
  CHECK_THROWS_AS(resolve_group_spec("H3"), ParseError);
  unsetenv("COXKIT_DATA");
  CHECK(load_group("H3").order() == 120);
  fs::remove_all(dir);
}
