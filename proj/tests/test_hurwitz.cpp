#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "coxkit/catalog.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/hurwitz.hpp"
#include "coxkit/regularity.hpp"

using namespace coxkit;

namespace {

int product(const GroupTable& T, const std::vector<int>& f) {
  int x = T.identity();
  for (int r : f) x = T.mult(x, r);
  return x;
}

std::vector<int> coxeter_elements(const GroupTable& T, const DegreeData& D) {
  std::vector<int> out;
  for (int w = 0; w < T.order(); ++w) {
    if (is_coxeter_element(T, D, w)) out.push_back(w);
  }
  return out;
}

// Brute force over all k-tuples of reflections.
long long count_tuples(const GroupTable& T, int w, int k) {
  const auto& R = T.reflections();
  long long count = 0;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    int x = T.identity();
    for (int i : idx) x = T.mult(x, R[i]);
    count += x == w ? 1 : 0;
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(R.size())) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("reduced factorizations") {
  const GroupTable A2 = load_group("A2");
  const LengthTable LA = absolute_lengths(A2);
  CHECK(reduced_factorizations(A2, LA, A2.identity()).size() == 1);
  CHECK(reduced_factorizations(A2, LA, A2.identity()).front().factors.empty());
  const int c3 = A2.mult(A2.generators()[0], A2.generators()[1]);
  const auto fa = reduced_factorizations(A2, LA, c3);
  CHECK(fa.size() == 3);
  CHECK(std::is_sorted(fa.begin(), fa.end()));

  const GroupTable I = load_group("G(5,5,2)");
  const LengthTable LI = absolute_lengths(I);
  const int c = I.mult(I.generators()[0], I.generators()[1]);
  const auto fi = reduced_factorizations(I, LI, c);
  CHECK(fi.size() == 5);
  std::set<int> firsts;
  for (const auto& f : fi) {
    CHECK(product(I, f.factors) == c);
    firsts.insert(f.factors.front());
  }
  CHECK(firsts.size() == 5);
}

TEST_CASE("factorization counts match tuple enumeration") {
  for (const char* spec : {"A3", "G(3,1,2)", "G4"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const LengthTable L = absolute_lengths(T);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick(0, T.order() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const int w = pick(rng);
      CHECK(static_cast<long long>(reduced_factorizations(T, L, w).size()) == count_tuples(T, w, L(w)));
    }
  }
}

TEST_CASE("coxeter element factorization counts") {
  // h^n n! / |W| for real groups
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"G(5,5,2)", 5}, {"A3", 16}, {"B3", 27}, {"H3", 50}};
  for (const auto& [spec, count] : expected) {
    CAPTURE(spec);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const LengthTable L = absolute_lengths(T);
    CHECK(reduced_factorizations(T, L, coxeter_elements(T, D).front()).size() == count);
  }
}

TEST_CASE("hurwitz moves") {
  const GroupTable T = load_group("A3");
  const LengthTable L = absolute_lengths(T);
  const auto& g = T.generators();
  const int c = product(T, {g[0], g[1], g[2]});
  const Factorization f{c, {g[0], g[1], g[2]}};
  for (int i = 1; i <= 2; ++i) {
    CHECK(hurwitz_move(T, hurwitz_move(T, f, i, 1), i, -1) == f);
    CHECK(hurwitz_move(T, hurwitz_move(T, f, i, -1), i, 1) == f);
    CHECK(product(T, hurwitz_move(T, f, i, 1).factors) == c);
  }
  // s1 and s3 commute
  const Factorization g13{T.mult(g[0], g[2]), {g[0], g[2]}};
  CHECK(hurwitz_move(T, g13, 1, 1).factors == std::vector<int>{g[2], g[0]});
  const auto moved = hurwitz_move(T, f, 1, 1);
  CHECK(moved.factors[0] == T.conjugate(g[0], g[1]));
  CHECK(moved.factors[1] == g[0]);
  CHECK_THROWS_AS(hurwitz_move(T, f, 0, 1), UsageError);
  CHECK_THROWS_AS(hurwitz_move(T, f, 3, 1), UsageError);
  CHECK_THROWS_AS(hurwitz_move(T, Factorization{T.identity(), {c, c}}, 1, 1), IntegrityError);
  (void)L;
}

TEST_CASE("hurwitz orbits and transitivity") {
  const GroupTable A2 = load_group("A2");
  const int c3 = A2.mult(A2.generators()[0], A2.generators()[1]);
  CHECK(hurwitz_orbit(A2, Factorization{c3, {A2.generators()[0], A2.generators()[1]}}).size() == 3);

  for (const char* spec : {"G(5,5,2)", "A2", "A3", "B3", "G(3,1,2)", "G(3,3,3)", "G4"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const LengthTable L = absolute_lengths(T);
    CHECK(hurwitz_transitive(T, L, T.identity()));
    for (int c : coxeter_elements(T, D)) CHECK(hurwitz_transitive(T, L, c));
  }
}

TEST_CASE("hurwitz moves satisfy the braid relations") {
  std::mt19937 rng(12345);
  for (const char* spec : {"A3", "B3", "G(3,3,3)", "H3"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const LengthTable L = absolute_lengths(T);
    std::uniform_int_distribution<int> pick(0, T.order() - 1);
    int tested = 0;
    while (tested < 20) {
      const int w = pick(rng);
      if (L(w) < 3) continue;
      const auto fs = reduced_factorizations(T, L, w);
      const Factorization& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
      const int k = static_cast<int>(f.factors.size());
      for (int i = 1; i + 1 < k; ++i) {
        for (int dir : {1, -1}) {
          const auto lhs = hurwitz_move(T, hurwitz_move(T, hurwitz_move(T, f, i, dir), i + 1, dir), i, dir);
          const auto rhs = hurwitz_move(T, hurwitz_move(T, hurwitz_move(T, f, i + 1, dir), i, dir), i + 1, dir);
          CHECK(lhs == rhs);
        }
      }
      for (int i = 1; i < k; ++i) {
        for (int j = i + 2; j < k; ++j) {
          CHECK(hurwitz_move(T, hurwitz_move(T, f, i, 1), j, 1) == hurwitz_move(T, hurwitz_move(T, f, j, 1), i, 1));
        }
      }
      ++tested;
    }
  }
}

TEST_CASE("regular generating sets") {
  for (const char* spec : {"A3", "B3", "D4", "H3", "G(3,3,3)", "G(3,1,2)", "G4"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const auto rep = check_regular_generating_set(T, D, T.generators());
    CHECK(rep.regular(T.rank()));
    CHECK(rep.witness_failures.empty());
    CHECK(orderings_zeta_dichotomy(orderings_regularity_profile(T, D, T.generators()), D.coxeter_number));
  }

  const GroupTable T = load_group("D4");
  const DegreeData D = degrees_and_exponents(T);
  const auto& g = T.generators();
  const int t = g[0], s = g[1], u = g[2], v = g[3];
  const int uvu = T.mult(T.mult(u, v), u);
  const auto rep = check_regular_generating_set(T, D, {s, t, uvu, u});
  CHECK(rep.generates_W);
  CHECK_FALSE(rep.all_orderings_coxeter);
  CHECK(std::find(rep.witness_failures.begin(), rep.witness_failures.end(), std::vector<int>{s, uvu, t, u}) !=
        rep.witness_failures.end());
}

TEST_CASE("transpositions from one point") {
  const GroupTable T = load_group("A3");
  const DegreeData D = degrees_and_exponents(T);
  // Three pairwise non-commuting transpositions generating S4 share a point.
  const auto& R = T.reflections();
  auto commute = [&](int a, int b) { return T.mult(a, b) == T.mult(b, a); };
  std::vector<int> star;
  for (std::size_t i = 0; i < R.size() && star.empty(); ++i) {
    for (std::size_t j = i + 1; j < R.size() && star.empty(); ++j) {
      for (std::size_t k = j + 1; k < R.size() && star.empty(); ++k) {
        if (commute(R[i], R[j]) || commute(R[i], R[k]) || commute(R[j], R[k])) continue;
        if (generates(T, {R[i], R[j], R[k]})) star = {R[i], R[j], R[k]};
      }
    }
  }
  REQUIRE(star.size() == 3);
  CHECK(check_regular_generating_set(T, D, star).regular(3));
  const auto g = coxeter_graph_of(T, star);
  CHECK(g.edges().size() == 3);
  CHECK_FALSE(graphs_isomorphic(g, coxeter_graph_of(T, T.generators())));
  CHECK_FALSE(genset_isomorphic(T, T.generators(), star));
  CHECK(genset_isomorphic(T, T.generators(), {T.generators()[2], T.generators()[1], T.generators()[0]}));
}

TEST_CASE("ordering profile in the dihedral group") {
  const GroupTable T = load_group("G(5,5,2)");
  const DegreeData D = degrees_and_exponents(T);
  const auto profile = orderings_regularity_profile(T, D, T.generators());
  REQUIRE(profile.size() == 2);
  REQUIRE_FALSE(profile[0].exponents.empty());
  const int k = profile[0].exponents.front();
  CHECK(std::find(profile[1].exponents.begin(), profile[1].exponents.end(), 5 - k) != profile[1].exponents.end());
}

TEST_CASE("coxeter graphs") {
  const GroupTable I = load_group("G(5,5,2)");
  const int s = I.generators()[0], t = I.generators()[1];
  const int sts = I.mult(I.mult(s, t), s);
  for (const auto& S : {std::vector<int>{s, t}, std::vector<int>{sts, t}}) {
    const auto g = coxeter_graph_of(I, S);
    CHECK(g.labels == std::vector<int>{2, 2});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges().front().second == 5);
    CHECK(verify_generalized_coxeter_presentation(I, S));
  }
  CHECK(graphs_isomorphic(coxeter_graph_of(I, {s, t}), coxeter_graph_of(I, {sts, t})));

  const GroupTable G = load_group("G(3,1,2)");
  const auto g = coxeter_graph_of(G, G.generators());
  std::multiset<int> labels(g.labels.begin(), g.labels.end());
  CHECK(labels == std::multiset<int>{2, 3});
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges().front().second == 4);
  CHECK(verify_generalized_coxeter_presentation(G, G.generators()));

  const GroupTable A = load_group("A3");
  CHECK(verify_generalized_coxeter_presentation(A, A.generators()));
}

TEST_CASE("coxeter generating sets found by search") {
  const GroupTable I = load_group("G(5,5,2)");
  const LengthTable LI = absolute_lengths(I);
  const int s = I.generators()[0], t = I.generators()[1];
  const int c = I.mult(s, t);
  const int c2 = I.mult(c, c);
  const auto w = find_coxeter_genset_for(I, LI, c2, I.generators(), GensetMode::Presentation);
  REQUIRE(w.has_value());
  CHECK(product(I, w->ordering) == c2);
  CHECK(verify_generalized_coxeter_presentation(I, w->genset));

  const GroupTable B = load_group("B3");
  const DegreeData DB = degrees_and_exponents(B);
  const LengthTable LB = absolute_lengths(B);
  for (int cb : coxeter_elements(B, DB)) {
    const auto wb = find_coxeter_genset_for(B, LB, cb, B.generators(), GensetMode::Presentation);
    REQUIRE(wb.has_value());
    CHECK(product(B, wb->ordering) == cb);
    CHECK(graphs_isomorphic(coxeter_graph_of(B, wb->genset), coxeter_graph_of(B, B.generators())));
    break;
  }

  GensetMemo memo;
  int non_coxeter = 0;
  for (int x = 0; x < B.order(); ++x) {
    if (LB(x) != 3 || B.order_of(x) == 6) continue;
    ++non_coxeter;
    CHECK_FALSE(find_coxeter_genset_for(B, LB, x, B.generators(), GensetMode::Presentation, 100000, &memo));
    CHECK_FALSE(is_coxeter_element(B, DB, x));
  }
  CHECK(non_coxeter > 0);
}

TEST_CASE("characterization by generating sets matches Coxeter elements") {
  for (const char* spec : {"G(5,5,2)", "A3", "G(3,1,2)"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const LengthTable L = absolute_lengths(T);
    for (auto mode : {GensetMode::Presentation, GensetMode::Isomorphic}) {
      GensetMemo memo;
      for (int w = 0; w < T.order(); ++w) {
        if (L(w) != T.rank()) continue;
        const bool found = find_coxeter_genset_for(T, L, w, T.generators(), mode, 100000, &memo).has_value();
        CHECK(found == is_coxeter_element(T, D, w));
      }
    }
  }
}
