#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "coxkit/catalog.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/noncrossing.hpp"
#include "coxkit/regularity.hpp"

using namespace coxkit;

namespace {

// Permutation sigma with M e_j = e_sigma(j), read off a permutation matrix.
std::vector<int> as_permutation(const ExactMatrix& M) {
  const int n = M.dim();
  std::vector<int> p(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!M.at(i, j).is_zero()) p[j] = i;
    }
  }
  return p;
}

int cycle_count(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

std::vector<int> coxeter_elements(const GroupTable& T, const DegreeData& D) {
  std::vector<int> out;
  for (int w = 0; w < T.order(); ++w) {
    if (is_coxeter_element(T, D, w)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("absolute length in the symmetric group is n minus cycles") {
  const GroupTable T = load_group("G(1,1,4)");
  const LengthTable L = absolute_lengths(T);
  REQUIRE(T.order() == 24);
  for (int w = 0; w < T.order(); ++w) CHECK(L(w) == 4 - cycle_count(as_permutation(T.element(w))));
  CHECK(L.max_length() == 3);
}

TEST_CASE("length table invariants") {
  for (const char* spec : {"G(5,5,2)", "B3", "G(3,1,2)", "G4", "G(3,3,3)"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const LengthTable L = absolute_lengths(T);
    CHECK(L(T.identity()) == 0);
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> pick(0, T.order() - 1);
    for (int w = 0; w < T.order(); ++w) {
      CHECK((L(w) == 1) == T.is_reflection(w));
      CHECK(L(w) == L(T.inv(w)));
      CHECK(L(w) >= T.rank() - T.fixed_dim(w));
      const int u = pick(rng);
      CHECK(std::abs(L(T.mult(u, w)) - L(u)) <= L(w));
    }
  }
}

TEST_CASE("dihedral absolute order") {
  const GroupTable T = load_group("G(5,5,2)");
  const LengthTable L = absolute_lengths(T);
  const int s = T.generators()[0], t = T.generators()[1];
  const int c = T.mult(s, t);
  const int sts = T.mult(c, s);
  CHECK(L(c) == 2);
  CHECK(leq_abs(T, L, t, c));
  CHECK(leq_abs(T, L, sts, T.mult(c, c)));
  CHECK(T.mult(sts, t) == T.mult(c, c));
  for (int w = 0; w < T.order(); ++w) {
    CHECK(leq_abs(T, L, T.identity(), w));
    CHECK(leq_abs(T, L, w, w));
  }
}

TEST_CASE("absolute order is a partial order") {
  for (const char* spec : {"G(5,5,2)", "A3", "G(3,1,2)", "G4"}) {
    const std::string name = spec;
    CAPTURE(name);
    const GroupTable T = load_group(spec);
    const LengthTable L = absolute_lengths(T);
    const int n = T.order();
    std::vector<char> R(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) R[static_cast<std::size_t>(x) * n + y] = leq_abs(T, L, x, y) ? 1 : 0;
    }
    auto rel = [&](int x, int y) { return R[static_cast<std::size_t>(x) * n + y] != 0; };
    int bad = 0;
    for (int x = 0; x < n; ++x) {
      bad += rel(x, x) ? 0 : 1;
      for (int y = 0; y < n; ++y) {
        if (!rel(x, y)) continue;
        if (x != y && rel(y, x)) ++bad;
        for (int z = 0; z < n; ++z) {
          if (rel(y, z) && !rel(x, z)) ++bad;
        }
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("catalan numbers") {
  CHECK(catalan_number({{2, 5}, {1, 4}, 5}) == 7);
  CHECK(catalan_number({{2, 6, 10}, {1, 5, 9}, 10}) == 32);
  CHECK(catalan_number({{2, 3, 4}, {1, 2, 3}, 4}) == 14);
  CHECK(catalan_number({{2, 4, 6}, {1, 3, 5}, 6}) == 20);
  CHECK(catalan_number({{2, 12, 20, 30}, {1, 11, 19, 29}, 30}) == 280);
  CHECK_THROWS_AS(catalan_number({{2, 5}, {1, 4}, 4}), IntegrityError);
}

TEST_CASE("noncrossing lattices") {
  const std::map<std::string, int> sizes = {{"G(5,5,2)", 7}, {"A2", 5},       {"A3", 14},      {"B3", 20},
                                            {"H3", 32},      {"G(3,1,2)", 6}, {"G(3,3,3)", 18}, {"G4", 5}};
  for (const auto& [spec, size] : sizes) {
    CAPTURE(spec);
    const GroupTable T = load_group(spec);
    const DegreeData D = degrees_and_exponents(T);
    const LengthTable L = absolute_lengths(T);
    CHECK(catalan_number(D) == size);
    const auto cox = coxeter_elements(T, D);
    REQUIRE_FALSE(cox.empty());
    const NCLattice P0 = nc_interval(T, L, cox.front());
    for (int c : cox) {
      const NCLattice P = nc_interval(T, L, c);
      CHECK(P.size() == size);
      CHECK(P.members.front() == T.identity());
      CHECK(P.rank.back() == T.rank());
      CHECK(P.position(c) == P.size() - 1);
      CHECK(is_palindromic(P.rank_vector()));
      if (T.class_of(c) == T.class_of(cox.front()) && c != cox.front()) continue;
      CHECK(is_lattice(P));
      CHECK(is_self_dual(T, P));
      CHECK(poset_isomorphic(P0, P));
    }
  }
}

TEST_CASE("dihedral lattices for non-conjugate Coxeter elements") {
  const GroupTable T = load_group("G(5,5,2)");
  const LengthTable L = absolute_lengths(T);
  const int c = T.mult(T.generators()[0], T.generators()[1]);
  const int c2 = T.mult(c, c);
  const NCLattice P = nc_interval(T, L, c);
  const NCLattice Q = nc_interval(T, L, c2);
  CHECK(P.rank_vector() == std::vector<int>{1, 5, 1});
  CHECK(T.class_of(c) != T.class_of(c2));
  const auto iso = poset_isomorphism(P, Q);
  REQUIRE(iso.size() == 7);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) CHECK(P.leq(i, j) == Q.leq(iso[i], iso[j]));
  }
  CHECK(P.covers.size() == 10);
}

TEST_CASE("order matrix agrees with absolute order") {
  const GroupTable T = load_group("B3");
  const DegreeData D = degrees_and_exponents(T);
  const LengthTable L = absolute_lengths(T);
  const NCLattice P = nc_interval(T, L, coxeter_elements(T, D).front());
  for (int i = 0; i < P.size(); ++i) {
    for (int j = 0; j < P.size(); ++j) CHECK(P.leq(i, j) == leq_abs(T, L, P.members[i], P.members[j]));
  }
  for (const auto& [lo, hi] : P.covers) {
    CHECK(L(hi) == L(lo) + 1);
    CHECK(leq_abs(T, L, lo, hi));
  }
}

TEST_CASE("non-isomorphic posets are told apart") {
  const GroupTable A = load_group("A3");
  const GroupTable B = load_group("B3");
  const NCLattice PA = nc_interval(A, absolute_lengths(A), coxeter_elements(A, degrees_and_exponents(A)).front());
  const NCLattice PB = nc_interval(B, absolute_lengths(B), coxeter_elements(B, degrees_and_exponents(B)).front());
  CHECK(poset_isomorphism(PA, PB).empty());
  CHECK(poset_isomorphic(PA, PA));
}

TEST_CASE("intervals below non-Coxeter elements") {
  const GroupTable T = load_group("B3");
  const LengthTable L = absolute_lengths(T);
  const int r = T.reflections().front();
  const NCLattice P = nc_interval(T, L, r);
  CHECK(P.size() == 2);
  CHECK(is_lattice(P));
  CHECK(nc_interval(T, L, T.identity()).size() == 1);
}

TEST_CASE("palindromes") {
  CHECK(is_palindromic({1, 6, 6, 1}));
  CHECK(is_palindromic({}));
  CHECK_FALSE(is_palindromic({1, 2}));
}

TEST_CASE("text export") {
  const GroupTable T = load_group("G(5,5,2)");
  const LengthTable L = absolute_lengths(T);
  const NCLattice P = nc_interval(T, L, T.mult(T.generators()[0], T.generators()[1]));
  const std::string text = nc_to_text(P);
  int lines = 0;
  for (char ch : text) lines += ch == '\n' ? 1 : 0;
  CHECK(lines == 2 + 7 + 10);
}
