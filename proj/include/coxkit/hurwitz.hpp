#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxkit/coset.hpp"
#include "coxkit/group.hpp"
#include "coxkit/invariants.hpp"
#include "coxkit/noncrossing.hpp"

namespace coxkit {

struct Factorization {
  int target = 0;
  std::vector<int> factors;  // reflection indices, product = target

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

// All reduced reflection factorizations of w, in lexicographic order.
std::vector<Factorization> reduced_factorizations(const GroupTable& table, const LengthTable& lengths, int w);

// Braid generator sigma_i, 1 <= i < k: dir = +1 sends (r_i, r_{i+1}) to
// (r_i r_{i+1} r_i^-1, r_i); dir = -1 is its inverse.
Factorization hurwitz_move(const GroupTable& table, const Factorization& f, int i, int dir);

std::set<std::vector<int>> hurwitz_orbit(const GroupTable& table, const Factorization& f);
bool hurwitz_transitive(const GroupTable& table, const LengthTable& lengths, int w);

struct GenSetReport {
  std::vector<int> genset;
  bool generates_W = false;
  bool power_conjugacy_ok = false;
  bool all_orderings_coxeter = false;
  std::vector<std::vector<int>> witness_failures;  // orderings whose product is not a Coxeter element
  std::vector<int> unmatched_reflections;          // reflections not conjugate to a power of a member
  bool regular(int rank) const {
    return static_cast<int>(genset.size()) == rank && generates_W && power_conjugacy_ok && all_orderings_coxeter;
  }
};

// Orderings are scanned only for n <= 6; larger sets raise ResourceError.
GenSetReport check_regular_generating_set(const GroupTable& table, const DegreeData& degrees, const std::vector<int>& S);

struct OrderingRegularity {
  std::vector<int> ordering;
  int product = 0;
  std::vector<int> exponents;  // k with the product zeta_h^k-regular
};
std::vector<OrderingRegularity> orderings_regularity_profile(const GroupTable& table, const DegreeData& degrees,
                                                             const std::vector<int>& S);
// Every ordering's product is zeta- or zeta^-1-regular, where zeta = zeta_h^k
// for the least k of the sorted ordering.
bool orderings_zeta_dichotomy(const std::vector<OrderingRegularity>& profile, int h);

struct CoxeterGraph {
  std::vector<int> generators;         // element indices
  std::vector<int> labels;             // p_s
  std::vector<std::vector<int>> m;     // m[s][t], 1 on the diagonal

  std::vector<std::pair<std::pair<int, int>, int>> edges() const;  // m >= 3
};

// Throws NotCoxeterLike when some pair has no alternating relation.
CoxeterGraph coxeter_graph_of(const GroupTable& table, const std::vector<int>& S);
// Bijection of vertices preserving labels, or empty.
std::vector<int> graph_isomorphism(const CoxeterGraph& a, const CoxeterGraph& b);
bool graphs_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b);

Presentation coxeter_presentation(const CoxeterGraph& g);
// Coset enumeration over the generalized Coxeter presentation of S, with at
// most 50|W| cosets; true iff the presented order equals |W|.
bool verify_generalized_coxeter_presentation(const GroupTable& table, const std::vector<int>& S);

// Some bijection S0 -> S extends to an automorphism of W (exact, by walking
// the Cayley graph of S0).
bool genset_isomorphic(const GroupTable& table, const std::vector<int>& S0, const std::vector<int>& S);

enum class GensetMode {
  Presentation,  // S presents W as a generalized Coxeter system
  Isomorphic,    // S generates W and is isomorphic to S0
};

struct GensetWitness {
  std::vector<int> genset;    // sorted
  std::vector<int> ordering;  // product equals the target
};

// Subsets of reflections in lexicographic order, orderings in lexicographic
// order; the first witness wins. The budget bounds the number of candidate
// sets examined. A memo, when given, caches per-set verdicts across calls
// with the same S0 and mode.
using GensetMemo = std::map<std::vector<int>, bool>;
std::optional<GensetWitness> find_coxeter_genset_for(const GroupTable& table, const LengthTable& lengths, int c,
                                                     const std::vector<int>& S0, GensetMode mode,
                                                     long long budget = 100000, GensetMemo* memo = nullptr);

}  // namespace coxkit
