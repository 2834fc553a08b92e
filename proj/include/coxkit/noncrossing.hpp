#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxkit/group.hpp"
#include "coxkit/invariants.hpp"

namespace coxkit {

// Absolute length: distance from the identity in the Cayley graph of (W, R).
struct LengthTable {
  std::vector<int> len;
  int operator()(int w) const { return len[w]; }
  int max_length() const;
};

LengthTable absolute_lengths(const GroupTable& table);

// x <=_R y iff l(x) + l(x^-1 y) = l(y).
bool leq_abs(const GroupTable& table, const LengthTable& lengths, int x, int y);

// The interval [1, c] in absolute order. Positions 0..size()-1 index
// members; members are sorted by (rank, element index).
struct NCLattice {
  int coxeter_element = 0;
  std::vector<int> members;
  std::vector<int> rank;                    // by position
  std::vector<std::pair<int, int>> covers;  // element indices (lower, upper), sorted
  std::vector<char> order;                  // size*size, order[i*size+j] = member i <= member j

  int size() const { return static_cast<int>(members.size()); }
  bool leq(int i, int j) const { return order[static_cast<std::size_t>(i) * members.size() + j] != 0; }
  int position(int element) const;  // -1 when not a member
  std::vector<int> rank_vector() const;
};

NCLattice nc_interval(const GroupTable& table, const LengthTable& lengths, int c);

// prod (d_i + h) / d_i; IntegrityError unless it is an integer.
long long catalan_number(const DegreeData& degrees);

bool is_lattice(const NCLattice& P);
bool is_self_dual(const GroupTable& table, const NCLattice& P);
bool is_palindromic(const std::vector<int>& v);

// Rank- and order-preserving bijection, or empty when none exists.
std::vector<int> poset_isomorphism(const NCLattice& P, const NCLattice& Q);
bool poset_isomorphic(const NCLattice& P, const NCLattice& Q);

// "index rank" lines for members, then "lower upper" lines for covers.
std::string nc_to_text(const NCLattice& P);

// Elements of the given absolute length and order with no primitive
// eig_order-th root of unity as an eigenvalue.
std::vector<int> elements_without_eigenvalue(const GroupTable& table, const LengthTable& lengths, int length,
                                             int order, int eig_order);

}  // namespace coxkit
