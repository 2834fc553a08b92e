#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/linalg.hpp"

namespace coxkit {

constexpr int kDefaultGroupCap = 100000;

struct HyperplaneClass {
  Subspace hyperplane;          // fixed space of its reflections
  ExactVector form;             // H = { v : form . v = 0 }, leading entry 1
  ExactVector form_ambient;     // form promoted to the ambient conductor
  int e_H = 1;                  // order of the pointwise stabilizer
  std::vector<int> reflections; // reflections fixing H pointwise
};

struct ConjugacyClass {
  int representative = 0;  // least index in the class
  std::vector<int> members;
};

// A finite matrix group enumerated by breadth-first search from the
// identity, multiplying on the right by generators in the given order.
//
// Elements keep the conductor of the generator entries; the ambient
// conductor L = lcm(entry conductor, exponent) is used for eigenvalue work.
class GroupTable {
 public:
  static GroupTable enumerate(const std::vector<ExactMatrix>& generators, int cap = kDefaultGroupCap,
                              std::string label = "");

  const std::string& label() const noexcept { return label_; }
  int rank() const noexcept { return n_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int entry_conductor() const noexcept { return N_; }
  int conductor() const noexcept { return L_; }
  int exponent() const noexcept { return exponent_; }

  const ExactMatrix& element(int i) const { return elements_[i]; }
  ExactMatrix element_ambient(int i) const;
  int identity() const noexcept { return 0; }
  // Index of the given matrix, or -1. Matrices over another conductor are
  // compared after moving them to the entry conductor when possible.
  int find(const ExactMatrix& m) const;

  int mult(int i, int j) const;
  int inv(int i) const { return inv_[i]; }
  int power(int i, long long e) const;
  int conjugate(int g, int x) const { return mult(mult(g, x), inv_[g]); }
  int order_of(int i) const { return order_[i]; }
  int parent(int i) const { return parent_[i]; }
  int parent_generator(int i) const { return parent_gen_[i]; }
  // Product of generators (by generator position) equal to element i.
  std::vector<int> word(int i) const;

  const std::vector<ExactMatrix>& generator_matrices() const noexcept { return gen_matrices_; }
  const std::vector<int>& generators() const noexcept { return gen_index_; }
  int right_by_generator(int i, int k) const { return rgen_[static_cast<std::size_t>(i) * gen_index_.size() + k]; }
  int left_by_generator(int k, int i) const { return lgen_[k][i]; }

  const std::vector<int>& reflections() const noexcept { return reflections_; }
  bool is_reflection(int i) const { return is_reflection_[i] != 0; }
  const std::vector<HyperplaneClass>& hyperplanes() const noexcept { return hyperplanes_; }
  // Hyperplane index of a reflection, -1 otherwise.
  int hyperplane_of(int i) const { return hyperplane_of_[i]; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  int class_of(int i) const { return class_of_[i]; }
  int fixed_dim(int i) const { return fixed_dim_[class_of_[i]]; }
  const CycloNum& trace_of(int i) const { return trace_[class_of_[i]]; }
  const ExactMatrix& class_rep_ambient(int c) const { return rep_ambient_[c]; }

  bool has_full_table() const noexcept { return !table_.empty(); }

 private:
  void build_multiplication();
  void build_inverses();
  void build_classes();
  void build_class_data();
  void build_hyperplanes();

  std::string label_;
  int n_ = 0;
  int N_ = 1;
  int L_ = 1;
  int exponent_ = 1;

  std::vector<ExactMatrix> gen_matrices_;
  std::vector<int> gen_index_;
  std::vector<int> gen_order_;
  std::vector<ExactMatrix> elements_;
  std::vector<std::pair<std::size_t, int>> hash_index_;  // sorted by hash
  std::vector<int> parent_;
  std::vector<int> parent_gen_;
  std::vector<std::uint32_t> word_offset_;
  std::vector<std::uint8_t> word_gens_;
  std::vector<int> rgen_;
  std::vector<std::vector<int>> lgen_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> order_;

  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> fixed_dim_;
  std::vector<CycloNum> trace_;
  std::vector<ExactMatrix> rep_ambient_;

  std::vector<int> reflections_;
  std::vector<char> is_reflection_;
  std::vector<HyperplaneClass> hyperplanes_;
  std::vector<int> hyperplane_of_;
};

// Elements of W fixing H pointwise, counted by brute force.
int pointwise_stabilizer_order(const GroupTable& table, const Subspace& H);

// Character-norm test (1/|W|) sum |tr w|^2 = 1, summed class-wise.
bool is_irreducible(const GroupTable& table);

// Closure of the given indices under multiplication, as a sorted index list.
std::vector<int> subgroup_closure(const GroupTable& table, const std::vector<int>& gens);
bool generates(const GroupTable& table, const std::vector<int>& gens);

}  // namespace coxkit
