#pragma once

#include <vector>

#include "coxkit/group.hpp"
#include "coxkit/invariants.hpp"

namespace coxkit {

// The root of unity zeta_order^exponent.
struct RegEig {
  int order = 1;
  int exponent = 0;
  int eigenspace_dim = 0;

  friend bool operator==(const RegEig&, const RegEig&) = default;
};

struct RegularClass {
  int class_index = 0;
  int representative = 0;
  std::vector<RegEig> eigenvalues;  // primitive d-th roots it is regular for
};

struct RegularClassSet {
  int order = 1;
  std::vector<RegularClass> classes;  // by least exponent
};

struct SpringerReport {
  bool conjugacy_ok = true;
  bool eigenvalues_ok = true;
  std::vector<int> eigen_exponents;     // eigenvalues of w as zeta_L^j, sorted
  std::vector<int> expected_exponents;  // zeta^(-m_i) as zeta_L^j, sorted
  std::vector<int> nonconjugate;        // class representatives violating conjugacy
  bool ok() const { return conjugacy_ok && eigenvalues_ok; }
};

// zeta lifted to the ambient conductor of the table.
CycloNum ambient_root(const GroupTable& table, int order, int exponent);

bool is_zeta_regular(const GroupTable& table, int w, const CycloNum& zeta);
// All roots of unity zeta for which w is zeta-regular, by (order, exponent).
std::vector<RegEig> regular_eigenvalues(const GroupTable& table, int w);

bool is_coxeter_element(const GroupTable& table, const DegreeData& degrees, int w);
bool eigenvalue_of_order_h(const GroupTable& table, const DegreeData& degrees, int w);

// Classes holding regular elements of order d. Throws NoRegularElement when
// d is not regular and IntegrityError when the partition invariants fail.
RegularClassSet regular_classes(const GroupTable& table, const DegreeData& degrees, int d);

SpringerReport springer_checks(const GroupTable& table, const DegreeData& degrees, int w, const CycloNum& zeta);

// perm[i] = position in class_set of the class of (rep_i)^p.
std::vector<int> galois_action_on_classes(const GroupTable& table, const RegularClassSet& class_set, int p);

struct TransitivityReport {
  int classes = 0;
  int field_degree = 0;
  int orbit_size = 0;
  bool transitive = false;
  bool simply_transitive = false;
};
TransitivityReport simply_transitive_report(const GroupTable& table, const DegreeData& degrees, const FieldData& field);
bool check_simply_transitive(const GroupTable& table, const DegreeData& degrees, const FieldData& field);

// Units of Z/L fixing every coefficient of the characteristic polynomial of c.
std::vector<int> charpoly_stabilizer(const GroupTable& table, int c);
bool charpoly_field_check(const GroupTable& table, const FieldData& field, int c);

// Trace stabilizer equals the preimage of G_W under reduction mod h.
bool gw_field_check(const FieldData& field, const DegreeData& degrees);

}  // namespace coxkit
