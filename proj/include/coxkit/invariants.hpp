#pragma once

#include <vector>

#include "coxkit/group.hpp"

namespace coxkit {

struct DegreeData {
  std::vector<int> degrees;    // ascending
  std::vector<int> exponents;  // degrees minus one
  int coxeter_number = 1;      // largest degree
};

struct FieldData {
  int ambient_conductor = 1;
  std::vector<int> trace_stabilizer;  // sorted units k mod L fixing every trace
  int field_degree = 1;
};

// Coefficients (low to high) of sum over w of t^(dim V^w).
std::vector<long long> fixed_space_polynomial(const GroupTable& table);
DegreeData degrees_and_exponents(const GroupTable& table);

int phi(int j);
// Distinct residues m_i mod j that are units mod j.
int phi_W(int j, const std::vector<int>& exponents);

std::vector<int> units_mod(int m);

FieldData field_of_definition(const GroupTable& table);

// Units k mod h with k * {m_i mod h} = {m_i mod h} as sets.
std::vector<int> gw_stabilizer(const std::vector<int>& exponents, int h);
bool gw_matches_exponents(const std::vector<int>& exponents, int h);

// True when some n reflections generate the group. The search over
// n-subsets of reflections is bounded by max_subsets.
bool is_well_generated(const GroupTable& table, long long max_subsets = 200000);

// d >= 1 admitting a zeta_d-regular element, ascending.
std::vector<int> regular_numbers(const GroupTable& table, const DegreeData& degrees);

}  // namespace coxkit
