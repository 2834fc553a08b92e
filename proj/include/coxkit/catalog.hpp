#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxkit/group.hpp"
#include "coxkit/invariants.hpp"

namespace coxkit {

struct ExpectedInvariants {
  std::optional<int> order;
  std::optional<int> reflections;
  std::optional<std::vector<int>> degrees;
  std::optional<bool> irreducible;
};

struct GroupDefinition {
  std::string name;
  std::string source;  // "imprimitive", "root system", "catalog", or a file path
  std::vector<ExactMatrix> generators;
  ExpectedInvariants expected;
};

// Standard kit for G(m,p,n), p | m: transpositions s_1..s_{n-1}, plus
//   p = 1:      diag(zeta_m, 1, ..., 1)
//   p = m:      t with t(b1) = w b2, t(b2) = w^-1 b1, w = zeta_m
//   otherwise:  t as above together with diag(zeta_m^p, 1, ..., 1).
std::vector<ExactMatrix> imprimitive_generators(int m, int p, int n);
// G(de, e, n).
std::vector<ExactMatrix> build_imprimitive(int d, int e, int n);

// Simple reflections of a real finite Coxeter group in the basis of simple
// roots; coxeter_matrix[i][j] is m_ij (1 on the diagonal).
std::vector<ExactMatrix> root_system_generators(const std::vector<std::vector<int>>& coxeter_matrix);

GroupDefinition parse_group_definition(const std::string& json_text, const std::string& source);
GroupDefinition load_group_file(const std::string& path);
std::string group_definition_to_json(const GroupDefinition& def);

// COXKIT_DATA if set, else the data directory of the source tree.
std::string data_directory();

// Accepts G(m,p,n), An, Bn, Dn, I2(m), a catalog name from the data
// directory (H3, H4, G4, ...), or a path to a .json file.
GroupDefinition resolve_group_spec(const std::string& spec);

// Enumerates and checks the definition's expected block; mismatches raise
// IntegrityError.
GroupTable build_group(const GroupDefinition& def, int cap = kDefaultGroupCap);
GroupTable load_group(const std::string& spec, int cap = kDefaultGroupCap);

}  // namespace coxkit
