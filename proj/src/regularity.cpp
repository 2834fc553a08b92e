#include "coxkit/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coxkit/errors.hpp"
#include "coxkit/parallel.hpp"

namespace coxkit {

namespace {

CycloNum lift(const GroupTable& table, const CycloNum& x) {
  const int L = table.conductor();
  if (x.conductor() == L) return x;
  if (L % x.conductor() != 0) {
    throw UsageError("scalar conductor " + std::to_string(x.conductor()) + " does not divide ambient conductor " +
                     std::to_string(L));
  }
  return promote(x, L);
}

// E is not inside any reflecting hyperplane.
bool avoids_hyperplanes(const GroupTable& table, const Subspace& E) {
  if (E.dim() == 0) return false;
  for (const auto& hc : table.hyperplanes()) {
    bool inside = true;
    for (const auto& v : E.basis()) {
      if (!dot(hc.form_ambient, v).is_zero()) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

std::vector<int> divisors(int m) {
  std::vector<int> d;
  for (int k = 1; k <= m; ++k) {
    if (m % k == 0) d.push_back(k);
  }
  return d;
}

std::vector<int> units_fixing(const std::vector<CycloNum>& values, int N, int L) {
  std::set<int> fixing;
  for (int k : units_mod(N)) {
    bool ok = true;
    for (const auto& v : values) {
      if (!(galois_apply(k, v) == v)) {
        ok = false;
        break;
      }
    }
    if (ok) fixing.insert(k);
  }
  std::vector<int> out;
  for (int k : units_mod(L)) {
    if (fixing.count(N == 1 ? 0 : k % N)) out.push_back(k);
  }
  return out;
}

}  // namespace

CycloNum ambient_root(const GroupTable& table, int order, int exponent) {
  const int L = table.conductor();
  if (order < 1 || L % order != 0) {
    throw UsageError("root of order " + std::to_string(order) + " is outside Q(zeta_" + std::to_string(L) + ")");
  }
  return root_of_unity(L, static_cast<long long>(exponent) * (L / order));
}

bool is_zeta_regular(const GroupTable& table, int w, const CycloNum& zeta) {
  return avoids_hyperplanes(table, eigenspace(table.element_ambient(w), lift(table, zeta)));
}

std::vector<RegEig> regular_eigenvalues(const GroupTable& table, int w) {
  const ExactMatrix M = table.element_ambient(w);
  const auto cp = char_poly(M);
  std::vector<RegEig> out;
  for (int d : divisors(table.order_of(w))) {
    for (int k : units_mod(d)) {
      const CycloNum z = ambient_root(table, d, k);
      if (!evaluate_poly(cp, z).is_zero()) continue;
      const Subspace E = eigenspace(M, z);
      if (avoids_hyperplanes(table, E)) out.push_back(RegEig{d, k, E.dim()});
    }
  }
  return out;
}

bool is_coxeter_element(const GroupTable& table, const DegreeData& degrees, int w) {
  const int h = degrees.coxeter_number;
  if (table.order_of(w) != h) return false;
  for (int k : units_mod(h)) {
    if (is_zeta_regular(table, w, ambient_root(table, h, k))) return true;
  }
  return false;
}

bool eigenvalue_of_order_h(const GroupTable& table, const DegreeData& degrees, int w) {
  const int h = degrees.coxeter_number;
  if (table.conductor() % h != 0 || table.order_of(w) % h != 0) return false;
  const ExactMatrix M = table.element_ambient(w);
  for (int k : units_mod(h)) {
    if (eigenspace(M, ambient_root(table, h, k)).dim() > 0) return true;
  }
  return false;
}

RegularClassSet regular_classes(const GroupTable& table, const DegreeData& degrees, int d) {
  if (d < 1 || table.conductor() % d != 0) {
    throw NoRegularElement(std::to_string(d) + " is not a regular number");
  }
  const auto units = units_mod(d);
  const auto& classes = table.classes();
  // hits[u][c]: representative of class c is regular for the u-th unit.
  std::vector<std::vector<RegEig>> hits(units.size());
  std::vector<std::vector<int>> hit_class(units.size());
  parallel_for(units.size(), [&](std::size_t u) {
    const CycloNum z = ambient_root(table, d, units[u]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const int rep = classes[c].representative;
      if (table.order_of(rep) % d != 0) continue;
      const Subspace E = eigenspace(table.element_ambient(rep), z);
      if (avoids_hyperplanes(table, E)) {
        hits[u].push_back(RegEig{d, units[u], E.dim()});
        hit_class[u].push_back(static_cast<int>(c));
      }
    }
  });

  std::size_t covered = 0;
  for (const auto& h : hit_class) covered += h.empty() ? 0 : 1;
  if (covered == 0) throw NoRegularElement(std::to_string(d) + " is not a regular number");
  if (covered != units.size()) {
    throw IntegrityError("some primitive " + std::to_string(d) + "-th roots have no regular element");
  }

  RegularClassSet set;
  set.order = d;
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (hit_class[u].size() != 1) {
      throw IntegrityError("regular elements for one eigenvalue lie in several classes");
    }
    const int c = hit_class[u][0];
    auto it = std::find_if(set.classes.begin(), set.classes.end(),
                           [&](const RegularClass& rc) { return rc.class_index == c; });
    if (it == set.classes.end()) {
      set.classes.push_back(RegularClass{c, classes[c].representative, {}});
      it = set.classes.end() - 1;
    }
    it->eigenvalues.push_back(hits[u][0]);
  }
  const int block = phi_W(d, degrees.exponents);
  for (const auto& rc : set.classes) {
    if (static_cast<int>(rc.eigenvalues.size()) != block) {
      throw IntegrityError("regular eigenvalue block of size " + std::to_string(rc.eigenvalues.size()) +
                           " differs from phi_W(" + std::to_string(d) + ") = " + std::to_string(block));
    }
  }
  return set;
}

SpringerReport springer_checks(const GroupTable& table, const DegreeData& degrees, int w, const CycloNum& zeta) {
  const CycloNum z = lift(table, zeta);
  if (!is_zeta_regular(table, w, z)) throw UsageError("springer_checks: element is not regular for the given root");
  const int L = table.conductor();
  SpringerReport rep;

  for (const auto& cls : table.classes()) {
    if (table.class_of(cls.representative) == table.class_of(w)) continue;
    if (is_zeta_regular(table, cls.representative, z)) rep.nonconjugate.push_back(cls.representative);
  }
  rep.conjugacy_ok = rep.nonconjugate.empty();

  const ExactMatrix M = table.element_ambient(w);
  const int step = L / table.order_of(w);
  for (int j = 0; j < L; j += step) {
    const int dim = eigenspace(M, root_of_unity(L, j)).dim();
    for (int t = 0; t < dim; ++t) rep.eigen_exponents.push_back(j);
  }
  int a = -1;
  for (int j = 0; j < L; ++j) {
    if (root_of_unity(L, j) == z) {
      a = j;
      break;
    }
  }
  if (a < 0) throw UsageError("springer_checks: zeta is not a root of unity");
  for (int m : degrees.exponents) {
    rep.expected_exponents.push_back(static_cast<int>(((-static_cast<long long>(a) * m) % L + L) % L));
  }
  std::sort(rep.expected_exponents.begin(), rep.expected_exponents.end());
  rep.eigenvalues_ok = rep.eigen_exponents == rep.expected_exponents;
  return rep;
}

std::vector<int> galois_action_on_classes(const GroupTable& table, const RegularClassSet& class_set, int p) {
  if (std::gcd(p, class_set.order) != 1) throw UsageError("powering exponent must be coprime to the order");
  std::vector<int> perm;
  for (const auto& rc : class_set.classes) {
    const int target = table.class_of(table.power(rc.representative, p));
    auto it = std::find_if(class_set.classes.begin(), class_set.classes.end(),
                           [&](const RegularClass& x) { return x.class_index == target; });
    if (it == class_set.classes.end()) throw IntegrityError("power of a regular element left the regular classes");
    perm.push_back(static_cast<int>(it - class_set.classes.begin()));
  }
  return perm;
}

TransitivityReport simply_transitive_report(const GroupTable& table, const DegreeData& degrees, const FieldData& field) {
  const int h = degrees.coxeter_number;
  const RegularClassSet cs = regular_classes(table, degrees, h);
  std::set<int> orbit;
  for (int p : units_mod(h)) orbit.insert(galois_action_on_classes(table, cs, p == 0 ? 1 : p)[0]);
  TransitivityReport r;
  r.classes = static_cast<int>(cs.classes.size());
  r.field_degree = field.field_degree;
  r.orbit_size = static_cast<int>(orbit.size());
  r.transitive = r.orbit_size == r.classes;
  r.simply_transitive = r.transitive && r.classes == r.field_degree;
  return r;
}

bool check_simply_transitive(const GroupTable& table, const DegreeData& degrees, const FieldData& field) {
  return simply_transitive_report(table, degrees, field).simply_transitive;
}

std::vector<int> charpoly_stabilizer(const GroupTable& table, int c) {
  return units_fixing(char_poly(table.element(c)), table.entry_conductor(), table.conductor());
}

bool charpoly_field_check(const GroupTable& table, const FieldData& field, int c) {
  return charpoly_stabilizer(table, c) == field.trace_stabilizer;
}

bool gw_field_check(const FieldData& field, const DegreeData& degrees) {
  const int h = degrees.coxeter_number;
  const int L = field.ambient_conductor;
  if (L % h != 0) return false;
  const auto g = gw_stabilizer(degrees.exponents, h);
  const std::set<int> gs(g.begin(), g.end());
  std::vector<int> lifted;
  for (int k : units_mod(L)) {
    if (gs.count(h == 1 ? 0 : k % h)) lifted.push_back(k);
  }
  return lifted == field.trace_stabilizer;
}

}  // namespace coxkit
