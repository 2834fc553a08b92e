#include "coxkit/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coxkit/errors.hpp"
#include "coxkit/regularity.hpp"

namespace coxkit {

std::vector<long long> fixed_space_polynomial(const GroupTable& table) {
  std::vector<long long> p(static_cast<std::size_t>(table.rank()) + 1, 0);
  for (const auto& cls : table.classes()) {
    p[table.fixed_dim(cls.representative)] += static_cast<long long>(cls.members.size());
  }
  return p;
}

namespace {

// Divides p by (t + m) in place when exact.
bool divide_out(std::vector<Integer>& p, long long m) {
  // Horner evaluation at -m decides divisibility.
  Integer value(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    value *= Integer(-m);
    value += p[i];
  }
  if (!value.is_zero()) return false;
  // p = q * (t + m), so p[i+1] = q[i] + m q[i+1].
  std::vector<Integer> q(p.size() - 1);
  Integer c = p.back();
  q.back() = c;
  for (std::size_t i = p.size() - 2; i-- > 0;) {
    c = p[i + 1] - Integer(m) * c;
    q[i] = c;
  }
  p = std::move(q);
  return true;
}

}  // namespace

DegreeData degrees_and_exponents(const GroupTable& table) {
  const int n = table.rank();
  bool by_reflections = true;
  for (int g : table.generators()) by_reflections = by_reflections && table.is_reflection(g);
  if (!by_reflections && !generates(table, table.reflections())) {
    throw IntegrityError("group is not generated by its reflections");
  }

  const auto raw = fixed_space_polynomial(table);
  std::vector<Integer> p;
  for (long long c : raw) p.emplace_back(c);
  std::vector<int> exps;
  for (long long m = 0; p.size() > 1 && m <= table.order(); ++m) {
    while (p.size() > 1 && divide_out(p, m)) exps.push_back(static_cast<int>(m));
  }
  if (p.size() != 1 || !p[0].is_one() || static_cast<int>(exps.size()) != n) {
    throw IntegrityError("fixed-space polynomial does not split into (t + m_i) factors");
  }
  DegreeData d;
  d.exponents = exps;
  long long sum = 0;
  long long prod = 1;
  for (int m : exps) {
    d.degrees.push_back(m + 1);
    sum += m;
    prod *= m + 1;
  }
  d.coxeter_number = d.degrees.empty() ? 1 : d.degrees.back();
  if (sum != static_cast<long long>(table.reflections().size())) {
    throw IntegrityError("sum of exponents differs from the number of reflections");
  }
  if (prod != table.order()) throw IntegrityError("product of degrees differs from the group order");
  return d;
}

int phi(int j) { return euler_phi(j); }

int phi_W(int j, const std::vector<int>& exponents) {
  if (j < 1) throw UsageError("phi_W needs j >= 1");
  std::set<int> residues;
  for (int m : exponents) {
    const int r = ((m % j) + j) % j;
    if (std::gcd(r, j) == 1) residues.insert(r);
  }
  return static_cast<int>(residues.size());
}

std::vector<int> units_mod(int m) {
  std::vector<int> u;
  if (m == 1) return {0};
  for (int k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1) u.push_back(k);
  }
  return u;
}

FieldData field_of_definition(const GroupTable& table) {
  FieldData fd;
  const int L = table.conductor();
  const int N = table.entry_conductor();
  fd.ambient_conductor = L;
  // sigma_k on Q(zeta_L) restricts to sigma_(k mod N) on Q(zeta_N), where
  // the traces live, so fixing them can be decided there.
  std::set<int> fixing_mod_N;
  for (int k : units_mod(N)) {
    bool fixes = true;
    for (const auto& cls : table.classes()) {
      const CycloNum& t = table.trace_of(cls.representative);
      if (!(galois_apply(k, t) == t)) {
        fixes = false;
        break;
      }
    }
    if (fixes) fixing_mod_N.insert(k);
  }
  for (int k : units_mod(L)) {
    if (fixing_mod_N.count(N == 1 ? 0 : k % N)) fd.trace_stabilizer.push_back(k);
  }
  fd.field_degree = phi(L) / static_cast<int>(fd.trace_stabilizer.size());
  return fd;
}

std::vector<int> gw_stabilizer(const std::vector<int>& exponents, int h) {
  std::set<int> residues;
  for (int m : exponents) residues.insert(((m % h) + h) % h);
  std::vector<int> out;
  for (int k : units_mod(h)) {
    std::set<int> image;
    for (int r : residues) image.insert(static_cast<int>((static_cast<long long>(k) * r) % h));
    if (image == residues) out.push_back(k);
  }
  return out;
}

bool gw_matches_exponents(const std::vector<int>& exponents, int h) {
  std::set<int> expected;
  for (int m : exponents) {
    if (std::gcd(m, h) == 1) expected.insert(((-m) % h + h) % h);
  }
  const auto g = gw_stabilizer(exponents, h);
  return std::vector<int>(expected.begin(), expected.end()) == g && static_cast<int>(g.size()) == phi_W(h, exponents);
}

bool is_well_generated(const GroupTable& table, long long max_subsets) {
  const int n = table.rank();
  const auto& gens = table.generators();
  if (static_cast<int>(gens.size()) == n &&
      std::all_of(gens.begin(), gens.end(), [&](int g) { return table.is_reflection(g); })) {
    return true;
  }
  // A generated subgroup only grows when a reflection is replaced by a
  // generator of its full cyclic hyperplane stabilizer, so one such
  // generator per hyperplane suffices.
  std::vector<int> cand;
  for (const auto& hc : table.hyperplanes()) {
    int best = hc.reflections.front();
    for (int r : hc.reflections) {
      if (table.order_of(r) == hc.e_H) {
        best = r;
        break;
      }
    }
    cand.push_back(best);
  }
  const int H = static_cast<int>(cand.size());
  if (H < n) return false;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  long long tried = 0;
  while (true) {
    if (++tried > max_subsets) throw ResourceError("well-generation search exceeds budget");
    std::vector<int> s;
    for (int i : idx) s.push_back(cand[i]);
    if (generates(table, s)) return true;
    int i = n - 1;
    while (i >= 0 && idx[i] == H - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

std::vector<int> regular_numbers(const GroupTable& table, const DegreeData& /*degrees*/) {
  std::set<int> out;
  for (const auto& cls : table.classes()) {
    for (const auto& e : regular_eigenvalues(table, cls.representative)) out.insert(e.order);
  }
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace coxkit
