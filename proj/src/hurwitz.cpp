#include "coxkit/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "coxkit/errors.hpp"
#include "coxkit/parallel.hpp"
#include "coxkit/regularity.hpp"

namespace coxkit {

namespace {

int product_of(const GroupTable& table, const std::vector<int>& xs) {
  int p = table.identity();
  for (int x : xs) p = table.mult(p, x);
  return p;
}

void extend_factorization(const GroupTable& table, const LengthTable& lengths, const std::vector<int>& refl, int w,
                          int k, int prefix, std::vector<int>& stack, std::vector<Factorization>& out) {
  const int d = static_cast<int>(stack.size());
  if (d == k) {
    if (prefix == w) out.push_back(Factorization{w, stack});
    return;
  }
  for (int r : refl) {
    const int q = table.mult(prefix, r);
    if (lengths(q) != d + 1) continue;
    if (lengths(table.mult(table.inv(q), w)) != k - d - 1) continue;
    stack.push_back(r);
    extend_factorization(table, lengths, refl, w, k, q, stack, out);
    stack.pop_back();
  }
}

std::vector<int> sorted_reflections(const GroupTable& table) {
  std::vector<int> r = table.reflections();
  std::sort(r.begin(), r.end());
  return r;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

constexpr std::size_t kMaxOrderingRank = 6;

}  // namespace

std::vector<Factorization> reduced_factorizations(const GroupTable& table, const LengthTable& lengths, int w) {
  const int k = lengths(w);
  if (k == 0) return {Factorization{w, {}}};
  const auto refl = sorted_reflections(table);
  std::vector<std::vector<Factorization>> parts(refl.size());
  parallel_for(refl.size(), [&](std::size_t i) {
    const int r = refl[i];
    if (lengths(table.mult(table.inv(r), w)) != k - 1) return;
    std::vector<int> stack{r};
    extend_factorization(table, lengths, refl, w, k, r, stack, parts[i]);
  });
  std::vector<Factorization> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Factorization hurwitz_move(const GroupTable& table, const Factorization& f, int i, int dir) {
  const int k = static_cast<int>(f.factors.size());
  if (i < 1 || i >= k) throw UsageError("Hurwitz move position out of range");
  if (dir != 1 && dir != -1) throw UsageError("Hurwitz move direction must be +1 or -1");
  Factorization g = f;
  const int a = f.factors[i - 1];
  const int b = f.factors[i];
  if (dir == 1) {
    g.factors[i - 1] = table.conjugate(a, b);
    g.factors[i] = a;
  } else {
    g.factors[i - 1] = b;
    g.factors[i] = table.mult(table.mult(table.inv(b), a), b);
  }
  if (!table.is_reflection(g.factors[i - 1]) || !table.is_reflection(g.factors[i])) {
    throw IntegrityError("Hurwitz move produced a non-reflection");
  }
  return g;
}

std::set<std::vector<int>> hurwitz_orbit(const GroupTable& table, const Factorization& f) {
  std::set<std::vector<int>> seen{f.factors};
  std::deque<std::vector<int>> queue{f.factors};
  const int k = static_cast<int>(f.factors.size());
  while (!queue.empty()) {
    Factorization cur{f.target, queue.front()};
    queue.pop_front();
    for (int i = 1; i < k; ++i) {
      for (int dir : {1, -1}) {
        auto next = hurwitz_move(table, cur, i, dir).factors;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

bool hurwitz_transitive(const GroupTable& table, const LengthTable& lengths, int w) {
  const auto all = reduced_factorizations(table, lengths, w);
  if (all.empty()) return false;
  return hurwitz_orbit(table, all.front()).size() == all.size();
}

GenSetReport check_regular_generating_set(const GroupTable& table, const DegreeData& degrees, const std::vector<int>& S) {
  GenSetReport rep;
  rep.genset = S;
  if (S.size() > kMaxOrderingRank) throw ResourceError("ordering scan limited to 6 generators");
  rep.generates_W = generates(table, S);

  std::vector<char> reached(table.classes().size(), 0);
  for (int s : S) {
    int x = s;
    for (int j = 1; j < table.order_of(s); ++j) {
      reached[table.class_of(x)] = 1;
      x = table.mult(x, s);
    }
  }
  for (int r : sorted_reflections(table)) {
    if (!reached[table.class_of(r)]) rep.unmatched_reflections.push_back(r);
  }
  rep.power_conjugacy_ok = rep.unmatched_reflections.empty();

  std::vector<int> perm = S;
  std::sort(perm.begin(), perm.end());
  std::map<int, bool> by_class;
  do {
    const int p = product_of(table, perm);
    const int c = table.class_of(p);
    auto it = by_class.find(c);
    if (it == by_class.end()) it = by_class.emplace(c, is_coxeter_element(table, degrees, p)).first;
    if (!it->second) rep.witness_failures.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.all_orderings_coxeter = rep.witness_failures.empty();
  return rep;
}

std::vector<OrderingRegularity> orderings_regularity_profile(const GroupTable& table, const DegreeData& degrees,
                                                             const std::vector<int>& S) {
  if (S.size() > kMaxOrderingRank) throw ResourceError("ordering scan limited to 6 generators");
  const int h = degrees.coxeter_number;
  std::vector<int> perm = S;
  std::sort(perm.begin(), perm.end());
  std::vector<OrderingRegularity> out;
  out.reserve(factorial(perm.size()));
  std::map<int, std::vector<int>> by_class;
  do {
    OrderingRegularity o{perm, product_of(table, perm), {}};
    const int c = table.class_of(o.product);
    auto it = by_class.find(c);
    if (it == by_class.end()) {
      std::vector<int> ks;
      if (table.conductor() % h == 0) {
        for (int k : units_mod(h)) {
          if (is_zeta_regular(table, o.product, ambient_root(table, h, k))) ks.push_back(k);
        }
      }
      it = by_class.emplace(c, std::move(ks)).first;
    }
    o.exponents = it->second;
    out.push_back(std::move(o));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool orderings_zeta_dichotomy(const std::vector<OrderingRegularity>& profile, int h) {
  if (profile.empty() || profile.front().exponents.empty()) return false;
  const int k0 = profile.front().exponents.front();
  const int k1 = (h - k0) % h;
  for (const auto& o : profile) {
    const auto& e = o.exponents;
    if (std::find(e.begin(), e.end(), k0) == e.end() && std::find(e.begin(), e.end(), k1) == e.end()) return false;
  }
  return true;
}

std::vector<std::pair<std::pair<int, int>, int>> CoxeterGraph::edges() const {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = s + 1; t < m.size(); ++t) {
      if (m[s][t] >= 3) out.push_back({{static_cast<int>(s), static_cast<int>(t)}, m[s][t]});
    }
  }
  return out;
}

CoxeterGraph coxeter_graph_of(const GroupTable& table, const std::vector<int>& S) {
  CoxeterGraph g;
  g.generators = S;
  const std::size_t n = S.size();
  for (int s : S) g.labels.push_back(table.order_of(s));
  g.m.assign(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int s = S[i], t = S[j];
      int a = s, b = t;
      int found = 0;
      for (int m = 2; m <= table.order(); ++m) {
        a = table.mult(a, m % 2 == 0 ? t : s);
        b = table.mult(b, m % 2 == 0 ? s : t);
        if (a == b) {
          found = m;
          break;
        }
      }
      if (found == 0) {
        throw NotCoxeterLike("generators " + std::to_string(s) + " and " + std::to_string(t) +
                             " satisfy no alternating relation");
      }
      g.m[i][j] = g.m[j][i] = found;
    }
  }
  return g;
}

std::vector<int> graph_isomorphism(const CoxeterGraph& a, const CoxeterGraph& b) {
  const std::size_t n = a.labels.size();
  if (n != b.labels.size()) return {};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = a.labels[i] == b.labels[perm[i]];
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.m[i][j] == b.m[perm[i]][perm[j]];
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

bool graphs_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.labels.empty() && b.labels.empty()) return true;
  return !graph_isomorphism(a, b).empty();
}

Presentation coxeter_presentation(const CoxeterGraph& g) {
  Presentation p;
  const int n = static_cast<int>(g.labels.size());
  p.generators = n;
  for (int s = 0; s < n; ++s) p.relators.push_back(Word(static_cast<std::size_t>(g.labels[s]), s + 1));
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const int m = g.m[s][t];
      Word w;
      for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? s + 1 : t + 1);
      for (int i = m - 1; i >= 0; --i) w.push_back(i % 2 == 0 ? -(t + 1) : -(s + 1));
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

bool verify_generalized_coxeter_presentation(const GroupTable& table, const std::vector<int>& S) {
  if (S.empty() || !generates(table, S)) return false;
  CoxeterGraph g;
  try {
    g = coxeter_graph_of(table, S);
  } catch (const NotCoxeterLike&) {
    return false;
  }
  for (std::size_t s = 0; s < S.size(); ++s) {
    if (g.labels[s] < 2) return false;
    for (std::size_t t = s + 1; t < S.size(); ++t) {
      if (g.m[s][t] % 2 == 1 && g.labels[s] != g.labels[t]) return false;
    }
  }
  const long long W = table.order();
  return presented_order(coxeter_presentation(g), 50 * W) == W;
}

bool genset_isomorphic(const GroupTable& table, const std::vector<int>& S0, const std::vector<int>& S) {
  const std::size_t n = S0.size();
  if (n != S.size() || !generates(table, S0) || !generates(table, S)) return false;
  const int W = table.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> phi(static_cast<std::size_t>(W));
  std::vector<char> hit(static_cast<std::size_t>(W));
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = table.order_of(S0[i]) == table.order_of(S[perm[i]]);
    if (!ok) continue;
    std::fill(phi.begin(), phi.end(), -1);
    std::fill(hit.begin(), hit.end(), 0);
    phi[0] = 0;
    hit[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty() && ok) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < n && ok; ++i) {
        const int y = table.mult(x, S0[i]);
        const int img = table.mult(phi[x], S[perm[i]]);
        if (phi[y] < 0) {
          if (hit[img]) {
            ok = false;
            break;
          }
          phi[y] = img;
          hit[img] = 1;
          queue.push_back(y);
        } else if (phi[y] != img) {
          ok = false;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<GensetWitness> find_coxeter_genset_for(const GroupTable& table, const LengthTable& lengths, int c,
                                                     const std::vector<int>& S0, GensetMode mode, long long budget,
                                                     GensetMemo* memo) {
  const std::size_t n = static_cast<std::size_t>(table.rank());
  if (lengths(c) != static_cast<int>(n)) return std::nullopt;
  // Sets with an ordering multiplying to c are exactly the supports of
  // reduced factorizations of c, since a product of n reflections spanning
  // V has absolute length n.
  std::set<std::vector<int>> candidates;
  for (const auto& f : reduced_factorizations(table, lengths, c)) {
    std::vector<int> s = f.factors;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) == s.end()) candidates.insert(std::move(s));
  }
  long long examined = 0;
  for (const auto& S : candidates) {
    if (++examined > budget) throw ResourceError("generating set search exceeds budget");
    auto cached = memo ? memo->find(S) : GensetMemo::iterator{};
    bool ok = false;
    if (memo && cached != memo->end()) {
      ok = cached->second;
    } else {
      if (mode == GensetMode::Presentation) {
        try {
          ok = verify_generalized_coxeter_presentation(table, S);
        } catch (const ResourceError&) {
          ok = false;
        }
      } else {
        ok = genset_isomorphic(table, S0, S);
      }
      if (memo) (*memo)[S] = ok;
    }
    if (!ok) continue;
    std::vector<int> perm = S;
    do {
      if (product_of(table, perm) == c) return GensetWitness{S, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace coxkit
