#include "coxkit/noncrossing.hpp"

#include <algorithm>
#include <deque>
#include <cstdlib>

#include "coxkit/errors.hpp"
#include "coxkit/parallel.hpp"
#include "coxkit/regularity.hpp"

namespace coxkit {

int LengthTable::max_length() const { return len.empty() ? 0 : *std::max_element(len.begin(), len.end()); }

LengthTable absolute_lengths(const GroupTable& table) {
  const int W = table.order();
  LengthTable t;
  t.len.assign(static_cast<std::size_t>(W), -1);
  t.len[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int r : table.reflections()) {
      const int y = table.mult(x, r);
      if (t.len[y] < 0) {
        t.len[y] = t.len[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (std::find(t.len.begin(), t.len.end(), -1) != t.len.end()) {
    throw IntegrityError("reflections do not generate the group");
  }
  return t;
}

bool leq_abs(const GroupTable& table, const LengthTable& lengths, int x, int y) {
  return lengths(x) + lengths(table.mult(table.inv(x), y)) == lengths(y);
}

int NCLattice::position(int element) const {
  for (int i = 0; i < size(); ++i) {
    if (members[i] == element) return i;
  }
  return -1;
}

std::vector<int> NCLattice::rank_vector() const {
  std::vector<int> v;
  for (int r : rank) {
    if (r >= static_cast<int>(v.size())) v.resize(static_cast<std::size_t>(r) + 1, 0);
    ++v[r];
  }
  return v;
}

NCLattice nc_interval(const GroupTable& table, const LengthTable& lengths, int c) {
  NCLattice P;
  P.coxeter_element = c;
  std::vector<std::pair<int, int>> keyed;
  for (int w = 0; w < table.order(); ++w) {
    if (leq_abs(table, lengths, w, c)) keyed.emplace_back(lengths(w), w);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [r, w] : keyed) {
    P.members.push_back(w);
    P.rank.push_back(r);
  }
  const std::size_t m = P.members.size();
  P.order.assign(m * m, 0);
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (P.rank[i] <= P.rank[j] && leq_abs(table, lengths, P.members[i], P.members[j])) P.order[i * m + j] = 1;
    }
  });
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (P.rank[j] == P.rank[i] + 1 && P.order[i * m + j]) P.covers.emplace_back(P.members[i], P.members[j]);
    }
  }
  std::sort(P.covers.begin(), P.covers.end());
  return P;
}

long long catalan_number(const DegreeData& degrees) {
  const int h = degrees.coxeter_number;
  Rational prod(1);
  for (int d : degrees.degrees) prod *= Rational(Integer(d + h), Integer(d));
  if (!prod.is_integer() || !prod.numerator().fits_int64()) {
    throw IntegrityError("Catalan product " + prod.to_string() + " is not a machine integer");
  }
  return prod.numerator().small_value();
}

namespace {

// The least element of a set of bounds (greatest when downward), or -1. In
// a finite graded poset a unique minimal element is the least one, and it
// sits alone in the extreme rank.
int extreme_bound(const NCLattice& P, const std::vector<int>& set, bool upward) {
  int found = -1;
  bool tie = false;
  for (int a : set) {
    if (found < 0 || (upward ? P.rank[a] < P.rank[found] : P.rank[a] > P.rank[found])) {
      found = a;
      tie = false;
    } else if (P.rank[a] == P.rank[found]) {
      tie = true;
    }
  }
  if (found < 0 || tie) return -1;
  for (int b : set) {
    if (!(upward ? P.leq(found, b) : P.leq(b, found))) return -1;
  }
  return found;
}

NCLattice dual_of(const NCLattice& P) {
  NCLattice D = P;
  const int m = P.size();
  const int top = P.rank.empty() ? 0 : *std::max_element(P.rank.begin(), P.rank.end());
  for (int i = 0; i < m; ++i) D.rank[i] = top - P.rank[i];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) D.order[static_cast<std::size_t>(i) * m + j] = P.leq(j, i) ? 1 : 0;
  }
  return D;
}

std::vector<std::vector<long long>> signatures(const NCLattice& P) {
  const int m = P.size();
  std::vector<int> up(m, 0), down(m, 0), above(m, 0), below(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !P.leq(i, j)) continue;
      ++above[i];
      ++below[j];
      if (P.rank[j] == P.rank[i] + 1) {
        ++up[i];
        ++down[j];
      }
    }
  }
  std::vector<std::vector<long long>> sig(m);
  for (int i = 0; i < m; ++i) {
    std::vector<long long> ups, downs;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const long long key = (static_cast<long long>(P.rank[j]) << 40) | (static_cast<long long>(up[j]) << 20) | down[j];
      if (P.leq(i, j) && P.rank[j] == P.rank[i] + 1) ups.push_back(key);
      if (P.leq(j, i) && P.rank[i] == P.rank[j] + 1) downs.push_back(key);
    }
    std::sort(ups.begin(), ups.end());
    std::sort(downs.begin(), downs.end());
    auto& s = sig[i];
    s = {P.rank[i], up[i], down[i], above[i], below[i], -1};
    s.insert(s.end(), ups.begin(), ups.end());
    s.push_back(-1);
    s.insert(s.end(), downs.begin(), downs.end());
  }
  return sig;
}

std::vector<std::vector<int>> hasse_neighbours(const NCLattice& P) {
  const int m = P.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && std::abs(P.rank[i] - P.rank[j]) == 1 && (P.leq(i, j) || P.leq(j, i))) adj[i].push_back(j);
    }
  }
  return adj;
}

struct Matcher {
  const NCLattice& P;
  const NCLattice& Q;
  std::vector<std::vector<int>> cand;  // by signature
  std::vector<std::vector<int>> adj_q;
  std::vector<int> seq;     // processing order of P positions
  std::vector<int> anchor;  // earlier Hasse neighbour in seq, or -1
  std::vector<int> f;
  std::vector<char> used;
  std::vector<char> allowed;

  bool fits(int i, int j) const {
    for (std::size_t t = 0; t < seq.size() && seq[t] != i; ++t) {
      const int k = seq[t];
      if (P.leq(k, i) != Q.leq(f[k], j) || P.leq(i, k) != Q.leq(j, f[k])) return false;
    }
    return true;
  }

  bool extend(std::size_t t) {
    if (t == seq.size()) return true;
    const int i = seq[t];
    const std::vector<int>& pool = anchor[i] >= 0 ? adj_q[f[anchor[i]]] : cand[i];
    for (int j : pool) {
      if (used[j] || !allowed[static_cast<std::size_t>(i) * Q.size() + j] || !fits(i, j)) continue;
      f[i] = j;
      used[j] = 1;
      if (extend(t + 1)) return true;
      used[j] = 0;
    }
    return false;
  }
};

}  // namespace

bool is_lattice(const NCLattice& P) {
  const int m = P.size();
  std::vector<char> ok(static_cast<std::size_t>(m), 1);
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t a) {
    std::vector<int> ub, lb;
    for (int b = static_cast<int>(a) + 1; b < m && ok[a]; ++b) {
      ub.clear();
      lb.clear();
      for (int z = 0; z < m; ++z) {
        if (P.leq(static_cast<int>(a), z) && P.leq(b, z)) ub.push_back(z);
        if (P.leq(z, static_cast<int>(a)) && P.leq(z, b)) lb.push_back(z);
      }
      if (extreme_bound(P, ub, true) < 0 || extreme_bound(P, lb, false) < 0) ok[a] = 0;
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool is_self_dual(const GroupTable& table, const NCLattice& P) {
  const int m = P.size();
  std::vector<int> k(static_cast<std::size_t>(m), -1);
  bool direct = true;
  std::vector<char> hit(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m && direct; ++i) {
    k[i] = P.position(table.mult(table.inv(P.members[i]), P.coxeter_element));
    if (k[i] < 0 || hit[k[i]]) direct = false;
    else hit[k[i]] = 1;
  }
  for (int i = 0; i < m && direct; ++i) {
    for (int j = 0; j < m && direct; ++j) {
      if (P.leq(i, j) != P.leq(k[j], k[i])) direct = false;
    }
  }
  if (direct) return true;
  return poset_isomorphic(P, dual_of(P));
}

bool is_palindromic(const std::vector<int>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

std::vector<int> poset_isomorphism(const NCLattice& P, const NCLattice& Q) {
  const int m = P.size();
  if (m != Q.size()) return {};
  const auto sp = signatures(P);
  const auto sq = signatures(Q);
  Matcher M{P, Q, {}, hasse_neighbours(Q), {}, {}, {}, {}, {}};
  M.cand.resize(static_cast<std::size_t>(m));
  M.allowed.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (sp[i] != sq[j]) continue;
      M.cand[i].push_back(j);
      M.allowed[static_cast<std::size_t>(i) * m + j] = 1;
    }
    if (M.cand[i].empty()) return {};
  }
  // Grow the order along the Hasse diagram, always taking the element with
  // the most already placed neighbours.
  const auto adj_p = hasse_neighbours(P);
  std::vector<int> placed_nbrs(static_cast<std::size_t>(m), 0);
  std::vector<char> placed(static_cast<std::size_t>(m), 0);
  M.anchor.assign(static_cast<std::size_t>(m), -1);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (placed[i]) continue;
      if (best < 0 || placed_nbrs[i] > placed_nbrs[best] ||
          (placed_nbrs[i] == placed_nbrs[best] && M.cand[i].size() < M.cand[best].size())) {
        best = i;
      }
    }
    placed[best] = 1;
    M.seq.push_back(best);
    for (int j : adj_p[best]) {
      if (placed[j]) {
        if (M.anchor[best] < 0) M.anchor[best] = j;
      } else {
        ++placed_nbrs[j];
      }
    }
  }
  M.f.assign(static_cast<std::size_t>(m), -1);
  M.used.assign(static_cast<std::size_t>(m), 0);
  if (!M.extend(0)) return {};
  return M.f;
}

bool poset_isomorphic(const NCLattice& P, const NCLattice& Q) {
  if (P.size() != Q.size()) return false;
  if (P.size() == 0) return true;
  return !poset_isomorphism(P, Q).empty();
}

std::string nc_to_text(const NCLattice& P) {
  std::string out = "# element rank\n";
  for (int i = 0; i < P.size(); ++i) out += std::to_string(P.members[i]) + " " + std::to_string(P.rank[i]) + "\n";
  out += "# lower upper\n";
  for (const auto& [a, b] : P.covers) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::vector<int> elements_without_eigenvalue(const GroupTable& table, const LengthTable& lengths, int length,
                                             int order, int eig_order) {
  std::vector<int> out;
  const int L = table.conductor();
  for (const auto& cls : table.classes()) {
    const int w = cls.representative;
    if (lengths(w) != length || table.order_of(w) != order) continue;
    bool has = false;
    if (L % eig_order == 0) {
      const ExactMatrix M = table.element_ambient(w);
      for (int k : units_mod(eig_order)) {
        if (eigenspace(M, ambient_root(table, eig_order, k)).dim() > 0) {
          has = true;
          break;
        }
      }
    }
    if (!has) out.insert(out.end(), cls.members.begin(), cls.members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxkit
