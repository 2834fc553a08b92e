#include "coxkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coxkit/errors.hpp"
#include "coxkit/parallel.hpp"

namespace coxkit {

namespace {

constexpr int kFullTableLimit = 2048;

}  // namespace

GroupTable GroupTable::enumerate(const std::vector<ExactMatrix>& generators, int cap, std::string label) {
  if (generators.empty()) throw UsageError("enumerate needs at least one generator");
  if (generators.size() > 255) throw UsageError("too many generators");
  GroupTable t;
  t.label_ = std::move(label);
  t.n_ = generators[0].dim();
  int N = 1;
  for (const auto& g : generators) {
    if (g.dim() != t.n_) throw UsageError("generators have different dimensions");
    N = std::lcm(N, g.conductor());
  }
  t.N_ = N;
  for (const auto& g : generators) t.gen_matrices_.push_back(promote(g, N));
  const std::size_t ng = generators.size();

  std::unordered_multimap<std::size_t, int> index;
  auto lookup = [&](const ExactMatrix& m, std::size_t h) {
    auto [lo, hi] = index.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (t.elements_[it->second] == m) return it->second;
    }
    return -1;
  };

  const ExactMatrix id = ExactMatrix::identity(t.n_, N);
  index.emplace(id.hash(), 0);
  t.elements_.push_back(id);
  t.parent_.push_back(-1);
  t.parent_gen_.push_back(-1);
  for (std::size_t i = 0; i < t.elements_.size(); ++i) {
    for (std::size_t k = 0; k < ng; ++k) {
      ExactMatrix prod = t.elements_[i] * t.gen_matrices_[k];
      const std::size_t h = prod.hash();
      int j = lookup(prod, h);
      if (j < 0) {
        if (static_cast<int>(t.elements_.size()) >= cap) {
          throw ResourceError("group order exceeds cap " + std::to_string(cap));
        }
        j = static_cast<int>(t.elements_.size());
        index.emplace(h, j);
        t.elements_.push_back(std::move(prod));
        t.parent_.push_back(static_cast<int>(i));
        t.parent_gen_.push_back(static_cast<int>(k));
      }
      t.rgen_.push_back(j);
    }
  }

  t.hash_index_.reserve(index.size());
  for (const auto& [h, i] : index) t.hash_index_.emplace_back(h, i);
  std::sort(t.hash_index_.begin(), t.hash_index_.end());

  for (std::size_t k = 0; k < ng; ++k) t.gen_index_.push_back(t.rgen_[k]);

  t.build_multiplication();
  t.build_inverses();
  t.build_classes();
  t.build_class_data();
  t.build_hyperplanes();
  return t;
}

void GroupTable::build_multiplication() {
  const int W = order();
  const std::size_t ng = gen_index_.size();

  word_offset_.assign(static_cast<std::size_t>(W) + 1, 0);
  std::vector<int> len(static_cast<std::size_t>(W), 0);
  for (int i = 1; i < W; ++i) len[i] = len[parent_[i]] + 1;
  for (int i = 0; i < W; ++i) word_offset_[i + 1] = word_offset_[i] + static_cast<std::uint32_t>(len[i]);
  word_gens_.assign(word_offset_[W], 0);
  for (int i = 1; i < W; ++i) {
    const int p = parent_[i];
    std::copy(word_gens_.begin() + word_offset_[p], word_gens_.begin() + word_offset_[p + 1],
              word_gens_.begin() + word_offset_[i]);
    word_gens_[word_offset_[i + 1] - 1] = static_cast<std::uint8_t>(parent_gen_[i]);
  }

  lgen_.assign(ng, std::vector<int>(static_cast<std::size_t>(W), 0));
  for (std::size_t k = 0; k < ng; ++k) {
    lgen_[k][0] = gen_index_[k];
    for (int x = 1; x < W; ++x) lgen_[k][x] = right_by_generator(lgen_[k][parent_[x]], parent_gen_[x]);
  }

  if (W <= kFullTableLimit) {
    table_.assign(static_cast<std::size_t>(W) * W, 0);
    for (int i = 0; i < W; ++i) {
      int* row = &table_[static_cast<std::size_t>(i) * W];
      row[0] = i;
      for (int j = 1; j < W; ++j) row[j] = right_by_generator(row[parent_[j]], parent_gen_[j]);
    }
  }
}

int GroupTable::mult(int i, int j) const {
  const int W = order();
  if (!table_.empty()) return table_[static_cast<std::size_t>(i) * W + j];
  int x = i;
  for (std::uint32_t p = word_offset_[j]; p < word_offset_[j + 1]; ++p) x = right_by_generator(x, word_gens_[p]);
  return x;
}

std::vector<int> GroupTable::word(int i) const {
  return std::vector<int>(word_gens_.begin() + word_offset_[i], word_gens_.begin() + word_offset_[i + 1]);
}

int GroupTable::power(int i, long long e) const {
  int base = e < 0 ? inv_[i] : i;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  k %= static_cast<unsigned long long>(order_.empty() || order_[i] == 0 ? 1 : order_[i]);
  int result = 0;
  while (k > 0) {
    if (k & 1) result = mult(result, base);
    k >>= 1;
    if (k) base = mult(base, base);
  }
  return result;
}

void GroupTable::build_inverses() {
  const int W = order();
  const std::size_t ng = gen_index_.size();
  gen_order_.assign(ng, 0);
  for (std::size_t k = 0; k < ng; ++k) {
    int x = gen_index_[k];
    int m = 1;
    while (x != 0) {
      x = right_by_generator(x, static_cast<int>(k));
      ++m;
    }
    gen_order_[k] = m;
  }
  inv_.assign(static_cast<std::size_t>(W), 0);
  for (int j = 1; j < W; ++j) {
    const int k = parent_gen_[j];
    int x = inv_[parent_[j]];
    for (int s = 1; s < gen_order_[k]; ++s) x = lgen_[k][x];
    inv_[j] = x;
  }
}

void GroupTable::build_classes() {
  const int W = order();
  const std::size_t ng = gen_index_.size();
  class_of_.assign(static_cast<std::size_t>(W), -1);
  for (int x = 0; x < W; ++x) {
    if (class_of_[x] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    ConjugacyClass cls;
    cls.representative = x;
    cls.members.push_back(x);
    class_of_[x] = c;
    for (std::size_t q = 0; q < cls.members.size(); ++q) {
      const int y = cls.members[q];
      for (std::size_t k = 0; k < ng; ++k) {
        // g^-1 y g
        int z = right_by_generator(y, static_cast<int>(k));
        for (int s = 1; s < gen_order_[k]; ++s) z = lgen_[k][z];
        if (class_of_[z] < 0) {
          class_of_[z] = c;
          cls.members.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

void GroupTable::build_class_data() {
  const std::size_t nc = classes_.size();
  fixed_dim_.assign(nc, 0);
  trace_.assign(nc, CycloNum(N_));
  std::vector<int> class_order(nc, 1);
  parallel_for(nc, [&](std::size_t c) {
    const int rep = classes_[c].representative;
    const ExactMatrix& w = elements_[rep];
    fixed_dim_[c] = n_ - coxkit::rank(w - ExactMatrix::identity(n_, N_));
    trace_[c] = trace(w);
    int x = rep;
    int m = 1;
    while (x != 0) {
      x = mult(x, rep);
      ++m;
    }
    class_order[c] = m;
  });

  order_.assign(elements_.size(), 1);
  exponent_ = 1;
  for (std::size_t c = 0; c < nc; ++c) {
    for (int i : classes_[c].members) order_[i] = class_order[c];
    exponent_ = std::lcm(exponent_, class_order[c]);
  }
  L_ = std::lcm(N_, exponent_);

  rep_ambient_.assign(nc, ExactMatrix());
  parallel_for(nc, [&](std::size_t c) { rep_ambient_[c] = promote(elements_[classes_[c].representative], L_); });
}

void GroupTable::build_hyperplanes() {
  const int W = order();
  is_reflection_.assign(static_cast<std::size_t>(W), 0);
  hyperplane_of_.assign(static_cast<std::size_t>(W), -1);
  for (const auto& cls : classes_) {
    if (fixed_dim_[class_of_[cls.representative]] != n_ - 1) continue;
    for (int i : cls.members) is_reflection_[i] = 1;
  }
  for (int i = 0; i < W; ++i) {
    if (is_reflection_[i]) reflections_.push_back(i);
  }

  const ExactMatrix id = ExactMatrix::identity(n_, N_);
  for (int r : reflections_) {
    const ExactMatrix D = elements_[r] - id;
    std::vector<ExactVector> rows;
    for (int i = 0; i < n_; ++i) rows.push_back(D.row(i));
    rref(rows, n_);
    if (rows.size() != 1) throw IntegrityError("reflection with rank(r - 1) != 1");
    const ExactVector& form = rows[0];
    int h = -1;
    for (std::size_t k = 0; k < hyperplanes_.size(); ++k) {
      if (hyperplanes_[k].form == form) {
        h = static_cast<int>(k);
        break;
      }
    }
    if (h < 0) {
      HyperplaneClass hc;
      hc.hyperplane = kernel(D);
      hc.form = form;
      hc.form_ambient = promote(form, L_);
      h = static_cast<int>(hyperplanes_.size());
      hyperplanes_.push_back(std::move(hc));
    }
    hyperplanes_[h].reflections.push_back(r);
    hyperplane_of_[r] = h;
  }
  for (auto& hc : hyperplanes_) hc.e_H = static_cast<int>(hc.reflections.size()) + 1;
}

ExactMatrix GroupTable::element_ambient(int i) const {
  const int c = class_of_[i];
  if (classes_[c].representative == i) return rep_ambient_[c];
  return promote(elements_[i], L_);
}

int GroupTable::find(const ExactMatrix& m) const {
  if (m.dim() != n_) return -1;
  const ExactMatrix* probe = &m;
  ExactMatrix lifted;
  if (m.conductor() != N_) {
    if (N_ % m.conductor() != 0) return -1;
    lifted = promote(m, N_);
    probe = &lifted;
  }
  const std::size_t h = probe->hash();
  auto it = std::lower_bound(hash_index_.begin(), hash_index_.end(), std::make_pair(h, -1));
  for (; it != hash_index_.end() && it->first == h; ++it) {
    if (elements_[it->second] == *probe) return it->second;
  }
  return -1;
}

int pointwise_stabilizer_order(const GroupTable& table, const Subspace& H) {
  bool known = false;
  for (const auto& hc : table.hyperplanes()) {
    if (hc.hyperplane == H) {
      known = true;
      break;
    }
  }
  if (!known) throw UsageError("pointwise_stabilizer_order: not a reflecting hyperplane");
  int count = 0;
  for (int w = 0; w < table.order(); ++w) {
    const ExactMatrix& m = table.element(w);
    bool fixes = true;
    for (const auto& v : H.basis()) {
      if (!(mat_vec(m, v) == v)) {
        fixes = false;
        break;
      }
    }
    if (fixes) ++count;
  }
  return count;
}

bool is_irreducible(const GroupTable& table) {
  CycloNum sum(table.entry_conductor());
  for (const auto& cls : table.classes()) {
    const CycloNum& t = table.trace_of(cls.representative);
    sum += t * complex_conjugate(t) * Rational(static_cast<long long>(cls.members.size()));
  }
  if (!sum.is_rational()) throw IntegrityError("character norm is not rational");
  return sum.rational_value() == Rational(static_cast<long long>(table.order()));
}

std::vector<int> subgroup_closure(const GroupTable& table, const std::vector<int>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(table.order()), 0);
  std::vector<int> members{table.identity()};
  seen[table.identity()] = 1;
  for (std::size_t q = 0; q < members.size(); ++q) {
    for (int g : gens) {
      const int z = table.mult(members[q], g);
      if (!seen[z]) {
        seen[z] = 1;
        members.push_back(z);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool generates(const GroupTable& table, const std::vector<int>& gens) {
  return static_cast<int>(subgroup_closure(table, gens).size()) == table.order();
}

}  // namespace coxkit
