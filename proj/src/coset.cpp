#include "coxkit/coset.hpp"

#include <cstdlib>
#include <string>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

class CosetTable {
 public:
  CosetTable(int generators, long long max_rows) : cols_(2 * generators), max_rows_(max_rows) { new_row(); }

  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inverse_column(int col) { return col ^ 1; }

  int get(int c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  void set(int c, int x, int v) { table_[static_cast<std::size_t>(c) * cols_ + x] = v; }
  int rows() const { return static_cast<int>(parent_.size()); }
  bool alive(int c) const { return parent_[c] == c; }

  long long live_count() const {
    long long n = 0;
    for (int c = 0; c < rows(); ++c) n += alive(c) ? 1 : 0;
    return n;
  }

  void define(int c, int x) {
    const int d = new_row();
    set(c, x, d);
    set(d, inverse_column(x), c);
  }

  void scan_and_fill(int alpha, const Word& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && get(f, column(w[i])) >= 0) f = get(f, column(w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inverse_column(column(w[j]))) >= 0) b = get(b, inverse_column(column(w[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, column(w[i]), b);
        set(b, inverse_column(column(w[i])), f);
        return;
      }
      define(f, column(w[i]));
    }
  }

 private:
  int new_row() {
    if (static_cast<long long>(parent_.size()) >= max_rows_) {
      throw ResourceError("coset enumeration exceeds " + std::to_string(max_rows_) + " cosets");
    }
    const int c = rows();
    parent_.push_back(c);
    table_.insert(table_.end(), static_cast<std::size_t>(cols_), -1);
    return c;
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const int next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int g = queue_[q];
      for (int x = 0; x < cols_; ++x) {
        const int d = get(g, x);
        if (d < 0) continue;
        set(d, inverse_column(x), -1);
        const int mu = rep(g), nu = rep(d);
        if (get(mu, x) >= 0) {
          merge(nu, get(mu, x));
        } else if (get(nu, inverse_column(x)) >= 0) {
          merge(mu, get(nu, inverse_column(x)));
        } else {
          set(mu, x, nu);
          set(nu, inverse_column(x), mu);
        }
      }
    }
  }

  int cols_;
  long long max_rows_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

long long coset_enumerate(const Presentation& pres, const std::vector<Word>& subgroup, long long max_cosets) {
  if (pres.generators <= 0) throw UsageError("presentation needs at least one generator");
  for (const auto* words : {&pres.relators, &subgroup}) {
    for (const auto& w : *words) {
      for (int letter : w) {
        if (letter == 0 || std::abs(letter) > pres.generators) throw UsageError("letter outside the generator range");
      }
    }
  }
  CosetTable t(pres.generators, max_cosets);
  for (const auto& w : subgroup) {
    if (t.alive(0)) t.scan_and_fill(0, w);
  }
  const int cols = 2 * pres.generators;
  for (int alpha = 0; alpha < t.rows(); ++alpha) {
    for (const auto& r : pres.relators) {
      if (!t.alive(alpha)) break;
      t.scan_and_fill(alpha, r);
    }
    for (int x = 0; x < cols; ++x) {
      if (!t.alive(alpha)) break;
      if (t.get(alpha, x) < 0) t.define(alpha, x);
    }
  }
  return t.live_count();
}

long long presented_order(const Presentation& pres, long long max_cosets) { return coset_enumerate(pres, {}, max_cosets); }

}  // namespace coxkit
