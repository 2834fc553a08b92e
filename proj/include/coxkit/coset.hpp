#pragma once

#include <vector>

namespace coxkit {

// Words are sequences of nonzero letters: g+1 stands for generator g and
// -(g+1) for its inverse.
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

// Index of the subgroup generated by `subgroup` in the finitely presented
// group, by HLT coset enumeration with coincidence processing. Throws
// ResourceError once more than max_cosets cosets are alive or defined.
long long coset_enumerate(const Presentation& pres, const std::vector<Word>& subgroup, long long max_cosets);

// Order of the presented group (index of the trivial subgroup).
long long presented_order(const Presentation& pres, long long max_cosets);

}  // namespace coxkit
