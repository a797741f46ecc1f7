// Ordered partitions (compositions) of n into k positive parts.

#ifndef PATHMONOID_COMPOSITIONS_HPP_
#define PATHMONOID_COMPOSITIONS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

namespace pathmonoid {

// Generates every composition of n into k parts exactly once.
//
// A composition (i_1, ..., i_k) is identified with its set of cut points
// {i_1, i_1 + i_2, ..., i_1 + ... + i_{k-1}}, a (k-1)-subset of {1..n-1}, and
// the cut sets are visited in colexicographic order.  So the first
// composition is (1, ..., 1, n-k+1) and the last is (n-k+1, 1, ..., 1).
class CompositionGenerator {
 public:
  // Requires 1 <= k <= n.
  CompositionGenerator(std::size_t n, std::size_t k);

  // Next composition, or nullopt once all C(n-1, k-1) have been produced.
  std::optional<std::vector<std::size_t>> next();

  void reset();

 private:
  std::size_t              _n;
  std::size_t              _k;
  std::vector<std::size_t> _cuts;
  bool                     _done;
};

}  // namespace pathmonoid

#endif  // PATHMONOID_COMPOSITIONS_HPP_
