// Endomorphism monoids of the directed path with vertices 1, ..., n and arcs
// (i, i + 1).
//
// The library distinguishes five classes of maps f of the vertex set, each
// defined by a condition over all ordered pairs (u, v) of vertices, writing
// E for the arc set:
//
//   endomorphism         (u, v) in E                 =>  (uf, vf) in E
//   weak endomorphism    (u, v) in E and uf != vf    =>  (uf, vf) in E
//   strong endomorphism  (u, v) in E                 <=> (uf, vf) in E
//   strong weak          (u, v) in E and uf != vf    <=> (uf, vf) in E
//   automorphism         bijective strong endomorphism
//
// The weak endomorphisms form the monoid wEnd of interest; it consists of the
// order-preserving maps whose image is an interval, and each of them is
// determined by the least image point and the fibre sizes (an ordered
// partition of n).

#ifndef PATHMONOID_ENDOMORPHISMS_HPP_
#define PATHMONOID_ENDOMORPHISMS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathmonoid/compositions.hpp"
#include "pathmonoid/transformation.hpp"

namespace pathmonoid {

using BigInt = boost::multiprecision::cpp_int;

// Brute-force checks over all n^n maps are kept to n <= 6 unless overridden.
inline constexpr std::size_t kDefaultBruteForceCap = 6;

[[nodiscard]] bool is_weak_endomorphism(Transformation const& f) noexcept;

// Order-preserving with interval image; agrees with is_weak_endomorphism.
[[nodiscard]] bool
is_weak_endomorphism_by_characterization(Transformation const& f);

// The remaining classes are evaluated literally over all ordered pairs.
[[nodiscard]] bool is_endomorphism(Transformation const& f) noexcept;
[[nodiscard]] bool is_strong_endomorphism(Transformation const& f) noexcept;
[[nodiscard]] bool is_strong_weak_endomorphism(Transformation const& f) noexcept;
[[nodiscard]] bool is_automorphism(Transformation const& f);

////////////////////////////////////////////////////////////////////////
// Encoding of weak endomorphisms
////////////////////////////////////////////////////////////////////////

// f in wEnd with image {j + 1, ..., j + k} and |(j + t) f^-1| = i_t.
struct WEndEncoding {
  std::size_t              degree = 0;
  std::size_t              offset = 0;  // j
  std::vector<std::size_t> composition;  // (i_1, ..., i_k)

  friend bool operator==(WEndEncoding const&, WEndEncoding const&) = default;
};

// Throws std::invalid_argument unless degree >= 1, every part is positive,
// the parts sum to degree, and offset <= degree - k.
void validate(WEndEncoding const& e);

// Throws std::invalid_argument if f is not a weak endomorphism.
[[nodiscard]] WEndEncoding encode(Transformation const& f);

[[nodiscard]] Transformation decode(WEndEncoding const& e);

// Streams wEnd in the order (k, j, composition), with k = rank ascending,
// j = offset ascending and compositions in CompositionGenerator order.
// Each element is produced exactly once; a stream can be restarted with
// reset(), or restricted to a single (k, j) slice for partitioned
// consumption.
class WEndStream {
 public:
  explicit WEndStream(std::size_t n);
  // Only the maps of rank k and least image point j + 1.
  WEndStream(std::size_t n, std::size_t k, std::size_t j);

  std::optional<Transformation> next();
  void                          reset();

 private:
  void start_slice();

  std::size_t          _n;
  std::size_t          _k;
  std::size_t          _j;
  bool                 _single_slice;
  bool                 _done;
  CompositionGenerator _compositions;
};

[[nodiscard]] std::vector<Transformation> enumerate_wend(std::size_t n);

// |wEnd| as the exact sum over k of (n - k + 1) * C(n - 1, k - 1).
[[nodiscard]] BigInt count_wend(std::size_t n);

// (n + 1) * 2^(n - 2) for n >= 2, and 1 for n = 1.
[[nodiscard]] BigInt count_wend_closed_form(std::size_t n);

// n (n + 1) / 2
[[nodiscard]] BigInt count_idempotents(std::size_t n);

////////////////////////////////////////////////////////////////////////
// Idempotents and regular elements
////////////////////////////////////////////////////////////////////////

// x f = x for every x in im f.
[[nodiscard]] bool is_idempotent(Transformation const& f);

// A weak endomorphism f is regular in wEnd iff every image point with more
// than one preimage is the least or the greatest image point.  Throws
// std::invalid_argument if f is not a weak endomorphism.
[[nodiscard]] bool is_regular(Transformation const& f);

// For regular f = (1..i -> j, i + t -> j + t for 0 < t <= k, rest -> j + k)
// returns the mirror map g = (1..j -> i, j + t -> i + t, rest -> i + k),
// which lies in wEnd and satisfies f g f = f.  Throws std::invalid_argument
// if f is not a regular weak endomorphism.
[[nodiscard]] Transformation pseudo_inverse(Transformation const& f);

struct ClassificationReport {
  bool        is_end        = false;
  bool        is_wend       = false;
  bool        is_send       = false;
  bool        is_swend      = false;
  bool        is_aut        = false;
  bool        is_idempotent = false;
  // regularity in wEnd for weak endomorphisms; every other map is reported
  // as regular, which it is in the full transformation monoid
  bool        is_regular    = false;
  std::size_t rank          = 0;
  point_type  image_min     = 0;
  point_type  image_max     = 0;

  friend bool operator==(ClassificationReport const&,
                         ClassificationReport const&)
      = default;
};

[[nodiscard]] ClassificationReport classify(Transformation const& f);

}  // namespace pathmonoid

#endif  // PATHMONOID_ENDOMORPHISMS_HPP_
