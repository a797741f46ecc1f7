// Generators and rank of the monoid wEnd of weak endomorphisms of the directed
// path with n >= 3 vertices.
//
// The canonical maps of rank n - 1 are
//
//   A(i) = alpha_i : x -> x for x <= i,  x -> x - 1 for x > i
//   B(i) = beta_i  : x -> x + 1 for x <= i,  x -> x for x > i
//
// for 1 <= i <= n - 1, and {A(1), ..., A(n - 2), B(n - 1)} generates wEnd.
// Words over these symbols are evaluated left to right.

#ifndef PATHMONOID_GENERATORS_HPP_
#define PATHMONOID_GENERATORS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathmonoid/endomorphisms.hpp"
#include "pathmonoid/transformation.hpp"

namespace pathmonoid {

[[nodiscard]] Transformation make_alpha(std::size_t n, std::size_t i);
[[nodiscard]] Transformation make_beta(std::size_t n, std::size_t i);

struct GeneratorSymbol {
  enum class Kind : char { A = 'a', B = 'b' };

  Kind        kind;
  std::size_t index;

  friend bool operator==(GeneratorSymbol const&, GeneratorSymbol const&)
      = default;
};

struct GeneratorWord {
  std::size_t                  degree = 0;
  std::vector<GeneratorSymbol> symbols;

  friend bool operator==(GeneratorWord const&, GeneratorWord const&) = default;
};

// The transformation a single symbol stands for.  Throws std::invalid_argument
// if the index is outside 1..n-1 or n < 3.
[[nodiscard]] Transformation to_transformation(GeneratorSymbol s,
                                               std::size_t     n);

// Left-to-right product of the symbols; the empty word is the identity.
[[nodiscard]] Transformation evaluate(GeneratorWord const& w);

// "b2 a1"; the empty word is the empty string.
[[nodiscard]] std::string   to_string(GeneratorWord const& w);
[[nodiscard]] GeneratorWord parse_word(std::string_view text, std::size_t n);

// {A(1), ..., A(n - 2), B(n - 1)}
[[nodiscard]] std::vector<Transformation> canonical_generators(std::size_t n);

// alpha_1, ..., alpha_{n-1}, beta_1, ..., beta_{n-1}: all weak
// endomorphisms of rank n - 1.
[[nodiscard]] std::vector<Transformation>
rank_n_minus_1_elements(std::size_t n);

// A word of length at most 2 over the canonical generators for f of rank
// n - 1, using alpha_{n-1} = beta_{n-1} alpha_1 and
// beta_i = alpha_i beta_{n-1}.  Throws std::invalid_argument otherwise.
[[nodiscard]] GeneratorWord express_rank_n_minus_1(Transformation const& f);

// f = first * second with both factors in wEnd of rank rank_of(f) + 1.
// Requires f in wEnd, n >= 3 and rank_of(f) <= n - 2.
[[nodiscard]] std::pair<Transformation, Transformation>
split(Transformation const& f);

// A word over the canonical generators evaluating to f in wEnd, n >= 3,
// obtained by splitting until every factor has rank n - 1.
[[nodiscard]] GeneratorWord factorize(Transformation const& f);

// Smallest submonoid of T_n containing gens, found by breadth-first
// right multiplication by the generators.  Sorted by image sequence.
[[nodiscard]] std::vector<Transformation>
closure(std::size_t n, std::vector<Transformation> const& gens);

struct RankCertificate {
  std::size_t degree                          = 0;
  std::size_t generating_set_size             = 0;
  std::size_t distinct_rank_n_minus_1_kernels = 0;
  BigInt      closure_size                    = 0;
  BigInt      expected_size                   = 0;
  // the lower-bound argument needs the identity to be the only element of
  // rank n; checked on the computed closure
  bool        identity_unique_of_rank_n       = false;
  bool        verdict                         = false;
};

// Certifies rank(wEnd) = n - 1 for n >= 3: the canonical n - 1 generators
// generate a monoid of size |wEnd| consisting of weak endomorphisms, and the
// rank n - 1 elements of that monoid carry n - 1 distinct kernels, each of
// which must occur in any generating set.
[[nodiscard]] RankCertificate kernel_lower_bound(std::size_t n);

// True iff some size-element subset of wEnd generates wEnd.  Exhaustive over
// all subsets, so only sensible for n <= 4.
[[nodiscard]] bool has_generating_subset_of_size(std::size_t n,
                                                 std::size_t size);

// Least size of a generating set of wEnd by exhaustive search, n <= 4.
[[nodiscard]] std::size_t exhaustive_rank(std::size_t n);

}  // namespace pathmonoid

#endif  // PATHMONOID_GENERATORS_HPP_
