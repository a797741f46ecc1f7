// Full transformations of the chain {1, ..., n}.
//
// Points and images are 1-based everywhere in the public interface.  Maps act
// on the right, so compose(f, g) first applies f and then g:
//
//     x compose(f, g) = (x f) g
//
// which is the convention under which all products of generators in this
// library are written.

#ifndef PATHMONOID_TRANSFORMATION_HPP_
#define PATHMONOID_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathmonoid {

using point_type = std::uint32_t;

// Raised by parse_transformation; position() is the 0-based offset into the
// input text where the problem was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::size_t position);

  [[nodiscard]] std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;
};

class Transformation {
 public:
  // Throws std::invalid_argument if images is empty or some entry is not in
  // {1, ..., images.size()}.
  explicit Transformation(std::vector<point_type> images);
  Transformation(std::initializer_list<point_type> images);

  [[nodiscard]] std::size_t degree() const noexcept { return _images.size(); }

  // The image of the point x, for 1 <= x <= degree().
  [[nodiscard]] point_type operator()(point_type x) const {
    return _images[x - 1];
  }

  [[nodiscard]] point_type at(point_type x) const;

  [[nodiscard]] std::span<point_type const> images() const noexcept {
    return _images;
  }

  friend bool operator==(Transformation const&, Transformation const&)
      = default;
  friend auto operator<=>(Transformation const&, Transformation const&)
      = default;

 private:
  std::vector<point_type> _images;
};

// Partition of {1, ..., n} into the fibres of a map.  Blocks are sorted and
// listed by increasing minimum, so two kernels are equal iff their blocks
// are equal.
struct KernelPartition {
  std::size_t                          degree = 0;
  std::vector<std::vector<point_type>> blocks;

  [[nodiscard]] std::vector<std::size_t> block_sizes() const;

  friend bool operator==(KernelPartition const&, KernelPartition const&)
      = default;
  friend auto operator<=>(KernelPartition const&, KernelPartition const&)
      = default;
};

[[nodiscard]] Transformation identity(std::size_t n);

// Constant map with value c on {1, ..., n}.
[[nodiscard]] Transformation constant(std::size_t n, point_type c);

// x -> (x f) g.  Throws std::invalid_argument if the degrees differ.
[[nodiscard]] Transformation compose(Transformation const& f,
                                     Transformation const& g);

// Sorted distinct values of f.
[[nodiscard]] std::vector<point_type> image_set(Transformation const& f);

[[nodiscard]] KernelPartition kernel(Transformation const& f);

// |im f|
[[nodiscard]] std::size_t rank_of(Transformation const& f);

[[nodiscard]] bool is_order_preserving(Transformation const& f) noexcept;

// True iff the sorted set consists of consecutive integers (the empty set
// counts as an interval).
[[nodiscard]] bool is_interval(std::span<point_type const> sorted_points);

// Text form "[1,2,2,3]".  Whitespace around tokens is accepted on input.
[[nodiscard]] Transformation parse_transformation(std::string_view text);
[[nodiscard]] std::string    to_string(Transformation const& f);

}  // namespace pathmonoid

template <>
struct std::hash<pathmonoid::Transformation> {
  std::size_t operator()(pathmonoid::Transformation const& f) const noexcept;
};

#endif  // PATHMONOID_TRANSFORMATION_HPP_
