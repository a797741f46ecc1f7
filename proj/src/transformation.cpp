#include "pathmonoid/transformation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace pathmonoid {

ParseError::ParseError(std::string const& what, std::size_t position)
    : std::invalid_argument(what + " (at position " + std::to_string(position)
                            + ")"),
      _position(position) {}

namespace {

  void validate_images(std::vector<point_type> const& images) {
    if (images.empty()) {
      throw std::invalid_argument(
          "a transformation needs at least one point");
    }
    auto const n = images.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (images[x] < 1 || images[x] > n) {
        throw std::invalid_argument("image of " + std::to_string(x + 1)
                                    + " is " + std::to_string(images[x])
                                    + ", expected a value in 1.."
                                    + std::to_string(n));
      }
    }
  }

}  // namespace

Transformation::Transformation(std::vector<point_type> images)
    : _images(std::move(images)) {
  validate_images(_images);
}

Transformation::Transformation(std::initializer_list<point_type> images)
    : _images(images) {
  validate_images(_images);
}

point_type Transformation::at(point_type x) const {
  if (x < 1 || x > _images.size()) {
    throw std::out_of_range("point " + std::to_string(x)
                            + " outside 1.." + std::to_string(_images.size()));
  }
  return _images[x - 1];
}

std::vector<std::size_t> KernelPartition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks.size());
  for (auto const& block : blocks) {
    sizes.push_back(block.size());
  }
  return sizes;
}

Transformation identity(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("identity needs n >= 1");
  }
  std::vector<point_type> images(n);
  for (std::size_t x = 0; x < n; ++x) {
    images[x] = static_cast<point_type>(x + 1);
  }
  return Transformation(std::move(images));
}

Transformation constant(std::size_t n, point_type c) {
  if (n == 0) {
    throw std::invalid_argument("constant map needs n >= 1");
  }
  return Transformation(std::vector<point_type>(n, c));
}

Transformation compose(Transformation const& f, Transformation const& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("cannot compose maps of degree "
                                + std::to_string(f.degree()) + " and "
                                + std::to_string(g.degree()));
  }
  std::vector<point_type> images;
  images.reserve(f.degree());
  for (auto const y : f.images()) {
    images.push_back(g(y));
  }
  return Transformation(std::move(images));
}

std::vector<point_type> image_set(Transformation const& f) {
  std::vector<bool> seen(f.degree() + 1, false);
  for (auto const y : f.images()) {
    seen[y] = true;
  }
  std::vector<point_type> result;
  for (std::size_t y = 1; y <= f.degree(); ++y) {
    if (seen[y]) {
      result.push_back(static_cast<point_type>(y));
    }
  }
  return result;
}

KernelPartition kernel(Transformation const& f) {
  auto const n = f.degree();
  // block index of each image value, in order of first appearance; scanning
  // points in increasing order makes the block order canonical
  std::vector<std::size_t> block_of(n + 1, n);
  KernelPartition          result{n, {}};
  for (std::size_t x = 1; x <= n; ++x) {
    auto const y = f(static_cast<point_type>(x));
    if (block_of[y] == n) {
      block_of[y] = result.blocks.size();
      result.blocks.emplace_back();
    }
    result.blocks[block_of[y]].push_back(static_cast<point_type>(x));
  }
  return result;
}

std::size_t rank_of(Transformation const& f) {
  return image_set(f).size();
}

bool is_order_preserving(Transformation const& f) noexcept {
  return std::is_sorted(f.images().begin(), f.images().end());
}

bool is_interval(std::span<point_type const> sorted_points) {
  return sorted_points.empty()
         || sorted_points.back() - sorted_points.front() + 1
                == sorted_points.size();
}

Transformation parse_transformation(std::string_view text) {
  std::size_t pos = 0;
  auto const  skip_ws = [&] {
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  skip_ws();
  if (pos == text.size() || text[pos] != '[') {
    throw ParseError("expected '['", pos);
  }
  ++pos;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    throw ParseError("empty transformation", pos);
  }

  std::vector<point_type>  images;
  std::vector<std::size_t> token_pos;
  while (true) {
    skip_ws();
    auto const start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      ++pos;
    }
    while (pos < text.size()
           && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    auto const token = text.substr(start, pos - start);
    long long  value = 0;
    auto const [ptr, ec]
        = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("expected an integer", start);
    }
    if (value < 1 || value > static_cast<long long>(UINT32_MAX)) {
      throw ParseError("value " + std::string(token) + " out of range", start);
    }
    images.push_back(static_cast<point_type>(value));
    token_pos.push_back(start);

    skip_ws();
    if (pos == text.size()) {
      throw ParseError("expected ',' or ']'", pos);
    }
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ']'", pos);
  }
  skip_ws();
  if (pos != text.size()) {
    throw ParseError("trailing characters", pos);
  }

  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] > images.size()) {
      throw ParseError("value " + std::to_string(images[x])
                           + " out of range 1.."
                           + std::to_string(images.size()),
                       token_pos[x]);
    }
  }
  return Transformation(std::move(images));
}

std::string to_string(Transformation const& f) {
  std::string result = "[";
  bool        first  = true;
  for (auto const y : f.images()) {
    if (!first) {
      result += ',';
    }
    first = false;
    result += std::to_string(y);
  }
  result += ']';
  return result;
}

}  // namespace pathmonoid

std::size_t std::hash<pathmonoid::Transformation>::operator()(
    pathmonoid::Transformation const& f) const noexcept {
  // FNV-1a over the image values
  std::size_t h = 14695981039346656037ULL;
  for (auto const y : f.images()) {
    h ^= y;
    h *= 1099511628211ULL;
  }
  return h;
}
