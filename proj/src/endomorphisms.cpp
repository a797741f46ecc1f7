#include "pathmonoid/endomorphisms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace pathmonoid {

namespace {

  // (u, v) is an arc of the directed path
  constexpr bool is_arc(point_type u, point_type v) noexcept {
    return v == u + 1;
  }

  void require_weak_endomorphism(Transformation const& f, char const* what) {
    if (!is_weak_endomorphism(f)) {
      throw std::invalid_argument(std::string(what) + ": "
                                  + pathmonoid::to_string(f)
                                  + " is not a weak endomorphism");
    }
  }

  // Sizes of the fibres of the image points of an order-preserving map, in
  // increasing order of image point.
  std::vector<std::size_t> fibre_sizes(Transformation const& f) {
    std::vector<std::size_t> sizes;
    auto const               images = f.images();
    for (std::size_t x = 0; x < images.size(); ++x) {
      if (x == 0 || images[x] != images[x - 1]) {
        sizes.push_back(1);
      } else {
        ++sizes.back();
      }
    }
    return sizes;
  }

}  // namespace

bool is_weak_endomorphism(Transformation const& f) noexcept {
  auto const images = f.images();
  for (std::size_t x = 1; x < images.size(); ++x) {
    if (images[x] != images[x - 1] && images[x] != images[x - 1] + 1) {
      return false;
    }
  }
  return true;
}

bool is_weak_endomorphism_by_characterization(Transformation const& f) {
  return is_order_preserving(f) && is_interval(image_set(f));
}

bool is_endomorphism(Transformation const& f) noexcept {
  auto const n = static_cast<point_type>(f.degree());
  for (point_type u = 1; u <= n; ++u) {
    for (point_type v = 1; v <= n; ++v) {
      if (is_arc(u, v) && !is_arc(f(u), f(v))) {
        return false;
      }
    }
  }
  return true;
}

bool is_strong_endomorphism(Transformation const& f) noexcept {
  auto const n = static_cast<point_type>(f.degree());
  for (point_type u = 1; u <= n; ++u) {
    for (point_type v = 1; v <= n; ++v) {
      if (is_arc(u, v) != is_arc(f(u), f(v))) {
        return false;
      }
    }
  }
  return true;
}

bool is_strong_weak_endomorphism(Transformation const& f) noexcept {
  auto const n = static_cast<point_type>(f.degree());
  for (point_type u = 1; u <= n; ++u) {
    for (point_type v = 1; v <= n; ++v) {
      bool const lhs = is_arc(u, v) && f(u) != f(v);
      if (lhs != is_arc(f(u), f(v))) {
        return false;
      }
    }
  }
  return true;
}

bool is_automorphism(Transformation const& f) {
  return rank_of(f) == f.degree() && is_strong_endomorphism(f);
}

////////////////////////////////////////////////////////////////////////
// Encoding
////////////////////////////////////////////////////////////////////////

void validate(WEndEncoding const& e) {
  if (e.degree == 0) {
    throw std::invalid_argument("encoding needs degree >= 1");
  }
  auto const k = e.composition.size();
  if (k == 0) {
    throw std::invalid_argument("encoding needs at least one part");
  }
  std::size_t sum = 0;
  for (auto const part : e.composition) {
    if (part == 0) {
      throw std::invalid_argument("composition parts must be positive");
    }
    sum += part;
  }
  if (sum != e.degree) {
    throw std::invalid_argument("composition sums to " + std::to_string(sum)
                                + ", expected " + std::to_string(e.degree));
  }
  if (e.offset > e.degree - k) {
    throw std::invalid_argument("offset " + std::to_string(e.offset)
                                + " exceeds " + std::to_string(e.degree - k));
  }
}

WEndEncoding encode(Transformation const& f) {
  require_weak_endomorphism(f, "encode");
  return WEndEncoding{f.degree(), f(1) - std::size_t{1}, fibre_sizes(f)};
}

Transformation decode(WEndEncoding const& e) {
  validate(e);
  std::vector<point_type> images;
  images.reserve(e.degree);
  auto value = static_cast<point_type>(e.offset);
  for (auto const part : e.composition) {
    ++value;
    images.insert(images.end(), part, value);
  }
  return Transformation(std::move(images));
}

////////////////////////////////////////////////////////////////////////
// Enumeration and counting
////////////////////////////////////////////////////////////////////////

WEndStream::WEndStream(std::size_t n)
    : _n(n),
      _k(1),
      _j(0),
      _single_slice(false),
      _done(false),
      _compositions(n == 0 ? 1 : n, 1) {
  if (n == 0) {
    throw std::invalid_argument("wEnd needs n >= 1");
  }
}

WEndStream::WEndStream(std::size_t n, std::size_t k, std::size_t j)
    : _n(n),
      _k(k),
      _j(j),
      _single_slice(true),
      _done(false),
      _compositions(n == 0 ? 1 : n, (k == 0 || k > n) ? 1 : k) {
  if (n == 0 || k == 0 || k > n || j > n - k) {
    throw std::invalid_argument("no weak endomorphisms of degree "
                                + std::to_string(n) + " with rank "
                                + std::to_string(k) + " and offset "
                                + std::to_string(j));
  }
}

void WEndStream::start_slice() {
  _compositions = CompositionGenerator(_n, _k);
}

void WEndStream::reset() {
  if (!_single_slice) {
    _k = 1;
    _j = 0;
  }
  _done = false;
  start_slice();
}

std::optional<Transformation> WEndStream::next() {
  while (!_done) {
    if (auto parts = _compositions.next()) {
      return decode(WEndEncoding{_n, _j, std::move(*parts)});
    }
    if (_single_slice) {
      _done = true;
    } else if (_j < _n - _k) {
      ++_j;
      _compositions.reset();
    } else if (_k < _n) {
      ++_k;
      _j = 0;
      start_slice();
    } else {
      _done = true;
    }
  }
  return std::nullopt;
}

std::vector<Transformation> enumerate_wend(std::size_t n) {
  std::vector<Transformation> result;
  WEndStream                  stream(n);
  while (auto f = stream.next()) {
    result.push_back(std::move(*f));
  }
  return result;
}

BigInt count_wend(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("wEnd needs n >= 1");
  }
  BigInt total    = 0;
  BigInt binomial = 1;  // C(n - 1, k - 1)
  for (std::size_t k = 1; k <= n; ++k) {
    total += (n - k + 1) * binomial;
    binomial = binomial * (n - k) / k;
  }
  return total;
}

BigInt count_wend_closed_form(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("wEnd needs n >= 1");
  }
  if (n == 1) {
    return 1;
  }
  BigInt power = 1;
  power <<= (n - 2);
  return (n + 1) * power;
}

BigInt count_idempotents(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("wEnd needs n >= 1");
  }
  BigInt result = n;
  result *= n + 1;
  return result / 2;
}

////////////////////////////////////////////////////////////////////////
// Idempotents and regular elements
////////////////////////////////////////////////////////////////////////

bool is_idempotent(Transformation const& f) {
  return std::all_of(f.images().begin(), f.images().end(), [&f](auto y) {
    return f(y) == y;
  });
}

bool is_regular(Transformation const& f) {
  require_weak_endomorphism(f, "is_regular");
  auto const sizes = fibre_sizes(f);
  // fibres are listed by image point, so the ends are min and max im f
  for (std::size_t t = 1; t + 1 < sizes.size(); ++t) {
    if (sizes[t] > 1) {
      return false;
    }
  }
  return true;
}

Transformation pseudo_inverse(Transformation const& f) {
  if (!is_regular(f)) {
    throw std::invalid_argument("pseudo_inverse: " + pathmonoid::to_string(f)
                                + " is not regular");
  }
  auto const n = f.degree();
  // f = (1..i -> j, i + t -> j + t, rest -> j + k)
  auto const i = fibre_sizes(f).front();
  auto const j = static_cast<std::size_t>(f(1));
  auto const k = rank_of(f) - 1;

  std::vector<point_type> images(n);
  for (std::size_t x = 1; x <= n; ++x) {
    auto const shift  = std::min(x > j ? x - j : 0, k);
    images[x - 1]     = static_cast<point_type>(i + shift);
  }
  Transformation result(std::move(images));
  if (compose(compose(f, result), f) != f) {
    throw std::logic_error("pseudo_inverse: normal form does not reproduce "
                           + pathmonoid::to_string(f));
  }
  return result;
}

ClassificationReport classify(Transformation const& f) {
  ClassificationReport report;
  auto const           image = image_set(f);
  report.is_wend             = is_weak_endomorphism(f);
  report.is_end              = is_endomorphism(f);
  report.is_send             = is_strong_endomorphism(f);
  report.is_swend            = is_strong_weak_endomorphism(f);
  report.is_aut              = is_automorphism(f);
  report.is_idempotent       = is_idempotent(f);
  report.is_regular          = report.is_wend ? is_regular(f) : true;
  report.rank                = image.size();
  report.image_min           = image.front();
  report.image_max           = image.back();
  return report;
}

}  // namespace pathmonoid
