#include "pathmonoid/compositions.hpp"

#include <stdexcept>
#include <string>

namespace pathmonoid {

CompositionGenerator::CompositionGenerator(std::size_t n, std::size_t k)
    : _n(n), _k(k), _cuts(), _done(false) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("no compositions of " + std::to_string(n)
                                + " into " + std::to_string(k) + " parts");
  }
  reset();
}

void CompositionGenerator::reset() {
  _cuts.resize(_k - 1);
  for (std::size_t t = 0; t + 1 < _k; ++t) {
    _cuts[t] = t + 1;
  }
  _done = false;
}

std::optional<std::vector<std::size_t>> CompositionGenerator::next() {
  if (_done) {
    return std::nullopt;
  }
  std::vector<std::size_t> parts;
  parts.reserve(_k);
  std::size_t previous = 0;
  for (auto const cut : _cuts) {
    parts.push_back(cut - previous);
    previous = cut;
  }
  parts.push_back(_n - previous);

  // colex successor: bump the lowest cut that has room, reset those below it
  std::size_t t = 0;
  while (t < _cuts.size()) {
    auto const limit = (t + 1 < _cuts.size()) ? _cuts[t + 1] : _n;
    if (_cuts[t] + 1 < limit) {
      break;
    }
    ++t;
  }
  if (t == _cuts.size()) {
    _done = true;
  } else {
    ++_cuts[t];
    for (std::size_t s = 0; s < t; ++s) {
      _cuts[s] = s + 1;
    }
  }
  return parts;
}

}  // namespace pathmonoid
