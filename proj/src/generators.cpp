#include "pathmonoid/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pathmonoid {

namespace {

  void check_generator_index(std::size_t n, std::size_t i) {
    if (n < 3) {
      throw std::invalid_argument("canonical generators need n >= 3, got "
                                  + std::to_string(n));
    }
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("generator index " + std::to_string(i)
                                  + " outside 1.."
                                  + std::to_string(n - 1));
    }
  }

  void append(GeneratorWord& w, GeneratorWord const& tail) {
    w.symbols.insert(w.symbols.end(), tail.symbols.begin(), tail.symbols.end());
  }

  // Calls visit(subset) on each size-element subset of {0..universe-1}, in
  // lexicographic order, until visit returns true.
  template <typename Visit>
  bool any_subset(std::size_t universe, std::size_t size, Visit&& visit) {
    if (size > universe) {
      return false;
    }
    std::vector<std::size_t> chosen(size);
    for (std::size_t t = 0; t < size; ++t) {
      chosen[t] = t;
    }
    while (true) {
      if (visit(chosen)) {
        return true;
      }
      std::size_t t = size;
      while (t > 0 && chosen[t - 1] == universe - size + t - 1) {
        --t;
      }
      if (t == 0) {
        return false;
      }
      ++chosen[t - 1];
      for (std::size_t s = t; s < size; ++s) {
        chosen[s] = chosen[s - 1] + 1;
      }
    }
  }

}  // namespace

Transformation make_alpha(std::size_t n, std::size_t i) {
  check_generator_index(n, i);
  std::vector<point_type> images(n);
  for (std::size_t x = 1; x <= n; ++x) {
    images[x - 1] = static_cast<point_type>(x <= i ? x : x - 1);
  }
  return Transformation(std::move(images));
}

Transformation make_beta(std::size_t n, std::size_t i) {
  check_generator_index(n, i);
  std::vector<point_type> images(n);
  for (std::size_t x = 1; x <= n; ++x) {
    images[x - 1] = static_cast<point_type>(x <= i ? x + 1 : x);
  }
  return Transformation(std::move(images));
}

Transformation to_transformation(GeneratorSymbol s, std::size_t n) {
  return s.kind == GeneratorSymbol::Kind::A ? make_alpha(n, s.index)
                                            : make_beta(n, s.index);
}

Transformation evaluate(GeneratorWord const& w) {
  auto result = identity(w.degree);
  for (auto const& s : w.symbols) {
    result = compose(result, to_transformation(s, w.degree));
  }
  return result;
}

std::string to_string(GeneratorWord const& w) {
  std::string result;
  for (auto const& s : w.symbols) {
    if (!result.empty()) {
      result += ' ';
    }
    result += static_cast<char>(s.kind);
    result += std::to_string(s.index);
  }
  return result;
}

GeneratorWord parse_word(std::string_view text, std::size_t n) {
  GeneratorWord w{n, {}};
  std::size_t   pos = 0;
  while (true) {
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    auto const start = pos;
    auto const c = std::tolower(static_cast<unsigned char>(text[pos]));
    if (c != 'a' && c != 'b') {
      throw ParseError("expected a generator 'a<i>' or 'b<i>'", start);
    }
    ++pos;
    auto const digits = pos;
    while (pos < text.size()
           && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::size_t index = 0;
    auto const [ptr, ec]
        = std::from_chars(text.data() + digits, text.data() + pos, index);
    if (pos == digits || ec != std::errc()) {
      throw ParseError("expected a generator index", digits);
    }
    if (pos < text.size()
        && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("unexpected character", pos);
    }
    if (index < 1 || index + 1 > n) {
      throw ParseError("generator index " + std::to_string(index)
                           + " outside 1.." + std::to_string(n - 1),
                       digits);
    }
    w.symbols.push_back(GeneratorSymbol{
        c == 'a' ? GeneratorSymbol::Kind::A : GeneratorSymbol::Kind::B, index});
  }
  return w;
}

std::vector<Transformation> canonical_generators(std::size_t n) {
  std::vector<Transformation> gens;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    gens.push_back(make_alpha(n, i));
  }
  gens.push_back(make_beta(n, n - 1));
  return gens;
}

std::vector<Transformation> rank_n_minus_1_elements(std::size_t n) {
  std::vector<Transformation> result;
  for (std::size_t i = 1; i < n; ++i) {
    result.push_back(make_alpha(n, i));
  }
  for (std::size_t i = 1; i < n; ++i) {
    result.push_back(make_beta(n, i));
  }
  return result;
}

GeneratorWord express_rank_n_minus_1(Transformation const& f) {
  using Kind   = GeneratorSymbol::Kind;
  auto const n = f.degree();
  if (n < 3 || !is_weak_endomorphism(f) || rank_of(f) != n - 1) {
    throw std::invalid_argument("express_rank_n_minus_1: "
                                + pathmonoid::to_string(f)
                                + " is not a weak endomorphism of rank n-1");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (f == make_alpha(n, i)) {
      if (i + 1 == n) {
        return GeneratorWord{n, {{Kind::B, n - 1}, {Kind::A, 1}}};
      }
      return GeneratorWord{n, {{Kind::A, i}}};
    }
    if (f == make_beta(n, i)) {
      if (i + 1 == n) {
        return GeneratorWord{n, {{Kind::B, n - 1}}};
      }
      return GeneratorWord{n, {{Kind::A, i}, {Kind::B, n - 1}}};
    }
  }
  // unreachable: the alphas and betas are all the rank n-1 elements
  throw std::logic_error("express_rank_n_minus_1: no canonical map matches "
                         + pathmonoid::to_string(f));
}

std::pair<Transformation, Transformation> split(Transformation const& f) {
  auto const n = f.degree();
  if (n < 3 || !is_weak_endomorphism(f)) {
    throw std::invalid_argument("split: " + pathmonoid::to_string(f)
                                + " is not a weak endomorphism with n >= 3");
  }
  auto const  code  = encode(f);
  auto const& parts = code.composition;
  auto const  k     = parts.size();
  auto const  j     = code.offset;
  if (k > n - 2) {
    throw std::invalid_argument("split: rank of " + pathmonoid::to_string(f)
                                + " exceeds n-2");
  }

  std::vector<point_type> first(n);
  std::vector<point_type> second(n);
  auto const              p = [](std::size_t x) {
    return static_cast<point_type>(x);
  };

  if (k == 1) {
    if (j == n - 1) {
      // constant n
      std::fill(first.begin(), first.end() - 1, p(2));
      first.back() = p(3);
      std::fill(second.begin(), second.end(), p(n));
      second.front() = p(n - 1);
    } else {
      std::fill(first.begin(), first.end() - 1, p(1));
      first.back() = p(2);
      second[0]    = p(j + 1);
      second[1]    = p(j + 1);
      std::fill(second.begin() + 2, second.end(), p(j + 2));
    }
    return {Transformation(std::move(first)), Transformation(std::move(second))};
  }

  // the last block with at least two points; it exists since k < n
  std::size_t last_big = k;
  while (parts[last_big - 1] < 2) {
    --last_big;
  }
  bool const        top   = (j == n - k);
  std::size_t const shift = top ? 1 : 0;

  // first factor: blocks keep their order, the last point of block last_big
  // is split off, so every later point moves up by one
  std::size_t x = 0;
  for (std::size_t t = 1; t <= k; ++t) {
    for (std::size_t s = 0; s < parts[t - 1]; ++s, ++x) {
      bool const moved = t > last_big || (t == last_big && s + 1 == parts[t - 1]);
      first[x]         = p(t + shift + (moved ? 1 : 0));
    }
  }
  // second factor: merges the two halves of block last_big back together
  for (std::size_t y = 1; y <= n; ++y) {
    std::size_t value;
    if (top) {
      value = (y <= last_big + 1) ? n - k - 1 + y : n - k - 2 + y;
      value = std::min(value, n);
    } else if (y <= last_big) {
      value = j + y;
    } else if (y <= k + 1) {
      value = j + y - 1;
    } else {
      value = j + k + 1;
    }
    second[y - 1] = p(value);
  }
  return {Transformation(std::move(first)), Transformation(std::move(second))};
}

GeneratorWord factorize(Transformation const& f) {
  auto const n = f.degree();
  if (n < 3) {
    throw std::invalid_argument("factorize needs n >= 3, got "
                                + std::to_string(n));
  }
  if (!is_weak_endomorphism(f)) {
    throw std::invalid_argument("factorize: " + pathmonoid::to_string(f)
                                + " is not a weak endomorphism");
  }
  auto const rank = rank_of(f);
  if (rank == n) {
    return GeneratorWord{n, {}};
  }
  if (rank == n - 1) {
    return express_rank_n_minus_1(f);
  }
  auto const [first, second] = split(f);
  auto word                  = factorize(first);
  append(word, factorize(second));
  return word;
}

std::vector<Transformation> closure(std::size_t                        n,
                                    std::vector<Transformation> const& gens) {
  for (auto const& g : gens) {
    if (g.degree() != n) {
      throw std::invalid_argument("closure: generator of degree "
                                  + std::to_string(g.degree())
                                  + ", expected " + std::to_string(n));
    }
  }
  std::unordered_set<Transformation> seen;
  std::deque<Transformation>         queue;
  auto const                         visit = [&](Transformation const& f) {
    if (seen.insert(f).second) {
      queue.push_back(f);
    }
  };
  visit(identity(n));
  for (auto const& g : gens) {
    visit(g);
  }
  while (!queue.empty()) {
    auto const f = std::move(queue.front());
    queue.pop_front();
    for (auto const& g : gens) {
      visit(compose(f, g));
    }
  }
  std::vector<Transformation> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

RankCertificate kernel_lower_bound(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("kernel_lower_bound needs n >= 3, got "
                                + std::to_string(n));
  }
  RankCertificate cert;
  cert.degree              = n;
  auto const gens          = canonical_generators(n);
  cert.generating_set_size = gens.size();

  auto const monoid = closure(n, gens);
  cert.closure_size = monoid.size();
  cert.expected_size = count_wend(n);

  bool const inside_wend
      = std::all_of(monoid.begin(), monoid.end(), [](auto const& f) {
          return is_weak_endomorphism(f);
        });

  std::set<KernelPartition> kernels;
  std::size_t               full_rank = 0;
  for (auto const& f : monoid) {
    auto const r = rank_of(f);
    if (r == n) {
      ++full_rank;
    } else if (r == n - 1) {
      kernels.insert(kernel(f));
    }
  }
  cert.distinct_rank_n_minus_1_kernels = kernels.size();
  cert.identity_unique_of_rank_n
      = full_rank == 1
        && std::binary_search(monoid.begin(), monoid.end(), identity(n));
  cert.verdict = inside_wend && cert.closure_size == cert.expected_size
                 && cert.generating_set_size
                        == cert.distinct_rank_n_minus_1_kernels;
  return cert;
}

bool has_generating_subset_of_size(std::size_t n, std::size_t size) {
  auto const all    = enumerate_wend(n);
  auto const target = all.size();
  return any_subset(all.size(), size, [&](auto const& chosen) {
    std::vector<Transformation> gens;
    gens.reserve(chosen.size());
    for (auto const t : chosen) {
      gens.push_back(all[t]);
    }
    return closure(n, gens).size() == target;
  });
}

std::size_t exhaustive_rank(std::size_t n) {
  auto const total = enumerate_wend(n).size();
  for (std::size_t size = 0; size <= total; ++size) {
    if (has_generating_subset_of_size(n, size)) {
      return size;
    }
  }
  // wEnd generates itself
  throw std::logic_error("exhaustive_rank: no generating set found");
}

}  // namespace pathmonoid
