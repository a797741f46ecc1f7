#include <algorithm>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "pathmonoid/endomorphisms.hpp"

namespace pathmonoid {

  using Parts = std::vector<std::size_t>;

  TEST_CASE("weak endomorphism membership", "[endomorphisms]") {
    for (std::size_t n = 1; n <= 6; ++n) {
      REQUIRE(is_weak_endomorphism(identity(n)));
    }
    REQUIRE(is_weak_endomorphism({1, 2, 2, 3}));
    REQUIRE_FALSE(is_weak_endomorphism({2, 1}));
    REQUIRE_FALSE(is_weak_endomorphism({1, 1, 3}));
  }

  TEST_CASE("characterization by order and interval image",
            "[endomorphisms]") {
    REQUIRE_FALSE(is_weak_endomorphism_by_characterization({1, 1, 3}));
    REQUIRE(is_weak_endomorphism_by_characterization({1, 2, 2}));
    REQUIRE_FALSE(is_weak_endomorphism_by_characterization({2, 1, 2}));

    for (std::size_t n = 1; n <= kDefaultBruteForceCap; ++n) {
      for (auto const& f : oracle::all_maps(n)) {
        bool const weak = oracle::weak_by_definition(f);
        REQUIRE(is_weak_endomorphism(f) == weak);
        REQUIRE(is_weak_endomorphism_by_characterization(f) == weak);
        if (weak) {
          REQUIRE(is_order_preserving(f));
          REQUIRE(is_interval(image_set(f)));
        }
      }
    }
    std::mt19937 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
      auto const n = std::size_t{7} + trial % 6;
      auto       f = oracle::random_map(n, rng);
      if (trial % 2 == 0) {
        // random maps are almost never weak; also try sorted ones
        std::vector<point_type> images(f.images().begin(), f.images().end());
        std::sort(images.begin(), images.end());
        f = Transformation(images);
      }
      REQUIRE(is_weak_endomorphism(f) == oracle::weak_by_definition(f));
      REQUIRE(is_weak_endomorphism_by_characterization(f)
              == oracle::weak_by_definition(f));
    }
  }

  TEST_CASE("the other endomorphism classes", "[endomorphisms]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const id = identity(n);
      REQUIRE(is_endomorphism(id));
      REQUIRE(is_strong_endomorphism(id));
      REQUIRE(is_strong_weak_endomorphism(id));
      REQUIRE(is_automorphism(id));
    }
    REQUIRE_FALSE(is_endomorphism({2, 2, 2}));
    REQUIRE(is_strong_weak_endomorphism({2, 2, 2}));
    REQUIRE_FALSE(is_endomorphism({1, 1, 2}));
    REQUIRE(is_weak_endomorphism({1, 1, 2}));
    // (1, 3) is not an arc, yet 1 -> 1 and 3 -> 2 form one
    REQUIRE_FALSE(is_strong_weak_endomorphism({1, 1, 2}));
    REQUIRE_FALSE(is_automorphism({2, 1}));
  }

  TEST_CASE("structure of the small classes by exhaustion", "[endomorphisms]") {
    for (std::size_t n = 1; n <= kDefaultBruteForceCap; ++n) {
      for (auto const& f : oracle::all_maps(n)) {
        bool const is_id = f == identity(n);
        REQUIRE(is_endomorphism(f) == is_id);
        REQUIRE(is_strong_endomorphism(f) == is_id);
        REQUIRE(is_automorphism(f) == is_id);
        REQUIRE(is_strong_weak_endomorphism(f)
                == (is_id || oracle::is_constant(f)));
      }
    }
  }

  TEST_CASE("encode", "[endomorphisms]") {
    REQUIRE(encode({2, 2, 3}) == WEndEncoding{3, 1, {2, 1}});
    REQUIRE(encode({4, 4, 4, 4}) == WEndEncoding{4, 3, {4}});
    REQUIRE(encode(identity(3)) == WEndEncoding{3, 0, {1, 1, 1}});
    REQUIRE_THROWS_AS(encode({1, 1, 3}), std::invalid_argument);
  }

  TEST_CASE("decode", "[endomorphisms]") {
    REQUIRE(decode({4, 0, {2, 1, 1}}) == Transformation({1, 1, 2, 3}));
    REQUIRE(decode({4, 3, {4}}) == Transformation({4, 4, 4, 4}));
    REQUIRE(decode({3, 0, {1, 1, 1}}) == identity(3));
    REQUIRE_THROWS_AS(decode({4, 0, {2, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(decode({4, 2, {2, 1, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(decode({4, 0, {2, 0, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(decode({0, 0, {}}), std::invalid_argument);
    REQUIRE_THROWS_AS(decode({3, 0, {}}), std::invalid_argument);
  }

  TEST_CASE("codec is a bijection", "[endomorphisms]") {
    for (std::size_t n = 1; n <= kDefaultBruteForceCap; ++n) {
      for (auto const& f : oracle::weak_by_filtering(n)) {
        auto const e = encode(f);
        REQUIRE(decode(e) == f);
        // fibre of j + t has i_t points
        auto const fib = oracle::fibres(f);
        REQUIRE(fib.begin()->first == e.offset + 1);
        std::size_t t = 0;
        for (auto const& [y, points] : fib) {
          REQUIRE(points.size() == e.composition[t++]);
        }
      }
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 0; j <= n - k; ++j) {
          CompositionGenerator gen(n, k);
          while (auto parts = gen.next()) {
            WEndEncoding const e{n, j, *parts};
            auto const         f = decode(e);
            REQUIRE(is_weak_endomorphism(f));
            REQUIRE(encode(f) == e);
          }
        }
      }
    }
  }

  TEST_CASE("enumerate_wend small cases", "[endomorphisms]") {
    using T = std::vector<Transformation>;
    REQUIRE(enumerate_wend(1) == T{{1}});
    REQUIRE(enumerate_wend(2) == T{{1, 1}, {2, 2}, {1, 2}});
    REQUIRE(enumerate_wend(3)
            == T{{1, 1, 1},
                 {2, 2, 2},
                 {3, 3, 3},
                 {1, 2, 2},
                 {1, 1, 2},
                 {2, 3, 3},
                 {2, 2, 3},
                 {1, 2, 3}});
    REQUIRE_THROWS_AS(enumerate_wend(0), std::invalid_argument);
  }

  TEST_CASE("enumeration is complete", "[endomorphisms]") {
    for (std::size_t n = 1; n <= kDefaultBruteForceCap; ++n) {
      auto const listed = enumerate_wend(n);
      auto const expected = oracle::weak_by_filtering(n);
      std::set<Transformation> const as_set(listed.begin(), listed.end());
      REQUIRE(as_set.size() == listed.size());
      REQUIRE(as_set == std::set<Transformation>(expected.begin(),
                                                 expected.end()));
    }
    for (std::size_t n = 1; n <= 12; ++n) {
      REQUIRE(enumerate_wend(n).size() == count_wend(n));
    }
  }

  TEST_CASE("stream slices partition the enumeration", "[endomorphisms]") {
    std::size_t const           n = 6;
    std::vector<Transformation> stitched;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t j = 0; j <= n - k; ++j) {
        WEndStream slice(n, k, j);
        while (auto f = slice.next()) {
          REQUIRE(rank_of(*f) == k);
          REQUIRE((*f)(1) == j + 1);
          stitched.push_back(*f);
        }
      }
    }
    REQUIRE(stitched == enumerate_wend(n));

    WEndStream stream(n);
    std::size_t first_pass = 0;
    while (stream.next()) {
      ++first_pass;
    }
    REQUIRE_FALSE(stream.next());
    stream.reset();
    std::size_t second_pass = 0;
    while (stream.next()) {
      ++second_pass;
    }
    REQUIRE(first_pass == second_pass);
    REQUIRE_THROWS_AS(WEndStream(4, 2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(WEndStream(4, 5, 0), std::invalid_argument);
  }

  TEST_CASE("count_wend", "[endomorphisms]") {
    REQUIRE(count_wend(1) == 1);
    REQUIRE(count_wend(4) == 20);
    REQUIRE(count_wend(16) == 278528);
    for (std::size_t n = 1; n <= 40; ++n) {
      REQUIRE(count_wend(n) == oracle::wend_size_by_pascal(n));
    }
    for (std::size_t n = 1; n <= 200; ++n) {
      REQUIRE(count_wend(n) == count_wend_closed_form(n));
    }
    REQUIRE(count_wend(64) == BigInt("299759591197780213760"));
    REQUIRE(count_wend(100)
            == BigInt("32008177655762792387791755935744"));
    REQUIRE_THROWS_AS(count_wend(0), std::invalid_argument);
  }

  TEST_CASE("count_idempotents", "[endomorphisms]") {
    REQUIRE(count_idempotents(1) == 1);
    REQUIRE(count_idempotents(4) == 10);
    REQUIRE(count_idempotents(16) == 136);
    for (std::size_t n = 1; n <= 8; ++n) {
      auto const all = enumerate_wend(n);
      auto const idempotents = std::count_if(
          all.begin(), all.end(), [](auto const& f) { return is_idempotent(f); });
      REQUIRE(count_idempotents(n) == idempotents);
    }
  }

  TEST_CASE("is_idempotent", "[endomorphisms]") {
    REQUIRE(is_idempotent(identity(4)));
    REQUIRE(is_idempotent({1, 1, 2, 3}) == false);
    REQUIRE(is_idempotent({1, 2, 2, 3}) == false);
    // i = 1, k = 2 in the idempotent normal form: 1 -> 1, 2 -> 2, rest -> 3
    REQUIRE(is_idempotent({1, 2, 3, 3}));
    REQUIRE_FALSE(is_idempotent({2, 3, 3}));
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& f : oracle::all_maps(n)) {
        REQUIRE(is_idempotent(f) == (compose(f, f) == f));
      }
    }
  }

  TEST_CASE("is_regular", "[endomorphisms]") {
    REQUIRE_FALSE(is_regular({1, 2, 2, 3}));
    REQUIRE(is_regular({1, 1, 2, 3}));
    REQUIRE_THROWS_AS(is_regular({2, 1}), std::invalid_argument);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& f : enumerate_wend(n)) {
        REQUIRE(is_regular(f));
      }
    }
    for (std::size_t n = 4; n <= 8; ++n) {
      std::vector<point_type> images{1, 2, 2};
      for (point_type x = 3; x < n; ++x) {
        images.push_back(x);
      }
      REQUIRE_FALSE(is_regular(Transformation(images)));
    }
  }

  TEST_CASE("regularity agrees with the existence of an inner inverse",
            "[endomorphisms]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const monoid = oracle::weak_by_filtering(n);
      for (auto const& f : monoid) {
        REQUIRE(is_regular(f) == oracle::has_inner_inverse(f, monoid));
      }
    }
  }

  TEST_CASE("pseudo_inverse", "[endomorphisms]") {
    auto const check = [](Transformation const& f) {
      auto const g = pseudo_inverse(f);
      REQUIRE(is_weak_endomorphism(g));
      REQUIRE(compose(compose(f, g), f) == f);
      return g;
    };
    REQUIRE(check(identity(5)) == identity(5));
    // 1, 2 -> 2, 3 -> 3 gives i = 2, j = 2, k = 1 and the mirror map is f
    REQUIRE(check({2, 2, 3}) == Transformation({2, 2, 3}));
    REQUIRE(check({4, 4, 4, 4}) == Transformation({4, 4, 4, 4}));
    REQUIRE(check({1, 1, 2, 3}) == Transformation({2, 3, 4, 4}));
    REQUIRE_THROWS_AS(pseudo_inverse({1, 2, 2, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(pseudo_inverse({2, 1}), std::invalid_argument);

    for (std::size_t n = 1; n <= 7; ++n) {
      for (auto const& f : enumerate_wend(n)) {
        if (is_regular(f)) {
          check(f);
        }
      }
    }
  }

  TEST_CASE("classify", "[endomorphisms]") {
    auto const id = classify(identity(3));
    REQUIRE(id.is_end);
    REQUIRE(id.is_wend);
    REQUIRE(id.is_send);
    REQUIRE(id.is_swend);
    REQUIRE(id.is_aut);
    REQUIRE(id.is_idempotent);
    REQUIRE(id.is_regular);
    REQUIRE(id.rank == 3);

    auto const c = classify({2, 2, 2});
    REQUIRE(c.is_wend);
    REQUIRE(c.is_swend);
    REQUIRE_FALSE(c.is_end);
    REQUIRE(c.is_idempotent);
    REQUIRE(c.image_min == 2);
    REQUIRE(c.image_max == 2);

    auto const w = classify({1, 2, 2, 3});
    REQUIRE(w.is_wend);
    REQUIRE_FALSE(w.is_end);
    REQUIRE_FALSE(w.is_regular);
    REQUIRE(w.rank == 3);

    REQUIRE_FALSE(classify({2, 1}).is_wend);

    // inclusions between the classes
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& f : oracle::all_maps(n)) {
        auto const r = classify(f);
        REQUIRE((!r.is_aut || r.is_send));
        REQUIRE((!r.is_send || r.is_end));
        REQUIRE((!r.is_end || r.is_wend));
        REQUIRE((!r.is_swend || r.is_wend));
        REQUIRE((!r.is_idempotent || r.is_regular));
        REQUIRE(r.rank == rank_of(f));
        if (r.is_wend) {
          REQUIRE(r.image_max - r.image_min + 1 == r.rank);
          REQUIRE(r.is_regular == is_regular(f));
        }
      }
    }
  }

}  // namespace pathmonoid
