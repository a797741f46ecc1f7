#include <numeric>
#include <set>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "pathmonoid/compositions.hpp"

namespace pathmonoid {

  using Parts = std::vector<std::size_t>;

  namespace {
    std::vector<Parts> drain(CompositionGenerator& gen) {
      std::vector<Parts> result;
      while (auto c = gen.next()) {
        result.push_back(*c);
      }
      return result;
    }

    // all sequences of k positive parts summing to n, by recursion
    void brute(std::size_t n, std::size_t k, Parts& prefix,
               std::set<Parts>& out) {
      if (k == 0) {
        if (n == 0) {
          out.insert(prefix);
        }
        return;
      }
      for (std::size_t part = 1; part <= n; ++part) {
        prefix.push_back(part);
        brute(n - part, k - 1, prefix, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  TEST_CASE("compositions of 4 into 2 parts", "[compositions]") {
    CompositionGenerator gen(4, 2);
    REQUIRE(drain(gen) == std::vector<Parts>{{1, 3}, {2, 2}, {3, 1}});
    REQUIRE_FALSE(gen.next());
    gen.reset();
    REQUIRE(drain(gen).size() == 3);
  }

  TEST_CASE("colex order of cut sets", "[compositions]") {
    // cut sets of 5 into 3 parts: {1,2} {1,3} {2,3} {1,4} {2,4} {3,4}
    CompositionGenerator gen(5, 3);
    REQUIRE(drain(gen)
            == std::vector<Parts>{{1, 1, 3},
                                  {1, 2, 2},
                                  {2, 1, 2},
                                  {1, 3, 1},
                                  {2, 2, 1},
                                  {3, 1, 1}});
  }

  TEST_CASE("degenerate part counts", "[compositions]") {
    CompositionGenerator one(6, 1);
    REQUIRE(drain(one) == std::vector<Parts>{{6}});
    CompositionGenerator all(4, 4);
    REQUIRE(drain(all) == std::vector<Parts>{{1, 1, 1, 1}});
    REQUIRE_THROWS_AS(CompositionGenerator(3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(CompositionGenerator(3, 4), std::invalid_argument);
  }

  TEST_CASE("every composition exactly once", "[compositions]") {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        CompositionGenerator gen(n, k);
        auto const           produced = drain(gen);
        REQUIRE(produced.size() == oracle::binomial(n - 1, k - 1));
        std::set<Parts> expected;
        Parts           prefix;
        brute(n, k, prefix, expected);
        REQUIRE(std::set<Parts>(produced.begin(), produced.end()) == expected);
      }
    }
  }

}  // namespace pathmonoid
