#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tenstab/cones.hpp"
#include "tenstab/errors.hpp"
#include "tenstab/fixtures.hpp"

using namespace tenstab;

namespace {
std::vector<Int> ivec(std::vector<long long> v) {
  std::vector<Int> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("one-step cone is a single ray") {
  auto cells = subdivide(2, std::vector<int>{1}, 2);
  REQUIRE(cells.size() == 1);
  REQUIRE(cells[0].rays.size() == 1);
  CHECK(cells[0].rays[0] == ivec({1}));
  CHECK(cells[0].argmin == std::vector<int>{1, 1});

  RaySet rs = edges(2, std::vector<int>{1}, 2);
  REQUIRE(rs.rays.size() == 1);
  CHECK(rs.rays[0].gamma == ivec({-2, 2}));
  CHECK(rs.rays[0].weights == ivec({2}));
  CHECK(rs.a1 == 2);
  auto cands = weight_candidates(2, std::vector<int>{1}, 2);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0] == std::vector<Rat>{Rat(1)});
}

TEST_CASE("two-step cone for r=3 splits along the incomparable wall") {
  // the block sums of (1,3) and (2,2) cross inside the cone, so the chamber
  // complex has the extra ray gamma^(1) + gamma^(2)
  auto cells = subdivide(3, std::vector<int>{1, 2}, 2);
  CHECK(cells.size() == 2);
  std::set<std::vector<Int>> rays;
  for (const auto& c : cells) {
    CHECK(c.argmin == std::vector<int>{1, 1});  // 2 gamma_1 is minimal everywhere
    for (const auto& ray : c.rays) rays.insert(ray);
  }
  CHECK(rays == std::set<std::vector<Int>>{ivec({0, 1}), ivec({1, 0}), ivec({1, 1})});

  RaySet rs = edges(3, std::vector<int>{1, 2}, 2);
  REQUIRE(rs.rays.size() == 3);
  CHECK(rs.a1 == 3);
  std::set<std::vector<Int>> weights;
  for (const auto& ray : rs.rays) weights.insert(ray.weights);
  CHECK(weights ==
        std::set<std::vector<Int>>{ivec({3, 0}), ivec({0, 3}), ivec({1, 1})});
  // the two generator edges from the statement of the enumeration
  bool has_g1 = false, has_g2 = false;
  for (const auto& ray : rs.rays) {
    if (ray.gamma == ivec({-6, 3, 3})) has_g1 = true;   // 3 gamma^(1)
    if (ray.gamma == ivec({-3, -3, 6})) has_g2 = true;  // 3 gamma^(2)
  }
  CHECK(has_g1);
  CHECK(has_g2);

  auto cands = weight_candidates(3, std::vector<int>{1, 2}, 2);
  CHECK(cands == std::vector<std::vector<Rat>>{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}});
}

TEST_CASE("arity-one cones are not subdivided") {
  auto cells = subdivide(4, std::vector<int>{1, 2, 3}, 1);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].rays.size() == 3);
  RaySet rs = edges(4, std::vector<int>{1, 2, 3}, 1);
  REQUIRE(rs.rays.size() == 3);
  CHECK(rs.a1 == 4);
  std::set<std::vector<Int>> weights;
  for (const auto& ray : rs.rays) weights.insert(ray.weights);
  CHECK(weights == std::set<std::vector<Int>>{ivec({4, 0, 0}), ivec({0, 4, 0}), ivec({0, 0, 4})});
}

TEST_CASE("r=4 two-step candidates include the wall ray") {
  auto cands = weight_candidates(4, std::vector<int>{1, 3}, 2);
  CHECK(cands == std::vector<std::vector<Rat>>{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}});
}

TEST_CASE("scale limits") {
  CHECK_THROWS_AS(subdivide(7, std::vector<int>{1}, 2), Error);
  CHECK_THROWS_AS(subdivide(4, std::vector<int>{1}, 4), Error);
  CHECK_THROWS_AS(subdivide(4, std::vector<int>{2, 1}, 2), Error);
}

TEST_CASE("rays decompose into nonnegative weights reproducing the vector") {
  oracles::Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    int r = rng.uniform(2, 6);
    int t = rng.uniform(1, std::min(3, r - 1));
    std::set<int> rank_set;
    while (static_cast<int>(rank_set.size()) < t) rank_set.insert(rng.uniform(1, r - 1));
    std::vector<int> ranks(rank_set.begin(), rank_set.end());
    int s = rng.uniform(1, 3);
    RaySet rs = edges(r, ranks, s);
    CHECK(!rs.rays.empty());
    for (const ConeRay& ray : rs.rays) {
      // gamma nondecreasing, sums to zero
      Int sum(0);
      for (size_t i = 0; i < ray.gamma.size(); ++i) {
        sum += ray.gamma[i];
        if (i > 0) CHECK(ray.gamma[i - 1] <= ray.gamma[i]);
      }
      CHECK(sum == 0);
      for (const Int& w : ray.weights) CHECK(w >= 0);
      // reconstruction is enforced inside edges(); spot check one entry
      Int first(0);
      for (size_t i = 0; i < ranks.size(); ++i)
        first += ray.weights[i] * Int(ranks[i] - r);
      CHECK(ray.gamma[0] == first);
    }
  }
}

TEST_CASE("block minima are attained by the stored multi-index on each cell") {
  oracles::Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    int r = rng.uniform(2, 5);
    int t = rng.uniform(1, std::min(3, r - 1));
    std::set<int> rank_set;
    while (static_cast<int>(rank_set.size()) < t) rank_set.insert(rng.uniform(1, r - 1));
    std::vector<int> ranks(rank_set.begin(), rank_set.end());
    int s = rng.uniform(1, 3);
    for (const ConeCell& cell : subdivide(r, ranks, s)) {
      // random conic combination of the cell rays
      std::vector<Rat> m(static_cast<size_t>(t), Rat(0));
      for (const auto& ray : cell.rays) {
        Rat c(rng.uniform(1, 4));
        for (int i = 0; i < t; ++i) m[static_cast<size_t>(i)] += c * Rat(ray[static_cast<size_t>(i)]);
      }
      GammaVector g = gamma_vector(r, ranks, m);
      auto block_sum = [&](const std::vector<int>& multiset) {
        Rat v(0);
        for (int lv : multiset) v += g.at_level(lv, ranks);
        return v;
      };
      Rat cell_value = block_sum(cell.argmin);
      // compare against every multiset of levels
      std::vector<int> cur(static_cast<size_t>(s), 1);
      while (true) {
        CHECK(cell_value <= block_sum(cur));
        int j = s - 1;
        while (j >= 0 && cur[static_cast<size_t>(j)] == t + 1) --j;
        if (j < 0) break;
        int v = ++cur[static_cast<size_t>(j)];
        for (int k = j + 1; k < s; ++k) cur[static_cast<size_t>(k)] = v;
      }
    }
  }
}

TEST_CASE("candidate weights match the exhaustive grid verdict") {
  oracles::Rng rng(47);
  SearchFamily fam;
  int agreements = 0;
  for (int it = 0; it < 120; ++it) {
    int r = rng.uniform(2, 4);
    SheafModel model = oracles::random_model(rng, r);
    TensorForm form = oracles::random_symmetric_form(rng, r);
    int d1 = rng.uniform(0, 2), d2 = rng.uniform(-2, 3);
    if (d1 == 0 && d2 <= 0) d2 = 1;
    DeltaPoly delta(EvPoly({Rat(d1), Rat(d2)}), Space::P2);
    oracles::OracleVerdict fast =
        oracles::to_oracle(search_verdict(model, form, delta, fam).status);
    oracles::OracleVerdict slow = oracles::grid_verdict(model, form, delta, 2, 6);
    CHECK(fast == slow);
    if (fast == slow) ++agreements;
  }
  CHECK(agreements == 120);
}
