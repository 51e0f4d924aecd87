// Test-only independent oracles. Nothing here may call into the code paths it
// checks: Euler characteristics come from evaluation-matrix ranks, verdicts
// from exhaustive weight grids, counts from direct enumeration.
#pragma once

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "tenstab/filtration.hpp"
#include "tenstab/linalg.hpp"
#include "tenstab/stability.hpp"

namespace oracles {

using namespace tenstab;

// chi(I_Z(t)) for a reduced set of points on P2, computed from scratch:
// h0 of degree-t curves through the points equals the monomial count minus
// the rank of the evaluation matrix, and chi is interpolated from three
// large-t samples where the higher cohomology vanishes.
inline EvPoly chi_points_oracle(const std::vector<std::pair<Rat, Rat>>& points) {
  auto h0 = [&](int t) {
    std::vector<std::pair<int, int>> monomials;
    for (int a = 0; a <= t; ++a)
      for (int b = 0; a + b <= t; ++b) monomials.emplace_back(a, b);
    Mat eval;
    for (const auto& [x, y] : points) {
      Vec row;
      for (auto [a, b] : monomials) {
        Rat v(1);
        for (int k = 0; k < a; ++k) v *= x;
        for (int k = 0; k < b; ++k) v *= y;
        row.push_back(v);
      }
      eval.push_back(std::move(row));
    }
    return Rat(static_cast<long long>(monomials.size())) - Rat(rank_of(eval));
  };
  int t0 = static_cast<int>(points.size()) + 1;
  Rat y0 = h0(t0), y1 = h0(t0 + 1), y2 = h0(t0 + 2);
  Rat d1 = y1 - y0;
  Rat half_d2 = (y2 - Rat(2) * y1 + y0) / Rat(2);
  Rat t0r(t0);
  // Newton form y0 + d1 (t - t0) + half_d2 (t - t0)(t - t0 - 1)
  return EvPoly({half_d2, d1 - half_d2 * (Rat(2) * t0r + Rat(1)),
                 y0 - d1 * t0r + half_d2 * t0r * (t0r + Rat(1))});
}

// Nested proper-subset chain count by direct enumeration over bitmasks.
inline long chain_count_oracle(int r, int max_steps) {
  std::vector<unsigned> subsets;
  for (unsigned m = 1; m + 1 < (1u << r); ++m) subsets.push_back(m);
  long total = 0;
  std::vector<unsigned> stack;
  std::function<void(int)> rec = [&](int depth) {
    if (depth > 0) ++total;
    if (depth == max_steps) return;
    for (unsigned s : subsets) {
      if (!stack.empty()) {
        unsigned prev = stack.back();
        if ((prev & s) != prev || prev == s) continue;
      }
      stack.push_back(s);
      rec(depth + 1);
      stack.pop_back();
    }
  };
  rec(0);
  return total;
}

// Verdict over an explicit grid of integer weight vectors, evaluated straight
// from the stability left hand side. Independent of the candidate machinery.
enum class OracleVerdict { Stable, Semistable, Unstable };

inline OracleVerdict grid_verdict(const SheafModel& model, const TensorForm& form,
                                  const DeltaPoly& delta, int max_steps, int grid_max) {
  const EvPoly P = model.hilbert();
  bool equality = false;
  for (const CoordChain& chain : enumerate_coordinate_filtrations(model, max_steps)) {
    std::vector<Step> steps;
    for (const auto& subset : chain) steps.push_back(coordinate_step(model, subset));
    std::vector<int> ranks;
    for (const Step& st : steps) ranks.push_back(st.rank);
    VanishingPattern pattern = pattern_from_form(form, steps);
    int t = static_cast<int>(chain.size());
    std::vector<int> w(static_cast<size_t>(t), 1);
    while (true) {
      std::vector<Rat> weights;
      for (int x : w) weights.emplace_back(x);
      MuResult mr = mu(pattern, model.rank(), ranks, weights);
      EvPoly lhs = delta_stability_lhs(P, make_filtration(steps, weights), mr, delta);
      int sign = sign_eventual(lhs);
      if (sign > 0) return OracleVerdict::Unstable;
      if (sign == 0) equality = true;
      int j = t - 1;
      while (j >= 0 && w[static_cast<size_t>(j)] == grid_max) {
        w[static_cast<size_t>(j)] = 1;
        --j;
      }
      if (j < 0) break;
      ++w[static_cast<size_t>(j)];
    }
  }
  return equality ? OracleVerdict::Semistable : OracleVerdict::Stable;
}

inline OracleVerdict to_oracle(Status s) {
  switch (s) {
    case Status::Stable: return OracleVerdict::Stable;
    case Status::StrictlySemistable: return OracleVerdict::Semistable;
    case Status::Unstable: return OracleVerdict::Unstable;
  }
  return OracleVerdict::Stable;
}

// Deterministic generators shared by the property and acceptance suites.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
};

inline SheafModel random_model(Rng& rng, int rank, bool zero_twists = false) {
  std::vector<Summand> s;
  for (int i = 0; i < rank; ++i)
    s.push_back({zero_twists ? 0 : rng.uniform(-1, 1), rng.uniform(0, 2)});
  return SheafModel(Space::P2, std::move(s));
}

inline TensorForm random_symmetric_form(Rng& rng, int dim, int lo = -2, int hi = 2) {
  while (true) {
    Mat m(static_cast<size_t>(dim), Vec(static_cast<size_t>(dim), Rat(0)));
    bool any = false;
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        if (rng.uniform(0, 1) == 0) continue;
        Rat v(rng.uniform(lo, hi));
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        if (v != Rat(0)) any = true;
      }
    if (any) return TensorForm::bilinear(m, Symmetry::Symmetric);
  }
}

inline TensorForm random_nondegenerate(Rng& rng, int dim, bool antisymmetric) {
  while (true) {
    Mat m(static_cast<size_t>(dim), Vec(static_cast<size_t>(dim), Rat(0)));
    for (int i = 0; i < dim; ++i)
      for (int j = antisymmetric ? i + 1 : i; j < dim; ++j) {
        Rat v(rng.uniform(-3, 3));
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        m[static_cast<size_t>(j)][static_cast<size_t>(i)] = antisymmetric ? -v : v;
      }
    if (det(m) != Rat(0))
      return TensorForm::bilinear(m, antisymmetric ? Symmetry::Antisymmetric
                                                   : Symmetry::Symmetric);
  }
}

inline VanishingPattern random_upward_pattern(Rng& rng, int levels, int arity) {
  while (true) {
    std::vector<std::vector<int>> gens;
    int count = rng.uniform(1, 3);
    for (int g = 0; g < count; ++g) {
      std::vector<int> idx;
      for (int j = 0; j < arity; ++j) idx.push_back(rng.uniform(0, levels - 1));
      gens.push_back(std::move(idx));
    }
    VanishingPattern p = VanishingPattern::from_generators(levels, arity, gens);
    if (p.any_nonzero()) return p;
  }
}

// Zero-weight instance: palindromic ranks and weights, invertible blocks on
// the antidiagonal, optional noise of strictly positive weight.
struct ZeroWeightInstance {
  TensorForm form;
  std::vector<int> ranks;
  std::vector<Rat> weights;
};

inline ZeroWeightInstance random_zero_weight_instance(Rng& rng) {
  static const std::vector<std::pair<int, std::vector<int>>> shapes = {
      {2, {1}}, {3, {1, 2}}, {4, {2}}, {4, {1, 3}}, {4, {1, 2, 3}}};
  auto [p, ranks] = shapes[static_cast<size_t>(rng.uniform(0, static_cast<int>(shapes.size()) - 1))];
  int t = static_cast<int>(ranks.size());
  std::vector<Rat> weights(static_cast<size_t>(t), Rat(1));
  for (int i = 0; i < (t + 1) / 2; ++i) {
    Rat w(rng.uniform(1, 3));
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(t - 1 - i)] = w;
  }
  auto rank_at = [&](int i) { return i <= 0 ? 0 : (i >= t + 1 ? p : ranks[static_cast<size_t>(i - 1)]); };

  Mat m(static_cast<size_t>(p), Vec(static_cast<size_t>(p), Rat(0)));
  for (int i = 1; i <= t + 1; ++i) {
    int j = t + 2 - i;
    if (i > j) continue;
    int bi = rank_at(i) - rank_at(i - 1);
    while (true) {  // invertible block, mirrored symmetrically
      Mat block(static_cast<size_t>(bi), Vec(static_cast<size_t>(bi), Rat(0)));
      for (int a = 0; a < bi; ++a)
        for (int b = 0; b < bi; ++b) block[static_cast<size_t>(a)][static_cast<size_t>(b)] = Rat(rng.uniform(-2, 2));
      if (i == j)  // central block must be symmetric
        for (int a = 0; a < bi; ++a)
          for (int b = a + 1; b < bi; ++b)
            block[static_cast<size_t>(b)][static_cast<size_t>(a)] = block[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (det(block) == Rat(0)) continue;
      for (int a = 0; a < bi; ++a)
        for (int b = 0; b < bi; ++b) {
          int row = rank_at(i - 1) + a;
          int col = rank_at(j - 1) + b;
          m[static_cast<size_t>(row)][static_cast<size_t>(col)] = block[static_cast<size_t>(a)][static_cast<size_t>(b)];
          m[static_cast<size_t>(col)][static_cast<size_t>(row)] = block[static_cast<size_t>(a)][static_cast<size_t>(b)];
        }
      break;
    }
  }
  // strictly positive-weight noise keeps mu at zero and det unchanged
  GammaVector g = gamma_vector(p, ranks, weights);
  for (int extra = rng.uniform(0, 3); extra > 0; --extra) {
    int a = rng.uniform(0, p - 1), b = rng.uniform(0, p - 1);
    if (g.entries[static_cast<size_t>(a)] + g.entries[static_cast<size_t>(b)] <= Rat(0)) continue;
    Rat v(rng.uniform(1, 2));
    m[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
    m[static_cast<size_t>(b)][static_cast<size_t>(a)] = v;
  }
  return ZeroWeightInstance{TensorForm::bilinear(m, Symmetry::Symmetric), ranks, weights};
}

}  // namespace oracles
