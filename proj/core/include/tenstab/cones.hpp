#pragma once

#include <span>
#include <vector>

#include "tenstab/rational.hpp"

namespace tenstab {

/// One polyhedral cell of the weight cone, in weight coordinates m in R^t
/// (m >= 0 parametrizes the cone spanned by the gamma^{(r_i)}). Inequality
/// rows a mean a.m >= 0. The block sums L_I are linear on the cell and the
/// stored multi-index attains their minimum throughout it.
struct ConeCell {
  std::vector<int> argmin;              // sorted multi-index, 1-based levels
  std::vector<std::vector<Int>> inequalities;
  std::vector<std::vector<Int>> rays;   // primitive integer extreme rays
};

struct ConeRay {
  std::vector<Int> gamma;    // integer ray scaled by r
  std::vector<Int> weights;  // recovered m_i, nonnegative integers
};

struct RaySet {
  std::vector<ConeRay> rays;  // sorted lexicographically by gamma
  Int a1;                     // max recovered weight over all rays
};

/// Subdivide the weight cone finely enough that every minimum of block sums
/// over an upward-closed nonvanishing set is linear on each cell. Cells have
/// disjoint interiors and cover the cone. Desk scale: r <= 6, s <= 3, t <= 3.
std::vector<ConeCell> subdivide(int r, std::span<const int> ranks, int s);

/// Extreme rays over all cells, scaled by r, with the weights m_i recovered
/// from gamma = sum m_i gamma^{(r_i)}.
RaySet edges(int r, std::span<const int> ranks, int s);

/// Weight vectors to test stability against: the edge weights reduced to
/// primitive form. Zero entries mean the corresponding step is dropped;
/// single-step candidates are normalized to m = 1.
std::vector<std::vector<Rat>> weight_candidates(int r, std::span<const int> ranks, int s);

}  // namespace tenstab
