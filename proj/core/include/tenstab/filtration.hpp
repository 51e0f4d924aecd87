#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tenstab/form.hpp"
#include "tenstab/poly.hpp"
#include "tenstab/sheaf.hpp"

namespace tenstab {

/// gamma = sum_i m_i gamma^{(r_i)} where gamma^{(k)} has k entries equal to
/// k-r followed by r-k entries equal to k. Entries are nondecreasing and sum
/// to zero.
struct GammaVector {
  std::vector<Rat> entries;
  /// Value shared by every slot of filtration level i (1-based; level t+1 is
  /// the ambient block).
  const Rat& at_level(int level, std::span<const int> ranks) const;
};

GammaVector gamma_vector(int r, std::span<const int> ranks, std::span<const Rat> weights);

/// Which blocks of a filtration the form does not vanish on: one boolean per
/// multi-index in {1..t+1}^s, OR-ed over the c copies. Upward closed.
class VanishingPattern {
 public:
  VanishingPattern(int levels, int arity);
  /// Build from the multi-indexes known to be nonzero (0-based levels); the
  /// upward closure is taken.
  static VanishingPattern from_generators(int levels, int arity,
                                          const std::vector<std::vector<int>>& generators);

  int levels() const { return levels_; }
  int arity() const { return arity_; }
  bool nonzero(std::span<const int> index) const { return nz_[offset(index)] != 0; }
  void mark_nonzero(std::span<const int> index);

  bool upward_closed() const;
  bool any_nonzero() const;
  std::vector<std::vector<int>> nonzero_indexes() const;

 private:
  size_t offset(std::span<const int> index) const;
  int levels_, arity_;
  std::vector<char> nz_;
};

/// One resolved filtration step: rank plus the Hilbert/degree data the
/// stability inequalities consume. Coordinate steps carry their slot subset,
/// subspace steps a fiber basis, declared steps only the stated numbers.
struct Step {
  int rank = 0;
  EvPoly hilbert;
  Rat degree;
  std::optional<std::vector<int>> slots;  // sorted 0-based summand indices
  std::optional<Mat> basis;               // fiber subspace basis, rows
  std::string label;
};

Step coordinate_step(const SheafModel& model, std::vector<int> slots);
Step declared_step(const SheafModel& model, int rank, EvPoly hilbert, std::string label);
/// Fiber-subspace step; the Hilbert polynomial must be declared since it is
/// not determined by the fiber data.
Step subspace_step(const SheafModel& model, Mat basis, EvPoly hilbert, std::string label);

struct WeightedFiltration {
  std::vector<Step> steps;   // strictly increasing ranks, all below the ambient rank
  std::vector<Rat> weights;  // positive, same length; single step uses m1 = 1
};

WeightedFiltration make_filtration(std::vector<Step> steps, std::vector<Rat> weights);

/// Extract the vanishing pattern of a dense form along a filtration whose
/// steps all carry slots or a basis.
VanishingPattern pattern_from_form(const TensorForm& form, std::span<const Step> steps);

struct MuResult {
  Rat mu;
  std::vector<int> argmin;   // lexicographically least minimizer, 0-based levels
  std::vector<int> epsilon;  // epsilon_i = nu_i(argmin), one per step
  std::vector<int> nu;       // same numbers, kept alongside epsilon
};

/// Minimum of sum_j gamma_{r_{i_j}} over the nonzero multi-indexes.
MuResult mu(const VanishingPattern& pattern, int r, std::span<const int> ranks,
            std::span<const Rat> weights);

}  // namespace tenstab
