#pragma once

#include <span>
#include <string>
#include <vector>

#include "tenstab/poly.hpp"

namespace tenstab {

/// One line-bundle or ideal-sheaf summand: twist is the determinant degree,
/// colength the length of the zero-dimensional subscheme (0 for a line
/// bundle). On P1 the colength must be 0.
struct Summand {
  int twist = 0;
  int colength = 0;
};

/// A split sheaf O(a_1) x I_{Z_1} + ... on P1 or P2, the ambient object every
/// filtration and form in this library lives on.
class SheafModel {
 public:
  SheafModel(Space space, std::vector<Summand> summands);

  Space space() const { return space_; }
  int rank() const { return static_cast<int>(summands_.size()); }
  int degree() const;
  const std::vector<Summand>& summands() const { return summands_; }

  EvPoly hilbert() const;
  EvPoly summand_hilbert(int i) const;
  /// Hilbert polynomial of the coordinate subsheaf picked out by `slots`
  /// (0-based summand indices).
  EvPoly subset_hilbert(std::span<const int> slots) const;
  int subset_degree(std::span<const int> slots) const;

 private:
  Space space_;
  std::vector<Summand> summands_;
};

inline EvPoly sheaf_hilbert(const SheafModel& m) { return m.hilbert(); }

/// A chain of nested coordinate subsets, each a sorted list of 0-based slots.
using CoordChain = std::vector<std::vector<int>>;

/// All strictly nested chains of proper nonempty coordinate subsets of length
/// at most max_steps, in canonical order (by length, then lexicographically
/// with subsets ordered by size then elements). Ranks increase strictly along
/// every chain.
std::vector<CoordChain> enumerate_coordinate_filtrations(const SheafModel& model, int max_steps);

}  // namespace tenstab
