#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tenstab/linalg.hpp"

namespace tenstab {

enum class Symmetry { None, Symmetric, Antisymmetric };

/// Dense multilinear form with exact rational entries: arity s, c copies,
/// acting on a dim-p fiber. The symmetry flag is meaningful for s=2, c=1 and
/// is validated against the entries.
class TensorForm {
 public:
  TensorForm(int arity, int copies, int dim, Symmetry sym = Symmetry::None);
  /// Bilinear form (s=2, c=1) from a square matrix.
  static TensorForm bilinear(const Mat& m, Symmetry sym = Symmetry::None);

  int arity() const { return arity_; }
  int copies() const { return copies_; }
  int dim() const { return dim_; }
  Symmetry symmetry() const { return sym_; }

  const Rat& entry(int copy, std::span<const int> idx) const;
  void set_entry(int copy, std::span<const int> idx, const Rat& v);

  bool is_zero() const;
  /// Matrix of a bilinear form; requires s=2, c=1.
  Mat matrix() const;

  /// Walk all entries as (copy, indices, value).
  void for_each_entry(
      const std::function<void(int, std::span<const int>, const Rat&)>& fn) const;

  /// Check the symmetry flag against the entries; throws on violation.
  void validate_symmetry() const;

  friend bool operator==(const TensorForm& a, const TensorForm& b) {
    return a.arity_ == b.arity_ && a.copies_ == b.copies_ && a.dim_ == b.dim_ &&
           a.entries_ == b.entries_;
  }

 private:
  size_t offset(int copy, std::span<const int> idx) const;
  int arity_, copies_, dim_;
  Symmetry sym_;
  std::vector<Rat> entries_;
};

}  // namespace tenstab
