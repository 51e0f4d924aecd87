#pragma once

#include <optional>
#include <vector>

#include "tenstab/form.hpp"
#include "tenstab/stability.hpp"

namespace tenstab {

/// A one-parameter subgroup, diagonal in the standard basis: integer weights
/// Gamma_1 <= ... <= Gamma_p summing to zero. Forms in another basis are
/// conjugated by the caller first. The minimum weight convention is used
/// throughout: an entry at indices (i_1..i_s) scales by t^(sum Gamma_{i_j}),
/// semistability means the minimum over nonzero entries is <= 0, and limits
/// exist in the affine model only when no nonzero entry has negative weight.
struct OnePS {
  std::vector<Int> weights;
};

OnePS make_oneps(std::vector<Int> weights);
/// Gamma = sum_i m_i Gamma^{(dims_i)} for a filtration of a p-dimensional
/// space by subspaces of the given dimensions with integer weights.
OnePS oneps_from_filtration(int p, std::span<const int> dims, std::span<const Int> weights);

/// Minimum over nonzero entries (any copy) of the summed weights.
Rat mu_point(const TensorForm& form, const OnePS& lam);

/// Limit of lam(t).form as t -> 0: keeps weight-zero entries, kills positive
/// ones, and refuses if a nonzero entry has negative weight.
TensorForm limit_form(const TensorForm& form, const OnePS& lam);

struct SemistableViolation {
  OnePS lam;
  Rat mu;
};

struct SemistableCheckReport {
  Rat det;
  std::vector<SemistableViolation> violations;  // must stay empty
  bool ok() const { return violations.empty(); }
};

/// For a nondegenerate bilinear form, mu_point must be <= 0 against every
/// supplied one-parameter subgroup; any violation is reported.
SemistableCheckReport nondegenerate_semistable_check(const TensorForm& q,
                                                     const std::vector<OnePS>& lams);

/// Limit-form block structure along a zero-weight filtration by initial
/// coordinate subspaces W_i = span(e_1..e_{r_i}). Every listed fact is
/// checked on the instance, not assumed.
struct LimitAnalysis {
  TensorForm limit;
  Rat det_original;
  Rat det_limit;
  std::vector<std::pair<int, int>> support_blocks;  // 1-based block coordinates
  bool det_match = false;
  bool antidiagonal_support = false;
  bool ranks_palindromic = false;
  bool weights_palindromic = false;
  bool perps_match = false;
  bool all_verified() const {
    return det_match && antidiagonal_support && ranks_palindromic && weights_palindromic &&
           perps_match;
  }
};

LimitAnalysis analyze_zero_weight_limit(const TensorForm& q, std::span<const int> ranks,
                                        std::span<const Rat> weights);

struct GradedDeformationResult {
  std::vector<int> graded_dims;  // dims of the graded pieces, bottom step first
  TensorForm form;               // minimal-weight component, ambient slot order
  Rat mu;
};

/// Admissible deformation along a coordinate filtration: keep exactly the
/// entries whose block multi-index attains the mu-weight, zero the rest.
/// Equals lim t^{-mu} lam(t).form.
GradedDeformationResult graded_deformation(const TensorForm& form,
                                           const std::vector<std::vector<int>>& chain_slots,
                                           std::span<const Rat> weights);

/// Dimension of {(A, a) : A^T Q + Q A = a Q}, the infinitesimal symmetries of
/// a bilinear form up to scalar. Termination measure for the S-equivalence
/// iteration.
int stabilizer_dimension(const TensorForm& q);

struct SEquivResult {
  TensorForm representative;
  int iterations = 0;
  int stabilizer_dim = 0;
  std::vector<Certificate> trace;  // admissible filtration applied per iteration
};

/// Iterate admissible deformations of a strictly semistable bilinear tensor
/// until no deformation raises the stabilizer dimension. Idempotent; a stable
/// input is returned unchanged.
SEquivResult s_equiv_representative(const TensorForm& form, const DeltaPoly& delta,
                                    const SheafModel& model, const SearchFamily& family);

/// n1 * sum_i m_i (dim V_i P(l) - p P_{E_Vi}(l)) + n2 * muPhi.
Rat combined_git_weight(std::span<const int> dims, const Rat& P_at_l, int p,
                        std::span<const Rat> P_EVi_at_l, std::span<const Rat> weights,
                        const Rat& mu_phi, const Rat& n1, const Rat& n2);

/// (P(l) delta(m) - delta(l) P(m)) / (P(m) - s delta(m)). Takes delta as a
/// plain polynomial so the degenerate delta = 0 case is representable.
Rat polarization_ratio(const EvPoly& P, const EvPoly& delta, int m, int l, int s);

}  // namespace tenstab
