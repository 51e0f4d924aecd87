#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenstab/git.hpp"
#include "tenstab/stability.hpp"

namespace tenstab {

enum class FormKind { Orthogonal, Symplectic };

/// Split sheaf with a constant bilinear pairing. An optional psi turns an
/// orthogonal model into a special orthogonal one (det of the form must equal
/// psi squared).
struct OrthSheafModel {
  SheafModel sheaf;
  TensorForm form;  // s=2, c=1, dim = rank, constant rational entries
  FormKind kind = FormKind::Orthogonal;
  std::optional<Rat> psi;
};

struct AxiomCheck {
  std::string axiom;
  bool passed;
  std::string note;
};

struct OrthValidation {
  std::vector<AxiomCheck> checks;
  Rat det;
  bool all_passed() const {
    for (const AxiomCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Check the orthogonal/symplectic sheaf axioms (determinant-square trivial,
/// symmetry, torsion freeness, nondegeneracy, twist pairing; plus the special
/// orthogonal trivialization when psi is present). Report style, never throws
/// on a failed axiom.
OrthValidation validate(const OrthSheafModel& model);

struct PerpResult {
  Mat basis;                      // canonical kernel basis rows
  int rank = 0;
  std::optional<std::vector<int>> slots;  // set when the perp is coordinate
  Rat degree_of_f;                // deg F^perp = deg F for saturated coordinate F
  std::optional<EvPoly> hilbert;  // derived when the perp is coordinate
};

/// Perpendicular of a coordinate subsheaf under the pairing: the kernel of
/// v -> Q(f, v) over the chosen slots.
PerpResult perp(const OrthSheafModel& model, const std::vector<int>& slots);
/// Fiber-level perpendicular of an arbitrary subspace.
Mat perp_subspace(const TensorForm& q, const Mat& basis_f);

bool is_isotropic(const TensorForm& q, const Mat& basis_f);
bool is_isotropic(const TensorForm& q, const std::vector<int>& slots);

/// One isotropic subsheaf with the data the stability checks consume.
struct IsotropicDatum {
  std::optional<std::vector<int>> slots;  // coordinate subspace
  std::optional<Mat> basis;               // or an explicit fiber basis
  int rank = 0;
  EvPoly hilbert_f;
  EvPoly hilbert_perp;
  Rat degree_f;
  std::string label;
};

/// Coordinate isotropic subsets whose perpendicular is again coordinate, with
/// all Hilbert data derived from the model.
std::vector<IsotropicDatum> coordinate_isotropic_family(const OrthSheafModel& model);

enum class OrthMode { Gieseker, Slope };

/// Stability over a family of isotropic subsheaves: P_F + P_{F^perp} vs P in
/// Gieseker mode, deg F vs 0 in slope mode.
StabilityVerdict orth_stability(const OrthSheafModel& model, OrthMode mode,
                                const std::vector<IsotropicDatum>& isotropics);

struct BridgeResult {
  WeightedFiltration filtration;  // F subset F^perp subset E with m = (1,1)
  Rat mu;
  EvPoly filtration_side;  // sum m_i (r P_{E_i} - r_i P)
  EvPoly orth_side;        // r (P_F + P_{F^perp} - P)
  bool identity_holds = false;
  bool mu_zero = false;
};

/// Translate an isotropic subsheaf into the weighted filtration F c F^perp
/// with unit weights and verify mu = 0 together with the exact identity
/// between the two sides of the stability inequality.
BridgeResult critgm_bridge(const OrthSheafModel& model, const IsotropicDatum& datum);

struct DegeneracyCertificate {
  Mat kernel;  // basis of E^perp
  int kernel_rank = 0;
  WeightedFiltration filtration;
  Rat mu;
  Rat slope_lhs_tau1;  // slope left hand side at tau = 1
};

/// For a degenerate pairing: exhibit the slope-instability certificate
/// E^perp c E with mu > 0, so the slope inequality fails for every tau > 0.
DegeneracyCertificate degeneracy_certificate(const OrthSheafModel& model);

/// det(form) == psi^2.
bool sos_check(const TensorForm& q, const Rat& psi);

/// Number of special orthogonal isomorphism classes over one orthogonal
/// class with trivial determinant: 1 for odd rank, 2 for even rank when the
/// underlying sheaf is simple. Refuses a verdict for even rank without
/// simplicity.
int sign_class_count(int r, bool simple);

}  // namespace tenstab
