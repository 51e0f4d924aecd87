#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenstab/filtration.hpp"

namespace tenstab {

enum class Status { Stable, StrictlySemistable, Unstable };
std::string status_name(Status s);

/// A violating or equality filtration together with the quantities that
/// reproduce the check: re-evaluating the certificate yields `lhs` exactly.
struct Certificate {
  WeightedFiltration filtration;
  EvPoly lhs;        // delta-side left hand side (empty for slope mode)
  Rat slope_lhs;     // slope-side left hand side
  Rat mu;
  bool slope_mode = false;
};

/// Unstable verdicts are unconditional; Stable and StrictlySemistable are
/// relative to the searched family.
struct StabilityVerdict {
  Status status = Status::Stable;
  bool relative_to_family = true;
  std::optional<Certificate> certificate;
};

/// A user-declared chain. The pattern is required as soon as some step lacks
/// both slots and a basis; explicit weights are tested in addition to the
/// cone candidates.
struct DeclaredChain {
  std::vector<Step> steps;
  std::optional<VanishingPattern> pattern;
  std::optional<std::vector<Rat>> weights;
  std::string name;
};

struct SearchFamily {
  bool use_coordinate = true;
  int max_coordinate_steps = 2;
  std::vector<DeclaredChain> declared;
};

/// sum_i m_i (r P_{E_i} - r_i P) + mu * delta.
EvPoly delta_stability_lhs(const EvPoly& P, const WeightedFiltration& filt, const MuResult& mu,
                           const DeltaPoly& delta);

/// sum_i m_i (r deg E_i - r_i d) + mu * tau for ambient rank r and degree d.
Rat slope_stability_lhs(int r, const Rat& d, const WeightedFiltration& filt, const MuResult& mu,
                        const Rat& tau);

/// First term of the stability inequality, sum_i m_i (r P_{E_i} - r_i P).
EvPoly stability_first_term(const EvPoly& P, const WeightedFiltration& filt);

/// Decide delta-stability against every chain of the family crossed with the
/// cone weight candidates (and declared weights). The first violation in
/// canonical enumeration order wins.
StabilityVerdict search_verdict(const SheafModel& model, const TensorForm& form,
                                const DeltaPoly& delta, const SearchFamily& family);

/// Slope-level analogue with scalar parameter tau >= 0.
StabilityVerdict slope_search_verdict(const SheafModel& model, const TensorForm& form,
                                      const Rat& tau, const SearchFamily& family);

struct ThresholdEntry {
  WeightedFiltration filtration;
  Rat first_term_constant;
  Rat mu;
  Rat threshold;
};

struct ThresholdResult {
  Rat threshold;  // supremum over the family, floored at 0
  std::optional<ThresholdEntry> achiever;
  std::vector<ThresholdEntry> entries;  // all entries with a defined positive threshold
  std::vector<std::string> warnings;
  bool unbounded = false;  // some filtration violates independently of delta_2
};

/// For delta = (0, delta_2) on P2: the supremum of delta_2 values below which
/// some family filtration violates stability. Filtrations whose first term is
/// nonconstant are excluded with a warning.
ThresholdResult delta2_threshold(const SheafModel& model, const TensorForm& form,
                                 const SearchFamily& family);

}  // namespace tenstab
