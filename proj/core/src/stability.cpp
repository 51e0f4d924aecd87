#include "tenstab/stability.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tenstab/cones.hpp"
#include "tenstab/errors.hpp"

namespace tenstab {

std::string status_name(Status s) {
  switch (s) {
    case Status::Stable: return "stable";
    case Status::StrictlySemistable: return "strictly-semistable";
    case Status::Unstable: return "unstable";
  }
  return "?";
}

EvPoly stability_first_term(const EvPoly& P, const WeightedFiltration& filt) {
  int n = P.degree();
  Rat fact(1);
  for (int k = 2; k <= n; ++k) fact *= Rat(k);
  Rat r_rat = fact * P.leading();
  if (!r_rat.is_integer() || r_rat.sign() <= 0)
    fail(Errc::DegreeMismatch, "ambient Hilbert polynomial has non-integral rank");
  EvPoly acc;
  for (size_t i = 0; i < filt.steps.size(); ++i) {
    EvPoly term = r_rat * filt.steps[i].hilbert - Rat(filt.steps[i].rank) * P;
    acc += filt.weights[i] * term;
  }
  return acc;
}

EvPoly delta_stability_lhs(const EvPoly& P, const WeightedFiltration& filt, const MuResult& mu,
                           const DeltaPoly& delta) {
  return stability_first_term(P, filt) + mu.mu * delta.poly();
}

Rat slope_stability_lhs(int r, const Rat& d, const WeightedFiltration& filt, const MuResult& mu,
                        const Rat& tau) {
  Rat acc(0);
  for (size_t i = 0; i < filt.steps.size(); ++i)
    acc += filt.weights[i] * (Rat(r) * filt.steps[i].degree - Rat(filt.steps[i].rank) * d);
  return acc + mu.mu * tau;
}

namespace {

struct Candidate {
  WeightedFiltration filtration;
  MuResult mu;
};

// Enumerate (filtration, weights) candidates over the family in canonical
// order, resolving patterns from the dense form where possible.
void for_each_candidate(const SheafModel& model, const TensorForm& form,
                        const SearchFamily& family,
                        const std::function<bool(const Candidate&)>& visit) {
  if (form.is_zero()) fail(Errc::FormZero, "the form must not vanish identically");
  if (form.dim() != model.rank())
    fail(Errc::RankMismatch, "form dimension must equal the model rank");
  int r = model.rank();
  int s = form.arity();
  std::map<std::vector<int>, std::vector<std::vector<Rat>>> candidate_cache;
  auto candidates_for = [&](const std::vector<int>& ranks) -> const std::vector<std::vector<Rat>>& {
    auto it = candidate_cache.find(ranks);
    if (it == candidate_cache.end())
      it = candidate_cache.emplace(ranks, weight_candidates(r, ranks, s)).first;
    return it->second;
  };

  auto run_chain = [&](const std::vector<Step>& steps, const VanishingPattern* declared_pattern,
                       const std::vector<Rat>* extra_weights, bool skip_dropped) -> bool {
    std::vector<int> ranks;
    for (const Step& st : steps) ranks.push_back(st.rank);
    std::vector<std::vector<Rat>> weight_sets;
    for (const auto& cand : candidates_for(ranks)) {
      bool has_zero = std::any_of(cand.begin(), cand.end(), [](const Rat& w) { return w == Rat(0); });
      if (has_zero && skip_dropped) continue;
      weight_sets.push_back(cand);
    }
    if (extra_weights) weight_sets.push_back(*extra_weights);

    std::optional<VanishingPattern> full_pattern;
    for (const auto& wset : weight_sets) {
      // drop zero-weight steps; what remains is the tested subfiltration
      std::vector<Step> used;
      std::vector<Rat> ws;
      for (size_t i = 0; i < wset.size(); ++i) {
        if (wset[i] == Rat(0)) continue;
        if (wset[i].sign() < 0) fail(Errc::RankOrder, "negative weight candidate");
        used.push_back(steps[i]);
        ws.push_back(wset[i]);
      }
      if (used.empty()) continue;
      if (used.size() == 1) ws[0] = Rat(1);  // one-step convention

      VanishingPattern pattern(1, 1);
      if (used.size() == steps.size() && declared_pattern) {
        pattern = *declared_pattern;
      } else if (std::all_of(used.begin(), used.end(),
                             [](const Step& st) { return st.slots || st.basis; })) {
        pattern = pattern_from_form(form, used);
      } else if (declared_pattern) {
        // project the declared pattern onto the kept steps
        std::vector<int> kept;
        for (size_t i = 0; i < wset.size(); ++i)
          if (wset[i] != Rat(0)) kept.push_back(static_cast<int>(i));
        int t_new = static_cast<int>(kept.size());
        VanishingPattern proj(t_new + 1, s);
        for (const auto& idx : declared_pattern->nonzero_indexes()) {
          std::vector<int> mapped;
          for (int lv : idx) {
            int m = t_new;
            for (int j = 0; j < t_new; ++j)
              if (lv <= kept[static_cast<size_t>(j)]) { m = j; break; }
            if (lv == static_cast<int>(steps.size())) m = t_new;
            mapped.push_back(m);
          }
          proj.mark_nonzero(mapped);
        }
        pattern = proj;
      } else {
        fail(Errc::NotSupported,
             "declared steps without slots, basis or pattern cannot be evaluated");
      }

      Candidate c;
      std::vector<int> used_ranks;
      for (const Step& st : used) used_ranks.push_back(st.rank);
      c.mu = mu(pattern, r, used_ranks, ws);
      c.filtration = make_filtration(used, ws);
      if (!visit(c)) return false;
    }
    return true;
  };

  if (family.use_coordinate) {
    for (const CoordChain& chain :
         enumerate_coordinate_filtrations(model, family.max_coordinate_steps)) {
      std::vector<Step> steps;
      for (const auto& subset : chain) steps.push_back(coordinate_step(model, subset));
      // dropped-step candidates duplicate shorter coordinate chains
      if (!run_chain(steps, nullptr, nullptr, /*skip_dropped=*/true)) return;
    }
  }
  for (const DeclaredChain& dc : family.declared) {
    const VanishingPattern* pat = dc.pattern ? &*dc.pattern : nullptr;
    const std::vector<Rat>* extra = dc.weights ? &*dc.weights : nullptr;
    if (!run_chain(dc.steps, pat, extra, /*skip_dropped=*/false)) return;
  }
}

StabilityVerdict aggregate(const SheafModel& model, const TensorForm& form,
                           const SearchFamily& family,
                           const std::function<int(Candidate&, Certificate&)>& classify) {
  StabilityVerdict verdict;
  verdict.status = Status::Stable;
  verdict.relative_to_family = true;
  for_each_candidate(model, form, family, [&](const Candidate& cand) {
    Candidate c = cand;
    Certificate cert;
    int sign = classify(c, cert);
    if (sign > 0) {
      verdict.status = Status::Unstable;
      verdict.relative_to_family = false;
      verdict.certificate = std::move(cert);
      return false;  // first violation in canonical order wins
    }
    if (sign == 0 && verdict.status == Status::Stable) {
      verdict.status = Status::StrictlySemistable;
      verdict.certificate = std::move(cert);
    }
    return true;
  });
  return verdict;
}

}  // namespace

StabilityVerdict search_verdict(const SheafModel& model, const TensorForm& form,
                                const DeltaPoly& delta, const SearchFamily& family) {
  const EvPoly P = model.hilbert();
  return aggregate(model, form, family, [&](Candidate& c, Certificate& cert) {
    EvPoly lhs = delta_stability_lhs(P, c.filtration, c.mu, delta);
    int sign = sign_eventual(lhs);
    cert.filtration = std::move(c.filtration);
    cert.lhs = std::move(lhs);
    cert.mu = c.mu.mu;
    cert.slope_mode = false;
    return sign;
  });
}

StabilityVerdict slope_search_verdict(const SheafModel& model, const TensorForm& form,
                                      const Rat& tau, const SearchFamily& family) {
  if (tau.sign() < 0) fail(Errc::Invariant, "tau must be nonnegative");
  int r = model.rank();
  Rat d(model.degree());
  return aggregate(model, form, family, [&](Candidate& c, Certificate& cert) {
    Rat lhs = slope_stability_lhs(r, d, c.filtration, c.mu, tau);
    cert.filtration = std::move(c.filtration);
    cert.slope_lhs = lhs;
    cert.mu = c.mu.mu;
    cert.slope_mode = true;
    return lhs.sign();
  });
}

ThresholdResult delta2_threshold(const SheafModel& model, const TensorForm& form,
                                 const SearchFamily& family) {
  if (model.space() != Space::P2)
    fail(Errc::UnsupportedSpace, "the delta_2 threshold lives on P2 (delta_1 = 0 regime)");
  const EvPoly P = model.hilbert();
  ThresholdResult res;
  res.threshold = Rat(0);
  for_each_candidate(model, form, family, [&](const Candidate& c) {
    EvPoly first = stability_first_term(P, c.filtration);
    auto describe = [&]() {
      std::string s = "steps";
      for (const Step& st : c.filtration.steps) {
        s += " r=" + std::to_string(st.rank);
        if (st.slots) {
          s += " {";
          for (size_t i = 0; i < st.slots->size(); ++i)
            s += (i ? "," : "") + std::to_string((*st.slots)[i] + 1);
          s += "}";
        }
      }
      return s;
    };
    if (c.mu.mu.sign() < 0) {
      if (!first.is_constant()) {
        res.warnings.push_back("excluded (nonconstant first term): " + describe());
        if (first.leading().sign() > 0) res.unbounded = true;
        return true;
      }
      Rat constant = first.is_zero() ? Rat(0) : first.leading();
      ThresholdEntry entry{c.filtration, constant, c.mu.mu, constant / (-c.mu.mu)};
      if (entry.threshold.sign() > 0) {
        if (entry.threshold > res.threshold) {
          res.threshold = entry.threshold;
          res.achiever = entry;
        }
        res.entries.push_back(std::move(entry));
      }
    } else if (sign_eventual(first) > 0) {
      // mu >= 0 and a positive first term: no delta_2 can restore stability
      res.unbounded = true;
      res.warnings.push_back("violates for every delta_2 (mu >= 0): " + describe());
    }
    return true;
  });
  std::sort(res.entries.begin(), res.entries.end(),
            [](const ThresholdEntry& a, const ThresholdEntry& b) { return b.threshold < a.threshold; });
  return res;
}

}  // namespace tenstab
