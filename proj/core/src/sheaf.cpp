#include "tenstab/sheaf.hpp"

#include <algorithm>

#include "tenstab/errors.hpp"

namespace tenstab {

SheafModel::SheafModel(Space space, std::vector<Summand> summands)
    : space_(space), summands_(std::move(summands)) {
  if (summands_.empty()) fail(Errc::RankOrder, "a sheaf model needs at least one summand");
  for (const Summand& s : summands_) {
    if (s.colength < 0) fail(Errc::Invariant, "negative colength");
    if (space_ == Space::P1 && s.colength != 0)
      fail(Errc::UnsupportedSpace, "colength must be 0 on P1");
  }
}

int SheafModel::degree() const {
  int d = 0;
  for (const Summand& s : summands_) d += s.twist;
  return d;
}

EvPoly SheafModel::hilbert() const {
  EvPoly p;
  for (int i = 0; i < rank(); ++i) p += summand_hilbert(i);
  return p;
}

EvPoly SheafModel::summand_hilbert(int i) const {
  const Summand& s = summands_.at(static_cast<size_t>(i));
  return hilbert_from_chern(space_, 1, s.twist, s.colength);
}

EvPoly SheafModel::subset_hilbert(std::span<const int> slots) const {
  EvPoly p;
  for (int i : slots) p += summand_hilbert(i);
  return p;
}

int SheafModel::subset_degree(std::span<const int> slots) const {
  int d = 0;
  for (int i : slots) d += summands_.at(static_cast<size_t>(i)).twist;
  return d;
}

namespace {

// Proper nonempty subsets of {0..r-1}, ordered by size then lexicographically.
std::vector<std::vector<int>> proper_subsets(int r) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<CoordChain> enumerate_coordinate_filtrations(const SheafModel& model, int max_steps) {
  if (max_steps < 1) fail(Errc::Invariant, "max_steps must be at least 1");
  if (model.rank() > 16) fail(Errc::ScaleLimit, "rank above 16 not supported");
  std::vector<std::vector<int>> subsets = proper_subsets(model.rank());
  std::vector<CoordChain> chains;
  std::vector<CoordChain> frontier;
  for (const auto& s : subsets) frontier.push_back({s});
  for (int len = 1; len <= max_steps && !frontier.empty(); ++len) {
    chains.insert(chains.end(), frontier.begin(), frontier.end());
    std::vector<CoordChain> next;
    if (len == max_steps) break;
    for (const CoordChain& c : frontier) {
      for (const auto& s : subsets) {
        if (s.size() > c.back().size() && subset_of(c.back(), s)) {
          CoordChain e = c;
          e.push_back(s);
          next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
  }
  return chains;
}

}  // namespace tenstab
