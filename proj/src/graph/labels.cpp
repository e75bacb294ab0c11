#include "privlabel/labels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace privlabel {

std::string_view to_string(EntityKind kind) { return kind == EntityKind::vertex ? "vertex" : "edge"; }

LabelDomain::LabelDomain(EntityKind kind, std::vector<std::vector<LabelValue>> domains,
                         std::uint64_t problem_domain_size, std::uint64_t stride)
    : kind_(kind), domains_(std::move(domains)), problem_domain_size_(problem_domain_size), stride_(stride) {
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    auto& d = domains_[i];
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (!d.empty() && d.back() >= problem_domain_size_) {
      throw std::invalid_argument("label " + std::to_string(d.back()) + " of entity " + std::to_string(i) +
                                  " exceeds problem domain size " + std::to_string(problem_domain_size_));
    }
  }
}

bool LabelDomain::contains(std::size_t entity, LabelValue x) const {
  const auto& d = domains_[entity];
  return std::binary_search(d.begin(), d.end(), x);
}

std::size_t LabelDomain::min_size() const {
  std::size_t best = domains_.empty() ? 0 : domains_.front().size();
  for (const auto& d : domains_) best = std::min(best, d.size());
  return best;
}

std::size_t LabelDomain::max_size() const {
  std::size_t best = 0;
  for (const auto& d : domains_) best = std::max(best, d.size());
  return best;
}

}  // namespace privlabel
