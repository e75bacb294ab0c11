#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace privlabel {

using LabelValue = std::uint64_t;

/// Tuple label <tag, value> encoded as tag * stride + value.
///
/// The stride is the size of the value range, so encoded labels are dense in
/// [0, tags * stride) and the problem domain is exactly tags * stride.
class LabelCodec {
 public:
  explicit constexpr LabelCodec(std::uint64_t stride) : stride_(stride == 0 ? 1 : stride) {}
  constexpr LabelValue encode(std::uint64_t tag, std::uint64_t value) const { return tag * stride_ + value; }
  constexpr std::uint64_t tag(LabelValue x) const { return x / stride_; }
  constexpr std::uint64_t value(LabelValue x) const { return x % stride_; }
  constexpr std::uint64_t stride() const { return stride_; }

 private:
  std::uint64_t stride_;
};

enum class EntityKind { vertex, edge };

std::string_view to_string(EntityKind kind);

/// Output of a generic algorithm: one finite label set per entity.
///
/// Each set is kept sorted and duplicate-free; every label is below the
/// declared problem-domain size. An empty set marks a failed entity (the
/// generic algorithm could not give it any valid label).
class LabelDomain {
 public:
  LabelDomain() = default;
  /// Throws std::invalid_argument if a label is >= problem_domain_size.
  LabelDomain(EntityKind kind, std::vector<std::vector<LabelValue>> domains,
              std::uint64_t problem_domain_size, std::uint64_t stride);

  EntityKind kind() const { return kind_; }
  std::size_t size() const { return domains_.size(); }
  std::span<const LabelValue> domain(std::size_t entity) const { return domains_[entity]; }
  const std::vector<std::vector<LabelValue>>& domains() const { return domains_; }
  std::uint64_t problem_domain_size() const { return problem_domain_size_; }
  std::uint64_t stride() const { return stride_; }

  bool contains(std::size_t entity, LabelValue x) const;
  std::size_t min_size() const;
  std::size_t max_size() const;
  bool has_empty() const { return size() > 0 && min_size() == 0; }

 private:
  EntityKind kind_ = EntityKind::vertex;
  std::vector<std::vector<LabelValue>> domains_;
  std::uint64_t problem_domain_size_ = 0;
  std::uint64_t stride_ = 1;
};

}  // namespace privlabel
