#pragma once

// A self-map of an enumerated group stored as a full table over element
// indices. Construction audits bijectivity and multiplicativity, so every
// GroupMap in circulation is an automorphism.

#include "reflekt/group.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace reflekt {

class GroupMap {
public:
  using Index = GroupData::Index;

  /// Throws ErrorCode::NotAHomomorphism or ErrorCode::NotAnAutomorphism.
  GroupMap(std::shared_ptr<const GroupData> group, std::vector<Index> table);

  static GroupMap identity(std::shared_ptr<const GroupData> group);
  /// Images outside the group raise ErrorCode::NotAnAutomorphism.
  static GroupMap from_function(std::shared_ptr<const GroupData> group,
                                const std::function<WreathElement(const WreathElement&)>& f);

  const GroupData& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupData>& group_ptr() const noexcept { return group_; }
  const std::vector<Index>& table() const noexcept { return table_; }

  Index operator()(Index i) const { return table_[i]; }
  WreathElement apply(const WreathElement& g) const;

  /// (*this)(other(x))
  GroupMap compose(const GroupMap& other) const;
  GroupMap inverse() const;
  GroupMap power(int k) const;
  bool is_identity() const noexcept;
  /// Smallest k >= 1 with this^k = identity.
  int order() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) noexcept {
    return a.group_->key() == b.group_->key() && a.table_ == b.table_;
  }

private:
  struct Unchecked {};
  GroupMap(Unchecked, std::shared_ptr<const GroupData> group, std::vector<Index> table)
      : group_(std::move(group)), table_(std::move(table)) {}

  std::shared_ptr<const GroupData> group_;
  std::vector<Index> table_;
};

/// The inverse transpose automorphism g -> bar(g).
GroupMap inverse_transpose(std::shared_ptr<const GroupData> group);

}  // namespace reflekt
