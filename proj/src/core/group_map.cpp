#include "reflekt/group_map.hpp"

namespace reflekt {

GroupMap::GroupMap(std::shared_ptr<const GroupData> group, std::vector<Index> table)
    : group_(std::move(group)), table_(std::move(table)) {
  const auto& G = *group_;
  if (table_.size() != G.order()) fail(ErrorCode::Parameter, "map table size differs from group order");
  std::vector<bool> hit(G.order(), false);
  for (Index v : table_) {
    if (v >= G.order()) fail(ErrorCode::NotAnAutomorphism, "map image out of range");
    if (hit[v]) fail(ErrorCode::NotAnAutomorphism, "map on G" + G.key().str() + " is not injective");
    hit[v] = true;
  }
  // f(a s) = f(a) f(s) for every a and generator s forces f to be a
  // homomorphism on the whole group.
  for (Index s : G.generators())
    for (Index a = 0; a < G.order(); ++a)
      if (table_[G.mul(a, s)] != G.mul(table_[a], table_[s]))
        fail(ErrorCode::NotAHomomorphism,
             "map on G" + G.key().str() + " fails f(as) = f(a)f(s) at a = " + G.element(a).str() +
                 ", s = " + G.element(s).str());
}

GroupMap GroupMap::identity(std::shared_ptr<const GroupData> group) {
  std::vector<Index> t(group->order());
  for (Index i = 0; i < t.size(); ++i) t[i] = i;
  return GroupMap(Unchecked{}, std::move(group), std::move(t));
}

GroupMap GroupMap::from_function(std::shared_ptr<const GroupData> group,
                                 const std::function<WreathElement(const WreathElement&)>& f) {
  std::vector<Index> t(group->order());
  for (Index i = 0; i < t.size(); ++i) {
    const WreathElement y = f(group->element(i));
    const Index j = group->find(y);
    if (j == GroupData::npos)
      fail(ErrorCode::NotAnAutomorphism,
           "image " + y.str() + " of " + group->element(i).str() + " lies outside G" + group->key().str());
    t[i] = j;
  }
  return GroupMap(std::move(group), std::move(t));
}

WreathElement GroupMap::apply(const WreathElement& g) const {
  return group_->element(table_[group_->index_of(g)]);
}

GroupMap GroupMap::compose(const GroupMap& other) const {
  if (!(group_->key() == other.group_->key())) fail(ErrorCode::Parameter, "composing maps on different groups");
  std::vector<Index> t(table_.size());
  for (Index i = 0; i < t.size(); ++i) t[i] = table_[other.table_[i]];
  return GroupMap(Unchecked{}, group_, std::move(t));
}

GroupMap GroupMap::inverse() const {
  std::vector<Index> t(table_.size());
  for (Index i = 0; i < t.size(); ++i) t[table_[i]] = i;
  return GroupMap(Unchecked{}, group_, std::move(t));
}

GroupMap GroupMap::power(int k) const {
  GroupMap base = k < 0 ? inverse() : *this;
  GroupMap acc = identity(group_);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) acc = acc.compose(base);
  return acc;
}

bool GroupMap::is_identity() const noexcept {
  for (Index i = 0; i < table_.size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

int GroupMap::order() const {
  GroupMap acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc.compose(*this);
    ++k;
  }
  return k;
}

GroupMap inverse_transpose(std::shared_ptr<const GroupData> group) {
  return GroupMap::from_function(std::move(group), [](const WreathElement& g) { return bar(g); });
}

}  // namespace reflekt
