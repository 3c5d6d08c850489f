#include "hallkit/relation_semigroup.hpp"

#include <string>

namespace hallkit {

RelationSemigroup::RelationSemigroup(FiniteSemigroup semigroup, std::vector<Relation> elements)
    : semigroup_(std::move(semigroup)), elements_(std::move(elements)) {
  if (elements_.size() != semigroup_.size()) throw Error("element dictionary does not match table size");
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<Index>(i));
}

std::optional<Index> RelationSemigroup::index_of(const Relation& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RelationSemigroup semigroup_of_relations(std::vector<Relation> elements) {
  const std::size_t k = elements.size();
  if (k == 0) throw Error("semigroup_of_relations: empty element list");
  if (k > kMaxTableSize) throw CapacityError("semigroup_of_relations: more than 5000 elements");
  std::unordered_map<Relation, Index, RelationHash> index;
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (elements[i].dim() != elements[0].dim()) throw DimensionError("semigroup_of_relations: mixed dimensions");
    if (!index.emplace(elements[i], static_cast<Index>(i)).second) {
      throw Error("semigroup_of_relations: duplicate relation " + elements[i].to_string());
    }
    labels.push_back(elements[i].to_string());
  }
  std::vector<Index> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Relation p = compose(elements[i], elements[j]);
      auto it = index.find(p);
      if (it == index.end()) {
        throw Error("semigroup_of_relations: product " + labels[i] + " * " + labels[j] + " = " +
                    p.to_string() + " escapes the list");
      }
      table[i * k + j] = it->second;
    }
  }
  FiniteSemigroup s(std::move(labels), std::move(table));
  return RelationSemigroup(std::move(s), std::move(elements));
}

std::optional<std::vector<Relation>> relation_closure(const std::vector<Relation>& generators,
                                                      std::size_t max_size) {
  std::unordered_map<Relation, Index, RelationHash> seen;
  std::vector<Relation> members;
  auto add = [&](const Relation& r) {
    if (seen.emplace(r, static_cast<Index>(members.size())).second) members.push_back(r);
  };
  for (const auto& g : generators) add(g);
  if (members.size() > max_size) return std::nullopt;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : generators) {
      add(compose(members[head], g));
      if (members.size() > max_size) return std::nullopt;
    }
  }
  return members;
}

}  // namespace hallkit
