#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hallkit/relation.hpp"
#include "hallkit/semigroup.hpp"

namespace hallkit {

// A semigroup of relations materialised as a Cayley table, with the
// dictionary between table indices and relation values.
class RelationSemigroup {
 public:
  RelationSemigroup(FiniteSemigroup semigroup, std::vector<Relation> elements);

  const FiniteSemigroup& semigroup() const noexcept { return semigroup_; }
  const std::vector<Relation>& elements() const noexcept { return elements_; }
  const Relation& element(Index i) const { return elements_.at(i); }
  std::optional<Index> index_of(const Relation& r) const;
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  FiniteSemigroup semigroup_;
  std::vector<Relation> elements_;
  std::unordered_map<Relation, Index, RelationHash> index_;
};

// Cayley table over `elements` in the given order. Throws if the list has
// duplicates, mixed dimensions, or is not closed under compose.
RelationSemigroup semigroup_of_relations(std::vector<Relation> elements);

// Closure of `generators` under compose, in discovery order. Returns nullopt
// once more than `max_size` elements appear.
std::optional<std::vector<Relation>> relation_closure(const std::vector<Relation>& generators,
                                                      std::size_t max_size);

}  // namespace hallkit
