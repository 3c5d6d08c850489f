#pragma once

// Finite semigroups given by Cayley tables, Green's R/L/J relations,
// idempotents, the block-group predicate, closures, homomorphism checks and
// a bounded division search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hallkit/error.hpp"

namespace hallkit {

using Index = std::uint32_t;

inline constexpr std::size_t kMaxTableSize = 5000;
inline constexpr std::size_t kMaxJClassSize = 600;

// Raised when a table fails associativity; carries the offending triple.
class AssociativityError : public Error {
 public:
  AssociativityError(Index x, Index y, Index z, const std::string& what)
      : Error(what), x_(x), y_(y), z_(z) {}
  Index x() const noexcept { return x_; }
  Index y() const noexcept { return y_; }
  Index z() const noexcept { return z_; }

 private:
  Index x_, y_, z_;
};

class FiniteSemigroup {
 public:
  // `table` is row-major, table[x * k + y] = x*y. Validates ranges, label
  // uniqueness and associativity, and detects an identity element.
  FiniteSemigroup(std::vector<std::string> labels, std::vector<Index> table,
                  std::size_t max_size = kMaxTableSize);

  std::size_t size() const noexcept { return labels_.size(); }
  Index product(Index x, Index y) const noexcept { return table_[x * labels_.size() + y]; }
  std::optional<Index> identity() const noexcept { return identity_; }

  const std::string& label(Index x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const Index> table() const noexcept { return table_; }
  std::optional<Index> find(const std::string& label) const;

  friend bool operator==(const FiniteSemigroup&, const FiniteSemigroup&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Index> table_;
  std::optional<Index> identity_;
};

FiniteSemigroup validate_table(std::vector<std::string> labels,
                               const std::vector<std::vector<Index>>& table,
                               std::size_t max_size = kMaxTableSize);

// S itself if it has an identity, otherwise S with a fresh identity
// appended as the last element.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

std::vector<Index> idempotents(const FiniteSemigroup& s);

struct GreenSummary {
  std::vector<std::vector<Index>> r_classes;
  std::vector<std::vector<Index>> l_classes;
  std::vector<std::vector<Index>> j_classes;
  std::vector<Index> idempotent_indices;
};

// Classes are sorted internally and listed by their smallest element.
GreenSummary green_summary(const FiniteSemigroup& s);
bool is_j_trivial(const FiniteSemigroup& s);

struct BlockGroupCheck {
  bool is_block_group = true;
  // First violating pair (e, f) and which implication it breaks:
  // 1 for "ef = e and fe = f", 2 for "ef = f and fe = e".
  std::optional<std::pair<Index, Index>> witness;
  int implication = 0;
};

BlockGroupCheck is_block_group(const FiniteSemigroup& s);

struct Subsemigroup {
  FiniteSemigroup semigroup;
  std::vector<Index> embedding;  // subsemigroup index -> parent index, ascending
};

Subsemigroup subsemigroup_closure(const FiniteSemigroup& s, std::span<const Index> generators);
Subsemigroup idempotent_generated(const FiniteSemigroup& s);

struct HomomorphismCheck {
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  std::optional<std::pair<Index, Index>> failing_pair;
};

// `map[x]` is the image in `target` of element x of `source`.
HomomorphismCheck check_homomorphism(std::span<const Index> map, const FiniteSemigroup& source,
                                     const FiniteSemigroup& target);

struct DivisionBounds {
  std::size_t max_target_size = 12;
  std::size_t max_generators = 3;
};

struct DivisionWitness {
  std::vector<Index> generators;  // indices in T
  Subsemigroup subsemigroup;      // U = closure(generators) inside T
  std::vector<Index> map;         // U index -> S index, surjective homomorphism
};

struct DivisionSearch {
  std::optional<DivisionWitness> witness;
  std::size_t subsemigroups_examined = 0;
  // A missing witness only means none exists among subsemigroups generated
  // by at most `bounds.max_generators` elements.
  DivisionBounds bounds;
};

// Looks for S as a homomorphic image of a subsemigroup of T. Generator sets
// are tried by size, then lexicographically; images of generators are tried
// in index order.
DivisionSearch find_division(const FiniteSemigroup& s, const FiniteSemigroup& t,
                             const DivisionBounds& bounds = {});

}  // namespace hallkit
