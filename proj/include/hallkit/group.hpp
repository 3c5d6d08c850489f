#pragma once

// Finite groups, power semigroups, the embedding A -> rho_A of P(G) into
// Hall relations on |G| points, group actions by automorphisms, semidirect
// products, and the factorisation of Hall relations as reflexive relation
// times permutation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallkit/relation.hpp"
#include "hallkit/relation_semigroup.hpp"
#include "hallkit/semigroup.hpp"

namespace hallkit {

class FiniteGroup {
 public:
  // Throws unless `base` has an identity and every element is invertible.
  explicit FiniteGroup(FiniteSemigroup base);

  const FiniteSemigroup& semigroup() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Index identity() const noexcept { return identity_; }
  Index inverse(Index g) const { return inverse_.at(g); }
  Index product(Index g, Index h) const noexcept { return base_.product(g, h); }

 private:
  FiniteSemigroup base_;
  Index identity_;
  std::vector<Index> inverse_;
};

inline constexpr std::size_t kMaxSymmetricDegree = 7;

// Z_m with elements e, a, a^2, ... (identity first).
FiniteGroup cyclic_group(std::size_t m);

// S_n on the permutations of {1..n} in lexicographic order of image arrays,
// multiplied with perm_product. Requires n <= 7.
FiniteGroup symmetric_group_table(std::size_t n);

// A nonempty subset of a group with at most 64 elements.
class GroupSubset {
 public:
  GroupSubset(const FiniteGroup& group, std::uint64_t mask);
  GroupSubset(const FiniteGroup& group, const std::vector<Index>& elements);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(Index g) const noexcept { return (mask_ >> g) & 1U; }
  std::vector<Index> elements() const;

  friend GroupSubset operator*(const GroupSubset& a, const GroupSubset& b);
  friend bool operator==(const GroupSubset& a, const GroupSubset& b) noexcept {
    return a.group_ == b.group_ && a.mask_ == b.mask_;
  }

 private:
  const FiniteGroup* group_;
  std::uint64_t mask_;
};

inline constexpr std::size_t kMaxPowerBase = 12;

struct PowerSemigroup {
  FiniteSemigroup semigroup;
  std::vector<std::uint64_t> masks;  // element i <-> masks[i] == i + 1
};

// P(S): all nonempty subsets of S ordered as ascending bitmasks.
PowerSemigroup power_semigroup(const FiniteSemigroup& s);

// rho_A = {(g, h) : g^-1 h in A} on the ground set of group element indices.
Relation hall_relation(const GroupSubset& a);

struct EmbeddingCheck {
  std::size_t subsets = 0;
  std::size_t pairs_checked = 0;
  bool all_hall = true;
  bool injective = true;
  bool homomorphism = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> failing_pair;  // subset masks

  bool passed() const noexcept { return all_hall && injective && homomorphism; }
};

// Checks A -> rho_A over every nonempty subset A and every pair (A, B).
EmbeddingCheck verify_hall_embedding(const FiniteGroup& g);

// G acting on the left of M by automorphisms, stored extensionally.
struct GroupAction {
  FiniteGroup group;
  FiniteSemigroup target;
  std::vector<std::vector<Index>> maps;  // maps[g][m] = g m
};

// Empty if valid, otherwise a description of the first broken law.
std::optional<std::string> validate_action(const GroupAction& action);

struct ConjugationAction {
  GroupAction action;
  RelationSemigroup reflexive;             // materialised R_n
  std::vector<Permutation> permutations;   // S_n index -> permutation
};

inline constexpr std::size_t kMaxConjugationDegree = 3;

// S_n acting on R_n by rho -> p rho p^-1. Requires n <= 3.
ConjugationAction conjugation_action(std::size_t n);

struct SemidirectProduct {
  FiniteSemigroup semigroup;
  std::vector<std::pair<Index, Index>> pairs;  // element -> (m, g)
};

// M x G with (m, g)(m', g') = (m (g m'), g g'). Pairs ordered
// lexicographically, i.e. element index m * |G| + g.
SemidirectProduct semidirect_product(const FiniteSemigroup& m, const FiniteGroup& g,
                                     const GroupAction& action);

// rho * relation_of(p); rho must be reflexive.
Relation project_to_hall(const Relation& rho, const Permutation& p);

struct HallFactor {
  Relation reflexive;
  Permutation permutation;
};

// (sigma tau^-1, tau) with tau the lexicographically least permutation
// contained in sigma.
HallFactor hall_factorization(const Relation& sigma);
// Same with a caller-chosen tau, which must be contained in sigma.
HallFactor hall_factorization(const Relation& sigma, const Permutation& tau);

// Groups used by the verification campaigns: Z_1..Z_6 and S_3.
std::vector<std::pair<std::string, FiniteGroup>> group_catalog();

}  // namespace hallkit
