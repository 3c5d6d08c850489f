#pragma once

// Exhaustive enumeration of Hall and reflexive relations on small ground
// sets, the idempotent census, materialisation of R_n and H_n as Cayley
// tables, and the verification campaign tying the constructions together.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallkit/relation_semigroup.hpp"
#include "hallkit/semigroup.hpp"

namespace hallkit {

inline constexpr std::size_t kMaxCountDim = 5;
inline constexpr std::size_t kMaxCensusDim = 4;
inline constexpr std::size_t kMaxMaterializeDim = 3;

struct EnumerationReport {
  std::size_t n = 0;
  std::uint64_t total_hall = 0;
  std::uint64_t total_reflexive = 0;
  std::uint64_t idempotent_hall = 0;
  bool idempotents_all_reflexive = true;
  std::size_t worker_count = 1;
  std::chrono::nanoseconds elapsed{0};
};

// Streams all 2^(n^2) matrices, split across `workers` threads by the value
// of the first row. Counts do not depend on the worker count.
EnumerationReport count_hall(std::size_t n, std::size_t workers = 1);

// Independent count of Hall matrices that never runs a matching: signed sum
// over nonempty sets of permutations for n <= 4, and the up-closure of the
// n! permutation matrices in the lattice of all matrices for n = 5.
std::uint64_t count_hall_inclusion_exclusion(std::size_t n);

// The up-closure count alone, for any n <= 5.
std::uint64_t count_hall_upward_closure(std::size_t n);

struct IdempotentCensus {
  std::uint64_t count = 0;             // idempotents among reflexive matrices
  std::uint64_t full_scan_count = 0;   // idempotent Hall matrices over all matrices
  std::uint64_t non_reflexive = 0;     // idempotent Hall matrices missing a diagonal bit
  std::optional<Relation> first_exception;
  bool all_reflexive = true;
};

IdempotentCensus hall_idempotent_census(std::size_t n);

// Elements listed in ascending row-major code order (Relation::code()).
RelationSemigroup materialize_hall(std::size_t n);
RelationSemigroup materialize_reflexive(std::size_t n);
RelationSemigroup materialize_all_relations(std::size_t n);

struct HallSurjectionCheck {
  std::size_t n = 0;
  std::size_t domain_size = 0;    // |R_n x| S_n|
  std::size_t codomain_size = 0;  // |H_n|
  bool homomorphism = false;
  bool surjective = false;
  bool factorization_round_trip = true;
  std::vector<std::string> failures;

  bool passed() const noexcept { return homomorphism && surjective && factorization_round_trip; }
};

// (rho, p) -> rho p from R_n x| S_n onto H_n, plus the factorisation
// round trip on every Hall relation. Requires n <= 3.
HallSurjectionCheck verify_hall_surjection(std::size_t n);

struct BlockGroupCriteria {
  bool block_group = false;
  bool idempotents_generate_j_trivial = false;
  bool agree() const noexcept { return block_group == idempotents_generate_j_trivial; }
};

BlockGroupCriteria compare_block_group_criteria(const FiniteSemigroup& s);

struct CampaignItem {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct CampaignReport {
  std::size_t n = 0;
  std::vector<CampaignItem> items;
  bool passed() const noexcept;
};

// Runs, for n <= 3: R_n J-trivial, H_n block-group, block-group criteria
// agreement on H_n and R_n, the P(G) embedding for catalog groups of order
// n, and the R_n x| S_n -> H_n surjection.
CampaignReport verification_campaign(std::size_t n);

}  // namespace hallkit
