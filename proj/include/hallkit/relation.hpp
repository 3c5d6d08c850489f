#pragma once

// Binary relations on {1, ..., n} as bit-packed Boolean matrices, together
// with permutations viewed as relations.
//
// Conventions:
//  * bit j of row i is set iff (i, j) belongs to the relation (0-based here,
//    1-based in every text format);
//  * compose(r, s) is "first r, then s": (i, j) iff r(i, z) and s(z, j);
//  * permutations act on the right and are identified with {(x, x p)}.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hallkit/error.hpp"

namespace hallkit {

class Permutation;

class Relation {
 public:
  static constexpr std::size_t kMaxDim = 64;

  // The empty relation on `dim` points. Throws DimensionError unless
  // 1 <= dim <= 64.
  explicit Relation(std::size_t dim);

  static Relation identity(std::size_t dim);
  static Relation full(std::size_t dim);
  // Pairs are 1-based, as in the text formats.
  static Relation from_pairs(std::size_t dim,
                             std::initializer_list<std::pair<std::size_t, std::size_t>> pairs);
  static Relation from_rows(std::size_t dim, std::span<const std::uint64_t> rows);
  // Row-major code: bit (i * dim + j) holds entry (i, j). Requires dim <= 8.
  static Relation from_code(std::size_t dim, std::uint64_t code);

  std::size_t dim() const noexcept { return dim_; }
  bool test(std::size_t i, std::size_t j) const noexcept { return (rows_[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept;
  std::uint64_t row(std::size_t i) const noexcept { return rows_[i]; }
  std::span<const std::uint64_t> rows() const noexcept { return {rows_.data(), dim_}; }
  std::uint64_t column_mask() const noexcept;

  std::size_t count() const noexcept;
  std::uint64_t code() const;

  // Rows separated by '/', e.g. "10/01" for the identity on two points.
  std::string to_string() const;

  friend bool operator==(const Relation& a, const Relation& b) noexcept {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t dim_;
  std::array<std::uint64_t, kMaxDim> rows_{};
};

class Permutation {
 public:
  // `image[i]` is the 0-based image of i. Throws unless it is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t dim);
  static Permutation from_one_based(const std::vector<std::size_t>& image);

  std::size_t dim() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  std::span<const std::size_t> image() const noexcept { return image_; }

  Relation relation() const;
  std::vector<std::size_t> one_based() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic order on image arrays.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

Relation relation_of(const Permutation& p);

Relation compose(const Relation& r, const Relation& s);
bool is_reflexive(const Relation& r) noexcept;

// Lexicographically smallest permutation contained in r, if any.
std::optional<Permutation> is_hall(const Relation& r);

// Matching-only variant of is_hall, without the lexicographic minimisation.
bool has_perfect_matching(const Relation& r) noexcept;

// 1 iff the 0/1 matrix of r has nonzero permanent, via Ryser's formula.
// Independent of the matching code. Throws CapacityError for dim > 12.
int boolean_permanent(const Relation& r);
inline constexpr std::size_t kPermanentMaxDim = 12;

// relation_of(p) * r * relation_of(p^-1).
Relation conjugate(const Permutation& p, const Relation& r);

// relation_of(perm_product(p, q)) == compose(relation_of(p), relation_of(q)).
Permutation perm_product(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);

Relation relation_union(const Relation& r, const Relation& s);
// s is a subset of r.
bool contains(const Relation& r, const Relation& s);
Relation transpose(const Relation& r);

// All permutations of {0, ..., n-1} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

namespace detail {

// Kuhn's augmenting-path matching on bitmask rows, restricted to the
// columns in `allowed`. Rows are matched in index order.
bool rows_have_perfect_matching(std::span<const std::uint64_t> rows, std::uint64_t allowed) noexcept;

}  // namespace detail

struct RelationHash {
  std::size_t operator()(const Relation& r) const noexcept;
};

}  // namespace hallkit
