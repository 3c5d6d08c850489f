#include "hallkit/relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hallkit {

namespace {

std::uint64_t low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

bool augment(std::span<const std::uint64_t> rows, std::size_t row, std::uint64_t allowed,
             std::uint64_t& visited, std::array<int, Relation::kMaxDim>& owner) noexcept {
  std::uint64_t candidates;
  while ((candidates = rows[row] & allowed & ~visited) != 0) {
    const auto col = static_cast<std::size_t>(std::countr_zero(candidates));
    visited |= std::uint64_t{1} << col;
    if (owner[col] < 0 ||
        augment(rows, static_cast<std::size_t>(owner[col]), allowed, visited, owner)) {
      owner[col] = static_cast<int>(row);
      return true;
    }
  }
  return false;
}

}  // namespace

Relation::Relation(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("relation dimension must be in [1, 64], got " + std::to_string(dim));
  }
}

Relation Relation::identity(std::size_t dim) {
  Relation r(dim);
  for (std::size_t i = 0; i < dim; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t dim) {
  Relation r(dim);
  for (std::size_t i = 0; i < dim; ++i) r.rows_[i] = low_bits(dim);
  return r;
}

Relation Relation::from_pairs(std::size_t dim,
                              std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  Relation r(dim);
  for (auto [i, j] : pairs) {
    if (i < 1 || i > dim || j < 1 || j > dim) {
      throw DimensionError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside ground set of size " + std::to_string(dim));
    }
    r.set(i - 1, j - 1);
  }
  return r;
}

Relation Relation::from_rows(std::size_t dim, std::span<const std::uint64_t> rows) {
  Relation r(dim);
  if (rows.size() != dim) throw DimensionError("from_rows: expected " + std::to_string(dim) + " rows");
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[i] & ~low_bits(dim)) throw DimensionError("from_rows: bit beyond column " + std::to_string(dim));
    r.rows_[i] = rows[i];
  }
  return r;
}

Relation Relation::from_code(std::size_t dim, std::uint64_t code) {
  if (dim > 8) throw DimensionError("from_code requires dim <= 8");
  Relation r(dim);
  if (dim < 8 && (code >> (dim * dim)) != 0) throw DimensionError("from_code: code too large");
  for (std::size_t i = 0; i < dim; ++i) r.rows_[i] = (code >> (i * dim)) & low_bits(dim);
  return r;
}

void Relation::set(std::size_t i, std::size_t j, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::uint64_t Relation::column_mask() const noexcept {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < dim_; ++i) m |= rows_[i];
  return m;
}

std::size_t Relation::count() const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < dim_; ++i) c += static_cast<std::size_t>(std::popcount(rows_[i]));
  return c;
}

std::uint64_t Relation::code() const {
  if (dim_ > 8) throw DimensionError("code() requires dim <= 8");
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < dim_; ++i) c |= rows_[i] << (i * dim_);
  return c;
}

std::string Relation::to_string() const {
  std::string s;
  s.reserve(dim_ * (dim_ + 1));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s.push_back('/');
    for (std::size_t j = 0; j < dim_; ++j) s.push_back(test(i, j) ? '1' : '0');
  }
  return s;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  if (image_.empty() || image_.size() > Relation::kMaxDim) {
    throw DimensionError("permutation dimension must be in [1, 64]");
  }
  std::vector<bool> seen(image_.size(), false);
  for (auto x : image_) {
    if (x >= image_.size() || seen[x]) throw Error("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t dim) {
  std::vector<std::size_t> image(dim);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> zero(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) throw Error("one-based image contains 0");
    zero[i] = image[i] - 1;
  }
  return Permutation(std::move(zero));
}

Relation Permutation::relation() const {
  Relation r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.set(i, image_[i]);
  return r;
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(image_);
  for (auto& x : out) ++x;
  return out;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(image_[i] + 1);
  }
  s.push_back(']');
  return s;
}

Relation relation_of(const Permutation& p) { return p.relation(); }

Relation compose(const Relation& r, const Relation& s) {
  require_same_dim(r.dim(), s.dim(), "compose");
  const std::size_t n = r.dim();
  std::array<std::uint64_t, Relation::kMaxDim> rows{};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t mid = r.row(i); mid; mid &= mid - 1) {
      acc |= s.row(static_cast<std::size_t>(std::countr_zero(mid)));
    }
    rows[i] = acc;
  }
  return Relation::from_rows(n, {rows.data(), n});
}

bool is_reflexive(const Relation& r) noexcept {
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (!r.test(i, i)) return false;
  }
  return true;
}

namespace detail {

bool rows_have_perfect_matching(std::span<const std::uint64_t> rows, std::uint64_t allowed) noexcept {
  std::array<int, Relation::kMaxDim> owner;
  owner.fill(-1);
  for (std::size_t row = 0; row < rows.size(); ++row) {
    std::uint64_t visited = 0;
    if (!augment(rows, row, allowed, visited, owner)) return false;
  }
  return true;
}

}  // namespace detail

bool has_perfect_matching(const Relation& r) noexcept {
  return detail::rows_have_perfect_matching(r.rows(), low_bits(r.dim()));
}

std::optional<Permutation> is_hall(const Relation& r) {
  const std::size_t n = r.dim();
  std::uint64_t free_cols = low_bits(n);
  if (!detail::rows_have_perfect_matching(r.rows(), free_cols)) return std::nullopt;

  // Fix rows in order, each to the smallest column that still leaves a
  // perfect matching of the remaining rows.
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto rest = r.rows().subspan(i + 1);
    bool placed = false;
    for (std::uint64_t cand = r.row(i) & free_cols; cand; cand &= cand - 1) {
      const auto col = static_cast<std::size_t>(std::countr_zero(cand));
      const std::uint64_t remaining = free_cols & ~(std::uint64_t{1} << col);
      if (detail::rows_have_perfect_matching(rest, remaining)) {
        image[i] = col;
        free_cols = remaining;
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;  // unreachable when the first matching succeeded
  }
  return Permutation(std::move(image));
}

int boolean_permanent(const Relation& r) {
  const std::size_t n = r.dim();
  if (n > kPermanentMaxDim) {
    throw CapacityError("boolean_permanent supports dim <= 12, got " + std::to_string(n));
  }
  // Ryser: perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij.
  std::int64_t total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t cols = 1; cols < subsets; ++cols) {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= std::popcount(r.row(i) & cols);
    const bool odd = ((n - static_cast<std::size_t>(std::popcount(cols))) & 1U) != 0;
    total += odd ? -prod : prod;
  }
  return total > 0 ? 1 : 0;
}

Relation conjugate(const Permutation& p, const Relation& r) {
  require_same_dim(p.dim(), r.dim(), "conjugate");
  // (i, j) in p r p^-1  iff  (i p, j p) in r.
  const std::size_t n = r.dim();
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t src = r.row(p(i));
    for (std::size_t j = 0; j < n; ++j) {
      if ((src >> p(j)) & 1U) out.set(i, j);
    }
  }
  return out;
}

Permutation perm_product(const Permutation& p, const Permutation& q) {
  require_same_dim(p.dim(), q.dim(), "perm_product");
  std::vector<std::size_t> image(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) image[i] = q(p(i));
  return Permutation(std::move(image));
}

Permutation perm_inverse(const Permutation& p) {
  std::vector<std::size_t> image(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) image[p(i)] = i;
  return Permutation(std::move(image));
}

Relation relation_union(const Relation& r, const Relation& s) {
  require_same_dim(r.dim(), s.dim(), "union");
  std::array<std::uint64_t, Relation::kMaxDim> rows{};
  for (std::size_t i = 0; i < r.dim(); ++i) rows[i] = r.row(i) | s.row(i);
  return Relation::from_rows(r.dim(), {rows.data(), r.dim()});
}

bool contains(const Relation& r, const Relation& s) {
  require_same_dim(r.dim(), s.dim(), "contains");
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (s.row(i) & ~r.row(i)) return false;
  }
  return true;
}

Relation transpose(const Relation& r) {
  Relation out(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::uint64_t row = r.row(i); row; row &= row - 1) {
      out.set(static_cast<std::size_t>(std::countr_zero(row)), i);
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::size_t RelationHash::operator()(const Relation& r) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ r.dim();
  for (auto row : r.rows()) {
    h ^= row + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hallkit
