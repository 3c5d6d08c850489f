#include "hallkit/group.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "hallkit/enumeration.hpp"

namespace hallkit {

FiniteGroup::FiniteGroup(FiniteSemigroup base) : base_(std::move(base)) {
  if (!base_.identity()) throw Error("group table has no identity element");
  identity_ = *base_.identity();
  const std::size_t k = base_.size();
  inverse_.assign(k, 0);
  for (Index g = 0; g < k; ++g) {
    bool found = false;
    for (Index h = 0; h < k && !found; ++h) {
      if (base_.product(g, h) == identity_ && base_.product(h, g) == identity_) {
        inverse_[g] = h;
        found = true;
      }
    }
    if (!found) throw Error("element '" + base_.label(g) + "' has no inverse");
  }
}

FiniteGroup cyclic_group(std::size_t m) {
  if (m == 0) throw Error("cyclic_group: order must be positive");
  if (m > kMaxTableSize) throw CapacityError("cyclic_group: order exceeds table cap");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i));
  }
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = static_cast<Index>((i + j) % m);
  }
  return FiniteGroup(FiniteSemigroup(std::move(labels), std::move(table)));
}

FiniteGroup symmetric_group_table(std::size_t n) {
  if (n == 0) throw Error("symmetric_group_table: degree must be positive");
  if (n > kMaxSymmetricDegree) throw CapacityError("symmetric_group_table: n! exceeds the 5000-element cap");
  const auto perms = all_permutations(n);
  const std::size_t k = perms.size();
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(p.to_string());
  std::vector<Index> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto prod = perm_product(perms[i], perms[j]);
      const auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      table[i * k + j] = static_cast<Index>(it - perms.begin());
    }
  }
  return FiniteGroup(FiniteSemigroup(std::move(labels), std::move(table)));
}

GroupSubset::GroupSubset(const FiniteGroup& group, std::uint64_t mask) : group_(&group), mask_(mask) {
  if (group.size() > 64) throw CapacityError("group subsets support groups of order <= 64");
  if (mask == 0) throw Error("group subset must be nonempty");
  if (group.size() < 64 && (mask >> group.size()) != 0) throw Error("subset mask names elements outside the group");
}

namespace {

std::uint64_t mask_of(const FiniteGroup& group, const std::vector<Index>& elements) {
  std::uint64_t m = 0;
  for (Index g : elements) {
    if (g >= group.size() || g >= 64) throw Error("subset element out of range");
    m |= std::uint64_t{1} << g;
  }
  return m;
}

}  // namespace

GroupSubset::GroupSubset(const FiniteGroup& group, const std::vector<Index>& elements)
    : GroupSubset(group, mask_of(group, elements)) {}

std::vector<Index> GroupSubset::elements() const {
  std::vector<Index> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(static_cast<Index>(std::countr_zero(m)));
  return out;
}

GroupSubset operator*(const GroupSubset& a, const GroupSubset& b) {
  if (a.group_ != b.group_) throw Error("subset product across different groups");
  std::uint64_t m = 0;
  for (Index x : a.elements()) {
    for (Index y : b.elements()) m |= std::uint64_t{1} << a.group_->product(x, y);
  }
  return GroupSubset(*a.group_, m);
}

PowerSemigroup power_semigroup(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  if (n > kMaxPowerBase) {
    throw CapacityError("power_semigroup: |S| = " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxPowerBase));
  }
  const std::size_t k = (std::size_t{1} << n) - 1;
  // prod[A][B] built from AB = (A \ {a}) B  u  aB, and aB = a(B \ {b}) u {ab}.
  std::vector<std::uint64_t> masks(k);
  for (std::size_t i = 0; i < k; ++i) masks[i] = i + 1;
  std::vector<std::uint32_t> prod((k + 1) * (k + 1), 0);
  auto at = [&](std::size_t a, std::size_t b) -> std::uint32_t& { return prod[a * (k + 1) + b]; };
  for (std::size_t a = 1; a <= k; ++a) {
    const std::size_t low_a = a & (~a + 1);
    const auto x = static_cast<Index>(std::countr_zero(a));
    for (std::size_t b = 1; b <= k; ++b) {
      const std::size_t low_b = b & (~b + 1);
      const auto y = static_cast<Index>(std::countr_zero(b));
      if (a == low_a) {
        at(a, b) = at(a, b ^ low_b) | (std::uint32_t{1} << s.product(x, y));
      } else {
        at(a, b) = at(a ^ low_a, b) | at(low_a, b);
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (auto m : masks) {
    std::string l = "{";
    bool first = true;
    for (std::uint64_t r = m; r; r &= r - 1) {
      if (!first) l += "|";
      l += s.label(static_cast<Index>(std::countr_zero(r)));
      first = false;
    }
    labels.push_back(l + "}");
  }
  std::vector<Index> table(k * k);
  for (std::size_t a = 1; a <= k; ++a) {
    for (std::size_t b = 1; b <= k; ++b) table[(a - 1) * k + (b - 1)] = at(a, b) - 1;
  }
  return {FiniteSemigroup(std::move(labels), std::move(table)), std::move(masks)};
}

Relation hall_relation(const GroupSubset& a) {
  const FiniteGroup& g = a.group();
  const std::size_t n = g.size();
  Relation rho(n);
  for (Index x = 0; x < n; ++x) {
    const Index x_inv = g.inverse(x);
    for (Index y = 0; y < n; ++y) {
      if (a.contains(g.product(x_inv, y))) rho.set(x, y);
    }
  }
  return rho;
}

EmbeddingCheck verify_hall_embedding(const FiniteGroup& g) {
  const std::size_t n = g.size();
  if (n > 16) throw CapacityError("verify_hall_embedding: enumerates 2^|G| subsets, |G| <= 16");
  const std::uint64_t count = (std::uint64_t{1} << n) - 1;
  EmbeddingCheck out;
  out.subsets = count;
  std::vector<Relation> rho;
  rho.reserve(count);
  std::unordered_set<Relation, RelationHash> distinct;
  for (std::uint64_t m = 1; m <= count; ++m) {
    rho.push_back(hall_relation(GroupSubset(g, m)));
    if (!has_perfect_matching(rho.back())) out.all_hall = false;
    distinct.insert(rho.back());
  }
  out.injective = distinct.size() == count;
  for (std::uint64_t a = 1; a <= count; ++a) {
    const GroupSubset sa(g, a);
    for (std::uint64_t b = 1; b <= count; ++b) {
      const auto ab = (sa * GroupSubset(g, b)).mask();
      ++out.pairs_checked;
      if (compose(rho[a - 1], rho[b - 1]) != rho[ab - 1] && out.homomorphism) {
        out.homomorphism = false;
        out.failing_pair = std::make_pair(a, b);
      }
    }
  }
  return out;
}

std::optional<std::string> validate_action(const GroupAction& action) {
  const auto& g = action.group;
  const auto& m = action.target;
  if (action.maps.size() != g.size()) return "action has " + std::to_string(action.maps.size()) + " maps for a group of order " + std::to_string(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    const auto& f = action.maps[x];
    if (f.size() != m.size()) return "map for " + g.semigroup().label(x) + " has wrong length";
    std::vector<bool> hit(m.size(), false);
    for (Index v : f) {
      if (v >= m.size() || hit[v]) return "map for " + g.semigroup().label(x) + " is not a bijection";
      hit[v] = true;
    }
    for (Index a = 0; a < m.size(); ++a) {
      for (Index b = 0; b < m.size(); ++b) {
        if (f[m.product(a, b)] != m.product(f[a], f[b])) {
          return "map for " + g.semigroup().label(x) + " is not multiplicative at (" + m.label(a) + ", " +
                 m.label(b) + ")";
        }
      }
    }
  }
  for (Index x = 0; x < g.size(); ++x) {
    for (Index y = 0; y < g.size(); ++y) {
      const auto& fxy = action.maps[g.product(x, y)];
      for (Index a = 0; a < m.size(); ++a) {
        if (fxy[a] != action.maps[x][action.maps[y][a]]) {
          return "left action law fails for (" + g.semigroup().label(x) + ", " + g.semigroup().label(y) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

ConjugationAction conjugation_action(std::size_t n) {
  if (n == 0 || n > kMaxConjugationDegree) {
    throw CapacityError("conjugation_action: n must be in [1, 3], got " + std::to_string(n));
  }
  auto reflexive = materialize_reflexive(n);
  auto group = symmetric_group_table(n);
  auto perms = all_permutations(n);
  std::vector<std::vector<Index>> maps;
  for (const auto& p : perms) {
    std::vector<Index> f;
    for (const auto& rho : reflexive.elements()) {
      const auto image = reflexive.index_of(conjugate(p, rho));
      if (!image) throw Error("conjugate of a reflexive relation left R_n");
      f.push_back(*image);
    }
    maps.push_back(std::move(f));
  }
  GroupAction action{std::move(group), reflexive.semigroup(), std::move(maps)};
  if (auto err = validate_action(action)) throw Error("conjugation action invalid: " + *err);
  return {std::move(action), std::move(reflexive), std::move(perms)};
}

SemidirectProduct semidirect_product(const FiniteSemigroup& m, const FiniteGroup& g, const GroupAction& action) {
  if (m.size() * g.size() > kMaxTableSize) throw CapacityError("semidirect_product: |M||G| exceeds 5000");
  if (action.target != m || action.group.semigroup() != g.semigroup()) {
    throw Error("semidirect_product: action does not match the given monoid and group");
  }
  if (auto err = validate_action(action)) throw Error("semidirect_product: invalid action: " + *err);
  const std::size_t km = m.size(), kg = g.size(), k = km * kg;
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<std::string> labels;
  for (Index a = 0; a < km; ++a) {
    for (Index x = 0; x < kg; ++x) {
      pairs.emplace_back(a, x);
      labels.push_back("(" + m.label(a) + "|" + g.semigroup().label(x) + ")");
    }
  }
  std::vector<Index> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto [a, x] = pairs[i];
    for (std::size_t j = 0; j < k; ++j) {
      const auto [b, y] = pairs[j];
      const Index first = m.product(a, action.maps[x][b]);
      table[i * k + j] = static_cast<Index>(first * kg + g.product(x, y));
    }
  }
  return {FiniteSemigroup(std::move(labels), std::move(table)), std::move(pairs)};
}

Relation project_to_hall(const Relation& rho, const Permutation& p) {
  if (rho.dim() != p.dim()) throw DimensionError("project_to_hall: dimension mismatch");
  if (!is_reflexive(rho)) throw Error("project_to_hall: first component " + rho.to_string() + " is not reflexive");
  return compose(rho, relation_of(p));
}

HallFactor hall_factorization(const Relation& sigma) {
  auto tau = is_hall(sigma);
  if (!tau) throw Error("hall_factorization: " + sigma.to_string() + " is not a Hall relation");
  return hall_factorization(sigma, *tau);
}

HallFactor hall_factorization(const Relation& sigma, const Permutation& tau) {
  if (sigma.dim() != tau.dim()) throw DimensionError("hall_factorization: dimension mismatch");
  if (!contains(sigma, relation_of(tau))) {
    throw Error("hall_factorization: " + tau.to_string() + " is not contained in " + sigma.to_string());
  }
  return {compose(sigma, relation_of(perm_inverse(tau))), tau};
}

std::vector<std::pair<std::string, FiniteGroup>> group_catalog() {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (std::size_t m = 1; m <= 6; ++m) out.emplace_back("cyclic:" + std::to_string(m), cyclic_group(m));
  out.emplace_back("symmetric:3", symmetric_group_table(3));
  return out;
}

}  // namespace hallkit
