#include "hallkit/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hallkit {

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(std::size_t k) { return Bitset((k + 63) / 64, 0); }
void set_bit(Bitset& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool get_bit(const Bitset& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

// Groups elements by equal key sets; classes ordered by smallest member.
std::vector<std::vector<Index>> partition_by(const std::vector<Bitset>& keys) {
  std::map<Bitset, std::size_t> class_of;
  std::vector<std::vector<Index>> classes;
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto [it, inserted] = class_of.try_emplace(keys[x], classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(static_cast<Index>(x));
  }
  return classes;
}

std::vector<Bitset> right_ideals(const FiniteSemigroup& s) {
  const std::size_t k = s.size();
  std::vector<Bitset> out(k, make_bitset(k));
  for (std::size_t x = 0; x < k; ++x) {
    set_bit(out[x], x);
    for (std::size_t y = 0; y < k; ++y) set_bit(out[x], s.product(Index(x), Index(y)));
  }
  return out;
}

std::vector<Bitset> left_ideals(const FiniteSemigroup& s) {
  const std::size_t k = s.size();
  std::vector<Bitset> out(k, make_bitset(k));
  for (std::size_t x = 0; x < k; ++x) {
    set_bit(out[x], x);
    for (std::size_t y = 0; y < k; ++y) set_bit(out[x], s.product(Index(y), Index(x)));
  }
  return out;
}

// S^1 x S^1 = R(x) u S R(x), with R(x) = {x} u xS.
std::vector<Bitset> two_sided_ideals(const FiniteSemigroup& s, const std::vector<Bitset>& right) {
  const std::size_t k = s.size();
  std::vector<Bitset> out(right);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (!get_bit(right[x], y)) continue;
      for (std::size_t t = 0; t < k; ++t) set_bit(out[x], s.product(Index(t), Index(y)));
    }
  }
  return out;
}

std::string unique_label(const FiniteSemigroup& s, std::string base) {
  while (s.find(base)) base += "'";
  return base;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> labels, std::vector<Index> table,
                                 std::size_t max_size)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t k = labels_.size();
  if (k == 0) throw Error("semigroup must have at least one element");
  if (k > max_size) {
    throw CapacityError("table has " + std::to_string(k) + " elements, cap is " +
                        std::to_string(max_size));
  }
  if (table_.size() != k * k) throw Error("table must be " + std::to_string(k) + "x" + std::to_string(k));
  {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw Error("duplicate label '" + l + "'");
    }
  }
  for (auto v : table_) {
    if (v >= k) throw Error("table entry " + std::to_string(v) + " out of range");
  }
  for (Index x = 0; x < k; ++x) {
    for (Index y = 0; y < k; ++y) {
      const Index xy = product(x, y);
      for (Index z = 0; z < k; ++z) {
        if (product(xy, z) != product(x, product(y, z))) {
          throw AssociativityError(x, y, z,
                                   "table is not associative: (" + labels_[x] + "*" + labels_[y] + ")*" +
                                       labels_[z] + " != " + labels_[x] + "*(" + labels_[y] + "*" +
                                       labels_[z] + ")");
        }
      }
    }
  }
  for (Index e = 0; e < k && !identity_; ++e) {
    bool ok = true;
    for (Index x = 0; x < k && ok; ++x) ok = product(e, x) == x && product(x, e) == x;
    if (ok) identity_ = e;
  }
}

std::optional<Index> FiniteSemigroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

FiniteSemigroup validate_table(std::vector<std::string> labels,
                               const std::vector<std::vector<Index>>& table, std::size_t max_size) {
  const std::size_t k = labels.size();
  if (table.size() != k) throw Error("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(k));
  std::vector<Index> flat;
  flat.reserve(k * k);
  for (const auto& row : table) {
    if (row.size() != k) throw Error("table row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(k));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(std::move(labels), std::move(flat), max_size);
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.identity()) return s;
  const std::size_t k = s.size();
  const auto one = static_cast<Index>(k);
  std::vector<std::string> labels = s.labels();
  labels.push_back(unique_label(s, "1"));
  std::vector<Index> table((k + 1) * (k + 1));
  for (Index x = 0; x <= k; ++x) {
    for (Index y = 0; y <= k; ++y) {
      Index v;
      if (x == one) v = y;
      else if (y == one) v = x;
      else v = s.product(x, y);
      table[x * (k + 1) + y] = v;
    }
  }
  return FiniteSemigroup(std::move(labels), std::move(table), std::max(kMaxTableSize, k + 1));
}

std::vector<Index> idempotents(const FiniteSemigroup& s) {
  std::vector<Index> out;
  for (Index e = 0; e < s.size(); ++e) {
    if (s.product(e, e) == e) out.push_back(e);
  }
  return out;
}

GreenSummary green_summary(const FiniteSemigroup& s) {
  if (s.size() > kMaxTableSize) throw CapacityError("green_summary: more than 5000 elements");
  if (s.size() > kMaxJClassSize) {
    throw CapacityError("green_summary: J-classes computed for at most 600 elements, got " +
                        std::to_string(s.size()));
  }
  const auto right = right_ideals(s);
  GreenSummary g;
  g.r_classes = partition_by(right);
  g.l_classes = partition_by(left_ideals(s));
  g.j_classes = partition_by(two_sided_ideals(s, right));
  g.idempotent_indices = idempotents(s);
  return g;
}

bool is_j_trivial(const FiniteSemigroup& s) {
  const auto g = green_summary(s);
  return g.j_classes.size() == s.size();
}

BlockGroupCheck is_block_group(const FiniteSemigroup& s) {
  const auto ids = idempotents(s);
  // Implication (1) first over all ordered pairs, then (2).
  for (int implication : {1, 2}) {
    for (Index e : ids) {
      for (Index f : ids) {
        if (e == f) continue;
        const Index ef = s.product(e, f);
        const Index fe = s.product(f, e);
        const bool violated = implication == 1 ? (ef == e && fe == f) : (ef == f && fe == e);
        if (violated) return {false, std::make_pair(e, f), implication};
      }
    }
  }
  return {};
}

Subsemigroup subsemigroup_closure(const FiniteSemigroup& s, std::span<const Index> generators) {
  if (generators.empty()) throw Error("subsemigroup_closure: empty generating set");
  const std::size_t k = s.size();
  std::vector<bool> in(k, false);
  std::vector<Index> members;
  for (Index g : generators) {
    if (g >= k) throw Error("generator index out of range");
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  const std::vector<Index> gens(members);
  // Every element is a generator times a word in the generators, so right
  // multiplication by generators reaches the whole closure.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Index g : gens) {
      const Index p = s.product(members[head], g);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<Index> position(k, 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<Index>(i);

  const std::size_t m = members.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Index x : members) labels.push_back(s.label(x));
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = position[s.product(members[i], members[j])];
  }
  return {FiniteSemigroup(std::move(labels), std::move(table), std::max(kMaxTableSize, m)), std::move(members)};
}

Subsemigroup idempotent_generated(const FiniteSemigroup& s) {
  const auto ids = idempotents(s);
  return subsemigroup_closure(s, ids);
}

HomomorphismCheck check_homomorphism(std::span<const Index> map, const FiniteSemigroup& source,
                                     const FiniteSemigroup& target) {
  if (map.size() != source.size()) throw Error("map size does not match source semigroup");
  for (Index v : map) {
    if (v >= target.size()) throw Error("map entry " + std::to_string(v) + " out of range");
  }
  HomomorphismCheck out;
  out.homomorphism = true;
  for (Index x = 0; x < source.size() && out.homomorphism; ++x) {
    for (Index y = 0; y < source.size(); ++y) {
      if (map[source.product(x, y)] != target.product(map[x], map[y])) {
        out.homomorphism = false;
        out.failing_pair = std::make_pair(x, y);
        break;
      }
    }
  }
  std::vector<bool> hit(target.size(), false);
  std::size_t distinct = 0;
  for (Index v : map) {
    if (!hit[v]) {
      hit[v] = true;
      ++distinct;
    }
  }
  out.injective = distinct == source.size();
  out.surjective = distinct == target.size();
  return out;
}

namespace {

// Extends generator images to a map on U along right multiplication by
// generators. Returns nullopt on conflict.
std::optional<std::vector<Index>> extend_from_generators(const FiniteSemigroup& s, const FiniteSemigroup& u,
                                                         const std::vector<Index>& gens_in_u,
                                                         const std::vector<Index>& images) {
  constexpr Index kUnset = ~Index{0};
  std::vector<Index> map(u.size(), kUnset);
  std::vector<Index> queue;
  for (std::size_t i = 0; i < gens_in_u.size(); ++i) {
    map[gens_in_u[i]] = images[i];
    queue.push_back(gens_in_u[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (std::size_t i = 0; i < gens_in_u.size(); ++i) {
      const Index y = u.product(x, gens_in_u[i]);
      const Index image = s.product(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

bool next_combination(std::vector<Index>& c, std::size_t n) {
  const std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DivisionSearch find_division(const FiniteSemigroup& s, const FiniteSemigroup& t, const DivisionBounds& bounds) {
  if (t.size() > bounds.max_target_size) {
    throw CapacityError("find_division: |T| = " + std::to_string(t.size()) + " exceeds bound " +
                        std::to_string(bounds.max_target_size));
  }
  if (bounds.max_generators == 0) throw Error("find_division: max_generators must be positive");
  DivisionSearch result;
  result.bounds = bounds;
  std::set<std::vector<Index>> seen;
  const std::size_t max_gens = std::min(bounds.max_generators, t.size());

  for (std::size_t r = 1; r <= max_gens; ++r) {
    std::vector<Index> gens(r);
    for (std::size_t i = 0; i < r; ++i) gens[i] = static_cast<Index>(i);
    do {
      auto sub = subsemigroup_closure(t, gens);
      if (!seen.insert(sub.embedding).second) continue;
      ++result.subsemigroups_examined;
      if (sub.semigroup.size() < s.size()) continue;

      std::vector<Index> gens_in_u;
      for (Index g : gens) {
        auto pos = std::lower_bound(sub.embedding.begin(), sub.embedding.end(), g) - sub.embedding.begin();
        gens_in_u.push_back(static_cast<Index>(pos));
      }
      std::vector<Index> images(r, 0);
      while (true) {
        if (auto map = extend_from_generators(s, sub.semigroup, gens_in_u, images)) {
          const auto check = check_homomorphism(*map, sub.semigroup, s);
          if (check.homomorphism && check.surjective) {
            result.witness = DivisionWitness{gens, std::move(sub), std::move(*map)};
            return result;
          }
        }
        std::size_t pos = r;
        while (pos > 0 && images[pos - 1] + 1 == s.size()) images[--pos] = 0;
        if (pos == 0) break;
        ++images[pos - 1];
      }
    } while (next_combination(gens, t.size()));
  }
  return result;
}

}  // namespace hallkit
