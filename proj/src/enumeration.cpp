#include "hallkit/enumeration.hpp"

#include <array>
#include <bit>
#include <thread>

#include "hallkit/group.hpp"

namespace hallkit {

namespace {

void require_count_dim(std::size_t n, std::size_t cap, const char* what) {
  if (n < 1 || n > cap) {
    throw CapacityError(std::string(what) + ": n must be in [1, " + std::to_string(cap) + "], got " +
                        std::to_string(n));
  }
}

using Rows = std::array<std::uint64_t, kMaxCountDim>;

bool is_idempotent(const Rows& rows, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t mid = rows[i]; mid; mid &= mid - 1) acc |= rows[std::countr_zero(mid)];
    if (acc != rows[i]) return false;
  }
  return true;
}

bool has_full_diagonal(const Rows& rows, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    if (!((rows[i] >> i) & 1U)) return false;
  }
  return true;
}

// Cheap rejections: a zero row, an uncovered column, or two rows whose only
// entry is the same column.
bool passes_prefilter(const Rows& rows, std::size_t n, std::uint64_t full) noexcept {
  std::uint64_t cover = 0, forced = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t r = rows[i];
    if (r == 0) return false;
    cover |= r;
    if ((r & (r - 1)) == 0) {
      if (forced & r) return false;
      forced |= r;
    }
  }
  return cover == full;
}

struct ScanCounts {
  std::uint64_t hall = 0;
  std::uint64_t reflexive = 0;
  std::uint64_t idempotent_hall = 0;
  std::uint64_t non_reflexive_idempotent = 0;
};

void scan_first_row(std::size_t n, std::uint64_t first_row, ScanCounts& counts) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t rest_count = std::uint64_t{1} << (n * (n - 1));
  Rows rows{};
  rows[0] = first_row;
  for (std::uint64_t rest = 0; rest < rest_count; ++rest) {
    for (std::size_t i = 1; i < n; ++i) rows[i] = (rest >> ((i - 1) * n)) & full;
    const bool reflexive = has_full_diagonal(rows, n);
    counts.reflexive += reflexive;
    if (!passes_prefilter(rows, n, full)) continue;
    if (!detail::rows_have_perfect_matching({rows.data(), n}, full)) continue;
    ++counts.hall;
    if (is_idempotent(rows, n)) {
      ++counts.idempotent_hall;
      counts.non_reflexive_idempotent += !reflexive;
    }
  }
}

RelationSemigroup materialize_if(std::size_t n, bool (*keep)(const Relation&)) {
  std::vector<Relation> elements;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto r = Relation::from_code(n, code);
    if (keep(r)) elements.push_back(r);
  }
  return semigroup_of_relations(std::move(elements));
}

}  // namespace

EnumerationReport count_hall(std::size_t n, std::size_t workers) {
  require_count_dim(n, kMaxCountDim, "count_hall");
  const auto start = std::chrono::steady_clock::now();
  workers = std::max<std::size_t>(workers, 1);
  const std::uint64_t partitions = std::uint64_t{1} << n;

  std::vector<ScanCounts> per_worker(workers);
  auto run = [&](std::size_t w) {
    for (std::uint64_t row = w; row < partitions; row += workers) {
      if (row == 0) continue;  // zero first row: neither Hall nor reflexive
      scan_first_row(n, row, per_worker[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  EnumerationReport report;
  report.n = n;
  report.worker_count = workers;
  std::uint64_t non_reflexive = 0;
  for (const auto& c : per_worker) {
    report.total_hall += c.hall;
    report.total_reflexive += c.reflexive;
    report.idempotent_hall += c.idempotent_hall;
    non_reflexive += c.non_reflexive_idempotent;
  }
  report.idempotents_all_reflexive = non_reflexive == 0;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::uint64_t count_hall_inclusion_exclusion(std::size_t n) {
  require_count_dim(n, kMaxCountDim, "count_hall_inclusion_exclusion");
  if (n == kMaxCountDim) return count_hall_upward_closure(n);

  // |union over p of {M : p in M}| = sum over nonempty T of
  // (-1)^(|T|+1) 2^(n^2 - |support(T)|), visiting T in Gray-code order.
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  const std::size_t cells = n * n;
  std::vector<std::uint8_t> cover(cells, 0);
  std::vector<bool> chosen(m, false);
  std::size_t covered = 0, size = 0;
  std::int64_t sum = 0;
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto b = static_cast<std::size_t>(std::countr_zero(step));
    const bool adding = !chosen[b];
    chosen[b] = adding;
    for (std::size_t i = 0; i < n; ++i) {
      auto& c = cover[i * n + perms[b](i)];
      if (adding) {
        covered += (c++ == 0);
      } else {
        covered -= (--c == 0);
      }
    }
    size = adding ? size + 1 : size - 1;
    const std::int64_t term = std::int64_t{1} << (cells - covered);
    sum += (size & 1U) ? term : -term;
  }
  return static_cast<std::uint64_t>(sum);
}

std::uint64_t count_hall_upward_closure(std::size_t n) {
  require_count_dim(n, kMaxCountDim, "count_hall_upward_closure");
  const std::size_t cells = n * n;
  const std::uint64_t total = std::uint64_t{1} << cells;
  const std::size_t words = static_cast<std::size_t>(std::max<std::uint64_t>(total / 64, 1));
  std::vector<std::uint64_t> up(words, 0);
  for (const auto& p : all_permutations(n)) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) code |= std::uint64_t{1} << (i * n + p(i));
    up[code / 64] |= std::uint64_t{1} << (code % 64);
  }
  // Superset closure one coordinate at a time: M in up  =>  M | bit in up.
  static constexpr std::array<std::uint64_t, 6> kClear = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
      0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
  for (std::size_t bit = 0; bit < cells; ++bit) {
    if (bit < 6) {
      const unsigned shift = 1U << bit;
      for (auto& w : up) w |= (w & kClear[bit]) << shift;
    } else {
      const std::size_t stride = std::size_t{1} << (bit - 6);
      for (std::size_t w = 0; w < words; ++w) {
        if (!(w & stride)) up[w | stride] |= up[w];
      }
    }
  }
  std::uint64_t count = 0;
  for (auto w : up) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

IdempotentCensus hall_idempotent_census(std::size_t n) {
  require_count_dim(n, kMaxCensusDim, "hall_idempotent_census");
  IdempotentCensus census;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  std::uint64_t diagonal = 0;
  std::vector<std::size_t> free_bits;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) diagonal |= std::uint64_t{1} << (i * n + j);
      else free_bits.push_back(i * n + j);
    }
  }
  auto rows_of = [&](std::uint64_t code) {
    Rows rows{};
    for (std::size_t i = 0; i < n; ++i) rows[i] = (code >> (i * n)) & full;
    return rows;
  };

  const std::uint64_t reflexive_total = std::uint64_t{1} << free_bits.size();
  for (std::uint64_t rest = 0; rest < reflexive_total; ++rest) {
    std::uint64_t code = diagonal;
    for (std::size_t k = 0; k < free_bits.size(); ++k) {
      if ((rest >> k) & 1U) code |= std::uint64_t{1} << free_bits[k];
    }
    census.count += is_idempotent(rows_of(code), n);
  }

  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto rows = rows_of(code);
    if (!is_idempotent(rows, n)) continue;
    if (!detail::rows_have_perfect_matching({rows.data(), n}, full)) continue;
    ++census.full_scan_count;
    if (!has_full_diagonal(rows, n)) {
      ++census.non_reflexive;
      if (!census.first_exception) census.first_exception = Relation::from_code(n, code);
    }
  }
  census.all_reflexive = census.non_reflexive == 0;
  return census;
}

RelationSemigroup materialize_hall(std::size_t n) {
  require_count_dim(n, kMaxMaterializeDim, "materialize_hall");
  return materialize_if(n, [](const Relation& r) { return has_perfect_matching(r); });
}

RelationSemigroup materialize_reflexive(std::size_t n) {
  require_count_dim(n, kMaxMaterializeDim, "materialize_reflexive");
  return materialize_if(n, [](const Relation& r) { return is_reflexive(r); });
}

RelationSemigroup materialize_all_relations(std::size_t n) {
  require_count_dim(n, kMaxMaterializeDim, "materialize_all_relations");
  return materialize_if(n, [](const Relation&) { return true; });
}

HallSurjectionCheck verify_hall_surjection(std::size_t n) {
  require_count_dim(n, kMaxConjugationDegree, "verify_hall_surjection");
  const auto conj = conjugation_action(n);
  const auto product = semidirect_product(conj.reflexive.semigroup(), conj.action.group, conj.action);
  const auto hall = materialize_hall(n);

  HallSurjectionCheck out;
  out.n = n;
  out.domain_size = product.semigroup.size();
  out.codomain_size = hall.size();

  std::vector<Index> map;
  map.reserve(product.pairs.size());
  for (const auto& [m, g] : product.pairs) {
    const auto image = project_to_hall(conj.reflexive.element(m), conj.permutations[g]);
    const auto idx = hall.index_of(image);
    if (!idx) {
      out.failures.push_back("image " + image.to_string() + " is not in H_n");
      return out;
    }
    map.push_back(*idx);
  }
  const auto check = check_homomorphism(map, product.semigroup, hall.semigroup());
  out.homomorphism = check.homomorphism;
  out.surjective = check.surjective;
  if (check.failing_pair) {
    out.failures.push_back("product of " + product.semigroup.label(check.failing_pair->first) + " and " +
                           product.semigroup.label(check.failing_pair->second) + " is not preserved");
  }
  for (const auto& sigma : hall.elements()) {
    const auto f = hall_factorization(sigma);
    if (!is_reflexive(f.reflexive) || project_to_hall(f.reflexive, f.permutation) != sigma) {
      out.factorization_round_trip = false;
      out.failures.push_back("factorization of " + sigma.to_string() + " does not round-trip");
    }
  }
  return out;
}

BlockGroupCriteria compare_block_group_criteria(const FiniteSemigroup& s) {
  return {is_block_group(s).is_block_group, is_j_trivial(idempotent_generated(s).semigroup)};
}

bool CampaignReport::passed() const noexcept {
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

CampaignReport verification_campaign(std::size_t n) {
  require_count_dim(n, kMaxMaterializeDim, "verification_campaign");
  CampaignReport report;
  report.n = n;
  const auto reflexive = materialize_reflexive(n);
  const auto hall = materialize_hall(n);
  const std::string suffix = std::to_string(n);

  {
    const auto g = green_summary(reflexive.semigroup());
    CampaignItem item{"R_" + suffix + " is J-trivial", g.j_classes.size() == reflexive.size(),
                      std::to_string(reflexive.size()) + " elements, " + std::to_string(g.j_classes.size()) +
                          " J-classes",
                      {}};
    for (const auto& cls : g.j_classes) {
      if (cls.size() > 1) {
        for (Index x : cls) item.witnesses.push_back(reflexive.element(x).to_string());
        break;
      }
    }
    report.items.push_back(std::move(item));
  }
  {
    const auto bg = is_block_group(hall.semigroup());
    CampaignItem item{"H_" + suffix + " is a block-group", bg.is_block_group,
                      std::to_string(hall.size()) + " elements", {}};
    if (bg.witness) {
      item.witnesses = {hall.element(bg.witness->first).to_string(), hall.element(bg.witness->second).to_string()};
    }
    report.items.push_back(std::move(item));
  }
  {
    const auto on_hall = compare_block_group_criteria(hall.semigroup());
    const auto on_reflexive = compare_block_group_criteria(reflexive.semigroup());
    CampaignItem item{"block-group iff idempotents generate a J-trivial subsemigroup",
                      on_hall.agree() && on_reflexive.agree(), "checked on H_" + suffix + " and R_" + suffix, {}};
    if (!on_hall.agree()) item.witnesses.push_back("H_" + suffix);
    if (!on_reflexive.agree()) item.witnesses.push_back("R_" + suffix);
    report.items.push_back(std::move(item));
  }
  {
    CampaignItem item{"P(G) embeds into H_" + suffix + " via A -> rho_A", true, "", {}};
    std::size_t groups = 0;
    for (const auto& [name, group] : group_catalog()) {
      if (group.size() != n) continue;
      ++groups;
      const auto check = verify_hall_embedding(group);
      if (!check.passed()) {
        item.passed = false;
        item.witnesses.push_back(name);
      }
    }
    item.detail = std::to_string(groups) + " catalog group(s) of order " + suffix;
    report.items.push_back(std::move(item));
  }
  {
    const auto s = verify_hall_surjection(n);
    CampaignItem item{"R_" + suffix + " x| S_" + suffix + " maps onto H_" + suffix, s.passed(),
                      std::to_string(s.domain_size) + " pairs onto " + std::to_string(s.codomain_size) + " elements",
                      s.failures};
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace hallkit
