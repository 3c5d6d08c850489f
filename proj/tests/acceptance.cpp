// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

#include <unistd.h>

#include "hallkit/cli.hpp"
#include "hallkit/enumeration.hpp"
#include "hallkit/formats.hpp"
#include "hallkit/group.hpp"
#include "oracles.hpp"

using namespace hallkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t brute_hall_count(std::size_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code)
    count += !oracle::contained_permutations(Relation::from_code(n, code)).empty();
  return count;
}

std::set<std::uint64_t> brute_hall_codes(std::size_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code)
    if (!oracle::contained_permutations(Relation::from_code(n, code)).empty()) out.insert(code);
  return out;
}

std::size_t workers_available() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

Outcome criterion1() {
  Outcome o;
  const std::uint64_t expected[] = {0, 1, 7, 247};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto brute = brute_hall_count(n);
    const auto streamed = count_hall(n, 1).total_hall;
    o.require(brute == expected[n], "brute force n=" + std::to_string(n));
    o.require(streamed == expected[n], "count_hall n=" + std::to_string(n));
  }
  o.detail << "n=1..3: 1, 7, 247";

  auto t0 = Clock::now();
  const auto r4 = count_hall(4, workers_available());
  const double t4 = seconds_since(t0);
  const auto oracle4 = count_hall_inclusion_exclusion(4);
  o.require(r4.total_hall == oracle4, "n=4 oracle");
  o.require(t4 < 5.0, "n=4 under 5 s");
  o.detail << "; n=4: " << r4.total_hall << " (oracle " << oracle4 << ", " << t4 << " s)";

  t0 = Clock::now();
  const auto r5 = count_hall(5, workers_available());
  const double t5 = seconds_since(t0);
  const auto oracle5 = count_hall_inclusion_exclusion(5);
  o.require(r5.total_hall == oracle5, "n=5 oracle");
  o.require(t5 < 300.0, "n=5 under 300 s");
  o.detail << "; n=5: " << r5.total_hall << " (oracle " << oracle5 << ", " << t5 << " s)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t expected = std::uint64_t{1} << (n * (n - 1));
    // Independent count for small n: scan every matrix for a full diagonal.
    if (n <= 4) {
      std::uint64_t scanned = 0;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
        const auto r = Relation::from_code(n, code);
        bool refl = true;
        for (std::size_t i = 0; i < n; ++i) refl = refl && r.test(i, i);
        scanned += refl;
      }
      o.require(scanned == expected, "scan n=" + std::to_string(n));
    }
    const auto got = count_hall(n, 1).total_reflexive;
    o.require(got == expected, "count n=" + std::to_string(n));
    o.detail << (n > 1 ? ", " : "") << got;
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::uint64_t exceptions = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto c = hall_idempotent_census(n);
    exceptions += c.non_reflexive;
    o.require(c.all_reflexive, "census n=" + std::to_string(n));
    // Independent scan with the brute-force product.
    std::uint64_t idempotent_hall = 0;
    std::uint64_t missing_diagonal = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const auto r = Relation::from_code(n, code);
      if (oracle::compose(r, r) != r) continue;
      if (oracle::contained_permutations(r).empty()) continue;
      ++idempotent_hall;
      for (std::size_t i = 0; i < n; ++i)
        if (!r.test(i, i)) {
          ++missing_diagonal;
          break;
        }
    }
    o.require(missing_diagonal == 0, "oracle scan n=" + std::to_string(n));
    o.require(idempotent_hall == c.full_scan_count, "idempotent count n=" + std::to_string(n));
    o.detail << "n=" << n << ": " << c.full_scan_count << " idempotents; ";
  }
  o.detail << exceptions << " exceptions";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto h2 = materialize_hall(2);
  const auto h3 = materialize_hall(3);
  o.require(h2.size() == 7, "|H_2| = 7");
  o.require(h3.size() == 247, "|H_3| = 247");
  o.require(is_block_group(h2.semigroup()).is_block_group, "H_2 block-group");
  o.require(is_block_group(h3.semigroup()).is_block_group, "H_3 block-group");
  o.require(is_j_trivial(materialize_reflexive(2).semigroup()), "R_2 J-trivial");
  o.require(is_j_trivial(materialize_reflexive(3).semigroup()), "R_3 J-trivial");

  std::multiset<std::size_t> library;
  for (const auto& c : green_summary(h2.semigroup()).j_classes) library.insert(c.size());
  const auto sizes = oracle::class_sizes(h2.semigroup(), true, true);
  const std::multiset<std::size_t> brute(sizes.begin(), sizes.end());
  const std::multiset<std::size_t> expected{2, 4, 1};
  o.require(library == expected, "J-class sizes");
  o.require(brute == expected, "oracle J-class sizes");
  o.detail << "H_2 J-classes {";
  for (auto it = library.begin(); it != library.end(); ++it) o.detail << (it == library.begin() ? "" : ", ") << *it;
  o.detail << "}";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (const auto& [name, g] : group_catalog()) {
    if (g.size() < 2) continue;
    const auto check = verify_hall_embedding(g);
    const std::size_t subsets = (std::size_t{1} << g.size()) - 1;
    o.require(check.passed(), name);
    o.require(check.pairs_checked == subsets * subsets, name + " pair count");
    pairs += check.pairs_checked;

    // Independent recomputation: brute-force products and subset products.
    std::vector<Relation> rho;
    std::unordered_set<Relation, RelationHash> distinct;
    for (std::uint64_t a = 1; a <= subsets; ++a) {
      Relation r(g.size());
      for (Index x = 0; x < g.size(); ++x)
        for (Index y = 0; y < g.size(); ++y)
          if ((a >> g.product(g.inverse(x), y)) & 1U) r.set(x, y);
      o.require(!oracle::contained_permutations(r).empty() || g.size() > 6, name + " Hall");
      rho.push_back(r);
      distinct.insert(r);
    }
    o.require(distinct.size() == subsets, name + " injective (oracle)");
    for (std::uint64_t a = 1; a <= subsets; ++a)
      for (std::uint64_t b = 1; b <= subsets; ++b) {
        std::uint64_t ab = 0;
        for (Index x = 0; x < g.size(); ++x)
          for (Index y = 0; y < g.size(); ++y)
            if (((a >> x) & 1U) && ((b >> y) & 1U)) ab |= std::uint64_t{1} << g.product(x, y);
        if (oracle::compose(rho[a - 1], rho[b - 1]) != rho[ab - 1]) {
          o.require(false, name + " homomorphism (oracle)");
          a = b = subsets + 1;
        }
      }
  }
  const double t = seconds_since(t0);
  o.require(t < 10.0, "under 10 s");
  o.detail << pairs << " pairs over cyclic 2-6 and S_3 in " << t << " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::size_t domain[] = {0, 0, 8, 384};
  const std::size_t codomain[] = {0, 0, 7, 247};
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto s = verify_hall_surjection(n);
    o.require(s.passed(), "library check n=" + std::to_string(n));
    o.require(s.domain_size == domain[n], "domain n=" + std::to_string(n));
    o.require(s.codomain_size == codomain[n], "codomain n=" + std::to_string(n));

    // Images of rho p over reflexive rho and permutations p, by brute force.
    std::set<std::uint64_t> image;
    std::size_t pairs = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const auto rho = Relation::from_code(n, code);
      bool refl = true;
      for (std::size_t i = 0; i < n; ++i) refl = refl && rho.test(i, i);
      if (!refl) continue;
      for (const auto& p : all_permutations(n)) {
        ++pairs;
        const auto got = project_to_hall(rho, p);
        o.require(got == oracle::compose(rho, p.relation()), "projection value");
        image.insert(got.code());
      }
    }
    o.require(pairs == domain[n], "oracle domain n=" + std::to_string(n));
    o.require(image == brute_hall_codes(n), "oracle image n=" + std::to_string(n));

    const auto hall = materialize_hall(n);
    for (const auto& sigma : hall.elements()) {
      const auto f = hall_factorization(sigma);
      if (!is_reflexive(f.reflexive) || oracle::compose(f.reflexive, f.permutation.relation()) != sigma) {
        o.require(false, "factorization round trip");
        break;
      }
    }
    o.detail << (n == 2 ? "" : "; ") << s.domain_size << " -> " << s.codomain_size;
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<std::string, FiniteSemigroup>> catalog;
  for (std::size_t n = 1; n <= 3; ++n) {
    catalog.emplace_back("H_" + std::to_string(n), materialize_hall(n).semigroup());
    catalog.emplace_back("R_" + std::to_string(n), materialize_reflexive(n).semigroup());
  }
  for (const auto& [name, g] : group_catalog()) catalog.emplace_back("P(" + name + ")", power_semigroup(g.semigroup()).semigroup);
  const auto b2 = materialize_all_relations(2);
  catalog.emplace_back("B_2", b2.semigroup());
  std::size_t i = 0;
  for (const auto& rs : oracle::random_relation_semigroups(2024, 100)) {
    o.require(rs.size() <= 20, "random order bound");
    catalog.emplace_back("random-" + std::to_string(i++), rs.semigroup());
  }

  std::size_t discrepancies = 0;
  for (const auto& [name, s] : catalog) {
    if (!compare_block_group_criteria(s).agree()) {
      ++discrepancies;
      o.require(false, name);
    }
  }
  o.require(discrepancies == 0, "zero discrepancies");

  const auto check = is_block_group(b2.semigroup());
  o.require(!check.is_block_group, "B_2 not a block-group");
  if (check.witness) {
    const auto e = b2.element(check.witness->first);
    const auto f = b2.element(check.witness->second);
    o.require(e == Relation::from_pairs(2, {{1, 1}}), "witness e");
    o.require(f == Relation::from_pairs(2, {{1, 1}, {2, 1}}), "witness f");
    o.require(oracle::compose(e, e) == e && oracle::compose(f, f) == f, "witness idempotent");
    o.require(oracle::compose(e, f) == e && oracle::compose(f, e) == f, "witness R-related");
    o.detail << catalog.size() << " semigroups, " << discrepancies << " discrepancies; B_2 witness e="
             << e.to_string() << " f=" << f.to_string();
  } else {
    o.require(false, "B_2 witness reported");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto fingerprint = [](const EnumerationReport& r) {
    std::ostringstream s;
    s << r.n << ' ' << r.total_hall << ' ' << r.total_reflexive << ' ' << r.idempotent_hall << ' '
      << r.idempotents_all_reflexive;
    return s.str();
  };
  const auto base = fingerprint(count_hall(4, 1));
  for (std::size_t w : {2U, 8U}) o.require(fingerprint(count_hall(4, w)) == base, "workers " + std::to_string(w));

  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / ("hallkit-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const auto rel = write("r.rel", "3\n110\n011\n101\n");
  const auto zero = write("z.rel", "2\n00\n00\n");
  const auto z2 = write("z2.cayley", "e,a\n1,2\n2,1\nidentity=e\n");
  const auto h2 = write("h2.cayley", emit_cayley(materialize_hall(2).semigroup()));
  const auto sl = write("sl.cayley", "1,e\n1,2\n2,2\n");

  const std::vector<std::vector<std::string>> commands = {
      {"check-hall", rel},
      {"check-hall", zero},
      {"compose", rel, rel},
      {"analyze", z2},
      {"analyze", h2},
      {"power-group", "--group", "cyclic:3"},
      {"embed", "--group", "symmetric:3"},
      {"embed", "--group", "cyclic:4", "--subset", "1,3"},
      {"semidirect", "--n", "3"},
      {"count-hall", "--n", "4", "--workers", "2"},
      {"campaign", "--n", "3"},
      {"divide", sl, h2},
      {"divide", z2, h2},
  };
  std::size_t reproducible = 0;
  for (auto args : commands) {
    args.push_back("--no-timing");
    for (bool pretty : {false, true}) {
      auto full = args;
      if (pretty) full.insert(full.begin(), "--pretty");
      const auto a = dispatch(full);
      const auto b = dispatch(full);
      if (a.out == b.out && a.exit_code == b.exit_code && a.exit_code != kExitUsage) {
        ++reproducible;
      } else {
        o.require(false, "cli " + args.front());
      }
    }
  }
  // count-hall reports agree across worker counts apart from the worker field.
  auto counts = [](const std::string& w) {
    auto r = dispatch({"count-hall", "--n", "4", "--workers", w, "--no-timing"}).report;
    if (!r) return nlohmann::json();
    r->results.erase("worker_count");
    r->inputs.erase("workers");
    return to_json(*r);
  };
  o.require(counts("1") == counts("2") && counts("1") == counts("8"), "cli count-hall across workers");
  fs::remove_all(dir);
  o.detail << "count_hall(4) identical for 1, 2, 8 workers; " << reproducible << "/" << 2 * commands.size()
           << " CLI reports reproducible";
  return o;
}

Outcome criterion9() {
  Outcome o;
  // The general statements are covered by witnesses and exhaustive small-n
  // checks; rerun the campaign as the summary of that evidence.
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = verification_campaign(n);
    o.require(c.passed(), "campaign n=" + std::to_string(n));
  }
  o.detail << "general theorems covered by property suites; campaign n=1..3 passed";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"count_hall exact values and oracle agreement", criterion1},
      {"|R_n| = 2^(n(n-1)) for n = 1..5", criterion2},
      {"idempotent Hall relations are reflexive for n <= 4", criterion3},
      {"H_2, H_3 block-groups; R_2, R_3 J-trivial; H_2 J-classes", criterion4},
      {"A -> rho_A embedding for the group catalog", criterion5},
      {"R_n x| S_n -> H_n surjection and factorization", criterion6},
      {"block-group criteria agree over the catalog", criterion7},
      {"determinism across workers and CLI runs", criterion8},
      {"general theorems rest on the property suites", criterion9},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
