#include "hallkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include <CLI11.hpp>

#include "hallkit/enumeration.hpp"
#include "hallkit/formats.hpp"
#include "hallkit/group.hpp"
#include "hallkit/relation.hpp"
#include "hallkit/semigroup.hpp"

namespace hallkit {

using nlohmann::json;

namespace {

// Input problems detected after argument parsing; mapped to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

json rows_json(const Relation& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < r.dim(); ++j) row.push_back(r.test(i, j) ? '1' : '0');
    rows.push_back(row);
  }
  return rows;
}

json labels_json(const FiniteSemigroup& s, const std::vector<Index>& xs) {
  json out = json::array();
  for (Index x : xs) out.push_back(s.label(x));
  return out;
}

json classes_json(const FiniteSemigroup& s, const std::vector<std::vector<Index>>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(labels_json(s, c));
  return out;
}

FiniteGroup parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("group spec must be cyclic:<m>, symmetric:<n> or file:<path>");
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  auto number = [&]() -> std::size_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return v;
    } catch (const std::exception&) {
      throw UsageError("group spec '" + spec + "' needs a number after ':'");
    }
  };
  if (kind == "cyclic") return cyclic_group(number());
  if (kind == "symmetric") return symmetric_group_table(number());
  if (kind == "file") return FiniteGroup(parse_cayley_file(arg, true));
  throw UsageError("unknown group kind '" + kind + "'");
}

std::vector<Index> parse_subset_literal(const std::string& text, std::size_t order) {
  std::vector<Index> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const auto item = text.substr(pos, end - pos);
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("subset literal '" + text + "' must be a comma list of 1-based indices");
    }
    if (v < 1 || v > order) throw UsageError("subset index " + item + " out of range 1.." + std::to_string(order));
    out.push_back(static_cast<Index>(v - 1));
    pos = end + 1;
  }
  return out;
}

std::size_t resolve_workers(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HALLKIT_WORKERS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HALLKIT_WORKERS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void set_outcome(Report& r, bool passed, const std::string& fail_message) {
  r.status = passed ? Status::pass : Status::fail;
  if (!passed && r.witnesses.empty()) r.message = fail_message;
}

Report run_check_hall(const std::string& path) {
  Report r;
  r.command = "check-hall";
  r.inputs = {{"relation", path}};
  const auto rel = parse_relation_file(path);
  const auto witness = is_hall(rel);
  r.results = {{"dim", rel.dim()}, {"is_hall", witness.has_value()}, {"is_reflexive", is_reflexive(rel)}};
  r.results["witness"] = witness ? json(witness->one_based()) : json(nullptr);
  if (rel.dim() <= kPermanentMaxDim) r.results["boolean_permanent"] = boolean_permanent(rel);
  if (witness) r.witnesses.push_back({"permutation", witness->one_based()});
  set_outcome(r, witness.has_value(), "relation contains no permutation");
  return r;
}

Report run_compose(const std::string& a, const std::string& b) {
  Report r;
  r.command = "compose";
  r.inputs = {{"left", a}, {"right", b}};
  const auto product = compose(parse_relation_file(a), parse_relation_file(b));
  r.results = {{"dim", product.dim()},
               {"product", rows_json(product)},
               {"is_reflexive", is_reflexive(product)},
               {"is_hall", has_perfect_matching(product)}};
  return r;
}

Report run_analyze(const std::string& path) {
  Report r;
  r.command = "analyze";
  r.inputs = {{"cayley", path}};
  const auto s = parse_cayley_file(path);
  const auto g = green_summary(s);
  const auto bg = is_block_group(s);
  r.results = {{"size", s.size()},
               {"identity", s.identity() ? json(s.label(*s.identity())) : json(nullptr)},
               {"idempotents", labels_json(s, g.idempotent_indices)},
               {"r_classes", classes_json(s, g.r_classes)},
               {"l_classes", classes_json(s, g.l_classes)},
               {"j_classes", classes_json(s, g.j_classes)},
               {"is_j_trivial", g.j_classes.size() == s.size()},
               {"is_block_group", bg.is_block_group},
               {"idempotents_generate_j_trivial", is_j_trivial(idempotent_generated(s).semigroup)}};
  if (bg.witness) {
    r.results["block_group_witness"] = {{"e", s.label(bg.witness->first)},
                                        {"f", s.label(bg.witness->second)},
                                        {"implication", bg.implication}};
    r.witnesses.push_back({"e", s.label(bg.witness->first)});
    r.witnesses.push_back({"f", s.label(bg.witness->second)});
  }
  r.status = Status::pass;
  return r;
}

Report run_power_group(const std::string& spec) {
  Report r;
  r.command = "power-group";
  r.inputs = {{"group", spec}};
  const auto g = parse_group_spec(spec);
  const auto p = power_semigroup(g.semigroup());
  const auto bg = is_block_group(p.semigroup);
  const auto criteria = compare_block_group_criteria(p.semigroup);
  r.results = {{"group_order", g.size()},
               {"size", p.semigroup.size()},
               {"idempotents", labels_json(p.semigroup, idempotents(p.semigroup))},
               {"is_block_group", bg.is_block_group},
               {"idempotents_generate_j_trivial", criteria.idempotents_generate_j_trivial}};
  if (bg.witness) {
    r.witnesses.push_back({"e", p.semigroup.label(bg.witness->first)});
    r.witnesses.push_back({"f", p.semigroup.label(bg.witness->second)});
  }
  set_outcome(r, bg.is_block_group && criteria.agree(), "power semigroup failed the block-group checks");
  return r;
}

Report run_embed(const std::string& spec, const std::string& subset) {
  Report r;
  r.command = "embed";
  r.inputs = {{"group", spec}};
  const auto g = parse_group_spec(spec);
  if (!subset.empty()) {
    r.inputs["subset"] = subset;
    const GroupSubset a(g, parse_subset_literal(subset, g.size()));
    r.results["rho"] = rows_json(hall_relation(a));
  }
  const auto check = verify_hall_embedding(g);
  r.results["group_order"] = g.size();
  r.results["subsets"] = check.subsets;
  r.results["pairs_checked"] = check.pairs_checked;
  r.results["all_hall"] = check.all_hall;
  r.results["injective"] = check.injective;
  r.results["homomorphism"] = check.homomorphism;
  if (check.failing_pair) {
    r.witnesses.push_back({"A", GroupSubset(g, check.failing_pair->first).elements()});
    r.witnesses.push_back({"B", GroupSubset(g, check.failing_pair->second).elements()});
  }
  set_outcome(r, check.passed(), "embedding check failed");
  return r;
}

Report run_semidirect(std::size_t n) {
  Report r;
  r.command = "semidirect";
  r.inputs = {{"n", n}};
  const auto s = verify_hall_surjection(n);
  r.results = {{"domain_size", s.domain_size},
               {"codomain_size", s.codomain_size},
               {"homomorphism", s.homomorphism},
               {"surjective", s.surjective},
               {"factorization_round_trip", s.factorization_round_trip}};
  for (const auto& f : s.failures) r.witnesses.push_back({"failure", f});
  set_outcome(r, s.passed(), "surjection check failed");
  return r;
}

Report run_count_hall(std::size_t n, std::size_t workers, bool timing) {
  Report r;
  r.command = "count-hall";
  r.inputs = {{"n", n}, {"workers", workers}};
  const auto report = count_hall(n, workers);
  const auto oracle = count_hall_inclusion_exclusion(n);
  r.results = {{"n", report.n},
               {"total_hall", report.total_hall},
               {"total_reflexive", report.total_reflexive},
               {"idempotent_hall", report.idempotent_hall},
               {"idempotents_all_reflexive", report.idempotents_all_reflexive},
               {"oracle_total_hall", oracle},
               {"oracle_agrees", oracle == report.total_hall},
               {"worker_count", report.worker_count}};
  if (timing) r.results["count_elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  set_outcome(r, oracle == report.total_hall && report.idempotents_all_reflexive,
              "count disagrees with the independent oracle");
  return r;
}

Report run_campaign(std::size_t n) {
  Report r;
  r.command = "campaign";
  r.inputs = {{"n", n}};
  const auto c = verification_campaign(n);
  json items = json::array();
  for (const auto& item : c.items) {
    items.push_back({{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
    for (const auto& w : item.witnesses) r.witnesses.push_back({item.name, w});
  }
  r.results = {{"n", n}, {"items", items}, {"passed", c.passed()}};
  set_outcome(r, c.passed(), "campaign check failed");
  return r;
}

Report run_divide(const std::string& s_path, const std::string& t_path, const DivisionBounds& bounds) {
  Report r;
  r.command = "divide";
  r.inputs = {{"S", s_path}, {"T", t_path}, {"max_target_size", bounds.max_target_size},
              {"max_generators", bounds.max_generators}};
  const auto s = parse_cayley_file(s_path);
  const auto t = parse_cayley_file(t_path);
  const auto search = find_division(s, t, bounds);
  r.results["found"] = search.witness.has_value();
  r.results["subsemigroups_examined"] = search.subsemigroups_examined;
  if (search.witness) {
    const auto& w = *search.witness;
    const auto& u = w.subsemigroup.semigroup;
    r.results["generators"] = labels_json(t, w.generators);
    r.results["subsemigroup"] = labels_json(t, w.subsemigroup.embedding);
    json map = json::object();
    for (Index x = 0; x < u.size(); ++x) map[u.label(x)] = s.label(w.map[x]);
    r.results["map"] = map;
    r.witnesses.push_back({"map", map});
    r.status = Status::pass;
  } else {
    r.status = Status::fail;
    r.message = "no division found within bounds; this is not a proof that S does not divide T";
  }
  return r;
}

}  // namespace

CliOutcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"hallkit: Hall relations, block-groups and finite semigroup tools", "hallkit"};
  app.require_subcommand(1);
  bool pretty = false, no_timing = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  app.add_flag("--no-timing", no_timing, "Omit timing fields from the report");

  std::function<Report()> action;
  std::string file_a, file_b, group_spec, subset;
  std::size_t n = 0, workers = 0;
  DivisionBounds bounds;

  auto* check = app.add_subcommand("check-hall", "Find a permutation inside a relation")->fallthrough();
  check->add_option("relation", file_a, "relmat v1 file")->required();
  check->callback([&] { action = [&] { return run_check_hall(file_a); }; });

  auto* comp = app.add_subcommand("compose", "Compose two relations (first, then second)")->fallthrough();
  comp->add_option("left", file_a, "relmat v1 file")->required();
  comp->add_option("right", file_b, "relmat v1 file")->required();
  comp->callback([&] { action = [&] { return run_compose(file_a, file_b); }; });

  auto* analyze = app.add_subcommand("analyze", "Green's relations and block-group check for a Cayley table")->fallthrough();
  analyze->add_option("cayley", file_a, "cayley v1 file")->required();
  analyze->callback([&] { action = [&] { return run_analyze(file_a); }; });

  auto* power = app.add_subcommand("power-group", "Build P(G) and check it is a block-group")->fallthrough();
  power->add_option("--group", group_spec, "cyclic:<m>, symmetric:<n> or file:<path>")->required();
  power->callback([&] { action = [&] { return run_power_group(group_spec); }; });

  auto* embed = app.add_subcommand("embed", "Verify the embedding A -> rho_A of P(G) into Hall relations")->fallthrough();
  embed->add_option("--group", group_spec, "cyclic:<m>, symmetric:<n> or file:<path>")->required();
  embed->add_option("--subset", subset, "Comma list of 1-based element indices; prints rho_A");
  embed->callback([&] { action = [&] { return run_embed(group_spec, subset); }; });

  auto* semi = app.add_subcommand("semidirect", "Verify R_n x| S_n maps onto H_n")->fallthrough();
  semi->add_option("--n", n, "Ground set size (1..3)")->required();
  semi->callback([&] { action = [&] { return run_semidirect(n); }; });

  auto* count = app.add_subcommand("count-hall", "Count Hall relations on n points")->fallthrough();
  count->add_option("--n", n, "Ground set size (1..5)")->required();
  count->add_option("--workers", workers, "Worker threads (default: HALLKIT_WORKERS or hardware)");
  count->callback([&] { action = [&] { return run_count_hall(n, resolve_workers(workers), !no_timing); }; });

  auto* campaign = app.add_subcommand("campaign", "Run every exhaustive check for n points")->fallthrough();
  campaign->add_option("--n", n, "Ground set size (1..3)")->required();
  campaign->callback([&] { action = [&] { return run_campaign(n); }; });

  auto* divide = app.add_subcommand("divide", "Bounded search for S as a quotient of a subsemigroup of T")->fallthrough();
  divide->add_option("S", file_a, "cayley v1 file")->required();
  divide->add_option("T", file_b, "cayley v1 file")->required();
  divide->add_option("--max-generators", bounds.max_generators, "Largest generating set tried (default 3)");
  divide->add_option("--max-target", bounds.max_target_size, "Largest |T| accepted (default 12)");
  divide->callback([&] { action = [&] { return run_divide(file_a, file_b, bounds); }; });

  CliOutcome outcome;
  auto usage_error = [&](const std::string& what, const std::string& command) {
    Report r;
    r.command = command.empty() ? "usage" : command;
    r.status = Status::error;
    r.message = what;
    outcome.report = r;
    outcome.exit_code = kExitUsage;
    outcome.out = render(r, pretty);
    outcome.err = what + "\n\n" + app.help();
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    usage_error(e.what(), "");
    return outcome;
  }

  const std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Report r = action();
    if (!no_timing) {
      r.results["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    outcome.exit_code = r.status == Status::pass ? kExitPass : kExitFail;
    outcome.out = render(r, pretty);
    outcome.report = std::move(r);
  } catch (const std::exception& e) {
    usage_error(e.what(), command);
  }
  return outcome;
}

}  // namespace hallkit
