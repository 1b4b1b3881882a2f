#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mints/decoder.hpp"
#include "mints/json_io.hpp"
#include "mints/known_eps.hpp"
#include "mints/scheme.hpp"
#include "mints/search.hpp"
#include "mints/verify.hpp"

namespace mints::cli {

namespace {

struct UsageError : ConfigError {
  using ConfigError::ConfigError;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scheme load_scheme(const std::string& path) { return json_io::scheme_from_json(read_file(path)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

CostKind parse_cost_kind(const std::string& name) {
  const auto kind = cost_kind_from_name(name);
  if (!kind) throw UsageError("unknown cost kind: " + name + " (use total-max, grand-sum, max-entry)");
  return *kind;
}

SubsetMask parse_fake_list(const std::string& text, int n) {
  if (text.empty()) return 0;
  std::vector<int> mints;
  for (const std::string& part : split(text, ',')) {
    try {
      mints.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad mint index in fake list: '" + part + "'");
    }
  }
  return mints_to_mask(mints, n);
}

std::string scheme_lines(const Scheme& scheme, const std::string& pad) {
  std::ostringstream out;
  for (int j = 0; j < scheme.weighings(); ++j) {
    out << pad << "weighing " << (j + 1) << ":";
    for (int r = 0; r < scheme.mints(); ++r) out << " " << scheme.entry(j, r);
    out << "\n";
  }
  return out.str();
}

std::string human_search_result(const search::SearchResult& res) {
  std::ostringstream out;
  out << "status: " << search::search_status_name(res.status) << "\n";
  if (res.best_cost) out << "best cost: " << *res.best_cost << "\n";
  if (res.best_scheme) out << "scheme:\n" << scheme_lines(*res.best_scheme, "  ");
  out << "nodes: " << res.stats.nodes << "\n";
  out << "elapsed: " << res.stats.elapsed.count() << " ms\n";
  return out.str();
}

struct CommonFlags {
  std::string format = "json";
  bool table() const { return format == "table"; }
};

void add_format_flag(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
}

search::Budget make_budget(std::uint64_t node_limit, double time_limit_s) {
  search::Budget b;
  if (node_limit > 0) b.node_limit = node_limit;
  if (time_limit_s > 0)
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit_s * 1000.0));
  return b;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver, verifier and decoder for the ApSimon's Mints weighing puzzle"};
  app.require_subcommand(1);

  // verify
  std::string verify_scheme_path;
  CommonFlags verify_flags;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a scheme against the collinearity criterion");
  verify_cmd->add_option("--scheme", verify_scheme_path, "Scheme JSON file")->required();
  add_format_flag(verify_cmd, verify_flags);

  // search
  int search_mints = 0;
  std::string search_cost = "total-max";
  long long search_cap = 0;
  std::uint64_t search_nodes = 0;
  double search_time = 0;
  long long search_upper = 0;
  int search_threads = 1;
  std::string search_checkpoint, search_resume;
  double search_cp_interval = 60.0;
  CommonFlags search_flags;
  CLI::App* search_cmd = app.add_subcommand("search", "Find a minimum-cost feasible scheme");
  auto* search_mints_opt = search_cmd->add_option("--mints", search_mints, "Number of mints");
  auto* search_cost_opt = search_cmd->add_option("--cost", search_cost, "Cost kind: total-max, grand-sum, max-entry");
  auto* search_cap_opt = search_cmd->add_option("--cap", search_cap, "Per-mint coin cap");
  search_cmd->add_option("--node-limit", search_nodes, "Stop after this many search nodes");
  search_cmd->add_option("--time-limit", search_time, "Stop after this many seconds");
  search_cmd->add_option("--initial-upper-bound", search_upper, "Known cost upper bound");
  search_cmd->add_option("--threads", search_threads, "Worker threads");
  search_cmd->add_option("--checkpoint", search_checkpoint, "Write periodic checkpoints to this file");
  search_cmd->add_option("--checkpoint-interval", search_cp_interval, "Seconds between checkpoints");
  search_cmd->add_option("--resume", search_resume, "Resume from a checkpoint file");
  add_format_flag(search_cmd, search_flags);

  // capacity
  long long capacity_cap = 0;
  std::uint64_t capacity_nodes = 0;
  double capacity_time = 0;
  CommonFlags capacity_flags;
  CLI::App* capacity_cmd = app.add_subcommand("capacity", "Largest number of mints testable under a coin cap");
  capacity_cmd->add_option("--cap", capacity_cap, "Per-mint coin cap")->required();
  capacity_cmd->add_option("--node-limit", capacity_nodes, "Stop after this many search nodes");
  capacity_cmd->add_option("--time-limit", capacity_time, "Stop after this many seconds");
  add_format_flag(capacity_cmd, capacity_flags);

  // table
  int table_max = 0;
  std::string table_cost = "total-max";
  CommonFlags table_flags;
  CLI::App* table_cmd = app.add_subcommand("table", "Optimal costs for 1..N mints");
  table_cmd->add_option("--max-mints", table_max, "Largest number of mints")->required();
  table_cmd->add_option("--cost", table_cost, "Cost kind");
  add_format_flag(table_cmd, table_flags);

  // bounds
  int bounds_mints = 0;
  std::string bounds_witness;
  CommonFlags bounds_flags;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on the optimal cost");
  bounds_cmd->add_option("--mints", bounds_mints, "Number of mints")->required();
  bounds_cmd->add_option("--capacity-witness", bounds_witness, "C,M: a cap-C scheme for M mints is known");
  add_format_flag(bounds_cmd, bounds_flags);

  // simulate
  std::string sim_scheme_path, sim_weight = "1", sim_eps = "0", sim_fake;
  CommonFlags sim_flags;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Weighing totals for a hidden fake set");
  sim_cmd->add_option("--scheme", sim_scheme_path, "Scheme JSON file")->required();
  sim_cmd->add_option("--genuine-weight", sim_weight, "Genuine coin weight (rational)")->required();
  sim_cmd->add_option("--epsilon", sim_eps, "Relative fake deviation (rational)")->required();
  sim_cmd->add_option("--fake", sim_fake, "Fake mints, comma-separated 1-based indices");
  add_format_flag(sim_cmd, sim_flags);

  // decode
  std::string dec_scheme_path, dec_weight = "1", dec_observed;
  CommonFlags dec_flags;
  CLI::App* dec_cmd = app.add_subcommand("decode", "Recover the fake set from observed totals");
  dec_cmd->add_option("--scheme", dec_scheme_path, "Scheme JSON file")->required();
  dec_cmd->add_option("--genuine-weight", dec_weight, "Genuine coin weight (rational)")->required();
  dec_cmd->add_option("--observed", dec_observed, "Observed totals R,R")->required();
  add_format_flag(dec_cmd, dec_flags);

  // known-eps
  CLI::App* ke_cmd = app.add_subcommand("known-eps", "Known-deviation variant (injective subset sums)");
  ke_cmd->require_subcommand(1);
  std::string ke_verify_path;
  CommonFlags ke_verify_flags;
  CLI::App* ke_verify_cmd = ke_cmd->add_subcommand("verify", "Check injectivity over all subsets");
  ke_verify_cmd->add_option("--scheme", ke_verify_path, "Scheme JSON file")->required();
  add_format_flag(ke_verify_cmd, ke_verify_flags);

  int ke_mints = 0, ke_weighings = 2, ke_threads = 1;
  std::uint64_t ke_nodes = 0;
  double ke_time = 0;
  CommonFlags ke_search_flags;
  CLI::App* ke_search_cmd = ke_cmd->add_subcommand("search", "Minimum-cost injective scheme");
  ke_search_cmd->add_option("--mints", ke_mints, "Number of mints")->required();
  ke_search_cmd->add_option("--weighings", ke_weighings, "Number of weighings");
  ke_search_cmd->add_option("--node-limit", ke_nodes, "Stop after this many search nodes");
  ke_search_cmd->add_option("--time-limit", ke_time, "Stop after this many seconds");
  ke_search_cmd->add_option("--threads", ke_threads, "Worker threads");
  add_format_flag(ke_search_cmd, ke_search_flags);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      const Scheme scheme = load_scheme(verify_scheme_path);
      const FeasibilityReport report = verify_scheme(scheme);
      if (verify_flags.table()) {
        out << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
        if (report.witness) {
          const auto first = mask_to_mints(report.witness->first);
          const auto second = mask_to_mints(report.witness->second);
          out << "witness: {";
          for (std::size_t i = 0; i < first.size(); ++i) out << (i ? "," : "") << first[i];
          out << "} vs {";
          for (std::size_t i = 0; i < second.size(); ++i) out << (i ? "," : "") << second[i];
          out << "}\n";
        }
      } else {
        out << json_io::feasibility_to_json(report);
      }
      return 0;
    }

    if (search_cmd->parsed()) {
      search::SearchConfig config;
      std::optional<search::Checkpoint> resume;
      if (!search_resume.empty()) {
        resume = json_io::checkpoint_from_json(read_file(search_resume));
        config = resume->config;
        if (search_mints_opt->count() && search_mints != config.mints)
          throw UsageError("--mints disagrees with the resume checkpoint");
        if (search_cost_opt->count() && parse_cost_kind(search_cost) != config.cost_kind)
          throw UsageError("--cost disagrees with the resume checkpoint");
        if (search_cap_opt->count() && search_cap != config.cap.value_or(0))
          throw UsageError("--cap disagrees with the resume checkpoint");
      } else {
        if (!search_mints_opt->count()) throw UsageError("--mints is required (or --resume)");
        config.mints = search_mints;
        config.cost_kind = parse_cost_kind(search_cost);
        if (search_cap_opt->count()) config.cap = search_cap;
      }
      config.budget = make_budget(search_nodes, search_time);
      if (search_upper > 0) config.initial_upper_bound = search_upper;
      config.threads = search_threads;

      std::optional<search::CheckpointOptions> checkpointing;
      if (!search_checkpoint.empty()) {
        checkpointing = search::CheckpointOptions{
            search_checkpoint,
            std::chrono::seconds(static_cast<long long>(std::max(1.0, search_cp_interval)))};
      }
      const search::SearchResult res = search::search_optimal(config, checkpointing, resume);
      out << (search_flags.table() ? human_search_result(res)
                                   : json_io::search_result_to_json(res));
      return 0;
    }

    if (capacity_cmd->parsed()) {
      const search::CapacityResult res =
          search::capacity_max_mints(capacity_cap, make_budget(capacity_nodes, capacity_time));
      if (capacity_flags.table()) {
        out << "max mints: " << res.max_mints << (res.proven ? " (proven)" : " (unproven)") << "\n";
        if (res.witness) out << "witness:\n" << scheme_lines(*res.witness, "  ");
      } else {
        out << json_io::capacity_result_to_json(res);
      }
      return 0;
    }

    if (table_cmd->parsed()) {
      if (table_max < 1) throw UsageError("--max-mints must be positive");
      const CostKind kind = parse_cost_kind(table_cost);
      std::vector<long long> costs;
      for (int n = 1; n <= table_max; ++n) {
        search::SearchConfig config;
        config.mints = n;
        config.cost_kind = kind;
        const search::SearchResult res = search::search_optimal(config);
        costs.push_back(res.best_cost.value());
      }
      if (table_flags.table()) {
        out << "mints cost\n";
        for (int n = 1; n <= table_max; ++n) out << n << " " << costs[n - 1] << "\n";
      } else {
        std::ostringstream costs_json;
        costs_json << "[";
        for (std::size_t i = 0; i < costs.size(); ++i) costs_json << (i ? "," : "") << costs[i];
        costs_json << "]";
        out << "{\n  \"cost_kind\": \"" << cost_kind_name(kind) << "\",\n  \"costs\": "
            << costs_json.str() << "\n}\n";
      }
      return 0;
    }

    if (bounds_cmd->parsed()) {
      std::optional<CapacityWitness> witness;
      if (!bounds_witness.empty()) {
        const auto parts = split(bounds_witness, ',');
        if (parts.size() != 2) throw UsageError("--capacity-witness wants C,M");
        try {
          witness = CapacityWitness{std::stoll(parts[0]), std::stoi(parts[1])};
        } catch (const std::exception&) {
          throw UsageError("--capacity-witness wants C,M");
        }
      }
      const BoundsResult b = bounds(bounds_mints, witness);
      if (bounds_flags.table())
        out << "lower: " << b.lower << "\nupper: " << b.upper << "\n";
      else
        out << json_io::bounds_to_json(b);
      return 0;
    }

    if (sim_cmd->parsed()) {
      const Scheme scheme = load_scheme(sim_scheme_path);
      const SubsetMask fake = parse_fake_list(sim_fake, scheme.mints());
      const auto totals = decoder::simulate_weighings(scheme, Rational::parse(sim_weight),
                                                      Rational::parse(sim_eps), fake);
      if (sim_flags.table()) {
        out << "weighings:";
        for (const Rational& r : totals) out << " " << r.to_string();
        out << "\n";
      } else {
        out << json_io::weighings_to_json(totals);
      }
      return 0;
    }

    if (dec_cmd->parsed()) {
      const Scheme scheme = load_scheme(dec_scheme_path);
      const auto parts = split(dec_observed, ',');
      if (parts.size() != 2) throw UsageError("--observed wants two totals R,R");
      const std::vector<Rational> observed{Rational::parse(parts[0]), Rational::parse(parts[1])};
      const auto outcome = decoder::decode(scheme, Rational::parse(dec_weight), observed);
      if (dec_flags.table()) {
        using Kind = decoder::DecodeOutcome::Kind;
        if (outcome.kind == Kind::AllGenuine) {
          out << "all genuine\n";
        } else if (outcome.kind == Kind::FakeSet) {
          const auto mints = mask_to_mints(outcome.fake);
          out << "fake mints:";
          for (int m : mints) out << " " << m;
          out << "\n";
        } else {
          out << "inconsistent: " << outcome.reason << "\n";
        }
      } else {
        out << json_io::decode_outcome_to_json(outcome);
      }
      return outcome.kind == decoder::DecodeOutcome::Kind::Inconsistent ? 1 : 0;
    }

    if (ke_verify_cmd->parsed()) {
      const Scheme scheme = load_scheme(ke_verify_path);
      const FeasibilityReport report = known_eps::verify_injective(scheme);
      if (ke_verify_flags.table()) {
        out << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
      } else {
        out << json_io::feasibility_to_json(report);
      }
      return 0;
    }

    if (ke_search_cmd->parsed()) {
      const auto res = known_eps::search_known_eps(ke_mints, ke_weighings,
                                                   make_budget(ke_nodes, ke_time), ke_threads);
      out << (ke_search_flags.table() ? human_search_result(res)
                                      : json_io::search_result_to_json(res));
      return 0;
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mints::cli
