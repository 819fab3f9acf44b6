/**
 * @file tools/ssst_cli.cpp
 * @copyright Apache License 2.0
 *
 * Command line front end. Exit codes: 0 success / accept / yes,
 * 1 reject / no, 2 usage or parse error, 3 budget exceeded.
 */
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "ssst/counting.hpp"
#include "ssst/json_io.hpp"
#include "ssst/ssst.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ssst::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ssst::ParseError("cannot write '" + path + "'");
  out << text << '\n';
}

/// "7" or "5/2". A rational bound t on an integer makespan means floor(t).
ssst::Time parse_threshold(const std::string& text) {
  ssst::Rational value;
  try {
    const auto slash = text.find('/');
    if (text.empty() || text.find_first_not_of("0123456789/") != std::string::npos ||
        slash == 0 || slash + 1 == text.size() || text.find('/', slash + 1) != std::string::npos) {
      throw std::invalid_argument("bad digits");
    }
    if (slash == std::string::npos) {
      value = ssst::Rational(ssst::BigInt(text));
    } else {
      const ssst::BigInt den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      value = ssst::Rational(ssst::BigInt(text.substr(0, slash)), den);
    }
  } catch (const std::exception&) {
    throw ssst::ParseError("threshold '" + text + "' is not a non-negative integer or p/q");
  }
  const ssst::BigInt floor = boost::multiprecision::numerator(value) /
                             boost::multiprecision::denominator(value);
  if (floor > std::numeric_limits<ssst::Time>::max()) {
    return std::numeric_limits<ssst::Time>::max();
  }
  return static_cast<ssst::Time>(floor);
}

std::string rational_text(const ssst::Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scheduling solution space tree workbench"};
  app.require_subcommand(1);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "Worker threads for brute-force search")
      ->check(CLI::Range(1u, 1024u));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::uint64_t seed = 0;
  std::size_t gen_m = 2, gen_n = 1;
  ssst::Time pmax = 1;
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--m", gen_m, "Machines")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  gen->add_option("--n", gen_n, "Jobs")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
  gen->add_option("--pmax", pmax, "Largest processing time")->required()->check(CLI::PositiveNumber);

  // count
  auto* count = app.add_subcommand("count", "Tree sizes for m machines and n jobs");
  std::int64_t count_m = 2, count_n = 1;
  count->add_option("--m", count_m, "Machines")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  count->add_option("--n", count_n, "Jobs")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 16));

  // solve
  auto* solve = app.add_subcommand("solve", "Exact optimal makespan");
  std::string instance_path, method = "brute";
  bool longest_first = false;
  std::uint64_t leaf_cap = ssst::kDefaultLeafCap;
  solve->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  solve->add_option("--method", method, "brute or bnb")->check(CLI::IsMember({"brute", "bnb"}));
  solve->add_flag("--lpt", longest_first, "Branch and bound: branch on longest jobs first");
  solve->add_option("--leaf-cap", leaf_cap, "Brute force: largest m^n allowed");

  // prove
  auto* prove = app.add_subcommand("prove", "Optimal certificate for an instance");
  prove->add_option("instance", instance_path, "Instance file")->required();
  prove->add_option("--leaf-cap", leaf_cap, "Largest m^n allowed");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a certificate against a threshold");
  std::string cert_path, threshold_text;
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  verify->add_option("--threshold", threshold_text, "Integer or p/q")->required();

  // decide
  auto* decide = app.add_subcommand("decide", "Is there a schedule with C_max <= threshold?");
  std::string witness_path;
  decide->add_option("instance", instance_path, "Instance file")->required();
  decide->add_option("--threshold", threshold_text, "Integer or p/q")->required();
  decide->add_option("--witness", witness_path, "Also write the witness certificate here");
  decide->add_option("--leaf-cap", leaf_cap, "Largest m^n allowed");

  // ms
  auto* ms = app.add_subcommand("ms", "Two-machine Magic Scheduling");
  std::string strategy = "exhaustive";
  std::uint64_t trials = 10000;
  ms->add_option("instance", instance_path, "Instance file")->required();
  ms->add_option("--strategy", strategy, "exhaustive, certificate or random")
      ->check(CLI::IsMember({"exhaustive", "certificate", "random"}));
  ms->add_option("--cert", cert_path, "Certificate file for --strategy certificate");
  ms->add_option("--seed", seed, "Seed for --strategy random");
  ms->add_option("--trials", trials, "Samples for --strategy random");
  ms->add_option("--leaf-cap", leaf_cap, "Largest m^n allowed for exhaustive");

  // reductions
  auto* reduce_partition =
      app.add_subcommand("reduce-partition", "Partition instance -> two-machine instance");
  std::string partition_path;
  reduce_partition->add_option("partition", partition_path, "Partition file")->required();

  auto* reduce_mumpsp =
      app.add_subcommand("reduce-mumpsp", "Instance -> single-user multi-user instance");
  reduce_mumpsp->add_option("instance", instance_path, "Instance file")->required();

  auto* mumpsp_eval = app.add_subcommand("mumpsp-eval", "Per-user makespans of an ordered schedule");
  std::string mumpsp_path, ordered_path;
  mumpsp_eval->add_option("instance", mumpsp_path, "Multi-user instance file")->required();
  mumpsp_eval->add_option("schedule", ordered_path, "Ordered schedule file")->required();

  // dot
  auto* dot = app.add_subcommand("dot", "Render the tree to Graphviz DOT");
  std::size_t max_level = 0, node_cap = ssst::kDefaultDotNodeCap;
  dot->add_option("instance", instance_path, "Instance file")->required();
  dot->add_option("--max-level", max_level, "Deepest level to draw")->required();
  dot->add_option("--cap", node_cap, "Largest node count at the deepest level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const ssst::BruteForceOptions brute{leaf_cap, threads};

  try {
    if (*gen) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<ssst::Time> dist(1, pmax);
      std::vector<ssst::Time> jobs(gen_n);
      for (auto& p : jobs) p = dist(rng);
      std::cout << ssst::json_io::to_json(ssst::Instance(gen_m, std::move(jobs))) << '\n';
      return kOk;
    }

    if (*count) {
      const auto formula = ssst::count_essential_formula(count_m, count_n);
      const auto exact = ssst::count_essential_exact(count_m, count_n);
      std::cout << "m=" << count_m << " n=" << count_n << '\n'
                << "nodes=" << ssst::count_nodes(count_m, count_n) << '\n'
                << "schedules=" << ssst::count_schedules(count_m, count_n) << '\n'
                << "partial=" << ssst::count_partial(count_m, count_n) << '\n'
                << "essential_formula=" << formula << '\n'
                << "essential_exact=" << exact << '\n';
      if (formula != exact) {
        std::cout << "note: essential_formula (m^n - m) differs from the number of schedules "
                     "using every machine (essential_exact)\n";
      }
      return kOk;
    }

    if (*solve) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      const auto result = method == "bnb"
                              ? ssst::branch_and_bound(instance, {longest_first})
                              : ssst::brute_force_opt(instance, brute);
      std::cout << ssst::json_io::to_json(result) << '\n';
      return kOk;
    }

    if (*prove) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      std::cout << ssst::json_io::to_json(ssst::prove(instance, brute)) << '\n';
      return kOk;
    }

    if (*verify) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      const auto cert = ssst::json_io::parse_certificate(read_input(cert_path));
      const auto verdict = ssst::verify_certificate(instance, cert, parse_threshold(threshold_text));
      std::cout << ssst::describe(verdict) << '\n';
      return ssst::accepted(verdict) ? kOk : kNo;
    }

    if (*decide) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      const auto decision = ssst::decide(instance, parse_threshold(threshold_text), brute);
      if (!decision.yes) {
        std::cout << "no\n";
        return kNo;
      }
      const auto cert_json = ssst::json_io::to_json(*decision.witness);
      std::cout << "yes\n" << cert_json << '\n';
      if (!witness_path.empty()) write_file(witness_path, cert_json);
      return kOk;
    }

    if (*ms) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      ssst::SelectPartitionStrategy selection = ssst::ExhaustiveSelection{leaf_cap};
      if (strategy == "certificate") {
        if (cert_path.empty()) throw ssst::ParseError("--strategy certificate needs --cert");
        selection = ssst::CertificateSelection{
            ssst::json_io::parse_certificate(read_input(cert_path)).schedule};
      } else if (strategy == "random") {
        selection = ssst::RandomSelection{seed, trials};
      }
      const auto outcome = ssst::magic_schedule(instance, selection);
      if (!outcome.success()) {
        std::cout << "failure\n";
        return kNo;
      }
      std::cout << "success\n"
                << ssst::json_io::to_json(ssst::Certificate{
                       *outcome.partition, ssst::makespan(instance, *outcome.partition)})
                << '\n';
      return kOk;
    }

    if (*reduce_partition) {
      const auto pp = ssst::json_io::parse_partition(read_input(partition_path));
      const auto reduced = ssst::partition_to_2psp(pp);
      std::cout << ssst::json_io::to_json(reduced.instance) << '\n';
      std::cerr << "threshold=" << rational_text(reduced.threshold) << '\n';
      return kOk;
    }

    if (*reduce_mumpsp) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      std::cout << ssst::json_io::to_json(ssst::mpsp_to_mumpsp(instance)) << '\n';
      return kOk;
    }

    if (*mumpsp_eval) {
      const auto instance = ssst::json_io::parse_mumpsp(read_input(mumpsp_path));
      const auto schedule = ssst::json_io::parse_ordered_schedule(read_input(ordered_path));
      ssst::json_io::Json doc;
      doc["user_makespans"] = ssst::mumpsp_user_makespans(instance, schedule);
      std::cout << doc.dump() << '\n';
      return kOk;
    }

    if (*dot) {
      const auto instance = ssst::json_io::parse_instance(read_input(instance_path));
      std::cout << ssst::to_dot(instance, max_level, node_cap);
      return kOk;
    }
  } catch (const ssst::BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const ssst::TooLarge& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const ssst::Error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
