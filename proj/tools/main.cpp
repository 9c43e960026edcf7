// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "crisper/complexity.hpp"
#include "crisper/example.hpp"
#include "crisper/io.hpp"
#include "crisper/verify.hpp"

namespace {

using namespace crisper;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

std::string format2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", round_half_up_2(x));
  return buf;
}

std::string format_point(const std::vector<Real>& point) {
  std::string out = "(";
  for (size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(point[i]);
  }
  return out + ")";
}

CrispRuleBase mine(const FuzzyRuleBase& base, InferenceMode mode, Geometry geometry) {
  if (geometry == Geometry::kHyperrectangles) return mine_hyperrectangles(base, mode);
  return mode == InferenceMode::kSufficient ? mine_sufficient(base) : mine_additive(base);
}

int cmd_mine(const std::string& input, const std::string& mode_flag,
             const std::string& geometry_flag, const std::string& output) {
  const RuleBaseDocument doc = parse_rule_base(read_file(input));
  const InferenceMode mode = mode_flag.empty() ? doc.mode : mode_from_name(mode_flag);
  const Geometry geometry = geometry_from_name(geometry_flag);
  const CrispRuleBase crb = mine(doc.base, mode, geometry);
  write_file(output, serialize_crisp_base(crb));
  const double degree =
      degree_of_complexity(static_cast<std::int64_t>(crb.rules.size()), doc.base.rule_count());
  std::cout << doc.base.rule_count() << " fuzzy -> " << crb.rules.size()
            << " crisp, complexity " << format2(degree) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& fuzzy_path, const std::string& crisp_path, int grid,
               long long random_n, std::uint64_t seed) {
  const RuleBaseDocument doc = parse_rule_base(read_file(fuzzy_path));
  const CrispRuleBase crb = parse_crisp_base(read_file(crisp_path));
  VerificationReport rep;
  try {
    rep = grid > 0 ? verify_grid(doc.base, crb, grid)
                   : verify_random(doc.base, crb, random_n, seed);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::cout << "sampling: " << rep.sampling << "\n"
            << "samples tested: " << rep.samples_tested << "\n"
            << "mismatches: " << rep.mismatches.size() << "\n"
            << "agreement rate: " << rep.agreement_rate() << "\n";
  for (size_t i = 0; i < rep.mismatches.size() && i < 10; ++i) {
    const Mismatch& m = rep.mismatches[i];
    std::cout << "  mismatch at " << format_point(m.point) << ": fuzzy=" << m.fuzzy
              << " crisp=" << m.crisp << "\n";
  }
  return rep.mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_complexity(const std::string& input) {
  const RuleBaseDocument doc = parse_rule_base(read_file(input));
  const ComplexityReport rep = analyze(doc.base, doc.mode);
  std::cout << "mode: " << mode_name(doc.mode) << "\n"
            << "fuzzy rules: " << rep.fuzzy_rule_count << "\n"
            << "crisp rules (regions): " << rep.crisp_rule_count << "\n"
            << "crisp rules (boxes): " << rep.hyperrect_rule_count << "\n"
            << "sufficient upper bound: " << rep.sufficient_upper_bound << "\n"
            << "additive upper bound: " << rep.additive_upper_bound << "\n"
            << "degree of complexity: " << format2(rep.degree_of_complexity) << "\n";
  return kExitOk;
}

int cmd_boundary(const std::string& input, int resolution, const std::string& output,
                 bool use_crisp) {
  const RuleBaseDocument doc = parse_rule_base(read_file(input));
  if (doc.base.dim() != 2) {
    throw ParseError("boundary export requires exactly 2 features, got " +
                     std::to_string(doc.base.dim()));
  }
  const Box bounds = sampling_box(doc.base);
  BoundaryGrid grid;
  try {
    if (use_crisp) {
      const CrispRuleBase crb = mine(doc.base, doc.mode, Geometry::kCompatibleRegions);
      grid = export_decision_boundary(
          [&](std::span<const Real> x) { return classify_crisp(crb, x); }, bounds, resolution);
    } else if (doc.mode == InferenceMode::kSufficient) {
      grid = export_decision_boundary(
          [&](std::span<const Real> x) { return classify_sufficient(doc.base, x); }, bounds,
          resolution);
    } else {
      grid = export_decision_boundary(
          [&](std::span<const Real> x) { return classify_additive(doc.base, x); }, bounds,
          resolution);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  write_file(output, boundary_csv(grid));
  std::cout << "wrote " << resolution << "x" << resolution << " "
            << (use_crisp ? "crisp" : "fuzzy") << " boundary grid to " << output << "\n";
  return kExitOk;
}

int cmd_example(const std::string& directory) {
  const std::filesystem::path path =
      std::filesystem::path(directory) / "example_rule_base.json";
  write_file(path.string(), serialize_rule_base(example_document()));
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convert fuzzy rule-based classifiers into equivalent crisp rule bases"};
  app.require_subcommand(1);

  std::string input, output, fuzzy_path, crisp_path, mode_flag, geometry_flag = "regions";
  std::string directory = ".";
  int grid = 0, resolution = 200;
  long long random_n = 0;
  std::uint64_t seed = 0;
  bool use_crisp = false;

  CLI::App* mine_cmd = app.add_subcommand("mine", "Mine a crisp rule base from a fuzzy one");
  mine_cmd->add_option("input", input, "fuzzy rule-base file")->required();
  mine_cmd->add_option("--mode", mode_flag, "sufficient|additive (default: from file)");
  mine_cmd->add_option("--geometry", geometry_flag, "regions|boxes (default: regions)");
  mine_cmd->add_option("-o,--output", output, "crisp rule-base output file")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a crisp base against its source");
  verify_cmd->add_option("fuzzy", fuzzy_path, "fuzzy rule-base file")->required();
  verify_cmd->add_option("crisp", crisp_path, "crisp rule-base file")->required();
  CLI::Option* grid_opt = verify_cmd->add_option("--grid", grid, "grid points per dimension");
  CLI::Option* random_opt = verify_cmd->add_option("--random", random_n, "random sample count");
  verify_cmd->add_option("--seed", seed, "random seed (default 0)");
  grid_opt->excludes(random_opt);

  CLI::App* complexity_cmd = app.add_subcommand("complexity", "Report complexity metrics");
  complexity_cmd->add_option("input", input, "fuzzy rule-base file")->required();

  CLI::App* boundary_cmd =
      app.add_subcommand("boundary", "Export a 2-D decision-boundary grid as CSV");
  boundary_cmd->add_option("input", input, "fuzzy rule-base file")->required();
  boundary_cmd->add_option("--resolution", resolution, "grid points per axis (default 200)");
  boundary_cmd->add_option("-o,--output", output, "CSV output file")->required();
  boundary_cmd->add_flag("--crisp", use_crisp, "classify with the mined crisp base");

  CLI::App* example_cmd = app.add_subcommand("example", "Write the bundled example rule base");
  example_cmd->add_option("directory", directory, "output directory (default: .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*mine_cmd) return cmd_mine(input, mode_flag, geometry_flag, output);
    if (*verify_cmd) {
      if (grid <= 0 && random_n <= 0) {
        std::cerr << "error: pass --grid N or --random N\n";
        return kExitInputError;
      }
      return cmd_verify(fuzzy_path, crisp_path, grid, random_n, seed);
    }
    if (*complexity_cmd) return cmd_complexity(input);
    if (*boundary_cmd) return cmd_boundary(input, resolution, output, use_crisp);
    if (*example_cmd) return cmd_example(directory);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
