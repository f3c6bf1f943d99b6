// Copyright 2026 The hafair Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAFAIR_CLI_HPP_
#define HAFAIR_CLI_HPP_

// Command-line front end. JSON results go to `out`, summaries to `err`.
// Exit codes: 0 success, 1 no allocation / check failed, 2 invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hafair/bench.hpp"
#include "hafair/core.hpp"
#include "hafair/dipped.hpp"
#include "hafair/gen.hpp"
#include "hafair/io.hpp"
#include "hafair/oracle.hpp"
#include "hafair/peaked.hpp"
#include "hafair/refine.hpp"
#include "hafair/solve.hpp"
#include "hafair/welfare.hpp"

namespace hafair {

namespace detail {

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline Json status_json(const char* status) {
  Json j;
  j["status"] = status;
  return j;
}

inline Instance instance_with_axis(Instance inst, const std::string& axis_text) {
  if (axis_text.empty()) return inst;
  std::vector<HouseId> axis;
  std::stringstream ss(axis_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) axis.push_back(parse_house(tok, inst.num_houses()));
  return inst.with_axis(std::move(axis));
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hafair: envy-minimizing house allocation"};
  app.require_subcommand(1);

  std::string instance_path, alloc_path, measure_name = "envy", method = "oracle", mode = "randomized";
  std::string domain_name = "peaked", objective = "util", model = "uniform", out_path, out_dir, axis_text;
  std::string initial_name = "util";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> reps;
  std::optional<double> time_budget;
  bool axis_required = false;
  int q = 0, n = 0, m = 0, instances = 0, m_min = 0, m_max = 0;
  std::int64_t k = 0;

  auto* solve = app.add_subcommand("solve", "minimum-measure allocation");
  solve->add_option("--instance", instance_path, "instance JSON")->required();
  solve->add_option("--measure", measure_name, "envy|total|max");
  solve->add_option("--method", method, "oracle|peaked|dipped");
  solve->add_flag("--axis-required", axis_required, "fail when the instance has no axis");

  auto* refine_cmd = app.add_subcommand("refine", "lower the measure by k with at most q reallocations");
  refine_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  refine_cmd->add_option("--alloc", alloc_path, "allocation JSON")->required();
  refine_cmd->add_option("--q", q, "reallocation budget")->required();
  refine_cmd->add_option("--k", k, "required drop")->required();
  refine_cmd->add_option("--measure", measure_name, "envy|total|max");
  refine_cmd->add_option("--mode", mode, "randomized|exhaustive|oracle|sampled");
  refine_cmd->add_option("--seed", seed, "random seed");
  refine_cmd->add_option("--reps", reps, "number of colorings");
  refine_cmd->add_option("--time-budget", time_budget, "seconds");

  auto* pareto_cmd = app.add_subcommand("pareto", "minimum-envy Pareto-optimal allocation");
  pareto_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  pareto_cmd->add_option("--domain", domain_name, "peaked|dipped");

  auto* welfare_cmd = app.add_subcommand("welfare", "welfare-maximizing allocation");
  welfare_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  welfare_cmd->add_option("--objective", objective, "util|nash|egal");

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--model", model, "uniform|peaked|dipped");
  gen_cmd->add_option("--n", n, "agents")->required();
  gen_cmd->add_option("--m", m, "houses")->required();
  gen_cmd->add_option("--seed", seed, "random seed")->required();
  gen_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "experiment sweeps");
  bench_cmd->require_subcommand(1);
  auto* qsweep = bench_cmd->add_subcommand("qsweep", "envy drop and welfare loss versus q");
  qsweep->add_option("--n", n, "agents")->default_val(6);
  qsweep->add_option("--m-min", m_min, "smallest m")->default_val(6);
  qsweep->add_option("--m-max", m_max, "largest m")->default_val(11);
  qsweep->add_option("--instances", instances, "instances per m")->default_val(100);
  qsweep->add_option("--initial", initial_name, "util|nash|egal");
  qsweep->add_option("--measure", measure_name, "envy|total|max");
  qsweep->add_option("--seed", seed, "random seed")->required();
  qsweep->add_option("--out-dir", out_dir, "output directory")->required();
  auto* domain_sweep = bench_cmd->add_subcommand("domain", "welfare loss of the domain solvers");
  domain_sweep->add_option("--domain", domain_name, "peaked|dipped");
  domain_sweep->add_option("--n", n, "agents")->default_val(10);
  domain_sweep->add_option("--m-min", m_min, "smallest m")->default_val(10);
  domain_sweep->add_option("--m-max", m_max, "largest m")->default_val(25);
  domain_sweep->add_option("--instances", instances, "instances per m")->default_val(1000);
  domain_sweep->add_option("--seed", seed, "random seed")->required();
  domain_sweep->add_option("--out-dir", out_dir, "output directory")->required();

  auto* check_cmd = app.add_subcommand("check", "validate a domain restriction");
  check_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  check_cmd->add_option("--domain", domain_name, "peaked|dipped");
  check_cmd->add_option("--axis", axis_text, "comma-separated houses, e.g. h1,h2,h3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*solve) {
      const auto inst = load_instance(instance_path);
      const auto measure = parse_measure(measure_name);
      if (axis_required && !inst.has_axis()) throw ValidationError("instance has no axis");
      Allocation a;
      if (method == "oracle") {
        a = min_measure_exhaustive(inst, measure).witness;
      } else if (method == "peaked" || method == "dipped") {
        if (measure != Measure::envy) throw ValidationError("the " + method + " method only minimizes envy");
        a = method == "peaked" ? min_envy_single_peaked(inst) : min_envy_single_dipped_ties(inst);
      } else {
        throw ValidationError("unknown method '" + method + "'");
      }
      Json j;
      j["allocation"] = allocation_to_json(a);
      j["measure"] = to_string(measure);
      j["value"] = measure_value(inst, a, measure);
      detail::print_json(out, j);
      err << method << ": " << to_string(measure) << " = " << measure_value(inst, a, measure) << '\n';
      return 0;
    }
    if (*refine_cmd) {
      const auto inst = load_instance(instance_path);
      const auto base = allocation_from_json(read_json_file(alloc_path), inst);
      const auto measure = parse_measure(measure_name);
      RefineOptions opt;
      opt.mode = parse_refine_mode(mode);
      if (k > 0 && (opt.mode == RefineMode::randomized || opt.mode == RefineMode::sampled) && !seed)
        throw ValidationError("--seed is required for the " + mode + " mode");
      opt.seed = seed.value_or(0);
      opt.repetitions = reps;
      opt.time_budget_seconds = time_budget;
      const auto res = refine(inst, base, q, k, measure, opt);
      err << "colorings tried: " << res.colorings_tried << '\n';
      if (!res.allocation) {
        detail::print_json(out, detail::status_json("infeasible"));
        err << "infeasible\n";
        return 1;
      }
      Json j;
      j["allocation"] = allocation_to_json(*res.allocation);
      j["measure"] = to_string(measure);
      j["value"] = measure_value(inst, *res.allocation, measure);
      j["reallocated"] = res.allocation->distance(base);
      detail::print_json(out, j);
      return 0;
    }
    if (*pareto_cmd) {
      const auto inst = load_instance(instance_path);
      const auto d = parse_domain(domain_name);
      const auto decision = min_envy_pareto(inst, d);
      if (decision.exhaustive) err << "instance is not single-" << to_string(d) << "; decided by enumeration\n";
      const auto& a = decision.allocation;
      if (!a) {
        detail::print_json(out, detail::status_json("none exists"));
        err << "none exists\n";
        return 1;
      }
      Json j;
      j["allocation"] = allocation_to_json(*a);
      j["envy"] = measure_value(inst, *a, Measure::envy);
      detail::print_json(out, j);
      return 0;
    }
    if (*welfare_cmd) {
      const auto inst = load_instance(instance_path);
      const auto kind = parse_welfare_kind(objective);
      const auto a = max_welfare(inst, kind);
      Json j;
      j["objective"] = to_string(kind);
      j["allocation"] = allocation_to_json(a);
      j["value"] = welfare(inst, a, kind);
      if (kind == WelfareKind::nash) j["product"] = nash_product(inst, a).str();
      detail::print_json(out, j);
      return 0;
    }
    if (*gen_cmd) {
      const auto inst = generate(parse_model(model), n, m, *seed);
      const auto text = instance_to_json(inst).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
        err << "wrote " << out_path << '\n';
      }
      return 0;
    }
    if (*qsweep) {
      QSweepConfig cfg;
      cfg.n = n;
      cfg.m_values.clear();
      for (int x = m_min; x <= m_max; ++x) cfg.m_values.push_back(x);
      cfg.instances = instances;
      cfg.initial = parse_welfare_kind(initial_name);
      cfg.measure = parse_measure(measure_name);
      cfg.seed = *seed;
      const auto res = run_q_sweep(cfg);
      std::filesystem::create_directories(out_dir);
      const auto path = (std::filesystem::path(out_dir) /
                         ("qsweep_" + std::string(to_string(cfg.initial)) + "_" + to_string(cfg.measure) + ".csv"))
                            .string();
      write_text_file(path, to_csv(res.rows));
      err << "wrote " << path << '\n';
      return 0;
    }
    if (*domain_sweep) {
      DomainSweepConfig cfg;
      cfg.n = n;
      for (int x = m_min; x <= m_max; ++x) cfg.m_values.push_back(x);
      cfg.instances = instances;
      cfg.domain = parse_domain(domain_name);
      cfg.seed = *seed;
      const auto res = run_domain_sweep(cfg);
      std::filesystem::create_directories(out_dir);
      const auto path = (std::filesystem::path(out_dir) / ("domain_" + std::string(to_string(cfg.domain)) + ".csv"))
                            .string();
      write_text_file(path, to_csv(res.rows));
      err << "wrote " << path << '\n';
      return 0;
    }
    if (*check_cmd) {
      const auto inst = detail::instance_with_axis(load_instance(instance_path), axis_text);
      const auto d = parse_domain(domain_name);
      const auto verdict = d == Domain::peaked ? validate_single_peaked(inst) : validate_single_dipped(inst);
      Json j;
      j["domain"] = to_string(d);
      j["valid"] = verdict.ok;
      if (verdict.witness) {
        Json w;
        w["agent"] = agent_name(verdict.witness->agent);
        w["better"] = house_name(verdict.witness->better);
        w["worse"] = house_name(verdict.witness->worse);
        j["witness"] = w;
      }
      detail::print_json(out, j);
      return verdict.ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hafair

#endif  // HAFAIR_CLI_HPP_
