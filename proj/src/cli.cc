// Copyright 2026 The Reachkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reachkit/cli.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reachkit/errors.h"
#include "reachkit/hardness.h"
#include "reachkit/instance_io.h"
#include "reachkit/setfun.h"
#include "reachkit/solvers.h"
#include "reachkit/synth.h"
#include "reachkit/sysmodel.h"

namespace reachkit {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string Num(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string SetText(const std::vector<int>& indices) {
  return ActuatedSet(indices).ToString();
}

std::string VecText(const Vector& v) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << Num(v(i));
  }
  out << ']';
  return out.str();
}

std::vector<double> ToStd(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// One report, two renderings: "key = value" lines for people and a single
// JSON object with the same keys for machines.
class Report {
 public:
  explicit Report(std::string verdict) : verdict_(std::move(verdict)) {
    json_["verdict"] = verdict_;
  }

  void Add(const std::string& key, OrderedJson value, std::string human) {
    json_[key] = std::move(value);
    lines_.emplace_back(key, std::move(human));
  }
  void Add(const std::string& key, double value) {
    Add(key, value, Num(value));
  }
  void Add(const std::string& key, int64_t value) {
    Add(key, value, std::to_string(value));
  }
  void Add(const std::string& key, int value) {
    Add(key, static_cast<int64_t>(value));
  }
  void Add(const std::string& key, bool value) {
    Add(key, value, value ? "true" : "false");
  }
  void Add(const std::string& key, const std::string& value) {
    Add(key, OrderedJson(value), value);
  }
  void AddSet(const std::string& key, const std::vector<int>& indices) {
    Add(key, OrderedJson(indices), SetText(indices));
  }
  void AddVector(const std::string& key, const Vector& v) {
    Add(key, OrderedJson(ToStd(v)), VecText(v));
  }
  // JSON-only payload (trajectories); rendered separately for people.
  void AddData(const std::string& key, OrderedJson value) {
    json_[key] = std::move(value);
  }

  void Print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << json_.dump(2) << '\n';
      return;
    }
    out << verdict_ << '\n';
    for (const auto& [key, text] : lines_) out << key << " = " << text << '\n';
  }

 private:
  std::string verdict_;
  OrderedJson json_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct CommonOptions {
  double tol_rank = Tolerance{}.rank_rel;
  double tol_feas = Tolerance{}.feas_rel;
  bool json = false;

  Tolerance tolerance() const {
    Tolerance tol{tol_rank, tol_feas};
    tol.Validate();
    return tol;
  }
};

void AddCommonFlags(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--tol-rank", common.tol_rank,
                  "relative singular-value threshold for numerical rank")
      ->capture_default_str();
  cmd->add_option("--tol-feas", common.tol_feas,
                  "relative residual threshold for feasibility")
      ->capture_default_str();
  cmd->add_flag("--json", common.json, "machine-readable output");
}

int ExactCapFromEnv() {
  const char* raw = std::getenv("REACHKIT_MAX_EXACT_N");
  if (raw == nullptr || *raw == '\0') return kDefaultExactCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > 64) {
    throw InputError(std::string("REACHKIT_MAX_EXACT_N must be an integer in "
                                 "0..64, got \"") + raw + "\"");
  }
  return static_cast<int>(value);
}

const LinearSystem& RequireSystem(const InstanceFile& file) {
  if (!file.system) throw InputError("instance file has no system section");
  return *file.system;
}

Matrix RandomZeroOne(int rows, int cols, uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw InputError("--random needs positive dimensions");
  }
  std::mt19937_64 engine(seed);
  Matrix u(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) u(r, c) = static_cast<double>(engine() >> 63);
  }
  return u;
}

struct SourceOptions {
  std::string u_path;
  std::vector<int> random_dims;
  uint64_t seed = 0;
  int d = 0;
  double delta = 0.0;

  Matrix LoadU() const {
    if (!u_path.empty() && !random_dims.empty()) {
      throw InputError("give either --U or --random, not both");
    }
    if (!u_path.empty()) return LoadMatrix(u_path);
    if (random_dims.size() != 2) {
      throw InputError("need --U FILE or --random M L");
    }
    return RandomZeroOne(random_dims[0], random_dims[1], seed);
  }
};

void AddSourceFlags(CLI::App* cmd, SourceOptions& source) {
  cmd->add_option("--U", source.u_path, "matrix file holding U");
  cmd->add_option("--random", source.random_dims,
                  "random 0/1 U with M rows and L columns")
      ->expected(2);
  cmd->add_option("--seed", source.seed, "seed for --random")
      ->capture_default_str();
  cmd->add_option("--d", source.d, "stacking depth d >= 1")->required();
  cmd->add_option("--delta", source.delta, "residual budget of the source")
      ->capture_default_str();
}

int CheckFeasibleCommand(const std::string& path, const std::vector<int>& nodes,
                         const CommonOptions& common, std::ostream& out) {
  const InstanceFile file = LoadInstance(path);
  const LinearSystem& sys = RequireSystem(file);
  const ActuatedSet s(nodes);
  s.RequireWithin(sys.n());
  const FeasibilityReport r = IsFeasible(sys, s, common.tolerance());

  Report report(r.feasible ? "feasible" : "infeasible");
  report.AddSet("S", s.indices());
  report.Add("feasible", r.feasible);
  report.Add("residual_sq", r.residual_sq);
  report.Add("rank", r.rank);
  report.Add("n", sys.n());
  report.Print(out, common.json);
  return r.feasible ? kExitOk : kExitNegative;
}

int SolveCommand(const std::string& path, const std::string& method,
                 std::optional<int> budget, std::optional<int> max_iters,
                 const CommonOptions& common, std::ostream& out) {
  const InstanceFile file = LoadInstance(path);
  const LinearSystem& sys = RequireSystem(file);
  const Tolerance tol = common.tolerance();

  SolveResult result;
  if (method == "exact") {
    ExactOptions options;
    options.budget = budget;
    options.max_n = ExactCapFromEnv();
    result = ExactMinReach(sys, tol, options);
  } else {
    result = GreedyMinReach(sys, tol, max_iters);
  }

  Report report(result.feasible ? "feasible" : "infeasible");
  report.Add("method", method);
  report.AddSet("S", result.set.indices());
  report.Add("cardinality", result.cardinality);
  report.Add("residual_sq", result.residual_sq);
  report.Add("feasible", result.feasible);
  report.Add("optimal", result.optimal);
  report.Add("nodes_explored", result.nodes_explored);
  report.Print(out, common.json);
  return result.feasible ? kExitOk : kExitNegative;
}

int VarSelCommand(const std::string& path, int cap,
                  const CommonOptions& common, std::ostream& out) {
  const InstanceFile file = LoadInstance(path);
  if (!file.varsel) throw InputError(path + ": no varsel section");
  const VarSelResult r = VarSelExact(*file.varsel, common.tolerance(), cap);

  Report report("solved");
  report.AddSet("support", r.support);
  report.Add("norm0", r.norm0);
  report.Add("residual", r.residual);
  report.AddVector("y", r.y);
  report.Print(out, common.json);
  return kExitOk;
}

int GenHardCommand(const SourceOptions& source, const std::string& out_path,
                   const CommonOptions& common, std::ostream& out,
                   std::ostream& err) {
  if (source.d < 1) throw InputError("--d must be at least 1");
  const HardInstance inst = Generate(source.LoadU(), source.d, source.delta);
  const InstanceFile file = ToInstanceFile(inst);

  Report report("generated");
  report.Add("m", inst.dims.m);
  report.Add("l", inst.dims.l);
  report.Add("d", inst.dims.d);
  report.Add("n", inst.dims.n);
  report.Add("out", out_path.empty() ? std::string("-") : out_path);
  if (out_path.empty()) {
    out << SerializeInstance(file);
    report.Print(err, common.json);
  } else {
    SaveInstance(file, out_path);
    report.Print(out, common.json);
  }
  return kExitOk;
}

int CheckSupermodularCommand(const std::string& path, int cap,
                             const CommonOptions& common, std::ostream& out) {
  const InstanceFile file = LoadInstance(path);
  if (!file.setfun) throw InputError(path + ": no setfun section");
  const ColumnSelectionFunction fn(file.setfun->v, file.setfun->m,
                                   file.setfun->c, common.tolerance());
  const SetFunctionReport r = CheckSupermodular(fn, cap);

  Report report(r.supermodular ? "supermodular" : "not supermodular");
  report.Add("ground_size", fn.ground_size());
  report.Add("exponent", fn.exponent());
  report.Add("monotone_nonincreasing", r.monotone_nonincreasing);
  report.Add("supermodular", r.supermodular);
  if (r.violation) {
    const SupermodularityViolation& v = *r.violation;
    OrderedJson j;
    j["A"] = v.a;
    j["A_prime"] = v.a_prime;
    j["x"] = v.x;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    report.Add("violation", j,
               "A = " + SetText(v.a) + ", A' = " + SetText(v.a_prime) +
                   ", x = " + std::to_string(v.x) + ", lhs = " + Num(v.lhs) +
                   ", rhs = " + Num(v.rhs));
  } else {
    report.Add("violation", nullptr, "none");
  }
  report.Print(out, common.json);
  return r.supermodular ? kExitOk : kExitNegative;
}

int SynthesizeCommand(const std::string& path, const std::vector<int>& nodes,
                      int grid, const CommonOptions& common,
                      std::ostream& out) {
  const InstanceFile file = LoadInstance(path);
  const LinearSystem& sys = RequireSystem(file);
  const ActuatedSet s(nodes);
  s.RequireWithin(sys.n());
  const SynthesisResult r = MinEnergyTransfer(sys, s, grid, common.tolerance());

  Report report(r.feasible ? "synthesized" : "infeasible");
  report.AddSet("S", s.indices());
  report.Add("grid_intervals", grid);
  report.Add("feasible", r.feasible);
  report.Add("terminal_error", r.terminal_error);
  report.Add("gramian_rank", r.gramian_rank);
  report.Add("energy", r.energy);
  report.Add("predicted_energy", r.predicted_energy);

  OrderedJson u = OrderedJson::array();
  OrderedJson x = OrderedJson::array();
  for (Eigen::Index j = 0; j < r.inputs.cols(); ++j) {
    u.push_back(ToStd(r.inputs.col(j)));
    x.push_back(ToStd(r.states.col(j)));
  }
  report.AddData("grid", r.grid);
  report.AddData("u", std::move(u));
  report.AddData("x", std::move(x));
  report.Print(out, common.json);

  if (!common.json) {
    out << "# t";
    for (int i = 1; i <= sys.m(); ++i) out << " u" << i;
    for (int i = 1; i <= sys.n(); ++i) out << " x" << i;
    out << '\n';
    for (size_t j = 0; j < r.grid.size(); ++j) {
      out << Num(r.grid[j]);
      for (Eigen::Index i = 0; i < r.inputs.rows(); ++i) {
        out << ' ' << Num(r.inputs(i, j));
      }
      for (Eigen::Index i = 0; i < r.states.rows(); ++i) {
        out << ' ' << Num(r.states(i, j));
      }
      out << '\n';
    }
  }
  return r.feasible ? kExitOk : kExitNegative;
}

// generate -> exact variable selection -> forward map -> exact minimal
// reachability -> extraction -> verification.
int RoundtripCommand(const SourceOptions& source, std::optional<int> budget,
                     const CommonOptions& common, std::ostream& out) {
  if (source.d < 1) throw InputError("--d must be at least 1");
  const Tolerance tol = common.tolerance();
  const HardInstance inst = Generate(source.LoadU(), source.d, source.delta);

  VarSelInstance exact_source = inst.source;
  exact_source.delta = 0.0;
  const VarSelResult planted = VarSelExact(exact_source, tol);
  const ActuatedSet forward = ForwardMap(inst, planted.y, tol);

  ExactOptions options;
  options.budget = budget.value_or(planted.norm0);
  options.max_n = ExactCapFromEnv();
  const SolveResult exact = ExactMinReach(inst.sys, tol, options);
  const ExtractionResult extracted =
      ExtractSolution(inst, exact.set, inst.sys.x1, tol);

  int extracted_norm0 = 0;
  for (Eigen::Index i = 0; i < extracted.y.size(); ++i) {
    if (extracted.y(i) != 0.0) ++extracted_norm0;
  }
  const double miss = std::sqrt(extracted.target_residual_sq);
  const bool verified = exact.cardinality <= planted.norm0 &&
                        extracted_norm0 <= exact.cardinality &&
                        miss <= inst.source.delta + 1e-6;

  Report report(verified ? "verified" : "failed");
  report.Add("m", inst.dims.m);
  report.Add("l", inst.dims.l);
  report.Add("d", inst.dims.d);
  report.Add("n", inst.dims.n);
  report.AddSet("varsel_support", planted.support);
  report.Add("varsel_norm0", planted.norm0);
  report.AddSet("forward_S", forward.indices());
  report.AddSet("exact_S", exact.set.indices());
  report.Add("exact_cardinality", exact.cardinality);
  report.Add("block_kappa", extracted.block.kappa);
  report.AddVector("extracted_y", extracted.y);
  report.Add("extracted_norm0", extracted_norm0);
  report.Add("extracted_miss", miss);
  report.Add("verified", verified);
  report.Print(out, common.json);
  return verified ? kExitOk : kExitNegative;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Minimal-reachability actuator selection toolkit"};
  app.name("reachkit");
  app.require_subcommand(1);

  CommonOptions common;
  std::string path;
  std::vector<int> actuate;
  std::optional<int> budget;
  std::optional<int> max_iters;
  std::string method = "exact";
  int cap = kDefaultBruteForceCap;
  int varsel_cap = kDefaultVarSelCap;
  int grid = kDefaultGridIntervals;
  std::string out_path;
  SourceOptions source;

  auto with_file = [&](CLI::App* cmd) {
    cmd->add_option("file", path, "instance file")->required();
    AddCommonFlags(cmd, common);
    return cmd;
  };
  auto with_actuate = [&](CLI::App* cmd) {
    cmd->add_option("--actuate", actuate, "1-based actuated nodes, e.g. 1,3")
        ->delimiter(',');
    return cmd;
  };

  CLI::App* check_feasible = with_actuate(with_file(app.add_subcommand(
      "check-feasible", "decide whether actuating S makes x0 -> x1 feasible")));

  auto add_solve_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "largest cardinality the exact solver "
                                        "tries");
    cmd->add_option("--max-iters", max_iters, "greedy iteration limit");
  };
  CLI::App* solve = with_file(
      app.add_subcommand("solve", "minimum-cardinality actuated set"));
  solve->add_option("--method", method, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  add_solve_flags(solve);
  CLI::App* solve_exact = with_file(
      app.add_subcommand("solve-exact", "same as solve --method exact"));
  add_solve_flags(solve_exact);
  CLI::App* solve_greedy = with_file(
      app.add_subcommand("solve-greedy", "same as solve --method greedy"));
  add_solve_flags(solve_greedy);

  CLI::App* varsel = with_file(app.add_subcommand(
      "varsel", "sparsest y with |U y - z| <= delta (brute force)"));
  varsel->add_option("--cap", varsel_cap, "largest l to enumerate")
      ->capture_default_str();

  CLI::App* gen_hard = app.add_subcommand(
      "gen-hard", "write a reachability instance built from U");
  AddSourceFlags(gen_hard, source);
  gen_hard->add_option("--out", out_path, "output file (default: stdout)");
  AddCommonFlags(gen_hard, common);

  CLI::App* check_super = with_file(app.add_subcommand(
      "check-supermodular", "exhaustive supermodularity check of setfun"));
  check_super->add_option("--cap", cap, "largest ground set to enumerate")
      ->capture_default_str();

  CLI::App* synthesize = with_actuate(with_file(app.add_subcommand(
      "synthesize", "minimum-energy input and simulated trajectory")));
  synthesize->add_option("--grid", grid, "number of grid intervals N")
      ->capture_default_str();

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "gen-hard -> solve -> extract -> verify in one shot");
  AddSourceFlags(roundtrip, source);
  roundtrip->add_option("--budget", budget,
                        "exact solver budget (default: planted |y|_0)");
  AddCommonFlags(roundtrip, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (check_feasible->parsed()) {
      return CheckFeasibleCommand(path, actuate, common, out);
    }
    if (solve->parsed()) {
      return SolveCommand(path, method, budget, max_iters, common, out);
    }
    if (solve_exact->parsed()) {
      return SolveCommand(path, "exact", budget, max_iters, common, out);
    }
    if (solve_greedy->parsed()) {
      return SolveCommand(path, "greedy", budget, max_iters, common, out);
    }
    if (varsel->parsed()) return VarSelCommand(path, varsel_cap, common, out);
    if (gen_hard->parsed()) {
      return GenHardCommand(source, out_path, common, out, err);
    }
    if (check_super->parsed()) {
      return CheckSupermodularCommand(path, cap, common, out);
    }
    if (synthesize->parsed()) {
      return SynthesizeCommand(path, actuate, grid, common, out);
    }
    if (roundtrip->parsed()) {
      return RoundtripCommand(source, budget, common, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitNegative;
  } catch (const ReductionIntegrityError& e) {
    err << "reduction integrity failure: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace reachkit
