// baqe: decide, eliminate and sample formulas over infinite atomic Boolean
// algebras with C_k, Fin and Res(n,r).
//
// Exit codes:
//   decide   0 all True, 1 some False
//   witness  0 found, 1 inconclusive
//   axioms   0 all True, 1 otherwise
//   qe, eval, defcheck  0
//   2 usage, parse or level error; 3 internal error

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "baqe/epset.hpp"
#include "baqe/harness.hpp"
#include "baqe/model.hpp"
#include "baqe/qe.hpp"
#include "baqe/syntax.hpp"

using namespace baqe;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string command;
  std::string theory = "T3";
  std::string format = "text";
  std::string input;
  std::string file;
  std::uint64_t seed = 0;
  std::uint32_t max_transient = 8;
  std::uint32_t max_period = 6;
  std::uint32_t bound = 8;
  std::size_t size = 7;
  std::size_t samples = 0;
  std::vector<std::string> assign;
  bool trace = false;
  bool timing = false;
  std::string target;
  std::string level;
  std::vector<std::string> allow;
  std::uint32_t max_c = 3;
  unsigned threads = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TheoryLevel theory(const Config& c) {
  auto t = parse_theory(c.theory);
  if (!t) throw UsageError("unknown theory '" + c.theory + "' (expected T1, T2 or T3)");
  return *t;
}

SearchBounds bounds(const Config& c) {
  if (c.max_period == 0) throw UsageError("--max-period must be at least 1");
  return {c.max_transient, c.max_period, SamplingMode::All};
}

std::vector<Formula> inputs(const Config& c) {
  if (!c.file.empty() && !c.input.empty()) throw UsageError("give a formula or --file, not both");
  if (!c.file.empty()) return parse_all(slurp(c.file));
  if (c.input.empty()) throw UsageError(c.command + ": no formula given");
  return {parse(c.input)};
}

// --assign accepts a file path or the bindings themselves.
Assignment assignment(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_assignment(slurp(arg));
  return parse_assignment(arg);
}

json trace_json(const std::vector<std::string>& lines) { return json(lines); }

class Report {
public:
  explicit Report(const Config& c) : c_(c), start_(std::chrono::steady_clock::now()) {}

  bool json_mode() const { return c_.format == "json"; }

  json header(const std::string& input) const {
    json j;
    j["schema"] = 1;
    j["command"] = c_.command;
    j["theory"] = c_.theory;
    j["input"] = input;
    return j;
  }

  void emit(json j) const {
    if (c_.timing) {
      j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    std::cout << j.dump() << "\n";
  }

  void text_timing() const {
    if (c_.timing && !json_mode()) {
      std::cout << "time: "
                << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count()
                << " ms\n";
    }
  }

private:
  const Config& c_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_decide(const Config& c) {
  Report r(c);
  Engine engine(theory(c));
  engine.set_tracing(c.trace);
  bool all = true;
  for (const auto& f : inputs(c)) {
    if (!f.is_sentence()) {
      throw UsageError("decide: '" + f.free_variables().front() + "' is free in " + print(f));
    }
    const Verdict v = engine.decide(f);
    all = all && v.value;
    const std::string verdict = v.value ? "True" : "False";
    if (r.json_mode()) {
      json j = r.header(print(f));
      j["verdict"] = verdict;
      if (c.trace) j["trace"] = trace_json(v.trace);
      r.emit(std::move(j));
    } else {
      for (const auto& line : v.trace) std::cout << line << "\n";
      std::cout << verdict << "\n";
    }
  }
  r.text_timing();
  return all ? 0 : 1;
}

int cmd_qe(const Config& c) {
  Report r(c);
  Engine engine(theory(c));
  engine.set_tracing(c.trace);
  for (const auto& f : inputs(c)) {
    const Formula out = engine.eliminate_all(f);
    if (r.json_mode()) {
      json j = r.header(print(f));
      j["result"] = print(out);
      if (c.trace) j["trace"] = trace_json(engine.trace());
      r.emit(std::move(j));
    } else {
      for (const auto& line : engine.trace()) std::cout << line << "\n";
      std::cout << print(out) << "\n";
    }
  }
  r.text_timing();
  return 0;
}

Truth evaluate(const Formula& f, const Assignment& sigma, const SearchBounds& b) {
  if (f.is_quantifier_free()) return truth_of(eval_qf(f, sigma));
  return eval_bounded(f, sigma, b);
}

int cmd_eval(const Config& c) {
  Report r(c);
  const SearchBounds b = bounds(c);
  std::vector<Assignment> sigmas;
  for (const auto& a : c.assign) sigmas.push_back(assignment(a));
  for (const auto& f : inputs(c)) {
    if (!admits(theory(c), f.level())) throw LevelError("formula uses " + to_string(f.level()) + " vocabulary, above theory " + c.theory);
    std::vector<Assignment> all = sigmas;
    EPSampler sampler(c.seed);
    for (std::size_t i = 0; i < c.samples; ++i) all.push_back(sampler.assignment(f.free_variables(), b));
    if (all.empty()) all.emplace_back();
    json results = json::array();
    for (const auto& sigma : all) {
      const Truth t = evaluate(f, sigma, b);
      if (r.json_mode()) {
        json e;
        std::string shown = to_string(sigma);
        if (!shown.empty()) shown.pop_back();
        e["assignment"] = shown;
        e["value"] = to_string(t);
        results.push_back(std::move(e));
      } else {
        std::cout << to_string(t) << "\n";
      }
    }
    if (r.json_mode()) {
      json j = r.header(print(f));
      j["result"] = std::move(results);
      r.emit(std::move(j));
    }
  }
  r.text_timing();
  return 0;
}

int cmd_witness(const Config& c) {
  Report r(c);
  const SearchBounds b = bounds(c);
  Assignment sigma;
  for (const auto& a : c.assign) {
    for (auto& [var, value] : assignment(a)) sigma.insert_or_assign(var, value);
  }
  bool all = true;
  for (const auto& f : inputs(c)) {
    if (f.kind() != Formula::Kind::Exists) throw UsageError("witness: expected a formula of the form E x ...");
    if (!admits(theory(c), f.level())) throw LevelError("formula uses " + to_string(f.level()) + " vocabulary, above theory " + c.theory);
    const auto w = witness_search(f, sigma, b);
    all = all && w.has_value();
    if (r.json_mode()) {
      json j = r.header(print(f));
      json res;
      res["variable"] = f.variable();
      res["found"] = w.has_value();
      if (w) res["witness"] = to_string(*w);
      j["result"] = std::move(res);
      r.emit(std::move(j));
    } else {
      std::cout << (w ? to_string(*w) : std::string("inconclusive")) << "\n";
    }
  }
  r.text_timing();
  return all ? 0 : 1;
}

int cmd_axioms(const Config& c) {
  Report r(c);
  if (c.bound < 1) throw UsageError("--bound must be at least 1");
  const auto axioms = generate_axioms({theory(c), c.bound});
  std::vector<char> verdicts(axioms.size(), 0);
  // Workers take interleaved slices; verdicts land by index.
  const unsigned n = std::max(1u, c.threads ? c.threads : std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&, w] {
        Engine engine(theory(c));
        for (std::size_t i = w; i < axioms.size(); i += n) verdicts[i] = engine.decide(axioms[i].sentence).value;
      });
    }
  }
  std::size_t failed = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (verdicts[i]) continue;
    ++failed;
    if (r.json_mode()) {
      failures.push_back({{"family", axioms[i].family}, {"sentence", print(axioms[i].sentence)}});
    } else {
      std::cout << "False " << axioms[i].family << ": " << print(axioms[i].sentence) << "\n";
    }
  }
  const std::string summary = std::to_string(axioms.size()) + " instances, " +
                              (failed ? std::to_string(failed) + " False" : std::string("all True"));
  if (r.json_mode()) {
    json j = r.header("bound " + std::to_string(c.bound));
    json res;
    res["instances"] = axioms.size();
    res["false"] = std::move(failures);
    j["verdict"] = failed ? "False" : "True";
    j["result"] = std::move(res);
    r.emit(std::move(j));
  } else {
    std::cout << summary << "\n";
  }
  r.text_timing();
  return failed ? 1 : 0;
}

int cmd_defcheck(const Config& c) {
  Report r(c);
  if (c.target.empty()) throw UsageError("defcheck: --target is required");
  const Formula target = parse(c.target);
  if (target.free_variables().size() != 1) throw UsageError("defcheck: target must have exactly one free variable");
  EnumerationSpec spec;
  spec.size = c.size;
  spec.max_c = c.max_c;
  spec.free_vars = target.free_variables();
  spec.bound_names.clear();
  for (const char* name : {"y", "z", "w", "u"}) {
    if (name != spec.free_vars.front() && spec.bound_names.size() < 3) spec.bound_names.emplace_back(name);
  }
  int level = 1;
  if (!c.level.empty()) {
    if (c.level != "L1" && c.level != "L2" && c.level != "L3") throw UsageError("unknown level '" + c.level + "'");
    level = c.level[1] - '0';
  }
  bool explicit_allow = false;
  spec.allow_fin = false;
  for (const auto& a : c.allow) {
    explicit_allow = true;
    if (a == "Fin") {
      spec.allow_fin = true;
      level = std::max(level, 2);
    } else if (a.rfind("Res", 0) == 0 && a.size() > 3 &&
               std::all_of(a.begin() + 3, a.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      const auto n = static_cast<std::uint32_t>(std::stoul(a.substr(3)));
      if (n == 0) throw UsageError("Res modulus must be positive");
      spec.res_moduli.push_back(n);
      level = 3;
    } else {
      throw UsageError("unknown --allow value '" + a + "' (expected Fin or Res<n>)");
    }
  }
  if (!explicit_allow) spec.allow_fin = level >= 2;
  spec.level = static_cast<Level>(level);
  const auto candidates = enumerate_formulas(spec);
  const DefcheckResult res = defcheck(target, candidates);
  if (r.json_mode()) {
    json j = r.header(print(target));
    json out;
    out["definable"] = res.definable;
    if (res.definition) out["definition"] = print(*res.definition);
    out["checked"] = res.checked;
    out["candidates"] = candidates.size();
    j["verdict"] = res.definable ? "DefinableBy" : "NotDefinable";
    j["result"] = std::move(out);
    r.emit(std::move(j));
  } else if (res.definable) {
    std::cout << "DefinableBy " << print(*res.definition) << " (" << res.checked << " candidates checked)\n";
  } else {
    std::cout << "NotDefinable (" << res.checked << " candidates checked)\n";
  }
  r.text_timing();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifier elimination for infinite atomic Boolean algebras with C_k, Fin and Res(n,r)"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--theory", c.theory, "T1, T2 or T3")->check(CLI::IsMember({"T1", "T2", "T3"}));
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", c.timing, "report elapsed time");
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("formula", c.input, "formula text");
    sub->add_option("--file", c.file, "read ';'-separated formulas from a file");
  };
  auto with_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-transient", c.max_transient, "largest threshold searched");
    sub->add_option("--max-period", c.max_period, "largest period searched");
    sub->add_option("--assign", c.assign, "assignment file or inline 'x = EP{...}' bindings");
  };

  auto* decide = app.add_subcommand("decide", "decide a sentence");
  common(decide);
  with_input(decide);
  decide->add_flag("--trace", c.trace, "print the elimination trace");

  auto* qe = app.add_subcommand("qe", "eliminate quantifiers");
  common(qe);
  with_input(qe);
  qe->add_flag("--trace", c.trace, "print the elimination trace");

  auto* eval = app.add_subcommand("eval", "evaluate under EPSet assignments");
  common(eval);
  with_input(eval);
  with_bounds(eval);
  eval->add_option("--seed", c.seed, "seed for sampled assignments");
  eval->add_option("--samples", c.samples, "number of sampled assignments");

  auto* witness = app.add_subcommand("witness", "search an EPSet witness for E x ...");
  common(witness);
  with_input(witness);
  with_bounds(witness);

  auto* axioms = app.add_subcommand("axioms", "decide every axiom instance up to a bound");
  common(axioms);
  axioms->add_option("--bound", c.bound, "bound on schema parameters");
  axioms->add_option("--threads", c.threads, "worker threads (0: hardware)");

  auto* defc = app.add_subcommand("defcheck", "search a definition of a target among enumerated formulas");
  common(defc);
  defc->add_option("--target", c.target, "formula with one free variable")->required();
  defc->add_option("--level", c.level, "L1, L2 or L3");
  defc->add_option("--allow", c.allow, "Fin or Res<n>, repeatable");
  defc->add_option("--size", c.size, "largest candidate size");
  defc->add_option("--max-c", c.max_c, "largest C index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  c.command = app.get_subcommands().front()->get_name();
  try {
    if (c.command == "decide") return cmd_decide(c);
    if (c.command == "qe") return cmd_qe(c);
    if (c.command == "eval") return cmd_eval(c);
    if (c.command == "witness") return cmd_witness(c);
    if (c.command == "axioms") return cmd_axioms(c);
    return cmd_defcheck(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const LevelError& e) {
    std::cerr << "level error: " << e.what() << "\n";
    return 2;
  } catch (const MissingVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
