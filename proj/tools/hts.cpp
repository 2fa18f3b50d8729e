#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hts/action.hpp"
#include "hts/base.hpp"
#include "hts/checks.hpp"
#include "hts/dual.hpp"
#include "hts/invariants.hpp"
#include "hts/limit.hpp"
#include "hts/parse.hpp"
#include "hts/report.hpp"
#include "hts/ring.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct Options {
  std::int64_t sigma = 0;
  std::int64_t d = 0;
  std::int64_t sigma_max = 0;
  std::int64_t d_max = 0;
  std::int64_t op = 0;
  std::string elem;
  std::string route = "direct";
  bool raw = false;
  bool json_out = false;
  bool csv_out = false;
  std::string out_path;
  std::string cache_path;
  unsigned jobs = 0;
};

hts::Limits limits_from_env() {
  hts::Limits lim;
  auto read = [](const char* name, std::int64_t& slot) {
    if (const char* v = std::getenv(name)) {
      try {
        slot = std::stoll(v);
      } catch (const std::exception&) {
        throw hts::ResourceLimitError(std::string(name) + " is not an integer: " + v);
      }
      if (slot <= 0) throw hts::ResourceLimitError(std::string(name) + " must be positive");
    }
  };
  read("HTS_MAX_D", lim.max_d);
  read("HTS_MAX_AMBIENT", lim.max_ambient);
  read("HTS_MAX_GENERATORS", lim.max_generators);
  return lim;
}

class Timer {
 public:
  double ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& opt, const std::string& text) {
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot write to " + opt.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

std::string plain_invariants(const hts::InvariantReport& r) {
  std::string text = "bidegree " + hts::to_string(r.bidegree) + "\n";
  text += "ambient_dim " + std::to_string(r.ambient_dim) + "\n";
  text += "invariant_dim " + std::to_string(r.invariant_dim) + "\n";
  for (const auto& p : r.invariant_basis) text += "  " + p.str() + "\n";
  return text;
}

int run_invariants(const Options& opt, const hts::Limits& lim) {
  const hts::Bidegree bd{opt.sigma, opt.d};
  Timer timer;

  std::optional<hts::ReportCache> cache;
  if (!opt.cache_path.empty()) cache.emplace(opt.cache_path);
  const std::string key = hts::cache_key("invariants", bd, lim);

  hts::json payload;
  if (cache) {
    if (auto hit = cache->lookup(key)) payload = std::move(*hit);
  }
  if (payload.is_null()) {
    const auto report = hts::invariant_subspace(bd, lim);
    payload = hts::invariants_json(report, timer.ms());
    if (cache) {
      cache->store(key, payload);
      cache->flush();
    }
  } else {
    payload["elapsed_ms"] = timer.ms();
  }

  if (opt.json_out) {
    emit(opt, payload.dump(2));
  } else {
    std::string text = "bidegree (" + std::to_string(opt.sigma) + "," + std::to_string(opt.d) +
                       ")\n";
    text += "ambient_dim " + payload["ambient_dim"].dump() + "\n";
    text += "invariant_dim " + payload["invariant_dim"].dump() + "\n";
    for (const auto& b : payload["invariant_basis"]) text += "  " + b.get<std::string>() + "\n";
    emit(opt, text);
  }
  return kExitOk;
}

int run_scan(const Options& opt, const hts::Limits& lim) {
  Timer timer;
  const unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto reports = hts::scan(opt.sigma_max, opt.d_max, lim, jobs);

  if (opt.json_out) {
    emit(opt, hts::scan_json(reports, timer.ms()).dump(2));
  } else if (opt.csv_out) {
    emit(opt, hts::scan_csv(reports));
  } else {
    std::string text;
    for (const auto& r : reports) {
      if (r.invariant_dim == 0) continue;
      text += hts::to_string(r.bidegree) + " dim " + std::to_string(r.invariant_dim) + ":";
      for (const auto& p : r.invariant_basis) text += " " + p.str();
      text += "\n";
    }
    if (text.empty()) text = "no nonzero invariant spaces in range\n";
    emit(opt, text);
  }
  return kExitOk;
}

int run_act(const Options& opt, const hts::Limits&) {
  const hts::RPoly p = hts::parse_poly(opt.elem);
  hts::RPoly result;
  if (opt.route == "coaction") {
    result = hts::sq_via_coaction(opt.op, p);
  } else if (opt.route == "direct") {
    result = hts::sq_n(opt.op, p);
  } else {
    throw CLI::ValidationError("--route", "must be 'direct' or 'coaction'");
  }
  emit(opt, result.str());
  return kExitOk;
}

int run_coact(const Options& opt, const hts::Limits&) {
  const hts::RPoly p = hts::parse_poly(opt.elem);
  std::string text;
  if (opt.raw) {
    for (const auto& m : p.terms()) {
      if (!m.is_unit() && m.factors().size() == 1 && m.factors()[0].e == 1) {
        for (const auto& t : hts::coaction_generator_raw(m.factors()[0].g))
          text += t.str() + "\n";
      } else {
        throw CLI::ValidationError("--raw", "expects a single generator like h[3,0]");
      }
    }
    if (text.empty()) text = "0\n";
  } else {
    text = hts::coaction(p).str() + "\n";
  }
  emit(opt, text);
  return kExitOk;
}

int run_limit_compare(const Options& opt, const hts::Limits& lim) {
  Timer timer;
  const hts::Bidegree bd{opt.sigma, opt.d};
  const auto verdict = hts::compare_with_closed_form(bd, lim);
  if (opt.json_out) {
    emit(opt, hts::compare_json(verdict, timer.ms()).dump(2));
  } else {
    emit(opt, verdict.str());
  }
  return verdict.iso() ? kExitOk : kExitVerificationFailure;
}

int run_verify(const Options& opt, const hts::Limits&) {
  const auto results = hts::builtin_checks();
  std::string text;
  std::size_t failures = 0;
  for (const auto& r : results) {
    text += (r.pass ? "PASS " : "FAIL ") + r.name;
    if (!r.pass && !r.detail.empty()) text += ": " + r.detail;
    text += "\n";
    if (!r.pass) ++failures;
  }
  text += std::to_string(results.size() - failures) + "/" + std::to_string(results.size()) +
          " checks passed\n";
  emit(opt, text);
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int run_graph(const Options& opt, const hts::Limits& lim) {
  // digraph of generators with one edge per nonzero Sq^{2^k}
  std::string dot = "digraph squares {\n  rankdir=LR;\n";
  const auto gens = hts::generators_up_to(opt.d_max);
  for (const auto g : gens) {
    const auto bd = hts::generator_degree(g);
    dot += "  \"" + hts::to_string(g) + "\" [label=\"" + hts::to_string(g) + "\\n(1," +
           std::to_string(bd.d) + ")\"];\n";
  }
  for (const auto g : gens) {
    for (int k = 0; k <= 62; ++k) {
      if (hts::pow2(k) > lim.max_d) break;
      const hts::RPoly image = hts::sq_pow2_on_generator(k, g);
      if (image.is_zero()) continue;
      for (const auto& m : image.terms())
        dot += "  \"" + hts::to_string(g) + "\" -> \"" + m.str() + "\" [label=\"" +
               std::to_string(k) + "\"];\n";
    }
  }
  dot += "}\n";
  emit(opt, dot);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of the truncated bigraded ring generated by h[t,s]"};
  app.require_subcommand(1);

  Options opt;

  auto add_output = [&](CLI::App* cmd, bool with_csv = false) {
    cmd->add_flag("--json", opt.json_out, "emit JSON");
    if (with_csv) cmd->add_flag("--csv", opt.csv_out, "emit CSV");
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
  };

  auto* inv = app.add_subcommand("invariants", "invariant subspace at one bidegree");
  inv->add_option("--sigma", opt.sigma, "cohomological degree")->required();
  inv->add_option("--d", opt.d, "internal degree")->required();
  inv->add_option("--cache", opt.cache_path, "JSON cache file");
  add_output(inv);

  auto* scan = app.add_subcommand("scan", "invariant subspaces over a bidegree range");
  scan->add_option("--sigma-max", opt.sigma_max, "largest sigma")->required();
  scan->add_option("--d-max", opt.d_max, "largest internal degree")->required();
  scan->add_option("--jobs", opt.jobs, "worker threads (default: hardware)");
  add_output(scan, /*with_csv=*/true);

  auto* act = app.add_subcommand("act", "apply a squaring operation to an element");
  act->add_option("--op", opt.op, "operation index n of Sq^n")->required();
  act->add_option("--elem", opt.elem, "element expression, e.g. \"h[2,0]*h[2,1]\"")->required();
  act->add_option("--route", opt.route, "'direct' (Cartan) or 'coaction'")
      ->check(CLI::IsMember({"direct", "coaction"}));
  add_output(act);

  auto* coact = app.add_subcommand("coact", "coaction of an element");
  coact->add_option("--elem", opt.elem, "element expression")->required();
  coact->add_flag("--raw", opt.raw, "per-generator structure terms before expansion");
  add_output(coact);

  auto* cmp = app.add_subcommand("limit-compare",
                                 "compare the closed-form basis against the limit");
  cmp->add_option("--sigma", opt.sigma, "cohomological degree")->required();
  cmp->add_option("--d", opt.d, "internal degree")->required();
  add_output(cmp);

  auto* verify = app.add_subcommand("verify", "run the built-in consistency checks");
  add_output(verify);

  auto* graph = app.add_subcommand("graph", "DOT graph of squaring operations on generators");
  graph->add_option("--d-max", opt.d_max, "largest generator degree")->required();
  add_output(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const hts::Limits lim = limits_from_env();
    if (inv->parsed()) return run_invariants(opt, lim);
    if (scan->parsed()) return run_scan(opt, lim);
    if (act->parsed()) return run_act(opt, lim);
    if (coact->parsed()) return run_coact(opt, lim);
    if (cmp->parsed()) return run_limit_compare(opt, lim);
    if (verify->parsed()) return run_verify(opt, lim);
    if (graph->parsed()) return run_graph(opt, lim);
  } catch (const hts::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hts::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const hts::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitOk;
}
