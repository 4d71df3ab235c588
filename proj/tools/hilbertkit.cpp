#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilbertkit/jobspec.hpp"
#include "hilbertkit/report.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kCapExceeded = 3 };

struct Common {
  std::size_t trials = 5;
  bool trials_given = false;
  unsigned r_max = 30;
  unsigned deg_bound = 0;
  bool json = false;
  bool timing = false;
  std::uint32_t characteristic = 32003;
  bool char_given = false;
  std::uint64_t seed = 1;
};

hk::AnalyzeOptions analyze_options(const Common& c) {
  hk::AnalyzeOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  o.r_max = c.r_max;
  o.deg_bound = c.deg_bound;
  return o;
}

hk::Json document(const hk::RunMeta& meta, double seconds, bool timing) {
  hk::Json doc;
  doc["meta"] = hk::to_json(meta);
  if (timing) doc["meta"]["wall_time_seconds"] = seconds;
  return doc;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int report_exit(const std::vector<hk::IdealReport>& reps) {
  int code = kOk;
  for (const auto& r : reps) {
    for (const auto& e : r.errors) {
      if (e.kind == hk::Error::Kind::NotMPrimary || e.kind == hk::Error::Kind::Parse) return kInputError;
      if (e.kind == hk::Error::Kind::CapExceeded) code = kCapExceeded;
    }
    if (code == kOk)
      for (const auto& c : r.claims)
        if (c.status == hk::ClaimResult::Status::Violated) code = kMismatch;
  }
  return code;
}

int cmd_analyze(const Common& c, const std::string& path) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<hk::LoadedIdeal> loaded;
  hk::RunMeta meta{"analyze", c.seed, c.characteristic, c.trials, c.r_max};
  try {
    hk::JobSpec spec = hk::parse_input(buf.str(), c.characteristic);
    if (!c.char_given && spec.characteristic) meta.characteristic = *spec.characteristic;
    loaded = hk::instantiate(spec, meta.characteristic);
  } catch (const hk::Error& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kInputError;
  }
  std::vector<hk::IdealReport> reps;
  for (const auto& li : loaded) {
    std::vector<hk::NamedReduction> named;
    for (const auto& [n, J] : li.reductions) named.push_back({n, J});
    reps.push_back(hk::analyze_ideal(li.name, li.ideal, named, analyze_options(c)));
  }
  const double secs = elapsed(t0);
  if (c.json) {
    hk::Json doc = document(meta, secs, c.timing);
    doc["ideals"] = hk::Json::array();
    for (const auto& r : reps) doc["ideals"].push_back(hk::to_json(r));
    std::cout << hk::dump(doc);
  } else {
    std::cout << "hilbertkit " << hk::kVersion << " analyze " << path << " (char " << meta.characteristic << ", seed "
              << c.seed << ", trials " << c.trials << ", r_max " << c.r_max << ")\n";
    for (const auto& r : reps) std::cout << hk::render_table(r);
    std::cout << "wall time " << secs << " s\n";
  }
  return report_exit(reps);
}

int cmd_paper_examples(const Common& c, const std::vector<std::string>& only) {
  const auto t0 = std::chrono::steady_clock::now();
  hk::RunMeta meta{"paper-examples", c.seed, c.characteristic, c.trials, c.r_max};
  hk::Json out = hk::Json::array();
  bool all_pass = true, cap = false;
  for (const auto& ex : hk::builtin_examples()) {
    if (!only.empty() && std::find(only.begin(), only.end(), ex.name) == only.end()) continue;
    hk::Json block{{"name", ex.name}};
    if (ex.forbidden_char && *ex.forbidden_char == c.characteristic) {
      const std::string why = "characteristic \xE2\x89\xA0 " + std::to_string(*ex.forbidden_char) + " required";
      block["skipped"] = why;
      if (!c.json) std::cout << "SKIP " << ex.name << ": " << why << "\n";
      out.push_back(block);
      continue;
    }
    const auto ring = hk::make_ring(c.characteristic, ex.vars);
    const hk::Ideal I = hk::Ideal::parse(ring, ex.gens);
    std::vector<hk::NamedReduction> named;
    for (const auto& [n, g] : ex.named) named.push_back({n, hk::Ideal::parse(ring, g)});
    hk::AnalyzeOptions opt = analyze_options(c);
    if (!c.trials_given) opt.trials = ex.min_trials;
    const auto rep = hk::analyze_ideal(ex.name, I, named, opt);
    const auto rows = hk::check_example(ex, rep);
    cap |= rep.cap_exceeded();
    bool pass = true;
    for (const auto& r : rows) pass &= r.pass;
    all_pass &= pass;
    block["pass"] = pass;
    block["rows"] = hk::to_json(rows);
    block["report"] = hk::to_json(rep);
    out.push_back(block);
    if (!c.json) {
      std::cout << (pass ? "PASS " : "FAIL ") << ex.name << "\n";
      for (const auto& r : rows)
        std::cout << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.field << ": expected " << r.expected << ", got "
                  << r.got << "\n";
    }
  }
  const double secs = elapsed(t0);
  if (c.json) {
    hk::Json doc = document(meta, secs, c.timing);
    doc["examples"] = out;
    std::cout << hk::dump(doc);
  } else {
    std::cout << "wall time " << secs << " s\n";
  }
  if (!all_pass) return kMismatch;
  return cap ? kCapExceeded : kOk;
}

int cmd_search(const Common& c, hk::SearchOptions so, const std::vector<std::string>& claim_names,
               const std::string& repro_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& n : claim_names) {
    auto id = hk::parse_claim_id(n);
    if (!id) {
      std::cerr << "error: unknown claim '" << n << "'\n";
      return kInputError;
    }
    so.claims.push_back(*id);
  }
  so.seed = c.seed;
  so.analyze = analyze_options(c);
  if (!c.trials_given) so.analyze.trials = 3;
  hk::SearchSummary sum;
  try {
    sum = hk::run_search(so, c.characteristic);
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::vector<std::string> files;
  for (const auto& v : sum.violations) {
    std::filesystem::create_directories(repro_dir);
    const auto path = std::filesystem::path(repro_dir) /
                      ("violation-" + std::string(hk::to_string(v.result.id)) + "-seed" + std::to_string(c.seed) +
                       "-sample" + std::to_string(v.index) + ".hk");
    std::ofstream f(path);
    f << "# " << hk::to_string(v.result.id) << " violated: " << v.result.detail << "\n"
      << "# reproduce: hilbertkit analyze " << path.filename().string() << " --seed "
      << so.analyze.seed + 1000 * v.index << " --trials " << so.analyze.trials << "\n"
      << hk::search_input_text(v.ideal, c.characteristic);
    files.push_back(path.string());
  }
  const double secs = elapsed(t0);
  hk::RunMeta meta{"search", c.seed, c.characteristic, so.analyze.trials, c.r_max};
  if (c.json) {
    hk::Json doc = document(meta, secs, c.timing);
    doc["search"] = hk::to_json(sum);
    doc["search"]["parameters"] = {{"vars", so.vars}, {"max_deg", so.max_deg}, {"count", so.count}};
    doc["search"]["reproduction_files"] = files;
    std::cout << hk::dump(doc);
  } else {
    std::cout << "search: " << so.vars << " vars, max-deg " << so.max_deg << ", seed " << c.seed << "\n"
              << hk::render_table(sum);
    for (const auto& f : files) std::cout << "  reproduction file: " << f << "\n";
    std::cout << "wall time " << secs << " s\n";
  }
  return sum.violations.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients, reduction numbers and depth certificates for m-primary ideals"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--trials", c.trials, "random reductions sampled per ideal")
        ->envname("HILBERTKIT_TRIALS")
        ->check(CLI::Range(1, 1000));
    sub->add_option("--r-max", c.r_max, "largest reduction number tried")
        ->envname("HILBERTKIT_R_MAX")
        ->check(CLI::Range(0, 200));
    sub->add_option("--deg-bound", c.deg_bound, "degree bound of the integrality witness scan (0: order + 1)")
        ->envname("HILBERTKIT_DEG_BOUND")
        ->check(CLI::Range(0, 40));
    sub->add_option("--char", c.characteristic, "prime characteristic")->envname("HILBERTKIT_CHAR");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_flag("--json", c.json, "JSON output");
    sub->add_flag("--timing", c.timing, "include wall time in JSON metadata");
  };

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "analyse every ideal of an input file");
  analyze->add_option("FILE", path, "input file")->required();
  add_common(analyze);

  std::vector<std::string> only;
  auto* paper = app.add_subcommand("paper-examples", "run the built-in examples against their expected values");
  paper->add_option("--example", only, "restrict to the named examples");
  add_common(paper);

  hk::SearchOptions so;
  std::vector<std::string> claims;
  std::string repro_dir = ".";
  auto* search = app.add_subcommand("search", "evaluate claims on random ideals");
  search->add_option("--vars", so.vars, "number of variables")->check(CLI::Range(1, 3));
  search->add_option("--max-deg", so.max_deg, "largest generator degree")->check(CLI::Range(2, 12));
  search->add_option("--count", so.count, "number of samples")->check(CLI::Range(0, 100000));
  search->add_option("--claim", claims, "claim identifiers (default: all)");
  search->add_option("--repro-dir", repro_dir, "directory for reproduction files");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  for (auto* sub : {analyze, paper, search})
    if (sub->parsed()) {
      c.trials_given = sub->count("--trials") > 0 || std::getenv("HILBERTKIT_TRIALS");
      c.char_given = sub->count("--char") > 0 || std::getenv("HILBERTKIT_CHAR");
    }
  try {
    if (analyze->parsed()) return cmd_analyze(c, path);
    if (paper->parsed()) return cmd_paper_examples(c, only);
    if (search->parsed()) return cmd_search(c, so, claims, repro_dir);
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case hk::Error::Kind::CapExceeded: return kCapExceeded;
      case hk::Error::Kind::Parse:
      case hk::Error::Kind::NotMPrimary:
      case hk::Error::Kind::Precondition: return kInputError;
      case hk::Error::Kind::Structural: break;
    }
    return kInputError;
  }
  return kOk;
}
