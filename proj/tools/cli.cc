//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "digicover/classifiers.h"
#include "digicover/harness.h"
#include "digicover/lifting.h"
#include "digicover/claim_suite.h"

namespace digicover::cli {

namespace {

struct InputError: std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string kind;
  int n = 0;
  int q = 0;
  long a = 0;
  long b = 0;
  int lmax = 0;
  int max_points = 0;
  int sample_points = 6;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string classes;
  std::string path;
  std::string start;
  bool exhaustive_sheets = false;
  bool full_fiber = false;
};

std::uint64_t default_seed() {
  if (const char *env = std::getenv("DIGICOVER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      throw InputError("DIGICOVER_SEED is not an unsigned integer");
    }
  }
  return 1;
}

void emit(const Config &cfg, const std::string &text, std::ostream &out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f)
    throw InputError("cannot write " + cfg.output);
  f << text;
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

DigitalMap load_map(const std::string &path) {
  if (path.empty())
    throw InputError("no input map file given");
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    const auto dir = std::filesystem::path(path).parent_path();
    return map_from_json(j, dir.empty() ? "." : dir.string());
  } catch (const std::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

// Resolves a point reference: a generator label first, else an index.
PointIndex resolve_point(const DigitalImage &image, const std::string &ref) {
  if (auto i = image.find_label(ref))
    return *i;
  try {
    std::size_t used = 0;
    int i = std::stoi(ref, &used);
    if (used == ref.size() && i >= 0 && i < image.size())
      return i;
  } catch (const std::exception &) {
  }
  throw InputError("unknown point '" + ref + "'");
}

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

PakOptions pak_options(const Config &cfg) {
  return PakOptions {cfg.exhaustive_sheets, cfg.full_fiber};
}

int cmd_gen(const Config &cfg, std::ostream &out) {
  nlohmann::json j;
  try {
    if (cfg.kind == "cycle")
      j = image_to_json(gen_cycle(cfg.n));
    else if (cfg.kind == "cycle-rect")
      j = image_to_json(gen_cycle_rect(cfg.n));
    else if (cfg.kind == "interval")
      j = image_to_json(gen_interval(cfg.a, cfg.b));
    else if (cfg.kind == "window")
      j = image_to_json(gen_window(cfg.q, cfg.n));
    else if (cfg.kind == "window-map")
      j = map_to_json(build_window_map(cfg.n, cfg.q));
    else if (cfg.kind == "doubling-map")
      j = map_to_json(build_doubling_map(cfg.n));
    else
      throw InputError("unknown generator '" + cfg.kind + "'");
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
  emit(cfg, dump(j), out);
  return kPass;
}

std::string describe(const DigitalMap &p, const ClassVerdict &v) {
  std::string s = std::string(class_name(v.kind)) + ": ";
  const Violation *w = v.violation();
  if (w == nullptr)
    return s + "holds";
  s += "fails at ";
  if (w->anchor == Violation::Anchor::kBase)
    s += "base " + p.target().label(w->at);
  else
    s += "source point " + p.source().label(w->at);
  switch (w->condition) {
  case Condition::kContinuity:
    s += ", continuity";
    break;
  case Condition::kSurjectivity:
    s += ", surjectivity";
    break;
  case Condition::kFirst:
    s += ", condition 1";
    break;
  case Condition::kSecond:
    s += ", condition 2";
    break;
  case Condition::kThird:
    s += ", condition 3";
    break;
  }
  s += ", points [";
  for (std::size_t i = 0; i < w->points.size(); ++i)
    s += (i ? "," : "") + p.source().label(w->points[i]);
  return s + "]";
}

int cmd_check(const Config &cfg, std::ostream &out) {
  std::vector<MorphismClass> classes;
  if (cfg.classes.empty()) {
    classes.assign(std::begin(kAllClasses), std::end(kAllClasses));
  } else {
    for (const auto &name: split_commas(cfg.classes)) {
      auto c = parse_class(name);
      if (!c)
        throw InputError("unknown class '" + name + "'");
      classes.push_back(*c);
    }
  }
  const DigitalMap p = load_map(cfg.input);

  bool all = true;
  auto verdicts = nlohmann::json::array();
  std::string text;
  for (MorphismClass c: classes) {
    ClassVerdict v = classify(p, c, pak_options(cfg));
    all = all && v.holds;
    verdicts.push_back(verdict_to_json(v));
    text += describe(p, v) + "\n";
  }
  emit(cfg, cfg.format == "text" ? text : dump({{"verdicts", verdicts}}),
       out);
  return all ? kPass : kPropertyFailure;
}

int cmd_lift(const Config &cfg, std::ostream &out) {
  const DigitalMap p = load_map(cfg.input);
  PointSeq base;
  for (const auto &ref: split_commas(cfg.path))
    base.push_back(resolve_point(p.target(), ref));
  if (base.empty())
    throw InputError("--path names no points");
  const PointIndex start = resolve_point(p.source(), cfg.start);

  std::vector<PathLift> lifts;
  try {
    lifts = enumerate_lifts(p, base, start);
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }

  if (cfg.format == "text") {
    std::string text = std::to_string(lifts.size()) + " lifts\n";
    for (const auto &l: lifts) {
      for (std::size_t i = 0; i < l.lift.size(); ++i)
        text += (i ? "," : "") + p.source().label(l.lift[i]);
      text += "\n";
    }
    emit(cfg, text, out);
  } else {
    auto arr = nlohmann::json::array();
    for (const auto &l: lifts)
      arr.push_back(lift_to_json(l));
    emit(cfg, dump({{"base_path", base},
                    {"start", start},
                    {"lift_count", lifts.size()},
                    {"lifts", arr}}),
         out);
  }
  return kPass;
}

HarnessOptions harness_options(const Config &cfg, int default_points) {
  HarnessOptions h;
  h.max_points = cfg.max_points > 0 ? cfg.max_points : default_points;
  h.sample_points = cfg.sample_points;
  h.samples = cfg.samples;
  h.seed = cfg.seed;
  h.pak = pak_options(cfg);
  if (h.max_points < 2 || h.sample_points < 1 || h.samples < 0)
    throw InputError("harness parameters out of range");
  return h;
}

int cmd_verify_claims(const Config &cfg, std::ostream &out) {
  SuiteOptions opts;
  if (cfg.n != 0)
    opts.ns = {cfg.n};
  if (cfg.q != 0)
    opts.qs = {cfg.q};
  for (int n: opts.ns)
    if (n < 4)
      throw InputError("--n must be at least 4");
  for (int q: opts.qs)
    if (q < 2)
      throw InputError("--q must be at least 2");
  opts.pak = pak_options(cfg);
  opts.harness = harness_options(cfg, 3);

  const SuiteReport report = run_claim_suite(opts);
  emit(cfg,
       cfg.format == "text" ? suite_to_text(report)
                            : dump(suite_to_json(report)),
       out);
  return report.reproduced() ? kPass : kPropertyFailure;
}

int cmd_harness(const Config &cfg, std::ostream &out) {
  const HarnessSummary summary =
      run_equivalence_harness(harness_options(cfg, 4));
  if (cfg.format == "text") {
    std::ostringstream os;
    os << summary.instances << " instances (" << summary.exhaustive_instances
       << " exhaustive, " << summary.sampled_instances << " sampled)\n"
       << summary.divergences.size() << " divergences\n"
       << summary.witnesses_replayed << " witnesses replayed, "
       << summary.replay_failures << " replay failures\n";
    for (const auto &d: summary.divergences)
      os << "divergence: " << d.relation << "\n";
    emit(cfg, os.str(), out);
  } else {
    emit(cfg, dump(harness_to_json(summary)), out);
  }
  return summary.divergences.empty() ? kPass : kPropertyFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app {"Digital covering-map verification toolkit", "digicover"};
  app.require_subcommand(1);
  Config cfg;
  try {
    cfg.seed = default_seed();
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto add_output = [&](CLI::App *sub) {
    sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_input = [&](CLI::App *sub) {
    sub->add_option("-i,--input,input", cfg.input, "Map file");
  };
  auto add_harness = [&](CLI::App *sub) {
    sub->add_option("--max-points", cfg.max_points,
                    "Exhaustive image size bound");
    sub->add_option("--sample-points", cfg.sample_points,
                    "Sampled image size bound");
    sub->add_option("--samples", cfg.samples, "Sampled instances");
    sub->add_option("--seed", cfg.seed, "Seed (default $DIGICOVER_SEED or 1)");
  };
  auto add_pak = [&](CLI::App *sub) {
    sub->add_flag("--exhaustive-sheets", cfg.exhaustive_sheets,
                  "Exhaustive pseudocovering sheet search");
    sub->add_flag("--full-fiber", cfg.full_fiber,
                  "Pseudocovering sheets must exhaust the fiber");
  };

  auto *gen = app.add_subcommand("gen", "Write a generated image or map");
  gen->add_option("kind", cfg.kind,
                  "cycle, cycle-rect, interval, window, window-map, "
                  "doubling-map")
      ->required();
  gen->add_option("--n", cfg.n);
  gen->add_option("--q", cfg.q);
  gen->add_option("--a", cfg.a, "Interval start");
  gen->add_option("--b", cfg.b, "Interval end");
  gen->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto *check = app.add_subcommand("check", "Classify a map");
  add_input(check);
  add_output(check);
  add_pak(check);
  check->add_option("--classes", cfg.classes,
                    "Comma list: covering,local-iso,pl-iso,wl-iso,"
                    "han-pseudo,pak-pseudo");

  auto *lift = app.add_subcommand("lift", "Enumerate lifts of a base path");
  add_input(lift);
  add_output(lift);
  lift->add_option("--path", cfg.path, "Comma list of target points")
      ->required();
  lift->add_option("--start", cfg.start, "Source start point")->required();

  auto *verify = app.add_subcommand("verify-paper",
                                    "Run the claim-reproduction suite");
  add_output(verify);
  add_harness(verify);
  add_pak(verify);
  verify->add_option("--n", cfg.n, "Single curve size instead of the grid");
  verify->add_option("--q", cfg.q, "Single window multiple instead of the grid");
  verify->add_option("--lmax", cfg.lmax, "Unused; lift bound is 2*max size");

  auto *harness = app.add_subcommand("harness", "Run the equivalence harness");
  add_output(harness);
  add_harness(harness);
  add_pak(harness);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (gen->parsed())
      return cmd_gen(cfg, out);
    if (check->parsed())
      return cmd_check(cfg, out);
    if (lift->parsed())
      return cmd_lift(cfg, out);
    if (verify->parsed())
      return cmd_verify_claims(cfg, out);
    return cmd_harness(cfg, out);
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

} // namespace digicover::cli
