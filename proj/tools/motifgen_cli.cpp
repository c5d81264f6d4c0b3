#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "motifgen/common.hpp"
#include "motifgen/pipeline.hpp"

namespace mp = motifgen::pipeline;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct Options {
  mp::PipelineConfig cfg;
  bool no_lcc = false;
  std::optional<int> threads;

  std::vector<std::string> kinds{"none", "V", "T"};
  bool export_generated = false;
  std::optional<std::string> import_s1, import_s2, import_s3;
  std::string scheme;
  std::optional<std::string> views_dir;
  std::string generated;
};

void add_shared_options(CLI::App& app, Options& o) {
  auto& c = o.cfg;
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.add_option("-i,--input", c.input, "Edge list, one \"u v\" pair per line")->check(CLI::ExistingFile);
  app.add_option("-o,--out", c.output_dir, "Output directory")->capture_default_str();
  app.add_option("-s,--seed", c.seed, "Master seed (required by every stochastic stage)");
  app.add_flag("--no-lcc", o.no_lcc, "Keep the whole graph instead of its largest component");
  app.add_option("--threads", o.threads, "OpenMP thread count")->check(CLI::PositiveNumber);

  auto* walk = "Walks";
  app.add_option("-p,--return-p", c.walk.p, "Return parameter p")->group(walk)->capture_default_str();
  app.add_option("-q,--inout-q", c.walk.q, "In-out parameter q")->group(walk)->capture_default_str();
  app.add_option("--walk-length", c.walk.walk_length, "Nodes per walk")->group(walk)->capture_default_str();
  app.add_option("--train-walks", c.train_walks, "Walks sampled per view (0: >= 100|E| steps)")->group(walk)->capture_default_str();
  app.add_option("--gen-walks", c.gen_walks, "Walks generated per view (0: >= 100|E| steps)")->group(walk)->capture_default_str();
  app.add_option("--smoothing-grid", c.smoothing_grid, "Smoothing values tried in order")->group(walk)->capture_default_str();
  app.add_option("--smoothing", c.smoothing, "Fixed smoothing; skips the overlap search")->group(walk);
  app.add_option("--target-overlap", c.target_overlap, "Edge overlap that stops the smoothing search")->group(walk)->capture_default_str();

  auto* combine = "Combination";
  app.add_option("--p1", c.combine.p1, "Probability of drawing from S1")->group(combine)->capture_default_str();
  app.add_option("--p2", c.combine.p2, "Probability of drawing from S2")->group(combine)->capture_default_str();
  app.add_option("--p3", c.combine.p3, "Probability of drawing from S3")->group(combine)->capture_default_str();
  app.add_option("--ps", c.combine.ps, "Probability of max-score selection")->group(combine)->capture_default_str();

  auto* eval = "Evaluation";
  app.add_option("--test-fraction", c.test_fraction, "Fraction of motifs held out")->group(eval)->capture_default_str();
  app.add_option("--baseline-samples", c.baseline_samples, "Rewired graphs for the random baseline")->group(eval)->capture_default_str();
  app.add_option("--swap-attempts", c.swap_attempts, "Swap attempts per rewiring (default 10|E|)")->group(eval);
  app.add_option("--repeats", c.repeats, "Repetitions in `pipeline`")->group(eval)->capture_default_str();
}

std::string toml_value(const mp::json& v) { return v.dump(); }

/// Effective configuration in the format --config reads back. Numbers are
/// printed in round-trip form so a rerun sees identical values.
std::string config_toml(const Options& o, const CLI::App& sub) {
  const auto& c = o.cfg;
  std::ostringstream out;
  const auto line = [&out](const char* key, const mp::json& v) { out << key << " = " << toml_value(v) << '\n'; };
  line("input", c.input);
  line("out", c.output_dir);
  if (c.seed) line("seed", *c.seed);
  line("no-lcc", o.no_lcc);
  line("return-p", c.walk.p);
  line("inout-q", c.walk.q);
  line("walk-length", c.walk.walk_length);
  line("train-walks", c.train_walks);
  line("gen-walks", c.gen_walks);
  line("smoothing-grid", c.smoothing_grid);
  if (c.smoothing) line("smoothing", *c.smoothing);
  line("target-overlap", c.target_overlap);
  line("p1", c.combine.p1);
  line("p2", c.combine.p2);
  line("p3", c.combine.p3);
  line("ps", c.combine.ps);
  line("test-fraction", c.test_fraction);
  line("baseline-samples", c.baseline_samples);
  if (c.swap_attempts) line("swap-attempts", *c.swap_attempts);
  line("repeats", c.repeats);

  const auto& name = sub.get_name();
  std::ostringstream section;
  const auto opt = [&section](const char* key, const mp::json& v) { section << key << " = " << toml_value(v) << '\n'; };
  if (name == "walks") {
    opt("kinds", o.kinds);
    opt("export-generated", o.export_generated);
  } else if (name == "views") {
    if (o.import_s1) opt("import-s1", *o.import_s1);
    if (o.import_s2) opt("import-s2", *o.import_s2);
    if (o.import_s3) opt("import-s3", *o.import_s3);
  } else if (name == "generate") {
    opt("scheme", o.scheme);
    if (o.views_dir) opt("views-dir", *o.views_dir);
  } else if (name == "evaluate") {
    opt("generated", o.generated);
  }
  if (!section.str().empty()) out << "\n[" << name << "]\n" << section.str();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motif-preserving graph generation and evaluation"};
  app.set_version_flag("--version", std::string(MOTIFGEN_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  add_shared_options(app, o);

  auto* census = app.add_subcommand("census", "Motif counts, concentrations, random baseline and 4-cycles");
  auto* walks = app.add_subcommand("walks", "Sample and export biased random walks");
  walks->add_option("--kinds", o.kinds, "Bias kinds to export (none, V, T)")->delimiter(',')->capture_default_str();
  walks->add_flag("--export-generated", o.export_generated, "Also export walks drawn from the fitted model");
  auto* views = app.add_subcommand("views", "Build and persist the score matrices S1, S2, S3");
  views->add_option("--import-s1", o.import_s1, "Walk file replacing the generated walks of S1")->check(CLI::ExistingFile);
  views->add_option("--import-s2", o.import_s2, "Walk file replacing the generated walks of S2")->check(CLI::ExistingFile);
  views->add_option("--import-s3", o.import_s3, "Walk file replacing the generated walks of S3")->check(CLI::ExistingFile);
  auto* generate = app.add_subcommand("generate", "Assemble a graph with |E| edges from the views");
  generate->add_option("--scheme", o.scheme, "Combination scheme")
      ->required()
      ->check(CLI::IsMember({"avg", "mmgan", "netgan"}));
  generate->add_option("--views-dir", o.views_dir, "Directory holding s1/s2/s3.scores")->check(CLI::ExistingDirectory);
  auto* evaluate = app.add_subcommand("evaluate", "Compare a generated graph's motifs with the input");
  evaluate->add_option("-g,--generated", o.generated, "Generated edge list")->required()->check(CLI::ExistingFile);
  auto* predict = app.add_subcommand("predict", "Link and motif prediction on a held-out split");
  auto* pipeline = app.add_subcommand("pipeline", "All stages, repeated with derived seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  auto* sub = app.get_subcommands().front();
  o.cfg.largest_component = !o.no_lcc;
  if (o.threads) omp_set_num_threads(*o.threads);

  std::optional<mp::Manifest> manifest;
  try {
    if (o.cfg.input.empty()) throw motifgen::InputError("--input is required");
    o.cfg.validate();
    manifest.emplace(o.cfg.output_dir, sub->get_name(), o.cfg);
    manifest->write("config.toml", "config", config_toml(o, *sub));

    mp::json doc;
    if (sub == census) {
      doc = mp::run_census(o.cfg, *manifest);
    } else if (sub == walks) {
      std::vector<motifgen::BiasKind> kinds;
      for (const auto& k : o.kinds) kinds.push_back(motifgen::parse_bias_kind(k));
      doc = mp::run_walks(o.cfg, kinds, o.export_generated, *manifest);
    } else if (sub == views) {
      doc = mp::run_views(o.cfg, {o.import_s1, o.import_s2, o.import_s3}, *manifest);
    } else if (sub == generate) {
      doc = mp::run_generate(o.cfg, o.scheme, o.views_dir, *manifest);
    } else if (sub == evaluate) {
      doc = mp::run_evaluate(o.cfg, o.generated, *manifest);
    } else if (sub == predict) {
      doc = mp::run_predict(o.cfg, *manifest);
    } else if (sub == pipeline) {
      doc = mp::run_pipeline(o.cfg, *manifest);
    }
    manifest->finish();
    std::cout << doc.dump(2) << '\n';
    return 0;
  } catch (const motifgen::InputError& e) {
    std::cerr << "motifgen " << sub->get_name() << ": " << e.what() << '\n';
    if (manifest) manifest->finish(e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "motifgen " << sub->get_name() << ": internal error: " << e.what() << '\n';
    if (manifest) manifest->finish(e.what());
    return kExitInternal;
  }
}
