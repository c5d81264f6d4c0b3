#include "motifgen/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "motifgen/rng.hpp"
#include "motifgen/score_matrix.hpp"

namespace motifgen::pipeline {

namespace fs = std::filesystem;

namespace {

constexpr std::array<BiasKind, 3> kViewKinds{BiasKind::none, BiasKind::toward_v, BiasKind::toward_t};
constexpr std::array<const char*, 3> kViewNames{"s1", "s2", "s3"};

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
  return out;
}

// ---------------------------------------------------------------------------

void PipelineConfig::validate() const {
  if (input.empty()) throw InputError("an input edge list is required");
  walk.validate();
  CombineConfig probe = combine;
  probe.target_edges = 1;
  probe.validate();
  if (smoothing_grid.empty() && !smoothing) throw InputError("smoothing grid must not be empty");
  for (const double d : smoothing_grid) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw InputError("smoothing values must be finite and >= 0");
  }
  if (smoothing && !(*smoothing >= 0.0 && std::isfinite(*smoothing))) throw InputError("smoothing must be finite and >= 0");
  if (!(target_overlap >= 0.0 && target_overlap <= 1.0)) throw InputError("target overlap must lie in [0, 1]");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw InputError("test fraction must lie in (0, 1)");
  if (baseline_samples == 0) throw InputError("baseline samples must be at least 1");
  if (repeats == 0) throw InputError("repeats must be at least 1");
}

std::uint64_t PipelineConfig::require_seed() const {
  if (!seed) throw InputError("a seed is required");
  return *seed;
}

json PipelineConfig::to_json() const {
  json doc;
  doc["input"] = input;
  doc["seed"] = seed ? json(*seed) : json(nullptr);
  doc["largest_component"] = largest_component;
  doc["walk"] = {{"p", walk.p},
                 {"q", walk.q},
                 {"length", walk.walk_length},
                 {"train_walks", train_walks},
                 {"gen_walks", gen_walks},
                 {"smoothing_grid", smoothing_grid},
                 {"smoothing", optional_json(smoothing)},
                 {"target_overlap", target_overlap}};
  doc["combine"] = {{"p1", combine.p1}, {"p2", combine.p2}, {"p3", combine.p3}, {"ps", combine.ps}};
  doc["eval"] = {{"test_fraction", test_fraction},
                 {"baseline_samples", baseline_samples},
                 {"swap_attempts", swap_attempts ? json(*swap_attempts) : json(nullptr)},
                 {"repeats", repeats}};
  return doc;
}

// ---------------------------------------------------------------------------

Manifest::Manifest(fs::path dir, std::string command, const PipelineConfig& cfg) : dir_(std::move(dir)) {
  const auto config = cfg.to_json();
  doc_["command"] = std::move(command);
  doc_["version"] = MOTIFGEN_VERSION;
  doc_["seed"] = config["seed"];
  doc_["config_hash"] = hex64(fnv1a(config.dump()));
  doc_["config"] = config;
  doc_["artifacts"] = json::array();
  doc_["notes"] = json::object();
}

void Manifest::write(const std::string& relative, const std::string& kind, const std::string& content) {
  const fs::path path = dir_ / relative;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
  }
  json entry = {{"path", relative}, {"kind", kind}, {"bytes", content.size()}, {"fnv1a", hex64(fnv1a(content))}};
  auto& artifacts = doc_["artifacts"];
  for (auto& existing : artifacts) {
    if (existing["path"] == relative) {
      existing = std::move(entry);
      return;
    }
  }
  artifacts.push_back(std::move(entry));
}

void Manifest::note(const std::string& key, json value) { doc_["notes"][key] = std::move(value); }

void Manifest::finish(const std::optional<std::string>& error) {
  if (error) {
    doc_["status"] = "failed";
    doc_["error"] = *error;
    for (auto& a : doc_["artifacts"]) a["partial"] = true;
  } else {
    doc_["status"] = "complete";
  }
  fs::create_directories(dir_);
  std::ofstream out(dir_ / "manifest.json", std::ios::binary | std::ios::trunc);
  out << dump(doc_);
}

// ---------------------------------------------------------------------------

LoadedGraph load_input(const std::string& path, bool largest_component) {
  auto parsed = read_edge_list_file(path);
  LoadedGraph out;
  out.raw_nodes = parsed.graph.node_count();
  out.raw_edges = parsed.graph.edge_count();
  out.dropped = parsed.dropped();
  if (parsed.graph.node_count() == 0) throw InputError(path + ": no edges");
  if (largest_component) {
    auto lcc = largest_connected_component(parsed.graph);
    out.ids = parsed.ids.restrict_to(lcc.parent_ids);
    out.graph = std::move(lcc.graph);
  } else {
    out.graph = std::move(parsed.graph);
    out.ids = std::move(parsed.ids);
  }
  return out;
}

namespace {

json input_json(const LoadedGraph& in) {
  return {{"raw_nodes", in.raw_nodes},
          {"raw_edges", in.raw_edges},
          {"dropped_lines", in.dropped},
          {"nodes", in.graph.node_count()},
          {"edges", in.graph.edge_count()}};
}

struct Prepared {
  EdgeMotifCounts counts;
  MotifCensus census;
  ViewBudget budget;
  SmoothingChoice smoothing;
};

Prepared prepare(const Graph& g, const PipelineConfig& cfg, std::uint64_t seed) {
  if (!is_connected(g)) throw InputError("graph is not connected; walk views need a connected graph");
  if (g.edge_count() < 2) throw InputError("graph needs at least two edges");
  Prepared p;
  p.counts = edge_participation(g);
  p.census = census_from_participation(g, p.counts);
  p.budget = default_budget(g, cfg.walk);
  if (cfg.train_walks) p.budget.train_walks = cfg.train_walks;
  if (cfg.gen_walks) p.budget.gen_walks = cfg.gen_walks;
  if (cfg.smoothing) {
    p.smoothing.smoothing = *cfg.smoothing;
  } else {
    p.smoothing = select_smoothing(g, cfg.walk, p.budget, cfg.smoothing_grid, cfg.target_overlap, seed);
  }
  return p;
}

json smoothing_json(const SmoothingChoice& c, bool fixed) {
  json trials = json::array();
  for (const auto& t : c.trials) trials.push_back({{"smoothing", t.smoothing}, {"overlap", t.overlap}});
  return {{"smoothing", c.smoothing},
          {"fixed", fixed},
          {"overlap", c.overlap},
          {"reached_target", c.reached_target},
          {"trials", std::move(trials)}};
}

struct ViewBuild {
  ViewSet views;
  std::array<WalkSet, 3> train_walks;
};

/// Same chain as build_view, keeping the training walks when asked.
ViewBuild build_views(const Graph& g, const Prepared& p, const PipelineConfig& cfg, std::uint64_t seed,
                      bool keep_walks) {
  ViewBuild out;
  std::array<ScoreMatrix, 3> s;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto weights = motif_biased_weights(p.counts, p.census, kViewKinds[i]);
    auto train = sample_walks(g, weights, cfg.walk, p.budget.train_walks, seed);
    const auto model = MarkovWalkModel::fit(train, g, p.smoothing.smoothing);
    s[i] = score_matrix(generate_walks(model, p.budget.gen_walks, cfg.walk.walk_length, seed), g.node_count());
    if (keep_walks) out.train_walks[i] = std::move(train);
  }
  out.views = ViewSet{std::move(s[0]), std::move(s[1]), std::move(s[2])};
  return out;
}

std::string scores_text(const ScoreMatrix& s, const NodeIdMap& ids) {
  std::ostringstream out;
  write_scores(out, s, ids);
  return out.str();
}

std::string graph_text(const Graph& g, const NodeIdMap& ids) {
  std::ostringstream out;
  write_edge_list(out, g, ids);
  return out.str();
}

ScoreMatrix read_scores_file(const fs::path& path, const NodeIdMap& ids) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_scores(in, ids);
}

/// p1 S1 + p2 S2 + p3 S3.
ScoreMatrix mix_scores(const ViewSet& v, const CombineConfig& c) {
  std::vector<ScoreEntry> all;
  const std::array<std::pair<const ScoreMatrix*, double>, 3> parts{{{&v.s1, c.p1}, {&v.s2, c.p2}, {&v.s3, c.p3}}};
  for (const auto& [s, w] : parts) {
    if (w == 0.0) continue;
    for (auto e : s->entries()) {
      e.score *= w;
      all.push_back(e);
    }
  }
  return ScoreMatrix::from_entries(v.n(), std::move(all));
}

Graph assemble(const std::string& scheme, const ViewSet& views, const PipelineConfig& cfg, std::size_t m,
               std::uint64_t seed) {
  const auto by_score = [&](const ScoreMatrix& s) {
    if (s.nnz() < m) {
      throw std::runtime_error(scheme + ": view support has " + std::to_string(s.nnz()) + " pairs, fewer than the " +
                               std::to_string(m) + " edges required");
    }
    return sample_edges_by_score(s, m, seed);
  };
  if (scheme == "avg") return by_score(average_scores(views));
  if (scheme == "netgan") return by_score(views.s1);
  if (scheme == "mmgan") {
    CombineConfig c = cfg.combine;
    c.target_edges = m;
    return mmgan_assemble(views, c, seed);
  }
  throw InputError("unknown scheme '" + scheme + "' (expected avg, mmgan or netgan)");
}

json metrics_json(std::span<const double> pos, std::span<const double> neg) {
  if (pos.empty() || neg.empty()) return nullptr;
  const auto r = rank_metrics(pos, neg);
  return {{"auc", r.auc}, {"ap", r.ap}};
}

json predict_json(const Graph& g, const PipelineConfig& cfg, std::uint64_t seed) {
  const auto split = split_holdout(g, cfg.test_fraction, seed);
  json doc;
  doc["split"] = {{"test_motifs", split.test_motifs.size()},
                  {"test_non_motifs", split.test_non_motifs.size()},
                  {"test_edges", split.test_edges.size()},
                  {"test_non_edges", split.test_non_edges.size()},
                  {"requested_removals", split.requested_removals},
                  {"warning", split.warning ? json(*split.warning) : json(nullptr)}};
  const auto p = prepare(split.train, cfg, seed);
  const auto views = build_views(split.train, p, cfg, seed, false).views;
  doc["smoothing"] = smoothing_json(p.smoothing, cfg.smoothing.has_value());

  const std::array<std::pair<const char*, ScoreMatrix>, 3> methods{
      {{"netgan", views.s1}, {"mmgan_avg", average_scores(views)}, {"mmgan", mix_scores(views, cfg.combine)}}};
  for (const auto& [name, s] : methods) {
    const auto link_pos = score_edges(s, split.test_edges);
    const auto link_neg = score_edges(s, split.test_non_edges);
    const auto motif_pos = score_motifs(s, split.test_motifs);
    const auto motif_neg = score_triples(s, split.test_non_motifs);
    doc["methods"][name] = {{"link", metrics_json(link_pos, link_neg)}, {"motif", metrics_json(motif_pos, motif_neg)}};
  }
  return doc;
}

}  // namespace

json census_json(const Graph& g, const PipelineConfig& cfg) {
  const auto census = census3(g);
  const std::size_t swaps = cfg.swap_attempts.value_or(10 * g.edge_count());
  const auto baseline = random_baseline(g, cfg.baseline_samples, swaps, cfg.require_seed());
  return {{"nodes", g.node_count()},
          {"edges", g.edge_count()},
          {"count_V", census.count_v},
          {"count_T", census.count_t},
          {"conc_V", census.conc_v()},
          {"conc_T", census.conc_t()},
          {"R_V", baseline.r_v},
          {"R_T", baseline.r_t},
          {"baseline_samples", cfg.baseline_samples},
          {"swap_attempts", swaps},
          {"four_cycles", count_four_cycles(g)}};
}

json report_json(const MotifReport& r, Count input_cycles, Count generated_cycles) {
  json doc;
  doc["motif_counts"] = {{"input", {{"V", r.input.count_v}, {"T", r.input.count_t}}},
                         {"generated", {{"V", r.generated.count_v}, {"T", r.generated.count_t}}}};
  doc["normalized_counts"] = {{"V", optional_json(r.normalized_v)}, {"T", optional_json(r.normalized_t)}};
  doc["concentrations"] = {{"input", {{"V", r.input.conc_v()}, {"T", r.input.conc_t()}}},
                           {"generated", {{"V", r.generated.conc_v()}, {"T", r.generated.conc_t()}}}};
  doc["kl"] = r.kl;
  doc["link"] = nullptr;
  doc["motif"] = nullptr;
  doc["four_cycle_normalized"] =
      input_cycles ? json(static_cast<double>(generated_cycles) / static_cast<double>(input_cycles)) : json(nullptr);
  return doc;
}

// ---------------------------------------------------------------------------

json run_census(const PipelineConfig& cfg, Manifest& manifest) {
  const auto in = load_input(cfg.input, cfg.largest_component);
  auto doc = census_json(in.graph, cfg);
  doc["input"] = input_json(in);
  manifest.write("census.json", "census", dump(doc));
  return doc;
}

json run_walks(const PipelineConfig& cfg, const std::vector<BiasKind>& kinds, bool export_generated,
               Manifest& manifest) {
  const auto seed = cfg.require_seed();
  const auto in = load_input(cfg.input, cfg.largest_component);
  const auto p = prepare(in.graph, cfg, seed);
  json doc;
  doc["input"] = input_json(in);
  doc["smoothing"] = smoothing_json(p.smoothing, cfg.smoothing.has_value());
  doc["train_walks"] = p.budget.train_walks;
  doc["gen_walks"] = p.budget.gen_walks;
  for (const auto kind : kinds) {
    const std::string name(to_string(kind));
    const auto weights = motif_biased_weights(p.counts, p.census, kind);
    const auto train = sample_walks(in.graph, weights, cfg.walk, p.budget.train_walks, seed);
    std::ostringstream text;
    write_walks(text, train, in.ids);
    manifest.write("walks_" + name + ".txt", "walks", text.str());
    doc["beta"][name] = weights.beta;
    if (export_generated) {
      const auto model = MarkovWalkModel::fit(train, in.graph, p.smoothing.smoothing);
      std::ostringstream gen;
      write_walks(gen, generate_walks(model, p.budget.gen_walks, cfg.walk.walk_length, seed), in.ids);
      manifest.write("generated_walks_" + name + ".txt", "walks", gen.str());
    }
  }
  manifest.write("walks.json", "report", dump(doc));
  return doc;
}

json run_views(const PipelineConfig& cfg, const ViewImports& imports, Manifest& manifest) {
  const auto seed = cfg.require_seed();
  const auto in = load_input(cfg.input, cfg.largest_component);
  const std::array<const std::optional<std::string>*, 3> imported{&imports.s1, &imports.s2, &imports.s3};
  const bool all_imported = imports.s1 && imports.s2 && imports.s3;

  json doc;
  doc["input"] = input_json(in);
  std::array<ScoreMatrix, 3> s;
  if (!all_imported) {
    const auto p = prepare(in.graph, cfg, seed);
    doc["smoothing"] = smoothing_json(p.smoothing, cfg.smoothing.has_value());
    doc["train_walks"] = p.budget.train_walks;
    doc["gen_walks"] = p.budget.gen_walks;
    auto built = build_views(in.graph, p, cfg, seed, false).views;
    s = {std::move(built.s1), std::move(built.s2), std::move(built.s3)};
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (*imported[i]) {
      std::ifstream file(**imported[i]);
      if (!file) throw InputError("cannot open " + **imported[i]);
      s[i] = score_matrix(read_walks(file, in.ids), in.graph.node_count());
      doc["imported"][kViewNames[i]] = **imported[i];
    }
    manifest.write(std::string(kViewNames[i]) + ".scores", "scores", scores_text(s[i], in.ids));
    doc["views"][kViewNames[i]] = {{"nnz", s[i].nnz()}, {"total", s[i].total()}, {"hash", hex64(content_hash(s[i]))}};
  }
  manifest.note("view_hashes", {{"s1", doc["views"]["s1"]["hash"]},
                                {"s2", doc["views"]["s2"]["hash"]},
                                {"s3", doc["views"]["s3"]["hash"]}});
  manifest.write("views.json", "report", dump(doc));
  return doc;
}

json run_generate(const PipelineConfig& cfg, const std::string& scheme, const std::optional<std::string>& views_dir,
                  Manifest& manifest) {
  const auto seed = cfg.require_seed();
  const auto in = load_input(cfg.input, cfg.largest_component);
  ViewSet views;
  json doc;
  doc["input"] = input_json(in);
  doc["scheme"] = scheme;
  if (views_dir) {
    const fs::path dir(*views_dir);
    views = ViewSet{read_scores_file(dir / "s1.scores", in.ids), read_scores_file(dir / "s2.scores", in.ids),
                    read_scores_file(dir / "s3.scores", in.ids)};
    doc["views_dir"] = *views_dir;
  } else {
    const auto p = prepare(in.graph, cfg, seed);
    doc["smoothing"] = smoothing_json(p.smoothing, cfg.smoothing.has_value());
    views = build_views(in.graph, p, cfg, seed, false).views;
  }
  const auto generated = assemble(scheme, views, cfg, in.graph.edge_count(), seed);
  manifest.write("generated_" + scheme + ".edges", "graph", graph_text(generated, in.ids));
  doc["generated_edges"] = generated.edge_count();
  doc["report"] = report_json(motif_report(in.graph, generated), count_four_cycles(in.graph), count_four_cycles(generated));
  manifest.write("generate_" + scheme + ".json", "report", dump(doc));
  return doc;
}

json run_evaluate(const PipelineConfig& cfg, const std::string& generated_path, Manifest& manifest) {
  const auto in = load_input(cfg.input, cfg.largest_component);
  const auto parsed = read_edge_list_file(generated_path);
  std::vector<Edge> edges;
  edges.reserve(parsed.graph.edge_count());
  for (const auto& e : parsed.graph.edges()) {
    const auto a = in.ids.internal(parsed.ids.external(e.u));
    const auto b = in.ids.internal(parsed.ids.external(e.v));
    if (!a || !b) {
      throw InputError(generated_path + ": node " +
                       std::to_string(a ? parsed.ids.external(e.v) : parsed.ids.external(e.u)) +
                       " is not a node of the input graph");
    }
    edges.push_back(make_edge(*a, *b));
  }
  const auto generated = Graph::from_edges(in.graph.node_count(), std::move(edges));
  auto doc = report_json(motif_report(in.graph, generated), count_four_cycles(in.graph), count_four_cycles(generated));
  doc["input_edges"] = in.graph.edge_count();
  doc["generated_edges"] = generated.edge_count();
  doc["edge_overlap"] = in.graph.edge_count() ? json(edge_overlap(generated, in.graph)) : json(nullptr);
  manifest.write("evaluate.json", "report", dump(doc));
  return doc;
}

json run_predict(const PipelineConfig& cfg, Manifest& manifest) {
  const auto in = load_input(cfg.input, cfg.largest_component);
  auto doc = predict_json(in.graph, cfg, cfg.require_seed());
  doc["input"] = input_json(in);
  manifest.write("predict.json", "report", dump(doc));
  return doc;
}

namespace {

/// Mean and sample standard deviation of a metric across repetitions.
json summarize(const std::vector<double>& xs) {
  if (xs.empty()) return nullptr;
  double mean = 0.0;
  for (const double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (const double x : xs) var += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1)) : 0.0;
  return {{"mean", mean}, {"std", sd}, {"n", xs.size()}};
}

}  // namespace

json run_pipeline(const PipelineConfig& cfg, Manifest& manifest) {
  const auto seed = cfg.require_seed();
  const auto in = load_input(cfg.input, cfg.largest_component);

  auto census = census_json(in.graph, cfg);
  census["input"] = input_json(in);
  manifest.write("census.json", "census", dump(census));
  manifest.write("input_lcc.edges", "graph", graph_text(in.graph, in.ids));

  const Count input_cycles = count_four_cycles(in.graph);
  const std::array<const char*, 3> schemes{"netgan", "avg", "mmgan"};
  const std::array<const char*, 3> predict_names{"netgan", "mmgan_avg", "mmgan"};
  std::map<std::string, std::vector<double>> series;

  json reps = json::array();
  for (std::size_t r = 0; r < cfg.repeats; ++r) {
    const auto rseed = derive_seed(seed, Stream::repetition, r);
    const std::string dir = "rep_" + std::to_string(r) + "/";
    const auto p = prepare(in.graph, cfg, rseed);
    auto built = build_views(in.graph, p, cfg, rseed, true);

    json rep;
    rep["seed"] = rseed;
    rep["smoothing"] = smoothing_json(p.smoothing, cfg.smoothing.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      std::ostringstream walks;
      write_walks(walks, built.train_walks[i], in.ids);
      manifest.write(dir + "walks_" + kViewNames[i] + ".txt", "walks", walks.str());
    }
    const std::array<const ScoreMatrix*, 3> s{&built.views.s1, &built.views.s2, &built.views.s3};
    for (std::size_t i = 0; i < 3; ++i) {
      manifest.write(dir + kViewNames[i] + ".scores", "scores", scores_text(*s[i], in.ids));
      rep["view_hashes"][kViewNames[i]] = hex64(content_hash(*s[i]));
    }

    const auto predict = predict_json(in.graph, cfg, rseed);
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string scheme = schemes[k];
      const auto generated = assemble(scheme, built.views, cfg, in.graph.edge_count(), rseed);
      manifest.write(dir + "generated_" + scheme + ".edges", "graph", graph_text(generated, in.ids));
      auto report = report_json(motif_report(in.graph, generated), input_cycles, count_four_cycles(generated));
      report["edge_overlap"] = edge_overlap(generated, in.graph);
      const auto& metrics = predict["methods"][predict_names[k]];
      report["link"] = metrics["link"];
      report["motif"] = metrics["motif"];
      rep["methods"][scheme] = report;

      const auto record = [&](const std::string& key, const json& value) {
        if (value.is_number()) series[scheme + "." + key].push_back(value.get<double>());
      };
      record("normalized_V", report["normalized_counts"]["V"]);
      record("normalized_T", report["normalized_counts"]["T"]);
      record("kl", report["kl"]);
      record("four_cycle_normalized", report["four_cycle_normalized"]);
      record("edge_overlap", report["edge_overlap"]);
      if (report["link"].is_object()) {
        record("link_auc", report["link"]["auc"]);
        record("link_ap", report["link"]["ap"]);
      }
      if (report["motif"].is_object()) {
        record("motif_auc", report["motif"]["auc"]);
        record("motif_ap", report["motif"]["ap"]);
      }
    }
    rep["split"] = predict["split"];
    manifest.write(dir + "report.json", "report", dump(rep));
    reps.push_back({{"seed", rseed}, {"report", dir + "report.json"}});
  }

  json summary;
  summary["input"] = input_json(in);
  summary["census"] = {{"count_V", census["count_V"]}, {"count_T", census["count_T"]},
                       {"conc_V", census["conc_V"]},   {"conc_T", census["conc_T"]},
                       {"R_V", census["R_V"]},         {"R_T", census["R_T"]}};
  summary["repeats"] = reps;
  for (const auto& [key, xs] : series) {
    const auto dot = key.find('.');
    summary["methods"][key.substr(0, dot)][key.substr(dot + 1)] = summarize(xs);
  }
  manifest.write("report.json", "report", dump(summary));
  return summary;
}

}  // namespace motifgen::pipeline
