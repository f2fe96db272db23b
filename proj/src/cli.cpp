#include "wordrep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/enumeration.hpp"
#include "wordrep/gluing.hpp"
#include "wordrep/split_decider.hpp"
#include "wordrep/threshold.hpp"
#include "wordrep/word.hpp"

namespace wordrep::cli {

namespace {

using nlohmann::json;

struct GlobalOpts {
  bool as_json = false;
  bool fail_on_negative = false;
  bool force_graph6 = false;
  bool force_edges = false;
};

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Graph arguments: "-" reads stdin, an existing file path reads the file,
// anything else is the literal text. Format is sniffed unless forced: an
// edge list starts with a decimal count and contains whitespace.
Graph read_graph(const std::string& arg, const GlobalOpts& opts) {
  std::string text = arg;
  if (arg == "-")
    text = slurp(std::cin);
  else if (std::filesystem::exists(arg)) {
    std::ifstream f(arg);
    text = slurp(f);
  }
  if (opts.force_graph6) return parse_graph6(text);
  if (opts.force_edges) return parse_edge_list_text(text);
  const bool looks_like_edges = !text.empty() && std::isdigit(static_cast<unsigned char>(text[0])) &&
                                text.find_first_of(" \t\n") != std::string::npos;
  return looks_like_edges ? parse_edge_list_text(text) : parse_graph6(text);
}

int resolve_token(const std::string& token, const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.display(v) == token) return v;
  try {
    const int v = std::stoi(token);
    if (v >= 0 && v < g.vertex_count()) return v;
  } catch (...) {
  }
  return -1;
}

// Whitespace-separated vertex tokens; a single unresolvable token falls back
// to one letter per character (the compact form, e.g. 1521324354). When a
// token resolves neither as a label nor as a 0-based id but the whole word
// reads as 1-based ids, the 1-based reading wins.
Word parse_word(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  if (tokens.empty()) throw std::invalid_argument("empty word");
  if (tokens.size() == 1 && resolve_token(tokens[0], g) < 0 && tokens[0].size() > 1) {
    const std::string whole = tokens[0];
    tokens.clear();
    for (char c : whole) tokens.push_back(std::string(1, c));
  }
  Word w;
  bool ok = true;
  for (const auto& tok : tokens) {
    const int v = resolve_token(tok, g);
    if (v < 0) {
      ok = false;
      break;
    }
    w.letters.push_back(v);
  }
  if (ok) return w;
  w.letters.clear();
  for (const auto& tok : tokens) {
    int v = -1;
    try {
      v = std::stoi(tok) - 1;
    } catch (...) {
    }
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("word letter '" + tok + "' is not a vertex");
    w.letters.push_back(v);
  }
  return w;
}

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["graph6"] = to_graph6(g);
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  json labels = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.display(v));
  j["labels"] = labels;
  return j;
}

std::string labeled_edges(const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out << ' ';
    out << g.display(u) << '-' << g.display(v);
    first = false;
  }
  return out.str();
}

json witness_json(const SplitWitness& w) {
  json j;
  j["order"] = w.order.order;
  json assignment = json::array();
  for (const auto& e : w.assignment) {
    assignment.push_back({{"vertex", e.vertex},
                          {"type", e.cls.type == VertexType::AB ? "AB" : "C"},
                          {"a", e.cls.a},
                          {"b", e.cls.b}});
  }
  j["assignment"] = assignment;
  return j;
}

json orientation_json(const Orientation& o) {
  json edges = json::array();
  for (int v = 0; v < o.base.vertex_count(); ++v)
    WORDREP_FOR_SET(w, o.out[static_cast<size_t>(v)]) edges.push_back({v, w});
  return json{{"edges", edges}};
}

const char* status_name(AutoVerdict::Status s) {
  switch (s) {
    case AutoVerdict::Status::Representable: return "representable";
    case AutoVerdict::Status::NonRepresentable: return "non-representable";
    default: return "unknown-guarded";
  }
}

const char* method_name(AutoVerdict::Method m) {
  switch (m) {
    case AutoVerdict::Method::SplitDecider: return "split-decider";
    case AutoVerdict::Method::ExhaustiveSearch: return "exhaustive-search";
    default: return "guarded";
  }
}

int finish_verdict(const GlobalOpts& opts, bool non_representable) {
  return opts.fail_on_negative && non_representable ? 1 : 0;
}

int cmd_decide(const GlobalOpts& opts, const std::string& graph_arg, bool force, bool raw, int guard,
               std::ostream& out) {
  const Graph g = read_graph(graph_arg, opts);
  AutoVerdict verdict;
  if (raw) {
    const auto part = split_partition(g);
    if (!part) throw std::invalid_argument("--raw requires a split graph");
    verdict.method = AutoVerdict::Method::SplitDecider;
    verdict.partition = part;
    verdict.split_result = decide(g, *part, DecideOptions{.apply_reduction = false});
    verdict.status = verdict.split_result->representable ? AutoVerdict::Status::Representable
                                                         : AutoVerdict::Status::NonRepresentable;
  } else {
    verdict = decide_graph(g, guard, force);
  }

  if (opts.as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "decide";
    j["graph"] = graph_json(g);
    j["status"] = status_name(verdict.status);
    j["method"] = method_name(verdict.method);
    if (verdict.split_result) {
      const auto& r = *verdict.split_result;
      j["orders_tried"] = r.orders_tried;
      json steps = json::array();
      for (const auto& s : r.reduction.steps) {
        steps.push_back({{"removed", s.removed},
                         {"reason", s.reason == ReductionStep::Reason::Twin
                                        ? "twin"
                                        : (s.reason == ReductionStep::Reason::Degree0 ? "degree-0" : "degree-1")},
                         {"twin", s.twin}});
      }
      j["reduction"] = steps;
      j["decided_graph6"] = to_graph6(r.reduction.graph);
      if (r.witness) {
        j["witness"] = witness_json(*r.witness);
        j["witness"]["reduced_graph6"] = to_graph6(r.witness->graph);
      }
      if (!r.representable && r.first_failure) {
        json f;
        f["order"] = r.first_failure->order.order;
        if (r.first_failure->infeasible_vertex) f["infeasible_vertex"] = *r.first_failure->infeasible_vertex;
        if (r.first_failure->violation)
          f["violating_pair"] = {r.first_failure->violation->x, r.first_failure->violation->y};
        j["failure_sample"] = f;
      }
    }
    if (verdict.orientation) j["orientation"] = orientation_json(*verdict.orientation);
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << status_name(verdict.status) << '\n';
    out << "method: " << method_name(verdict.method) << '\n';
    if (verdict.status == AutoVerdict::Status::UnknownGuarded)
      out << "note: " << g.vertex_count() << " vertices exceed the exhaustive guard; rerun with --force\n";
    if (verdict.split_result) {
      const auto& r = *verdict.split_result;
      for (const auto& s : r.reduction.steps) {
        out << "reduced: removed " << g.display(s.removed);
        if (s.reason == ReductionStep::Reason::Twin)
          out << " (twin of " << g.display(s.twin) << ")";
        else
          out << " (degree " << (s.reason == ReductionStep::Reason::Degree0 ? 0 : 1) << ")";
        out << '\n';
      }
      if (!r.reduction.steps.empty())
        out << "decided graph: " << to_graph6(r.reduction.graph) << '\n';
      if (r.witness) out << "witness:\n" << to_string(*r.witness);
      if (!r.representable && r.first_failure) {
        out << "failure sample: order";
        for (int v : r.first_failure->order.order) out << ' ' << v;
        if (r.first_failure->violation)
          out << " violating pair (" << r.first_failure->violation->x << ", " << r.first_failure->violation->y
              << ")";
        if (r.first_failure->infeasible_vertex)
          out << " infeasible vertex " << *r.first_failure->infeasible_vertex;
        out << '\n';
      }
    }
    if (verdict.orientation) out << "orientation:\n" << to_string(*verdict.orientation);
  }
  return finish_verdict(opts, verdict.status == AutoVerdict::Status::NonRepresentable);
}

int cmd_represents(const GlobalOpts& opts, const std::string& word_arg, const std::string& graph_arg,
                   std::ostream& out) {
  const Graph g = read_graph(graph_arg, opts);
  const Word w = parse_word(word_arg, g);
  const bool yes = represents(w, g);
  if (opts.as_json) {
    out << json{{"schema", 1}, {"command", "represents"}, {"status", yes}}.dump(2) << '\n';
  } else {
    out << (yes ? "true" : "false") << '\n';
  }
  return finish_verdict(opts, !yes);
}

int cmd_word_graph(const GlobalOpts& opts, const std::string& word_arg, std::ostream& out) {
  // Tokens become the alphabet; single unbreakable token splits per char.
  std::istringstream in(word_arg);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    const std::string whole = tokens[0];
    tokens.clear();
    for (char c : whole) tokens.push_back(std::string(1, c));
  }
  if (tokens.empty()) throw std::invalid_argument("empty word");
  std::vector<std::string> alphabet = tokens;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  Word w;
  for (const auto& tok : tokens)
    w.letters.push_back(static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), tok) - alphabet.begin()));
  Graph g = graph_of_word(w);
  for (size_t i = 0; i < alphabet.size(); ++i) g.set_label(static_cast<int>(i), alphabet[i]);
  if (opts.as_json) {
    out << json{{"schema", 1}, {"command", "word-graph"}, {"graph", graph_json(g)}}.dump(2) << '\n';
  } else {
    out << to_graph6(g) << '\n' << "edges: " << labeled_edges(g) << '\n';
  }
  return 0;
}

const char* verdict_name(ExpectedVerdict v) {
  switch (v) {
    case ExpectedVerdict::Representable: return "representable";
    case ExpectedVerdict::NonRepresentable: return "non-representable";
    default: return "minimal-non-representable";
  }
}

int cmd_catalog_list(const GlobalOpts& opts, std::ostream& out) {
  if (opts.as_json) {
    json items = json::array();
    for (const auto& e : catalog_entries())
      items.push_back({{"name", e.name},
                       {"expected", verdict_name(e.expected)},
                       {"provenance", e.provenance},
                       {"graph", graph_json(e.graph)}});
    out << json{{"schema", 1}, {"command", "catalog-list"}, {"entries", items}}.dump(2) << '\n';
  } else {
    for (const auto& e : catalog_entries())
      out << e.name << '\t' << e.graph.vertex_count() << '\t' << to_graph6(e.graph) << '\t'
          << verdict_name(e.expected) << '\n';
  }
  return 0;
}

int cmd_catalog_get(const GlobalOpts& opts, const std::string& name, std::ostream& out) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw std::invalid_argument("catalog: no entry named '" + name + "'");
  if (opts.as_json) {
    out << json{{"schema", 1},
                {"command", "catalog-get"},
                {"name", e->name},
                {"expected", verdict_name(e->expected)},
                {"provenance", e->provenance},
                {"graph", graph_json(e->graph)}}
               .dump(2)
        << '\n';
  } else {
    out << e->name << '\n' << to_graph6(e->graph) << '\n' << "edges: " << labeled_edges(e->graph) << '\n';
  }
  return 0;
}

int cmd_enumerate(const GlobalOpts& opts, const EnumConfig& cfg, std::ostream& out) {
  std::function<void(const Graph&, bool)> emit;
  if (cfg.emit_all)
    emit = [&out](const Graph& g, bool rep) {
      out << to_graph6(g) << '\t' << (rep ? "representable" : "non-representable") << '\n';
    };
  const EnumReport report = find_minimal_nonrep(cfg, emit);
  if (opts.as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "enumerate";
    j["clique_size"] = report.clique_size;
    j["caps"] = report.caps;
    j["total_candidates"] = report.total_candidates;
    j["representable"] = report.representable;
    j["non_representable"] = report.non_representable;
    j["cap_violations"] = report.cap_violations;
    j["wall_seconds"] = report.wall_seconds;
    json minimal = json::array();
    for (const auto& g : report.minimal) minimal.push_back(graph_json(g));
    j["minimal"] = minimal;
    out << j.dump(2) << '\n';
  } else {
    out << to_string(report);
  }
  return finish_verdict(opts, !report.minimal.empty());
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> vs;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    vs.push_back(std::stoi(token));
  }
  if (vs.empty()) throw std::invalid_argument("empty vertex list");
  return vs;
}

int cmd_glue(const GlobalOpts& opts, const std::string& g1_arg, const std::string& c1_arg,
             const std::string& g2_arg, const std::string& c2_arg, std::ostream& out) {
  GlueSpec spec{read_graph(g1_arg, opts), read_graph(g2_arg, opts), parse_vertex_list(c1_arg),
                parse_vertex_list(c2_arg)};
  const Graph g = glue(spec);
  if (opts.as_json) {
    out << json{{"schema", 1}, {"command", "glue"}, {"graph", graph_json(g)}}.dump(2) << '\n';
  } else {
    out << to_graph6(g) << '\n' << "edges: " << labeled_edges(g) << '\n';
  }
  return 0;
}

int cmd_threshold_check(const GlobalOpts& opts, const std::string& graph_arg, std::ostream& out) {
  const Graph g = read_graph(graph_arg, opts);
  const auto seq = is_threshold(g);
  if (opts.as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "threshold-check";
    j["threshold"] = seq.has_value();
    if (seq) {
      j["sequence"] = to_string(*seq);
      json cert = json::array();
      for (const auto& s : reduction_certificate(g))
        cert.push_back({{"removed", s.removed}, {"twin", s.twin}, {"adjacent", s.adjacent}});
      j["certificate"] = cert;
    }
    out << j.dump(2) << '\n';
  } else {
    if (!seq) {
      out << "threshold: no\n";
    } else {
      out << "threshold: yes\nsequence: " << to_string(*seq) << '\n';
      for (const auto& s : reduction_certificate(g))
        out << "eliminate " << g.display(s.removed) << " (twin " << g.display(s.twin)
            << (s.adjacent ? ", adjacent" : "") << ")\n";
    }
  }
  return finish_verdict(opts, !seq.has_value());
}

int cmd_threshold_random(const GlobalOpts& opts, int n, std::uint64_t seed, std::ostream& out) {
  const Graph g = random_threshold(n, seed);
  if (opts.as_json) {
    out << json{{"schema", 1}, {"command", "threshold-random"}, {"graph", graph_json(g)}}.dump(2) << '\n';
  } else {
    out << to_graph6(g) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"word-representability toolkit for small graphs"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_flag("--json", opts.as_json, "structured JSON output");
  app.add_flag("--fail-on-negative", opts.fail_on_negative, "exit 1 on a non-representable verdict");
  auto* flag_g6 = app.add_flag("--graph6", opts.force_graph6, "force graph6 input");
  app.add_flag("--edges", opts.force_edges, "force edge-list input")->excludes(flag_g6);

  std::string graph_arg, word_arg, name_arg, g1, c1, g2, c2;
  bool force = false, raw = false;
  int guard = 12;

  auto* decide_cmd = app.add_subcommand("decide", "decide word-representability");
  decide_cmd->add_option("graph", graph_arg, "graph (graph6/edge list, literal, file, or -)")->required();
  decide_cmd->add_flag("--force", force, "ignore the exhaustive-search size guard");
  decide_cmd->add_flag("--raw", raw, "skip the reduction preprocessing (split graphs only)");
  decide_cmd->add_option("--guard", guard, "exhaustive-search vertex guard (default 12)");

  auto* repr_cmd = app.add_subcommand("represents", "check a word against a graph");
  repr_cmd->add_option("word", word_arg)->required();
  repr_cmd->add_option("graph", graph_arg)->required();

  auto* wg_cmd = app.add_subcommand("word-graph", "graph induced by a word");
  wg_cmd->add_option("word", word_arg)->required();

  auto* cat_cmd = app.add_subcommand("catalog", "reference graphs");
  auto* cat_list = cat_cmd->add_subcommand("list", "list catalog entries");
  auto* cat_get = cat_cmd->add_subcommand("get", "print one catalog entry");
  cat_get->add_option("name", name_arg)->required();
  cat_cmd->require_subcommand(1);

  EnumConfig enum_cfg;
  std::string caps_arg;
  auto* enum_cmd = app.add_subcommand("enumerate", "search for minimal non-representable split graphs");
  enum_cmd->add_option("--clique-size", enum_cfg.clique_size, "clique size m (3..6)")->required();
  enum_cmd->add_option("--caps", caps_arg, "per-degree caps, e.g. 2=6,3=6,4=3");
  enum_cmd->add_option("--jobs", enum_cfg.jobs, "parallel workers");
  enum_cmd->add_flag("--emit-all", enum_cfg.emit_all, "stream per-candidate verdicts");

  auto* glue_cmd = app.add_subcommand("glue", "glue two graphs along cliques");
  glue_cmd->add_option("g1", g1)->required();
  glue_cmd->add_option("c1", c1, "comma-separated clique vertices of g1")->required();
  glue_cmd->add_option("g2", g2)->required();
  glue_cmd->add_option("c2", c2, "comma-separated clique vertices of g2")->required();

  auto* thr_cmd = app.add_subcommand("threshold", "threshold graph utilities");
  auto* thr_check = thr_cmd->add_subcommand("check", "recognize and certify a threshold graph");
  thr_check->add_option("graph", graph_arg)->required();
  int rand_n = 0;
  std::uint64_t rand_seed = 0;
  auto* thr_rand = thr_cmd->add_subcommand("random", "deterministic random threshold graph");
  thr_rand->add_option("n", rand_n)->required();
  thr_rand->add_option("seed", rand_seed)->required();
  thr_cmd->require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(opts, graph_arg, force, raw, guard, out);
    if (repr_cmd->parsed()) return cmd_represents(opts, word_arg, graph_arg, out);
    if (wg_cmd->parsed()) return cmd_word_graph(opts, word_arg, out);
    if (cat_cmd->parsed()) {
      if (cat_list->parsed()) return cmd_catalog_list(opts, out);
      return cmd_catalog_get(opts, name_arg, out);
    }
    if (enum_cmd->parsed()) {
      if (!caps_arg.empty()) {
        enum_cfg.caps = default_caps(enum_cfg.clique_size);
        std::istringstream in(caps_arg);
        std::string item;
        while (std::getline(in, item, ',')) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw std::invalid_argument("--caps items must look like d=c");
          const int d = std::stoi(item.substr(0, eq));
          if (d < 2 || d > enum_cfg.clique_size - 1) throw std::invalid_argument("--caps degree out of range");
          enum_cfg.caps[static_cast<size_t>(d - 2)] = std::stoi(item.substr(eq + 1));
        }
      }
      return cmd_enumerate(opts, enum_cfg, out);
    }
    if (glue_cmd->parsed()) return cmd_glue(opts, g1, c1, g2, c2, out);
    if (thr_cmd->parsed()) {
      if (thr_check->parsed()) return cmd_threshold_check(opts, graph_arg, out);
      return cmd_threshold_random(opts, rand_n, rand_seed, out);
    }
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace wordrep::cli
