// Command-line front end: Kauffman bracket (three independent methods),
// Jones polynomial, Turaev genus and span report, all-A ribbon graph data,
// quasi-tree census, and batch verification of the embedded corpus.
//
// Exit codes: 0 success, 1 identity/verification failure, 2 input error.
#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "turaev/corpus.hpp"
#include "turaev/diagram.hpp"
#include "turaev/invariants.hpp"
#include "turaev/polynomial.hpp"
#include "turaev/ribbon.hpp"

using namespace turaev;

namespace {

struct NamedDiagram {
  std::string name;
  std::string pd;
};

struct CommonFlags {
  bool json = false;
  int limit = 20;
  int outer_arc = -1;  // -1: leave the default outer face
  std::string file;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "machine-readable output");
  cmd->add_option("--limit", f.limit, "crossing/edge enumeration limit")
      ->capture_default_str();
  cmd->add_option("--outer-face", f.outer_arc,
                  "re-root the embedding: the face left of this arc's head becomes the outer face");
  cmd->add_option("--file", f.file, "file of PD codes, one per line; '#' starts a comment");
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Positional arguments may be PD codes or corpus entry names; "corpus" (where
// allowed) expands to the whole embedded corpus.  A file contributes one PD
// code per non-comment line.
std::vector<NamedDiagram> collect_inputs(const std::vector<std::string>& args,
                                         const std::string& file, bool allow_corpus_keyword) {
  std::vector<NamedDiagram> out;
  int anonymous = 0;
  auto add_code = [&](const std::string& code) {
    char label[24];
    std::snprintf(label, sizeof label, "input-%03d", ++anonymous);
    out.push_back({label, code});
  };

  for (const std::string& arg : args) {
    if (allow_corpus_keyword && arg == "corpus") {
      for (const auto& entry : corpus()) out.push_back({entry.name, entry.pd});
      continue;
    }
    bool named = false;
    for (const auto& entry : corpus())
      if (entry.name == arg) {
        out.push_back({entry.name, entry.pd});
        named = true;
        break;
      }
    if (!named) add_code(arg);
  }

  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      std::string code = trimmed(line.substr(0, line.find('#')));
      if (!code.empty()) add_code(code);
    }
  }
  return out;
}

Diagram load(const NamedDiagram& in, int outer_arc) {
  Diagram d = Diagram::parse(in.pd);
  if (outer_arc >= 0) {
    for (int p = 0; p < d.ports(); ++p)
      if (d.port_arc(p) == outer_arc && d.port_is_head(p)) {
        d.set_outer_face(d.port_face(p));
        return d;
      }
    throw std::invalid_argument("no arc " + std::to_string(outer_arc) + " in '" + in.name + "'");
  }
  return d;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void block_header(const std::vector<NamedDiagram>& inputs, std::size_t i) {
  if (inputs.size() > 1) std::cout << (i ? "\n" : "") << "== " << inputs[i].name << " ==\n";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int run_bracket(const std::vector<NamedDiagram>& inputs, const std::string& method,
                const CommonFlags& f) {
  bool all_agree = true;
  Json arr = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Diagram d = load(inputs[i], f.outer_arc);
    Json j;
    j["diagram"] = inputs[i].name;
    j["pd"] = inputs[i].pd;
    if (method == "all") {
      Laurent statesum = kauffman_bracket(d, BracketMethod::statesum, f.limit);
      Laurent tree = kauffman_bracket(d, BracketMethod::tree, f.limit);
      Laurent brt = kauffman_bracket(d, BracketMethod::ribbon, f.limit);
      bool agree = statesum == tree && tree == brt;
      all_agree = all_agree && agree;
      j["methods"] = {{"statesum", statesum.str()}, {"tree", tree.str()}, {"brt", brt.str()}};
      j["agree"] = agree;
      if (!f.json) {
        block_header(inputs, i);
        std::cout << "statesum: " << statesum.str() << "\n"
                  << "tree:     " << tree.str() << "\n"
                  << "brt:      " << brt.str() << "\n"
                  << "agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
      }
    } else {
      BracketMethod m = method == "statesum" ? BracketMethod::statesum
                        : method == "tree"   ? BracketMethod::tree
                                             : BracketMethod::ribbon;
      Laurent value = kauffman_bracket(d, m, f.limit);
      j["method"] = method;
      j["bracket"] = value.str();
      if (!f.json) {
        block_header(inputs, i);
        std::cout << value.str() << "\n";
      }
    }
    arr.push_back(j);
  }
  if (f.json) emit(inputs.size() == 1 ? arr[0] : arr);
  return all_agree ? 0 : 1;
}

int run_jones(const std::vector<NamedDiagram>& inputs, const CommonFlags& f) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Diagram d = load(inputs[i], f.outer_arc);
    JonesPolynomial v = jones_polynomial(d, f.limit);
    Json j;
    j["diagram"] = inputs[i].name;
    j["pd"] = inputs[i].pd;
    j["variable"] = v.t_form ? "t" : "A";
    j["jones"] = v.value.str();
    arr.push_back(j);
    if (!f.json) {
      block_header(inputs, i);
      if (v.t_form)
        std::cout << v.value.str() << "\n";
      else
        std::cout << "A-form: " << v.value.str() << "\n";
    }
  }
  if (f.json) emit(inputs.size() == 1 ? arr[0] : arr);
  return 0;
}

int run_genus(const std::vector<NamedDiagram>& inputs, const CommonFlags& f) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Diagram d = load(inputs[i], f.outer_arc);
    GenusSpanReport r = genus_and_span_report(d, f.limit);
    Json j;
    j["diagram"] = inputs[i].name;
    j["pd"] = inputs[i].pd;
    j.update(r.to_json());
    arr.push_back(j);
    if (!f.json) {
      block_header(inputs, i);
      std::cout << "crossings: " << r.crossings << "\n"
                << "state circles: A=" << r.s_a << " B=" << r.s_b << "\n"
                << "turaev genus: " << r.turaev_genus << "\n"
                << "adequate: A=" << yn(r.a_adequate) << " B=" << yn(r.b_adequate) << "\n"
                << "bracket span: " << r.bracket_span << " of " << r.bracket_span_cap
                << (r.bracket_span_tight ? " (tight)" : "") << "\n"
                << "jones span: " << r.jones_span << " of " << r.jones_span_cap
                << (r.jones_span_tight ? " (tight)" : "") << "\n"
                << "certified: "
                << (r.genus_certified ? "yes (adequate: genus of the link is exactly c - span V)"
                                      : "no (upper bounds only)")
                << "\n";
    }
  }
  if (f.json) emit(inputs.size() == 1 ? arr[0] : arr);
  return 0;
}

int run_ribbon(const std::vector<NamedDiagram>& inputs, const CommonFlags& f) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Diagram d = load(inputs[i], f.outer_arc);
    RibbonGraph g = all_A_ribbon_graph(d);
    MultiPoly q = quasi_tree_polynomial(g, f.limit);
    std::size_t count = quasi_trees(g, f.limit).size();
    Json j;
    j["diagram"] = inputs[i].name;
    j["pd"] = inputs[i].pd;
    j["sigma0"] = g.sigma0().str();
    j["sigma1"] = g.sigma1().str();
    j["sigma2"] = g.sigma2().str();
    j["vertices"] = g.vertices();
    j["edges"] = g.edges();
    j["faces"] = g.faces();
    j["genus"] = g.genus();
    j["q"] = q.str();
    j["quasi_trees"] = count;
    arr.push_back(j);
    if (!f.json) {
      block_header(inputs, i);
      std::cout << "sigma0: " << g.sigma0().str() << "\n"
                << "sigma1: " << g.sigma1().str() << "\n"
                << "sigma2: " << g.sigma2().str() << "\n"
                << "vertices=" << g.vertices() << " edges=" << g.edges()
                << " faces=" << g.faces() << " genus=" << g.genus() << "\n"
                << "q: " << q.str() << "  (" << count << " quasi-trees)\n";
    }
  }
  if (f.json) emit(inputs.size() == 1 ? arr[0] : arr);
  return 0;
}

int run_quasitrees(const std::vector<NamedDiagram>& inputs, const CommonFlags& f) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Diagram d = load(inputs[i], f.outer_arc);
    RibbonGraph g = all_A_ribbon_graph(d);
    auto qts = quasi_trees(g, f.limit);
    MultiPoly q = quasi_tree_polynomial(g, f.limit);
    std::map<int, int> by_genus;
    for (const auto& qt : qts) by_genus[qt.genus] += 1;
    Json j;
    j["diagram"] = inputs[i].name;
    j["pd"] = inputs[i].pd;
    j["count"] = qts.size();
    Json hist;
    for (const auto& [genus, n] : by_genus) hist[std::to_string(genus)] = n;
    j["by_genus"] = hist;
    j["q"] = q.str();
    Json list = Json::array();
    for (const auto& qt : qts) list.push_back({{"edges", qt.edges}, {"genus", qt.genus}});
    j["quasi_trees"] = list;
    arr.push_back(j);
    if (!f.json) {
      block_header(inputs, i);
      std::cout << "quasi-trees: " << qts.size() << "\n";
      for (const auto& [genus, n] : by_genus)
        std::cout << "genus " << genus << ": " << n << "\n";
      std::cout << "q: " << q.str() << "\n";
    }
  }
  if (f.json) emit(inputs.size() == 1 ? arr[0] : arr);
  return 0;
}

int run_verify(const std::vector<NamedDiagram>& inputs, const CommonFlags& f,
               bool negative_control, unsigned seed) {
  VerifyOptions opts;
  opts.limit = f.limit;
  opts.negative_control = negative_control;
  opts.seed = seed;

  // Diagrams are independent; verify them concurrently, then report in
  // a deterministic order (sorted by name).
  std::vector<std::future<InvariantReport>> futures;
  futures.reserve(inputs.size());
  for (const NamedDiagram& in : inputs)
    futures.push_back(std::async(std::launch::async, [&, in] {
      InvariantReport r = verify_all(load(in, f.outer_arc), opts);
      r.name = in.name;
      return r;
    }));
  std::vector<InvariantReport> reports;
  reports.reserve(futures.size());
  for (auto& fut : futures) reports.push_back(fut.get());
  std::sort(reports.begin(), reports.end(),
            [](const InvariantReport& a, const InvariantReport& b) { return a.name < b.name; });

  bool all_pass = true;
  bool have_bound = false;
  int genus_bound = 0;  // min over connected diagrams so far, never increasing
  Json arr = Json::array();
  std::size_t name_width = 4;
  for (const auto& r : reports) name_width = std::max(name_width, r.name.size());

  if (!f.json)
    std::printf("%-*s  %5s  %5s  %3s  %5s  %6s  %s\n", static_cast<int>(name_width), "name",
                "cross", "comps", "g_T", "g_T<=", "checks", "result");
  for (const auto& r : reports) {
    all_pass = all_pass && r.all_passed();
    std::string genus = r.split ? "-" : std::to_string(r.turaev_genus);
    if (!r.split) {
      genus_bound = have_bound ? std::min(genus_bound, r.turaev_genus) : r.turaev_genus;
      have_bound = true;
    }
    std::string bound = have_bound ? std::to_string(genus_bound) : "-";
    int passed = 0;
    for (const auto& id : r.identities) passed += id.pass ? 1 : 0;
    if (!f.json) {
      char checks[24];
      std::snprintf(checks, sizeof checks, "%d/%zu", passed, r.identities.size());
      std::printf("%-*s  %5d  %5d  %3s  %5s  %6s  %s\n", static_cast<int>(name_width),
                  r.name.c_str(), r.crossings, r.components, genus.c_str(), bound.c_str(),
                  checks, r.all_passed() ? "pass" : "FAIL");
    }
    Json j = r.to_json();
    j["turaev_genus_upper"] = have_bound ? Json(genus_bound) : Json(nullptr);
    arr.push_back(j);
  }
  if (!f.json) {
    for (const auto& r : reports)
      for (const auto& id : r.identities)
        if (!id.pass) std::printf("FAIL %s: %s\n", r.name.c_str(), id.check.c_str());
    std::printf("verified %zu diagram%s: %s\n", reports.size(), reports.size() == 1 ? "" : "s",
                all_pass ? "all pass" : "FAILURES above");
  } else {
    Json top;
    top["reports"] = arr;
    top["turaev_genus_upper"] = have_bound ? Json(genus_bound) : Json(nullptr);
    top["pass"] = all_pass;
    emit(top);
  }
  return all_pass ? 0 : 1;
}

int run_corpus_list(bool json) {
  if (json) {
    Json arr = Json::array();
    for (const auto& e : corpus()) {
      Json j;
      j["name"] = e.name;
      j["pd"] = e.pd;
      j["crossings"] = e.crossings;
      j["components"] = e.components;
      j["alternating"] = e.alternating;
      j["adequate"] = {{"A", e.a_adequate}, {"B", e.b_adequate}};
      j["turaev_genus"] = e.turaev_genus >= 0 ? Json(e.turaev_genus) : Json(nullptr);
      j["determinant"] = e.determinant.empty() ? Json(nullptr) : Json(e.determinant);
      j["bracket"] = e.bracket;
      j["jones"] = {{"variable", e.jones_t_form ? "t" : "A"}, {"poly", e.jones}};
      arr.push_back(j);
    }
    emit(arr);
    return 0;
  }
  std::size_t name_width = 4;
  for (const auto& e : corpus()) name_width = std::max(name_width, e.name.size());
  std::printf("%-*s  %5s  %5s  %3s  %8s  %3s  %s\n", static_cast<int>(name_width), "name",
              "cross", "comps", "alt", "adequate", "g_T", "det");
  for (const auto& e : corpus()) {
    std::string adequate = e.a_adequate && e.b_adequate ? "AB"
                           : e.a_adequate              ? "A"
                           : e.b_adequate              ? "B"
                                                       : "-";
    std::string genus = e.turaev_genus >= 0 ? std::to_string(e.turaev_genus) : "-";
    std::printf("%-*s  %5d  %5d  %3s  %8s  %3s  %s\n", static_cast<int>(name_width),
                e.name.c_str(), e.crossings, e.components, e.alternating ? "yes" : "no",
                adequate.c_str(), genus.c_str(),
                e.determinant.empty() ? "-" : e.determinant.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Turaev genus, Kauffman bracket, and Jones polynomial toolkit"};
  app.require_subcommand(1);

  std::map<std::string, CommonFlags> flags;
  std::map<std::string, std::vector<std::string>> positionals;

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of PD codes");
  std::string method = "all";
  bracket->add_option("--method", method, "statesum, tree, brt, or all")
      ->check(CLI::IsMember({"statesum", "tree", "brt", "all"}))
      ->capture_default_str();

  auto* jones = app.add_subcommand("jones", "Jones polynomial of PD codes");
  auto* genus = app.add_subcommand("genus", "Turaev genus and span report (connected diagrams)");
  auto* ribbon = app.add_subcommand("ribbon", "all-A ribbon graph as a permutation triple");
  auto* quasitrees = app.add_subcommand("quasitrees", "quasi-tree census of the all-A ribbon graph");
  auto* verify = app.add_subcommand("verify", "run every identity check; 'corpus' verifies the embedded corpus");
  bool negative_control = false;
  unsigned seed = 2026;
  verify->add_flag("--negative-control", negative_control,
                   "corrupt the state-sum convention; the checks must then fail");
  verify->add_option("--seed", seed, "seed for the randomized edge-order checks")
      ->capture_default_str();

  for (CLI::App* cmd : {bracket, jones, genus, ribbon, quasitrees, verify}) {
    add_common(cmd, flags[cmd->get_name()]);
    cmd->add_option("inputs", positionals[cmd->get_name()], "PD codes or corpus entry names");
  }

  auto* corpus_cmd = app.add_subcommand("corpus", "embedded diagram corpus");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "list the corpus entries");
  bool corpus_json = false;
  corpus_list->add_flag("--json", corpus_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    for (CLI::App* cmd : {bracket, jones, genus, ribbon, quasitrees, verify}) {
      if (!cmd->parsed()) continue;
      const std::string& name = cmd->get_name();
      auto inputs = collect_inputs(positionals[name], flags[name].file, cmd == verify);
      if (cmd == bracket) return run_bracket(inputs, method, flags[name]);
      if (cmd == jones) return run_jones(inputs, flags[name]);
      if (cmd == genus) return run_genus(inputs, flags[name]);
      if (cmd == ribbon) return run_ribbon(inputs, flags[name]);
      if (cmd == quasitrees) return run_quasitrees(inputs, flags[name]);
      return run_verify(inputs, flags[name], negative_control, seed);
    }
    if (corpus_cmd->parsed()) return run_corpus_list(corpus_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
