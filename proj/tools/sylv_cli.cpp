// sylv: command-line front end to the sylvester monoid library.
//
// Exit status: 0 success, 2 bad input, 3 a cap or budget was exceeded,
// 4 a verification failed, 5 internal error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sylv/certificate_json.hpp"
#include "sylv/cocharge.hpp"
#include "sylv/error.hpp"
#include "sylv/monoid.hpp"
#include "sylv/shift_graph.hpp"
#include "sylv/shift_path.hpp"
#include "sylv/verify.hpp"

using namespace sylv;
using nlohmann::json;

namespace {

  enum Exit { kOk = 0, kInput = 2, kCap = 3, kVerify = 4, kInternal = 5 };

  struct Config {
    std::size_t rank         = 0;  // 0: infer from the largest symbol
    std::string format       = "text";
    std::size_t max_readings = kDefaultReadingsCap;
    std::size_t max_vertices = kDefaultVertexCap;
    std::size_t budget       = kDefaultRewriteBudget;
    unsigned    jobs         = 1;
    std::string out;
    std::string eval;
    bool        standard = false;
    bool        ascii    = false;
    bool        tree_labels = false;
    bool        rewrite  = false;
    std::size_t maxlen   = 6;
    std::size_t size     = 5;
    std::vector<std::string> words;
    std::vector<std::string> suites;
    std::string file;
  };

  struct VerificationFailed {};

  GraphLimits limits(Config const& c) {
    return GraphLimits{c.max_vertices, c.max_readings, c.jobs};
  }

  std::size_t rank_for(Config const& c, std::vector<Word> const& words) {
    if (c.rank != 0) {
      return c.rank;
    }
    Symbol m = 1;
    for (Word const& w : words) {
      m = std::max(m, w.max_symbol());
    }
    return m;
  }

  std::string show(Word const& w) {
    return w.empty() ? std::string("ε") : to_string(w);
  }

  std::string join(std::vector<std::size_t> const& v) {
    std::string out;
    for (std::size_t x : v) {
      out += (out.empty() ? "" : " ") + std::to_string(x);
    }
    return out;
  }

  void progress(std::string_view msg) {
    std::cerr << msg << '\n';
  }

  ComponentGraph graph_for(Config const& c) {
    if (c.standard == !c.eval.empty()) {
      throw InputError("give exactly one of --standard or --eval");
    }
    if (c.standard) {
      if (c.rank == 0) {
        throw InputError("--standard needs -n");
      }
      return standard_component(c.rank, limits(c));
    }
    Evaluation e = parse_evaluation(c.eval);
    if (c.rank != 0 && c.rank != e.rank()) {
      throw RankError("--eval has " + std::to_string(e.rank()) + " entries but -n is "
                      + std::to_string(c.rank));
    }
    return component(e, limits(c));
  }

  std::string cmd_tree(Config const& c) {
    Word const w = parse_word(c.words.at(0));
    Bst const  t = psylv(w);
    if (c.format == "dot") {
      return to_dot(t);
    }
    if (c.format == "json") {
      return json{{"word", to_string(w)},
                  {"tree", to_string(t)},
                  {"reading", to_string(canonical_reading(t))}}
                 .dump(2)
             + "\n";
    }
    if (c.ascii) {
      return render_ascii(t);
    }
    return to_string(t) + "\n";
  }

  std::string cmd_cochseq(Config const& c) {
    CochargeSeq const s = cochseq(parse_word(c.words.at(0)));
    if (c.format == "json") {
      return json(s.labels).dump() + "\n";
    }
    return join(s.labels) + "\n";
  }

  std::string cmd_evaluation(Config const& c) {
    Word const w = parse_word(c.words.at(0));
    return to_string(evaluation(w, rank_for(c, {w}))) + "\n";
  }

  std::string cmd_readings(Config const& c) {
    auto const  rs = readings(psylv(parse_word(c.words.at(0))), c.max_readings);
    std::string out;
    if (c.format == "json") {
      json j = json::array();
      for (Word const& r : rs) {
        j.push_back(to_string(r));
      }
      return j.dump() + "\n";
    }
    for (Word const& r : rs) {
      out += show(r) + "\n";
    }
    return out;
  }

  std::string cmd_equivalent(Config const& c) {
    Word const        u    = parse_word(c.words.at(0));
    Word const        v    = parse_word(c.words.at(1));
    std::size_t const rank = rank_for(c, {u, v});
    bool const        same = c.rewrite ? rewrite_equivalent(u, v, rank, c.budget)
                                       : equivalent(u, v, rank);
    return same ? "yes\n" : "no\n";
  }

  std::string cmd_multiply(Config const& c) {
    Word const        u    = parse_word(c.words.at(0));
    Word const        v    = parse_word(c.words.at(1));
    std::size_t const rank = rank_for(c, {u, v});
    SylvElement const p    = multiply(element_of(u, rank), element_of(v, rank));
    return to_string(p.tree()) + "\n";
  }

  std::string cmd_bound(Config const& c) {
    Word const        u    = parse_word(c.words.at(0));
    Word const        v    = parse_word(c.words.at(1));
    std::size_t const rank = rank_for(c, {u, v});
    return std::to_string(cocharge_lower_bound(element_of(u, rank), element_of(v, rank)))
           + "\n";
  }

  std::string cmd_neighbors(Config const& c) {
    Word const        w    = parse_word(c.words.at(0));
    SylvElement const s    = element_of(w, rank_for(c, {w}));
    auto const        ns   = neighbors(s, c.max_readings);
    std::string       out;
    json              j = json::array();
    for (auto const& nb : ns) {
      if (nb.element == s) {
        continue;
      }
      if (c.format == "json") {
        j.push_back({{"tree", to_string(nb.element.tree())},
                     {"reading", to_string(nb.element.reading())},
                     {"x", to_string(nb.witness.x)},
                     {"y", to_string(nb.witness.y)}});
      } else {
        out += to_string(nb.element.reading()) + "\t" + to_string(nb.element.tree())
               + "\tx=" + show(nb.witness.x) + "\ty=" + show(nb.witness.y) + "\n";
      }
    }
    return c.format == "json" ? j.dump(2) + "\n" : out;
  }

  json graph_json(ComponentGraph const& g) {
    json vs = json::array();
    for (auto const& v : g.vertices()) {
      vs.push_back({{"tree", to_string(v.tree())}, {"reading", to_string(v.reading())}});
    }
    json es = json::array();
    for (auto const& e : g.edges()) {
      es.push_back({{"a", e.a},
                    {"b", e.b},
                    {"x", to_string(e.witness.x)},
                    {"y", to_string(e.witness.y)}});
    }
    return json{{"evaluation", to_string(g.evaluation())}, {"vertices", vs}, {"edges", es}};
  }

  std::string cmd_component(Config const& c) {
    ComponentGraph const g = graph_for(c);
    if (c.format == "dot") {
      return to_dot(g, c.tree_labels ? DotLabel::tree : DotLabel::reading);
    }
    if (c.format == "json") {
      return graph_json(g).dump(2) + "\n";
    }
    if (c.format == "tsv") {
      std::string out = "a\tb\tx\ty\n";
      for (auto const& e : g.edges()) {
        out += to_string(g.vertices()[e.a].reading()) + "\t"
               + to_string(g.vertices()[e.b].reading()) + "\t" + show(e.witness.x) + "\t"
               + show(e.witness.y) + "\n";
      }
      return out;
    }
    return "evaluation " + to_string(g.evaluation()) + "\nvertices "
           + std::to_string(g.vertex_count()) + "\nedges " + std::to_string(g.edge_count())
           + "\nparts " + std::to_string(g.parts().size()) + "\n";
  }

  std::string cmd_diameter(Config const& c) {
    ComponentGraph const g = graph_for(c);
    DiameterResult const d = diameter(g, c.jobs);
    if (c.format == "tsv") {
      return tsv_header() + "\n" + tsv_row(g, d) + "\n";
    }
    std::string const from = to_string(g.vertices()[d.from].reading());
    std::string const to   = to_string(g.vertices()[d.to].reading());
    if (c.format == "json") {
      return json{{"evaluation", to_string(g.evaluation())},
                  {"diameter", d.value},
                  {"from", from},
                  {"to", to}}
                 .dump(2)
             + "\n";
    }
    return std::to_string(d.value) + "\t" + from + "\t" + to + "\n";
  }

  std::string cmd_distance(Config const& c) {
    Word const        u    = parse_word(c.words.at(0));
    Word const        v    = parse_word(c.words.at(1));
    std::size_t const rank = rank_for(c, {u, v});
    Evaluation const  e    = evaluation(u, rank);
    if (e != evaluation(v, rank)) {
      throw InputError("the words have different evaluations, so lie in different classes");
    }
    ComponentGraph const g = component(e, limits(c));
    return std::to_string(distance(g, element_of(u, rank), element_of(v, rank))) + "\n";
  }

  std::string cmd_report(Config const& c) {
    std::size_t const rank = c.rank == 0 ? 3 : c.rank;
    std::string       out  = tsv_header() + "\n";
    for (std::size_t len = 1; len <= c.maxlen; ++len) {
      for (Evaluation const& e : evaluations(rank, len)) {
        progress("report: " + to_string(e));
        ComponentGraph const g = component(e, limits(c));
        out += tsv_row(g, diameter(g, c.jobs)) + "\n";
      }
    }
    return out;
  }

  std::string cmd_path(Config const& c) {
    Word const        t    = parse_word(c.words.at(0));
    Word const        u    = parse_word(c.words.at(1));
    std::size_t const rank = rank_for(c, {t, u});
    SylvElement const T    = element_of(t, rank);
    SylvElement const U    = element_of(u, rank);
    auto const        cert = shift_path(T, U);
    if (auto problem = check_certificate(cert, T, U)) {
      throw InternalError("certificate failed its own check: " + *problem);
    }
    if (c.format == "json") {
      return to_json(cert).dump(2) + "\n";
    }
    return transcript(cert);
  }

  std::string cmd_check(Config const& c) {
    std::ifstream in(c.file);
    if (!in) {
      throw InputError("cannot read " + c.file);
    }
    json j;
    try {
      j = json::parse(in);
    } catch (json::parse_error const& e) {
      throw InputError(std::string("not JSON: ") + e.what());
    }
    auto const cert = certificate_from_json(j);
    if (cert.size() == 0) {
      throw InputError("empty certificate");
    }
    auto const problem
        = check_certificate(cert, cert.steps.front().pre, cert.steps.back().post);
    if (problem) {
      std::cout << "invalid: " << *problem << '\n';
      throw VerificationFailed{};
    }
    return "valid: " + std::to_string(cert.size()) + " steps from "
           + to_string(cert.steps.front().pre.tree()) + " to "
           + to_string(cert.steps.back().post.tree()) + "\n";
  }

  std::string cmd_verify(Config const& c) {
    verify::Options opt;
    opt.rank     = c.rank == 0 ? 4 : c.rank;
    opt.maxlen   = c.maxlen;
    opt.n        = c.size;
    opt.limits   = limits(c);
    opt.budget   = c.budget;
    opt.progress = progress;
    std::vector<std::string> names = c.suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
      names.clear();
      for (auto n : verify::suite_names()) {
        names.emplace_back(n);
      }
    }
    std::string out;
    bool        failed = false;
    for (auto const& name : names) {
      verify::Report const r = verify::run(name, opt);
      out += (r.passed ? "PASS " : "FAIL ") + r.suite + "  " + r.detail + "\n";
      if (r.counterexample) {
        out += "  counterexample: " + *r.counterexample + "\n";
      }
      failed = failed || !r.passed;
    }
    if (failed) {
      std::cout << out;
      throw VerificationFailed{};
    }
    return out;
  }

  void add_rank(CLI::App* sub, Config& c) {
    sub->add_option("-n,--rank", c.rank, "Rank of the monoid (default: largest symbol)")
        ->check(CLI::PositiveNumber);
  }

  void add_format(CLI::App* sub, Config& c, std::vector<std::string> formats) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember(formats));
  }

  void add_graph(CLI::App* sub, Config& c) {
    sub->add_option("--eval", c.eval, "Evaluation c1,c2,... of the class");
    sub->add_flag("--standard", c.standard, "Use the class of standard words of size n");
    sub->add_option("--max-vertices", c.max_vertices, "Vertex cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }

  void add_readings_cap(CLI::App* sub, Config& c) {
    sub->add_option("--max-readings", c.max_readings, "Readings cap per tree")
        ->check(CLI::PositiveNumber);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylvester monoid toolkit: insertion, cocharge, cyclic shift graphs "
               "and shift path certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--out", c.out, "Write results to this file instead of standard output");

  std::function<std::string(Config const&)> action;
  auto command = [&](char const* name, char const* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* tree = command("tree", "Insert a word and print its tree", cmd_tree);
  tree->add_option("word", c.words, "Word")->required()->expected(1);
  tree->add_flag("--ascii", c.ascii, "Draw the tree sideways");
  add_format(tree, c, {"text", "json", "dot"});

  auto* coch = command("cochseq", "Cocharge sequence of a standard word", cmd_cochseq);
  coch->add_option("word", c.words, "Word")->required()->expected(1);
  add_format(coch, c, {"text", "json"});

  auto* ev = command("evaluation", "Symbol counts of a word", cmd_evaluation);
  ev->add_option("word", c.words, "Word")->required()->expected(1);
  add_rank(ev, c);

  auto* rd = command("readings", "All words inserting to the tree of a word", cmd_readings);
  rd->add_option("word", c.words, "Word")->required()->expected(1);
  add_readings_cap(rd, c);
  add_format(rd, c, {"text", "json"});

  auto* eq = command("equivalent", "Whether two words give the same element", cmd_equivalent);
  eq->add_option("words", c.words, "Two words")->required()->expected(2);
  eq->add_flag("--rewrite", c.rewrite, "Decide by rewriting with the defining relations");
  eq->add_option("--budget", c.budget, "Rewriting budget")->check(CLI::PositiveNumber);
  add_rank(eq, c);

  auto* mul = command("multiply", "Product of two elements", cmd_multiply);
  mul->add_option("words", c.words, "Two words")->required()->expected(2);
  add_rank(mul, c);

  auto* bd = command("bound", "Cocharge lower bound on the distance of two standard elements",
                     cmd_bound);
  bd->add_option("words", c.words, "Two standard words")->required()->expected(2);

  auto* nb = command("neighbors", "Cyclic shift neighbours of an element", cmd_neighbors);
  nb->add_option("word", c.words, "Word")->required()->expected(1);
  add_rank(nb, c);
  add_readings_cap(nb, c);
  add_format(nb, c, {"text", "json"});

  auto* comp = command("component", "Cyclic shift graph of one evaluation class",
                       cmd_component);
  add_rank(comp, c);
  add_graph(comp, c);
  add_readings_cap(comp, c);
  comp->add_flag("--tree-labels", c.tree_labels, "Label DOT vertices with full trees");
  add_format(comp, c, {"text", "json", "dot", "tsv"});

  auto* dia = command("diameter", "Diameter of one evaluation class", cmd_diameter);
  add_rank(dia, c);
  add_graph(dia, c);
  add_readings_cap(dia, c);
  add_format(dia, c, {"text", "json", "tsv"});

  auto* dist = command("distance", "Cyclic shift distance between two elements", cmd_distance);
  dist->add_option("words", c.words, "Two words")->required()->expected(2);
  add_rank(dist, c);
  dist->add_option("--max-vertices", c.max_vertices, "Vertex cap")
      ->check(CLI::PositiveNumber);
  dist->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_readings_cap(dist, c);

  auto* rep = command("report", "TSV of size and diameter for every evaluation class",
                      cmd_report);
  rep->add_option("-n,--rank", c.rank, "Rank (default 3)")->check(CLI::PositiveNumber);
  rep->add_option("--maxlen", c.maxlen, "Largest total length");
  rep->add_option("--max-vertices", c.max_vertices, "Vertex cap")
      ->check(CLI::PositiveNumber);
  rep->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_readings_cap(rep, c);

  auto* path = command("path", "n-step cyclic shift path between two standard elements",
                       cmd_path);
  path->add_option("words", c.words, "Standard words T and U")->required()->expected(2);
  add_format(path, c, {"text", "json"});

  auto* chk = command("check-path", "Re-check a JSON path certificate", cmd_check);
  chk->add_option("file", c.file, "Certificate file")->required();

  auto* ver = command("verify", "Run exhaustive verification suites", cmd_verify);
  std::vector<std::string> names{"all"};
  for (auto n : verify::suite_names()) {
    names.emplace_back(n);
  }
  ver->add_option("suites", c.suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(names));
  ver->add_option("--rank", c.rank, "Alphabet size for word suites (default 4)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--maxlen", c.maxlen, "Longest word for word suites");
  ver->add_option("--n", c.size, "Largest standard size for tree suites");
  ver->add_option("--budget", c.budget, "Rewriting budget")->check(CLI::PositiveNumber);
  ver->add_option("--max-vertices", c.max_vertices, "Vertex cap")
      ->check(CLI::PositiveNumber);
  ver->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_readings_cap(ver, c);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInput;
  }

  try {
    std::string const result = action(c);
    if (c.out.empty()) {
      std::cout << result;
    } else {
      std::ofstream f(c.out);
      if (!f || !(f << result)) {
        throw InputError("cannot write " + c.out);
      }
    }
    return kOk;
  } catch (VerificationFailed const&) {
    return kVerify;
  } catch (DisconnectedError const& e) {
    std::cerr << "sylv: " << e.what() << '\n';
    return kVerify;
  } catch (InputError const& e) {
    std::cerr << "sylv: " << e.what() << '\n';
    return kInput;
  } catch (CapExceeded const& e) {
    std::cerr << "sylv: " << e.what() << "; raise the limit with the matching flag\n";
    return kCap;
  } catch (std::exception const& e) {
    std::cerr << "sylv: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
