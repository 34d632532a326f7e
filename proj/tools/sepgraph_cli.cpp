#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepgraph/expectation.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/hereditary.hpp"
#include "sepgraph/ktheory.hpp"
#include "sepgraph/leavitt.hpp"
#include "sepgraph/monoid.hpp"

using json = nlohmann::ordered_json;
using namespace sepgraph;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  bool json_out = false;
  bool auto_trivial = false;
  int threads = 1;
  long step_limit = 1'000'000;
  std::string builtin;
};

std::string fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SeparatedGraph make_builtin(const std::string& desc) {
  auto colon = desc.find(':');
  std::string name = desc.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(desc.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, ','))
      try {
        params.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError,
                    "bad builtin parameter '" + part + "'");
      }
  }
  auto arity = [&](size_t n) {
    if (params.size() != n)
      throw Error(ErrorKind::InvalidParameters,
                  "builtin '" + name + "' takes " + std::to_string(n) +
                      " parameter(s)");
  };
  if (name == "emn") {
    arity(2);
    return build_emn(params[0], params[1]);
  }
  if (name == "rose") {
    arity(1);
    return build_rose(params[0]);
  }
  if (name == "hbk") {
    arity(4);
    return build_hbk(params[0], params[1], params[2], params[3]);
  }
  throw Error(ErrorKind::UnknownSymbol, "no builtin named '" + name + "'");
}

struct Input {
  SeparatedGraph graph;
  std::string digest;
};

Input load_graph(const Options& o, const std::string& file) {
  if (!o.builtin.empty()) {
    SeparatedGraph g = make_builtin(o.builtin);
    return {g, fnv1a(serialize_graph(g))};
  }
  if (file.empty())
    throw Error(ErrorKind::IoError, "no input graph (give a file or --builtin)");
  std::string text = read_file(file);
  return {parse_graph(text, o.auto_trivial), fnv1a(text)};
}

json graph_metadata(const SeparatedGraph& g) {
  json blocks = json::array();
  for (int b = 0; b < g.block_count(); ++b)
    blocks.push_back(g.block_label(b));
  return {{"pivot_convention", "lexicographically last edge name in block"},
          {"block_order", blocks}};
}

void emit(const Options& o, const std::string& command,
          const std::string& digest, const json& metadata, const json& result,
          const std::string& text) {
  if (o.json_out) {
    json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {"input_digest", digest},
             {"metadata", metadata},
             {"result", result}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json element_json(const AlgebraElement& a, const SeparatedGraph& g) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back({{"monomial", monomial_str(m, g)}, {"coeff", c.str()}});
  return {{"terms", terms}, {"display", element_str(a, g)}};
}

json group_json(const AbelianGroupPresentation& p) {
  json factors = json::array();
  for (const BigInt& d : p.invariant_factors)
    factors.push_back(d.str());
  json gens = json::array();
  for (size_t i = 0; i < p.generator_labels.size(); ++i) {
    json coords = json::array();
    for (const BigInt& c : p.generator_images[i])
      coords.push_back(c.str());
    gens.push_back({{"label", p.generator_labels[i]}, {"image", coords}});
  }
  return {{"group", p.group_str()},
          {"rank", p.rank},
          {"invariant_factors", factors},
          {"generators", gens}};
}

std::string group_text(const AbelianGroupPresentation& p) {
  std::string s;
  for (size_t i = 0; i < p.generator_labels.size(); ++i) {
    s += "  [" + p.generator_labels[i] + "] -> (";
    for (size_t j = 0; j < p.generator_images[i].size(); ++j) {
      if (j)
        s += ", ";
      s += p.generator_images[i][j].str();
    }
    s += ")\n";
  }
  return s;
}

json set_json(const VertexSet& s) {
  json arr = json::array();
  for (const std::string& v : s)
    arr.push_back(v);
  return arr;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& v : s) {
    if (!first)
      out += ", ";
    out += v;
    first = false;
  }
  return out + "}";
}

int cmd_validate(const Options& o, const std::string& file) {
  Input in = load_graph(o, file);
  const SeparatedGraph& g = in.graph;
  json result{{"valid", true},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"blocks", g.block_count()},
              {"trivially_separated", g.is_trivially_separated()}};
  std::ostringstream text;
  text << "ok: " << g.vertex_count() << " vertices, " << g.edge_count()
       << " edges, " << g.block_count() << " blocks"
       << (g.is_trivially_separated() ? " (trivially separated)" : "") << "\n";
  emit(o, "validate", in.digest, graph_metadata(g), result, text.str());
  return 0;
}

int cmd_ktheory(const Options& o, const std::string& file) {
  Input in = load_graph(o, file);
  const SeparatedGraph& g = in.graph;
  KTheoryResult kt = k_theory(g);

  json k1_basis = json::array();
  for (const auto& vec : kt.k1_basis) {
    json coords = json::array();
    for (const BigInt& c : vec)
      coords.push_back(c.str());
    k1_basis.push_back(coords);
  }
  json result{{"k0", group_json(kt.k0)},
              {"k1", {{"rank", kt.k1_rank},
                      {"labels", kt.k1_labels},
                      {"basis", k1_basis}}}};

  std::ostringstream text;
  text << "K0 = " << kt.k0.group_str() << "\n" << group_text(kt.k0);
  text << "K1 = " << (kt.k1_rank == 0
                          ? std::string("0")
                          : kt.k1_rank == 1 ? std::string("Z")
                                            : "Z^" + std::to_string(kt.k1_rank))
       << "\n";
  for (const auto& vec : kt.k1_basis) {
    text << "  basis:";
    for (size_t j = 0; j < vec.size(); ++j)
      if (vec[j] != 0)
        text << " " << (vec[j] > 0 ? "+" : "") << vec[j].str() << " "
             << kt.k1_labels[j];
    text << "\n";
  }
  emit(o, "ktheory", in.digest, graph_metadata(g), result, text.str());
  return 0;
}

int cmd_hsat(const Options& o, const std::string& file, const std::string& mode,
             const std::vector<std::string>& verts) {
  Input in = load_graph(o, file);
  const SeparatedGraph& g = in.graph;
  if (mode == "list") {
    Lattice lat = enumerate_lattice(g);
    json sets = json::array();
    std::ostringstream text;
    text << lat.members.size() << " hereditary C-saturated sets\n";
    for (const VertexSet& s : lat.members) {
      sets.push_back(set_json(s));
      text << "  " << set_text(s) << "\n";
    }
    emit(o, "hsat", in.digest, graph_metadata(g),
         {{"count", lat.members.size()}, {"sets", sets}}, text.str());
    return 0;
  }
  if (mode == "close") {
    VertexSet s(verts.begin(), verts.end());
    for (const std::string& v : s)
      g.vertex_index(v); // existence check
    VertexSet cl = closure(g, s);
    emit(o, "hsat", in.digest, graph_metadata(g), {{"closure", set_json(cl)}},
         "closure: " + set_text(cl) + "\n");
    return 0;
  }
  throw Error(ErrorKind::SyntaxError, "hsat mode must be 'list' or 'close'");
}

int cmd_quotient(const Options& o, const std::string& file,
                 const std::vector<std::string>& verts) {
  Input in = load_graph(o, file);
  VertexSet h(verts.begin(), verts.end());
  SeparatedGraph q = quotient(in.graph, h);
  std::string text = serialize_graph(q);
  emit(o, "quotient", in.digest, graph_metadata(in.graph),
       {{"graph_file", text}}, text);
  return 0;
}

int cmd_nf(const Options& o, const std::string& file, const std::string& expr) {
  Input in = load_graph(o, file);
  RewriteOptions ro{Strategy::LeftmostInnermost, o.step_limit};
  AlgebraElement nf = parse_expr(expr, in.graph, ro);
  emit(o, "nf", in.digest, graph_metadata(in.graph),
       element_json(nf, in.graph), element_str(nf, in.graph) + "\n");
  return 0;
}

int cmd_expect(const Options& o, const std::string& file,
               const std::string& expr) {
  Input in = load_graph(o, file);
  ExpectationOptions eo;
  eo.rewrite.step_limit = o.step_limit;
  eo.eval_limit = o.step_limit;
  AlgebraElement a = parse_expr(expr, in.graph, eo.rewrite);
  VertexFunction phi = phi_sep(in.graph, a, eo);
  emit(o, "expect", in.digest, graph_metadata(in.graph),
       element_json(phi.as_element(), in.graph), phi.str(in.graph) + "\n");
  return 0;
}

int cmd_monoid(const Options& o, const std::string& file,
               const std::string& mode, const std::string& x,
               const std::string& y, long depth) {
  Input in = load_graph(o, file);
  const SeparatedGraph& g = in.graph;
  if (mode == "group") {
    AbelianGroupPresentation p = grothendieck_group(g);
    emit(o, "monoid", in.digest, graph_metadata(g), group_json(p),
         p.group_str() + "\n" + group_text(p));
    return 0;
  }
  if (mode == "eq") {
    if (x.empty() || y.empty())
      throw Error(ErrorKind::SyntaxError, "monoid eq needs two element literals");
    MonoidElement mx = parse_monoid_element(x, g);
    MonoidElement my = parse_monoid_element(y, g);
    Decision d = equal_bounded(g, mx, my, depth);
    std::string word = d == Decision::Yes ? "Yes"
                       : d == Decision::No ? "No"
                                           : "Unknown";
    emit(o, "monoid", in.digest, graph_metadata(g),
         {{"x", mx.str(g)}, {"y", my.str(g)}, {"depth", depth},
          {"decision", word}},
         word + "\n");
    return 0;
  }
  throw Error(ErrorKind::SyntaxError, "monoid mode must be 'eq' or 'group'");
}

int cmd_builtin(const Options& o, const std::string& desc) {
  SeparatedGraph g = make_builtin(desc);
  std::string text = serialize_graph(g);
  emit(o, "builtin", fnv1a(text), graph_metadata(g), {{"graph_file", text}},
       text);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of separated graphs and their algebras"};
  app.require_subcommand(1);

  Options o;
  app.add_flag("--json", o.json_out, "machine-readable output");
  app.add_flag("--auto-trivial", o.auto_trivial,
               "collect unassigned edges into one block per vertex");
  app.add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--step-limit", o.step_limit, "rewrite/evaluation step limit")
      ->check(CLI::PositiveNumber);
  app.add_option("--builtin", o.builtin,
                 "use a builtin graph (emn:m,n | rose:n | hbk:k,l,m,n) "
                 "instead of a file");

  std::vector<std::string> args;
  std::vector<std::string> verts;
  long depth = 64;

  // a graph file positional precedes the other arguments unless --builtin
  // supplies the graph, so positionals are sorted out after parsing
  auto* validate = app.add_subcommand("validate", "check a graph file");
  validate->add_option("args", args);

  auto* ktheory = app.add_subcommand("ktheory", "K-theory of the graph");
  ktheory->add_option("args", args);

  auto* hsat =
      app.add_subcommand("hsat", "hereditary C-saturated sets (list|close)");
  hsat->add_option("args", args);

  auto* quot = app.add_subcommand("quotient", "quotient by a vertex set");
  quot->add_option("args", args);
  quot->add_option("-H,--set", verts, "vertices of the hereditary set");

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("args", args);

  auto* expect = app.add_subcommand("expect", "conditional expectation");
  expect->add_option("args", args);

  auto* monoid = app.add_subcommand("monoid", "graph monoid (eq|group)");
  monoid->add_option("args", args);
  monoid->add_option("--depth", depth, "search depth for eq");

  auto* builtin = app.add_subcommand("builtin", "emit a builtin graph file");
  builtin->add_option("args", args);

  CLI11_PARSE(app, argc, argv);

  try {
    size_t i = 0;
    auto next = [&](const char* what) {
      if (i >= args.size())
        throw Error(ErrorKind::SyntaxError,
                    std::string("missing argument: ") + what);
      return args[i++];
    };
    std::string file;
    if (!builtin->parsed() && o.builtin.empty())
      file = next("graph file");

    if (validate->parsed())
      return cmd_validate(o, file);
    if (ktheory->parsed())
      return cmd_ktheory(o, file);
    if (hsat->parsed()) {
      std::string mode = next("list|close");
      return cmd_hsat(o, file, mode, {args.begin() + i, args.end()});
    }
    if (quot->parsed())
      return cmd_quotient(o, file, verts);
    if (nf->parsed())
      return cmd_nf(o, file, next("expression"));
    if (expect->parsed())
      return cmd_expect(o, file, next("expression"));
    if (monoid->parsed()) {
      std::string mode = next("eq|group");
      std::string x = mode == "eq" ? next("element") : "";
      std::string y = mode == "eq" ? next("element") : "";
      return cmd_monoid(o, file, mode, x, y, depth);
    }
    if (builtin->parsed())
      return cmd_builtin(o, next("builtin name"));
  } catch (const Error& e) {
    if (o.json_out) {
      json doc{{"schema_version", kSchemaVersion},
               {"error", {{"kind", error_kind_name(e.kind())},
                          {"message", e.what()}}}};
      std::cerr << doc.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return e.exit_code();
  }
  return 0;
}
