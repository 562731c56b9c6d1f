#include "c2kit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "c2kit/bipartition.hpp"
#include "c2kit/c2.hpp"
#include "c2kit/errors.hpp"
#include "c2kit/positroid.hpp"
#include "c2kit/tduality.hpp"

namespace c2kit {

namespace {

using json = nlohmann::ordered_json;

// Unreadable files are usage errors rather than domain errors.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

// "0|1,2" -> {{0}, {1, 2}}.
VertexPartition parse_partition(const std::string& text) {
  VertexPartition p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) p.parts.push_back(parse_int_list(part, "partition"));
  if (!p.valid()) throw DomainError("partition '" + text + "' has empty or overlapping parts");
  return p;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Shared {
  std::string format = "text";
  bool signed_residues = false;
};

std::string show_residue(const C2Value& v, bool signed_only) {
  const long long s = v.signed_value();
  if (signed_only) return std::to_string(s);
  if (s != v.value) return std::to_string(v.value) + " (" + std::to_string(s) + ")";
  return std::to_string(v.value);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"c2kit: graph polynomials, c2-invariants, Le diagrams and T-duality"};
  app.require_subcommand(1);
  Shared sh;
  app.add_option("--format", sh.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--signed", sh.signed_residues, "Print residues in the signed range (-p/2, p/2]");

  std::function<void()> action;
  std::ostringstream text;
  json doc;

  // kirchhoff
  std::string graph_path;
  auto* kirchhoff_cmd = app.add_subcommand("kirchhoff", "Kirchhoff polynomial of a graph");
  kirchhoff_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  kirchhoff_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      const SparsePoly psi = kirchhoff(g);
      doc = {{"command", "kirchhoff"}, {"polynomial", psi.to_string()}, {"spanning_trees", psi.size()}};
      text << psi.to_string() << '\n';
    };
  });

  // dodgson
  std::string word_i, word_j, set_k;
  auto* dodgson_cmd = app.add_subcommand("dodgson", "Dodgson polynomial Psi^{I,J}_K");
  dodgson_cmd->add_option("graph", graph_path, "Graph file")->required();
  dodgson_cmd->add_option("--rows,-I", word_i, "Word I (comma separated edge ids)");
  dodgson_cmd->add_option("--cols,-J", word_j, "Word J (comma separated edge ids)");
  dodgson_cmd->add_option("--zero,-K", set_k, "Edges whose variables are set to zero");
  dodgson_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      DodgsonSpec spec{parse_int_list(word_i, "I"), parse_int_list(word_j, "J"), parse_int_list(set_k, "K")};
      const SparsePoly d = dodgson(g, spec);
      doc = {{"command", "dodgson"}, {"I", spec.I}, {"J", spec.J}, {"K", spec.K}, {"polynomial", d.to_string()}};
      text << d.to_string() << '\n';
    };
  });

  // forest
  std::string partition_text;
  auto* forest_cmd = app.add_subcommand("forest", "Spanning forest polynomial Phi^P");
  forest_cmd->add_option("graph", graph_path, "Graph file")->required();
  forest_cmd->add_option("--partition,-P", partition_text, "Vertex partition, e.g. 0|1,2")->required();
  forest_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      const VertexPartition p = parse_partition(partition_text);
      const SparsePoly f = spanning_forest_poly(g, p);
      doc = {{"command", "forest"}, {"partition", p.to_string()}, {"polynomial", f.to_string()}, {"forests", f.size()}};
      text << f.to_string() << '\n';
    };
  });

  // reduce
  std::string order_text;
  bool quadratic = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Denominator reduction trace");
  reduce_cmd->add_option("graph", graph_path, "Graph file")->required();
  reduce_cmd->add_option("--order", order_text, "Edge order (prefix; completed in increasing id order)");
  reduce_cmd->add_flag("--quadratic", quadratic, "Quadratic denominator reduction instead");
  reduce_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      const std::vector<int> order = parse_int_list(order_text, "order");
      const ReductionTrace tr = quadratic ? quadratic_reduce(g, order) : denominator_reduce(g, order);
      doc = {{"command", "reduce"}, {"kind", quadratic ? "quadratic" : "standard"}, {"order", tr.edge_order}};
      json stages = json::array();
      text << "order: " << join(tr.edge_order) << '\n';
      for (const ReductionStage& st : tr.stages) {
        stages.push_back({{"n", st.n}, {"remaining", st.remaining}, {"perfect_square", st.perfect_square},
                          {"polynomial", st.poly.to_string()}});
        text << "n=" << st.n << " [" << join(st.remaining) << "]" << (st.perfect_square ? " (square)" : "") << ": "
             << st.poly.to_string() << '\n';
      }
      doc["stages"] = stages;
      doc["status"] = to_string(tr.status);
      text << "status: " << to_string(tr.status) << '\n';
    };
  });

  // c2
  std::string method = "all", primes_text = "2,3,5", triple_text;
  auto* c2_cmd = app.add_subcommand("c2", "c2-invariant at small primes");
  c2_cmd->add_option("graph", graph_path, "Graph file")->required();
  c2_cmd->add_option("--method", method, "def|denom|coeff|legendre|all")
      ->check(CLI::IsMember({"def", "definition", "denom", "denominator", "coeff", "coefficient", "legendre", "all"}));
  c2_cmd->add_option("--primes", primes_text, "Comma separated primes");
  c2_cmd->add_option("--order", order_text, "Edge order for the reduction routes");
  c2_cmd->add_option("--triple", triple_text, "Edge triple e1,e2,e3 for the coefficient route");
  c2_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      const std::vector<int> primes = parse_int_list(primes_text, "primes");
      const std::vector<int> order = parse_int_list(order_text, "order");
      std::array<int, 3> triple{1, 2, 3};
      if (!triple_text.empty()) {
        const std::vector<int> t = parse_int_list(triple_text, "triple");
        if (t.size() != 3) throw UsageError("--triple needs exactly three edges");
        triple = {t[0], t[1], t[2]};
      }
      doc = {{"command", "c2"}};
      json rows = json::array();
      text << "p  method       c2\n";
      bool all_agree = true;
      for (int p : primes) {
        if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
        std::vector<C2Value> vals;
        if (method == "all") vals = c2_all(g, p, order);
        else if (method == "def" || method == "definition") vals = {c2_definition(g, p)};
        else if (method == "denom" || method == "denominator") vals = {c2_denom(g, p, order)};
        else if (method == "coeff" || method == "coefficient") vals = {c2_coeff(g, p, triple)};
        else vals = {c2_legendre(g, p, order)};
        for (const C2Value& v : vals) {
          if (!(v == vals.front())) all_agree = false;
          rows.push_back({{"p", p}, {"method", v.method}, {"value", v.value}, {"signed", v.signed_value()}});
          std::string name = v.method;
          name.resize(12, ' ');
          text << p << (p < 10 ? "  " : " ") << name << " " << show_residue(v, sh.signed_residues) << '\n';
        }
      }
      doc["results"] = rows;
      if (method == "all") {
        doc["agree"] = all_agree;
        text << "routes agree: " << (all_agree ? "yes" : "no") << '\n';
      }
    };
  });

  // completion-check
  auto* completion_cmd = app.add_subcommand("completion-check", "p = 2 completion check for a 4-regular graph");
  completion_cmd->add_option("graph", graph_path, "Graph file")->required();
  completion_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      const CompletionReport rep = verify_completion_p2(g);
      doc = {{"command", "completion-check"}};
      json vertices = json::array();
      text << "vertex  c2(counting)  c2(coefficient)\n";
      for (size_t v = 0; v < rep.c2_counts.size(); ++v) {
        vertices.push_back({{"vertex", v}, {"counting", rep.c2_counts[v]}, {"coefficient", rep.c2_coeff[v]}});
        text << v << "       " << rep.c2_counts[v] << "             " << rep.c2_coeff[v] << '\n';
      }
      doc["vertices"] = vertices;
      doc["all_equal"] = rep.all_equal();
      text << "all decompletions equal: " << (rep.all_equal() ? "yes" : "no") << '\n';
      if (rep.cases_skipped) text << "case analysis skipped: graph is not simple\n";
      doc["cases_skipped"] = rep.cases_skipped;
      json pairs = json::array();
      std::map<std::string, int> tags;
      for (const PairReport& pr : rep.pairs) {
        ++tags[to_string(pr.tag)];
        json pj = {{"v", pr.v}, {"w", pr.w}, {"case", to_string(pr.tag)}, {"ok", pr.ok()}};
        json checks = json::array();
        for (const ParityCheck& c : pr.parities) {
          checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok()}});
          if (!c.ok())
            text << "FAIL pair " << pr.v << "-" << pr.w << " parity " << c.name << ": " << c.lhs << " vs " << c.rhs
                 << '\n';
        }
        json invs = json::array();
        for (const InvolutionCheck& c : pr.involutions) {
          invs.push_back({{"name", c.name}, {"domain", c.domain_size}, {"involutive", c.involutive},
                          {"fixed_point_free", c.fixed_point_free}, {"closed", c.closed}, {"failures", c.failures}});
          if (!c.ok())
            text << "FAIL pair " << pr.v << "-" << pr.w << " involution " << c.name << ": " << c.failures << " of "
                 << c.domain_size << " elements\n";
        }
        pj["parities"] = checks;
        pj["involutions"] = invs;
        pairs.push_back(pj);
      }
      doc["pairs"] = pairs;
      text << "pairs:";
      for (const auto& [t, c] : tags) text << ' ' << t << '=' << c;
      text << '\n' << "result: " << (rep.ok() ? "ok" : "failed") << '\n';
      doc["ok"] = rep.ok();
    };
  });

  // dtr
  int dtr_edge = 0, dtr_vertex = -1;
  std::string dtr_primes = "2";
  auto* dtr_cmd = app.add_subcommand("dtr", "Double triangle reduction and c2 invariance check");
  dtr_cmd->add_option("graph", graph_path, "Graph file")->required();
  dtr_cmd->add_option("--edge,-e", dtr_edge, "Edge shared by exactly two triangles")->required();
  dtr_cmd->add_option("--vertex,-v", dtr_vertex, "Decompletion vertex (default: first surviving vertex)");
  dtr_cmd->add_option("--primes", dtr_primes, "Comma separated primes");
  dtr_cmd->callback([&] {
    action = [&] {
      const Multigraph g = read_graph_auto(read_input(graph_path));
      if (dtr_edge < 1 || dtr_edge > g.edge_count()) throw DomainError("unknown edge " + std::to_string(dtr_edge));
      const Multigraph reduced = double_triangle_reduce(g, dtr_edge);
      int v = dtr_vertex;
      if (v < 0)
        for (int x = 0; x < g.vertex_count() && v < 0; ++x)
          if (dtr_vertex_image(g, dtr_edge, x) >= 0) v = x;
      std::vector<long long> primes;
      for (int p : parse_int_list(dtr_primes, "primes")) primes.push_back(p);
      const bool same = dtr_invariance_check(g, dtr_edge, v, primes);
      doc = {{"command", "dtr"}, {"edge", dtr_edge}, {"vertex", v}, {"image", dtr_vertex_image(g, dtr_edge, v)},
             {"reduced", format_graph(reduced)}, {"invariant", same}};
      text << format_graph(reduced) << "c2(G - " << v << ") = c2(G' - " << dtr_vertex_image(g, dtr_edge, v)
           << "): " << (same ? "yes" : "no") << '\n';
    };
  });

  // le-perm
  std::string le_path;
  auto* le_perm_cmd = app.add_subcommand("le-perm", "Decorated permutation of a Le diagram");
  le_perm_cmd->add_option("diagram", le_path, "Le diagram file")->required();
  le_perm_cmd->callback([&] {
    action = [&] {
      const LeDiagram d = parse_le_diagram(read_input(le_path));
      if (!is_le(d)) throw DomainError("filling violates the Le condition");
      const DecoratedPermutation p = le_to_perm(d);
      doc = {{"command", "le-perm"}, {"permutation", format_permutation(p)}, {"dimension", cell_dimension(d)},
             {"anti_excedances", anti_excedances(p)}};
      text << format_permutation(p) << '\n';
    };
  });

  // perm-le
  std::string perm_text;
  auto* perm_le_cmd = app.add_subcommand("perm-le", "Le diagram of a decorated permutation");
  perm_le_cmd->add_option("permutation", perm_text, "Permutation such as 3,2_,5,1 or a file holding one")->required();
  perm_le_cmd->callback([&] {
    action = [&] {
      std::string source = perm_text;
      if (std::ifstream probe(perm_text); probe.good() && perm_text.find(',') == std::string::npos) source = read_input(perm_text);
      else if (perm_text == "-") source = read_input("-");
      const DecoratedPermutation p = parse_permutation(source);
      const LeDiagram d = perm_to_le(p);
      doc = {{"command", "perm-le"}, {"diagram", format_le_diagram(d)}, {"dimension", cell_dimension(d)}};
      text << format_le_diagram(d);
    };
  });

  // tduality
  bool show_lshapes = false;
  int steps = 1;
  auto* tdual_cmd = app.add_subcommand("tduality", "T-dual Le diagram by the fill algorithm");
  tdual_cmd->add_option("diagram", le_path, "Co-loopless Le diagram file")->required();
  tdual_cmd->add_flag("--show-lshapes", show_lshapes, "Print the L-shape decomposition");
  tdual_cmd->add_option("--steps", steps, "Number of applications")->check(CLI::PositiveNumber);
  tdual_cmd->callback([&] {
    action = [&] {
      const LeDiagram dhat = parse_le_diagram(read_input(le_path));
      if (!is_le(dhat)) throw DomainError("filling violates the Le condition");
      const TdualityIteration it = iterate_tduality(dhat, steps);
      if (it.diagrams.size() == 1) throw DomainError(it.reason);
      doc = {{"command", "tduality"}};
      json seq = json::array();
      for (size_t i = 1; i < it.diagrams.size(); ++i) {
        const LeDiagram& d = it.diagrams[i];
        const LeDiagram& src = it.diagrams[i - 1];
        const DecoratedPermutation p = le_to_perm(d);
        json step = {{"diagram", format_le_diagram(d)}, {"permutation", format_permutation(p)},
                     {"dimension", cell_dimension(d)}};
        if (steps > 1) text << "step " << i << ":\n";
        text << format_le_diagram(d) << "permutation: " << format_permutation(p) << '\n';
        if (show_lshapes) {
          const LShapeDecomposition dec = lshape_decompose(src, d);
          step["lshapes_ok"] = dec.ok();
          step["lshapes"] = format_lshapes(dec, d);
          text << format_lshapes(dec, d);
        }
        seq.push_back(step);
      }
      doc["steps"] = seq;
      if (it.stopped_early) {
        doc["stopped"] = it.reason;
        text << "stopped: " << it.reason << '\n';
      }
    };
  });

  // zigzag
  int loops = 3;
  auto* zigzag_cmd = app.add_subcommand("zigzag", "Zig-zag period coefficient");
  zigzag_cmd->add_option("--loops,-l", loops, "Loop order (>= 3)")->required();
  zigzag_cmd->callback([&] {
    action = [&] {
      const ZigzagCoefficient z = zigzag_period_coefficient(loops);
      doc = {{"command", "zigzag"}, {"loops", loops}, {"coefficient", z.value.get_str()}, {"weight", z.weight}};
      text << z.value.get_str() << " zeta(" << z.weight << ")\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return 1;
  }
  if (sh.format == "json") out << doc.dump(2) << '\n';
  else out << text.str();
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"c2kit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace c2kit
