// kldn: command-line front end for the KL / cup diagram / decorated tangle library.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.

#include "kldn/kldn.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using namespace kldn;

enum class Format { Json, Ascii, Text };

struct Globals {
  std::optional<int> n;
  Format format = Format::Text;
  bool oracle = false;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int require_n(const Globals& g) {
  if (!g.n) throw UsageError("this command needs -n");
  if (*g.n < 1) throw UsageError("-n must be at least 1");
  return *g.n;
}

/// Sign strings and reduced words use disjoint alphabets, so either is
/// accepted wherever an element is expected.
PMSequence parse_element(const std::string& text, const Globals& g, const std::string& what) {
  const bool word = !text.empty() && text.find_first_not_of("0123456789,") == std::string::npos;
  try {
    if (word) {
      const std::vector<int> letters = parse_word(text);
      const int n = require_n(g);
      for (int i : letters)
        if (i >= n) throw ParseError("generator " + std::to_string(i) + " out of range for n = " + std::to_string(n), 0);
      return from_reduced_word(n, letters);
    }
    return PMSequence::parse(text, g.n);
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + e.reason(), e.position());
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

int element_size(const PMSequence& w, Globals& g) {
  if (!g.n) g.n = w.size();
  return w.size();
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_wp(Globals& g) {
  const int n = require_n(g);
  json rows = json::array();
  for (const PMSequence& w : enumerate_wp(n)) {
    if (g.format == Format::Json)
      rows.push_back({{"w", encode(w)}, {"length", length(w)}, {"word", reduced_word(w)}});
    else
      std::cout << w << "  length " << length(w) << "  word " << format_word(reduced_word(w)) << '\n';
  }
  if (g.format == Format::Json) print({{"n", n}, {"elements", rows}});
  return 0;
}

int cmd_word(Globals& g, const std::string& w_text) {
  const PMSequence w = parse_element(w_text, g, "-w");
  element_size(w, g);
  const SymYoungDiagram y = young_diagram(w);
  if (g.format == Format::Json) {
    print({{"w", encode(w)}, {"word", reduced_word(w)}, {"length", length(w)}, {"young_rows", y.rows()}});
    return 0;
  }
  std::cout << w << "  length " << length(w) << "  word " << format_word(reduced_word(w)) << '\n';
  if (g.format == Format::Ascii) std::cout << render_young(y);
  return 0;
}

int cmd_klpoly(Globals& g, const std::string& v_text, const std::string& w_text) {
  const PMSequence w = parse_element(w_text, g, "-w");
  element_size(w, g);
  const PMSequence v = parse_element(v_text, g, "-v");
  if (v.size() != w.size()) throw UsageError("-v and -w have different lengths");
  const LaurentPoly p = kl_poly_diagrammatic(v, w);
  std::optional<LaurentPoly> o;
  if (g.oracle) o = kl_table(w.size())->poly(v, w);
  if (g.format == Format::Json) {
    json j = {{"v", encode(v)}, {"w", encode(w)}, {"poly", encode(p)}};
    if (o) j["oracle"] = encode(*o);
    print(j);
  } else {
    std::cout << p;
    if (o) std::cout << "  (recursion: " << *o << ')';
    std::cout << '\n';
  }
  return o && !(*o == p) ? 1 : 0;
}

int cmd_klbasis(Globals& g, const std::string& w_text) {
  if (w_text.empty()) {
    const auto table = kl_table(require_n(g));
    if (g.format == Format::Json) {
      print(encode(*table));
      return 0;
    }
    for (const PMSequence& w : table->order) std::cout << w << "  ->  " << table->row(w).to_string() << '\n';
    return 0;
  }
  const PMSequence w = parse_element(w_text, g, "-w");
  element_size(w, g);
  const NModElement x = kl_basis(w);
  if (g.format == Format::Json) {
    json terms = json::array();
    for (const auto& [v, c] : x.coeffs()) terms.push_back({{"wprime", encode(v)}, {"poly", encode(c)}});
    print({{"w", encode(w)}, {"terms", terms}});
  } else {
    std::cout << x.to_string() << '\n';
  }
  return 0;
}

int cmd_cup(Globals& g, const std::string& w_text) {
  const PMSequence w = parse_element(w_text, g, "-w");
  element_size(w, g);
  const FullCupDiagram full = cup_diagram(w);
  const DecoratedCupDiagram d = decorated_cup(w);
  const auto ors = orientations_of(w);
  if (g.format == Format::Json) {
    json arcs = json::array(), linked = json::array(), orient = json::array();
    for (const Arc& a : full.arcs()) arcs.push_back({a.left, a.right});
    for (const auto& [x, y] : full.linked_pairs()) linked.push_back({{x.left, x.right}, {y.left, y.right}});
    for (const auto& o : ors) orient.push_back({{"v", encode(o.v)}, {"cl", o.cl}});
    print({{"w", encode(w)}, {"arcs", arcs}, {"linked_pairs", linked}, {"cut", encode(d)}, {"orientations", orient}});
    return 0;
  }
  std::cout << render_cup(d) << "arcs";
  for (const Arc& a : full.arcs()) std::cout << " (" << a.left << ',' << a.right << ')';
  std::cout << "\nlinked";
  if (full.linked_pairs().empty()) std::cout << " none";
  for (const auto& [x, y] : full.linked_pairs())
    std::cout << " {(" << x.left << ',' << x.right << "),(" << y.left << ',' << y.right << ")}";
  std::cout << "\noriented by";
  for (const auto& o : ors) std::cout << ' ' << o.v << ":q^" << o.cl / 2;
  std::cout << '\n';
  return 0;
}

int cmd_homdim(Globals& g, const std::string& w_text, const std::string& x_text) {
  if (w_text.empty() != x_text.empty()) throw UsageError("give both -w and -x, or neither");
  if (w_text.empty()) {
    const int n = require_n(g);
    if (g.format == Format::Json) {
      print(hom_matrix_json(n));
      return 0;
    }
    const auto all = enumerate_wp(n);
    for (const PMSequence& w : all) {
      std::cout << w;
      for (const PMSequence& x : all) std::cout << ' ' << hom_dim(w, x).get_str();
      std::cout << '\n';
    }
    std::cout << "total " << dim_endomorphism_algebra(n).get_str() << '\n';
    return 0;
  }
  const PMSequence w = parse_element(w_text, g, "-w");
  element_size(w, g);
  const PMSequence x = parse_element(x_text, g, "-x");
  if (x.size() != w.size()) throw UsageError("-w and -x have different lengths");
  const Integer d = hom_dim(w, x);
  if (g.format == Format::Json)
    print({{"w", encode(w)}, {"wprime", encode(x)}, {"dim", encode(d)}});
  else
    std::cout << d.get_str() << '\n';
  return 0;
}

int cmd_poincare(Globals& g) {
  const int n = require_n(g);
  json table = json::object();
  Integer total = 0;
  for (const PMSequence& w : enumerate_wp(n)) {
    const LaurentPoly p = graded_poincare(w);
    total += p.at_one();
    if (g.format == Format::Json)
      table[w.to_string()] = encode(p);
    else
      std::cout << w << "  " << p << '\n';
  }
  const Integer direct = dim_endomorphism_algebra(n);
  if (g.format == Format::Json)
    print({{"n", n}, {"table", table}, {"total", encode(total)}});
  else
    std::cout << "total " << total.get_str() << '\n';
  if (total != direct) {
    std::cerr << "total " << total.get_str() << " differs from the circle count " << direct.get_str() << '\n';
    return 1;
  }
  return 0;
}

int tl_n(const Globals& g) {
  const int n = require_n(g);
  if (n < 3) throw UsageError("tangle commands need n >= 3");
  return n;
}

int cmd_tl_basis(Globals& g) {
  const int n = tl_n(g);
  const auto basis = tlhat_basis(n);
  if (g.format == Format::Json) {
    json a = json::array();
    for (const auto& t : basis) a.push_back(encode(t));
    print({{"n", n}, {"basis", a}});
    return 0;
  }
  int k = 0;
  for (const auto& t : basis) std::cout << "#" << ++k << '\n' << render_tangle(t);
  return 0;
}

int cmd_tl_dim(Globals& g) {
  const int n = tl_n(g);
  const CellDatum cd(n);
  const std::size_t dim = tlhat_basis(n).size();
  json cells = json::object();
  for (int l : cd.lambdas()) cells[std::to_string(l)] = cd.M(l).size();
  if (g.format == Format::Json) {
    print({{"n", n}, {"dim", dim}, {"cell_module_dims", cells}});
  } else {
    std::cout << "dim " << dim << '\n';
    for (int l : cd.lambdas()) std::cout << "M(" << l << ") " << cd.M(l).size() << '\n';
  }
  return 0;
}

DecoratedTangle generator_arg(int n, int i) {
  if (i < 0 || i >= n) throw UsageError("-i must lie in 0.." + std::to_string(n - 1));
  return generator(n, GeneratorIndex(i));
}

int cmd_tl_act(Globals& g, int i, const std::string& w_text) {
  const PMSequence w = parse_element(w_text, g, "-w");
  element_size(w, g);
  const int n = w.size();
  if (n < 2) throw UsageError("tangle action needs n >= 2");
  const CupScalarPair r = act(generator_arg(n, i), decorated_cup(w));
  if (g.format == Format::Json) {
    json j = {{"w", encode(w)}, {"i", i}};
    if (r.is_zero()) {
      j["result"] = nullptr;
    } else {
      j["result"] = {{"coeff", encode(r.coeff)}, {"diagram", encode(*r.diagram)}, {"w", encode(sequence_of(*r.diagram))}};
    }
    print(j);
    return 0;
  }
  if (r.is_zero()) {
    std::cout << "0\n";
    return 0;
  }
  std::cout << '(' << r.coeff << ") * " << sequence_of(*r.diagram) << '\n';
  if (g.format == Format::Ascii) std::cout << render_cup(*r.diagram);
  return 0;
}

int cmd_tl_cell(Globals& g, std::optional<int> lambda, std::optional<int> i) {
  const int n = tl_n(g);
  const CellDatum cd(n);
  if (!lambda) {
    json cells = json::object();
    for (int l : cd.lambdas()) {
      json m = json::array();
      for (const auto& d : cd.M(l)) m.push_back(encode(sequence_of(d)));
      cells[std::to_string(l)] = m;
      if (g.format != Format::Json) {
        std::cout << "M(" << l << "):";
        for (const auto& d : cd.M(l)) std::cout << ' ' << sequence_of(d);
        std::cout << '\n';
      }
    }
    if (g.format == Format::Json) print({{"n", n}, {"cells", cells}});
    return 0;
  }
  const auto& m = cd.M(*lambda);
  if (!i) throw UsageError("give -i to print the action of a generator on M(lambda)");
  const TLElement x{{generator_arg(n, *i), LaurentPoly(1)}};
  Matrix<LaurentPoly> mat(m.size(), m.size());
  for (std::size_t col = 0; col < m.size(); ++col) {
    const CellVector v = cell_module_action(cd, *lambda, x, m[col]);
    for (std::size_t row = 0; row < m.size(); ++row)
      if (auto it = v.find(m[row]); it != v.end()) mat(row, col) = it->second;
  }
  if (g.format == Format::Json) {
    json basis = json::array();
    for (const auto& d : m) basis.push_back(encode(sequence_of(d)));
    print({{"n", n}, {"lambda", *lambda}, {"i", *i}, {"basis", basis}, {"matrix", encode(mat)}});
    return 0;
  }
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::cout << sequence_of(m[r]);
    for (std::size_t c = 0; c < m.size(); ++c) std::cout << "  " << mat(r, c);
    std::cout << '\n';
  }
  return 0;
}

int cmd_render(Globals& g, const std::string& kind, const std::string& w_text, const std::string& x_text,
               std::optional<int> i) {
  if (kind == "cup") {
    const PMSequence w = parse_element(w_text, g, "-w");
    const DecoratedCupDiagram d = decorated_cup(w);
    if (g.format == Format::Json) print(encode(d));
    else std::cout << render_cup(d);
    return 0;
  }
  if (kind == "tangle") {
    const int n = require_n(g);
    if (!i) throw UsageError("render tangle needs -i (a generator index)");
    const DecoratedTangle t = generator_arg(n, *i);
    if (g.format == Format::Json) print(encode(t));
    else std::cout << render_tangle(t);
    return 0;
  }
  if (kind == "circle") {
    const PMSequence w = parse_element(w_text, g, "-w");
    element_size(w, g);
    const PMSequence x = parse_element(x_text, g, "-x");
    if (x.size() != w.size()) throw UsageError("-w and -x have different lengths");
    const ColoredCircleDiagram d = circle_diagram(x, w);
    if (g.format == Format::Json) {
      json j = encode(d);
      j["hom_dim"] = encode(hom_dim(w, x));
      print(j);
    } else {
      std::cout << render_circles(d) << "hom dim " << hom_dim(w, x).get_str() << '\n';
    }
    return 0;
  }
  throw UsageError("render kind must be cup, tangle or circle");
}

int cmd_verify(Globals& g, const std::string& suite) {
  const int n = require_n(g);
  Report r;
  try {
    r = verify(suite, n);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (g.format == Format::Json) {
    print({{"suite", suite}, {"n", n}, {"passed", r.passed()}, {"checks", r.checks}, {"notes", r.notes}, {"failures", r.failures}});
  } else {
    for (const auto& s : r.notes) std::cout << s << '\n';
    for (const auto& s : r.failures) std::cout << "FAIL " << s << '\n';
    std::cout << (r.passed() ? "PASS" : "FAIL") << ' ' << suite << " n=" << n << " (" << r.checks << " checks, "
              << r.failures.size() << " failures)\n";
  }
  return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic Kazhdan-Lusztig polynomials of type (D_n, A_{n-1}) via cup, circle and tangle diagrams"};
  app.require_subcommand(1);
  Globals g;
  std::string format = "text";
  app.add_option("-n", g.n, "rank n");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "ascii", "text"}));
  app.add_flag("--oracle", g.oracle, "also print the Hecke recursion value");
  app.fallthrough();

  std::string w, v, x, kind, suite;
  int i_value = 0;
  std::optional<int> i, lambda;

  auto* wp = app.add_subcommand("wp", "list the coset representatives");
  auto* word = app.add_subcommand("word", "reduced word and Young diagram of an element");
  word->add_option("-w,-r", w, "element (sign string or reduced word)")->required();
  auto* klpoly = app.add_subcommand("klpoly", "KL polynomial n_{v,w} from the cup diagram");
  klpoly->add_option("-v", v, "lower element")->required();
  klpoly->add_option("-w,-r", w, "upper element")->required();
  auto* klbasis = app.add_subcommand("klbasis", "KL basis element, or the whole table");
  klbasis->add_option("-w,-r", w, "element");
  auto* cup = app.add_subcommand("cup", "cup diagram, its cut form and its orientations");
  cup->add_option("-w,-r", w, "element")->required();
  auto* homdim = app.add_subcommand("homdim", "Hom-space dimension, or the whole matrix");
  homdim->add_option("-w,-r", w, "cup element");
  homdim->add_option("-x", x, "cap element");
  auto* poincare = app.add_subcommand("poincare", "graded Poincare polynomials and dim E");
  auto* tl = app.add_subcommand("tl", "decorated tangle algebra");
  tl->require_subcommand(1);
  auto* tl_basis = tl->add_subcommand("basis", "basis of the quotient algebra");
  auto* tl_dim = tl->add_subcommand("dim", "dimension and cell module sizes");
  auto* tl_act = tl->add_subcommand("act", "act with e_i on the diagram of w");
  tl_act->add_option("-i", i_value, "generator index")->required();
  tl_act->add_option("-w,-r", w, "element")->required();
  auto* tl_cell = tl->add_subcommand("cell", "cell modules; with -l and -i, the action matrix");
  tl_cell->add_option("-l,--lambda", lambda, "number of through strands");
  tl_cell->add_option("-i", i, "generator index");
  auto* render = app.add_subcommand("render", "draw a cup diagram, generator tangle or circle diagram");
  render->add_option("kind", kind, "cup, tangle or circle")->required()->check(CLI::IsMember({"cup", "tangle", "circle"}));
  render->add_option("-w,-r", w, "element");
  render->add_option("-x", x, "cap element (circle)");
  render->add_option("-i", i, "generator index (tangle)");
  auto* verify_cmd = app.add_subcommand("verify", "run a cross-verification suite");
  verify_cmd->add_option("suite", suite, "kl, homdim, commute, cellular, faithful or all")
      ->required()
      ->check(CLI::IsMember({"kl", "homdim", "commute", "cellular", "faithful", "all"}));
  for (auto* sub : {wp, word, klpoly, klbasis, cup, homdim, poincare, tl, render, verify_cmd}) sub->fallthrough();
  for (auto* sub : {tl_basis, tl_dim, tl_act, tl_cell}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  g.format = format == "json" ? Format::Json : format == "ascii" ? Format::Ascii : Format::Text;

  try {
    if (*wp) return cmd_wp(g);
    if (*word) return cmd_word(g, w);
    if (*klpoly) return cmd_klpoly(g, v, w);
    if (*klbasis) return cmd_klbasis(g, w);
    if (*cup) return cmd_cup(g, w);
    if (*homdim) return cmd_homdim(g, w, x);
    if (*poincare) return cmd_poincare(g);
    if (*tl_basis) return cmd_tl_basis(g);
    if (*tl_dim) return cmd_tl_dim(g);
    if (*tl_act) return cmd_tl_act(g, i_value, w);
    if (*tl_cell) return cmd_tl_cell(g, lambda, i);
    if (*render) return cmd_render(g, kind, w, x, i);
    if (*verify_cmd) return cmd_verify(g, suite);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
