#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <set>

#include "hypershell/fixtures.hpp"
#include "hypershell/monad.hpp"
#include "hypershell/persist.hpp"
#include "hypershell/render.hpp"

namespace hyper::cli {
namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
T expect(const Document& d, const std::string& path, const std::string& what) {
  if (!std::holds_alternative<T>(d.value)) throw Usage(path + ": expected a " + what + " document, found " + d.kind);
  return std::get<T>(d.value);
}

Document load(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw Usage("cannot open " + path);
  return read_doc(path);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_doc(path, text);
}

void fail_on(const Report& r, const std::string& what) {
  if (!r.ok()) throw Failure(what + ":\n" + r.str());
}

// ---- subcommands

int do_validate(const std::string& file, const std::string& hyper_file, std::ostream& out) {
  Document d = load(file);
  if (d.kind == "pd" || d.kind == "labeling") {
    if (!hyper_file.empty()) {
      Hypergraph h = expect<Hypergraph>(load(hyper_file), hyper_file, "hypergraph");
      const auto& l = std::get<Labeling>(d.value);
      fail_on(validate_labeling(l, h.labels()), file);
      std::string why;
      if (d.kind == "pd" && !coherent(h, l, &why)) throw Failure(file + ":\n[coherent] " + why + "\n");
    }
  } else if (d.kind == "net") {
    auto pd = lafont::to_pd(std::get<lafont::Net>(d.value));
    std::string why;
    if (!coherent(lafont::signature(), pd, &why)) throw Failure(file + ":\n[coherent] " + why + "\n");
  } else if (d.kind == "trace") {
    const auto& t = std::get<lafont::Trace>(d.value);
    std::string why;
    if (!t.steps.empty() && !coherent(lafont::signature(), t.pd, &why)) throw Failure(file + ":\n[coherent] " + why + "\n");
  } else if (d.kind == "weakmodel") {
    Report r;
    is_of_type_sigma(std::get<WeakModel>(d.value), &r);
    fail_on(r, file);
  }
  out << "ok: " << d.kind << "\n";
  return 0;
}

int do_close(const std::string& file, const std::string& output, std::ostream& out) {
  Shell s = expect<Shell>(load(file), file, "shell");
  if (is_closed(s)) throw Failure(file + ": shell is already closed");
  ClosureResult r = close(s);
  fail_on(validate_shell(r.closed), "closure");
  emit(render_doc(r.closed), output, out);
  return 0;
}

int do_compose(const std::string& file, const std::string& hyper_file, const std::string& output, std::ostream& out) {
  auto pd = expect<Labeling>(load(file), file, "pd");
  Hypergraph h = expect<Hypergraph>(load(hyper_file), hyper_file, "hypergraph");
  std::string why;
  if (!coherent(h, pd, &why)) throw Failure(file + ":\n[coherent] " + why + "\n");
  FormalComposite fc = formal_composite(h, pd);
  if (output.empty()) {
    out << "composite: " << node_count(fc.labeling.shell) << " components, cap at child " << fc.closure.cap << "\n";
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
    for (unsigned char ch : labeling_code(fc.labeling, 1u << 20)) hash = (hash ^ ch) * 1099511628211ull;
    out << "code: " << std::hex << hash << std::dec << "\n";
  } else {
    write_doc(output, render_doc(fc.labeling, "labeling"));
  }
  return 0;
}

int do_flatten(const std::string& file, const std::string& hyper_file, const std::string& output, std::ostream& out) {
  Outer o = expect<Outer>(load(file), file, "outer");
  Hypergraph h = expect<Hypergraph>(load(hyper_file), hyper_file, "hypergraph");
  Lifted L(h);
  std::map<std::string, std::string> names;
  for (const auto& [name, pd] : o.slots) {
    std::string why;
    if (!coherent(h, pd, &why)) throw Failure("slot " + name + ":\n[coherent] " + why + "\n");
    names[name] = L.intern(pd);
  }
  PastingDiagram outer = o.outer;
  for (int t = 0; t < static_cast<int>(outer.shell.children.size()); ++t) {
    auto it = outer.labels.find({t});
    if (it == outer.labels.end()) throw Failure(file + ": top component " + std::to_string(t) + " is unlabeled");
    auto n = names.find(it->second);
    if (n == names.end()) throw Failure(file + ": no slot named " + it->second);
    it->second = n->second;
  }
  std::string why;
  if (!coherent(L.hypergraph(), outer, &why)) throw Failure(file + ":\n[coherent] " + why + "\n");
  emit(render_doc(flatten(L, outer), "pd"), output, out);
  return 0;
}

int do_laws(int dim, int cases, std::uint64_t seed, const std::string& variant, std::ostream& out) {
  static const std::map<std::string, LawVariant> variants{
      {"full", LawVariant::full}, {"acircuit", LawVariant::acircuit}, {"acyclic", LawVariant::acyclic}};
  LawOutcome o = check_monad_laws(seed, dim, cases, variants.at(variant));
  out << "monad laws: " << o.passed << "/" << o.cases << (o.report.ok() ? " ok" : " FAILED") << "\n";
  fail_on(o.report, "monad laws");
  return 0;
}

int do_lafont(const std::string& op, int m, int n, const std::string& strategy, std::uint64_t seed,
              const std::string& trace_file, const std::string& dot_file, std::ostream& out) {
  lafont::Net start = op == "add" ? lafont::add_net(m, n) : lafont::mul_net(m, n);
  auto r = lafont::reduce(start, strategy == "random" ? lafont::Strategy::random : lafont::Strategy::leftmost, 1000000, seed);
  if (!r.normal) throw Failure("reduction ran out of fuel");
  auto value = lafont::decode_number(r.net);
  if (!value) throw Failure("normal form is not a numeral");
  out << "result: " << *value << "\n" << "steps: " << r.trace.steps.size() << "\n";
  if (!trace_file.empty()) write_doc(trace_file, render_doc(r.trace));
  if (!dot_file.empty()) write_doc(dot_file, render_net_dot(r.net));
  return 0;
}

int do_weak_check(const std::string& file, int chain, int budget, std::ostream& out) {
  WeakModel m = expect<WeakModel>(load(file), file, "weakmodel");
  bool ok = true;
  auto line = [&](const std::string& name, const AxiomReport& a) {
    out << name << ": " << (a.report.ok() ? "ok" : "FAILED") << " (" << a.examined << " examined"
        << (a.exhausted ? ", budget exhausted" : "") << ")\n";
    if (!a.report.ok()) out << a.report.str();
    ok = ok && a.report.ok() && !a.exhausted;
  };
  Report typing;
  const bool sigma = is_of_type_sigma(m, &typing);
  out << "type: " << (sigma ? "ok" : "FAILED") << "\n" << typing.str();
  ok = ok && sigma;
  line("H1", check_H1(m, chain, budget));
  line("H2", check_H2(m));
  line("H3", check_H3(m, chain, budget));
  line("weakness", check_weakness(m, chain, budget));
  return ok ? 0 : 1;
}

int do_weak_derive(const std::string& file, std::ostream& out) {
  WeakModel m = expect<WeakModel>(load(file), file, "weakmodel");
  DerivedCategory d = derive_category(m);
  const auto& c = d.category;
  out << "objects:";
  for (const auto& o : c.objects) out << " " << o;
  out << "\n";
  for (const auto& [f, ends] : c.arrows) out << "arrow " << f << ": " << ends.first << " -> " << ends.second << "\n";
  for (const auto& [o, id] : c.identity) out << "identity " << o << " = " << id << "\n";
  for (const auto& [gf, h] : c.compose) out << gf.first << " . " << gf.second << " = " << h << "\n";
  if (!d.report.ok()) {
    out << d.report.str();
    return 1;
  }
  out << "category laws: ok\n";
  return 0;
}

int do_render(const std::string& file, const std::string& style, int conceal, const std::string& output,
              std::ostream& out) {
  Document d = load(file);
  std::string dot;
  if (auto* n = std::get_if<lafont::Net>(&d.value)) {
    dot = render_net_dot(*n);
  } else {
    Labeling l;
    if (auto* s = std::get_if<Shell>(&d.value)) l.shell = *s;
    else if (auto* lab = std::get_if<Labeling>(&d.value)) l = *lab;
    else if (auto* t = std::get_if<lafont::Trace>(&d.value)) l = t->pd;
    else throw Usage(file + ": cannot render a " + d.kind + " document");
    if (style == "tree") {
      dot = render_tree_dot(l);
    } else {
      const int threshold = conceal < 0 ? l.shell.dim - 1 : conceal;
      if (threshold < 1 || threshold >= l.shell.dim) throw Usage("--conceal must lie in [1, dim)");
      dot = render_link_dot(l, threshold);
    }
  }
  emit(dot, output, out);
  return 0;
}

std::string fixture_doc(const std::string& name) {
  if (name == "tetrahedron") return render_doc(fixtures::tetrahedron());
  if (name == "triangle-fan") return render_doc(fixtures::open_triangle_fan());
  if (name == "three-arrow-pd") return render_doc(fixtures::three_arrow_pd(), "pd");
  if (name == "three-arrow-hypergraph") return render_doc(fixtures::three_arrow_hypergraph());
  if (name == "poset-chain-4") return render_doc(fixtures::weak_model(fixtures::chain_poset(4)));
  if (name == "monoid-3") return render_doc(fixtures::weak_model(fixtures::cyclic_monoid(3)));
  if (name == "lafont-signature") return render_doc(lafont::signature());
  throw Usage("unknown fixture " + name);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"tetrahedron",   "triangle-fan", "three-arrow-pd", "three-arrow-hypergraph",
                                              "poset-chain-4", "monoid-3",     "lafont-signature"};
  return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph shells, pasting diagrams and hypercategories", "hgx"};
  app.require_subcommand(1);

  std::string file, hyper_file, output, variant = "full", style = "tree", strategy = "leftmost";
  std::string trace_file, dot_file, fixture;
  int dim = 1, cases = 100, m = 0, n = 0, budget = 100000, chain = 3, conceal = -1;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Parse and validate a document");
  validate->add_option("file", file)->required();
  validate->add_option("--hypergraph", hyper_file, "Check a labeling or diagram against this hypergraph");

  auto* close_cmd = app.add_subcommand("close", "Close an open shell");
  close_cmd->add_option("file", file)->required();
  close_cmd->add_option("-o,--output", output);

  auto* compose = app.add_subcommand("compose", "Formal composite of a pasting diagram");
  compose->add_option("file", file)->required();
  compose->add_option("--hypergraph", hyper_file)->required();
  compose->add_option("-o,--output", output, "Write the composite labeling here");

  auto* flatten_cmd = app.add_subcommand("flatten", "Substitute the slots of an outer diagram");
  flatten_cmd->add_option("file", file)->required();
  flatten_cmd->add_option("--hypergraph", hyper_file)->required();
  flatten_cmd->add_option("-o,--output", output);

  auto* laws = app.add_subcommand("laws", "Check the monad laws on seeded random diagrams");
  laws->add_option("--dim", dim)->required()->check(CLI::Range(0, 2));
  laws->add_option("--cases", cases)->required()->check(CLI::PositiveNumber);
  laws->add_option("--seed", seed)->required();
  laws->add_option("--variant", variant)->check(CLI::IsMember({"full", "acircuit", "acyclic"}));

  auto* lafont_cmd = app.add_subcommand("lafont", "Reduce an arithmetic interaction net");
  lafont_cmd->require_subcommand(1);
  std::string op;
  for (const char* name : {"add", "mul"}) {
    auto* sub = lafont_cmd->add_subcommand(name, std::string(name) == "add" ? "m + n" : "m * n");
    sub->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--trace", trace_file, "Write the reduction trace");
    sub->add_option("--dot", dot_file, "Write the normal form as DOT");
    sub->add_option("--strategy", strategy)->check(CLI::IsMember({"leftmost", "random"}));
    sub->add_option("--seed", seed);
    sub->callback([&op, name] { op = name; });
  }

  auto* weak = app.add_subcommand("weak", "Weak hypercategory models");
  weak->require_subcommand(1);
  auto* weak_check = weak->add_subcommand("check", "Check H1, H2, H3 and weakness");
  weak_check->add_option("file", file)->required();
  weak_check->add_option("--budget", budget)->check(CLI::PositiveNumber);
  weak_check->add_option("--chain", chain, "Longest chain enumerated")->check(CLI::PositiveNumber);
  auto* weak_derive = weak->add_subcommand("derive-category", "Read off the underlying category");
  weak_derive->add_option("file", file)->required();

  auto* render = app.add_subcommand("render", "Render a document as Graphviz DOT");
  render->add_option("file", file)->required();
  render->add_option("--style", style)->check(CLI::IsMember({"tree", "link"}));
  render->add_option("--conceal", conceal, "Hide components below this dimension (link style)");
  render->add_option("-o,--output", output);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in example documents");
  fixtures_cmd->require_subcommand(1);
  auto* emit_cmd = fixtures_cmd->add_subcommand("emit", "Write a fixture document");
  emit_cmd->add_option("name", fixture)->required()->check(CLI::IsMember(fixture_names()));
  emit_cmd->add_option("-o,--output", output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*validate) return do_validate(file, hyper_file, out);
    if (*close_cmd) return do_close(file, output, out);
    if (*compose) return do_compose(file, hyper_file, output, out);
    if (*flatten_cmd) return do_flatten(file, hyper_file, output, out);
    if (*laws) return do_laws(dim, cases, seed, variant, out);
    if (*lafont_cmd) return do_lafont(op, m, n, strategy, seed, trace_file, dot_file, out);
    if (*weak_check) return do_weak_check(file, chain, budget, out);
    if (*weak_derive) return do_weak_derive(file, out);
    if (*render) return do_render(file, style, conceal, output, out);
    if (*emit_cmd) {
      emit(fixture_doc(fixture), output, out);
      return 0;
    }
  } catch (const Usage& e) {
    err << "hgx: " << e.what() << "\n";
    return 2;
  } catch (const InvalidDocument& e) {
    err << "hgx: " << e.what();
    return 1;
  } catch (const SchemaError& e) {
    err << "hgx: schema error in field " << e.field << ": " << e.what() << "\n";
    return 1;
  } catch (const SyntaxError& e) {
    err << "hgx: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "hgx: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hyper::cli
