#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "hypershell/fixtures.hpp"
#include "hypershell/monad.hpp"
#include "hypershell/persist.hpp"
#include "hypershell/render.hpp"

namespace py = pybind11;
using namespace hyper;

namespace {

std::vector<std::pair<std::string, std::string>> issues(const Report& r) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& i : r.issues) out.emplace_back(i.clause, i.message);
  return out;
}

Labeling as_labeling(const Document& d) {
  if (auto* s = std::get_if<Shell>(&d.value)) return Labeling{*s, {}};
  if (auto* l = std::get_if<Labeling>(&d.value)) return *l;
  if (auto* t = std::get_if<lafont::Trace>(&d.value)) return t->pd;
  throw py::value_error("expected a shell, labeling, pd or trace document, got " + d.kind);
}

}  // namespace

PYBIND11_MODULE(_hypershell, m) {
  m.doc() = "Hypergraph shells, pasting diagrams and hypercategories";

  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<InvalidDocument>(m, "InvalidDocument", PyExc_ValueError);

  m.def("document_kind", [](const std::string& text) { return parse_doc(text).kind; },
        "Parse and validate a document, returning its kind.");

  m.def("fixture", [](const std::string& name) {
    std::ostringstream out, err;
    if (cli::run({"fixtures", "emit", name}, out, err) != 0) throw py::value_error(err.str());
    return out.str();
  });

  m.def("close", [](const std::string& text) {
    Document d = parse_doc(text);
    if (!std::holds_alternative<Shell>(d.value)) throw py::value_error("expected a shell document");
    return render_doc(close(std::get<Shell>(d.value)).closed);
  });

  m.def("is_closed", [](const std::string& text) { return is_closed(as_labeling(parse_doc(text)).shell); });

  m.def("canonical_code", [](const std::string& text) {
    return py::bytes(labeling_code(as_labeling(parse_doc(text)), 1u << 20));
  });

  m.def("render_dot", [](const std::string& text, const std::string& style, int threshold) {
    Document d = parse_doc(text);
    if (auto* n = std::get_if<lafont::Net>(&d.value)) return render_net_dot(*n);
    Labeling l = as_labeling(d);
    if (style == "tree") return render_tree_dot(l);
    if (style == "link") return render_link_dot(l, threshold < 0 ? l.shell.dim - 1 : threshold);
    throw py::value_error("style must be tree or link");
  }, py::arg("text"), py::arg("style") = "tree", py::arg("threshold") = -1);

  m.def("monad_laws", [](int dim, int cases, std::uint64_t seed, const std::string& variant) {
    static const std::map<std::string, LawVariant> variants{
        {"full", LawVariant::full}, {"acircuit", LawVariant::acircuit}, {"acyclic", LawVariant::acyclic}};
    auto it = variants.find(variant);
    if (it == variants.end()) throw py::value_error("unknown variant " + variant);
    LawOutcome o;
    {
      py::gil_scoped_release release;
      o = check_monad_laws(seed, dim, cases, it->second);
    }
    return py::make_tuple(o.passed, o.cases, issues(o.report));
  }, py::arg("dim"), py::arg("cases"), py::arg("seed"), py::arg("variant") = "full");

  m.def("lafont", [](const std::string& op, int a, int b, const std::string& strategy, std::uint64_t seed) {
    if (op != "add" && op != "mul") throw py::value_error("op must be add or mul");
    auto r = lafont::reduce(op == "add" ? lafont::add_net(a, b) : lafont::mul_net(a, b),
                            strategy == "random" ? lafont::Strategy::random : lafont::Strategy::leftmost, 1000000, seed);
    py::dict out;
    out["result"] = lafont::decode_number(r.net);
    out["steps"] = r.trace.steps.size();
    out["normal"] = r.normal;
    out["net"] = render_doc(r.net);
    out["trace"] = render_doc(r.trace);
    return out;
  }, py::arg("op"), py::arg("m"), py::arg("n"), py::arg("strategy") = "leftmost", py::arg("seed") = 0);

  m.def("weak_check", [](const std::string& text, int max_chain, int budget) {
    Document d = parse_doc(text);
    if (!std::holds_alternative<WeakModel>(d.value)) throw py::value_error("expected a weakmodel document");
    const auto& w = std::get<WeakModel>(d.value);
    py::dict out;
    out["H1"] = issues(check_H1(w, max_chain, budget).report);
    out["H2"] = issues(check_H2(w).report);
    out["H3"] = issues(check_H3(w, max_chain, budget).report);
    out["weakness"] = issues(check_weakness(w, max_chain, budget).report);
    return out;
  }, py::arg("text"), py::arg("max_chain") = 3, py::arg("budget") = 100000);

  m.def("derive_category", [](const std::string& text) {
    Document d = parse_doc(text);
    if (!std::holds_alternative<WeakModel>(d.value)) throw py::value_error("expected a weakmodel document");
    DerivedCategory c = derive_category(std::get<WeakModel>(d.value));
    py::dict out;
    out["objects"] = c.category.objects;
    out["arrows"] = c.category.arrows;
    out["identity"] = c.category.identity;
    out["compose"] = c.category.compose;
    out["issues"] = issues(c.report);
    return out;
  });
}
