#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include "hypershell/lafont.hpp"
#include "hypershell/weakcat.hpp"

namespace hyper {

/// JSON documents ("*.hgx") with a mandatory kind tag and version.
inline constexpr int kDocumentVersion = 1;

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t offset) : std::runtime_error(what), offset(offset) {}
  std::size_t offset;
};
struct SchemaError : std::runtime_error {
  SchemaError(const std::string& what, std::string field) : std::runtime_error(what), field(std::move(field)) {}
  std::string field;
};
/// The document parsed but describes an invalid object.
struct InvalidDocument : std::runtime_error {
  InvalidDocument(const std::string& what, Report report) : std::runtime_error(what), report(std::move(report)) {}
  Report report;
};

/// A diagram of diagrams: each top label of `outer` names one entry of
/// `slots`; lower labels belong to the base hypergraph.
struct Outer {
  PastingDiagram outer;
  std::map<std::string, PastingDiagram> slots;
};

struct Document {
  /// shell, labeling, hypergraph, pd, net, trace, weakmodel or outer.
  std::string kind;
  std::variant<Shell, Labeling, Hypergraph, lafont::Net, lafont::Trace, WeakModel, Outer> value;
};

std::string render_doc(const Shell& s);
/// `kind` is "labeling" or "pd".
std::string render_doc(const Labeling& l, const std::string& kind = "labeling");
std::string render_doc(const Hypergraph& h);
std::string render_doc(const lafont::Net& n);
std::string render_doc(const lafont::Trace& t);
std::string render_doc(const WeakModel& m);
std::string render_doc(const Outer& o);

Document parse_doc(const std::string& text);

Document read_doc(const std::string& path);
void write_doc(const std::string& path, const std::string& text);

}  // namespace hyper
