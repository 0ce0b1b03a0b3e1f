#include "hypershell/render.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hyper {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string node_id(const Path& p) {
  std::string out = "n";
  for (int i : p) out += "_" + std::to_string(i);
  return out;
}

std::string tree_dot(const Shell& s, const std::map<Path, std::string>* labels) {
  std::ostringstream out;
  out << "digraph shell {\n  node [shape=circle, fontsize=10];\n";
  for (const auto& p : node_paths(s)) {
    std::string text = p.empty() ? "root" : path_str(p);
    if (labels)
      if (auto it = labels->find(p); it != labels->end()) text += "\\n" + it->second;
    out << "  " << node_id(p) << " [label=" << quote(text) << "];\n";
  }
  for (const auto& p : node_paths(s))
    if (!p.empty()) out << "  " << node_id(Path(p.begin(), p.end() - 1)) << " -> " << node_id(p) << ";\n";
  for (const auto& lp : linked_pairs(s))
    out << "  " << node_id(lp.x) << " -> " << node_id(lp.y) << " [style=dashed, dir=none, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string link_dot(const Shell& s, int threshold, const std::map<Path, std::string>* labels) {
  if (threshold < 1 || threshold >= s.dim) throw std::invalid_argument("render_link_dot: threshold must be in [1, dim)");
  std::ostringstream out;
  out << "digraph links {\n  node [shape=box, fontsize=10];\n";
  auto shown = [&](const Path& p) { return !p.empty() && component_dim(s, p) >= threshold; };
  auto text_of = [&](const Path& p) {
    if (labels)
      if (auto it = labels->find(p); it != labels->end()) return it->second;
    return path_str(p);
  };
  for (const auto& p : node_paths(s))
    if (shown(p)) out << "  " << node_id(p) << " [label=" << quote(text_of(p)) << "];\n";
  for (const auto& p : node_paths(s)) {
    if (!shown(p)) continue;
    Path parent(p.begin(), p.end() - 1);
    if (shown(parent)) out << "  " << node_id(parent) << " -> " << node_id(p) << ";\n";
  }
  for (const auto& lp : linked_pairs(s)) {
    const int d = component_dim(s, lp.x);
    if (d >= threshold) {
      out << "  " << node_id(lp.x) << " -> " << node_id(lp.y) << " [style=dashed, dir=none];\n";
    } else if (d == threshold - 1) {
      Path a(lp.x.begin(), lp.x.end() - 1), b(lp.y.begin(), lp.y.end() - 1);
      out << "  " << node_id(a) << " -> " << node_id(b) << " [dir=none, label=" << quote(text_of(lp.x)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---- a small DOT reader

class DotReader {
 public:
  explicit DotReader(const std::string& s) : s_(s) {}

  DotCounts run() {
    word("digraph");
    skip();
    if (peek() != '{') id();
    expect('{');
    while (true) {
      skip();
      if (peek() == '}') break;
      statement();
    }
    expect('}');
    skip();
    if (i_ != s_.size()) fail("trailing text");
    return counts_;
  }

  std::size_t pos() const { return i_; }

 private:
  void statement() {
    std::string first = id();
    skip();
    if (peek() == '=') {
      ++i_;
      id();
    } else if (s_.compare(i_, 2, "->") == 0) {
      while (s_.compare(i_, 2, "->") == 0) {
        i_ += 2;
        id();
        ++counts_.edges;
        skip();
      }
      if (peek() == '[') attributes();
    } else {
      if (first != "node" && first != "edge" && first != "graph") ++counts_.nodes;
      if (peek() == '[') attributes();
    }
    expect(';');
  }

  void attributes() {
    expect('[');
    skip();
    while (peek() != ']') {
      id();
      expect('=');
      id();
      skip();
      if (peek() == ',') ++i_;
      skip();
    }
    expect(']');
  }

  std::string id() {
    skip();
    std::string out;
    if (peek() == '"') {
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\') ++i_;
        if (i_ < s_.size()) out.push_back(s_[i_++]);
      }
      if (i_ >= s_.size()) fail("unterminated string");
      ++i_;
      return out;
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.'))
      out.push_back(s_[i_++]);
    if (out.empty()) fail("identifier expected");
    return out;
  }

  void word(const std::string& w) {
    if (id() != w) fail("'" + w + "' expected");
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("'") + c + "' expected");
    ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error(why + " at byte " + std::to_string(i_));
  }

  const std::string& s_;
  std::size_t i_ = 0;
  DotCounts counts_;
};

}  // namespace

std::string render_tree_dot(const Shell& s) { return tree_dot(s, nullptr); }
std::string render_tree_dot(const Labeling& l) { return tree_dot(l.shell, &l.labels); }
std::string render_link_dot(const Shell& s, int threshold) { return link_dot(s, threshold, nullptr); }
std::string render_link_dot(const Labeling& l, int threshold) { return link_dot(l.shell, threshold, &l.labels); }

std::string render_net_dot(const lafont::Net& n) {
  std::ostringstream out;
  out << "digraph net {\n  node [shape=box, fontsize=10];\n";
  for (const auto& [id, k] : n.agents) out << "  a" << id << " [label=" << quote(k) << "];\n";
  for (const auto& [a, b] : n.wires)
    out << "  a" << a.agent << " -> a" << b.agent << " [dir=none, taillabel=" << quote(std::to_string(a.port))
        << ", headlabel=" << quote(std::to_string(b.port)) << "];\n";
  for (const auto& p : n.free_ports()) {
    const std::string f = "f" + std::to_string(p.agent) + "_" + std::to_string(p.port);
    out << "  " << f << " [shape=point];\n";
    out << "  a" << p.agent << " -> " << f << " [dir=none, taillabel=" << quote(std::to_string(p.port)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::optional<DotCounts> parse_dot(const std::string& text, std::string* why) {
  try {
    return DotReader(text).run();
  } catch (const std::runtime_error& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
}

}  // namespace hyper
