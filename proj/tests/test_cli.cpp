#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hypershell/fixtures.hpp"
#include "hypershell/generators.hpp"
#include "hypershell/monad.hpp"
#include "hypershell/persist.hpp"
#include "hypershell/render.hpp"

using namespace hyper;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run hgx(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("hgx_test_" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("lafont prints the product") {
  Run r = hgx({"lafont", "mul", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: 4\n") == 0);
  CHECK(r.out.find("steps: ") != std::string::npos);
  Run random = hgx({"lafont", "add", "3", "4", "--strategy", "random", "--seed", "5"});
  CHECK(random.out.find("result: 7\n") == 0);
}

TEST_CASE("laws") {
  Run r = hgx({"laws", "--dim", "2", "--cases", "100", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out == "monad laws: 100/100 ok\n");
  CHECK(hgx({"laws", "--dim", "1", "--cases", "20", "--seed", "1", "--variant", "acyclic"}).code == 0);
  CHECK(hgx({"laws", "--dim", "9", "--cases", "1", "--seed", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(hgx({}).code == 2);
  CHECK(hgx({"bogus"}).code == 2);
  CHECK(hgx({"lafont", "pow", "2", "2"}).code == 2);
  CHECK(hgx({"render", "/nonexistent.hgx"}).code == 2);
  CHECK(hgx({"fixtures", "emit", "nothing"}).code == 2);
  CHECK(hgx({"--help"}).code == 0);
}

TEST_CASE("fixtures are deterministic and valid") {
  TempDir dir;
  for (std::string name : {"tetrahedron", "triangle-fan", "three-arrow-pd", "three-arrow-hypergraph", "poset-chain-4",
                           "monoid-3", "lafont-signature"}) {
    CAPTURE(name);
    Run a = hgx({"fixtures", "emit", name});
    Run b = hgx({"fixtures", "emit", name});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    REQUIRE(hgx({"fixtures", "emit", name, "-o", dir / (name + ".hgx")}).code == 0);
    CHECK(slurp(dir / (name + ".hgx")) == a.out);
    Run v = hgx({"validate", dir / (name + ".hgx")});
    CHECK(v.code == 0);
  }
}

TEST_CASE("validate reports the clause") {
  TempDir dir;
  std::string text = render_doc(fixtures::tetrahedron());
  text.replace(text.find("\"dim\": 2"), 8, "\"dim\": 5");
  write_doc(dir / "bad.hgx", text);
  Run r = hgx({"validate", dir / "bad.hgx"});
  CHECK(r.code == 1);
  CHECK(r.err.find("[Shell-1]") != std::string::npos);

  write_doc(dir / "broken.hgx", "{\"kind\": ");
  CHECK(hgx({"validate", dir / "broken.hgx"}).code == 1);

  // A diagram whose labels disagree with the hypergraph.
  PastingDiagram pd = fixtures::three_arrow_pd();
  pd.labels[{0}] = "g";
  write_doc(dir / "pd.hgx", render_doc(pd, "pd"));
  write_doc(dir / "h.hgx", render_doc(fixtures::three_arrow_hypergraph()));
  CHECK(hgx({"validate", dir / "pd.hgx", "--hypergraph", dir / "h.hgx"}).code == 1);
}

TEST_CASE("close and compose") {
  TempDir dir;
  hgx({"fixtures", "emit", "triangle-fan", "-o", dir / "fan.hgx"});
  REQUIRE(hgx({"close", dir / "fan.hgx", "-o", dir / "closed.hgx"}).code == 0);
  auto closed = std::get<Shell>(read_doc(dir / "closed.hgx").value);
  CHECK(is_closed(closed));
  CHECK(closed == close(fixtures::open_triangle_fan()).closed);
  CHECK(hgx({"close", dir / "closed.hgx"}).code == 1);

  hgx({"fixtures", "emit", "three-arrow-pd", "-o", dir / "pd.hgx"});
  hgx({"fixtures", "emit", "three-arrow-hypergraph", "-o", dir / "h.hgx"});
  REQUIRE(hgx({"compose", dir / "pd.hgx", "--hypergraph", dir / "h.hgx", "-o", dir / "c.hgx"}).code == 0);
  auto composite = std::get<Labeling>(read_doc(dir / "c.hgx").value);
  auto expected = formal_composite(fixtures::three_arrow_hypergraph(), fixtures::three_arrow_pd()).labeling;
  CHECK(labeling_code(composite, 1u << 20) == labeling_code(expected, 1u << 20));
}

TEST_CASE("flatten undoes unflatten") {
  TempDir dir;
  Rng rng(3);
  for (int dim = 1; dim <= 2; ++dim) {
    Hypergraph h = random_hypergraph(rng, dim);
    write_doc(dir / "h.hgx", render_doc(h));
    for (int i = 0; i < 10; ++i) {
      PastingDiagram pd = random_pd(rng, h);
      Lifted L(h);
      Outer o{unflatten(L, pd, random_groups(rng, pd, pd.shell.children.size() > 1 && is_connected(pd, h.labels()))), {}};
      for (const auto& [p, label] : o.outer.labels)
        if (p.size() == 1) o.slots[label] = L.pd(label);
      write_doc(dir / "outer.hgx", render_doc(o));
      Run r = hgx({"flatten", dir / "outer.hgx", "--hypergraph", dir / "h.hgx", "-o", dir / "flat.hgx"});
      INFO(r.err);
      REQUIRE(r.code == 0);
      auto flat = std::get<Labeling>(read_doc(dir / "flat.hgx").value);
      CHECK(labeling_code(flat, 1u << 20) == labeling_code(pd, 1u << 20));
    }
  }
}

TEST_CASE("weak models") {
  TempDir dir;
  hgx({"fixtures", "emit", "poset-chain-4", "-o", dir / "p.hgx"});
  Run r = hgx({"weak", "check", dir / "p.hgx", "--budget", "100000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("H2: ok") != std::string::npos);
  Run d = hgx({"weak", "derive-category", dir / "p.hgx"});
  CHECK(d.code == 0);
  CHECK(d.out.find("category laws: ok") != std::string::npos);

  WeakModel m = fixtures::weak_model(fixtures::cyclic_monoid(3));
  m.universal.erase("t[r,r]");
  write_doc(dir / "broken.hgx", render_doc(m));
  Run bad = hgx({"weak", "check", dir / "broken.hgx"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("H2: FAILED") != std::string::npos);
  CHECK(bad.out.find("c[r,r]") != std::string::npos);
}

TEST_CASE("render") {
  TempDir dir;
  hgx({"fixtures", "emit", "tetrahedron", "-o", dir / "t.hgx"});
  Run tree = hgx({"render", dir / "t.hgx", "--style", "tree"});
  REQUIRE(tree.code == 0);
  CHECK(parse_dot(tree.out)->nodes == 41);
  REQUIRE(hgx({"render", dir / "t.hgx", "--style", "link", "--conceal", "2", "-o", dir / "t.dot"}).code == 0);
  CHECK(parse_dot(slurp(dir / "t.dot"))->nodes == 4);
  CHECK(hgx({"render", dir / "t.hgx", "--style", "link", "--conceal", "3"}).code == 2);

  REQUIRE(hgx({"lafont", "mul", "1", "2", "--trace", dir / "tr.hgx", "--dot", dir / "n.dot"}).code == 0);
  CHECK(parse_dot(slurp(dir / "n.dot")).has_value());
  CHECK(hgx({"validate", dir / "tr.hgx"}).code == 0);
  Run trace = hgx({"render", dir / "tr.hgx"});
  CHECK(trace.code == 0);
  CHECK(parse_dot(trace.out).has_value());
}
