#include <doctest.h>

#include <sstream>

#include "uhqft/cli.hpp"
#include "uhqft/errors.hpp"
#include "uhqft/fixtures.hpp"
#include "uhqft/io.hpp"

using namespace uhqft;

namespace {

const std::string kDir = UHQFT_FIXTURE_DIR;

std::string path(const std::string& name) { return kDir + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

bool same_resolutions(const SurfaceDiagram& a, const SurfaceDiagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.k() != b.k()) return false;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << a.crossing_count()); ++e)
    if (resolve(a, e).circles != resolve(b, e).circles) return false;
  return true;
}

int error_line(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("fixture files match the built-in fixtures") {
  for (const auto& f : fixtures::all_fixtures()) {
    CAPTURE(f.name);
    const ParsedDiagram p = load_diagram(path(f.name + ".diag"));
    CHECK(same_resolutions(p.diagram, f.diagram));
    CHECK_FALSE(p.algebra.has_value());
    CHECK(serialize_diagram(p.diagram) == read_file(path(f.name + ".diag")));
  }
}

TEST_CASE("serialize then parse preserves every resolution") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SurfaceDiagram d = fixtures::random_diagram(rng, trial % 5, trial % 3);
    CHECK(same_resolutions(parse_diagram(serialize_diagram(d)).diagram, d));
  }
}

TEST_CASE("parse errors carry line numbers") {
  const std::string dangling = R"({
  "k": 1,
  "arcs": [
    {"id": 0, "label": [1]},
    {"id": 1, "label": [1]}
  ],
  "crossings": [
    {"ends": [[0, 0], [0, 1], [1, 0], [0, 0]], "sign": 1}
  ],
  "free_circles": []
})";
  CHECK(error_line(dangling) == 8);
  const std::string bad_label = R"({
  "k": 2,
  "arcs": [
    {"id": 0, "label": [1]}
  ],
  "crossings": [],
  "free_circles": []
})";
  CHECK(error_line(bad_label) == 4);
  const std::string unknown_key = R"({
  "k": 0,
  "arcs": [],
  "crossings": [],
  "free_circles": [],
  "colour": 3
})";
  CHECK(error_line(unknown_key) == 1);
  CHECK_THROWS_AS(parse_diagram("{ \"k\": "), ParseError);
  CHECK_THROWS_AS(load_diagram(path("missing.diag")), InputError);
}

TEST_CASE("algebra files") {
  const AlgebraSpec a = load_algebra(path("frobenius_x2.alg"));
  CHECK(a.k() == 0);
  CHECK(a.display_name() == "F2[x]/x^2");
  CHECK(check_axioms(a).all_passed());
  CHECK_FALSE(check_axioms(load_algebra(path("mutated_L.alg"))).all_passed());
  CHECK_THROWS_AS(parse_algebra(R"({"k": 0, "mult": {"x*y_1": ["x"]}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"k": 0, "eta": {"1*x": 2}})"), ParseError);
  const ParsedDiagram p = load_diagram(path("hopf_custom.diag"));
  REQUIRE(p.algebra.has_value());
  CHECK(p.algebra->display_name() == "F2[x]/x^2");
}

TEST_CASE("projection files") {
  const f2::Matrix m = load_projection(path("swap_labels.proj"));
  CHECK(m == f2::Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(parse_projection("1 1 # sum\n") == f2::Matrix::from_rows({{1, 1}}));
  CHECK_THROWS_AS(parse_projection("1 0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_projection("1 2\n"), ParseError);
}

TEST_CASE("cli compute") {
  const Run r = run({"compute", "--diagram", path("t_alpha.diag"), "--algebra", "L"});
  CHECK(r.code == 0);
  CHECK(r.out == "i=0: 3\ni=1: 1\n");
  const Run m = run({"compute", "--diagram", path("trefoil.diag"), "--graded", "--format", "machine"});
  CHECK(m.code == 0);
  CHECK(m.out ==
        "# algebra=L n_plus=3 n_minus=0 t=0\n"
        "betti i=0 j=1 dim=1\nbetti i=0 j=3 dim=1\nbetti i=2 j=5 dim=1\n"
        "betti i=2 j=7 dim=1\nbetti i=3 j=7 dim=1\nbetti i=3 j=9 dim=1\n");
  CHECK(run({"compute", "--diagram", path("hopf_custom.diag")}).out == "i=0: 2\ni=2: 2\n");
  CHECK(run({"compute", "--diagram", path("t_alpha.diag"), "--project", path("swap_labels.proj")}).out ==
        "i=0: 3\ni=1: 1\n");
  const Run n = run({"compute", "--diagram", path("negative_kink.diag"), "--format", "machine"});
  CHECK(n.out == "# algebra=L n_plus=0 n_minus=1\nbetti i=0 dim=2\n");
}

TEST_CASE("cli machine output is deterministic") {
  const std::vector<std::string> args = {"compute", "--diagram", path("R3_a.diag"), "--format", "machine"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli check-axioms") {
  const Run r = run({"check-axioms", "--algebra", "Ldoubleprime", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("all axioms pass\n"));
  const Run bad = run({"check-axioms", "--algebra", "file:" + path("mutated_L.alg")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL  associativity") != std::string::npos);
  CHECK(run({"check-axioms", "--algebra", "file:" + path("mutated_L.alg"), "--k", "2"}).code == 2);
}

TEST_CASE("cli adequacy and dual-check") {
  const Run a = run({"adequacy", "--diagram", path("negative_kink.diag")});
  CHECK(a.code == 0);
  CHECK(a.out.starts_with("plus: not adequate at crossings 0\nminus: adequate\n"));
  const Run d = run({"dual-check", "--diagram", path("hopf.diag"), "--algebra", "Lprime"});
  CHECK(d.code == 0);
  CHECK(d.out.ends_with("duality holds\n"));
}

TEST_CASE("cli input errors") {
  CHECK(run({"compute", "--diagram", path("missing.diag")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  const Run flag = run({"compute", "--diagram", path("t_alpha.diag"), "--colour"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("Usage") != std::string::npos);
  CHECK(run({"compute", "--diagram", path("t_alpha.diag"), "--algebra", "M"}).code == 2);
  CHECK(run({"compute", "--diagram", path("t_alpha.diag"), "--k", "1"}).code == 2);
  CHECK(run({"compute", "--diagram", path("t_alpha.diag"), "--format", "xml"}).code == 2);
  CHECK(run({"compute", "--diagram", path("trefoil.diag"), "--max-crossings", "2"}).code == 2);
}

TEST_CASE("cli grading failure") {
  const Run r = run({"compute", "--diagram", path("hopf.diag"), "--algebra", "Ldoubleprime", "--graded"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli selftest on one criterion") {
  const Run r = run({"selftest", "--criterion", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("PASS  criterion 1"));
}
