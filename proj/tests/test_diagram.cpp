#include <doctest.h>

#include <random>

#include "uhqft/errors.hpp"
#include "uhqft/fixtures.hpp"

using namespace uhqft;

namespace {

constexpr H1Label kA{0b01};
constexpr H1Label kB{0b10};

std::vector<H1Label> labels(const ResolvedState& s) {
  std::vector<H1Label> out;
  for (const Circle& c : s.circles) out.push_back(c.label);
  return out;
}

}  // namespace

TEST_CASE("state strings") {
  CHECK(parse_state("011", 3) == 0b110);
  CHECK(state_string(0b110, 3) == "011");
  CHECK(state_string(0, 0).empty());
  CHECK_THROWS_AS(parse_state("01", 3), InputError);
  CHECK_THROWS_AS(parse_state("012", 3), InputError);
}

TEST_CASE("single-crossing torus diagram resolves to two alpha circles then one circle") {
  const SurfaceDiagram d = fixtures::t_alpha();
  CHECK(labels(resolve(d, "0")) == std::vector<H1Label>{kA, kA});
  CHECK(labels(resolve(d, "1")) == std::vector<H1Label>{H1Label{}});
  const Transition t = transition(d, 0, 0);
  CHECK(t.kind == TransitionKind::Merge);
  CHECK(t.from.size() == 2);
  CHECK(t.to.size() == 1);
  CHECK_THROWS_AS(transition(d, 1, 0), InputError);
}

TEST_CASE("two-label square") {
  const SurfaceDiagram d = fixtures::alpha_beta_square();
  CHECK(labels(resolve(d, "00")) == std::vector<H1Label>{kA, kB});
  CHECK(labels(resolve(d, "11")) == std::vector<H1Label>{kA + kB, H1Label{}});
  CHECK(transition(d, parse_state("00", 2), 1).kind == TransitionKind::Merge);
  CHECK(transition(d, parse_state("10", 2), 1).kind == TransitionKind::Split);
}

TEST_CASE("pass-edge square") {
  const SurfaceDiagram d = fixtures::pass_square();
  CHECK(resolve(d, "00").circles.size() == 1);
  CHECK(transition(d, 0, 0).kind == TransitionKind::Pass);
  CHECK(transition(d, 0, 1).kind == TransitionKind::Pass);
  CHECK(resolve(d, "11").circles.size() == 2);
}

TEST_CASE("circles partition the arcs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const SurfaceDiagram d = fixtures::random_diagram(rng, 1 + trial % 5, 2);
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << d.crossing_count()); ++e) {
      const ResolvedState s = resolve(d, e);
      std::size_t arcs = 0;
      H1Label total;
      for (const Circle& c : s.circles) {
        arcs += c.arcs.size();
        total += c.label;
      }
      CHECK(arcs == d.arcs().size());
      H1Label expected;
      for (const Arc& a : d.arcs()) expected += a.label;
      CHECK(total == expected);
    }
  }
}

TEST_CASE("free circles come last") {
  const SurfaceDiagram d(2, {{0, kA}, {1, kA}}, {{{ArcEnd{0, 0}, ArcEnd{0, 1}, ArcEnd{1, 0}, ArcEnd{1, 1}}, 1}}, {kB});
  const ResolvedState s = resolve(d, "0");
  REQUIRE(s.circles.size() == 3);
  CHECK(s.circles[2].arcs.empty());
  CHECK(s.circles[2].label == kB);
}

TEST_CASE("malformed diagrams are rejected") {
  const Crossing c{{ArcEnd{0, 0}, ArcEnd{0, 1}, ArcEnd{1, 0}, ArcEnd{1, 1}}, 1};
  CHECK_THROWS_AS(SurfaceDiagram(2, {{0, kA}}, {c}), InputError);
  CHECK_THROWS_AS(SurfaceDiagram(2, {{0, kA}, {1, kA}}, {c, c}), InputError);
  CHECK_THROWS_AS(SurfaceDiagram(1, {{0, kB}, {1, kA}}, {c}), InputError);
  CHECK_THROWS_AS(SurfaceDiagram(2, {{0, kA}, {1, kA}}, {{c.ends, 2}}), InputError);
  CHECK_THROWS_AS(SurfaceDiagram(2, {{0, kA}, {0, kA}}, {}), InputError);
}

TEST_CASE("mirror exchanges smoothings and signs") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const SurfaceDiagram d = fixtures::random_diagram(rng, 1 + trial % 4, 2);
    const SurfaceDiagram m = mirror(d);
    CHECK(positive_crossing_count(m) == negative_crossing_count(d));
    const std::uint64_t all = (std::uint64_t{1} << d.crossing_count()) - 1;
    for (std::uint64_t e = 0; e <= all; ++e) CHECK(resolve(m, e ^ all).circles == resolve(d, e).circles);
    const SurfaceDiagram mm = mirror(m);
    for (std::uint64_t e = 0; e <= all; ++e) CHECK(resolve(mm, e).circles == resolve(d, e).circles);
  }
}

TEST_CASE("weak adequacy") {
  CHECK(weak_adequate(fixtures::t_alpha(), Side::Plus).adequate);
  CHECK(weak_adequate(fixtures::t_alpha(), Side::Minus).adequate);
  const Adequacy neg = weak_adequate(fixtures::negative_kink(), Side::Plus);
  CHECK_FALSE(neg.adequate);
  CHECK(neg.violating == std::vector<std::size_t>{0});
  CHECK(weak_adequate(fixtures::negative_kink(), Side::Minus).adequate);
  CHECK_FALSE(weak_adequate(fixtures::positive_kink(), Side::Minus).adequate);
  // A kink whose split-off loop carries a nonzero label is no obstruction.
  CHECK(weak_adequate(fixtures::negative_kink(2, kA, kA), Side::Plus).adequate);
}

TEST_CASE("label projection") {
  const SurfaceDiagram d = fixtures::alpha_beta_square();
  const SurfaceDiagram p = project_labels(d, f2::Matrix::from_rows({{1, 1}}));
  CHECK(p.k() == 1);
  for (const Arc& a : p.arcs()) CHECK(a.label.bits == (d.arcs()[p.arc_index(a.id)].label.is_zero() ? 0u : 1u));
  CHECK_THROWS_AS(project_labels(d, f2::Matrix(1, 3)), InputError);
}

TEST_CASE("braid closures") {
  const SurfaceDiagram trefoil = fixtures::right_trefoil();
  CHECK(trefoil.crossing_count() == 3);
  CHECK(positive_crossing_count(trefoil) == 3);
  CHECK(resolve(trefoil, "000").circles.size() == 2);
  CHECK(resolve(trefoil, "111").circles.size() == 3);
  CHECK_THROWS_AS(fixtures::braid_closure(2, {2}), InputError);
  const SurfaceDiagram annular = fixtures::braid_closure(3, {1, 2, 1}, 2, kA);
  CHECK(resolve(annular, "000").circles.size() == 3);
}
