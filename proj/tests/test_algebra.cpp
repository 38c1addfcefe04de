#include <doctest.h>

#include "uhqft/algebra.hpp"
#include "uhqft/errors.hpp"

using namespace uhqft;

namespace {

constexpr H1Label kZero{};
constexpr H1Label kA{0b01};
constexpr H1Label kB{0b10};

AlgebraElement el(std::initializer_list<const char*> names, int k = 2) {
  AlgebraElement e;
  for (const char* n : names) e.toggle(parse_generator(n, k).index());
  return e;
}

Tensor t2(const char* a, const char* b, int k = 2) { return Tensor::product({el({a}, k), el({b}, k)}); }

Tensor delta(const AlgebraSpec& alg, H1Label l, H1Label r, const char* v) {
  return derive_comultiplication(alg, l, r).apply(el({v}, alg.k()));
}

}  // namespace

TEST_CASE("generator names") {
  CHECK(parse_generator("1", 2).gen == Generator::One);
  CHECK(parse_generator("x", 2).gen == Generator::X);
  const BasisGenerator y = parse_generator("y_10", 2);
  CHECK(y.gen == Generator::Y);
  CHECK(y.label == kA);
  CHECK(to_string(parse_generator("z_01", 2), 2) == "z_01");
  CHECK_THROWS_AS(parse_generator("y_00", 2), InputError);
  CHECK_THROWS_AS(parse_generator("y_1", 2), InputError);
  CHECK_THROWS_AS(parse_generator("w", 2), InputError);
  CHECK_THROWS_AS((BasisGenerator{kA, Generator::X}.index()), InputError);
}

TEST_CASE("algebra names") {
  CHECK(parse_algebra_name("L") == AlgebraName::L);
  CHECK(parse_algebra_name("L'") == AlgebraName::Lprime);
  CHECK(parse_algebra_name("Ldoubleprime") == AlgebraName::Ldoubleprime);
  CHECK_THROWS_AS(parse_algebra_name("M"), InputError);
  CHECK_THROWS_AS(AlgebraSpec::builtin(AlgebraName::L, kMaxAlgebraLabelDim + 1), InputError);
}

TEST_CASE("products in L") {
  const AlgebraSpec L = AlgebraSpec::builtin(AlgebraName::L, 2);
  CHECK(L.multiply(el({"x"}), el({"x"})).is_zero());
  CHECK(L.multiply(el({"1"}), el({"z_10"})) == el({"z_10"}));
  CHECK(L.multiply(el({"y_10"}), el({"z_10"})) == el({"x"}));
  CHECK(L.multiply(el({"y_10"}), el({"y_10"})).is_zero());
  CHECK(L.multiply(el({"x"}), el({"y_10"})).is_zero());
  CHECK(L.multiply(el({"y_10"}), el({"z_01"})) == el({"y_11", "z_11"}));
}

TEST_CASE("products in Lprime and Ldoubleprime") {
  const AlgebraSpec Lp = AlgebraSpec::builtin(AlgebraName::Lprime, 2);
  const AlgebraSpec Lpp = AlgebraSpec::builtin(AlgebraName::Ldoubleprime, 2);
  CHECK(Lp.multiply(el({"y_10"}), el({"z_01"})).is_zero());
  CHECK(Lpp.multiply(el({"x"}), el({"x"})) == el({"1"}));
  CHECK(Lpp.multiply(el({"x"}), el({"y_10"})) == el({"y_10"}));
  CHECK(Lpp.multiply(el({"y_10"}), el({"z_10"})) == el({"1", "x"}));
}

TEST_CASE("pairing and counit") {
  const AlgebraSpec L = AlgebraSpec::builtin(AlgebraName::L, 2);
  CHECK(L.eta(el({"1"}), el({"x"})));
  CHECK_FALSE(L.eta(el({"x"}), el({"x"})));
  CHECK(L.eta(el({"y_01"}), el({"z_01"})));
  CHECK_FALSE(L.eta(el({"y_01"}), el({"z_10"})));
  CHECK_FALSE(L.counit(el({"1"})));
  CHECK(L.counit(el({"x"})));
}

TEST_CASE("comultiplication of L") {
  const AlgebraSpec L = AlgebraSpec::builtin(AlgebraName::L, 2);
  CHECK(delta(L, kZero, kZero, "1") == t2("1", "x") + t2("x", "1"));
  CHECK(delta(L, kZero, kZero, "x") == t2("x", "x"));
  CHECK(delta(L, kA, kA, "1") == t2("y_10", "z_10") + t2("z_10", "y_10"));
  CHECK(delta(L, kA, kA, "x").is_zero());
  CHECK(delta(L, kZero, kA, "y_10") == t2("x", "y_10"));
  CHECK(delta(L, kA, kZero, "z_10") == t2("z_10", "x"));
  const Tensor mixed = t2("y_10", "y_01") + t2("y_10", "z_01") + t2("z_10", "y_01") + t2("z_10", "z_01");
  CHECK(delta(L, kA, kB, "y_11") == mixed);
  CHECK(delta(L, kA, kB, "z_11") == mixed);
}

TEST_CASE("comultiplication of Lprime vanishes between distinct nonzero labels") {
  const AlgebraSpec Lp = AlgebraSpec::builtin(AlgebraName::Lprime, 2);
  CHECK(delta(Lp, kA, kB, "y_11").is_zero());
  CHECK(delta(Lp, kZero, kA, "z_10") == t2("x", "z_10"));
}

TEST_CASE("comultiplication of Ldoubleprime") {
  const AlgebraSpec Lpp = AlgebraSpec::builtin(AlgebraName::Ldoubleprime, 2);
  CHECK(delta(Lpp, kZero, kZero, "x") == t2("x", "x") + t2("1", "1"));
  CHECK(delta(Lpp, kA, kA, "x") == t2("y_10", "z_10") + t2("z_10", "y_10"));
  CHECK(delta(Lpp, kZero, kA, "y_10") == t2("1", "y_10") + t2("x", "y_10"));
  CHECK(delta(Lpp, kA, kB, "y_11").is_zero());
}

TEST_CASE("built-in algebras satisfy every axiom") {
  for (AlgebraName name : {AlgebraName::L, AlgebraName::Lprime, AlgebraName::Ldoubleprime}) {
    for (int k = 0; k <= 2; ++k) {
      CAPTURE(k);
      const CheckReport r = check_axioms(AlgebraSpec::builtin(name, k));
      for (const CheckResult& c : r.results) {
        CAPTURE(c.name);
        CAPTURE(c.witness);
        CHECK(c.passed);
      }
      CHECK(check_bar_natan_relations(AlgebraSpec::builtin(name, k)).all_passed());
    }
  }
}

TEST_CASE("a mutated product is rejected with a witness") {
  const BasisGenerator x{kZero, Generator::X};
  const AlgebraSpec bad =
      AlgebraSpec::Builder(AlgebraSpec::builtin(AlgebraName::L, 1)).set_product(x, x, AlgebraElement(x)).build();
  const CheckReport r = check_axioms(bad);
  CHECK_FALSE(r.all_passed());
  const CheckResult* assoc = r.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->passed);
  CHECK_FALSE(assoc->witness.empty());
}

TEST_CASE("a degenerate pairing has no comultiplication") {
  const AlgebraSpec bad = AlgebraSpec::Builder(AlgebraSpec::builtin(AlgebraName::L, 0))
                              .set_eta({kZero, Generator::One}, {kZero, Generator::X}, false)
                              .set_eta({kZero, Generator::X}, {kZero, Generator::One}, false)
                              .build();
  CHECK_THROWS_AS(derive_comultiplication(bad, kZero, kZero), AlgebraInconsistency);
  CHECK_FALSE(check_axioms(bad).find("eta non-degenerate")->passed);
}

TEST_CASE("builder rejects products outside the target component") {
  AlgebraSpec::Builder b(1, "test");
  const BasisGenerator y{H1Label{1}, Generator::Y};
  CHECK_THROWS_AS(b.set_product(y, y, AlgebraElement(y)), InputError);
}

TEST_CASE("checks are capped in label dimension") {
  CHECK_THROWS_AS(check_axioms(AlgebraSpec::builtin(AlgebraName::L, kMaxCheckLabelDim + 1)), InputError);
}

TEST_CASE("four-tube relation on the unit") {
  const auto [lhs, rhs] = four_tu_unit_instance(AlgebraSpec::builtin(AlgebraName::L, 2));
  const AlgebraElement u = el({"1"}), x = el({"x"});
  const Tensor expected = Tensor::product({u, u, u, x}) + Tensor::product({u, u, x, u}) +
                          Tensor::product({u, x, u, u}) + Tensor::product({x, u, u, u});
  CHECK(lhs == expected);
  CHECK(rhs == expected);
}
