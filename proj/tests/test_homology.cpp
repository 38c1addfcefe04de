#include <doctest.h>

#include <random>

#include "uhqft/errors.hpp"
#include "uhqft/fixtures.hpp"
#include "uhqft/homology.hpp"

using namespace uhqft;

namespace {

using Betti = std::map<int, std::size_t>;

AlgebraSpec alg(AlgebraName name, int k) { return AlgebraSpec::builtin(name, k); }

const AlgebraName kNames[] = {AlgebraName::L, AlgebraName::Lprime, AlgebraName::Ldoubleprime};

// A random diagram built only from planar moves: braid closures.
SurfaceDiagram random_braid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> strands(2, 3), length(1, 4), coin(0, 1);
  const int s = strands(rng);
  std::uniform_int_distribution<int> letter(1, s - 1);
  std::vector<int> word;
  for (int i = length(rng); i > 0; --i) word.push_back(coin(rng) ? letter(rng) : -letter(rng));
  return fixtures::braid_closure(s, word);
}

}  // namespace

TEST_CASE("single-crossing torus diagram") {
  const HomologyTable h = homology_betti(fixtures::t_alpha(), alg(AlgebraName::L, 2));
  CHECK(h.betti == Betti{{0, 3}, {1, 1}});
  CHECK(h.chain_dims == Betti{{0, 4}, {1, 2}});
  CHECK(h.n_plus == 1);
  CHECK(h.n_minus == 0);
  CHECK(h.at(5) == 0);
}

TEST_CASE("two-label square") {
  const SurfaceDiagram d = fixtures::alpha_beta_square();
  CHECK(homology_betti(d, alg(AlgebraName::L, 2)).betti == Betti{{0, 3}, {1, 1}, {2, 2}});
  CHECK(homology_betti(d, alg(AlgebraName::Lprime, 2)).betti == Betti{{0, 4}, {1, 2}, {2, 2}});
  const CubeComplex c = build_complex(d, alg(AlgebraName::L, 2));
  CHECK(c.dims == std::vector<std::size_t>{4, 4, 4});
  CHECK(f2::rank(c.differentials[1]) == 2);
}

TEST_CASE("pass-edge square has zero first differential") {
  const CubeComplex c = build_complex(fixtures::pass_square(), alg(AlgebraName::L, 2));
  CHECK(c.differentials[0].is_zero());
  CHECK(homology_betti(c, "L").betti == Betti{{0, 2}, {1, 2}, {2, 2}});
}

TEST_CASE("basis positions") {
  const CubeComplex c = build_complex(fixtures::alpha_beta_square(), alg(AlgebraName::L, 2));
  CHECK(CubeComplex::local_index({1, 0}) == 2);
  CHECK(c.basis_position(0, 0, {0, 0}) == 0);
  CHECK(c.basis_position(1, parse_state("01", 2), {0}) == 0);
  CHECK(c.basis_position(1, parse_state("10", 2), {1}) == 3);
  CHECK_THROWS_AS(c.basis_position(1, 0b11, {0}), InputError);
}

TEST_CASE("d^2 = 0 and Euler characteristic on random diagrams") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const SurfaceDiagram d = fixtures::random_diagram(rng, trial % 5, 2);
    for (AlgebraName name : kNames) {
      const CubeComplex c = build_complex(d, alg(name, 2));
      CHECK(verify_d_squared(c));
      CHECK(euler_characteristic_matches(homology_betti(c, "")));
    }
  }
}

TEST_CASE("duality on random diagrams") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const SurfaceDiagram d = fixtures::random_diagram(rng, trial % 4, 1 + trial % 2);
    for (AlgebraName name : kNames) CHECK(duality_check(d, alg(name, d.k())).holds);
  }
}

TEST_CASE("non-vanishing exactly for weak plus-adequate diagrams") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const SurfaceDiagram d = fixtures::random_diagram(rng, trial % 4, trial % 3);
    const NonvanishingResult r = nonvanishing_check(d);
    CHECK(r.consistent());
  }
  CHECK(nonvanishing_check(fixtures::t_alpha()).nonzero);
  CHECK_FALSE(nonvanishing_check(fixtures::negative_kink()).nonzero);
}

TEST_CASE("degree bounds") {
  const DegreeBounds t = degree_bounds(fixtures::right_trefoil());
  CHECK(t.i_min == 0);
  CHECK(t.i_max == 3);
  CHECK(t.plus_adequate);
  CHECK(t.minus_adequate);
  const DegreeBounds k = degree_bounds(fixtures::negative_kink());
  CHECK(k.n_minus == 1);
  CHECK_FALSE(k.plus_adequate);
}

TEST_CASE("Reidemeister pairs agree under every built-in algebra") {
  for (const auto& p : fixtures::reidemeister_pairs()) {
    CAPTURE(p.name);
    for (AlgebraName name : kNames)
      CHECK(homology_betti(p.first, alg(name, 2)).betti == homology_betti(p.second, alg(name, 2)).betti);
  }
}

TEST_CASE("Lprime on planar diagrams agrees with the Khovanov oracle") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const SurfaceDiagram d = random_braid(rng);
    const HomologyTable oracle = khovanov_oracle_genus0(d);
    const HomologyTable h = homology_betti(d, alg(AlgebraName::Lprime, 0), 0);
    CHECK(h.betti == oracle.betti);
    CHECK(*h.graded == *oracle.graded);
  }
}

TEST_CASE("oracle frozen values") {
  using Graded = std::map<std::pair<int, int>, std::size_t>;
  CHECK(*khovanov_oracle_genus0(fixtures::unknot()).graded == Graded{{{0, -1}, 1}, {{0, 1}, 1}});
  CHECK(*khovanov_oracle_genus0(fixtures::hopf_link()).graded ==
        Graded{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}});
  CHECK(khovanov_oracle_genus0(fixtures::right_trefoil()).betti == Betti{{0, 2}, {2, 2}, {3, 2}});
  CHECK_THROWS_AS(khovanov_oracle_genus0(fixtures::t_alpha()), InputError);
}

TEST_CASE("grading") {
  const SurfaceDiagram hopf = fixtures::hopf_link();
  CHECK_THROWS_AS(homology_betti(hopf, alg(AlgebraName::Ldoubleprime, 0), 0), GradingError);
  const HomologyTable t = homology_betti(fixtures::t_alpha(), alg(AlgebraName::L, 2), 0);
  std::size_t total = 0;
  for (const auto& [ij, dim] : *t.graded) total += dim;
  CHECK(total == 4);
  const CubeComplex c = build_complex(fixtures::unknot(), alg(AlgebraName::L, 0));
  CHECK(quantum_degree(c, 0, 0, 0) == 1);
  CHECK(quantum_degree(c, 0, 1, 0) == -1);
}

TEST_CASE("input limits") {
  CHECK_THROWS_AS(build_complex(fixtures::t_alpha(), alg(AlgebraName::L, 1)), InputError);
  CHECK_THROWS_AS(build_complex(fixtures::right_trefoil(), alg(AlgebraName::L, 0), 2), InputError);
}
