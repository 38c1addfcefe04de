#pragma once

// Cube-of-resolutions chain complex over F_2 and its homology.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uhqft/algebra.hpp"
#include "uhqft/diagram.hpp"
#include "uhqft/f2linalg.hpp"

namespace uhqft {

inline constexpr std::size_t kDefaultMaxCrossings = 20;

// One resolution inside a chain group: its basis vectors occupy
// [offset, offset + 2^labels.size()), generator bits with circle 0 most
// significant.
struct StateBlock {
  std::uint64_t epsilon = 0;
  std::size_t offset = 0;
  std::vector<H1Label> labels;  // per circle
};

struct CubeComplex {
  int min_degree = 0;  // -n_minus
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::vector<std::size_t> dims;                 // dims[t] = dim C^{min_degree + t}
  std::vector<std::vector<StateBlock>> blocks;   // per degree, states in lexicographic order
  std::vector<f2::Matrix> differentials;         // differentials[t]: C^{min+t} -> C^{min+t+1}

  int max_degree() const noexcept { return min_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int i) const;
  // Basis index of the generator assignment gens (one slot per circle) in the block.
  static std::size_t local_index(const std::vector<unsigned>& slots);
  // Basis position of a state block and slot assignment; throws InputError if absent.
  std::size_t basis_position(int degree, std::uint64_t epsilon, const std::vector<unsigned>& slots) const;
};

// Throws InputError if d.k() != alg.k() or d has more than max_crossings crossings.
CubeComplex build_complex(const SurfaceDiagram& d, const AlgebraSpec& alg,
                          std::size_t max_crossings = kDefaultMaxCrossings);

bool verify_d_squared(const CubeComplex& c);

struct HomologyTable {
  std::map<int, std::size_t> betti;  // nonzero entries only
  std::optional<std::map<std::pair<int, int>, std::size_t>> graded;
  std::map<int, std::size_t> chain_dims;
  std::string algebra;
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::optional<int> t;

  std::size_t at(int i) const;
  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

// q-degree of a basis vector: sum of generator degrees + i + n_plus - n_minus.
int quantum_degree(const CubeComplex& c, int degree, std::size_t basis_index, int t);

// With t set, also splits by the quantum degree; throws GradingError if some
// differential entry joins basis vectors of different quantum degree.
HomologyTable homology_betti(const CubeComplex& c, const std::string& algebra_name, std::optional<int> t = {});
HomologyTable homology_betti(const SurfaceDiagram& d, const AlgebraSpec& alg, std::optional<int> t = {},
                             std::size_t max_crossings = kDefaultMaxCrossings);

// Euler characteristic of the homology equals that of the chain groups.
bool euler_characteristic_matches(const HomologyTable& h);

struct DualityResult {
  bool holds = false;
  HomologyTable diagram;
  HomologyTable mirrored;
};

DualityResult duality_check(const SurfaceDiagram& d, const AlgebraSpec& alg,
                            std::size_t max_crossings = kDefaultMaxCrossings);

struct NonvanishingResult {
  bool adequate = false;
  bool nonzero = false;            // H^{-n_minus} != 0 under L
  bool witness_in_kernel = true;   // checked only when adequate
  bool consistent() const noexcept { return adequate == nonzero && witness_in_kernel; }
};

// The basis coefficients of the element with x on 0-labelled circles of the
// all-0 state and y+z on the others, as a vector in C^{-n_minus}.
f2::Vector adequacy_witness(const CubeComplex& c);

NonvanishingResult nonvanishing_check(const SurfaceDiagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

struct DegreeBounds {
  std::optional<int> i_min;
  std::optional<int> i_max;
  std::size_t n_minus = 0;
  std::size_t n_plus = 0;
  bool plus_adequate = false;   // certifies c_- = -i_min
  bool minus_adequate = false;  // certifies c_+ = i_max
};

// Homology under L: c_- >= -i_min and c_+ >= i_max.
DegreeBounds degree_bounds(const SurfaceDiagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

// Khovanov homology over F_2 with A = F_2[x]/x^2 through a separate naive
// path (own circle tracing, byte matrices, own elimination). Throws
// InputError if some label is nonzero.
HomologyTable khovanov_oracle_genus0(const SurfaceDiagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

}  // namespace uhqft
