#include <algorithm>
#include <bit>
#include <future>
#include <set>

#include "uhqft/errors.hpp"
#include "uhqft/homology.hpp"

namespace uhqft {

namespace {

std::vector<std::size_t> parallel_ranks(const std::vector<f2::Matrix>& ms) {
  std::vector<std::future<std::size_t>> jobs;
  jobs.reserve(ms.size());
  for (const f2::Matrix& m : ms) jobs.push_back(std::async(std::launch::async, [&m] { return f2::rank(m); }));
  std::vector<std::size_t> out;
  out.reserve(ms.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

const StateBlock& block_at(const CubeComplex& c, int degree, std::size_t index) {
  const auto& blocks = c.blocks[static_cast<std::size_t>(degree - c.min_degree)];
  auto it = std::upper_bound(blocks.begin(), blocks.end(), index,
                             [](std::size_t v, const StateBlock& b) { return v < b.offset; });
  return *std::prev(it);
}

}  // namespace

std::size_t HomologyTable::at(int i) const {
  auto it = betti.find(i);
  return it == betti.end() ? 0 : it->second;
}

int quantum_degree(const CubeComplex& c, int degree, std::size_t basis_index, int t) {
  const StateBlock& b = block_at(c, degree, basis_index);
  const std::size_t local = basis_index - b.offset;
  const std::size_t nc = b.labels.size();
  int q = degree + static_cast<int>(c.n_plus) - static_cast<int>(c.n_minus);
  for (std::size_t ci = 0; ci < nc; ++ci)
    q += uhqft::degree(generator_at(b.labels[ci], (local >> (nc - 1 - ci)) & 1u), t);
  return q;
}

HomologyTable homology_betti(const CubeComplex& c, const std::string& algebra_name, std::optional<int> t) {
  HomologyTable h;
  h.algebra = algebra_name;
  h.n_plus = c.n_plus;
  h.n_minus = c.n_minus;
  h.t = t;
  const std::size_t levels = c.dims.size();
  const std::vector<std::size_t> ranks = parallel_ranks(c.differentials);
  for (std::size_t l = 0; l < levels; ++l) {
    const int i = c.min_degree + static_cast<int>(l);
    h.chain_dims[i] = c.dims[l];
    const std::size_t out = l < ranks.size() ? ranks[l] : 0;
    const std::size_t in = l > 0 ? ranks[l - 1] : 0;
    const std::size_t b = c.dims[l] - out - in;
    if (b != 0) h.betti[i] = b;
  }
  if (!t) return h;

  std::vector<std::vector<int>> q(levels);
  for (std::size_t l = 0; l < levels; ++l) {
    const int i = c.min_degree + static_cast<int>(l);
    q[l].resize(c.dims[l]);
    for (std::size_t v = 0; v < c.dims[l]; ++v) q[l][v] = quantum_degree(c, i, v, *t);
  }
  for (std::size_t l = 0; l + 1 < levels; ++l) {
    const f2::Matrix& m = c.differentials[l];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto words = m.row_words(r);
      for (std::size_t w = 0; w < words.size(); ++w) {
        f2::Word bits = words[w];
        while (bits != 0) {
          const std::size_t col = w * f2::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          if (q[l][col] != q[l + 1][r])
            throw GradingError("the differential of " + algebra_name + " with t = " + std::to_string(*t) +
                               " does not preserve the quantum grading (degree " +
                               std::to_string(c.min_degree + static_cast<int>(l)) + ", j = " +
                               std::to_string(q[l][col]) + " -> " + std::to_string(q[l + 1][r]) + ")");
        }
      }
    }
  }

  // Restrict each differential to a single quantum degree.
  const auto select = [](const std::vector<int>& qs, int j) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < qs.size(); ++v)
      if (qs[v] == j) idx.push_back(v);
    return idx;
  };
  std::set<int> js;
  for (const auto& level : q) js.insert(level.begin(), level.end());
  std::map<std::pair<int, int>, std::size_t> graded;
  for (int j : js) {
    std::vector<std::vector<std::size_t>> idx(levels);
    for (std::size_t l = 0; l < levels; ++l) idx[l] = select(q[l], j);
    std::vector<f2::Matrix> pieces;
    for (std::size_t l = 0; l + 1 < levels; ++l) pieces.push_back(c.differentials[l].submatrix(idx[l + 1], idx[l]));
    const std::vector<std::size_t> r = parallel_ranks(pieces);
    for (std::size_t l = 0; l < levels; ++l) {
      const std::size_t out = l < r.size() ? r[l] : 0;
      const std::size_t in = l > 0 ? r[l - 1] : 0;
      const std::size_t b = idx[l].size() - out - in;
      if (b != 0) graded[{c.min_degree + static_cast<int>(l), j}] = b;
    }
  }
  h.graded = std::move(graded);
  return h;
}

HomologyTable homology_betti(const SurfaceDiagram& d, const AlgebraSpec& alg, std::optional<int> t,
                             std::size_t max_crossings) {
  return homology_betti(build_complex(d, alg, max_crossings), alg.display_name(), t);
}

bool euler_characteristic_matches(const HomologyTable& h) {
  long long lhs = 0;
  long long rhs = 0;
  for (const auto& [i, b] : h.betti) lhs += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
  for (const auto& [i, dim] : h.chain_dims) rhs += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
  return lhs == rhs;
}

DualityResult duality_check(const SurfaceDiagram& d, const AlgebraSpec& alg, std::size_t max_crossings) {
  DualityResult r;
  r.diagram = homology_betti(d, alg, std::nullopt, max_crossings);
  r.mirrored = homology_betti(mirror(d), alg, std::nullopt, max_crossings);
  std::map<int, std::size_t> flipped;
  for (const auto& [i, b] : r.mirrored.betti) flipped[-i] = b;
  r.holds = flipped == r.diagram.betti;
  return r;
}

f2::Vector adequacy_witness(const CubeComplex& c) {
  f2::Vector w(c.dims.front());
  const StateBlock& b = c.blocks.front().front();
  const std::size_t nc = b.labels.size();
  // x has slot 1; y + z has both slots.
  std::size_t fixed = 0;
  std::vector<std::size_t> free_bits;
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const std::size_t bit = nc - 1 - ci;
    if (b.labels[ci].is_zero())
      fixed |= std::size_t{1} << bit;
    else
      free_bits.push_back(bit);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits.size()); ++mask) {
    std::size_t local = fixed;
    for (std::size_t f = 0; f < free_bits.size(); ++f)
      if ((mask >> f) & 1u) local |= std::size_t{1} << free_bits[f];
    w.set(b.offset + local, true);
  }
  return w;
}

NonvanishingResult nonvanishing_check(const SurfaceDiagram& d, std::size_t max_crossings) {
  const AlgebraSpec alg = AlgebraSpec::builtin(AlgebraName::L, d.k());
  const CubeComplex c = build_complex(d, alg, max_crossings);
  NonvanishingResult r;
  r.adequate = weak_adequate(d, Side::Plus).adequate;
  const std::size_t dim0 = c.dims.front();
  const std::size_t rank0 = c.differentials.empty() ? 0 : f2::rank(c.differentials.front());
  r.nonzero = dim0 > rank0;
  if (r.adequate && !c.differentials.empty()) {
    const f2::Vector w = adequacy_witness(c);
    r.witness_in_kernel = !w.is_zero() && (c.differentials.front() * w).is_zero();
  }
  return r;
}

DegreeBounds degree_bounds(const SurfaceDiagram& d, std::size_t max_crossings) {
  const AlgebraSpec alg = AlgebraSpec::builtin(AlgebraName::L, d.k());
  const HomologyTable h = homology_betti(d, alg, std::nullopt, max_crossings);
  DegreeBounds b;
  b.n_minus = h.n_minus;
  b.n_plus = h.n_plus;
  if (!h.betti.empty()) {
    b.i_min = h.betti.begin()->first;
    b.i_max = h.betti.rbegin()->first;
  }
  b.plus_adequate = weak_adequate(d, Side::Plus).adequate;
  b.minus_adequate = weak_adequate(d, Side::Minus).adequate;
  return b;
}

}  // namespace uhqft
