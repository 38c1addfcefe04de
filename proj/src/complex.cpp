#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "uhqft/errors.hpp"
#include "uhqft/homology.hpp"

namespace uhqft {

namespace {

std::uint64_t reverse_bits(std::uint64_t e, std::size_t n) {
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < n; ++j)
    if ((e >> j) & 1u) r |= std::uint64_t{1} << (n - 1 - j);
  return r;
}

class ComultiplicationCache {
 public:
  explicit ComultiplicationCache(const AlgebraSpec& alg) : alg_(alg) {}
  const Comultiplication& get(H1Label a, H1Label b) {
    const std::uint64_t key = (std::uint64_t{a.bits} << 32) | b.bits;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, derive_comultiplication(alg_, a, b)).first;
    return it->second;
  }

 private:
  const AlgebraSpec& alg_;
  std::unordered_map<std::uint64_t, Comultiplication> cache_;
};

BasisIndex basis_index(H1Label l, unsigned slot) { return (l.bits << 1) | slot; }

}  // namespace

std::size_t CubeComplex::dim(int i) const {
  if (i < min_degree || i > max_degree()) return 0;
  return dims[static_cast<std::size_t>(i - min_degree)];
}

std::size_t CubeComplex::local_index(const std::vector<unsigned>& slots) {
  std::size_t idx = 0;
  for (unsigned s : slots) idx = (idx << 1) | s;
  return idx;
}

std::size_t CubeComplex::basis_position(int degree, std::uint64_t epsilon, const std::vector<unsigned>& slots) const {
  if (degree < min_degree || degree > max_degree()) throw InputError("degree out of range");
  for (const StateBlock& b : blocks[static_cast<std::size_t>(degree - min_degree)]) {
    if (b.epsilon != epsilon) continue;
    if (slots.size() != b.labels.size()) throw InputError("slot assignment has the wrong number of circles");
    return b.offset + local_index(slots);
  }
  throw InputError("state is not in the requested degree");
}

CubeComplex build_complex(const SurfaceDiagram& d, const AlgebraSpec& alg, std::size_t max_crossings) {
  if (d.k() != alg.k())
    throw InputError("diagram has k = " + std::to_string(d.k()) + " but the algebra has k = " + std::to_string(alg.k()));
  const std::size_t n = d.crossing_count();
  if (n > max_crossings)
    throw InputError("diagram has " + std::to_string(n) + " crossings, limit is " + std::to_string(max_crossings));

  CubeComplex c;
  c.n_minus = negative_crossing_count(d);
  c.n_plus = n - c.n_minus;
  c.min_degree = -static_cast<int>(c.n_minus);
  c.dims.assign(n + 1, 0);
  c.blocks.assign(n + 1, {});

  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<ResolvedState> resolved;
  resolved.reserve(states);
  for (std::uint64_t e = 0; e < states; ++e) resolved.push_back(resolve(d, e));

  std::vector<std::vector<std::uint64_t>> by_weight(n + 1);
  for (std::uint64_t e = 0; e < states; ++e) by_weight[static_cast<std::size_t>(std::popcount(e))].push_back(e);
  std::vector<std::size_t> block_of(states);
  for (std::size_t w = 0; w <= n; ++w) {
    auto& list = by_weight[w];
    std::sort(list.begin(), list.end(),
              [n](std::uint64_t a, std::uint64_t b) { return reverse_bits(a, n) < reverse_bits(b, n); });
    std::size_t offset = 0;
    for (std::uint64_t e : list) {
      StateBlock b;
      b.epsilon = e;
      b.offset = offset;
      for (const Circle& circ : resolved[e].circles) b.labels.push_back(circ.label);
      offset += std::size_t{1} << b.labels.size();
      block_of[e] = c.blocks[w].size();
      c.blocks[w].push_back(std::move(b));
    }
    c.dims[w] = offset;
  }

  ComultiplicationCache deltas(alg);
  for (std::size_t w = 0; w < n; ++w) {
    f2::Matrix m(c.dims[w + 1], c.dims[w]);
    for (const StateBlock& src : c.blocks[w]) {
      const ResolvedState& rs = resolved[src.epsilon];
      const std::size_t nc = rs.circles.size();
      const std::size_t free = d.free_circles().size();
      for (std::size_t j = 0; j < n; ++j) {
        if ((src.epsilon >> j) & 1u) continue;
        const std::uint64_t te = src.epsilon | (std::uint64_t{1} << j);
        const ResolvedState& rt = resolved[te];
        const StateBlock& tgt = c.blocks[w + 1][block_of[te]];
        const Transition tr = transition(d, rs, rt, j);
        const std::size_t ntc = rt.circles.size();

        // Untouched circles keep their arcs; declared free circles stay last.
        std::vector<std::size_t> image(nc, SIZE_MAX);
        for (std::size_t ci = 0; ci < nc; ++ci) {
          if (std::find(tr.from.begin(), tr.from.end(), ci) != tr.from.end()) continue;
          if (ci + free >= nc)
            image[ci] = ci - (nc - free) + (ntc - free);
          else
            image[ci] = rt.circle_of_arc[d.arc_index(rs.circles[ci].arcs.front())];
        }

        std::vector<unsigned> slots(nc);
        std::vector<unsigned> out(ntc);
        const auto emit = [&](std::size_t col) { m.flip(tgt.offset + CubeComplex::local_index(out), col); };
        for (std::size_t local = 0; local < (std::size_t{1} << nc); ++local) {
          for (std::size_t ci = 0; ci < nc; ++ci) slots[ci] = (local >> (nc - 1 - ci)) & 1u;
          for (std::size_t ci = 0; ci < nc; ++ci)
            if (image[ci] != SIZE_MAX) out[image[ci]] = slots[ci];
          const std::size_t col = src.offset + local;

          if (tr.kind == TransitionKind::Merge) {
            const auto a = tr.from[0], b = tr.from[1];
            const std::uint8_t mask = alg.product_mask(basis_index(src.labels[a], slots[a]),
                                                       basis_index(src.labels[b], slots[b]));
            for (unsigned o = 0; o < 2; ++o) {
              if (!((mask >> o) & 1u)) continue;
              out[tr.to[0]] = o;
              emit(col);
            }
          } else if (tr.kind == TransitionKind::Split) {
            const auto a = tr.from[0];
            const Comultiplication& delta = deltas.get(tgt.labels[tr.to[0]], tgt.labels[tr.to[1]]);
            const std::uint8_t mask = delta.images[slots[a]];
            for (unsigned s1 = 0; s1 < 2; ++s1)
              for (unsigned s2 = 0; s2 < 2; ++s2) {
                if (!((mask >> (2 * s1 + s2)) & 1u)) continue;
                out[tr.to[0]] = s1;
                out[tr.to[1]] = s2;
                emit(col);
              }
          } else {
            const auto a = tr.from[0];
            const H1Label label = src.labels[a];
            const std::uint8_t theta = alg.theta_mask(label);
            std::uint8_t mask = 0;
            for (unsigned b = 0; b < 2; ++b)
              if ((theta >> b) & 1u) mask ^= alg.product_mask(b, basis_index(label, slots[a]));
            for (unsigned o = 0; o < 2; ++o) {
              if (!((mask >> o) & 1u)) continue;
              out[tr.to[0]] = o;
              emit(col);
            }
          }
        }
      }
    }
    c.differentials.push_back(std::move(m));
  }
  return c;
}

bool verify_d_squared(const CubeComplex& c) {
  for (std::size_t t = 0; t + 1 < c.differentials.size(); ++t)
    if (!(c.differentials[t + 1] * c.differentials[t]).is_zero()) return false;
  return true;
}

}  // namespace uhqft
