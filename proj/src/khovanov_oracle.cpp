// Naive Khovanov homology over F_2 for unlabelled diagrams. Deliberately
// shares nothing with the cube builder beyond the diagram data.

#include <map>
#include <set>

#include "uhqft/errors.hpp"
#include "uhqft/homology.hpp"

namespace uhqft {

namespace {

using ByteMatrix = std::vector<std::vector<std::uint8_t>>;

std::size_t byte_rank(ByteMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c] != 0)
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

// Circles as sets of arc positions, traced end to end through the smoothings.
std::vector<std::set<std::size_t>> trace_circles(const SurfaceDiagram& d, std::uint64_t state) {
  const std::size_t n_arcs = d.arcs().size();
  // partner[(arc, end)] = (arc, end) joined to it by the smoothing.
  std::map<std::pair<std::size_t, int>, std::pair<std::size_t, int>> partner;
  for (std::size_t j = 0; j < d.crossing_count(); ++j) {
    const auto& e = d.crossings()[j].ends;
    const bool one = (state >> j) & 1u;
    const int pairs[2][2][2] = {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};
    for (const auto& pr : pairs[one ? 1 : 0]) {
      const std::pair<std::size_t, int> a{d.arc_index(e[pr[0]].arc), e[pr[0]].end};
      const std::pair<std::size_t, int> b{d.arc_index(e[pr[1]].arc), e[pr[1]].end};
      partner[a] = b;
      partner[b] = a;
    }
  }
  std::vector<bool> seen(n_arcs, false);
  std::vector<std::set<std::size_t>> circles;
  for (std::size_t start = 0; start < n_arcs; ++start) {
    if (seen[start]) continue;
    std::set<std::size_t> circle;
    std::size_t arc = start;
    int end = 1;
    while (!seen[arc]) {
      seen[arc] = true;
      circle.insert(arc);
      auto it = partner.find({arc, end});
      if (it == partner.end()) break;  // free loop
      arc = it->second.first;
      end = 1 - it->second.second;
    }
    circles.push_back(std::move(circle));
  }
  for (std::size_t f = 0; f < d.free_circles().size(); ++f) circles.push_back({n_arcs + f});
  return circles;
}

std::size_t find_circle(const std::vector<std::set<std::size_t>>& circles, std::size_t arc) {
  for (std::size_t i = 0; i < circles.size(); ++i)
    if (circles[i].count(arc)) return i;
  return circles.size();
}

}  // namespace

HomologyTable khovanov_oracle_genus0(const SurfaceDiagram& d, std::size_t max_crossings) {
  for (const Arc& a : d.arcs())
    if (!a.label.is_zero()) throw InputError("the Khovanov oracle needs all labels to be zero");
  for (H1Label l : d.free_circles())
    if (!l.is_zero()) throw InputError("the Khovanov oracle needs all labels to be zero");
  const std::size_t n = d.crossing_count();
  if (n > max_crossings) throw InputError("too many crossings for the oracle");
  const std::size_t n_minus = negative_crossing_count(d);
  const std::size_t n_plus = n - n_minus;

  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::vector<std::set<std::size_t>>> circles(states);
  for (std::uint64_t s = 0; s < states; ++s) circles[s] = trace_circles(d, s);

  // Generators: (state, bitmask over its circles, bit set = x).
  struct Gen {
    std::uint64_t state;
    std::uint64_t xs;
  };
  std::vector<std::vector<Gen>> gens(n + 1);
  std::vector<std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t>> pos(n + 1);
  for (std::uint64_t s = 0; s < states; ++s) {
    std::size_t h = 0;
    for (std::size_t j = 0; j < n; ++j) h += (s >> j) & 1u;
    for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << circles[s].size()); ++xs) {
      pos[h][{s, xs}] = gens[h].size();
      gens[h].push_back({s, xs});
    }
  }

  std::vector<ByteMatrix> diff;
  for (std::size_t h = 0; h < n; ++h) {
    ByteMatrix m(gens[h + 1].size(), std::vector<std::uint8_t>(gens[h].size(), 0));
    for (std::size_t col = 0; col < gens[h].size(); ++col) {
      const Gen g = gens[h][col];
      const auto& from = circles[g.state];
      for (std::size_t j = 0; j < n; ++j) {
        if ((g.state >> j) & 1u) continue;
        const std::uint64_t t = g.state | (std::uint64_t{1} << j);
        const auto& to = circles[t];
        // Circles of the target that also exist unchanged in the source.
        std::uint64_t base = 0;
        std::vector<std::size_t> new_circles;
        std::vector<std::size_t> old_circles;
        for (std::size_t ci = 0; ci < to.size(); ++ci) {
          const std::size_t src = find_circle(from, *to[ci].begin());
          if (from[src] == to[ci]) {
            if ((g.xs >> src) & 1u) base |= std::uint64_t{1} << ci;
          } else {
            new_circles.push_back(ci);
          }
        }
        for (std::size_t ci = 0; ci < from.size(); ++ci)
          if (find_circle(to, *from[ci].begin()) == to.size() || to[find_circle(to, *from[ci].begin())] != from[ci])
            old_circles.push_back(ci);
        std::vector<std::uint64_t> images;
        if (old_circles.size() == 2 && new_circles.size() == 1) {
          const bool x1 = (g.xs >> old_circles[0]) & 1u;
          const bool x2 = (g.xs >> old_circles[1]) & 1u;
          if (x1 && x2) continue;
          images.push_back(base | (x1 || x2 ? std::uint64_t{1} << new_circles[0] : 0));
        } else if (old_circles.size() == 1 && new_circles.size() == 2) {
          const std::uint64_t a = std::uint64_t{1} << new_circles[0];
          const std::uint64_t b = std::uint64_t{1} << new_circles[1];
          if ((g.xs >> old_circles[0]) & 1u) {
            images.push_back(base | a | b);
          } else {
            images.push_back(base | a);
            images.push_back(base | b);
          }
        } else {
          throw InputError("the Khovanov oracle met a crossing whose smoothing change keeps one circle; "
                           "such diagrams are not planar");
        }
        for (std::uint64_t img : images) m[pos[h + 1].at({t, img})][col] ^= 1u;
      }
    }
    diff.push_back(std::move(m));
  }

  HomologyTable out;
  out.algebra = "khovanov-oracle";
  out.n_plus = n_plus;
  out.n_minus = n_minus;
  out.t = 0;
  std::map<std::pair<int, int>, std::size_t> graded;
  std::set<int> qs;
  const auto qdeg = [&](const Gen& g, std::size_t h) {
    const int nc = static_cast<int>(circles[g.state].size());
    int xs = 0;
    for (int ci = 0; ci < nc; ++ci) xs += static_cast<int>((g.xs >> ci) & 1u);
    return (nc - xs) - xs + static_cast<int>(h) + static_cast<int>(n_plus) - 2 * static_cast<int>(n_minus);
  };
  for (std::size_t h = 0; h <= n; ++h)
    for (const Gen& g : gens[h]) qs.insert(qdeg(g, h));
  std::vector<std::size_t> total(n + 1, 0);
  for (int q : qs) {
    std::vector<std::vector<std::size_t>> idx(n + 1);
    for (std::size_t h = 0; h <= n; ++h)
      for (std::size_t v = 0; v < gens[h].size(); ++v)
        if (qdeg(gens[h][v], h) == q) idx[h].push_back(v);
    std::vector<std::size_t> ranks(n, 0);
    for (std::size_t h = 0; h < n; ++h) {
      ByteMatrix sub(idx[h + 1].size(), std::vector<std::uint8_t>(idx[h].size(), 0));
      for (std::size_t r = 0; r < idx[h + 1].size(); ++r)
        for (std::size_t c = 0; c < idx[h].size(); ++c) sub[r][c] = diff[h][idx[h + 1][r]][idx[h][c]];
      ranks[h] = byte_rank(std::move(sub));
    }
    for (std::size_t h = 0; h <= n; ++h) {
      const std::size_t b = idx[h].size() - (h < n ? ranks[h] : 0) - (h > 0 ? ranks[h - 1] : 0);
      const int i = static_cast<int>(h) - static_cast<int>(n_minus);
      if (b != 0) graded[{i, q}] = b;
      total[h] += b;
    }
  }
  for (std::size_t h = 0; h <= n; ++h) {
    const int i = static_cast<int>(h) - static_cast<int>(n_minus);
    out.chain_dims[i] = gens[h].size();
    if (total[h] != 0) out.betti[i] = total[h];
  }
  out.graded = std::move(graded);
  return out;
}

}  // namespace uhqft
