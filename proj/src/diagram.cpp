#include "uhqft/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "uhqft/errors.hpp"

namespace uhqft {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

constexpr std::array<std::array<int, 4>, 2> kPairing = {{{0, 1, 2, 3}, {0, 3, 1, 2}}};

void check_label(H1Label l, int k, const std::string& what) {
  if (k < 32 && (l.bits >> k) != 0) throw InputError(what + " has a label longer than k = " + std::to_string(k));
}

}  // namespace

SurfaceDiagram::SurfaceDiagram(int k, std::vector<Arc> arcs, std::vector<Crossing> crossings,
                               std::vector<H1Label> free_circles)
    : k_(k), arcs_(std::move(arcs)), crossings_(std::move(crossings)), free_circles_(std::move(free_circles)) {
  if (k_ < 0 || k_ > kMaxLabelDim)
    throw InputError("k must be in [0, " + std::to_string(kMaxLabelDim) + "], got " + std::to_string(k_));
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i > 0 && arcs_[i].id == arcs_[i - 1].id) throw InputError("duplicate arc id " + std::to_string(arcs_[i].id));
    check_label(arcs_[i].label, k_, "arc " + std::to_string(arcs_[i].id));
  }
  for (std::size_t i = 0; i < free_circles_.size(); ++i)
    check_label(free_circles_[i], k_, "free circle " + std::to_string(i));

  std::vector<std::array<int, 2>> uses(arcs_.size(), {0, 0});
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1)
      throw InputError("crossing " + std::to_string(c) + " has sign " + std::to_string(x.sign));
    for (const ArcEnd& e : x.ends) {
      if (e.end > 1) throw InputError("crossing " + std::to_string(c) + " references end " + std::to_string(e.end));
      const std::size_t a = arc_index(e.arc);
      if (++uses[a][e.end] > 1)
        throw InputError("end " + std::to_string(e.end) + " of arc " + std::to_string(e.arc) +
                         " is referenced more than once");
    }
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a)
    if (uses[a][0] != uses[a][1])
      throw InputError("arc " + std::to_string(arcs_[a].id) + " has a dangling end " +
                       std::to_string(uses[a][0] == 0 ? 0 : 1));
  if (crossings_.size() > kMaxStateCrossings)
    throw InputError("at most " + std::to_string(kMaxStateCrossings) + " crossings are representable");
}

std::size_t SurfaceDiagram::arc_index(std::uint32_t id) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), id, [](const Arc& a, std::uint32_t v) { return a.id < v; });
  if (it == arcs_.end() || it->id != id) throw InputError("unknown arc id " + std::to_string(id));
  return static_cast<std::size_t>(it - arcs_.begin());
}

ResolvedState resolve(const SurfaceDiagram& d, std::uint64_t epsilon) {
  const std::size_t n_arcs = d.arcs().size();
  UnionFind uf(n_arcs);
  for (std::size_t j = 0; j < d.crossing_count(); ++j) {
    const auto& ends = d.crossings()[j].ends;
    const auto& p = kPairing[(epsilon >> j) & 1u];
    uf.unite(static_cast<std::uint32_t>(d.arc_index(ends[p[0]].arc)),
             static_cast<std::uint32_t>(d.arc_index(ends[p[1]].arc)));
    uf.unite(static_cast<std::uint32_t>(d.arc_index(ends[p[2]].arc)),
             static_cast<std::uint32_t>(d.arc_index(ends[p[3]].arc)));
  }

  ResolvedState s;
  s.epsilon = epsilon;
  s.circle_of_arc.resize(n_arcs);
  // Roots are the smallest member index, so visiting arcs in order yields
  // circles sorted by smallest member id.
  std::vector<std::uint32_t> circle_of_root(n_arcs, UINT32_MAX);
  for (std::uint32_t a = 0; a < n_arcs; ++a) {
    const std::uint32_t r = uf.find(a);
    if (circle_of_root[r] == UINT32_MAX) {
      circle_of_root[r] = static_cast<std::uint32_t>(s.circles.size());
      s.circles.emplace_back();
    }
    Circle& c = s.circles[circle_of_root[r]];
    c.arcs.push_back(d.arcs()[a].id);
    c.label += d.arcs()[a].label;
    s.circle_of_arc[a] = circle_of_root[r];
  }
  for (H1Label l : d.free_circles()) s.circles.push_back(Circle{{}, l});
  return s;
}

std::uint64_t parse_state(std::string_view epsilon, std::size_t crossings) {
  if (epsilon.size() != crossings)
    throw InputError("state has " + std::to_string(epsilon.size()) + " bits, diagram has " +
                     std::to_string(crossings) + " crossings");
  std::uint64_t e = 0;
  for (std::size_t j = 0; j < epsilon.size(); ++j) {
    if (epsilon[j] != '0' && epsilon[j] != '1') throw InputError("state must consist of 0 and 1");
    if (epsilon[j] == '1') e |= std::uint64_t{1} << j;
  }
  return e;
}

std::string state_string(std::uint64_t epsilon, std::size_t crossings) {
  std::string s(crossings, '0');
  for (std::size_t j = 0; j < crossings; ++j)
    if ((epsilon >> j) & 1u) s[j] = '1';
  return s;
}

ResolvedState resolve(const SurfaceDiagram& d, std::string_view epsilon) {
  return resolve(d, parse_state(epsilon, d.crossing_count()));
}

std::string_view to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::Merge: return "merge";
    case TransitionKind::Split: return "split";
    case TransitionKind::Pass: return "pass";
  }
  return "?";
}

Transition transition(const SurfaceDiagram& d, const ResolvedState& source, const ResolvedState& target,
                      std::size_t j) {
  Transition t;
  for (const ArcEnd& e : d.crossings()[j].ends) {
    const std::size_t a = d.arc_index(e.arc);
    const std::uint32_t cs = source.circle_of_arc[a];
    const std::uint32_t ct = target.circle_of_arc[a];
    if (std::find(t.from.begin(), t.from.end(), cs) == t.from.end()) t.from.push_back(cs);
    if (std::find(t.to.begin(), t.to.end(), ct) == t.to.end()) t.to.push_back(ct);
  }
  std::sort(t.from.begin(), t.from.end());
  std::sort(t.to.begin(), t.to.end());
  if (t.from.size() == 2 && t.to.size() == 1)
    t.kind = TransitionKind::Merge;
  else if (t.from.size() == 1 && t.to.size() == 2)
    t.kind = TransitionKind::Split;
  else
    t.kind = TransitionKind::Pass;
  return t;
}

Transition transition(const SurfaceDiagram& d, std::uint64_t epsilon, std::size_t j) {
  if (j >= d.crossing_count()) throw InputError("crossing index out of range");
  if ((epsilon >> j) & 1u) throw InputError("transition needs bit " + std::to_string(j) + " of the state to be 0");
  return transition(d, resolve(d, epsilon), resolve(d, epsilon | (std::uint64_t{1} << j)), j);
}

std::size_t negative_crossing_count(const SurfaceDiagram& d) {
  return static_cast<std::size_t>(
      std::count_if(d.crossings().begin(), d.crossings().end(), [](const Crossing& c) { return c.sign < 0; }));
}

std::size_t positive_crossing_count(const SurfaceDiagram& d) {
  return d.crossing_count() - negative_crossing_count(d);
}

SurfaceDiagram mirror(const SurfaceDiagram& d) {
  std::vector<Crossing> crossings = d.crossings();
  for (Crossing& c : crossings) {
    std::rotate(c.ends.begin(), c.ends.begin() + 1, c.ends.end());
    c.sign = -c.sign;
  }
  return SurfaceDiagram(d.k(), d.arcs(), std::move(crossings), d.free_circles());
}

Adequacy weak_adequate(const SurfaceDiagram& d, Side side) {
  Adequacy out;
  const std::size_t n = d.crossing_count();
  if (n == 0) return out;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (side == Side::Plus) {
    const ResolvedState zero = resolve(d, std::uint64_t{0});
    for (std::size_t j = 0; j < n; ++j) {
      const ResolvedState next = resolve(d, std::uint64_t{1} << j);
      const Transition t = transition(d, zero, next, j);
      if (t.kind != TransitionKind::Split) continue;
      if (next.circles[t.to[0]].label.is_zero() || next.circles[t.to[1]].label.is_zero()) {
        out.adequate = false;
        out.violating.push_back(j);
      }
    }
  } else {
    const ResolvedState one = resolve(d, all);
    for (std::size_t j = 0; j < n; ++j) {
      const ResolvedState prev = resolve(d, all & ~(std::uint64_t{1} << j));
      const Transition t = transition(d, prev, one, j);
      if (t.kind != TransitionKind::Merge) continue;
      if (prev.circles[t.from[0]].label.is_zero() || prev.circles[t.from[1]].label.is_zero()) {
        out.adequate = false;
        out.violating.push_back(j);
      }
    }
  }
  return out;
}

SurfaceDiagram project_labels(const SurfaceDiagram& d, const f2::Matrix& m) {
  if (m.cols() != static_cast<std::size_t>(d.k()))
    throw InputError("projection has " + std::to_string(m.cols()) + " input coordinates, diagram has k = " +
                     std::to_string(d.k()));
  if (m.rows() > static_cast<std::size_t>(kMaxLabelDim))
    throw InputError("projection target dimension exceeds " + std::to_string(kMaxLabelDim));
  const auto apply = [&](H1Label l) {
    f2::Vector v(m.cols());
    for (int i = 0; i < d.k(); ++i) v.set(static_cast<std::size_t>(i), l.coord(i));
    const f2::Vector w = m * v;
    H1Label out;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.get(i)) out.bits |= 1u << i;
    return out;
  };
  std::vector<Arc> arcs = d.arcs();
  for (Arc& a : arcs) a.label = apply(a.label);
  std::vector<H1Label> free = d.free_circles();
  for (H1Label& l : free) l = apply(l);
  return SurfaceDiagram(static_cast<int>(m.rows()), std::move(arcs), d.crossings(), std::move(free));
}

}  // namespace uhqft
