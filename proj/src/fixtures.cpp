#include "uhqft/fixtures.hpp"

#include <algorithm>
#include <map>

#include "uhqft/errors.hpp"

namespace uhqft::fixtures {

namespace {

constexpr H1Label kAlpha{0b01};
constexpr H1Label kBeta{0b10};

ArcEnd e(std::uint32_t arc, std::uint8_t end) { return ArcEnd{arc, end}; }

Crossing x(ArcEnd s0, ArcEnd s1, ArcEnd s2, ArcEnd s3, int sign) { return Crossing{{s0, s1, s2, s3}, sign}; }

}  // namespace

SurfaceDiagram t_alpha() {
  return SurfaceDiagram(2, {{0, kAlpha}, {1, kAlpha}}, {x(e(0, 0), e(0, 1), e(1, 0), e(1, 1), 1)});
}

SurfaceDiagram alpha_beta_square() {
  return SurfaceDiagram(2, {{0, kAlpha}, {1, {}}, {2, {}}, {3, kBeta}},
                        {x(e(0, 0), e(1, 1), e(2, 0), e(3, 1), 1), x(e(1, 0), e(0, 1), e(3, 0), e(2, 1), 1)});
}

SurfaceDiagram pass_square() {
  return SurfaceDiagram(2, {{0, kAlpha}, {1, {}}, {2, {}}, {3, {}}},
                        {x(e(0, 0), e(1, 0), e(2, 0), e(3, 0), 1), x(e(0, 1), e(2, 1), e(1, 1), e(3, 1), 1)});
}

SurfaceDiagram unknot(int k, H1Label label) { return SurfaceDiagram(k, {}, {}, {label}); }

SurfaceDiagram positive_kink(int k, H1Label main_label, H1Label loop_label) {
  return SurfaceDiagram(k, {{0, main_label}, {1, loop_label}}, {x(e(0, 1), e(0, 0), e(1, 0), e(1, 1), 1)});
}

SurfaceDiagram negative_kink(int k, H1Label main_label, H1Label loop_label) {
  return SurfaceDiagram(k, {{0, main_label}, {1, loop_label}}, {x(e(0, 1), e(1, 1), e(1, 0), e(0, 0), -1)});
}

SurfaceDiagram braid_closure(int strands, const std::vector<int>& word, int k, H1Label seam_label) {
  if (strands < 1) throw InputError("a braid needs at least one strand");
  std::uint32_t next = 0;
  std::vector<std::uint32_t> start(static_cast<std::size_t>(strands));
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(strands));
  for (std::size_t p = 0; p < start.size(); ++p) start[p] = cur[p] = next++;
  std::vector<Crossing> crossings;
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands) throw InputError("braid letter " + std::to_string(letter) + " out of range");
    const auto p = static_cast<std::size_t>(i);
    const std::uint32_t bl = cur[p], br = cur[p + 1];
    const std::uint32_t tl = next++, tr = next++;
    if (letter > 0)
      crossings.push_back(x(e(br, 1), e(tr, 0), e(tl, 0), e(bl, 1), 1));
    else
      crossings.push_back(x(e(bl, 1), e(br, 1), e(tr, 0), e(tl, 0), -1));
    cur[p] = tl;
    cur[p + 1] = tr;
  }
  // Close up: the bottom segment of each position continues the top one.
  std::map<std::uint32_t, std::uint32_t> rename;
  for (std::size_t p = 0; p < start.size(); ++p)
    if (start[p] != cur[p]) rename[start[p]] = cur[p];
  for (Crossing& c : crossings)
    for (ArcEnd& end : c.ends)
      if (auto it = rename.find(end.arc); it != rename.end()) end.arc = it->second;

  std::vector<std::uint32_t> kept;
  for (std::uint32_t a = 0; a < next; ++a)
    if (!rename.count(a)) kept.push_back(a);
  std::map<std::uint32_t, std::uint32_t> compact;
  for (std::uint32_t a : kept) compact.emplace(a, static_cast<std::uint32_t>(compact.size()));
  std::vector<Arc> arcs;
  for (std::uint32_t a : kept) {
    const bool seam = std::find(cur.begin(), cur.end(), a) != cur.end();
    arcs.push_back({compact.at(a), seam ? seam_label : H1Label{}});
  }
  for (Crossing& c : crossings)
    for (ArcEnd& end : c.ends) end.arc = compact.at(end.arc);
  return SurfaceDiagram(k, std::move(arcs), std::move(crossings));
}

SurfaceDiagram hopf_link() { return braid_closure(2, {1, 1}); }

SurfaceDiagram right_trefoil() { return braid_closure(2, {1, 1, 1}); }

std::vector<NamedPair> reidemeister_pairs() {
  std::vector<NamedPair> out;
  out.push_back({"R1", unknot(2, kAlpha), negative_kink(2, kAlpha, {})});
  // Finger move of one alpha-circle across a parallel one.
  out.push_back({"R2", SurfaceDiagram(2, {}, {}, {kAlpha, kAlpha}),
                 SurfaceDiagram(2, {{0, {}}, {1, kAlpha}, {2, {}}, {3, kAlpha}},
                                {x(e(3, 1), e(0, 0), e(2, 0), e(1, 1), 1), x(e(2, 1), e(0, 1), e(3, 0), e(1, 0), -1)})});
  out.push_back({"R3", braid_closure(3, {1, 2, 1}, 2, kAlpha), braid_closure(3, {2, 1, 2}, 2, kAlpha)});
  return out;
}

std::vector<NamedDiagram> all_fixtures() {
  std::vector<NamedDiagram> out = {
      {"t_alpha", t_alpha()},
      {"alpha_beta_square", alpha_beta_square()},
      {"pass_square", pass_square()},
      {"unknot", unknot()},
      {"positive_kink", positive_kink()},
      {"negative_kink", negative_kink()},
      {"hopf", hopf_link()},
      {"trefoil", right_trefoil()},
  };
  for (const NamedPair& p : reidemeister_pairs()) {
    out.push_back({p.name + "_a", p.first});
    out.push_back({p.name + "_b", p.second});
  }
  return out;
}

SurfaceDiagram random_diagram(std::mt19937_64& rng, std::size_t n, int k) {
  std::uniform_int_distribution<std::uint32_t> label(0, (std::uint32_t{1} << k) - 1);
  if (n == 0) return SurfaceDiagram(k, {}, {}, {H1Label{label(rng)}});
  std::vector<ArcEnd> ends;
  std::vector<Arc> arcs;
  for (std::uint32_t a = 0; a < 2 * n; ++a) {
    arcs.push_back({a, H1Label{label(rng)}});
    ends.push_back(e(a, 0));
    ends.push_back(e(a, 1));
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < n; ++c)
    crossings.push_back(x(ends[4 * c], ends[4 * c + 1], ends[4 * c + 2], ends[4 * c + 3], coin(rng) ? 1 : -1));
  return SurfaceDiagram(k, std::move(arcs), std::move(crossings));
}

}  // namespace uhqft::fixtures
