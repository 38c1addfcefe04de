#pragma once

// Oriented link diagrams on a compact surface, reduced to their
// combinatorics: arcs labelled by H_1(F; F_2), crossings given by four arc
// ends in rotational order (slot 0 = incoming under-strand) and a sign.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uhqft/f2linalg.hpp"
#include "uhqft/label.hpp"

namespace uhqft {

struct ArcEnd {
  std::uint32_t arc = 0;  // arc id
  std::uint8_t end = 0;   // 0 or 1
  friend constexpr auto operator<=>(const ArcEnd&, const ArcEnd&) = default;
};

struct Arc {
  std::uint32_t id = 0;
  H1Label label;
  friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

struct Crossing {
  std::array<ArcEnd, 4> ends{};
  int sign = 1;
  friend constexpr bool operator==(const Crossing&, const Crossing&) = default;
};

inline constexpr std::size_t kMaxStateCrossings = 62;

class SurfaceDiagram {
 public:
  SurfaceDiagram() = default;
  // Validates and sorts arcs by id. Every arc end must be referenced by
  // exactly one crossing slot, or by none (the arc is then a free loop).
  // Throws InputError otherwise.
  SurfaceDiagram(int k, std::vector<Arc> arcs, std::vector<Crossing> crossings, std::vector<H1Label> free_circles = {});

  int k() const noexcept { return k_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<H1Label>& free_circles() const noexcept { return free_circles_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }

  // Position of an arc id in arcs(); throws InputError if absent.
  std::size_t arc_index(std::uint32_t id) const;

 private:
  int k_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Crossing> crossings_;
  std::vector<H1Label> free_circles_;
};

struct Circle {
  std::vector<std::uint32_t> arcs;  // arc ids, ascending; empty for a declared free circle
  H1Label label;
  friend bool operator==(const Circle&, const Circle&) = default;
};

// Circles are ordered by smallest member arc id, declared free circles last.
struct ResolvedState {
  std::uint64_t epsilon = 0;  // bit j = smoothing of crossing j
  std::vector<Circle> circles;
  std::vector<std::uint32_t> circle_of_arc;  // indexed like SurfaceDiagram::arcs()
};

ResolvedState resolve(const SurfaceDiagram& d, std::uint64_t epsilon);
// "011": character j is the smoothing of crossing j.
ResolvedState resolve(const SurfaceDiagram& d, std::string_view epsilon);

std::uint64_t parse_state(std::string_view epsilon, std::size_t crossings);
std::string state_string(std::uint64_t epsilon, std::size_t crossings);

enum class TransitionKind { Merge, Split, Pass };
std::string_view to_string(TransitionKind k);

// The circles of the source state touched by the crossing and the circles
// of the target state they turn into (indices into ResolvedState::circles).
struct Transition {
  TransitionKind kind = TransitionKind::Pass;
  std::vector<std::uint32_t> from;
  std::vector<std::uint32_t> to;
};

// Precondition: bit j of epsilon is 0. Throws InputError otherwise.
Transition transition(const SurfaceDiagram& d, std::uint64_t epsilon, std::size_t j);
Transition transition(const SurfaceDiagram& d, const ResolvedState& source, const ResolvedState& target,
                      std::size_t j);

std::size_t negative_crossing_count(const SurfaceDiagram& d);
std::size_t positive_crossing_count(const SurfaceDiagram& d);

// Changes every crossing: (s0,s1,s2,s3) -> (s1,s2,s3,s0), sign negated.
SurfaceDiagram mirror(const SurfaceDiagram& d);

enum class Side { Plus, Minus };

struct Adequacy {
  bool adequate = true;
  std::vector<std::size_t> violating;  // crossing indices
};

// Plus: no single 1-smoothing of the all-0 state splits off a 0-labelled
// circle. Minus: no single 0-smoothing of the all-1 state comes from a merge
// involving a 0-labelled circle.
Adequacy weak_adequate(const SurfaceDiagram& d, Side side);

// Applies the linear map m (rows = new k, cols = old k) to every label.
SurfaceDiagram project_labels(const SurfaceDiagram& d, const f2::Matrix& m);

}  // namespace uhqft
