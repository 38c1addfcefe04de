#pragma once

// Hand-encoded diagrams used by the tests and the acceptance suite, plus a
// random diagram generator for property runs.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uhqft/diagram.hpp"

namespace uhqft::fixtures {

// k = 2, alpha = [1,0]. One crossing whose 0-state is two alpha circles.
SurfaceDiagram t_alpha();
// k = 2, alpha = [1,0], beta = [0,1]. Two crossings; 00 has circles alpha,
// beta and 11 has circles alpha+beta, 0.
SurfaceDiagram alpha_beta_square();
// k = 2, alpha = [1,0]. Two crossings; every single-1 state has one circle.
SurfaceDiagram pass_square();

SurfaceDiagram unknot(int k = 0, H1Label label = {});
// One-crossing unknots. The main arc carries main_label, the loop arc loop_label.
SurfaceDiagram positive_kink(int k = 0, H1Label main_label = {}, H1Label loop_label = {});
SurfaceDiagram negative_kink(int k = 0, H1Label main_label = {}, H1Label loop_label = {});

// Closure of a braid word; letter +i / -i is a positive / negative sigma_i.
// Each closing strand carries seam_label (zero for the planar closure).
SurfaceDiagram braid_closure(int strands, const std::vector<int>& word, int k = 0, H1Label seam_label = {});

SurfaceDiagram hopf_link();      // closure of sigma_1^2
SurfaceDiagram right_trefoil();  // closure of sigma_1^3

struct NamedPair {
  std::string name;
  SurfaceDiagram first;
  SurfaceDiagram second;
};

// Diagrams related by a single Reidemeister move, on a torus (k = 2).
std::vector<NamedPair> reidemeister_pairs();

struct NamedDiagram {
  std::string name;
  SurfaceDiagram diagram;
};

std::vector<NamedDiagram> all_fixtures();

// n crossings and 2n arcs; the 4n arc ends are dealt uniformly into the
// crossing slots, signs and labels are uniform. n = 0 gives one free circle.
SurfaceDiagram random_diagram(std::mt19937_64& rng, std::size_t n, int k);

}  // namespace uhqft::fixtures
