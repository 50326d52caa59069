// Tropical 1-cycles over a scene: balancing, crossing detection, reduction to
// standard position, and the intersection pairing on surfaces.
#pragma once

#include <string>
#include <vector>

#include "tropper/scene.hpp"

namespace tropper {

// A cycle vertex on a codimension-one cell, with the incoming and outgoing
// edge data needed by the pairings.  Positions and xi_in live in the chart of
// rho.cells[0] resp. cell_in; m is the amoeba complement order of the slab
// at the vertex, in Lambda_rho coordinates.
struct CrossingEvent {
  std::string vertex;
  std::string rho, slab;
  std::string cell_in, cell_out;
  std::vector<Integer> xi_in, xi_out;
  std::vector<Integer> d_check;  // primitive normal positive into cell_in
  long c = 0;                    // <d_check, xi_in>
  std::vector<long> m;
  long kappa = 1;
  bool active = false;  // c != 0
  std::vector<Rational> pos;  // chart of rho.cells[0]
};

// Position of a cycle vertex expressed in the chart of `cell_id` (vertices on
// a rho are stored in the chart of rho.cells[0]).
std::vector<Rational> vertex_position_in(const Scene& s, const CycleVertex& v,
                                         const std::string& cell_id);

// Violations of the cycle condition: at chart-interior vertices the signed
// xi sum vanishes; at codimension-one vertices the outgoing sections match
// the adapted parallel transport of the incoming ones.
std::vector<std::string> check_balancing(const Scene& s, const Cycle& c);

// One event per vertex sitting on a codimension-one cell with edges on both
// sides, in vertex order.  Throws if such a vertex is not bivalent, has no
// slab, or sits on the amoeba of its slab function.
std::vector<CrossingEvent> find_crossings(const Scene& s, const Cycle& c);

// Standard position: wall intersections become bivalent vertices, and every
// slab vertex carries a section that either lies in Lambda_rho or maps to a
// generator of the normal quotient.  A vertex with xi = a zeta + b m is
// replaced by |a| + |b'| parallel strands through nearby points of rho,
// where m = b' m_prim; all three pairings are preserved.
Cycle normalize_cycle(const Scene& s, const Cycle& c);

// Surface intersection number (dimension 2 only): sum over transverse
// same-chart segment crossings of sign(det(dir1|dir2)) * det(xi1|xi2).
// Touching or overlapping segments are perturbed deterministically.
long intersection_pairing(const Scene& s, const Cycle& a, const Cycle& b);

}  // namespace tropper
