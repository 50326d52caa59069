// The geometric scene: polyhedral charts glued along codimension-one cells,
// kinks, gluing data, slabs and walls, plus tropical cycles, loaded from TOML.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropper/intlinalg.hpp"
#include "tropper/multval.hpp"
#include "tropper/series.hpp"

namespace tropper {

struct Cell {
  std::string id;
  // n . x >= c rows; empty list means the whole chart.
  std::vector<std::pair<std::vector<Integer>, Rational>> halfspaces;

  bool contains(const std::vector<Rational>& p) const;
  bool strictly_contains(const std::vector<Rational>& p) const;
};

// Codimension-one cell with its two incident maximal cells.  Every piece of
// geometric data is stored once per adjacent chart.
struct Rho {
  std::string id;
  std::array<std::string, 2> cells;
  std::array<IntMat, 2> basis;                 // rows: basis of Lambda_rho
  std::array<std::vector<Integer>, 2> zeta;    // normal generator into cells[k]
  std::array<std::vector<Rational>, 2> origin; // one point of rho in each chart
  IntMat transition;                            // linear part, chart 0 -> chart 1
  bool boundary = false;
  long kappa = 1;

  // Derived at load time.
  IntMat transition_inv;
  std::array<std::vector<Integer>, 2> d_check;  // primitive normal, positive on zeta
};

struct Slab {
  std::string id;
  std::string rho;
  std::vector<std::string> vars;  // names of the Lambda_rho basis directions
  std::string expr;
  Series f;                       // lambda_dim = n - 1
};

struct Wall {
  std::string id;
  std::string cell;
  Series f;  // 1 + a z^m t^l over the chart coordinates
  std::vector<Integer> m;
  std::vector<Integer> d_check;
  // Carrier hyperplane: normal . x = offset, optionally clipped by halfspaces.
  std::vector<Integer> normal;
  Rational offset;
  std::vector<std::pair<std::vector<Integer>, Rational>> bounds;
};

struct CycleVertex {
  std::string id;
  std::string at;  // cell id or rho id
  std::vector<Rational> pos;
};

struct CycleEdge {
  std::string tail, head;
  std::string cell;
  std::vector<Integer> xi;
};

struct Cycle {
  std::string id;
  std::vector<CycleVertex> vertices;
  std::vector<CycleEdge> edges;

  const CycleVertex& vertex(const std::string& id) const;
};

struct Scene {
  int dim = 2;
  int k = 4;
  std::vector<std::string> coords;
  std::vector<std::string> params;
  std::map<std::string, double> param_values;
  std::vector<Cell> cells;
  std::vector<Rho> rhos;
  std::vector<Slab> slabs;
  std::vector<Wall> walls;
  std::vector<Cycle> cycles;
  // (cell id, rho id) -> values of s on the chart basis vectors.
  std::map<std::pair<std::string, std::string>, std::vector<MultValue>> gluing;

  const Cell* find_cell(const std::string& id) const;
  const Rho* find_rho(const std::string& id) const;
  const Slab* find_slab(const std::string& id) const;
  const Slab* slab_on(const std::string& rho_id) const;
  const Wall* find_wall(const std::string& id) const;
  const Cycle* find_cycle(const std::string& id) const;
  MultValue gluing_value(const std::string& cell, const std::string& rho,
                         const std::vector<Integer>& xi) const;
};

Scene load_scene(const std::string& path);
Scene parse_scene(const std::string& text);

// Structural checks; empty result means the scene is well formed.
std::vector<std::string> validate_scene(const Scene& s);

// Side index (0/1) of a cell relative to a rho; throws if not adjacent.
int rho_side(const Rho& r, const std::string& cell);

// Parallel transport of a tangent vector across rho, from the chart of
// `from_cell` to the opposite chart.  With `m` (complement order in
// Lambda_rho coordinates) the adapted structure is used: the image picks up
// <d_check, v> . m.
std::vector<Integer> transport_vector(const Rho& r, const std::string& from_cell,
                                      const std::vector<Integer>& v,
                                      const std::vector<long>* m = nullptr);

// A point of rho given in one chart, expressed in the other.
std::vector<Rational> transport_point(const Rho& r, const std::string& from_cell,
                                      const std::vector<Rational>& p);

// Coordinates of a point of rho with respect to the Lambda_rho basis of the
// given side.
std::vector<Rational> lambda_coordinates(const Rho& r, int side, const std::vector<Rational>& p);

MultValue parse_mult_value(const std::string& text);

}  // namespace tropper
