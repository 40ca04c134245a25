#pragma once

// Structured meshes for the two plate mid-surfaces and the 3D patch with
// the bolt analog.  All coupling interfaces (gamma_I, gamma_C, Gamma_I,
// Gamma_C) fall on shared grid lines so cross-model pairing is exact
// node-to-node.  Coordinates in mm.

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace glocal::mesh {

inline constexpr double kGeomTol = 1e-9;

struct PlateGeometry {
  double plate_length = 280.0;  // each plate, x extent
  double lower_width = 160.0;
  double upper_width = 80.0;
  double thickness = 20.0;
  double overlap = 140.0;  // x extent shared by the two plates
  bool single_plate = false;
  bool symmetric = true;  // half model, y >= 0
  bool with_patch = true;

  // patch footprint, centered on the bolt axis
  double connector_region = 20.0;  // square side of the rigid region
  double hole = 12.0;
  double bolt = 10.0;
  double head = 20.0;
  double head_thickness = 8.0;
  bool bolted = true;             // false: fused blocks, no hole, no contact
  double interface_offset = 0.0;  // L, gamma_C to connector-region edge
  double buffer_width = 5.0;      // b, gamma_C to gamma_I
  int buffer_elems = 4;

  double elem_fine = 2.5;    // target size inside the patch box
  double elem_coarse = 10.0; // target size in the far field
  int z_elems_per_block = 4;
  int head_layers = 2;

  double bolt_x() const {
    return single_plate ? plate_length / 2.0 : plate_length - overlap / 2.0;
  }
  double ring_inner() const { return connector_region / 2.0 + interface_offset; }
  double ring_outer() const { return ring_inner() + buffer_width; }

  void validate() const;
};

struct PlateMesh {
  std::vector<double> x, y;
  std::vector<int> plate_of;  // 0 lower, 1 upper
  std::vector<std::array<int, 4>> quads;  // counterclockwise
  std::vector<int> quad_plate;
  std::array<double, 2> zmid{0.0, 0.0};
  int n_plates = 1;
  std::array<int, 2> master{-1, -1};  // connector master node per plate
  std::map<std::string, std::vector<int>> sets;
  PlateGeometry geom;

  int n_nodes() const { return static_cast<int>(x.size()); }
  const std::vector<int>& set(const std::string& name) const;
  // Chebyshev distance from the bolt axis in the mid-surface plane.
  double ring_dist(int node) const;
};

enum Body : int { kLowerBlock = 0, kUpperBlock = 1, kBolt = 2 };

struct ContactPair {
  int a = -1, b = -1;             // node ids; n points from a-side to b-side
  std::array<double, 3> n{0, 0, 1};
  double gap0 = 0.0;
  double area = 0.0;              // tributary area
  int group = 0;                  // 0 plate-plate, 1 head bearing, 2 nut bearing
  bool interior = true;           // part of the free body inside Gamma_C
};

struct PatchGeometry {
  double thickness = 20.0;
  double hole = 12.0;
  double bolt = 10.0;
  double head = 20.0;
  double head_thickness = 8.0;
  double connector_region = 20.0;
  double interface_offset = 0.0;
  double buffer_width = 5.0;
  int buffer_elems = 4;
  double elem_fine = 2.5;
  int z_elems_per_block = 4;
  int head_layers = 2;
  bool bolted = true;
  bool symmetric = true;
  bool single_plate = false;
  double bolt_x = 210.0;

  double ring_inner() const { return connector_region / 2.0 + interface_offset; }
  double ring_outer() const { return ring_inner() + buffer_width; }
  void validate() const;
};

PatchGeometry make_patch_geometry(const PlateGeometry& g);

struct SolidMesh {
  std::vector<std::array<double, 3>> X;
  std::vector<int> body_of;
  std::vector<std::array<int, 8>> hexes;
  std::vector<int> hex_body;
  std::vector<char> hex_interior;  // element belongs to the inner free body
  std::vector<int> bolt_column;    // hex ids of the shank inside the grip
  std::vector<ContactPair> pairs;
  std::map<std::string, std::vector<int>> sets;  // Gamma_I, Gamma_C, symmetry
  PatchGeometry geom;

  int n_nodes() const { return static_cast<int>(X.size()); }
  int n_hexes() const { return static_cast<int>(hexes.size()); }
  const std::vector<int>& set(const std::string& name) const;
  double ring_dist(int node) const;
};

PlateMesh build_plate_mesh(const PlateGeometry& g);
SolidMesh build_patch_mesh(const PatchGeometry& g);

// Discrete R-operator data: one column of 3D nodes per plate interface node.
struct PairingColumn {
  int plate_node = -1;
  int plate = 0;
  std::array<double, 2> normal{1.0, 0.0};  // outward from the patch, in-plane
  std::vector<int> solid_nodes;            // ascending z
  std::vector<double> zoffset;             // z - zmid of the owning plate
  std::vector<double> tributary;           // sums to the plate thickness
};

struct InterfacePairing {
  char which = 'I';
  std::vector<PairingColumn> columns;
};

InterfacePairing pair_interfaces(const PlateMesh& plate, const SolidMesh& solid,
                                 char which);

// Geometry of one grid interval set; shared between the two meshers so the
// in-plane lines inside the patch box coincide exactly.
std::vector<double> patch_box_lines(const PatchGeometry& g);

double hex_volume(const SolidMesh& m, int hex);
double quad_area(const PlateMesh& m, int quad);

// Plain-text dumps (format documented in the README; consumed by the field
// writer and by the round-trip tests).
void dump(const PlateMesh& m, std::ostream& os);
void dump(const SolidMesh& m, std::ostream& os);

}  // namespace glocal::mesh
