#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace glocal::mesh {

namespace {

bool close(double a, double b, double tol = kGeomTol) {
  return std::abs(a - b) <= tol;
}

// Merge key points (tolerance-deduplicated), then subdivide each interval
// by a target size; buffer intervals get exactly `buffer_elems` cells.
std::vector<double> build_lines(std::vector<double> keys, double target,
                                double buf_lo, double buf_hi, int buf_elems) {
  std::sort(keys.begin(), keys.end());
  std::vector<double> breaks;
  for (double k : keys)
    if (breaks.empty() || k - breaks.back() > 1e-7) breaks.push_back(k);

  std::vector<double> lines;
  lines.push_back(breaks.front());
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i], hi = breaks[i + 1], len = hi - lo;
    const double mid = std::abs(0.5 * (lo + hi));
    int n;
    if (buf_elems > 0 && mid > buf_lo + 1e-9 && mid < buf_hi - 1e-9)
      n = buf_elems;
    else
      n = std::max(1, static_cast<int>(std::lround(len / target)));
    for (int k = 1; k <= n; ++k) lines.push_back(lo + len * k / n);
  }
  return lines;
}

std::vector<double> coarse_lines(double lo, double hi, double target) {
  std::vector<double> lines;
  const double len = hi - lo;
  const int n = std::max(1, static_cast<int>(std::lround(len / target)));
  for (int k = 0; k <= n; ++k) lines.push_back(lo + len * k / n);
  return lines;
}

int find_line(const std::vector<double>& lines, double v) {
  for (size_t i = 0; i < lines.size(); ++i)
    if (close(lines[i], v, 1e-7)) return static_cast<int>(i);
  return -1;
}

struct Grid3 {
  std::vector<double> gx, gy, gz;
  std::map<std::array<int, 4>, int> node_of;  // (body,i,j,k) -> id
};

// Trilinear shape derivatives at a reference point.
void hex_dN(double xi, double eta, double ze, double dN[8][3]) {
  const double s[8][3] = {{-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
                          {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1}};
  for (int a = 0; a < 8; ++a) {
    dN[a][0] = 0.125 * s[a][0] * (1 + s[a][1] * eta) * (1 + s[a][2] * ze);
    dN[a][1] = 0.125 * s[a][1] * (1 + s[a][0] * xi) * (1 + s[a][2] * ze);
    dN[a][2] = 0.125 * s[a][2] * (1 + s[a][0] * xi) * (1 + s[a][1] * eta);
  }
}

double hex_jacobian(const SolidMesh& m, int e, double xi, double eta,
                    double ze) {
  double dN[8][3];
  hex_dN(xi, eta, ze, dN);
  Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
  for (int a = 0; a < 8; ++a) {
    const auto& Xa = m.X[m.hexes[e][a]];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) J(i, j) += dN[a][j] * Xa[i];
  }
  return J.determinant();
}

}  // namespace

void PlateGeometry::validate() const {
  auto req = [](bool ok, const std::string& msg) {
    if (!ok) throw Error("plate geometry: " + msg);
  };
  req(plate_length > 0 && lower_width > 0 && upper_width > 0 && thickness > 0,
      "dimensions must be positive");
  req(elem_fine > 0 && elem_coarse > 0, "element sizes must be positive");
  if (!single_plate)
    req(overlap > 0 && overlap < plate_length, "overlap must lie in (0, length)");
  if (!with_patch) return;
  req(interface_offset >= 0, "interface offset L must be non-negative");
  req(buffer_width > 0 && buffer_elems >= 1, "buffer must have positive width");
  const double a = ring_outer(), bx = bolt_x();
  req(connector_region > 0, "connector region must be positive");
  if (bolted) {
    req(hole < 2 * ring_outer(), "hole larger than patch");
    req(bolt > 0 && bolt <= hole, "non-conforming contact surfaces: bolt section must fit the hole");
    req(hole < head, "non-conforming contact surfaces: head must overlap the plates");
    req(head <= 2 * ring_inner() + 1e-9, "head must stay inside gamma_C");
  }
  // patch box strictly inside both plates
  const double x_lo_low = 0.0, x_hi_low = plate_length;
  req(bx - a > x_lo_low + 1e-9 && bx + a < x_hi_low - 1e-9,
      "interface offset not resolvable: patch box exceeds the lower plate");
  if (!single_plate) {
    const double x_lo_up = plate_length - overlap;
    const double x_hi_up = x_lo_up + plate_length;
    req(bx - a > x_lo_up + 1e-9 && bx + a < x_hi_up - 1e-9,
        "interface offset not resolvable: patch box exceeds the upper plate");
    req(a < upper_width / 2 - 1e-9,
        "interface offset not resolvable: patch box exceeds the upper plate width");
  }
  req(a < lower_width / 2 - 1e-9,
      "interface offset not resolvable: patch box exceeds the lower plate width");
}

void PatchGeometry::validate() const {
  auto req = [](bool ok, const std::string& msg) {
    if (!ok) throw Error("patch geometry: " + msg);
  };
  req(thickness > 0 && elem_fine > 0, "dimensions must be positive");
  req(z_elems_per_block >= 1, "need at least one element through each block");
  req(interface_offset >= 0 && buffer_width > 0 && buffer_elems >= 1,
      "buffer must have positive width");
  if (bolted) {
    req(!single_plate, "bolted patch requires two plates");
    req(hole < 2 * ring_outer(), "hole larger than patch");
    req(bolt > 0 && bolt <= hole, "non-conforming contact surfaces: bolt section must fit the hole");
    req(hole < head, "non-conforming contact surfaces: head must overlap the plates");
    req(head <= 2 * ring_inner() + 1e-9, "head must stay inside Gamma_C");
    req(head_thickness > 0 && head_layers >= 1, "head must have thickness");
  }
}

PatchGeometry make_patch_geometry(const PlateGeometry& g) {
  PatchGeometry p;
  p.thickness = g.thickness;
  p.hole = g.hole;
  p.bolt = g.bolt;
  p.head = g.head;
  p.head_thickness = g.head_thickness;
  p.connector_region = g.connector_region;
  p.interface_offset = g.interface_offset;
  p.buffer_width = g.buffer_width;
  p.buffer_elems = g.buffer_elems;
  p.elem_fine = g.elem_fine;
  p.z_elems_per_block = g.z_elems_per_block;
  p.head_layers = g.head_layers;
  p.bolted = g.bolted;
  p.symmetric = g.symmetric;
  p.single_plate = g.single_plate;
  p.bolt_x = g.bolt_x();
  return p;
}

std::vector<double> patch_box_lines(const PatchGeometry& g) {
  const double c = g.ring_inner(), a = g.ring_outer();
  std::vector<double> keys = {0.0, c, a, -c, -a};
  keys.push_back(g.connector_region / 2.0);
  keys.push_back(-g.connector_region / 2.0);
  if (g.bolted) {
    for (double v : {g.bolt / 2.0, g.hole / 2.0, g.head / 2.0}) {
      keys.push_back(v);
      keys.push_back(-v);
    }
  }
  return build_lines(std::move(keys), g.elem_fine, c, a, g.buffer_elems);
}

const std::vector<int>& PlateMesh::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw Error("plate mesh: unknown set '" + name + "'");
  return it->second;
}

double PlateMesh::ring_dist(int node) const {
  return std::max(std::abs(x[node] - geom.bolt_x()), std::abs(y[node]));
}

const std::vector<int>& SolidMesh::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw Error("solid mesh: unknown set '" + name + "'");
  return it->second;
}

double SolidMesh::ring_dist(int node) const {
  return std::max(std::abs(X[node][0] - geom.bolt_x), std::abs(X[node][1]));
}

PlateMesh build_plate_mesh(const PlateGeometry& g) {
  g.validate();
  PlateMesh m;
  m.geom = g;
  m.n_plates = g.single_plate ? 1 : 2;
  if (g.single_plate)
    m.zmid = {0.0, 0.0};
  else
    m.zmid = {-g.thickness / 2.0, g.thickness / 2.0};

  const double bx = g.bolt_x();
  const double a = g.ring_outer(), c = g.ring_inner();
  std::vector<double> box;
  if (g.with_patch) box = patch_box_lines(make_patch_geometry(g));

  // embed the (relative) box lines around `center` into [lo, hi]
  auto embed = [&](double lo, double hi, double center) {
    std::vector<double> lines = coarse_lines(lo, center - a, g.elem_coarse);
    for (double v : box) {
      const double w = v + center;
      if (w > lines.back() + 1e-7) lines.push_back(w);
    }
    for (double v : coarse_lines(center + a, hi, g.elem_coarse))
      if (v > lines.back() + 1e-7) lines.push_back(v);
    return lines;
  };

  for (int p = 0; p < m.n_plates; ++p) {
    const double x_lo = (p == 0) ? 0.0 : g.plate_length - g.overlap;
    const double x_hi = x_lo + g.plate_length;
    const double width = (p == 0) ? g.lower_width : g.upper_width;
    const double y_hi = width / 2.0;
    const double y_lo = g.symmetric ? 0.0 : -y_hi;

    std::vector<double> gx = g.with_patch ? embed(x_lo, x_hi, bx)
                                          : coarse_lines(x_lo, x_hi, g.elem_coarse);
    std::vector<double> gy;
    if (!g.with_patch) {
      gy = coarse_lines(y_lo, y_hi, g.elem_coarse);
    } else if (g.symmetric) {
      for (double v : box)
        if (v > -1e-9) gy.push_back(v);
      for (double v : coarse_lines(a, y_hi, g.elem_coarse))
        if (v > gy.back() + 1e-7) gy.push_back(v);
    } else {
      gy = embed(y_lo, y_hi, 0.0);
    }

    const int nx = static_cast<int>(gx.size()), ny = static_cast<int>(gy.size());
    std::vector<int> id(nx * ny);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        id[j * nx + i] = m.n_nodes();
        m.x.push_back(gx[i]);
        m.y.push_back(gy[j]);
        m.plate_of.push_back(p);
      }
    for (int j = 0; j + 1 < ny; ++j)
      for (int i = 0; i + 1 < nx; ++i) {
        m.quads.push_back({id[j * nx + i], id[j * nx + i + 1],
                           id[(j + 1) * nx + i + 1], id[(j + 1) * nx + i]});
        m.quad_plate.push_back(p);
      }

    const std::string suffix = (p == 0) ? "_lower" : "_upper";
    auto& gamma_i = m.sets["gamma_I" + suffix];
    auto& gamma_c = m.sets["gamma_C" + suffix];
    auto& conn = m.sets["connector" + suffix];
    auto& omega_i = m.sets["omega_I" + suffix];
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const int n = id[j * nx + i];
        const double rx = std::abs(gx[i] - bx), ry = std::abs(gy[j]);
        const double r = std::max(rx, ry);
        if (g.with_patch) {
          if (close(r, a, 1e-7)) gamma_i.push_back(n);
          if (close(r, c, 1e-7) && r < a - 1e-7) gamma_c.push_back(n);
          if (r < a + 1e-7) omega_i.push_back(n);
          if (!g.single_plate && r < g.connector_region / 2.0 - 1e-7) {
            if (close(rx, 0, 1e-7) && close(ry, 0, 1e-7))
              m.master[p] = n;
            else
              conn.push_back(n);
          }
        }
        if (p == 0 && close(gx[i], 0.0, 1e-7)) m.sets["clamped"].push_back(n);
        if (p == m.n_plates - 1 && close(gx[i], x_hi, 1e-7))
          m.sets["loaded"].push_back(n);
        if (g.symmetric && close(gy[j], 0.0, 1e-7))
          m.sets["symmetry"].push_back(n);
      }
  }
  for (auto* name : {"clamped", "loaded", "symmetry", "gamma_I_lower",
                     "gamma_C_lower", "connector_lower", "omega_I_lower"})
    m.sets.try_emplace(name);
  if (m.n_plates == 2)
    for (auto* name : {"gamma_I_upper", "gamma_C_upper", "connector_upper",
                       "omega_I_upper"})
      m.sets.try_emplace(name);

  if (g.with_patch && !g.single_plate && (m.master[0] < 0 || m.master[1] < 0))
    throw Error("plate mesh: bolt axis does not fall on a grid node");

  // orientation check
  for (int e = 0; e < static_cast<int>(m.quads.size()); ++e)
    if (quad_area(m, e) <= 0) throw Error("plate mesh: non-positive Jacobian");
  return m;
}

SolidMesh build_patch_mesh(const PatchGeometry& g) {
  g.validate();
  SolidMesh m;
  m.geom = g;

  const double h = g.thickness;
  const double c = g.ring_inner(), a = g.ring_outer();
  const double bx = g.bolt_x;

  Grid3 grid;
  {
    std::vector<double> rel = patch_box_lines(g);
    for (double v : rel) {
      if (g.symmetric && v < -1e-9) continue;
      grid.gy.push_back(v);
    }
    for (double v : rel) grid.gx.push_back(v + bx);
  }
  {
    std::vector<double> zb;  // block boundaries
    if (g.single_plate)
      zb = {-h / 2.0, h / 2.0};
    else
      zb = {-h, 0.0, h};
    for (size_t i = 0; i + 1 < zb.size(); ++i) {
      const double lo = zb[i], hi = zb[i + 1];
      for (int k = (i == 0 ? 0 : 1); k <= g.z_elems_per_block; ++k)
        grid.gz.push_back(lo + (hi - lo) * k / g.z_elems_per_block);
    }
    if (g.bolted) {
      std::vector<double> head, nut;
      for (int k = 0; k < g.head_layers; ++k) {
        head.push_back(-h - g.head_thickness * (g.head_layers - k) / g.head_layers);
        nut.push_back(h + g.head_thickness * (k + 1) / g.head_layers);
      }
      grid.gz.insert(grid.gz.begin(), head.begin(), head.end());
      grid.gz.insert(grid.gz.end(), nut.begin(), nut.end());
    }
  }

  const int nx = static_cast<int>(grid.gx.size());
  const int ny = static_cast<int>(grid.gy.size());
  const int nz = static_cast<int>(grid.gz.size());

  // body of the cell whose center is (cx, cy, cz); -1 = void
  auto classify = [&](double cx, double cy, double cz) -> int {
    const double r = std::max(std::abs(cx - bx), std::abs(cy));
    if (r > a) return -1;
    if (g.single_plate) {
      return (cz > -h / 2 && cz < h / 2) ? kLowerBlock : -1;
    }
    if (cz > -h && cz < h) {
      const int block = cz < 0 ? kLowerBlock : kUpperBlock;
      if (!g.bolted) return kLowerBlock;  // fused: one body through both plates
      if (r > g.hole / 2) return block;
      if (r < g.bolt / 2) return kBolt;
      return -1;  // clearance annulus
    }
    if (!g.bolted) return -1;
    if ((cz > -h - g.head_thickness && cz < -h) ||
        (cz > h && cz < h + g.head_thickness))
      return (r < g.head / 2) ? kBolt : -1;
    return -1;
  };

  std::vector<int> cell_body((nx - 1) * (ny - 1) * (nz - 1), -1);
  auto cell = [&](int i, int j, int k) -> int& {
    return cell_body[(k * (ny - 1) + j) * (nx - 1) + i];
  };
  for (int k = 0; k + 1 < nz; ++k)
    for (int j = 0; j + 1 < ny; ++j)
      for (int i = 0; i + 1 < nx; ++i)
        cell(i, j, k) = classify(0.5 * (grid.gx[i] + grid.gx[i + 1]),
                                 0.5 * (grid.gy[j] + grid.gy[j + 1]),
                                 0.5 * (grid.gz[k] + grid.gz[k + 1]));

  auto node = [&](int body, int i, int j, int k) -> int {
    auto [it, inserted] = grid.node_of.try_emplace({body, i, j, k}, m.n_nodes());
    if (inserted) {
      m.X.push_back({grid.gx[i], grid.gy[j], grid.gz[k]});
      m.body_of.push_back(body);
    }
    return it->second;
  };

  for (int k = 0; k + 1 < nz; ++k)
    for (int j = 0; j + 1 < ny; ++j)
      for (int i = 0; i + 1 < nx; ++i) {
        const int body = cell(i, j, k);
        if (body < 0) continue;
        m.hexes.push_back({node(body, i, j, k), node(body, i + 1, j, k),
                           node(body, i + 1, j + 1, k), node(body, i, j + 1, k),
                           node(body, i, j, k + 1), node(body, i + 1, j, k + 1),
                           node(body, i + 1, j + 1, k + 1),
                           node(body, i, j + 1, k + 1)});
        m.hex_body.push_back(body);
        const double cx = 0.5 * (grid.gx[i] + grid.gx[i + 1]);
        const double cy = 0.5 * (grid.gy[j] + grid.gy[j + 1]);
        const double cz = 0.5 * (grid.gz[k] + grid.gz[k + 1]);
        const double r = std::max(std::abs(cx - bx), std::abs(cy));
        m.hex_interior.push_back(body == kBolt || r < c - 1e-9);
        if (body == kBolt && cz > -h && cz < h)
          m.bolt_column.push_back(m.n_hexes() - 1);
      }

  // contact pairs on the three horizontal interface planes
  if (g.bolted) {
    struct Plane {
      double z;
      int below, above, group;
    };
    const std::vector<Plane> planes = {{-h, kBolt, kLowerBlock, 1},
                                       {0.0, kLowerBlock, kUpperBlock, 0},
                                       {h, kUpperBlock, kBolt, 2}};
    for (const auto& pl : planes) {
      const int k = find_line(grid.gz, pl.z);
      if (k <= 0 || k >= nz - 1) continue;
      std::map<std::pair<int, int>, double> trib;  // corner vertex -> area
      for (int j = 0; j + 1 < ny; ++j)
        for (int i = 0; i + 1 < nx; ++i) {
          if (cell(i, j, k - 1) != pl.below || cell(i, j, k) != pl.above)
            continue;
          const double area = (grid.gx[i + 1] - grid.gx[i]) *
                              (grid.gy[j + 1] - grid.gy[j]);
          const std::array<std::pair<int, int>, 4> corners = {
              {{i, j}, {i + 1, j}, {i, j + 1}, {i + 1, j + 1}}};
          for (const auto& [ci, cj] : corners) trib[{ci, cj}] += area / 4.0;
        }
      for (const auto& [v, area] : trib) {
        ContactPair p;
        p.a = node(pl.below, v.first, v.second, k);
        p.b = node(pl.above, v.first, v.second, k);
        p.n = {0, 0, 1};
        p.area = area;
        p.group = pl.group;
        const double r = std::max(std::abs(grid.gx[v.first] - bx),
                                  std::abs(grid.gy[v.second]));
        p.interior = (pl.group != 0) || (r < c - 1e-9);
        m.pairs.push_back(p);
      }
    }
  }

  // node sets
  auto& gi = m.sets["Gamma_I"];
  auto& gc = m.sets["Gamma_C"];
  auto& sym = m.sets["symmetry"];
  for (int n = 0; n < m.n_nodes(); ++n) {
    const double rx = std::abs(m.X[n][0] - bx), ry = std::abs(m.X[n][1]);
    const double r = std::max(rx, ry);
    const bool block = m.body_of[n] != kBolt;
    if (block && close(r, a, 1e-7)) gi.push_back(n);
    if (block && close(r, c, 1e-7) && r < a - 1e-7) gc.push_back(n);
    if (g.symmetric && close(m.X[n][1], 0.0, 1e-7)) sym.push_back(n);
  }
  m.sets.try_emplace("Gamma_I");
  m.sets.try_emplace("Gamma_C");
  m.sets.try_emplace("symmetry");

  const double gp = 1.0 / std::sqrt(3.0);
  for (int e = 0; e < m.n_hexes(); ++e)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          if (hex_jacobian(m, e, gp * (2 * i - 1), gp * (2 * j - 1),
                           gp * (2 * k - 1)) <= 0)
            throw Error("patch mesh: non-positive hex Jacobian");

  return m;
}

InterfacePairing pair_interfaces(const PlateMesh& plate, const SolidMesh& solid,
                                 char which) {
  if (which != 'I' && which != 'C')
    throw Error("pair_interfaces: which must be 'I' or 'C'");
  if (plate.n_plates == 2 && !solid.geom.bolted && !solid.geom.single_plate)
    throw NonConformingError(
        "pair_interfaces: fused two-plate patch cannot be paired (shared "
        "mid-plane nodes)");

  const auto& solid_set =
      solid.set(which == 'I' ? "Gamma_I" : "Gamma_C");

  // group 3D nodes into (x, y) columns
  auto key = [](double v) { return std::llround(v * 1e6); };
  std::map<std::pair<long long, long long>, std::vector<int>> columns;
  for (int n : solid_set)
    columns[{key(solid.X[n][0]), key(solid.X[n][1])}].push_back(n);

  InterfacePairing pairing;
  pairing.which = which;
  size_t consumed = 0;

  for (int p = 0; p < plate.n_plates; ++p) {
    const std::string suffix = p == 0 ? "_lower" : "_upper";
    std::vector<int> ring =
        plate.set((which == 'I' ? "gamma_I" : "gamma_C") + suffix);
    std::sort(ring.begin(), ring.end(), [&](int lhs, int rhs) {
      if (plate.x[lhs] != plate.x[rhs]) return plate.x[lhs] < plate.x[rhs];
      return plate.y[lhs] < plate.y[rhs];
    });
    const double zlo = plate.zmid[p] - plate.geom.thickness / 2.0;
    const double zhi = plate.zmid[p] + plate.geom.thickness / 2.0;

    for (int pn : ring) {
      auto it = columns.find({key(plate.x[pn]), key(plate.y[pn])});
      PairingColumn col;
      col.plate_node = pn;
      col.plate = p;
      if (it != columns.end()) {
        for (int sn : it->second) {
          const double z = solid.X[sn][2];
          if (z < zlo - 1e-7 || z > zhi + 1e-7) continue;
          // two-plate meshes: a column spans both blocks, keep own body
          if (plate.n_plates == 2 && solid.geom.bolted &&
              solid.body_of[sn] != (p == 0 ? kLowerBlock : kUpperBlock))
            continue;
          col.solid_nodes.push_back(sn);
          ++consumed;
        }
      }
      if (col.solid_nodes.empty())
        throw NonConformingError(
            "pair_interfaces: no 3D node column under plate node at (" +
            std::to_string(plate.x[pn]) + ", " + std::to_string(plate.y[pn]) +
            ")");
      std::sort(col.solid_nodes.begin(), col.solid_nodes.end(),
                [&](int lhs, int rhs) { return solid.X[lhs][2] < solid.X[rhs][2]; });
      for (int sn : col.solid_nodes)
        col.zoffset.push_back(solid.X[sn][2] - plate.zmid[p]);
      const size_t nn = col.solid_nodes.size();
      col.tributary.resize(nn, 0.0);
      for (size_t i = 0; i + 1 < nn; ++i) {
        const double dz = col.zoffset[i + 1] - col.zoffset[i];
        col.tributary[i] += dz / 2.0;
        col.tributary[i + 1] += dz / 2.0;
      }
      const double rx = plate.x[pn] - plate.geom.bolt_x();
      const double ry = plate.y[pn];
      const double r = std::max(std::abs(rx), std::abs(ry));
      double nxv = close(std::abs(rx), r, 1e-7) ? (rx > 0 ? 1.0 : -1.0) : 0.0;
      double nyv = close(std::abs(ry), r, 1e-7) ? (ry > 0 ? 1.0 : -1.0) : 0.0;
      const double nn2 = std::hypot(nxv, nyv);
      col.normal = {nxv / nn2, nyv / nn2};
      pairing.columns.push_back(std::move(col));
    }
  }

  if (consumed != solid_set.size())
    throw NonConformingError(
        "pair_interfaces: " + std::to_string(solid_set.size() - consumed) +
        " 3D interface nodes have no plate column");
  return pairing;
}

double hex_volume(const SolidMesh& m, int hex) {
  const double gp = 1.0 / std::sqrt(3.0);
  double v = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        v += hex_jacobian(m, hex, gp * (2 * i - 1), gp * (2 * j - 1),
                          gp * (2 * k - 1));
  return v;
}

double quad_area(const PlateMesh& m, int quad) {
  const auto& q = m.quads[quad];
  double area = 0;
  for (int i = 0; i < 4; ++i) {
    const int a = q[i], b = q[(i + 1) % 4];
    area += m.x[a] * m.y[b] - m.x[b] * m.y[a];
  }
  return area / 2.0;
}

void dump(const PlateMesh& m, std::ostream& os) {
  char buf[128];
  os << "plate-mesh v1\n";
  os << "nodes " << m.n_nodes() << "\n";
  for (int n = 0; n < m.n_nodes(); ++n) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", n, m.plate_of[n],
                  m.x[n], m.y[n]);
    os << buf;
  }
  os << "elements " << m.quads.size() << "\n";
  for (size_t e = 0; e < m.quads.size(); ++e)
    os << e << ' ' << m.quad_plate[e] << ' ' << m.quads[e][0] << ' '
       << m.quads[e][1] << ' ' << m.quads[e][2] << ' ' << m.quads[e][3] << "\n";
  os << "sets " << m.sets.size() << "\n";
  for (const auto& [name, ids] : m.sets) {
    os << name << ' ' << ids.size();
    for (int id : ids) os << ' ' << id;
    os << "\n";
  }
  os << "end\n";
}

void dump(const SolidMesh& m, std::ostream& os) {
  char buf[160];
  os << "solid-mesh v1\n";
  os << "nodes " << m.n_nodes() << "\n";
  for (int n = 0; n < m.n_nodes(); ++n) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g %.17g\n", n,
                  m.body_of[n], m.X[n][0], m.X[n][1], m.X[n][2]);
    os << buf;
  }
  os << "elements " << m.n_hexes() << "\n";
  for (int e = 0; e < m.n_hexes(); ++e) {
    os << e << ' ' << m.hex_body[e];
    for (int a : m.hexes[e]) os << ' ' << a;
    os << "\n";
  }
  os << "pairs " << m.pairs.size() << "\n";
  for (const auto& p : m.pairs)
    os << p.a << ' ' << p.b << ' ' << p.group << "\n";
  os << "sets " << m.sets.size() << "\n";
  for (const auto& [name, ids] : m.sets) {
    os << name << ' ' << ids.size();
    for (int id : ids) os << ' ' << id;
    os << "\n";
  }
  os << "end\n";
}

}  // namespace glocal::mesh
