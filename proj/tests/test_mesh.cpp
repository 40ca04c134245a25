#include "doctest.h"
#include "mesh.hpp"

#include <map>
#include <set>
#include <sstream>

using namespace glocal;
using namespace glocal::mesh;

namespace {

PlateGeometry paper_geom() { return PlateGeometry{}; }

}  // namespace

TEST_CASE("paper plate geometry: all sets populated, buffer has 4 rings") {
  auto g = paper_geom();
  auto m = build_plate_mesh(g);
  for (const char* s : {"clamped", "loaded", "symmetry", "gamma_I_lower",
                        "gamma_I_upper", "gamma_C_lower", "gamma_C_upper",
                        "connector_lower", "connector_upper"})
    CHECK_MESSAGE(!m.set(s).empty(), s);
  CHECK(m.master[0] >= 0);
  CHECK(m.master[1] >= 0);

  // exactly buffer_elems element rings between gamma_C and gamma_I:
  // count distinct ring distances of element centroids in the buffer band
  std::set<long long> rings;
  for (size_t e = 0; e < m.quads.size(); ++e) {
    double cx = 0, cy = 0;
    for (int n : m.quads[e]) {
      cx += m.x[n] / 4;
      cy += m.y[n] / 4;
    }
    const double r = std::max(std::abs(cx - g.bolt_x()), std::abs(cy));
    if (r > g.ring_inner() && r < g.ring_outer() && std::abs(cy) < g.ring_inner())
      if (cx > g.bolt_x())  // one radial cut is enough
        rings.insert(std::llround(r * 1e6));
  }
  CHECK(rings.size() == 4);
}

TEST_CASE("single quad plate without patch has empty interface sets") {
  PlateGeometry g;
  g.plate_length = 1;
  g.lower_width = 2;  // half model -> one element strip
  g.single_plate = true;
  g.with_patch = false;
  g.elem_coarse = 1.0;
  auto m = build_plate_mesh(g);
  CHECK(m.quads.size() == 1);
  CHECK(m.set("gamma_I_lower").empty());
  CHECK(m.set("gamma_C_lower").empty());
}

TEST_CASE("ring sets are closed loops on the full model") {
  auto g = paper_geom();
  g.symmetric = false;
  auto m = build_plate_mesh(g);
  for (const char* s : {"gamma_I_lower", "gamma_C_upper"}) {
    const auto& ring = m.set(s);
    std::set<int> in_ring(ring.begin(), ring.end());
    // each ring node must have exactly two ring neighbours along mesh edges
    std::map<int, int> degree;
    for (const auto& q : m.quads)
      for (int k = 0; k < 4; ++k) {
        int u = q[k], v = q[(k + 1) % 4];
        if (in_ring.count(u) && in_ring.count(v)) {
          degree[u]++;
          degree[v]++;
        }
      }
    for (int n : ring) CHECK(degree[n] == 4);  // every edge counted twice
  }
}

TEST_CASE("patch mesh: bolt analog present, conforming pairs, volume exact") {
  auto pg = make_patch_geometry(paper_geom());
  auto m = build_patch_mesh(pg);

  CHECK(!m.set("Gamma_I").empty());
  CHECK(!m.set("Gamma_C").empty());
  CHECK(!m.bolt_column.empty());
  CHECK(!m.pairs.empty());

  // Gamma_I sits at the patch boundary (L=0 -> ring_outer from the axis)
  for (int n : m.set("Gamma_I"))
    CHECK(m.ring_dist(n) == doctest::Approx(pg.ring_outer()).epsilon(1e-9));

  // volume against the analytic block/bolt volumes (half model)
  double vol = 0;
  for (int e = 0; e < m.n_hexes(); ++e) vol += hex_volume(m, e);
  const double A = 2 * pg.ring_outer() * pg.ring_outer();  // half footprint
  const double hole = pg.hole * pg.hole / 2.0;
  const double shank = pg.bolt * pg.bolt / 2.0;
  const double pad = pg.head * pg.head / 2.0;
  const double expect = 2 * pg.thickness * (A - hole)            // two blocks
                        + 2 * pg.thickness * shank               // grip shank
                        + 2 * pg.head_thickness * pad;           // head + nut
  CHECK(vol == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("patch with L=15 moves Gamma_I outward") {
  auto pg = make_patch_geometry(paper_geom());
  pg.interface_offset = 15;
  auto m = build_patch_mesh(pg);
  for (int n : m.set("Gamma_I"))
    CHECK(m.ring_dist(n) == doctest::Approx(30.0).epsilon(1e-9));
  auto m0 = build_patch_mesh(make_patch_geometry(paper_geom()));
  CHECK(m.n_nodes() > m0.n_nodes());
}

TEST_CASE("fused patch: no pairs, single body") {
  auto g = paper_geom();
  g.single_plate = true;
  g.bolted = false;
  auto m = build_patch_mesh(make_patch_geometry(g));
  CHECK(m.pairs.empty());
  for (int b : m.body_of) CHECK(b == kLowerBlock);
}

TEST_CASE("hole larger than patch is rejected") {
  auto pg = make_patch_geometry(paper_geom());
  pg.hole = 40;
  pg.head = 42;
  CHECK_THROWS_WITH_AS(build_patch_mesh(pg),
                       doctest::Contains("hole larger than patch"), Error);
}

TEST_CASE("pairing: column sizes, tributary sums, determinism") {
  auto g = paper_geom();
  auto plate = build_plate_mesh(g);
  auto solid = build_patch_mesh(make_patch_geometry(g));

  for (char which : {'I', 'C'}) {
    auto pairing = pair_interfaces(plate, solid, which);
    CHECK(!pairing.columns.empty());
    std::set<int> seen;
    for (const auto& col : pairing.columns) {
      CHECK(static_cast<int>(col.solid_nodes.size()) ==
            g.z_elems_per_block + 1);
      double trib = 0;
      for (double t : col.tributary) trib += t;
      CHECK(trib == doctest::Approx(g.thickness).epsilon(1e-12));
      for (int sn : col.solid_nodes) CHECK(seen.insert(sn).second);
    }
    // every interface node consumed exactly once
    CHECK(seen.size() ==
          solid.set(which == 'I' ? "Gamma_I" : "Gamma_C").size());

    auto again = pair_interfaces(plate, solid, which);
    REQUIRE(again.columns.size() == pairing.columns.size());
    for (size_t i = 0; i < again.columns.size(); ++i) {
      CHECK(again.columns[i].plate_node == pairing.columns[i].plate_node);
      CHECK(again.columns[i].solid_nodes == pairing.columns[i].solid_nodes);
    }
  }
}

TEST_CASE("perturbed plate node produces a non-conforming error") {
  auto g = paper_geom();
  auto plate = build_plate_mesh(g);
  auto solid = build_patch_mesh(make_patch_geometry(g));
  const int n = plate.set("gamma_I_lower").front();
  plate.x[n] += 1e-3;
  CHECK_THROWS_AS(pair_interfaces(plate, solid, 'I'), NonConformingError);
}

TEST_CASE("mesh dumps are stable") {
  auto g = paper_geom();
  auto plate = build_plate_mesh(g);
  std::ostringstream a, b;
  dump(plate, a);
  dump(plate, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("plate-mesh v1", 0) == 0);
}
