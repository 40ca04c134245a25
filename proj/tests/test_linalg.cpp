#include "doctest.h"
#include "linalg.hpp"

#include <random>
#include <vector>

using namespace glocal;
using namespace glocal::linalg;

TEST_CASE("duplicate triplets are summed") {
  std::vector<Trip> t = {{0, 0, 2.0}, {0, 0, 1.0}};
  auto K = assemble(t, 1);
  CHECK(K.coeff(0, 0) == doctest::Approx(3.0));
}

TEST_CASE("identity solve returns rhs") {
  std::vector<Trip> t;
  for (int i = 0; i < 5; ++i) t.emplace_back(i, i, 1.0);
  auto K = assemble(t, 5);
  auto F = factor(K);
  Vec b(5);
  b << 1, -2, 3, -4, 5;
  Vec x = solve(F, b);
  CHECK((x - b).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("series spring chain, tip displacement") {
  // 3 unit springs, node 0 fixed (eliminated): dofs are nodes 1..3.
  std::vector<Trip> t = {{0, 0, 2.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 2.0},
                         {1, 2, -1.0}, {2, 1, -1.0}, {2, 2, 1.0}};
  auto F = factor(assemble(t, 3));
  Vec b = Vec::Zero(3);
  b[2] = 1.0;  // unit load at the tip
  Vec x = solve(F, b);
  CHECK(x[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hand-inverted 2x2") {
  std::vector<Trip> t = {{0, 0, 2.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 2.0}};
  auto F = factor(assemble(t, 2));
  Vec b(2);
  b << 1, 1;
  Vec x = solve(F, b);
  CHECK(x[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("index and value validation") {
  std::vector<Trip> bad_idx = {{0, 3, 1.0}};
  CHECK_THROWS_AS(assemble(bad_idx, 2), Error);
  std::vector<Trip> bad_val = {{0, 0, std::nan("")}};
  CHECK_THROWS_AS(assemble(bad_val, 1), Error);
  std::vector<Trip> asym = {{0, 1, 1.0}};
  CHECK_THROWS_AS(assemble(asym, 2), Error);
}

TEST_CASE("singular system names the offending equation") {
  // diag(1, 0, 1): equation 1 has no stiffness.
  std::vector<Trip> t = {{0, 0, 1.0}, {1, 1, 0.0}, {2, 2, 1.0}};
  auto K = assemble(t, 3);
  try {
    factor(K);
    FAIL("expected SingularSystemError");
  } catch (const SingularSystemError& e) {
    CHECK(e.equation() == 1);
    CHECK(std::string(e.what()).find("equation 1") != std::string::npos);
  }
}

TEST_CASE("random SPD round trip and factorization reuse") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {7, 60, 500}) {
    std::vector<Trip> t;
    // band matrix + diagonal dominance keeps it well conditioned
    for (int i = 0; i < n; ++i) {
      t.emplace_back(i, i, 10.0 + std::abs(u(rng)) * n);
      for (int j = i + 1; j < std::min(n, i + 4); ++j) {
        double v = u(rng);
        t.emplace_back(i, j, v);
        t.emplace_back(j, i, v);
      }
    }
    auto K = assemble(t, n);
    auto F = factor(K);

    Vec x = Vec::NullaryExpr(n, [&](Eigen::Index) { return u(rng); });
    Vec b = K.multiply(x);
    Vec xr = solve(F, b);
    CHECK((xr - x).norm() <= 1e-10 * x.norm());

    // reuse: two solves against one factorization must be bitwise equal
    // to two independent factor+solve runs
    Vec b2 = Vec::NullaryExpr(n, [&](Eigen::Index) { return u(rng); });
    Vec y1 = solve(F, b);
    Vec y2 = solve(F, b2);
    auto F2 = factor(K);
    Vec z1 = solve(F2, b);
    auto F3 = factor(K);
    Vec z2 = solve(F3, b2);
    CHECK(std::memcmp(y1.data(), z1.data(), sizeof(double) * n) == 0);
    CHECK(std::memcmp(y2.data(), z2.data(), sizeof(double) * n) == 0);
  }
}
