#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "curvenorm/harmonic.hpp"
#include "curvenorm/seminorm.hpp"
#include "curvenorm/zoo.hpp"

using namespace curvenorm;

namespace {

JordanCurve unit_circle(int n) { return make_curve({"circle", {{"R", 1.0}}, n, 0}); }

CurveFunction mode(const JordanCurve& curve, int k) {
  return make_function({"fourier_mode", {{"k", static_cast<double>(k)}}}, curve);
}

}  // namespace

TEST_CASE("poisson integral reproduces constants exactly") {
  const JordanCurve circle = unit_circle(256);
  CurveFunction u{std::vector<Complex>(256, Complex{2.5, -1.0}), "const"};
  const Complex v = poisson_extend_disk(u, Complex{0.3, 0.4});
  CHECK(std::abs(v - Complex{2.5, -1.0}) < 1e-12);
}

TEST_CASE("poisson integral of e^{i theta} is the identity map") {
  const JordanCurve circle = unit_circle(4096);
  const CurveFunction u = mode(circle, 1);
  CHECK(std::abs(poisson_extend_disk(u, Complex{0.5, 0.0}) - Complex{0.5, 0.0}) < 1e-8);

  // harmonic extension of 2cos(theta) is 2 Re z, zero on the imaginary axis
  CurveFunction two_cos = mode(circle, 1);
  const CurveFunction minus = mode(circle, -1);
  for (size_t i = 0; i < two_cos.values.size(); ++i)
    two_cos.values[i] += minus.values[i];
  CHECK(std::abs(poisson_extend_disk(two_cos, Complex{0.0, 0.3})) < 1e-8);
}

TEST_CASE("poisson integral rejects near-boundary evaluation") {
  const JordanCurve circle = unit_circle(64);
  const CurveFunction u = mode(circle, 1);
  CHECK_THROWS_AS(poisson_extend_disk(u, Complex{1.0 - 1e-7, 0.0}), numeric_error);
}

TEST_CASE("constant boundary data has zero energy") {
  const JordanCurve circle = unit_circle(512);
  CurveFunction f{std::vector<Complex>(512, Complex{3.0, 1.0}), "const"};
  const EnergyResult r = interior_energy_grid(circle, f, 1.0 / 64, 1e-8);
  CHECK(r.energy <= 1e-10);
  CHECK(exterior_energy_grid(circle, f, 1.0 / 64, 1e-8).energy <= 1e-10);
}

TEST_CASE("interior energy of pure modes on the circle") {
  const JordanCurve circle = unit_circle(2048);
  const EnergyResult one = interior_energy_grid(circle, mode(circle, 1), 1.0 / 128, 1e-8);
  CHECK(one.energy == doctest::Approx(1.0).epsilon(0.05));
  CHECK(one.iterations > 0);
  CHECK(one.residual <= 1e-8);

  const EnergyResult two = interior_energy_grid(circle, mode(circle, 2), 1.0 / 128, 1e-8);
  CHECK(two.energy == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("exterior energy matches the spectral value on the circle") {
  const JordanCurve circle = unit_circle(2048);
  CHECK(exterior_energy_grid(circle, mode(circle, 1), 1.0 / 128, 1e-8).energy ==
        doctest::Approx(1.0).epsilon(0.05));
  CHECK(exterior_energy_grid(circle, mode(circle, 2), 1.0 / 128, 1e-8).energy ==
        doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("interior energy of an inverse pole matches the analytic value") {
  const JordanCurve circle = unit_circle(2048);
  const CurveFunction f =
      make_function({"inverse_pole", {{"w_re", 2.0}, {"w_im", 0.0}}}, circle);
  // analytic extension 1/(z-2): energy 1/(|w|^2-1)^2 = 1/9
  CHECK(interior_energy_grid(circle, f, 1.0 / 128, 1e-8).energy ==
        doctest::Approx(1.0 / 9.0).epsilon(0.05));
}

TEST_CASE("energy oracle closed forms and distance bound") {
  const JordanCurve circle = unit_circle(2048);
  CHECK(analytic_energy_oracle(circle, Complex{2, 0}, 1.0 / 512) ==
        doctest::Approx(1.0 / 9.0).epsilon(0.02));
  CHECK(analytic_energy_oracle(circle, Complex{3, 0}, 1.0 / 512) ==
        doctest::Approx(1.0 / 64.0).epsilon(0.02));

  for (const Complex w : {Complex{1.5, 0}, Complex{0, 2.5}, Complex{-4, 1}}) {
    const double d = distance_to_curve(circle, w);
    CHECK(analytic_energy_oracle(circle, w, 1.0 / 256) <= 1.05 / (d * d));
  }

  CHECK_THROWS_AS(analytic_energy_oracle(circle, Complex{0.2, 0}, 1.0 / 256),
                  numeric_error);  // interior pole
  CHECK_THROWS_AS(analytic_energy_oracle(circle, Complex{1.001, 0}, 1.0 / 256),
                  std::invalid_argument);  // closer than 4h
}

TEST_CASE("grid too coarse is rejected") {
  const JordanCurve circle = unit_circle(256);
  CHECK_THROWS_AS(interior_energy_grid(circle, mode(circle, 1), 0.1, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("mask invariants: boundary layer separates interior from exterior") {
  const JordanCurve star = make_curve({"star", {{"eps", 0.2}, {"k", 3}}, 1024, 0});
  const HarmonicSolution sol = solve_interior(star, mode(star, 1), star.diameter() / 96, 1e-8);
  const HarmonicGridField& g = sol.field;
  int interior_cells = 0;
  for (int iy = 1; iy + 1 < g.ny; ++iy) {
    for (int ix = 1; ix + 1 < g.nx; ++ix) {
      if (g.kind(ix, iy) != CellKind::interior) continue;
      ++interior_cells;
      CHECK(g.kind(ix - 1, iy) != CellKind::exterior);
      CHECK(g.kind(ix + 1, iy) != CellKind::exterior);
      CHECK(g.kind(ix, iy - 1) != CellKind::exterior);
      CHECK(g.kind(ix, iy + 1) != CellKind::exterior);
    }
  }
  CHECK(interior_cells > 0);
}

TEST_CASE("solved cells are local minima of the discrete energy") {
  const JordanCurve circle = unit_circle(512);
  const HarmonicSolution sol = solve_interior(circle, mode(circle, 1), 1.0 / 40, 1e-10);
  const HarmonicGridField& g = sol.field;

  std::vector<size_t> cells;
  for (size_t idx = 0; idx < g.mask.size(); ++idx)
    if (g.mask[idx] == CellKind::interior) cells.push_back(idx);
  REQUIRE(!cells.empty());

  const double base = grid_energy(g);
  const double eps = g.h * g.h;
  std::mt19937_64 rng(31415);
  std::uniform_int_distribution<size_t> pick(0, cells.size() - 1);
  HarmonicGridField perturbed = g;
  for (int trial = 0; trial < 100; ++trial) {
    const size_t idx = cells[pick(rng)];
    for (double sign : {1.0, -1.0}) {
      perturbed.values[idx] = g.values[idx] + Complex{sign * eps, 0.0};
      CHECK(grid_energy(perturbed) > base);
    }
    perturbed.values[idx] = g.values[idx];
  }
}

TEST_CASE("energy on a scaled circle matches the unit circle") {
  // f(2 e^{i theta}) = e^{i theta} on the radius-2 circle carries the same
  // boundary data as e^{i theta} on the unit circle.
  const JordanCurve big = make_curve({"circle", {{"R", 2.0}}, 2048, 0});
  const JordanCurve small = unit_circle(2048);
  const double e_big = interior_energy_grid(big, mode(big, 1), 2.0 / 128, 1e-8).energy;
  const double e_small =
      interior_energy_grid(small, mode(small, 1), 1.0 / 128, 1e-8).energy;
  CHECK(e_big == doctest::Approx(e_small).epsilon(0.05));
}

TEST_CASE("energy differences shrink under grid refinement") {
  const JordanCurve circle = unit_circle(1024);
  const CurveFunction f = mode(circle, 1);
  const double e0 = interior_energy_grid(circle, f, 1.0 / 32, 1e-9).energy;
  const double e1 = interior_energy_grid(circle, f, 1.0 / 64, 1e-9).energy;
  const double e2 = interior_energy_grid(circle, f, 1.0 / 128, 1e-9).energy;
  CHECK(std::abs(e2 - e1) <= std::abs(e1 - e0));
}

TEST_CASE("complex data splits into two real solves with added energies") {
  const JordanCurve circle = unit_circle(1024);
  CurveFunction real_part{{}, "re"};
  CurveFunction imag_part{{}, "im"};
  const CurveFunction full = mode(circle, 1);
  for (const Complex& v : full.values) {
    real_part.values.push_back(Complex{v.real(), 0.0});
    imag_part.values.push_back(Complex{v.imag(), 0.0});
  }
  const double h = 1.0 / 64;
  const double sum = interior_energy_grid(circle, real_part, h, 1e-10).energy +
                     interior_energy_grid(circle, imag_part, h, 1e-10).energy;
  const double whole = interior_energy_grid(circle, full, h, 1e-10).energy;
  CHECK(whole == doctest::Approx(sum).epsilon(1e-6));
}

TEST_CASE("exterior solve needs an interior basepoint") {
  const JordanCurve circle = unit_circle(512);
  // fine at the centroid for the circle; barbell centroid is also interior
  const JordanCurve barbell = make_curve({"barbell", {{"delta", 0.1}}, 1024, 0});
  const CurveFunction f = mode(barbell, 1);
  const EnergyResult r = exterior_energy_grid(barbell, f, barbell.diameter() / 96, 1e-8);
  CHECK(r.energy > 0.0);
  CHECK(std::isfinite(r.energy));
}
