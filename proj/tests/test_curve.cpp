#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "curvenorm/curve.hpp"
#include "curvenorm/zoo.hpp"

using namespace curvenorm;

namespace {

// Independent point-location oracle: crossings of a horizontal ray to the
// right, retried with a nudged query when a vertex tie is suspected.
bool ray_cast_inside(const JordanCurve& c, Complex w) {
  const int n = c.size();
  int crossings = 0;
  for (int i = 0; i < n; ++i) {
    const Complex a = c.node(i);
    const Complex b = c.node((i + 1) % n);
    if ((a.imag() > w.imag()) == (b.imag() > w.imag())) continue;
    const double x_hit =
        a.real() + (w.imag() - a.imag()) * (b.real() - a.real()) /
                       (b.imag() - a.imag());
    if (x_hit > w.real()) ++crossings;
  }
  return crossings % 2 == 1;
}

JordanCurve unit_circle(int n) {
  return make_curve({"circle", {{"R", 1.0}}, n, 0});
}

}  // namespace

TEST_CASE("construction rejects degenerate input") {
  std::vector<Complex> few{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK_THROWS_AS(JordanCurve{few}, std::invalid_argument);

  std::vector<Complex> dup{{0, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 2},
                           {1.5, 2}, {1, 2}, {0.5, 2}, {0, 2}};
  CHECK_THROWS_AS(JordanCurve{dup}, std::invalid_argument);

  // pentagram with edge midpoints: its chords cross strictly
  std::vector<Complex> pentagram;
  for (int k = 0; k < 5; ++k) {
    const double t0 = kTwoPi * ((2 * k) % 5) / 5.0 + kPi / 2;
    const double t1 = kTwoPi * ((2 * (k + 1)) % 5) / 5.0 + kPi / 2;
    const Complex a{std::cos(t0), std::sin(t0)};
    const Complex b{std::cos(t1), std::sin(t1)};
    pentagram.push_back(a);
    pentagram.push_back(0.5 * (a + b));
  }
  CHECK(!JordanCurve(pentagram, JordanCurve::Simplicity::trust).is_simple());
  CHECK_THROWS_AS(JordanCurve{pentagram}, std::invalid_argument);
}

TEST_CASE("orientation is normalized to counterclockwise") {
  std::vector<Complex> cw;
  for (int k = 0; k < 16; ++k) {
    const double t = -kTwoPi * k / 16;  // clockwise
    cw.push_back(Complex{std::cos(t), std::sin(t)});
  }
  const JordanCurve curve(cw);
  CHECK(signed_area(curve.nodes()) > 0.0);
  CHECK(curve.node(0) == cw[0]);  // start node kept
}

TEST_CASE("resample: square corners and midpoints") {
  const std::vector<Complex> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const JordanCurve resampled = resample_arclength(square, 8);
  const std::vector<Complex> expected{{0, 0},   {0.5, 0}, {1, 0},   {1, 0.5},
                                      {1, 1},   {0.5, 1}, {0, 1},   {0, 0.5}};
  REQUIRE(resampled.size() == 8);
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(resampled.node(i) - expected[static_cast<size_t>(i)]) < 1e-15);
  CHECK(resampled.segment_length(0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("resample: identity on an already equispaced curve") {
  const JordanCurve circle = unit_circle(64);
  const JordanCurve again = resample_arclength(circle, 64);
  for (int i = 0; i < 64; ++i)
    CHECK(std::abs(again.node(i) - circle.node(i)) < 1e-14);
}

TEST_CASE("resample: 64-gon to 128 nodes preserves the length") {
  const JordanCurve gon = unit_circle(64);
  const double expected = 128.0 * std::sin(kPi / 64.0);  // inscribed perimeter
  CHECK(gon.length() == doctest::Approx(expected).epsilon(1e-12));
  const JordanCurve fine = resample_arclength(gon, 128);
  CHECK(fine.length() == doctest::Approx(gon.length()).epsilon(1e-12));
}

TEST_CASE("point_in_interior basics") {
  const JordanCurve circle = unit_circle(256);
  CHECK(point_in_interior(circle, Complex{0, 0}));
  CHECK(!point_in_interior(circle, Complex{2, 0}));
  CHECK_THROWS_AS(point_in_interior(circle, circle.node(3)), numeric_error);

  const JordanCurve barbell = make_curve({"barbell", {{"delta", 0.05}}, 1024, 0});
  CHECK(point_in_interior(barbell, Complex{0, 0}));  // neck midpoint
  CHECK(ray_cast_inside(barbell, Complex{0, 0}));
}

TEST_CASE("point_in_interior agrees with the ray-cast oracle on the zoo") {
  std::mt19937_64 rng(12345);
  for (const CurveSpec& spec : canonical_zoo(256)) {
    const JordanCurve curve = make_curve(spec);
    double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
    for (const Complex& z : curve.nodes()) {
      x_lo = std::min(x_lo, z.real());
      x_hi = std::max(x_hi, z.real());
      y_lo = std::min(y_lo, z.imag());
      y_hi = std::max(y_hi, z.imag());
    }
    std::uniform_real_distribution<double> ux(x_lo - 0.2, x_hi + 0.2);
    std::uniform_real_distribution<double> uy(y_lo - 0.2, y_hi + 0.2);
    int tested = 0;
    while (tested < 1000) {
      const Complex w{ux(rng), uy(rng)};
      if (distance_to_curve(curve, w) < 1e-9 * curve.diameter()) continue;
      ++tested;
      CAPTURE(spec.name);
      CAPTURE(w.real());
      CAPTURE(w.imag());
      REQUIRE(point_in_interior(curve, w) == ray_cast_inside(curve, w));
    }
  }
}

TEST_CASE("distance_to_curve closed forms") {
  const JordanCurve circle = unit_circle(4096);
  CHECK(distance_to_curve(circle, Complex{0, 0}) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(distance_to_curve(circle, Complex{3, 0}) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(distance_to_curve(circle, circle.node(17)) == 0.0);
}

TEST_CASE("shorter_arc_length on an equispaced 8-gon") {
  const JordanCurve gon = unit_circle(8);
  const double total = gon.length();
  CHECK(shorter_arc_length(gon, 0, 4) == doctest::Approx(total / 2).epsilon(1e-12));
  CHECK(shorter_arc_length(gon, 0, 1) == doctest::Approx(total / 8).epsilon(1e-12));
  CHECK(shorter_arc_length(gon, 1, 6) ==
        doctest::Approx(3 * total / 8).epsilon(1e-12));
  CHECK_THROWS_AS(shorter_arc_length(gon, 3, 3), std::invalid_argument);
}

TEST_CASE("arc dominates chord on every zoo curve") {
  std::mt19937_64 rng(777);
  for (const CurveSpec& spec : canonical_zoo(512)) {
    const JordanCurve curve = make_curve(spec);
    std::uniform_int_distribution<int> pick(0, curve.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const int i = pick(rng);
      int j = pick(rng);
      if (i == j) continue;
      const double arc = shorter_arc_length(curve, i, j);
      const double chord = std::abs(curve.node(j) - curve.node(i));
      CAPTURE(spec.name);
      REQUIRE(arc >= chord * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("spherical_length closed forms") {
  CHECK(spherical_length(unit_circle(4096)) == doctest::Approx(kPi).epsilon(1e-3));

  const double radius = 1000.0;
  const JordanCurve big = make_curve({"circle", {{"R", radius}}, 8192, 0});
  const double expected = kTwoPi * radius / (1.0 + radius * radius);
  CHECK(spherical_length(big) == doctest::Approx(expected).epsilon(1e-2));
}

TEST_CASE("spherical_length is stable under node doubling") {
  for (const char* name : {"circle", "ellipse", "star"}) {
    CurveSpec spec{name, {}, 4096, 0};
    const double coarse = spherical_length(make_curve(spec));
    spec.n_nodes = 8192;
    const double fine = spherical_length(make_curve(spec));
    CAPTURE(name);
    CHECK(std::abs(coarse - fine) / fine < 1e-6);
  }
}

TEST_CASE("translate_and_scale") {
  const JordanCurve circle = unit_circle(64);
  const JordanCurve same = translate_and_scale(circle, Complex{0, 0}, 1.0);
  for (int i = 0; i < 64; ++i) CHECK(same.node(i) == circle.node(i));
  CHECK(same.length() == circle.length());

  const JordanCurve ellipse = make_curve({"ellipse", {{"a", 2}, {"b", 1}}, 512, 0});
  const JordanCurve normalized = normalize_to_length(ellipse);
  CHECK(normalized.length() == doctest::Approx(kTwoPi).epsilon(1e-12));

  CHECK_THROWS_AS(translate_and_scale(circle, Complex{0, 0}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("diameter and centroid") {
  const JordanCurve circle = unit_circle(512);
  CHECK(circle.diameter() == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(std::abs(circle.centroid()) < 1e-12);

  const JordanCurve square = make_curve({"polygon", {}, 512, 0});
  CHECK(square.diameter() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(square.centroid() - Complex{0.5, 0.5}) < 1e-12);
}

TEST_CASE("hausdorff distance") {
  const JordanCurve a = unit_circle(256);
  CHECK(hausdorff_distance(a, a) == 0.0);
  const JordanCurve b = translate_and_scale(a, Complex{0.25, 0}, 1.0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(0.25).epsilon(1e-2));
}

TEST_CASE("point_at walks the polyline") {
  const JordanCurve circle = unit_circle(256);
  CHECK(std::abs(circle.point_at(0.0) - circle.node(0)) < 1e-15);
  CHECK(std::abs(circle.point_at(circle.cumlen(100)) - circle.node(100)) < 1e-12);
  CHECK(std::abs(circle.point_at(circle.length()) - circle.node(0)) < 1e-12);
}
