#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "curvenorm/curve.hpp"
#include "curvenorm/seminorm.hpp"
#include "curvenorm/zoo.hpp"

using namespace curvenorm;

TEST_CASE("every canonical curve is simple, equispaced and positively oriented") {
  for (const CurveSpec& spec : canonical_zoo(512)) {
    CAPTURE(spec.name);
    const JordanCurve curve = make_curve(spec);
    CHECK(curve.size() == 512);
    CHECK(curve.is_equispaced());
    CHECK(curve.is_simple());
    CHECK(signed_area(curve.nodes()) > 0.0);
  }
}

TEST_CASE("same spec gives a bit-identical curve") {
  const CurveSpec spec{"star", {{"eps", 0.2}, {"k", 3}}, 256, 0};
  const JordanCurve a = make_curve(spec);
  const JordanCurve b = make_curve(spec);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.nodes().data(), b.nodes().data(),
                    sizeof(Complex) * a.nodes().size()) == 0);
}

TEST_CASE("circle length converges to 2 pi R") {
  const JordanCurve c = make_curve({"circle", {{"R", 1.0}}, 1024, 0});
  CHECK(c.length() == doctest::Approx(kTwoPi).epsilon(1e-5));
  const JordanCurve big = make_curve({"circle", {{"R", 2.5}}, 1024, 0});
  CHECK(big.length() == doctest::Approx(2.5 * kTwoPi).epsilon(1e-5));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_curve({"star", {{"eps", 0.4}, {"k", 3}}, 256, 0}),
                  std::invalid_argument);  // eps*k >= 1
  CHECK_THROWS_AS(make_curve({"koch", {{"level", 6.0}}, 256, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_curve({"barbell", {{"delta", 0.6}}, 256, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_curve({"nonagon", {}, 256, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_curve({"circle", {{"radius", 1.0}}, 256, 0}),
                  std::invalid_argument);  // unknown key
  CHECK_THROWS_AS(make_curve({"circle", {}, 4, 0}), std::invalid_argument);
}

TEST_CASE("koch generator arithmetic: length grows by 4/3 per level") {
  double previous = 3.0;  // unit-side triangle
  for (int level = 1; level <= 5; ++level) {
    const auto pts = koch_snowflake_points(level);
    CHECK(pts.size() == 3u * (1u << (2 * level)));  // 3 * 4^level
    double length = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
      length += std::abs(pts[(i + 1) % pts.size()] - pts[i]);
    CAPTURE(level);
    CHECK(length == doctest::Approx(previous * 4.0 / 3.0).epsilon(1e-6));
    previous = length;
  }
}

TEST_CASE("barbell geometry matches its construction") {
  const double delta = 0.05;
  const auto pts = barbell_points(delta);
  double length = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    length += std::abs(pts[(i + 1) % pts.size()] - pts[i]);
  const double expected = 4.0 * kPi - 4.0 * std::asin(delta / 2) + 2.0;
  CHECK(length == doctest::Approx(expected).epsilon(1e-3));

  const JordanCurve curve = make_curve({"barbell", {{"delta", delta}}, 2048, 0});
  CHECK(point_in_interior(curve, Complex{0, 0}));
  CHECK(point_in_interior(curve, Complex{1.5, 0}));   // right lobe center
  CHECK(!point_in_interior(curve, Complex{0, 0.5}));  // above the neck
}

TEST_CASE("polygon family accepts explicit vertices") {
  const JordanCurve triangle = make_curve(
      {"polygon",
       {{"x0", 0.0}, {"y0", 0.0}, {"x1", 2.0}, {"y1", 0.0}, {"x2", 1.0}, {"y2", 1.5}},
       513, 0});
  CHECK(triangle.length() ==
        doctest::Approx(2.0 + 2.0 * std::hypot(1.0, 1.5)).epsilon(1e-4));
}

TEST_CASE("coordinate function samples the nodes") {
  const JordanCurve c = make_curve({"circle", {}, 128, 0});
  const CurveFunction f = make_function({"coordinate", {}}, c);
  for (int i = 0; i < c.size(); ++i)
    CHECK(f.values[static_cast<size_t>(i)] == c.node(i));
}

TEST_CASE("fourier mode zero is the constant one, with zero seminorms") {
  const JordanCurve c = make_curve({"circle", {}, 256, 0});
  const CurveFunction f = make_function({"fourier_mode", {{"k", 0.0}}}, c);
  for (const Complex& v : f.values) CHECK(std::abs(v - Complex{1, 0}) < 1e-15);
  CHECK(douglas_seminorm(c, f).value_sq <= 1e-12);
  CHECK(circle_seminorm_spectral(f).value_sq <= 1e-12);
}

TEST_CASE("inverse pole evaluates 1/(z-w) exactly and validates the distance") {
  const JordanCurve c = make_curve({"circle", {}, 256, 0});
  const CurveFunction f =
      make_function({"inverse_pole", {{"w_re", 2.0}, {"w_im", 0.0}}}, c);
  for (int i = 0; i < c.size(); ++i)
    CHECK(f.values[static_cast<size_t>(i)] == 1.0 / (c.node(i) - Complex{2, 0}));

  CHECK_THROWS_AS(
      make_function({"inverse_pole", {{"w_re", 1.0001}, {"w_im", 0.0}}}, c),
      std::invalid_argument);
  CHECK_THROWS_AS(make_function({"inverse_pole", {}}, c), std::invalid_argument);
}

TEST_CASE("bump function is smooth, real and periodic") {
  const JordanCurve c = make_curve({"circle", {}, 512, 0});
  const CurveFunction f =
      make_function({"bump", {{"center", 0.5}, {"width", 0.1}}}, c);
  CHECK(f.values[256].real() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(f.values[0].real() < 1e-10);  // half a turn away
  for (const Complex& v : f.values) CHECK(v.imag() == 0.0);
}

TEST_CASE("canonical function set and exterior pole") {
  const JordanCurve c = make_curve({"circle", {}, 512, 0});
  const auto specs = canonical_functions(c);
  CHECK(specs.size() == 6);
  const Complex w = exterior_pole_for(c);
  CHECK(!point_in_interior(c, w));
  CHECK(std::abs(w - Complex{2.0, 0.0}) < 1e-6);  // node 0 + 0.5*diam outward
}

TEST_CASE("zoo listing is parseable and covers all families") {
  const std::string listing = zoo_listing_json();
  for (const char* name :
       {"circle", "ellipse", "star", "polygon", "koch", "barbell",
        "fourier_mode", "inverse_pole", "coordinate", "bump"})
    CHECK(listing.find(name) != std::string::npos);
}

TEST_CASE("unknown function name is rejected") {
  const JordanCurve c = make_curve({"circle", {}, 128, 0});
  CHECK_THROWS_AS(make_function({"sawtooth", {}}, c), std::invalid_argument);
}
