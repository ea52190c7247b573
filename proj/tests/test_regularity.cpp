#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curvenorm/curve.hpp"
#include "curvenorm/mobius.hpp"
#include "curvenorm/regularity.hpp"
#include "curvenorm/zoo.hpp"

using namespace curvenorm;

namespace {

JordanCurve zoo(const std::string& name, int n,
                std::map<std::string, double> params = {}) {
  return make_curve({name, std::move(params), n, 0});
}

}  // namespace

TEST_CASE("chord-arc constant of a circle is pi/2 at the antipode") {
  const auto [k, witness, samples] = chord_arc_constant(zoo("circle", 1024));
  CHECK(k == doctest::Approx(kPi / 2.0).epsilon(0.005));
  CHECK(std::abs(witness.j - witness.i) == 512);
  CHECK(samples == 1024LL * 1023 / 2);
}

TEST_CASE("chord-arc constant of a square is 2 at opposite edge midpoints") {
  // Opposite edge midpoints realize arc 2 / chord 1; corner pairs only give
  // arc 2 / chord sqrt(2). Any closed curve has K >= pi/2, which already
  // rules the corner value out as the maximum.
  const auto result = chord_arc_constant(zoo("polygon", 1024));
  CHECK(result.constant == doctest::Approx(2.0).epsilon(0.01));
  CHECK(result.constant >= kPi / 2.0);
}

TEST_CASE("barbell chord-arc constants blow up as the neck narrows") {
  double previous = 1e300;
  for (double delta : {0.4, 0.2, 0.1, 0.05}) {
    const double k =
        chord_arc_constant(zoo("barbell", 1024, {{"delta", delta}})).constant;
    CAPTURE(delta);
    CHECK(k < previous);
    previous = k;
  }
  CHECK(chord_arc_constant(zoo("barbell", 1024, {{"delta", 0.05}})).constant > 50.0);
}

TEST_CASE("chord-arc constant is invariant under similarities") {
  const JordanCurve star = zoo("star", 512, {{"eps", 0.2}, {"k", 3}});
  const double base = chord_arc_constant(star).constant;
  const JordanCurve mapped = apply_mobius(
      MobiusTransform::similarity(Complex{0.7, 1.9}, Complex{-4, 2}), star, 1);
  CHECK(chord_arc_constant(mapped).constant ==
        doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("chord-arc requires an equispaced curve") {
  std::vector<Complex> pts;
  for (int k = 0; k < 64; ++k) {
    const double t = kTwoPi * (k + 0.4 * std::sin(3.0 * k)) / 64;
    pts.push_back(Complex{std::cos(t), std::sin(t)});
  }
  CHECK_THROWS_WITH_AS(chord_arc_constant(JordanCurve(pts)), "resample required",
                       std::invalid_argument);
}

TEST_CASE("disk-capture constant of the unit circle is 2pi") {
  const AhlforsResult r = ahlfors_constant(zoo("circle", 1024));
  CHECK(r.constant == doctest::Approx(kTwoPi).epsilon(0.02));
  CHECK(std::abs(r.witness.center) < 0.05);          // centroid witness
  CHECK(r.witness.radius == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("disk-capture scan on a straight segment gives 2") {
  // Open-curve baseline: the best disk is centered mid-segment with the
  // radius just reaching both ends.
  std::vector<Segment> segments;
  const int pieces = 128;
  for (int i = 0; i < pieces; ++i) {
    const double x0 = -1.0 + 2.0 * i / pieces;
    const double x1 = -1.0 + 2.0 * (i + 1) / pieces;
    segments.push_back({Complex{x0, 0}, Complex{x1, 0}});
  }
  const std::vector<Complex> centers{{0, 0}, {-1, 0}, {1, 0}, {0.3, 0}};
  const AhlforsResult r = ahlfors_scan(segments, centers, 0.01, 3.0, 8);
  CHECK(r.constant == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("length_in_disk clips segments exactly") {
  const std::vector<Segment> seg{{Complex{-2, 0}, Complex{2, 0}}};
  CHECK(length_in_disk(seg, Complex{0, 0}, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(length_in_disk(seg, Complex{0, 0}, 5.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(length_in_disk(seg, Complex{0, 3}, 1.0) == 0.0);
  CHECK(length_in_disk(seg, Complex{2, 0}, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("koch prefractal constants grow with the level") {
  double prev_k = 0.0, prev_m = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const JordanCurve curve = zoo("koch", 768, {{"level", static_cast<double>(level)}});
    const double k = chord_arc_constant(curve).constant;
    const double m = ahlfors_constant(curve).constant;
    CAPTURE(level);
    CHECK(k >= prev_k);
    CHECK(m >= prev_m);
    prev_k = k;
    prev_m = m;
  }
}

TEST_CASE("inversion bound constant on the circle") {
  const JordanCurve circle = zoo("circle", 1024);
  {
    const std::vector<WitnessPoint> w{{Complex{0, 0}, 1.0, true}};
    CHECK(inversion_bound_constant(circle, w, 8).constant ==
          doctest::Approx(kTwoPi).epsilon(0.005));
  }
  {
    const std::vector<WitnessPoint> w{{Complex{2, 0}, 1.0, false}};
    CHECK(inversion_bound_constant(circle, w, 8).constant ==
          doctest::Approx(kTwoPi / 3.0).epsilon(0.005));
  }
  {
    const std::vector<WitnessPoint> on_curve{{circle.node(0), 0.0, false}};
    CHECK_THROWS_AS(inversion_bound_constant(circle, on_curve, 8), numeric_error);
  }
}

TEST_CASE("far witnesses make the inversion product decay") {
  const JordanCurve circle = zoo("circle", 512);
  double previous = 1e300;
  for (double d : {10.0, 100.0, 1000.0}) {
    const std::vector<WitnessPoint> w{{Complex{d, 0}, d - 1.0, false}};
    const double product = inversion_bound_constant(circle, w, 8).constant;
    CHECK(product < previous);
    previous = product;
  }
}

TEST_CASE("witness cloud classifies sides and respects the margin") {
  const JordanCurve circle = zoo("circle", 512);
  const auto cloud = witness_cloud(circle, 16, 4);
  CHECK(!cloud.empty());
  int interior = 0, exterior = 0;
  for (const auto& w : cloud) {
    CHECK(w.distance > 0.0);
    CHECK(w.distance == doctest::Approx(distance_to_curve(circle, w.point)).epsilon(1e-9));
    (w.interior ? interior : exterior) += 1;
  }
  CHECK(interior > 0);
  CHECK(exterior > 0);
}

TEST_CASE("spherical supremum of the circle is the equator length") {
  const JordanCurve circle = zoo("circle", 1024);
  const std::vector<MobiusTransform> only_id{MobiusTransform::identity()};
  CHECK(spherical_supremum(circle, only_id, 8).constant ==
        doctest::Approx(kPi).epsilon(1e-3));

  const auto cloud = witness_cloud(circle, 16, 4);
  const auto transforms = default_transform_set(circle, cloud, 8);
  const SphericalSupResult sup = spherical_supremum(circle, transforms, 8);
  CHECK(sup.constant >= kPi * 0.999);
  CHECK(sup.constant <= kPi * 1.001);  // every Mobius image is again a circle
  CHECK(sup.sample_count == static_cast<int>(transforms.size()));
}

TEST_CASE("image regularity ratios: identity, similarity, inversion") {
  const JordanCurve circle = zoo("circle", 512, {{"R", 1.0}});
  const double base = ahlfors_constant(circle).constant;

  std::vector<MobiusTransform> ts;
  ts.push_back(MobiusTransform::identity());
  ts.push_back(MobiusTransform::similarity(Complex{2, 0}, Complex{0, 1}));
  const InvarianceReport report = mobius_invariance_report(circle, base, ts, 8);
  CHECK(!report.any_flagged);
  CHECK(report.rows[0].ratio == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(report.rows[1].ratio == doctest::Approx(1.0).epsilon(0.02));

  // 1/z on the circle shifted by 3: the image is a circle again
  const JordanCurve shifted = apply_mobius(
      MobiusTransform::similarity(Complex{1, 0}, Complex{3, 0}), circle, 1);
  const double shifted_base = ahlfors_constant(shifted).constant;
  const std::vector<MobiusTransform> inv{MobiusTransform::reciprocal()};
  const InvarianceReport r2 = mobius_invariance_report(shifted, shifted_base, inv, 8);
  CHECK(!r2.any_flagged);
  CHECK(r2.rows[0].ratio <= 12.0 * 1.05);
  CHECK(r2.rows[0].ratio == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("sampling budgets are monotone") {
  const JordanCurve star = normalize_to_length(zoo("star", 512, {{"eps", 0.2}, {"k", 3}}));

  CHECK(ahlfors_constant(star, 4).constant <=
        ahlfors_constant(star, 8).constant * (1.0 + 1e-12));

  const auto cloud_half = witness_cloud(star, 64, 4);
  const auto cloud_full = witness_cloud(star, 64, 8);
  CHECK(inversion_bound_constant(star, cloud_half, 8).constant <=
        inversion_bound_constant(star, cloud_full, 8).constant * (1.0 + 1e-12));

  const auto t_half = default_transform_set(star, cloud_half, 16);
  const auto t_full = default_transform_set(star, cloud_full, 32);
  CHECK(spherical_supremum(star, t_half, 8).constant <=
        spherical_supremum(star, t_full, 8).constant * (1.0 + 1e-12));
}

TEST_CASE("theorem chain on a star: 60M and 2Ks bounds") {
  const JordanCurve star = normalize_to_length(zoo("star", 512, {{"eps", 0.2}, {"k", 3}}));
  const double m = ahlfors_constant(star).constant;
  const auto cloud = witness_cloud(star);
  const auto transforms = default_transform_set(star, cloud);
  const double ks = spherical_supremum(star, transforms, 8).constant;
  const double c = inversion_bound_constant(star, cloud, 8).constant;
  CHECK(ks <= 60.0 * m * 1.05);
  CHECK(c <= 2.0 * ks * 1.05);
}

TEST_CASE("random transforms are deterministic and have unit determinant") {
  const JordanCurve circle = zoo("circle", 256);
  const auto a = random_transforms(circle, 8, 99);
  const auto b = random_transforms(circle, 8, 99);
  REQUIRE(a.size() == 8);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a() == b[i].a());
    CHECK(std::abs(a[i].a() * a[i].d() - a[i].b() * a[i].c() - Complex{1, 0}) < 1e-12);
  }
}

TEST_CASE("full regularity report carries witnesses and sample counts") {
  RegularityOptions options;
  options.cloud_base_nodes = 16;
  options.cloud_depths = 4;
  options.random_transforms = 4;
  const RegularityReport report =
      regularity_report(zoo("circle", 256), options);
  CHECK(report.chord_arc_k == doctest::Approx(kPi / 2).epsilon(0.01));
  CHECK(report.ahlfors_m == doctest::Approx(kTwoPi).epsilon(0.02));
  CHECK(report.ahlfors_m >= 2.0 - 16.0 / 256);  // polyline floor
  CHECK(report.inversion_c > 0.0);
  CHECK(report.slength_sup >= kPi * 0.999);
  CHECK(report.chord_arc_samples > 0);
  CHECK(report.ahlfors_samples > 0);
  CHECK(report.inversion_samples > 0);
  CHECK(report.slength_samples > 0);
}
