#include "curvenorm/seminorm.hpp"

#include <cmath>
#include <future>
#include <thread>

#include "curvenorm/fft.hpp"

namespace curvenorm {

namespace {

// Fixed block count keeps the reduction order (and hence the bits of the
// result) independent of how many workers actually run.
constexpr int kPairSumBlocks = 64;

void require_equispaced(const JordanCurve& curve) {
  if (!curve.is_equispaced())
    throw std::invalid_argument("resample required");
}

void require_matching(const JordanCurve& curve, const CurveFunction& f) {
  if (static_cast<int>(f.values.size()) != curve.size())
    throw std::invalid_argument("curve/function sample count mismatch");
  for (const Complex& v : f.values)
    if (!is_finite(v)) throw std::invalid_argument("non-finite function sample");
}

}  // namespace

SeminormResult douglas_seminorm(const JordanCurve& curve,
                                const CurveFunction& f) {
  require_equispaced(curve);
  require_matching(curve, f);
  const int n = curve.size();
  const double ds = curve.spacing();
  const std::span<const Complex> z = curve.nodes();
  const std::span<const Complex> v = f.values;

  const int rows_per_block = (n + kPairSumBlocks - 1) / kPairSumBlocks;
  std::vector<double> partial(kPairSumBlocks, 0.0);

  auto block_sum = [&](int block) {
    const int lo = block * rows_per_block;
    const int hi = std::min(n, lo + rows_per_block);
    double acc = 0.0;
    for (int i = lo; i < hi; ++i) {
      const Complex zi = z[static_cast<size_t>(i)];
      const Complex vi = v[static_cast<size_t>(i)];
      for (int j = i + 1; j < n; ++j) {
        const double df = std::norm(v[static_cast<size_t>(j)] - vi);
        const double dz = std::norm(z[static_cast<size_t>(j)] - zi);
        acc += df / dz;
      }
    }
    partial[static_cast<size_t>(block)] = acc;
  };

  const unsigned workers =
      std::min<unsigned>(std::thread::hardware_concurrency(), kPairSumBlocks);
  if (workers > 1) {
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      tasks.push_back(std::async(std::launch::async, [&, t] {
        for (int block = static_cast<int>(t); block < kPairSumBlocks;
             block += static_cast<int>(workers))
          block_sum(block);
      }));
    }
    for (auto& task : tasks) task.get();
  } else {
    for (int block = 0; block < kPairSumBlocks; ++block) block_sum(block);
  }

  double off_diag = 0.0;
  for (int block = 0; block < kPairSumBlocks; ++block)
    off_diag += partial[static_cast<size_t>(block)];
  off_diag *= 2.0;  // unordered pairs counted once above

  double diag = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    diag += std::norm(v[static_cast<size_t>(j)] - v[static_cast<size_t>(i)]) /
            std::norm(z[static_cast<size_t>(j)] - z[static_cast<size_t>(i)]);
  }

  const double scale = ds * ds / (4.0 * kPi * kPi);
  SeminormResult result;
  result.scheme = SeminormScheme::double_integral;
  result.n_samples = n;
  result.diagonal_term = scale * diag;
  result.value_sq = scale * off_diag + result.diagonal_term;
  return result;
}

SeminormResult circle_seminorm_spectral(const CurveFunction& samples) {
  const int n = static_cast<int>(samples.values.size());
  if (!is_power_of_two(n))
    throw std::invalid_argument("spectral seminorm: N must be a power of two");
  const FourierSpectrum spec = fourier_spectrum(samples.values);
  double total = 0.0;
  for (int k = 0; k < n; ++k)
    total += std::abs(static_cast<double>(spec.mode_of(k))) *
             std::norm(spec.coeff[static_cast<size_t>(k)]);
  SeminormResult result;
  result.scheme = SeminormScheme::spectral;
  result.n_samples = n;
  result.diagonal_term = 0.0;
  result.value_sq = total;
  return result;
}

CurveFunction pullback_arclength(const JordanCurve& curve,
                                 const CurveFunction& f) {
  require_equispaced(curve);
  require_matching(curve, f);
  if (std::abs(curve.length() - kTwoPi) > 1e-9 * kTwoPi)
    throw std::invalid_argument("pullback requires length normalized to 2*pi");
  CurveFunction out;
  out.values = f.values;
  out.label = f.label.empty() ? "pullback" : f.label + ".pullback";
  return out;
}

EquivalenceReport equivalence_report(const JordanCurve& curve,
                                     std::span<const CurveFunction> functions,
                                     double chord_arc_k, double slack) {
  EquivalenceReport report;
  report.chord_arc_k = chord_arc_k;
  report.slack = slack;
  report.lower_bound = 4.0 / (kPi * kPi) * (1.0 - slack);
  report.upper_bound = chord_arc_k * chord_arc_k * (1.0 + slack);

  for (const CurveFunction& f : functions) {
    EquivalenceRow row;
    row.function = f.label;
    row.curve_value_sq = douglas_seminorm(curve, f).value_sq;
    row.circle_value_sq =
        circle_seminorm_spectral(pullback_arclength(curve, f)).value_sq;
    if (row.circle_value_sq < 1e-12) {
      if (row.curve_value_sq >= 1e-12)
        throw numeric_error(
            "equivalence report: pullback seminorm vanished for non-constant input");
      row.ratio = 1.0;  // constant function, both sides zero
      row.in_bracket = true;
    } else {
      row.ratio = row.curve_value_sq / row.circle_value_sq;
      row.in_bracket =
          row.ratio >= report.lower_bound && row.ratio <= report.upper_bound;
    }
    report.all_in_bracket = report.all_in_bracket && row.in_bracket;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace curvenorm
