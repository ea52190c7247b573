#include "curvenorm/fft.hpp"

#include <cmath>

namespace curvenorm {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::span<Complex> data, int sign) {
  const size_t n = data.size();
  if (!is_power_of_two(static_cast<int>(n)))
    throw std::invalid_argument("fft: size must be a power of two");
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const Complex u = data[i + k];
        const Complex v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

FourierSpectrum fourier_spectrum(std::span<const Complex> samples) {
  const int n = static_cast<int>(samples.size());
  if (!is_power_of_two(n))
    throw std::invalid_argument("fourier_spectrum: sample count must be a power of two");
  FourierSpectrum spec;
  spec.coeff.assign(samples.begin(), samples.end());
  fft_radix2(spec.coeff, -1);
  for (Complex& c : spec.coeff) c /= static_cast<double>(n);
  return spec;
}

}  // namespace curvenorm
