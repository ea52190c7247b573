#pragma once

#include <span>
#include <vector>

#include "curvenorm/types.hpp"

namespace curvenorm {

bool is_power_of_two(int n);

/// In-place iterative radix-2 transform, sign=-1 forward / +1 inverse
/// (unnormalized). Size must be a power of two.
void fft_radix2(std::span<Complex> data, int sign);

/// Discrete spectrum of N equispaced circle samples, coefficients c_n for
/// n = -N/2 .. N/2-1 stored in FFT layout (index k holds mode k for
/// k < N/2 and mode k-N otherwise).
struct FourierSpectrum {
  std::vector<Complex> coeff;

  int size() const { return static_cast<int>(coeff.size()); }
  int mode_of(int k) const { return k < size() / 2 ? k : k - size(); }
  /// Coefficient of e^{i n theta}, n in [-N/2, N/2).
  Complex mode(int n) const {
    const int N = size();
    return coeff[static_cast<size_t>((n % N + N) % N)];
  }
};

FourierSpectrum fourier_spectrum(std::span<const Complex> samples);

}  // namespace curvenorm
