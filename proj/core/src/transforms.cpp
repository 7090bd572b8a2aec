#include "symtoep/transforms.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace symtoep {
namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place radix-2 FFT with kernel e^{sign*2*pi*i*j*k/n}, un-normalized.
// a.size() must be a power of two.
void fft_pow2(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<cd> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = sign * kTwoPi * static_cast<double>(k) /
                         static_cast<double>(n);
    twiddle[k] = std::polar(1.0, angle);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cd w = twiddle[k * step];
        const cd u = a[start + k];
        const cd v = a[start + k + len / 2] * w;
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }
}

// Arbitrary-length transform with kernel e^{sign*2*pi*i*j*k/n} via the chirp
// identity j*k = (j^2 + k^2 - (j-k)^2)/2. The chirp phase pi*m^2/n is reduced
// with m^2 mod 2n in integer arithmetic, which keeps the trig arguments small
// and the transform accurate at every length up to the desk-scale limit.
std::vector<cd> bluestein(const std::vector<cd>& x, int sign) {
  const std::size_t n = x.size();
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(n);

  std::vector<cd> chirp(n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::int64_t m2 =
        (static_cast<std::int64_t>(m) * static_cast<std::int64_t>(m)) % two_n;
    const double angle = sign * std::numbers::pi * static_cast<double>(m2) /
                         static_cast<double>(n);
    chirp[m] = std::polar(1.0, angle);
  }

  const std::size_t m_fft = next_power_of_two(2 * n - 1);
  std::vector<cd> a(m_fft, cd{0.0, 0.0});
  std::vector<cd> b(m_fft, cd{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t m = 1; m < n; ++m) {
    b[m] = std::conj(chirp[m]);
    b[m_fft - m] = b[m];
  }

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t i = 0; i < m_fft; ++i) a[i] *= b[i];
  fft_pow2(a, +1);

  std::vector<cd> out(n);
  const double scale = 1.0 / static_cast<double>(m_fft);
  for (std::size_t k = 0; k < n; ++k) out[k] = chirp[k] * (a[k] * scale);
  return out;
}

ComplexVector transform(const ComplexVector& x, int sign) {
  if (x.size() == 0)
    throw std::invalid_argument("dft: input must have length >= 1");
  if (!x.allFinite()) throw numeric_error("dft: non-finite input entry");

  const std::size_t n = static_cast<std::size_t>(x.size());
  std::vector<cd> work(x.data(), x.data() + n);
  if (is_power_of_two(n)) {
    fft_pow2(work, sign);
  } else {
    work = bluestein(work, sign);
  }

  ComplexVector out(x.size());
  for (std::size_t k = 0; k < n; ++k) out[static_cast<Index>(k)] = work[k];
  return out;
}

}  // namespace

ComplexVector dft(const ComplexVector& x, bool inverse) {
  ComplexVector out = transform(x, inverse ? +1 : -1);
  if (inverse) out /= static_cast<double>(x.size());
  return out;
}

ComplexVector circulant_eigs(const ComplexVector& first_column) {
  return transform(first_column, +1);
}

ComplexVector circulant_eigs(const RealVector& first_column) {
  return circulant_eigs(ComplexVector(first_column.cast<cd>()));
}

}  // namespace symtoep
