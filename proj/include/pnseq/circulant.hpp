#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pnseq/sequence.hpp"

namespace pnseq {

inline constexpr double kDefaultTolerance = 1e-9;

// n x n circulant stored as its first row; entry(r, c) = first_row[(c - r) mod n].
class CirculantMatrix {
 public:
  explicit CirculantMatrix(std::vector<std::int64_t> first_row);
  static CirculantMatrix identity(std::size_t n);

  std::size_t order() const noexcept { return row_.size(); }
  std::int64_t entry(std::size_t r, std::size_t c) const;
  std::span<const std::int64_t> first_row() const noexcept { return row_; }

  friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;

 private:
  std::vector<std::int64_t> row_;
};

struct Spectrum {
  std::vector<std::complex<double>> values;  // lambda_0 .. lambda_{n-1}
};

// A_x, first row = x.
CirculantMatrix build_circulant(const BipolarSequence& x);

// A_x A_x^T; first_row[tau] = R_x(tau). O(n^2), never forms dense products.
CirculantMatrix gram(const BipolarSequence& x);

// gram(x) == A_(n,-1,...,-1). Requires n >= 2.
bool is_ideal_gram(const BipolarSequence& x);

// Circulant product (a cyclic convolution of first rows). Throws
// LengthMismatch on order mismatch.
CirculantMatrix multiply(const CirculantMatrix& a, const CirculantMatrix& b);

// Dense rows, for export. Throws DomainError when n > 64.
inline constexpr std::size_t kMaxDenseOrder = 64;
std::vector<std::vector<std::int64_t>> to_dense(const CirculantMatrix& a);
std::string dense_csv(const CirculantMatrix& a);

// lambda_m = sum_l x_l exp(-j 2 pi m l / n), plain O(n^2) DFT.
Spectrum spectrum(const BipolarSequence& x);
Spectrum spectrum(const CirculantMatrix& a);
std::string spectrum_csv(const Spectrum& s);  // m,re,im,abs2

// |lambda_0|^2 = 1 and |lambda_m|^2 = n + 1 for m != 0, each to within tol * n.
bool spectral_ideal_check(const BipolarSequence& x, double tol = kDefaultTolerance);

// (n+1)/2 residuals of the reduced cosine system; n must be odd.
//   r[0] = sum_{l>r} x_l x_r - (1-n)/2
//   r[m] = sum_{l>r} x_l x_r cos(2 pi m (l-r) / n) - 1/2,  m = 1..(n-1)/2
std::vector<double> cosine_system_residuals(const BipolarSequence& x);
bool cosine_system_check(const BipolarSequence& x, double tol = kDefaultTolerance);

// R_x(k) + 1 for k = 1..(n-1)/2; n must be odd.
std::vector<std::int64_t> correlation_system_residuals(const BipolarSequence& x);
// All correlation residuals zero and |balance| = 1.
bool correlation_system_check(const BipolarSequence& x);

}  // namespace pnseq
