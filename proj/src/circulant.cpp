#include "pnseq/circulant.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pnseq/errors.hpp"

namespace pnseq {

CirculantMatrix::CirculantMatrix(std::vector<std::int64_t> first_row) : row_(std::move(first_row)) {
  if (row_.empty()) throw std::invalid_argument("circulant order must be >= 1");
}

CirculantMatrix CirculantMatrix::identity(std::size_t n) {
  std::vector<std::int64_t> row(n, 0);
  if (n == 0) throw std::invalid_argument("circulant order must be >= 1");
  row[0] = 1;
  return CirculantMatrix(std::move(row));
}

std::int64_t CirculantMatrix::entry(std::size_t r, std::size_t c) const {
  const std::size_t n = order();
  if (r >= n || c >= n) throw DomainError("circulant index out of range");
  return row_[(c + n - r) % n];
}

CirculantMatrix build_circulant(const BipolarSequence& x) {
  auto e = x.elements();
  return CirculantMatrix(std::vector<std::int64_t>(e.begin(), e.end()));
}

CirculantMatrix gram(const BipolarSequence& x) {
  return CirculantMatrix(autocorrelation_profile(x).values);
}

bool is_ideal_gram(const BipolarSequence& x) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("ideal autocorrelation needs n >= 2");
  std::vector<std::int64_t> target(n, -1);
  target[0] = static_cast<std::int64_t>(n);
  return gram(x) == CirculantMatrix(std::move(target));
}

CirculantMatrix multiply(const CirculantMatrix& a, const CirculantMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw LengthMismatch("circulant product needs equal orders");
  auto ra = a.first_row();
  auto rb = b.first_row();
  std::vector<std::int64_t> row(n, 0);
  // (AB)(0,c) = sum_j A(0,j) B(j,c) = sum_j a[j] b[(c-j) mod n]
  for (std::size_t j = 0; j < n; ++j) {
    if (ra[j] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) row[c] += ra[j] * rb[(c + n - j) % n];
  }
  return CirculantMatrix(std::move(row));
}

std::vector<std::vector<std::int64_t>> to_dense(const CirculantMatrix& a) {
  const std::size_t n = a.order();
  if (n > kMaxDenseOrder) throw DomainError("dense export limited to order <= 64");
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a.entry(r, c);
  return m;
}

std::string dense_csv(const CirculantMatrix& a) {
  std::ostringstream os;
  for (const auto& row : to_dense(a)) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << '\n';
  }
  return os.str();
}

namespace {

Spectrum dft(std::span<const std::int64_t> v) {
  const std::size_t n = v.size();
  // Twiddles indexed by (m*l) mod n keep the phase exact before cos/sin.
  std::vector<std::complex<double>> w(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    w[t] = {std::cos(angle), std::sin(angle)};
  }
  Spectrum s;
  s.values.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::complex<double> acc{};
    std::size_t idx = 0;
    for (std::size_t l = 0; l < n; ++l) {
      acc += static_cast<double>(v[l]) * w[idx];
      idx += m;
      if (idx >= n) idx -= n;
    }
    s.values[m] = acc;
  }
  return s;
}

}  // namespace

Spectrum spectrum(const BipolarSequence& x) {
  auto e = x.elements();
  std::vector<std::int64_t> v(e.begin(), e.end());
  return dft(v);
}

Spectrum spectrum(const CirculantMatrix& a) { return dft(a.first_row()); }

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream os;
  os.precision(17);
  os << "m,re,im,abs2\n";
  for (std::size_t m = 0; m < s.values.size(); ++m) {
    const auto& v = s.values[m];
    os << m << ',' << v.real() << ',' << v.imag() << ',' << std::norm(v) << '\n';
  }
  return os.str();
}

bool spectral_ideal_check(const BipolarSequence& x, double tol) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("ideal autocorrelation needs n >= 2");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const double nd = static_cast<double>(n);
  const double bound = tol * nd;
  const Spectrum s = spectrum(x);
  if (std::abs(std::norm(s.values[0]) - 1.0) > bound) return false;
  for (std::size_t m = 1; m < n; ++m)
    if (std::abs(std::norm(s.values[m]) - (nd + 1.0)) > bound) return false;
  return true;
}

namespace {

void require_odd(const BipolarSequence& x) {
  if (x.size() % 2 == 0) throw DomainError("equation system defined for odd n only");
}

}  // namespace

std::vector<double> cosine_system_residuals(const BipolarSequence& x) {
  require_odd(x);
  const std::size_t n = x.size();
  // c[d] = sum_r x_r x_{r+d}: aperiodic correlation grouping the l > r terms by l - r.
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t r = 0; r + d < n; ++r) c[d] += x[r] * x[r + d];

  const std::size_t half = (n - 1) / 2;
  std::vector<double> res(half + 1);
  std::int64_t pair_sum = 0;
  for (std::size_t d = 1; d < n; ++d) pair_sum += c[d];
  res[0] = static_cast<double>(pair_sum) - (1.0 - static_cast<double>(n)) / 2.0;
  for (std::size_t m = 1; m <= half; ++m) {
    double acc = 0.0;
    for (std::size_t d = 1; d < n; ++d) {
      const std::size_t t = (m * d) % n;
      acc += static_cast<double>(c[d]) *
             std::cos(2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
    }
    res[m] = acc - 0.5;
  }
  return res;
}

bool cosine_system_check(const BipolarSequence& x, double tol) {
  if (x.size() < 2) throw DomainError("ideal autocorrelation needs n >= 2");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (x.size() % 2 == 0) return false;
  const double bound = tol * static_cast<double>(x.size());
  for (double r : cosine_system_residuals(x))
    if (std::abs(r) > bound) return false;
  return true;
}

std::vector<std::int64_t> correlation_system_residuals(const BipolarSequence& x) {
  require_odd(x);
  const std::size_t half = (x.size() - 1) / 2;
  std::vector<std::int64_t> res(half);
  for (std::size_t k = 1; k <= half; ++k) res[k - 1] = autocorrelation(x, k) + 1;
  return res;
}

bool correlation_system_check(const BipolarSequence& x) {
  if (x.size() < 2) throw DomainError("ideal autocorrelation needs n >= 2");
  if (x.size() % 2 == 0) return false;
  const auto b = balance(x);
  if (b != 1 && b != -1) return false;
  for (auto r : correlation_system_residuals(x))
    if (r != 0) return false;
  return true;
}

}  // namespace pnseq
