#include "hyperharm/circle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hyperharm/errors.hpp"

namespace hyperharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool valid_size(std::size_t n) { return n >= 64 && (n & (n - 1)) == 0; }

void check_size(std::size_t n) {
  if (!valid_size(n)) throw Error(ErrorCode::InvalidArgument, "circle sample count must be a power of two >= 64");
}

// Plans are created once per (size, direction); execution on fresh arrays is
// thread-safe, planning is not.
fftw_plan plan_for(int n, int sign) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, sign);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  std::vector<Complex> in(n), out(n);
  fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(key, p);
  return p;
}

std::vector<Complex> transform(const std::vector<Complex>& in, int sign) {
  int n = static_cast<int>(in.size());
  std::vector<Complex> src = in, out(n);
  fftw_execute_dft(plan_for(n, sign), reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

int wrap(int n, int size) { return ((n % size) + size) % size; }

Complex unit(int k, int n) { return std::polar(1.0, kTwoPi * k / n); }

}  // namespace

CircleField CircleField::from_samples(std::vector<Complex> samples) {
  check_size(samples.size());
  CircleField f;
  f.coeffs_ = transform(samples, FFTW_FORWARD);
  double inv = 1.0 / double(samples.size());
  for (auto& c : f.coeffs_) c *= inv;
  f.samples_ = std::move(samples);
  return f;
}

CircleField CircleField::from_function(const ComplexFn& x, int n) {
  check_size(static_cast<std::size_t>(std::max(n, 0)));
  std::vector<Complex> s(n);
  for (int k = 0; k < n; ++k) s[k] = x(unit(k, n));
  return from_samples(std::move(s));
}

CircleField CircleField::from_coefficients(std::vector<Complex> coeffs) {
  check_size(coeffs.size());
  CircleField f;
  f.samples_ = transform(coeffs, FFTW_BACKWARD);
  f.coeffs_ = std::move(coeffs);
  return f;
}

Complex CircleField::point(int k) const { return unit(k, size()); }

Complex CircleField::coefficient(int n) const {
  int N = size();
  if (n < -N / 2 || n >= N / 2) return 0.0;
  return coeffs_[wrap(n, N)];
}

double CircleField::l2_norm() const {
  double s = 0.0;
  for (Complex x : samples_) s += std::norm(x);
  return std::sqrt(s / double(samples_.size()));
}

double CircleField::coefficient_norm() const {
  double s = 0.0;
  for (Complex c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

CircleField CircleField::operator+(const CircleField& o) const {
  if (o.size() != size()) throw Error(ErrorCode::InvalidArgument, "circle fields of different sizes");
  std::vector<Complex> s(samples_);
  for (int k = 0; k < size(); ++k) s[k] += o.samples_[k];
  return from_samples(std::move(s));
}

CircleField CircleField::operator-(const CircleField& o) const {
  if (o.size() != size()) throw Error(ErrorCode::InvalidArgument, "circle fields of different sizes");
  std::vector<Complex> s(samples_);
  for (int k = 0; k < size(); ++k) s[k] -= o.samples_[k];
  return from_samples(std::move(s));
}

double tangential_defect(const CircleField& x) {
  double d = 0.0;
  for (int k = 0; k < x.size(); ++k) {
    Complex iw = kI * x.point(k);
    d = std::max(d, std::abs((x.samples()[k] * std::conj(iw)).imag()));
  }
  return d;
}

bool is_tangential(const CircleField& x, double tol) { return tangential_defect(x) < tol; }

std::vector<double> tangential_factor(const CircleField& x) {
  std::vector<double> f(x.size());
  for (int k = 0; k < x.size(); ++k) f[k] = (x.samples()[k] * std::conj(kI * x.point(k))).real();
  return f;
}

CircleField tangential_projection(const CircleField& x) {
  std::vector<double> f = tangential_factor(x);
  std::vector<Complex> s(x.size());
  for (int k = 0; k < x.size(); ++k) s[k] = f[k] * kI * x.point(k);
  return CircleField::from_samples(std::move(s));
}

FourierSplit split_tangential_h2(const CircleField& x) {
  int N = x.size();
  std::vector<Complex> d(N, 0.0);
  for (int m = -N / 2; m <= -1; ++m) {
    Complex c = x.coefficient(m);
    d[wrap(m, N)] += c;
    d[wrap(2 - m, N)] -= std::conj(c);
  }
  FourierSplit out;
  out.tangential_part = CircleField::from_coefficients(std::move(d));
  out.h2_part = x - out.tangential_part;
  return out;
}

KillingProjection killing_project(const CircleField& x) {
  // Killing coefficients: c_0 = a, c_1 = i b, c_2 = -conj(a).
  Complex c0 = x.coefficient(0), c1 = x.coefficient(1), c2 = x.coefficient(2);
  KillingProjection p;
  p.triple.a = 0.5 * (c0 - std::conj(c2));
  p.triple.b = c1.imag();
  CircleField k = CircleField::from_function(p.triple, x.size());
  p.residual = (x - k).l2_norm();
  return p;
}

double scalar_poisson(const std::vector<double>& f, Complex z) {
  check_size(f.size());
  double s = 1.0 - std::norm(z);
  if (std::abs(z) >= 1.0 - 1e-6) throw Error(ErrorCode::TooCloseToBoundary, "scalar_poisson needs |z| < 1 - 1e-6");
  int n = static_cast<int>(f.size());
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += f[k] * s / std::norm(unit(k, n) - z);
  return acc / n;
}

Complex poisson_kernel_field(Complex z) {
  double s = 1.0 - std::norm(z);
  if (!(s > 0.0)) throw Error(ErrorCode::DomainViolation, "poisson_kernel_field needs |z| < 1");
  Complex u = 1.0 - std::conj(z);
  return kI * s * s * s / (std::norm(u) * u * u);
}

namespace {

// Boundary data f iz, trig-interpolated to finer grids on demand so the
// kernel stays resolved as |z| -> 1.
class PoissonData {
 public:
  PoissonData(std::vector<double> f, ConvolutionMeasure measure) : measure_(measure) {
    int n = static_cast<int>(f.size());
    std::vector<Complex> s(f.begin(), f.end());
    coeffs_ = transform(s, FFTW_FORWARD);
    for (auto& c : coeffs_) c /= double(n);
    levels_.emplace(n, weights(n));
  }

  Complex eval(Complex z) const {
    double s = 1.0 - std::norm(z);
    if (!(s > 0.0)) throw Error(ErrorCode::DomainViolation, "poisson extension lives on the open disk");
    const Level& lv = level(1.0 - std::abs(z));
    Complex acc = 0.0;
    for (std::size_t k = 0; k < lv.weight.size(); ++k) {
      Complex u = 1.0 - lv.w[k] * std::conj(z);
      acc += lv.weight[k] / (std::norm(u) * u * u);
    }
    return kI * s * s * s * acc;
  }

 private:
  struct Level {
    std::vector<Complex> w, weight;
  };

  Level weights(int m) const {
    int n = static_cast<int>(coeffs_.size());
    std::vector<Complex> padded(m, 0.0);
    for (int k = 0; k < n; ++k) {
      int freq = k < n / 2 ? k : k - n;
      if (k == n / 2) {  // split the Nyquist term symmetrically
        padded[wrap(n / 2, m)] += 0.5 * coeffs_[k];
        padded[wrap(-n / 2, m)] += 0.5 * coeffs_[k];
        continue;
      }
      padded[wrap(freq, m)] += coeffs_[k];
    }
    std::vector<Complex> fine = transform(padded, FFTW_BACKWARD);
    Level lv;
    lv.w.resize(m);
    lv.weight.resize(m);
    for (int k = 0; k < m; ++k) {
      Complex w = unit(k, m);
      lv.w[k] = w;
      lv.weight[k] = fine[k].real() * (measure_ == ConvolutionMeasure::RotationEquivariant ? w : Complex(1.0)) /
                     double(m);
    }
    return lv;
  }

  const Level& level(double dist) const {
    int n = static_cast<int>(coeffs_.size());
    int m = n;
    while (m < 64.0 / dist && m < (1 << 20)) m *= 2;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = levels_.find(m);
    if (it == levels_.end()) it = levels_.emplace(m, weights(m)).first;
    return it->second;
  }

  ConvolutionMeasure measure_;
  std::vector<Complex> coeffs_;
  mutable std::mutex mu_;
  mutable std::map<int, Level> levels_;
};

}  // namespace

VectorField poisson_extend(const CircleField& x, ConvolutionMeasure measure, double tangential_tol) {
  double scale = 1.0;
  for (Complex v : x.samples()) scale = std::max(scale, std::abs(v));
  double defect = tangential_defect(x);
  if (defect > tangential_tol * scale)
    throw Error(ErrorCode::NotTangential, "poisson_extend needs a tangential field (defect " +
                                              std::to_string(defect) + ")");
  auto data = std::make_shared<const PoissonData>(tangential_factor(x), measure);
  return make_field(
      Model::Disk, [data](Complex z) { return data->eval(z); }, "F(X)", FieldKind::Quadrature);
}

int kernel_mass_samples(double eps) {
  int n = 4096;
  while (n < 64.0 / eps && n < (1 << 24)) n *= 2;
  return n;
}

KernelMass kernel_mass(double eps, int n) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::DomainViolation, "kernel_mass needs 0 < eps < 1");
  if (n <= 0) n = kernel_mass_samples(eps);
  check_size(static_cast<std::size_t>(n));
  double s = 1.0 - eps;
  Complex acc = 0.0;
  for (int k = 0; k < n; ++k) acc += poisson_kernel_field(s * unit(k, n));
  KernelMass m;
  m.samples = n;
  m.numeric = acc / double(n);
  double u = 1.0 - s * s;
  // Residue at the triple pole z = s: h''(s)/2 with h = z^2/(1 - s z).
  double res = 1.0 / u + 2.0 * s * s / (u * u) + std::pow(s, 4) / (u * u * u);
  m.closed_form = kI * u * u * u * res;
  double printed = (6 * s - 12 * std::pow(s, 3) + 8 * std::pow(s, 5) - 2 * std::pow(s, 7)) / (2 * std::pow(u, 4));
  m.printed_closed_form = 8.0 * eps * eps * eps * printed;
  return m;
}

CircleField radial_l2_restriction(const VectorField& field, double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::DomainViolation, "radius must lie in (0, 1)");
  return CircleField::from_function([&](Complex w) { return field(r * w); }, n);
}

double l2_distance(const CircleField& a, const CircleField& b) { return (a - b).l2_norm(); }

}  // namespace hyperharm
