#include "hyperharm/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperharm/errors.hpp"

namespace hyperharm {

namespace {

constexpr double kPoleTol = 1e-14;

bool negative_lead(Complex x) { return x.real() < 0.0 || (x.real() == 0.0 && x.imag() < 0.0); }

}  // namespace

const char* model_name(Model m) { return m == Model::HalfPlane ? "HalfPlane" : "Disk"; }

const char* matrix_model_name(MatrixModel m) { return m == MatrixModel::SL2R ? "SL2R" : "SU11"; }

const char* isometry_class_name(IsometryClass c) {
  switch (c) {
    case IsometryClass::Identity: return "Identity";
    case IsometryClass::Elliptic: return "Elliptic";
    case IsometryClass::Parabolic: return "Parabolic";
    case IsometryClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

Complex ExtendedPoint::value() const {
  if (inf_) throw Error(ErrorCode::DomainViolation, "point at infinity has no finite value");
  return z_;
}

std::string ExtendedPoint::to_string() const {
  if (inf_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << z_.real() << (z_.imag() < 0 ? "-" : "+") << std::abs(z_.imag()) << "i";
  return os.str();
}

MoebiusMap MoebiusMap::identity(MatrixModel model) { return MoebiusMap(1.0, 0.0, 0.0, 1.0, model); }

MoebiusMap MoebiusMap::project(Complex a, Complex b, Complex c, Complex d, MatrixModel model) {
  if (model == MatrixModel::SL2R) {
    a = a.real();
    b = b.real();
    c = c.real();
    d = d.real();
    double det = (a * d - b * c).real();
    if (!(det > 0.0)) throw Error(ErrorCode::ConstraintViolation, "non-positive determinant");
    double s = 1.0 / std::sqrt(det);
    a *= s, b *= s, c *= s, d *= s;
  } else {
    Complex aa = 0.5 * (a + std::conj(d));
    Complex bb = 0.5 * (b + std::conj(c));
    double n = std::norm(aa) - std::norm(bb);
    if (!(n > 0.0)) throw Error(ErrorCode::ConstraintViolation, "|a|^2 - |b|^2 must be positive");
    double s = 1.0 / std::sqrt(n);
    a = aa * s;
    b = bb * s;
    c = std::conj(b);
    d = std::conj(a);
  }
  for (Complex x : {a, b, c, d}) {
    if (x != Complex(0.0)) {
      if (negative_lead(x)) a = -a, b = -b, c = -c, d = -d;
      break;
    }
  }
  return MoebiusMap(a, b, c, d, model);
}

MoebiusMap MoebiusMap::from_entries(Complex a, Complex b, Complex c, Complex d, MatrixModel model,
                                    double tol) {
  for (Complex x : {a, b, c, d}) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw Error(ErrorCode::ConstraintViolation, "non-finite matrix entry");
  }
  if (std::abs(a * d - b * c - 1.0) > tol)
    throw Error(ErrorCode::ConstraintViolation, "determinant differs from 1");
  if (model == MatrixModel::SL2R) {
    double im = std::max({std::abs(a.imag()), std::abs(b.imag()), std::abs(c.imag()), std::abs(d.imag())});
    if (im > tol) throw Error(ErrorCode::ConstraintViolation, "SL2R entries must be real");
  } else {
    if (std::abs(d - std::conj(a)) > tol || std::abs(c - std::conj(b)) > tol)
      throw Error(ErrorCode::ConstraintViolation, "SU11 requires d = conj(a), c = conj(b)");
  }
  return project(a, b, c, d, model);
}

MoebiusMap MoebiusMap::sl2r(double a, double b, double c, double d) {
  return from_entries(a, b, c, d, MatrixModel::SL2R);
}

MoebiusMap MoebiusMap::su11(Complex a, Complex b) {
  return from_entries(a, b, std::conj(b), std::conj(a), MatrixModel::SU11);
}

double MoebiusMap::trace_squared() const {
  Complex t = trace();
  return (t * t).real();
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(d_, -b_, -c_, a_, model_); }

MoebiusMap MoebiusMap::operator*(const MoebiusMap& r) const {
  if (model_ != r.model_) throw Error(ErrorCode::InvalidArgument, "cannot compose maps of different models");
  return project(a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_,
                 c_ * r.b_ + d_ * r.d_, model_);
}

Complex MoebiusMap::apply(Complex z) const {
  Complex den = c_ * z + d_;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "cz + d vanishes");
  return (a_ * z + b_) / den;
}

ExtendedPoint MoebiusMap::apply(const ExtendedPoint& z) const {
  if (z.is_infinity()) {
    if (std::abs(c_) < kPoleTol) return ExtendedPoint::infinity();
    return a_ / c_;
  }
  Complex den = c_ * z.value() + d_;
  if (std::abs(den) < kPoleTol) return ExtendedPoint::infinity();
  return (a_ * z.value() + b_) / den;
}

Complex MoebiusMap::derivative(Complex z) const {
  Complex den = c_ * z + d_;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "cz + d vanishes");
  return 1.0 / (den * den);
}

Complex MoebiusMap::second_derivative(Complex z) const {
  Complex den = c_ * z + d_;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "cz + d vanishes");
  return -2.0 * c_ / (den * den * den);
}

bool MoebiusMap::is_identity(double tol) const { return distance(identity(model_)) <= tol; }

IsometryClass MoebiusMap::classify(double tol) const {
  if (is_identity(std::max(tol, 1e-12))) return IsometryClass::Identity;
  double t2 = trace_squared();
  if (t2 < 4.0 - tol) return IsometryClass::Elliptic;
  if (t2 > 4.0 + tol) return IsometryClass::Hyperbolic;
  return IsometryClass::Parabolic;
}

std::vector<ExtendedPoint> MoebiusMap::fixed_points() const {
  IsometryClass cls = classify();
  if (cls == IsometryClass::Identity) throw Error(ErrorCode::IdentityMap, "identity fixes every point");
  std::vector<ExtendedPoint> roots;
  if (std::abs(c_) < 1e-13) {
    roots.push_back(ExtendedPoint::infinity());
    if (std::abs(a_ - d_) > 1e-13) roots.emplace_back(b_ / (d_ - a_));
  } else {
    Complex t = trace();
    if (cls == IsometryClass::Parabolic) {
      roots.emplace_back((a_ - d_) / (2.0 * c_));
    } else {
      Complex s = std::sqrt(t * t - 4.0);
      roots.emplace_back((a_ - d_ + s) / (2.0 * c_));
      roots.emplace_back((a_ - d_ - s) / (2.0 * c_));
    }
  }
  if (cls != IsometryClass::Elliptic) return roots;
  // Elliptic: keep only the interior fixed point.
  std::vector<ExtendedPoint> inside;
  for (const auto& p : roots) {
    if (p.is_infinity()) continue;
    Complex z = p.value();
    bool in = model_ == MatrixModel::SL2R ? z.imag() > 0.0 : std::abs(z) < 1.0;
    if (in) inside.push_back(p);
  }
  return inside;
}

double MoebiusMap::distance(const MoebiusMap& o) const {
  double plus = std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
  double minus = std::max({std::abs(a_ + o.a_), std::abs(b_ + o.b_), std::abs(c_ + o.c_), std::abs(d_ + o.d_)});
  return std::min(plus, minus);
}

Complex cayley(Complex z) {
  Complex den = z + kI;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "Cayley transform undefined at -i");
  return (z - kI) / den;
}

Complex cayley(const ExtendedPoint& z) { return z.is_infinity() ? Complex(1.0) : cayley(z.value()); }

Complex cayley_inv(Complex w) {
  Complex den = 1.0 - w;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "inverse Cayley transform undefined at 1");
  return kI * (1.0 + w) / den;
}

ExtendedPoint cayley_inv_extended(Complex w) {
  if (std::abs(1.0 - w) < kPoleTol) return ExtendedPoint::infinity();
  return cayley_inv(w);
}

Complex cayley_derivative(Complex z) {
  Complex den = z + kI;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "Cayley transform undefined at -i");
  return 2.0 * kI / (den * den);
}

Complex cayley_inv_derivative(Complex w) {
  Complex den = 1.0 - w;
  if (std::abs(den) < kPoleTol) throw Error(ErrorCode::PoleAtPoint, "inverse Cayley transform undefined at 1");
  return 2.0 * kI / (den * den);
}

// C = [[1, -i], [1, i]] / sqrt(2i), C^-1 = [[i, i], [-1, 1]] / sqrt(2i).
MoebiusMap to_disk(const MoebiusMap& m) {
  if (m.matrix_model() != MatrixModel::SL2R) throw Error(ErrorCode::InvalidArgument, "to_disk expects an SL2R map");
  Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
  // [[1,-i],[1,i]] * m
  Complex p = a - kI * c, q = b - kI * d, r = a + kI * c, s = b + kI * d;
  // * [[i, i], [-1, 1]], then divide by det scale 2i * 2i / ... -> overall 1/(2i)
  Complex A = p * kI - q, B = p * kI + q, Cc = r * kI - s, D = r * kI + s;
  Complex scale = 1.0 / (2.0 * kI);
  Complex ea = A * scale, eb = B * scale, ec = Cc * scale, ed = D * scale;
  return MoebiusMap::from_entries(ea, eb, ec, ed, MatrixModel::SU11, 1e-8);
}

MoebiusMap to_half_plane(const MoebiusMap& m) {
  if (m.matrix_model() != MatrixModel::SU11) throw Error(ErrorCode::InvalidArgument, "to_half_plane expects an SU11 map");
  Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
  // [[i, i], [-1, 1]] * m * [[1, -i], [1, i]] / (2i)
  Complex p = kI * a + kI * c, q = kI * b + kI * d, r = -a + c, s = -b + d;
  Complex A = p + q, B = -kI * p + kI * q, Cc = r + s, D = -kI * r + kI * s;
  Complex scale = 1.0 / (2.0 * kI);
  return MoebiusMap::from_entries(A * scale, B * scale, Cc * scale, D * scale, MatrixModel::SL2R, 1e-8);
}

MoebiusMap zero_to_z(Complex z) {
  double n = 1.0 - std::norm(z);
  if (!(n > 0.0)) throw Error(ErrorCode::DomainViolation, "zero_to_z needs |z| < 1");
  double s = 1.0 / std::sqrt(n);
  return MoebiusMap::su11(s, z * s);
}

MoebiusMap stab1_element(Complex a, Complex b) {
  if (std::abs(std::norm(a) - std::norm(b) - 1.0) > kEntryTol)
    throw Error(ErrorCode::ConstraintViolation, "stab1_element needs |a|^2 - |b|^2 = 1");
  if (std::abs((a + b).imag()) > kEntryTol)
    throw Error(ErrorCode::ConstraintViolation, "stab1_element needs a + b real");
  return MoebiusMap::su11(a, b);
}

}  // namespace hyperharm
