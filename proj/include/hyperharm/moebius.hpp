#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hyperharm {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

enum class Model { HalfPlane, Disk };
enum class MatrixModel { SL2R, SU11 };
enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

inline constexpr double kParabolicTol = 1e-9;
inline constexpr double kEntryTol = 1e-10;

const char* model_name(Model m);
const char* matrix_model_name(MatrixModel m);
const char* isometry_class_name(IsometryClass c);

// Point of C plus a distinguished infinity token.
class ExtendedPoint {
 public:
  ExtendedPoint(Complex z) : z_(z), inf_(false) {}  // NOLINT(implicit)
  static ExtendedPoint infinity() { return ExtendedPoint(); }
  bool is_infinity() const { return inf_; }
  Complex value() const;  // throws DomainViolation at infinity
  std::string to_string() const;

 private:
  ExtendedPoint() : z_(0.0), inf_(true) {}
  Complex z_;
  bool inf_;
};

class MoebiusMap {
 public:
  MoebiusMap() : MoebiusMap(identity()) {}

  static MoebiusMap identity(MatrixModel model = MatrixModel::SL2R);
  // Validates the model constraints and ad - bc = 1 within tol, then
  // normalizes the sign.
  static MoebiusMap from_entries(Complex a, Complex b, Complex c, Complex d, MatrixModel model,
                                 double tol = kEntryTol);
  static MoebiusMap sl2r(double a, double b, double c, double d);
  // [[a, b], [conj(b), conj(a)]]
  static MoebiusMap su11(Complex a, Complex b);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  MatrixModel matrix_model() const { return model_; }
  Model domain() const { return model_ == MatrixModel::SL2R ? Model::HalfPlane : Model::Disk; }

  Complex determinant() const { return a_ * d_ - b_ * c_; }
  Complex trace() const { return a_ + d_; }
  double trace_squared() const;

  MoebiusMap inverse() const;
  MoebiusMap operator*(const MoebiusMap& rhs) const;  // (this * rhs)(z) = this(rhs(z))

  Complex apply(Complex z) const;
  ExtendedPoint apply(const ExtendedPoint& z) const;
  Complex derivative(Complex z) const;
  Complex second_derivative(Complex z) const;

  IsometryClass classify(double tol = kParabolicTol) const;
  bool is_identity(double tol = 1e-9) const;
  std::vector<ExtendedPoint> fixed_points() const;

  // Entry distance up to the overall sign.
  double distance(const MoebiusMap& other) const;

 private:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d, MatrixModel model)
      : a_(a), b_(b), c_(c), d_(d), model_(model) {}
  // Projects nearly-valid entries back onto the model and fixes the sign.
  static MoebiusMap project(Complex a, Complex b, Complex c, Complex d, MatrixModel model);

  Complex a_, b_, c_, d_;
  MatrixModel model_;
};

// Cayley transform C(z) = (z - i)/(z + i) from the half-plane to the disk.
Complex cayley(Complex z);
Complex cayley(const ExtendedPoint& z);
Complex cayley_inv(Complex w);  // PoleAtPoint at w = 1
ExtendedPoint cayley_inv_extended(Complex w);
Complex cayley_derivative(Complex z);
Complex cayley_inv_derivative(Complex w);

// C g C^-1 and its inverse operation.
MoebiusMap to_disk(const MoebiusMap& m);
MoebiusMap to_half_plane(const MoebiusMap& m);

// w -> (w + z)/(conj(z) w + 1), normalized in SU(1,1).
MoebiusMap zero_to_z(Complex z);
// SU(1,1) map [[a, b], [conj b, conj a]] fixing 1.
MoebiusMap stab1_element(Complex a, Complex b);

}  // namespace hyperharm
