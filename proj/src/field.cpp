#include "hyperharm/field.hpp"

#include "hyperharm/errors.hpp"

namespace hyperharm {

VectorField make_field(Model model, ComplexFn eval, std::string label, FieldKind kind, ComplexFn dzbar) {
  VectorField f;
  f.model = model;
  f.eval = std::move(eval);
  f.dzbar = std::move(dzbar);
  f.kind = kind;
  f.label = std::move(label);
  return f;
}

VectorField pullback_field(const MoebiusMap& m, const VectorField& x) {
  if (m.domain() != x.model) throw Error(ErrorCode::InvalidArgument, "map and field live on different models");
  VectorField out = x;
  out.eval = [m, f = x.eval](Complex z) { return f(m.apply(z)) / m.derivative(z); };
  if (x.dzbar) {
    out.dzbar = [m, g = x.dzbar](Complex z) {
      Complex d = m.derivative(z);
      return g(m.apply(z)) * std::conj(d) / d;
    };
  }
  return out;
}

VectorField pushforward_field(const MoebiusMap& m, const VectorField& x) { return pullback_field(m.inverse(), x); }

VectorField half_plane_to_disk(const VectorField& xi) {
  if (xi.model != Model::HalfPlane) throw Error(ErrorCode::InvalidArgument, "expected a half-plane field");
  VectorField out = xi;
  out.model = Model::Disk;
  out.eval = [f = xi.eval](Complex w) { return f(cayley_inv(w)) / cayley_inv_derivative(w); };
  if (xi.dzbar) {
    out.dzbar = [g = xi.dzbar](Complex w) {
      Complex d = cayley_inv_derivative(w);
      return g(cayley_inv(w)) * std::conj(d) / d;
    };
  }
  return out;
}

VectorField disk_to_half_plane(const VectorField& chi) {
  if (chi.model != Model::Disk) throw Error(ErrorCode::InvalidArgument, "expected a disk field");
  VectorField out = chi;
  out.model = Model::HalfPlane;
  out.eval = [f = chi.eval](Complex z) { return f(cayley(z)) / cayley_derivative(z); };
  if (chi.dzbar) {
    out.dzbar = [g = chi.dzbar](Complex z) {
      Complex d = cayley_derivative(z);
      return g(cayley(z)) * std::conj(d) / d;
    };
  }
  return out;
}

VectorField as_half_plane(const VectorField& x) {
  return x.model == Model::HalfPlane ? x : disk_to_half_plane(x);
}

namespace {

VectorField combine(const VectorField& x, const VectorField& y, double sign) {
  if (x.model != y.model) throw Error(ErrorCode::InvalidArgument, "fields live on different models");
  VectorField out;
  out.model = x.model;
  out.kind = (x.kind == FieldKind::ClosedForm && y.kind == FieldKind::ClosedForm) ? FieldKind::ClosedForm
                                                                                  : FieldKind::Quadrature;
  out.eval = [f = x.eval, g = y.eval, sign](Complex z) { return f(z) + sign * g(z); };
  if (x.dzbar && y.dzbar) out.dzbar = [f = x.dzbar, g = y.dzbar, sign](Complex z) { return f(z) + sign * g(z); };
  out.label = x.label + (sign > 0 ? "+" : "-") + y.label;
  return out;
}

}  // namespace

VectorField operator+(const VectorField& x, const VectorField& y) { return combine(x, y, 1.0); }
VectorField operator-(const VectorField& x, const VectorField& y) { return combine(x, y, -1.0); }

VectorField scale(Complex s, const VectorField& x) {
  VectorField out = x;
  out.eval = [f = x.eval, s](Complex z) { return s * f(z); };
  if (x.dzbar) out.dzbar = [g = x.dzbar, s](Complex z) { return s * g(z); };
  return out;
}

}  // namespace hyperharm
