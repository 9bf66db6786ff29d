#pragma once

#include <functional>
#include <string>

#include "hyperharm/moebius.hpp"

namespace hyperharm {

enum class FieldKind { ClosedForm, Quadrature, GridSampled };

using ComplexFn = std::function<Complex(Complex)>;

// Tangent vector field on one model, identified with a complex function.
// dzbar is the exact d/dzbar when known (closed-form catalog fields);
// otherwise derivatives are taken by finite differences.
struct VectorField {
  Model model = Model::HalfPlane;
  ComplexFn eval;
  ComplexFn dzbar;
  FieldKind kind = FieldKind::ClosedForm;
  std::string label;

  Complex operator()(Complex z) const { return eval(z); }
  bool has_exact_dzbar() const { return static_cast<bool>(dzbar); }
};

VectorField make_field(Model model, ComplexFn eval, std::string label = {},
                       FieldKind kind = FieldKind::ClosedForm, ComplexFn dzbar = {});

// (m^* X)(z) = X(m z) / m'(z)
VectorField pullback_field(const MoebiusMap& m, const VectorField& x);
// (m_* X)(m z) = m'(z) X(z)
VectorField pushforward_field(const MoebiusMap& m, const VectorField& x);

// Cayley transport: chi = C_* xi and its inverse.
VectorField half_plane_to_disk(const VectorField& xi);
VectorField disk_to_half_plane(const VectorField& chi);
// Returns the half-plane representative of either model.
VectorField as_half_plane(const VectorField& x);

VectorField operator+(const VectorField& x, const VectorField& y);
VectorField operator-(const VectorField& x, const VectorField& y);
VectorField scale(Complex s, const VectorField& x);

}  // namespace hyperharm
