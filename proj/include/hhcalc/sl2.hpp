#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hhcalc/field.hpp"

namespace hhcalc {

using Mat2 = std::array<std::array<Scalar, 2>, 2>;
using Mat3 = std::array<std::array<Scalar, 3>, 3>;
using Mat4 = std::array<std::array<Scalar, 4>, 4>;

/// x = c_e e + c_h h + c_f f, with e = [[0,1],[0,0]], h = diag(1,-1),
/// f = [[0,0],[1,0]] acting on the column basis (x, y) of L(1).
struct SL2Element {
  std::array<Scalar, 3> c;  // (e, h, f)

  static SL2Element zero(const Field& field);
  /// k = 0, 1, 2 for e, h, f.
  static SL2Element basis(std::size_t k, const Field& field);
  /// Throws DomainError on matrices with nonzero trace.
  static SL2Element from_matrix(const Mat2& m);
  Mat2 matrix() const;

  SL2Element operator+(const SL2Element& o) const;
  SL2Element operator*(const Scalar& s) const;
  bool operator==(const SL2Element&) const = default;
};

/// tr(ab); k(e,f) = 1, k(h,h) = 2.
Scalar killing(const SL2Element& a, const SL2Element& b);

/// Ψ = Σ a[i][j] g_i ⊗ g_j over (g_0, g_1, g_2) = (e, h, f).
class PsiTensor {
 public:
  explicit PsiTensor(const Field& field);

  /// Comma-separated `gg:coeff` tokens, e.g. `ee:2,ff:2,hh:1`; a bare `gg`
  /// means coefficient 1; empty text or `0` is the zero tensor. Repeated
  /// tokens add up.
  static PsiTensor parse(std::string_view text, const Field& field);
  /// Canonical token form in (e,h,f) order, `0` for the zero tensor.
  std::string to_string() const;

  const Field& field() const { return field_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i][j] = v; }
  bool is_zero() const;

  /// Σ a_ij ρ(g_i) ⊗ ρ(g_j) on L(1)⊗L(1), basis x⊗x, x⊗y, y⊗x, y⊗y.
  Mat4 kronecker() const;

  bool operator==(const PsiTensor&) const = default;

 private:
  Field field_;
  Mat3 a_;
};

enum class Side { left, right };

/// left: v⊣Ψ = Σ a_ij k(g_i, v) g_j.  right: Ψ⊢v = Σ a_ij g_i k(g_j, v).
SL2Element contract(const PsiTensor& psi, const SL2Element& v, Side side);

/// Matrix (columns = images of e, h, f) of v ↦ Ψ⊢(v⊣Ψ).
Mat3 psi_dagger_psi(const PsiTensor& psi);

/// dim of {(u_1, u_2) ∈ sl2² : [u_2⊗1 + 1⊗u_1, Ψ] = 0}.
std::size_t stab_dim(const PsiTensor& psi);
/// dim of the eigenvalue-4 eigenspace of psi_dagger_psi.
std::size_t jj_dim(const PsiTensor& psi);

struct KernelModelReport {
  std::size_t total;     // solutions of (1+Ψ)(f2⊗1+1⊗f3) = (f4⊗1+1⊗f1)(1+Ψ)
  std::size_t stab;      // stab_dim
  std::size_t jj;        // jj_dim
  std::size_t v_system;  // {(v1,v2) : v2⊣Ψ = 2 v1, Ψ⊢v1 = 2 v2}
};

/// Solves the kernel equation with f1 ∈ k·1 ⊕ sl2 and f2, f3, f4 ∈ sl2
/// (13 unknowns, 16 equations). Throws ConsistencyError unless
/// total = stab + jj and v_system = jj.
KernelModelReport kernel_model_dims(const PsiTensor& psi);

/// Ad(g)⊗Ad(h) applied to Ψ. Throws DomainError unless det g = det h = 1.
PsiTensor orbit_conjugate(const PsiTensor& psi, const Mat2& g, const Mat2& h);

}  // namespace hhcalc
