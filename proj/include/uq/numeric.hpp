#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace uq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Residual tolerance shared by every check in this module.
inline constexpr double kTolerance = 1e-9;
/// Required ratio between the smallest kept and the largest discarded singular value.
inline constexpr double kSingularGap = 1e3;

class BadParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real forms: SL2 carries no *-structure, SU2 has E* = F, SU11 has E* = -F; K* = K in both.
enum class Form { SL2, SU2, SU11 };
/// Square root of q used for K: for q < 0, PlusI is t = i√|q| and MinusI is t = -i√|q|.
enum class Branch { PlusI, MinusI };

std::string to_string(Form f);

/// Quantum integer [k] = (q^k - q^-k) / (q - q^-1).
struct QInt {
  int k = 0;
  double value = 0;
};
QInt qint(int k, double q);

Complex sqrt_q(double q, Branch branch = Branch::PlusI);

struct RepMatrices {
  int n = 0;  ///< the representation acts on n + 1 basis vectors
  Matrix E, F, K, K_inv;
  double q = 0;
  Form form = Form::SL2;
  Complex w = 1;  ///< twist of the SL2 family; unused otherwise
  Eigen::Index dim() const { return E.rows(); }
};

/// ι_w ⊗ π_n on v_0..v_n: E v_r = w[n-r+1] v_{r-1}, F v_r = w[r+1] v_{r+1}, K v_r = w t^{n-2r} v_r.
RepMatrices build_pi(Complex w, int n, double q, Branch branch = Branch::PlusI);

/// The unitary representations u_{±n} of the SU11 form (q < 0) on an orthonormal basis.
RepMatrices build_u(int sign, int n, double q);

/// Same matrices, different form tag.
RepMatrices with_form(RepMatrices rep, Form form);

struct RelationResiduals {
  double kek = 0;   ///< ‖K E K^-1 - q E‖
  double kfk = 0;   ///< ‖K F K^-1 - q^-1 F‖
  double comm = 0;  ///< ‖[E, F] - (K^2 - K^-2)/(q - q^-1)‖
  double kinv = 0;  ///< ‖K K^-1 - 1‖
  double max() const;
  bool pass(double tol = kTolerance) const { return max() <= tol; }
};
RelationResiduals relation_residuals(const RepMatrices& rep);

struct StarResiduals {
  double ef = 0;  ///< ‖E† + F‖ (SU11) or ‖E† - F‖ (SU2)
  double k = 0;   ///< ‖K† - K‖
  bool pass(double tol = kTolerance) const { return ef <= tol && k <= tol; }
};
/// Throws BadParameter for the SL2 tag.
StarResiduals check_star(const RepMatrices& rep);

struct UnitarizabilityResult {
  bool unitarizable = false;
  Eigen::VectorXd T;  ///< positive diagonal with T π T^-1 a *-representation
  std::vector<std::string> evidence;  ///< every obstruction found, or the construction used
  Complex eigenvalue = 0;  ///< offending eigenvalue for obstructions
  StarResiduals verification;
};

/// Decides whether ι_w ⊗ π_n (q < 0, n >= 1) is similar to a *-representation of `form`.
UnitarizabilityResult unitarizability_witness(Complex w, int n, double q, Form form,
                                              Branch branch = Branch::PlusI);

/// Coproduct action: Δ(E) = E⊗K^-1 + K⊗E, Δ(F) = F⊗K^-1 + K⊗F, Δ(K) = K⊗K.
RepMatrices tensor_rep(const RepMatrices& a, const RepMatrices& b);

struct IntertwinerSpace {
  std::vector<Matrix> basis;  ///< matrices T with T a(X) = b(X) T
  std::vector<double> singular_values;
  double gap = 0;  ///< smallest kept / largest discarded singular value (infinite if none discarded)
  std::size_t dimension() const { return basis.size(); }
};

/// Null space of the stacked system over X ∈ {E, F, K}. Singular values
/// below tol * max(1, s_max) are discarded; throws IllConditioned unless the
/// gap is at least kSingularGap and the dimension is the same at tol*10 and tol/10.
IntertwinerSpace intertwiner_space(const RepMatrices& a, const RepMatrices& b, double tol = kTolerance);

struct ConjugateEquationsReport {
  double q = 0;
  Complex c_u = 0;     ///< (R̄† ⊗ 1_u)(1_u ⊗ R) = c_u 1_u
  Complex c_ubar = 0;  ///< (R† ⊗ 1_ū)(1_ū ⊗ R̄) = c_ubar 1_ū
  double scalar_residual = 0;       ///< deviation of both maps from scalars
  double intertwiner_residual = 0;  ///< R, R̄ invariant vectors
  double r_norm_squared = 0;
  bool pass(double tol = kTolerance) const;
};

/// R = ψ0⊗ψ1 - |q| ψ1⊗ψ0 in ū⊗u and R̄ the same vector in u⊗ū, u = u_{+1}, ū = u_{-1}.
ConjugateEquationsReport verify_conjugate_equations(double q);

struct PermutationReport {
  int n = 0;
  double q = 0;
  double residual = 0;  ///< max over both signs of u_{±n}, both ι_{±1} and X ∈ {E, F, K}
  bool pass(double tol = kTolerance) const { return residual <= tol; }
};

/// The flip ι_{±1} ⊗ u_{±n} → u_{±n} ⊗ ι_{±1} intertwines.
PermutationReport verify_permutation_intertwiner(int n, double q);

struct FusionEntry {
  int sign_a = 1, n = 0, sign_b = 1, m = 0, sign_c = 1, k = 0;
  std::size_t numeric = 0;
  std::size_t symbolic = 0;
};

struct FusionCrosscheck {
  int n_max = 0;
  double q = 0;
  std::vector<FusionEntry> entries;
  std::vector<FusionEntry> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Numeric multiplicities dim Hom(u_{σk}, u_{εn} ⊗ u_{δm}) for n, m <= n_max and
/// k <= n + m + 1 against the symbolic fusion rules; pairs run concurrently.
FusionCrosscheck fusion_crosscheck(int n_max, double q);

}  // namespace uq
