#include "uq/numeric.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace uq {

std::string to_string(Form f) {
  switch (f) {
    case Form::SL2: return "sl2";
    case Form::SU2: return "su2";
    case Form::SU11: return "su11";
  }
  return "?";
}

namespace {

void check_q(double q) {
  if (!std::isfinite(q) || q == 0 || std::abs(std::abs(q) - 1) < 1e-12)
    throw BadParameter("q must be real, nonzero and different from ±1");
}

bool is_unit_fourth_root(Complex w) {
  for (Complex c : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)})
    if (std::abs(w - c) < 1e-12) return true;
  return false;
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

std::string format(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace

QInt qint(int k, double q) {
  check_q(q);
  return {k, (std::pow(q, k) - std::pow(q, -k)) / (q - 1 / q)};
}

Complex sqrt_q(double q, Branch branch) {
  check_q(q);
  const double r = std::sqrt(std::abs(q));
  const double s = branch == Branch::PlusI ? 1 : -1;
  return q < 0 ? Complex(0, s * r) : Complex(s * r, 0);
}

RepMatrices build_pi(Complex w, int n, double q, Branch branch) {
  check_q(q);
  if (n < 0) throw BadParameter("n must be >= 0");
  if (!is_unit_fourth_root(w)) throw BadParameter("w must be one of ±1, ±i");
  const Complex t = sqrt_q(q, branch);
  RepMatrices rep;
  rep.n = n;
  rep.q = q;
  rep.w = w;
  rep.form = Form::SL2;
  const int d = n + 1;
  rep.E = Matrix::Zero(d, d);
  rep.F = Matrix::Zero(d, d);
  rep.K = Matrix::Zero(d, d);
  rep.K_inv = Matrix::Zero(d, d);
  for (int r = 0; r <= n; ++r) {
    if (r >= 1) rep.E(r - 1, r) = w * qint(n - r + 1, q).value;
    if (r < n) rep.F(r + 1, r) = w * qint(r + 1, q).value;
    rep.K(r, r) = w * std::pow(t, n - 2 * r);
    rep.K_inv(r, r) = 1.0 / rep.K(r, r);
  }
  return rep;
}

RepMatrices build_u(int sign, int n, double q) {
  check_q(q);
  if (q >= 0) throw BadParameter("build_u needs q < 0");
  if (n < 0) throw BadParameter("n must be >= 0");
  if (sign != 1 && sign != -1) throw BadParameter("sign must be +1 or -1");
  const double s = sign;
  const Complex I(0, 1);
  const double a = std::sqrt(std::abs(q));
  RepMatrices rep;
  rep.n = n;
  rep.q = q;
  rep.form = Form::SU11;
  const int d = n + 1;
  rep.E = Matrix::Zero(d, d);
  rep.F = Matrix::Zero(d, d);
  rep.K = Matrix::Zero(d, d);
  rep.K_inv = Matrix::Zero(d, d);
  auto br = [&](int k) { return qint(k, q).value; };
  for (int r = 0; r <= n; ++r) {
    const double weight = std::pow(a, n - 2 * r);
    if (n % 2 == 1) {
      if (r >= 1) rep.E(r - 1, r) = s * I * safe_sqrt(br(n - r + 1) * br(r));
      if (r < n) rep.F(r + 1, r) = s * I * safe_sqrt(br(r + 1) * br(n - r));
      rep.K(r, r) = -s * parity_sign((n - 1) / 2 - r) * weight;
    } else {
      if (r >= 1) rep.E(r - 1, r) = s * parity_sign(r) * safe_sqrt(-br(n - r + 1) * br(r));
      if (r < n) rep.F(r + 1, r) = s * parity_sign(r) * safe_sqrt(-br(r + 1) * br(n - r));
      rep.K(r, r) = s * parity_sign(n / 2 - r) * weight;
    }
    rep.K_inv(r, r) = 1.0 / rep.K(r, r);
  }
  return rep;
}

RepMatrices with_form(RepMatrices rep, Form form) {
  rep.form = form;
  return rep;
}

double RelationResiduals::max() const { return std::max({kek, kfk, comm, kinv}); }

RelationResiduals relation_residuals(const RepMatrices& rep) {
  const double q = rep.q;
  const Matrix id = Matrix::Identity(rep.dim(), rep.dim());
  RelationResiduals r;
  r.kek = (rep.K * rep.E * rep.K_inv - q * rep.E).norm();
  r.kfk = (rep.K * rep.F * rep.K_inv - (1 / q) * rep.F).norm();
  const Matrix K2 = rep.K * rep.K, Km2 = rep.K_inv * rep.K_inv;
  r.comm = (rep.E * rep.F - rep.F * rep.E - (K2 - Km2) / (q - 1 / q)).norm();
  r.kinv = (rep.K * rep.K_inv - id).norm();
  return r;
}

StarResiduals check_star(const RepMatrices& rep) {
  StarResiduals s;
  switch (rep.form) {
    case Form::SU11: s.ef = (rep.E.adjoint() + rep.F).norm(); break;
    case Form::SU2: s.ef = (rep.E.adjoint() - rep.F).norm(); break;
    case Form::SL2: throw BadParameter("check_star needs the su2 or su11 form");
  }
  s.k = (rep.K.adjoint() - rep.K).norm();
  return s;
}

UnitarizabilityResult unitarizability_witness(Complex w, int n, double q, Form form, Branch branch) {
  if (q >= 0) throw BadParameter("unitarizability_witness needs q < 0");
  if (n < 1) throw BadParameter("unitarizability_witness needs n >= 1");
  if (form == Form::SL2) throw BadParameter("unitarizability_witness needs the su2 or su11 form");
  const RepMatrices pi = build_pi(w, n, q, branch);
  UnitarizabilityResult result;

  for (int r = 0; r <= n; ++r) {
    const Complex k = pi.K(r, r);
    if (std::abs(k.imag()) > kTolerance * std::max(1.0, std::abs(k))) {
      result.eigenvalue = k;
      result.evidence.push_back("pi(K) has the non-real eigenvalue " + format(k.real()) + " + " +
                                format(k.imag()) + "i, but K is self-adjoint");
      break;
    }
  }
  const Matrix EF = pi.E * pi.F;
  for (int r = 0; r < n; ++r) {
    const Complex x = EF(r, r);
    const bool wrong = form == Form::SU2 ? x.real() < -kTolerance : x.real() > kTolerance;
    if (std::abs(x.imag()) <= kTolerance && wrong) {
      if (result.evidence.empty()) result.eigenvalue = x;
      result.evidence.push_back("pi(EF) has the eigenvalue " + format(x.real()) +
                                (form == Form::SU2 ? ", but EF = EE* is positive" : ", but EF = -EE* is negative"));
      break;
    }
  }
  if (!result.evidence.empty()) return result;

  // Diagonal similarity: d_r = ±(conj(w)/w)[n-r+1]/[r] d_{r-1}, T = sqrt(d).
  const double sgn = form == Form::SU11 ? -1 : 1;
  Eigen::VectorXcd d(n + 1);
  d(0) = 1;
  for (int r = 1; r <= n; ++r)
    d(r) = sgn * (std::conj(w) / w) * qint(n - r + 1, q).value / qint(r, q).value * d(r - 1);
  result.T.resize(n + 1);
  for (int r = 0; r <= n; ++r) {
    if (std::abs(d(r).imag()) > kTolerance || d(r).real() <= 0) {
      result.eigenvalue = d(r);
      result.evidence.push_back("the diagonal recursion produced a non-positive entry");
      return result;
    }
    result.T(r) = std::sqrt(d(r).real());
  }
  const Matrix T = result.T.cast<Complex>().asDiagonal();
  const Matrix Tinv = result.T.cwiseInverse().cast<Complex>().asDiagonal();
  RepMatrices conj = pi;
  conj.E = T * pi.E * Tinv;
  conj.F = T * pi.F * Tinv;
  conj.form = form;
  result.verification = check_star(conj);
  result.unitarizable = result.verification.pass();
  result.evidence.push_back(result.unitarizable ? "T pi T^-1 is a *-representation"
                                                : "T pi T^-1 fails the star check");
  return result;
}

RepMatrices tensor_rep(const RepMatrices& a, const RepMatrices& b) {
  if (std::abs(a.q - b.q) > 1e-15 * std::max(1.0, std::abs(a.q)))
    throw BadParameter("tensor_rep needs representations at the same q");
  RepMatrices out;
  out.q = a.q;
  out.form = a.form == b.form ? a.form : Form::SL2;
  out.w = a.w * b.w;
  out.E = Eigen::kroneckerProduct(a.E, b.K_inv).eval() + Eigen::kroneckerProduct(a.K, b.E).eval();
  out.F = Eigen::kroneckerProduct(a.F, b.K_inv).eval() + Eigen::kroneckerProduct(a.K, b.F).eval();
  out.K = Eigen::kroneckerProduct(a.K, b.K).eval();
  out.K_inv = Eigen::kroneckerProduct(a.K_inv, b.K_inv).eval();
  out.n = static_cast<int>(out.E.rows()) - 1;
  return out;
}

}  // namespace uq
