#include "uq/numeric.hpp"

#include "fusion/providers.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <future>
#include <limits>

namespace uq {

namespace {

std::size_t null_dimension(const std::vector<double>& s, double tol) {
  const double scale = std::max(1.0, s.empty() ? 0.0 : s.front());
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x <= tol * scale; }));
}

}  // namespace

IntertwinerSpace intertwiner_space(const RepMatrices& a, const RepMatrices& b, double tol) {
  if (std::abs(a.q - b.q) > 1e-15 * std::max(1.0, std::abs(a.q)))
    throw BadParameter("intertwiner_space needs representations at the same q");
  const Eigen::Index da = a.dim(), db = b.dim();
  const Matrix Ia = Matrix::Identity(da, da), Ib = Matrix::Identity(db, db);
  // vec(T A) = (A^T ⊗ I) vec(T), vec(B T) = (I ⊗ B) vec(T), column-major vec.
  Matrix M(3 * da * db, da * db);
  const Matrix* pairs[3][2] = {{&a.E, &b.E}, {&a.F, &b.F}, {&a.K, &b.K}};
  for (int x = 0; x < 3; ++x) {
    M.middleRows(x * da * db, da * db) = Eigen::kroneckerProduct(pairs[x][0]->transpose(), Ib).eval() -
                                         Eigen::kroneckerProduct(Ia, *pairs[x][1]).eval();
  }
  Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  IntertwinerSpace out;
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const std::size_t k = null_dimension(out.singular_values, tol);
  if (null_dimension(out.singular_values, tol * 10) != k || null_dimension(out.singular_values, tol / 10) != k)
    throw IllConditioned("intertwiner dimension changes when the tolerance varies by one decade");
  const std::size_t cols = out.singular_values.size();
  if (k > 0 && k < cols) {
    const double kept = out.singular_values[cols - k - 1];
    const double dropped = out.singular_values[cols - k];
    out.gap = dropped > 0 ? kept / dropped : std::numeric_limits<double>::infinity();
    if (out.gap < kSingularGap) throw IllConditioned("singular value gap below 1e3");
  } else {
    out.gap = std::numeric_limits<double>::infinity();
  }
  const Matrix& V = svd.matrixV();
  for (std::size_t j = cols - k; j < cols; ++j) {
    const Eigen::VectorXcd v = V.col(static_cast<Eigen::Index>(j));
    out.basis.push_back(Eigen::Map<const Matrix>(v.data(), db, da));
  }
  return out;
}

bool ConjugateEquationsReport::pass(double tol) const {
  const double target = -std::abs(q);
  return scalar_residual <= tol && intertwiner_residual <= tol && std::abs(c_u - target) <= tol &&
         std::abs(c_ubar - target) <= tol;
}

namespace {

double invariance_residual(const RepMatrices& rep, const Eigen::VectorXcd& v) {
  return std::max({(rep.E * v).norm(), (rep.F * v).norm(), (rep.K * v - v).norm()});
}

}  // namespace

ConjugateEquationsReport verify_conjugate_equations(double q) {
  if (q >= 0) throw BadParameter("verify_conjugate_equations needs q < 0");
  const RepMatrices u = build_u(+1, 1, q), ubar = build_u(-1, 1, q);
  Eigen::VectorXcd R = Eigen::VectorXcd::Zero(4);
  R(1) = 1;             // ψ0 ⊗ ψ1
  R(2) = -std::abs(q);  // ψ1 ⊗ ψ0
  const Eigen::VectorXcd Rbar = R;

  ConjugateEquationsReport report;
  report.q = q;
  report.r_norm_squared = R.squaredNorm();
  report.intertwiner_residual =
      std::max(invariance_residual(tensor_rep(ubar, u), R), invariance_residual(tensor_rep(u, ubar), Rbar));

  const Matrix I2 = Matrix::Identity(2, 2);
  const Matrix left = Eigen::kroneckerProduct(Matrix(Rbar.adjoint()), I2).eval() *
                      Eigen::kroneckerProduct(I2, Matrix(R)).eval();
  const Matrix right = Eigen::kroneckerProduct(Matrix(R.adjoint()), I2).eval() *
                       Eigen::kroneckerProduct(I2, Matrix(Rbar)).eval();
  report.c_u = left.trace() / 2.0;
  report.c_ubar = right.trace() / 2.0;
  report.scalar_residual = std::max((left - report.c_u * I2).norm(), (right - report.c_ubar * I2).norm());
  return report;
}

PermutationReport verify_permutation_intertwiner(int n, double q) {
  PermutationReport report;
  report.n = n;
  report.q = q;
  for (int s : {1, -1}) {
    const RepMatrices u = build_u(s, n, q);
    for (int t : {1, -1}) {
      const RepMatrices iota = build_u(t, 0, q);
      const RepMatrices left = tensor_rep(iota, u), right = tensor_rep(u, iota);
      // With a one-dimensional factor the flip is the identity matrix.
      const Matrix P = Matrix::Identity(left.dim(), left.dim());
      report.residual = std::max({report.residual, (P * left.E - right.E * P).norm(),
                                  (P * left.F - right.F * P).norm(), (P * left.K - right.K * P).norm()});
    }
  }
  return report;
}

FusionCrosscheck fusion_crosscheck(int n_max, double q) {
  if (q >= 0) throw BadParameter("fusion_crosscheck needs q < 0");
  if (n_max < 0) throw BadParameter("n_max must be >= 0");
  const fusion::UqSU11Ring ring;
  FusionCrosscheck out;
  out.n_max = n_max;
  out.q = q;

  std::vector<std::pair<int, int>> lefts;
  for (int n = 0; n <= n_max; ++n)
    for (int ea : {1, -1}) lefts.emplace_back(ea, n);

  auto row = [&](int ea, int n) {
    std::vector<FusionEntry> entries;
    const RepMatrices a = build_u(ea, n, q);
    for (int m = 0; m <= n_max; ++m) {
      for (int eb : {1, -1}) {
        const RepMatrices ab = tensor_rep(a, build_u(eb, m, q));
        const auto symbolic = ring.decompose(ring.make({ea, static_cast<std::size_t>(n)}),
                                             ring.make({eb, static_cast<std::size_t>(m)}));
        for (int k = 0; k <= n + m + 1; ++k) {
          for (int ec : {1, -1}) {
            FusionEntry e{ea, n, eb, m, ec, k, 0, 0};
            e.numeric = intertwiner_space(build_u(ec, k, q), ab).dimension();
            const auto mult = symbolic.multiplicity(ring.make({ec, static_cast<std::size_t>(k)}));
            e.symbolic = mult.convert_to<std::size_t>();
            entries.push_back(e);
          }
        }
      }
    }
    return entries;
  };
  std::vector<std::future<std::vector<FusionEntry>>> jobs;
  for (const auto& [ea, n] : lefts) jobs.push_back(std::async(std::launch::async, row, ea, n));
  for (auto& job : jobs)
    for (const auto& e : job.get()) {
      out.entries.push_back(e);
      if (e.numeric != e.symbolic) out.mismatches.push_back(e);
    }
  return out;
}

}  // namespace uq
