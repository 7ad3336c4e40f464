/*
 * Copyright 2026 The fermiupb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fermiupb/search.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fermiupb/rng.hpp"

namespace fupb {

namespace {

/// Precomputed index tables for wedge coordinates of an N x M factor matrix.
struct WedgeTables {
  int m, n;
  std::vector<MultiIndex> subsets;  // all N-subsets in rank order

  WedgeTables(int m_, int n_) : m(m_), n(n_), subsets(all_multi_indices(m_, n_)) {}

  /// Pluecker coordinates u_I = det x[:, I].
  VectorXcd coords(const MatrixXcd& x) const {
    VectorXcd u(static_cast<Eigen::Index>(subsets.size()));
    MatrixXcd sub(n, n);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sub(r, c) = x(r, subsets[s][c] - 1);
      u[static_cast<Eigen::Index>(s)] = det_small(sub);
    }
    return u;
  }

  /// grad[k][col] = sum_I gbar_I * conj(d u_I / d x(k, col)); the derivative
  /// of a minor with respect to one entry is the corresponding cofactor.
  MatrixXcd gradient(const MatrixXcd& x, const VectorXcd& gbar) const {
    MatrixXcd grad = MatrixXcd::Zero(n, m);
    MatrixXcd sub(n, n), minor(n - 1, n - 1);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const Cx g = gbar[static_cast<Eigen::Index>(s)];
      if (g == Cx(0.0)) continue;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sub(r, c) = x(r, subsets[s][c] - 1);
      for (int k = 0; k < n; ++k)
        for (int pos = 0; pos < n; ++pos) {
          for (int r = 0, rr = 0; r < n; ++r) {
            if (r == k) continue;
            for (int c = 0, cc = 0; c < n; ++c) {
              if (c == pos) continue;
              minor(rr, cc) = sub(r, c);
              ++cc;
            }
            ++rr;
          }
          Cx cof = det_small(minor);
          if ((k + pos) % 2 == 1) cof = -cof;
          grad(k, subsets[s][pos] - 1) += g * std::conj(cof);
        }
    }
    return grad;
  }

  /// d det(x[:, I]) / d x(k, I[pos]): the signed minor.
  Cx cofactor(const MatrixXcd& x, const MultiIndex& I, int k, int pos) const {
    MatrixXcd minor(n - 1, n - 1);
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == k) continue;
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == pos) continue;
        minor(rr, cc++) = x(r, I[c] - 1);
      }
      ++rr;
    }
    Cx cof = det_small(minor);
    return ((k + pos) % 2 == 1) ? -cof : cof;
  }

 private:
  static Cx det_small(const MatrixXcd& a) {
    switch (a.rows()) {
      case 0:
        return Cx(1.0);
      case 1:
        return a(0, 0);
      case 2:
        return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      case 3:
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
      default:
        return a.determinant();
    }
  }
};

MatrixXcd orthonormalize_rows(const MatrixXcd& x) {
  Eigen::HouseholderQR<MatrixXcd> qr(x.adjoint());
  MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(x.cols(), x.rows());
  return q.adjoint();
}

/// Levenberg-Marquardt polish of a near-witness. The residual
/// rho(x) = (I - Q Q^dag) wedge(x) is holomorphic in the factor entries, so
/// the Gauss-Newton step is a complex least-squares solve on the cofactor
/// Jacobian. Plain descent stalls in the flat tail around zero-residual
/// minima; this drives f from ~1e-6 down to the 1e-20 range a sound witness
/// needs.
double lm_polish(const WedgeTables& tab, const MatrixXcd& q, MatrixXcd& x,
                 double f, double f_stop, int max_rounds = 30) {
  const int n = tab.n, m = tab.m;
  const auto subset_count = static_cast<Eigen::Index>(tab.subsets.size());
  double damping = 1e-8;
  for (int round = 0; round < max_rounds && f > f_stop; ++round) {
    VectorXcd u = tab.coords(x);
    u /= u.norm();
    VectorXcd rho = u - q * (q.adjoint() * u);

    // Jacobian of wedge coordinates; column order (row k, column c).
    MatrixXcd jac(subset_count, n * m);
    MatrixXcd unit = MatrixXcd::Zero(n, m);
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < m; ++c) {
        VectorXcd col = VectorXcd::Zero(subset_count);
        for (std::size_t s = 0; s < tab.subsets.size(); ++s) {
          const MultiIndex& I = tab.subsets[s];
          for (int pos = 0; pos < n; ++pos)
            if (I[pos] - 1 == c) col[static_cast<Eigen::Index>(s)] =
                tab.cofactor(x, I, k, pos);
        }
        jac.col(k * m + c) = col - q * (q.adjoint() * col);
      }

    Eigen::JacobiSVD<MatrixXcd> svd(jac,
                                    Eigen::ComputeThinU | Eigen::ComputeThinV);
    bool improved = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      VectorXcd rhs = svd.matrixU().adjoint() * rho;
      VectorXcd coef(svd.singularValues().size());
      for (Eigen::Index i = 0; i < coef.size(); ++i) {
        double sv = svd.singularValues()(i);
        coef[i] = -rhs[i] * sv / (sv * sv + damping);
      }
      VectorXcd delta = svd.matrixV() * coef;
      MatrixXcd cand = x;
      for (int k = 0; k < n; ++k)
        for (int c = 0; c < m; ++c) cand(k, c) += delta[k * m + c];
      cand = orthonormalize_rows(cand);
      VectorXcd uc = tab.coords(cand);
      double fc = (uc - q * (q.adjoint() * uc)).squaredNorm() /
                  uc.squaredNorm();
      if (fc < f) {
        x = std::move(cand);
        f = fc;
        damping = std::max(damping * 0.25, 1e-12);
        improved = true;
        break;
      }
      damping *= 8.0;
    }
    if (!improved) break;
  }
  return f;
}

MatrixXcd random_factor_matrix(int n, int m, SplitMix& rng) {
  MatrixXcd x(n, m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) x(r, c) = rng.next_complex_normal();
  return orthonormalize_rows(x);
}

/// f and df/dconj(x) for f = ||u - Q Q^dag u||^2 / ||u||^2, u = wedge(x).
std::pair<double, MatrixXcd> objective_gradient_impl(const WedgeTables& tab,
                                                     const MatrixXcd& q,
                                                     const MatrixXcd& x) {
  VectorXcd u = tab.coords(x);
  const double un2 = u.squaredNorm();
  VectorXcd r = u - q * (q.adjoint() * u);
  const double f = r.squaredNorm() / un2;
  VectorXcd gbar = (r - f * u) / un2;
  return {f, tab.gradient(x, gbar)};
}

}  // namespace

std::pair<double, MatrixXcd> search_objective_gradient(const Subspace<Cx>& t,
                                                       const MatrixXcd& x) {
  WedgeTables tab(t.m(), t.n());
  if (x.rows() != t.n() || x.cols() != t.m())
    throw std::invalid_argument("search_objective_gradient: factor matrix "
                                "must be N x M");
  return objective_gradient_impl(tab, t.ortho(), x);
}

SearchResult search_decomposable(const Subspace<Cx>& t,
                                 const SearchConfig& cfg) {
  cfg.validate();
  if (t.dim() < 1)
    throw std::invalid_argument("search_decomposable: zero-dimensional "
                                "subspace");
  const int m = t.m(), n = t.n();
  WedgeTables tab(m, n);
  const MatrixXcd& q = t.ortho();

  SearchResult out;
  out.best_residual = std::numeric_limits<double>::infinity();
  MatrixXcd best_x;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    SplitMix rng(cfg.seed, static_cast<std::uint64_t>(restart));
    MatrixXcd x = random_factor_matrix(n, m, rng);
    auto [f, grad] = objective_gradient_impl(tab, q, x);
    double step = cfg.step_init;
    // Polish well past tol_found: a witness at f ~ tol_found^2 lies within
    // tol_found of the subspace in norm, which is what refutation soundness
    // re-checks.
    const double f_stop = 1e-4 * cfg.tol_found * cfg.tol_found;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      const double g2 = grad.squaredNorm();
      if (f < f_stop || g2 < 1e-32) break;
      bool accepted = false;
      while (step >= cfg.step_min) {
        MatrixXcd cand = orthonormalize_rows(x - step * grad);
        auto [fc, gc] = objective_gradient_impl(tab, q, cand);
        if (fc <= f - 1e-4 * step * g2) {
          x = std::move(cand);
          f = fc;
          grad = std::move(gc);
          step *= cfg.step_grow;
          accepted = true;
          break;
        }
        step *= cfg.step_shrink;
      }
      if (!accepted) break;  // stagnated at machine precision
    }
    // Descent reached the basin; finish with Gauss-Newton, whose quadratic
    // tail convergence the flat directions deny to plain descent. At strict
    // positive local minima the polish fails its first step and exits.
    if (f > f_stop && f < 1e-2) {
      f = lm_polish(tab, q, x, f, f_stop);
      std::tie(f, grad) = objective_gradient_impl(tab, q, x);
    }
    ++out.restarts_used;
    if (f < out.best_residual) {
      out.best_residual = f;
      out.best_restart = restart;
      best_x = x;
    }
    if (out.best_residual < cfg.tol_found) break;
  }

  if (out.best_residual < cfg.tol_found) {
    out.found = true;
    std::vector<Vec<Cx>> factors(n, Vec<Cx>(m));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) factors[r][c] = best_x(r, c);
    out.witness = Factorization<Cx>(m, std::move(factors));
  }
  return out;
}

ProductSearchResult search_product_pair(int d1, int d2,
                                        const MatrixXcd& t_ortho,
                                        const SearchConfig& cfg) {
  cfg.validate();
  if (t_ortho.rows() != static_cast<Eigen::Index>(d1) * d2 ||
      t_ortho.cols() < 1)
    throw std::invalid_argument("search_product_pair: basis shape mismatch");

  auto objective = [&](const VectorXcd& x, const VectorXcd& y, VectorXcd* gx,
                       VectorXcd* gy) {
    VectorXcd u(static_cast<Eigen::Index>(d1) * d2);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j) u[i * d2 + j] = x[i] * y[j];
    const double un2 = u.squaredNorm();
    VectorXcd r = u - t_ortho * (t_ortho.adjoint() * u);
    const double f = r.squaredNorm() / un2;
    if (gx != nullptr) {
      VectorXcd gbar = (r - f * u) / un2;
      gx->setZero(d1);
      gy->setZero(d2);
      for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) {
          (*gx)[i] += gbar[i * d2 + j] * std::conj(y[j]);
          (*gy)[j] += gbar[i * d2 + j] * std::conj(x[i]);
        }
    }
    return f;
  };

  ProductSearchResult out;
  out.best_residual = std::numeric_limits<double>::infinity();
  VectorXcd best_x, best_y;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    SplitMix rng(cfg.seed, 0x50524f44ULL + restart);
    VectorXcd x(d1), y(d2);
    for (int i = 0; i < d1; ++i) x[i] = rng.next_complex_normal();
    for (int j = 0; j < d2; ++j) y[j] = rng.next_complex_normal();
    x.normalize();
    y.normalize();

    VectorXcd gx, gy;
    double f = objective(x, y, &gx, &gy);
    double step = cfg.step_init;
    const double f_stop = 1e-4 * cfg.tol_found * cfg.tol_found;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      const double g2 = gx.squaredNorm() + gy.squaredNorm();
      if (f < f_stop || g2 < 1e-32) break;
      bool accepted = false;
      while (step >= cfg.step_min) {
        VectorXcd xc = (x - step * gx).normalized();
        VectorXcd yc = (y - step * gy).normalized();
        VectorXcd gxc, gyc;
        double fc = objective(xc, yc, &gxc, &gyc);
        if (fc <= f - 1e-4 * step * g2) {
          x = std::move(xc);
          y = std::move(yc);
          gx = std::move(gxc);
          gy = std::move(gyc);
          f = fc;
          step *= cfg.step_grow;
          accepted = true;
          break;
        }
        step *= cfg.step_shrink;
      }
      if (!accepted) break;
    }
    ++out.restarts_used;
    if (f < out.best_residual) {
      out.best_residual = f;
      best_x = x;
      best_y = y;
    }
    if (out.best_residual < cfg.tol_found) break;
  }

  if (out.best_residual < cfg.tol_found) {
    out.found = true;
    Vec<Cx> xv(best_x.data(), best_x.data() + d1);
    Vec<Cx> yv(best_y.data(), best_y.data() + d2);
    out.witness = {std::move(xv), std::move(yv)};
  }
  return out;
}

}  // namespace fupb
