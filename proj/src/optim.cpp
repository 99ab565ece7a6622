#include "stcount/optim.hpp"

#include <cmath>

namespace stcount {

OptimResult maximize_bfgs(const Objective& objective, const VectorXd& x0,
                          const OptimOptions& options) {
  const int n = static_cast<int>(x0.size());
  VectorXd x = x0;
  VectorXd grad(n);
  double f = objective(x, &grad);
  if (!std::isfinite(f)) throw DataError("objective not finite at the starting point");

  MatrixXd hinv = MatrixXd::Identity(n, n);
  VectorXd best_x = x;
  double best_f = f;

  OptimResult result;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (grad.lpNorm<Eigen::Infinity>() < options.grad_tol) {
      result.converged = true;
      result.message = "gradient norm below tolerance";
      break;
    }

    VectorXd direction = hinv * grad;  // ascent direction
    if (direction.dot(grad) <= 0.0) {
      hinv.setIdentity();
      direction = grad;
    }

    // Backtracking Armijo line search on the ascent direction.
    const double slope = grad.dot(direction);
    double step = 1.0;
    double f_new = -std::numeric_limits<double>::infinity();
    VectorXd x_new;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_new = x + step * direction;
      VectorXd dummy;
      f_new = objective(x_new, nullptr);
      if (std::isfinite(f_new) && f_new >= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No ascent along this direction at representable step sizes.
      result.converged = true;
      result.message = "line search stalled";
      break;
    }

    VectorXd grad_new(n);
    objective(x_new, &grad_new);

    const VectorXd s = x_new - x;
    const VectorXd y = grad_new - grad;
    const double sy = s.dot(y);
    const double rel_change = std::abs(f_new - f) / (std::abs(f) + 1.0);

    x = x_new;
    f = f_new;
    grad = grad_new;
    result.iterations = iter + 1;
    if (f > best_f) {
      best_f = f;
      best_x = x;
    }

    if (rel_change < options.rel_f_tol) {
      result.converged = true;
      result.message = "objective stagnated";
      break;
    }

    // BFGS inverse-Hessian update (skip on tiny curvature).
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const VectorXd hy = hinv * y;
      const double yhy = y.dot(hy);
      hinv += ((sy + yhy) / (sy * sy)) * (s * s.transpose()) -
              (hy * s.transpose() + s * hy.transpose()) / sy;
    }
  }

  result.x = x;
  result.f = f;
  result.gradient = grad;
  if (!result.converged)
    throw FitError("optimizer did not converge after " +
                       std::to_string(options.max_iterations) + " iterations (best value " +
                       std::to_string(best_f) + ")",
                   best_x, best_f);
  // A parameter escaping to +-inf on the log scale is a boundary solution,
  // not an interior optimum.
  result.boundary = x.lpNorm<Eigen::Infinity>() > options.boundary_cutoff;
  return result;
}

VectorXd finite_difference_gradient(const std::function<double(const VectorXd&)>& f,
                                    const VectorXd& x, double step) {
  VectorXd grad(x.size());
  VectorXd xp = x;
  for (int i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::abs(x(i)));
    xp(i) = x(i) + h;
    const double fp = f(xp);
    xp(i) = x(i) - h;
    const double fm = f(xp);
    xp(i) = x(i);
    grad(i) = (fp - fm) / (2.0 * h);
  }
  return grad;
}

MatrixXd finite_difference_hessian(const Objective& objective, const VectorXd& x, double step) {
  const int n = static_cast<int>(x.size());
  MatrixXd hess(n, n);
  VectorXd xp = x;
  VectorXd gp(n), gm(n);
  for (int j = 0; j < n; ++j) {
    const double h = step * std::max(1.0, std::abs(x(j)));
    xp(j) = x(j) + h;
    objective(xp, &gp);
    xp(j) = x(j) - h;
    objective(xp, &gm);
    xp(j) = x(j);
    hess.col(j) = (gp - gm) / (2.0 * h);
  }
  return 0.5 * (hess + hess.transpose());
}

}  // namespace stcount
