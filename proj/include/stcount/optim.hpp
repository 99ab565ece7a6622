#pragma once

#include <functional>
#include <string>

#include "stcount/common.hpp"

namespace stcount {

// Objective callback: returns f(x) and, when grad != nullptr, fills the
// analytic gradient.
using Objective = std::function<double(const VectorXd& x, VectorXd* grad)>;

struct OptimOptions {
  int max_iterations = 500;
  double grad_tol = 1e-6;       // convergence: gradient infinity norm
  double rel_f_tol = 1e-10;     // convergence: relative objective change
  double boundary_cutoff = 15;  // |x_j| beyond this marks a boundary solution
};

struct OptimResult {
  VectorXd x;
  double f = 0.0;
  VectorXd gradient;
  int iterations = 0;
  bool converged = false;
  bool boundary = false;  // converged by f-stagnation while drifting to a boundary
  std::string message;
};

// Dense BFGS maximization with backtracking line search. Throws FitError
// (carrying the best iterate) if max_iterations is exhausted.
OptimResult maximize_bfgs(const Objective& objective, const VectorXd& x0,
                          const OptimOptions& options = {});

// Central finite-difference gradient of f (for verification and tests).
VectorXd finite_difference_gradient(const std::function<double(const VectorXd&)>& f,
                                    const VectorXd& x, double step = 1e-6);

// Hessian by central differences of the analytic gradient, symmetrized.
MatrixXd finite_difference_hessian(const Objective& objective, const VectorXd& x,
                                   double step = 1e-5);

}  // namespace stcount
