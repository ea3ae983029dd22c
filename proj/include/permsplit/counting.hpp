#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permsplit {

// Arbitrary-precision non-negative count. Factorials, binomial coefficients
// and set sizes are kept exact; asymptotic comparisons happen in log space.
using ExactCount = boost::multiprecision::cpp_int;

// Natural logarithm of a positive count.
struct LogMagnitude {
  double value = 0.0;
};

ExactCount factorial(int n);
ExactCount binomial(int n, int k);

// (n)_k = n * (n-1) * ... * (n-k+1)
ExactCount falling_factorial(int n, int k);

// log(x!) = lgamma(x+1) for real x >= 0.
LogMagnitude log_factorial(double x);

// Positive real solution of x! = sqrt(n!), located by bisection on [n/2, n].
// log x! is increasing there and the endpoints bracket the target, since
// (n/2)!^2 <= n!. Tolerance 1e-9 on the log scale; convergence failure is
// reported, never returned silently.
double solve_half_factorial(int n);

}  // namespace permsplit
