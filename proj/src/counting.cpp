#include "permsplit/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permsplit {

ExactCount factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  ExactCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

ExactCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactCount falling_factorial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
  ExactCount r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

LogMagnitude log_factorial(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("log_factorial: negative argument");
  return LogMagnitude{std::lgamma(x + 1.0)};
}

double solve_half_factorial(int n) {
  if (n < 1) throw std::invalid_argument("solve_half_factorial: n must be >= 1");
  const double target = log_factorial(static_cast<double>(n)).value / 2.0;
  double lo = n / 2.0;
  double hi = static_cast<double>(n);
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (log_factorial(mid).value < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (std::abs(log_factorial(root).value - target) > 1e-9 * std::max(1.0, target))
    throw std::logic_error("solve_half_factorial: bisection did not converge");
  return root;
}

}  // namespace permsplit
