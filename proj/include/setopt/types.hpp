#ifndef SETOPT_TYPES_HPP
#define SETOPT_TYPES_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace setopt {

using Vec = std::vector<double>;

/// Extended real: finite, +inf or -inf (IEEE infinities).
using ScalarValue = double;

/// Sorted indices into a DomainGrid.
using GridSet = std::vector<std::size_t>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Bad input: malformed documents, violated preconditions, dimension mismatches.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computation routes that must agree did not. Signals a tolerance
/// misconfiguration or a bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

void require_dim(std::span<const double> v, std::size_t expected, const char* what);

/// k-th of n evenly spaced values on [lo, hi]; endpoints exact, and correctly
/// rounded whenever lo * (n-1-k) + hi * k is exact (e.g. integer bounds).
inline double lattice_point(double lo, double hi, std::size_t k, std::size_t n) {
  if (n == 1) return lo;
  if (k + 1 == n) return hi;
  const double d = static_cast<double>(n - 1);
  return (lo * (d - static_cast<double>(k)) + hi * static_cast<double>(k)) / d;
}

}  // namespace setopt

#endif
