#pragma once

#include <stdexcept>
#include <string>

namespace kak {

// A matrix file could not be parsed; carries human-readable diagnostics.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Unpivoted factorization hit a (near-)zero pivot.
class PivotBreakdown : public std::runtime_error {
 public:
  PivotBreakdown(int index, double magnitude)
      : std::runtime_error("pivot " + std::to_string(index) + " has magnitude " +
                           std::to_string(magnitude) + "; factorization without pivoting breaks down"),
        index(index),
        magnitude(magnitude) {}
  int index;
  double magnitude;
};

// Indefinite eigenstructure does not match the requested (p, q) signature.
class SignatureMismatch : public std::runtime_error {
 public:
  SignatureMismatch(int expected_positive, int found_positive)
      : std::runtime_error("expected " + std::to_string(expected_positive) +
                           " positive eigenvalues, found " + std::to_string(found_positive)),
        expected_positive(expected_positive),
        found_positive(found_positive) {}
  int expected_positive;
  int found_positive;
};

// The requested cell has no implemented factorization algorithm (composition,
// sampling, verification and folding are still available for it).
class UnsupportedDecomposition : public std::runtime_error {
 public:
  explicit UnsupportedDecomposition(const std::string& cell)
      : std::runtime_error("no decomposition routine for cell " + cell) {}
};

// The input is numerically singular where an invertible matrix is required.
class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(double smallest, double largest)
      : std::runtime_error("matrix is numerically singular (sigma_min = " +
                           std::to_string(smallest) + ", sigma_max = " +
                           std::to_string(largest) + ")"),
        smallest(smallest),
        largest(largest) {}
  double smallest;
  double largest;
};

// The input fails the defining relation of the group the routine expects.
class NotInGroup : public std::runtime_error {
 public:
  NotInGroup(const std::string& group, double residual)
      : std::runtime_error("input is not in " + group +
                           " (defining-relation residual " + std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

// Block sizes passed to a partitioned factorization are inconsistent.
class BadPartition : public std::runtime_error {
 public:
  explicit BadPartition(const std::string& what) : std::runtime_error(what) {}
};

// The input is not (complex) symmetric where symmetry is required.
class NotSymmetric : public std::runtime_error {
 public:
  explicit NotSymmetric(double residual)
      : std::runtime_error("matrix is not symmetric (residual " +
                           std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

// The input is not symmetric/Hermitian positive definite.
class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kak
