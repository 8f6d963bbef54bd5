#pragma once

// Finite-dimensional associative algebras over Q given by structure
// constants: closure of matrix images, trace-form radical, block data.

#include <optional>
#include <string>

#include "voa/linear.hpp"

namespace voa {

class AssocAlgebra {
 public:
  using Product = LinearCombination<std::size_t>;

  /// Verifies associativity on all basis triples (InvalidSpec otherwise).
  AssocAlgebra(std::size_t dim, std::vector<std::vector<Product>> mult);

  std::size_t dimension() const { return dim_; }
  const Product& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  Product multiply(const Product& x, const Product& y) const;
  /// Matrix of left multiplication by x in the basis (column j = x * b_j).
  Matrix left_matrix(const Product& x) const;
  Matrix right_matrix(const Product& x) const;
  /// Coordinates of the unit element, if one exists.
  std::optional<Product> unit() const;
  bool is_commutative() const;
  /// Basis of the center.
  std::vector<Product> center() const;

  /// Matrices realizing the basis, when built by close_image.
  std::vector<Matrix> realization;

 private:
  std::size_t dim_;
  std::vector<std::vector<Product>> mult_;
};

/// Orthogonal central idempotents summing to the unit, one per simple block,
/// when the center is split over Q and the algebra is semisimple.
std::optional<std::vector<AssocAlgebra::Product>> central_idempotents(const AssocAlgebra& A);

/// Smallest subalgebra of the matrix algebra containing the seeds.
AssocAlgebra close_image(const std::vector<Matrix>& seeds);

/// {x : tr(L_x L_y) = 0 for all y}.
SubspaceBasis<std::size_t> jacobson_radical(const AssocAlgebra& A);

/// True when x A and A x lie in the span for every basis element.
bool is_two_sided_ideal(const AssocAlgebra& A, const SubspaceBasis<std::size_t>& ideal);

/// sum over modules and levels m <= n of (dim W_i(m))^2.
Integer dimension_formula(const std::vector<std::vector<std::size_t>>& graded_dims, int n);

struct SemisimplicityReport {
  std::size_t dimension = 0;
  std::size_t radical_dimension = 0;
  std::vector<AssocAlgebra::Product> radical_basis;
  bool radical_is_ideal = false;
  bool commutative = false;
  std::size_t center_dimension = 0;
  /// Wedderburn block sizes, present only when the center splits over Q.
  std::optional<std::vector<std::size_t>> block_sizes;
  std::optional<std::size_t> expected_dimension;
  bool dimension_matches = true;
  bool semisimple() const { return radical_dimension == 0; }
  /// Wording is about the computed algebra only.
  std::string verdict() const;
};

SemisimplicityReport semisimplicity_report(const AssocAlgebra& A, std::optional<std::size_t> expected = std::nullopt);

}  // namespace voa
