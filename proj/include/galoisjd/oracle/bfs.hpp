#pragma once

// Brute-force matrix groups: closure by breadth-first search over generator
// products, and the exponent as the lcm of element orders.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galoisjd/combinat.hpp"
#include "galoisjd/error.hpp"
#include "galoisjd/expo.hpp"
#include "galoisjd/ffield.hpp"

namespace galoisjd::oracle {

inline constexpr std::uint64_t kBfsMaxOrder = 1'000'000;

/// Row-major dim x dim matrix of F_q element codes.
using Matrix = std::vector<std::uint32_t>;

struct MatrixGroup {
  std::string name;
  unsigned dim = 0;
  std::shared_ptr<const ffield::FiniteField> field;
  std::vector<Matrix> gens;
  /// Known order; bfs_closure raises OrderMismatch when the closure disagrees.
  std::optional<BigInt> expected_order;

  /// Transvections with F_p-basis entries plus diag(g, 1, ..., 1).
  static MatrixGroup general_linear(unsigned n, std::uint64_t q);
  /// Symplectic transvections for J = [[0, I], [-I, 0]].
  static MatrixGroup symplectic(unsigned m, std::uint64_t q);
  /// SO_{2m+1}(q) for Q(x) = x_0^2 + sum x_i x_{m+i}, generated by products
  /// of two reflections. q odd.
  static MatrixGroup orthogonal_odd(unsigned m, std::uint64_t q);
  /// The spinor-norm kernel inside orthogonal_odd(m, q), index 2.
  static MatrixGroup omega_odd(unsigned m, std::uint64_t q);
  static MatrixGroup builtin(const expo::GroupSpec& spec);
};

Matrix identity_matrix(const ffield::FiniteField& F, unsigned dim);
Matrix mat_mul(const ffield::FiniteField& F, unsigned dim, const Matrix& a, const Matrix& b);

/// All elements, identity first. SizeGuard if the expected order or the
/// running closure passes max_order; OrderMismatch if an expected order is
/// set and not met.
std::vector<Matrix> bfs_closure(const MatrixGroup& G, std::uint64_t max_order = kBfsMaxOrder);

/// Order of one element by repeated multiplication.
std::uint64_t element_order(const MatrixGroup& G, const Matrix& a);
/// lcm of element orders over a closure; serial reference and OpenMP sweep.
std::uint64_t exponent_of(const MatrixGroup& G, const std::vector<Matrix>& elements, Exec exec = Exec::Serial);
std::uint64_t bfs_exponent(const MatrixGroup& G, Exec exec = Exec::Serial, std::uint64_t max_order = kBfsMaxOrder);

}  // namespace galoisjd::oracle
