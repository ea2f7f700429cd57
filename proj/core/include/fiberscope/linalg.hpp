#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiberscope/matrix.hpp"

namespace fiberscope::linalg {

/// U * A * V = D with U, V unimodular and D diagonal, diagonal entries
/// nonnegative, forming a divisibility chain with zeros last.
/// invariant_factors lists the positive diagonal entries in order.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::vector<Int> invariant_factors;
};

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank x Z/t_1 x ... x Z/t_k with t_1 | t_2 | ... | t_k, t_i > 1.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

/// Smith normal form. Deterministic: pivots are chosen by smallest nonzero
/// absolute value, ties broken by lowest (row, col) index, so the same input
/// always yields the same decomposition.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Invariants of Z^rows / (column span of A).
AbelianInvariants cokernel_invariants(const IntegerMatrix& a);

/// Rank of A over Q by fraction-free (Bareiss) elimination.
std::size_t rank_q(const IntegerMatrix& a);

/// Determinant of a square matrix by fraction-free elimination.
Int determinant(const IntegerMatrix& a);

/// dim of the coinvariants V / span{(A_i - I)v}: n minus the rank of the
/// horizontally stacked blocks (A_i - I). All matrices must be square of
/// equal size.
std::size_t coinvariant_rank(const std::vector<IntegerMatrix>& mats);

/// dim of the common fixed subspace of the A_i: n minus the rank of the
/// vertically stacked blocks (A_i - I).
std::size_t invariant_rank(const std::vector<IntegerMatrix>& mats);

struct MatrixOrder {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  Int order = 0;              // set when finite
  std::string certificate;    // set when infinite: which certificate applied
};

/// Multiplicative order of an integer matrix.
///
/// Finite(k) iff A^k = I with k <= cap minimal. Infinite is certified either
/// by a characteristic-polynomial factor that is not cyclotomic of degree
/// <= n (an eigenvalue off the roots of unity) or by a non-identity unipotent
/// power (finite order in GL(n,Z) forces semisimplicity with cyclotomic
/// factors). Unknown only when the true order exceeds cap.
MatrixOrder matrix_order(const IntegerMatrix& a, const Int& cap);

/// Characteristic polynomial coefficients, low degree first, monic.
/// Exposed for the orbit-certificate machinery.
std::vector<Int> characteristic_polynomial(const IntegerMatrix& a);

/// Decide whether a monic integer polynomial (low degree first) has only
/// cyclotomic irreducible factors; on success also reports the lcm of the
/// cyclotomic orders present. Used for infinite-order certificates.
struct CyclotomicSplit {
  bool all_cyclotomic = false;
  Int order_lcm = 1;                 // lcm of d with Phi_d dividing p
  std::vector<Int> residual;         // non-cyclotomic part (monic), or {1}
};
CyclotomicSplit split_cyclotomic(const std::vector<Int>& poly);

}  // namespace fiberscope::linalg
