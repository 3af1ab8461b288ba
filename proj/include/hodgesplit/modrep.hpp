#pragma once

/**
 * @file modrep.hpp
 * @brief Modules over k[Z/q] for q a power of char k, and Sylow averaging.
 *
 * A k[Z/q]-module is a unipotent matrix sigma; its isomorphism type is the
 * multiset of Jordan block sizes, read off from the ranks of (sigma - 1)^j.
 * A short exact sequence 0 -> A -> B -> C -> 0 splits exactly when the block
 * multiset of B is the union of those of A and C.
 *
 * Additivity of fixed-point dimensions does not imply splitting once q >= 3:
 * in J_3 + J_1 (basis e1 -> e2 -> e3, f) the submodule A = <e2 + f, e3> is J_2,
 * B / A is J_2, the fixed dimensions are 2 = 1 + 1, yet J_3 + J_1 != J_2 + J_2.
 */

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hodgesplit/cohom.hpp"
#include "hodgesplit/linalg.hpp"

namespace hodgesplit::modrep {

using cohom::CyclicModule;
using gf::FieldCtx;
using linalg::Matrix;
using linalg::Vector;

struct BlockMultiset {
  /// Block sizes, largest first.
  std::vector<std::size_t> sizes;

  std::size_t total() const;
  std::string to_string() const;
  bool operator==(const BlockMultiset&) const = default;
};

/// Multiset union.
BlockMultiset operator+(const BlockMultiset& a, const BlockMultiset& b);

/// Throws PreconditionError unless sigma^q = 1 with q a power of the characteristic.
BlockMultiset block_decomposition(const CyclicModule& mod);

/// Direct sum of Jordan blocks J_i with the given sizes.
CyclicModule block_sum(const FieldCtx& ctx, const std::vector<std::size_t>& sizes, std::size_t order);

/// A subspace A of k^dim together with a complement made of coordinate vectors.
/// Coordinates on A are read at the echelon pivots; coordinates on B / A are
/// the entries at the remaining positions after reduction against A.
struct Subquotient {
  Matrix inclusion;   // dim x dim A
  Matrix projection;  // dim C x dim
  Matrix lift;        // dim x dim C, a linear (not equivariant) section of projection

  std::size_t dim_sub() const { return inclusion.cols(); }
  std::size_t dim_quotient() const { return projection.rows(); }
};

Subquotient subquotient(const FieldCtx& ctx, std::size_t dim, const std::vector<Vector>& spanning);
/// Whether rho maps the subspace into itself.
bool is_stable(const Subquotient& sq, const Matrix& rho);
/// Action on A.  Throws PreconditionError if A is not rho-stable.
Matrix restrict_to_sub(const Subquotient& sq, const Matrix& rho);
/// Action on B / A.  Throws PreconditionError if A is not rho-stable.
Matrix induce_on_quotient(const Subquotient& sq, const Matrix& rho);

struct ExactTriple {
  CyclicModule B;
  Subquotient sq;
  CyclicModule A;
  CyclicModule C;

  /// A is the span of `spanning`; throws PreconditionError if it is not sigma-stable.
  static ExactTriple make(const CyclicModule& B, const std::vector<Vector>& spanning);
};

/// blocks(B) == blocks(A) + blocks(C).
bool splits(const ExactTriple& t);
/// dim A^G + dim C^G == dim B^G.
bool invariants_additive(const ExactTriple& t);

/// Solves for s : C -> B with projection * s = 1 and rho_B[i] * s = s * rho_C[i] for
/// every i.  Independent of the block criterion; used to cross-check it.
std::optional<Matrix> equivariant_section(const std::vector<Matrix>& rho_B, const std::vector<Matrix>& rho_C,
                                          const Matrix& projection);

/// Random block sum of order q and dimension at most max_dim, conjugated by a random
/// invertible matrix.  A is spanned by r random vectors (1 <= r <= dim) closed under
/// N = sigma - 1, hence under sigma.
ExactTriple random_exact_triple(const FieldCtx& ctx, std::size_t q, std::size_t max_dim, std::mt19937_64& rng);

Matrix random_invertible(const FieldCtx& ctx, std::size_t n, std::mt19937_64& rng);

/// A finite group given by its multiplication table; element 0 need not be the identity.
struct FiniteGroup {
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;

  std::size_t order() const { return mul.size(); }
  std::size_t inverse(std::size_t g) const;
  /// Throws PreconditionError unless the table is a group with the given identity.
  void validate() const;
};

/// Representation of a finite group: one matrix per element.
using Representation = std::vector<Matrix>;

/// Throws PreconditionError unless rho(g h) = rho(g) rho(h) for all g, h.
void check_representation(const FiniteGroup& G, const Representation& rho);

/// Right coset representatives of P in G, smallest element index first.
std::vector<std::size_t> right_coset_representatives(const FiniteGroup& G, const std::vector<std::size_t>& P);

/// Averages a P-equivariant section of projection : B -> C over right coset
/// representatives g_i of P in G:
///
///     s~ = (1/m) sum_i rho_B(g_i)^{-1} s rho_C(g_i),   m = [G : P].
///
/// Throws PreconditionError if m vanishes in the field, if P is not a subgroup or
/// if s is not a P-equivariant section; throws InconsistencyError if the result
/// fails the G-equivariance or section check.
Matrix average_section(const FiniteGroup& G, const std::vector<std::size_t>& P, const Matrix& section,
                       const Representation& rho_B, const Representation& rho_C, const Matrix& projection);

}  // namespace hodgesplit::modrep
