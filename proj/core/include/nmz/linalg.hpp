#pragma once

#include <optional>
#include <vector>

#include "nmz/types.hpp"

// Small exact dense linear algebra over Z and Q. Sizes here are tiny
// (dimension <= 8, a few dozen rows), so everything is plain Gaussian
// elimination on mpq/mpz without any pivoting strategy beyond "nonzero".
namespace nmz::linalg {

Int dot(const IntVec& a, const IntVec& b);
Int dot(const IntVec& a, const Exponent& b);

IntVec to_int_vec(const Exponent& e);

/// Divides by the gcd of the entries (no-op on the zero vector).
void make_primitive(IntVec& v);
bool is_zero(const IntVec& v);

std::size_t rank(const std::vector<IntVec>& rows);

/// Z-basis of {x in Z^ncols : r . x = 0 for every row r}.
/// Computed by unimodular column reduction, so the result is a basis of the
/// lattice and not only of the rational kernel.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t ncols);

/// Z-basis of span(vectors) intersected with Z^dim (the saturated lattice).
std::vector<IntVec> saturated_basis(const std::vector<IntVec>& vectors, std::size_t dim);

/// Coordinates c with sum_j c_j basis[j] = v, or nullopt if v is not in the span.
/// `basis` must be linearly independent.
std::optional<std::vector<Rat>> coordinates(const std::vector<IntVec>& basis, const IntVec& v);

/// Some rational solution x of rows . x = rhs (free variables set to zero),
/// or nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> solve(const std::vector<IntVec>& rows, const std::vector<Rat>& rhs, std::size_t ncols);

/// Smallest positive multiple of a rational vector that is integral and primitive.
IntVec primitive_integer_multiple(const std::vector<Rat>& v);

/// Determinant of a square rational matrix.
Rat determinant(std::vector<std::vector<Rat>> m);

/// Inverse of a square rational matrix; throws DomainError if singular.
std::vector<std::vector<Rat>> inverse(std::vector<std::vector<Rat>> m);

}  // namespace nmz::linalg
