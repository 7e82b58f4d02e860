#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace nct {

// Arbitrary-precision integer matrices for the lattice decision procedures.
// Intermediate coefficient growth during elimination is real even for small
// dimensions, so everything here runs over cpp_int.
using BigInt = boost::multiprecision::cpp_int;
using ZMatrix = std::vector<std::vector<BigInt>>;

ZMatrix z_identity(std::size_t n);
ZMatrix z_multiply(const ZMatrix& A, const ZMatrix& B);
bool z_equal(const ZMatrix& A, const ZMatrix& B);

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithDecomposition {
    ZMatrix D;
    ZMatrix U;
    ZMatrix V;
};

SmithDecomposition smith_normal_form(const ZMatrix& A);

// Basis of the right kernel lattice {m in Z^cols : A m = 0}, as primitive
// columns (content 1, first nonzero entry positive). An empty input matrix
// (zero rows) has the full lattice as kernel.
std::vector<std::vector<BigInt>> integer_kernel(const ZMatrix& A, std::size_t cols);

}  // namespace nct
