#ifndef ISOZERO_LATTICE_HPP
#define ISOZERO_LATTICE_HPP

#include <gmpxx.h>

#include <vector>

namespace isozero {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>; // rows

// LLL-reduce the rows of basis in place (delta = 99/100).
// Rows must be linearly independent.
void lll_reduce(ZMat& basis);

// Basis of the saturated kernel lattice { x in Z^n : A x = 0 } for an
// integer matrix A (rows x cols). The result is a basis of the full
// kernel as a Z-module (not merely a finite-index sublattice).
ZMat integer_kernel(const ZMat& A);

// Find an integer relation (n_0..n_{k-1}) with sum n_i * x_i ~ 0, given
// fixed-point approximations x_i scaled by 2^scale_bits (real, imag parts).
// Returns empty when LLL finds nothing convincingly short.
ZVec integer_relation(const std::vector<std::pair<mpz_class, mpz_class>>& xs_fixed);

} // namespace isozero

#endif
