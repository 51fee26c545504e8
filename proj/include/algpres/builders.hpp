#pragma once

#include "algpres/fdalgebra.hpp"

#include <functional>

// Stock algebras used by the corpus, the tests and the CLI.
namespace algpres::build {

/// Span of the matrix units E_ij of M_n(f) with allowed(i, j); the pattern
/// must be closed under composition and contain the diagonal.
FDAlgebra matrix_pattern(FieldRef f, std::size_t n, const std::function<bool(std::size_t, std::size_t)>& allowed);
FDAlgebra matrix_algebra(FieldRef f, std::size_t n);
FDAlgebra upper_triangular(FieldRef f, std::size_t n);
/// {[[a, m], [0, b]] : a, b, m in M_n(f)} inside M_2n(f).
FDAlgebra block_triangular(FieldRef f, std::size_t n);
/// f[x]/(modulus) on the basis 1, x, ..., x^(d-1); modulus monic.
FDAlgebra polynomial_quotient(FieldRef f, const Poly& modulus, const std::string& var = "x");
FDAlgebra direct_sum(const FDAlgebra& a, const FDAlgebra& b);
/// The field f itself as a one-dimensional algebra.
FDAlgebra ground(FieldRef f, const std::string& label = "1");

} // namespace algpres::build
