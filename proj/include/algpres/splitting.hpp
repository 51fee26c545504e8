#pragma once

#include "algpres/bimodule.hpp"
#include "algpres/report.hpp"

namespace algpres {

/// One simple component of A/r together with its lift B_i inside A:
/// lifted[k] is the preimage of quotient.basis[k] under the projection.
struct LiftedComponent {
    SimpleComponent quotient;
    std::vector<Vec> lifted;
};

/// A = B ⊕ r with B a subalgebra mapped isomorphically onto A/r.
struct SplittingData {
    FDAlgebra algebra;
    RadicalResult radical;
    QuotientResult quotient;           ///< A/r and the projection
    SubspaceBasis lifted_subalgebra;   ///< B
    Matrix section;                    ///< dim A x dim A/r, the inverse of the projection on B
    std::vector<LiftedComponent> components;
    std::vector<std::string> notes;

    std::size_t vertex_count() const { return components.size(); }
    /// Lift of an element of A/r (quotient coordinates).
    Vec lift(const Vec& q) const { return section.apply(q); }
    /// Lift of the identity of the i-th component.
    const Vec& lifted_unit(std::size_t i) const { return components[i].lifted[0]; }
};

struct SplittingInput {
    std::optional<SubspaceBasis> claimed_radical;
    /// Spanning vectors of B in A coordinates.
    std::optional<std::vector<Vec>> lifted_subalgebra;
    /// Central idempotents of A/r in quotient coordinates.
    std::optional<std::vector<Vec>> claimed_idempotents;
};

/// Computes or verifies the radical, decomposes A/r and lifts it into the
/// given complement B. Without B, r = 0 gives B = A; otherwise the span of
/// the coset representative coordinates is tried. Throws SplittingInvalid
/// or SplittingRequired.
SplittingData build_splitting(const FDAlgebra& alg, const SplittingInput& input = {});

/// Re-checks every splitting invariant; failures become report entries.
Report verify_splitting(const SplittingData& split);

/// The bimodule e_i (r^l / r^(l+1)) e_j over the components A_i, A_j of A/r.
struct GradedPiece {
    std::size_t source = 0, target = 0;
    BimoduleData module;
    std::vector<Vec> carrier;   ///< representatives in A of a basis of the piece
};

/// All pieces (i, j) in row-major order; their dimensions add up to
/// dim r^l - dim r^(l+1).
std::vector<GradedPiece> graded_radical_bimodule(const SplittingData& split, std::size_t l);

} // namespace algpres
