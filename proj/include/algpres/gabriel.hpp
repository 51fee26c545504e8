#pragma once

#include "algpres/pathalg.hpp"
#include "algpres/quiver.hpp"

namespace algpres {

/// One element y_u of A per arrow u: i -> j, lying in B_i r B_j.
struct GeneratorAssignment {
    std::vector<Vec> arrows;
};

/// Image in A of a word: coefficients go through the lifted components,
/// arrows to their generators, and the factors multiply in word order.
/// `lifts[v][k]` is the lift of basis element k of the algebra at vertex v.
Vec evaluate_word(const FDAlgebra& target, const std::vector<std::vector<Vec>>& lifts, const GeneratorAssignment& gens,
                  const Quiver& quiver, const PathWord& w);

/// dim A x dim(path algebra) matrix of the evaluation map.
Matrix evaluation_matrix(const TruncatedPathAlgebra& path, const FDAlgebra& target,
                         const std::vector<std::vector<Vec>>& lifts, const GeneratorAssignment& gens);

struct Presentation {
    Flavor flavor = Flavor::Pseudo;
    std::size_t truncation = 1;
    std::size_t loewy_length = 1;
    VertexAlgebraFamily family;          ///< quiver plus the components of A/r
    std::vector<Relation> relations;     ///< in path-algebra word coordinates
    GeneratorAssignment generators;
    std::vector<std::vector<Vec>> lifts; ///< per vertex, lifted basis of its component in A
    FDAlgebra algebra;
    SubspaceBasis radical;               ///< of the algebra
    std::vector<std::size_t> ranks;      ///< row-major t_ij
    bool admissible = false;             ///< <rho> inside J^2
    Report report;
    std::vector<std::string> notes;

    const Quiver& quiver() const { return family.quiver; }
    /// Rebuilds the truncated path algebra the relations live in.
    TruncatedPathAlgebra path_algebra() const;
};

struct PresentationOptions {
    std::uint64_t seed = 0;
    /// Truncation to use instead of the default (Loewy length for pseudo,
    /// 2 for the square-zero pipeline); must not be smaller.
    std::optional<std::size_t> truncation;
};

/// A as a quotient of a truncated pseudo path algebra over its quiver.
/// Throws SplittingInvalid, NotSurjective or PreconditionFailed.
Presentation presentation_pseudo(const SplittingData& split, const PresentationOptions& opts = {});

/// A with r^2 = 0 as a quotient of a truncated generalized path algebra.
/// Throws RadicalNotSquareZero besides the pseudo errors.
Presentation presentation_generalized_2nilpotent(const SplittingData& split, const PresentationOptions& opts = {});

/// The six presentation checks. Never throws on a failed check.
Report verify_presentation(const Presentation& p);

/// An 8-dimensional algebra over F2(t) built from F = F2(t)(sqrt t) and a
/// twisted F-bimodule extension. It splits over its radical, yet no tensor
/// algebra over A/r on r/r^2 maps onto it.
FDAlgebra twisted_example_algebra();
Report twisted_example_suite();

} // namespace algpres
