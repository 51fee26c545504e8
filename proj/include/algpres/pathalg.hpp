#pragma once

#include "algpres/quiver.hpp"
#include "algpres/report.hpp"

#include <map>
#include <memory>

namespace algpres {

/// A quiver with an algebra at every vertex. Each algebra must list its
/// identity as basis vector 0.
struct VertexAlgebraFamily {
    Quiver quiver;
    std::vector<FDAlgebra> algebras;
    std::vector<Simplicity> simplicity;

    FieldRef field() const;
    /// Throws InvalidFamily when the shapes or fields disagree.
    void validate() const;
    /// Every vertex carries the ground field.
    static VertexAlgebraFamily scalar(const Quiver& q, FieldRef f);
};

enum class Flavor { Pseudo, Generalized };
std::string to_string(Flavor f);

/// A basis word of a truncated path algebra along a path of n arrows through
/// the vertices v_0, ..., v_n.
///
/// Generalized words carry a vertex-algebra basis index at every junction
/// (junction[i] at v_i), so c_0 b_1 c_1 ... b_n c_n.
///
/// Pseudo words carry a coefficient on each side of every arrow
/// (left[i], right[i]) and an optional standalone coefficient at every
/// junction; junction[i] = 0 means none, since a standalone identity is
/// absorbed. A length-0 word is a single basis element, junction[0] = k.
struct PathWord {
    std::uint32_t start = 0;
    std::vector<std::uint32_t> arrows;
    std::vector<std::uint32_t> junction;
    std::vector<std::uint32_t> left, right;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const PathWord&) const = default;
    auto operator<=>(const PathWord&) const = default;
};

/// k(quiver, family) or PSE(quiver, family) modulo words with at least
/// `truncation` arrows, as an explicit finite-dimensional algebra.
class TruncatedPathAlgebra {
public:
    /// Throws TruncationTooLargeForMemory when the word basis would exceed
    /// the cap (ALGPRES_MAX_BASIS, default 3000). The product table is
    /// quadratic in the basis size, so the cap bounds memory.
    static TruncatedPathAlgebra build(Flavor flavor, VertexAlgebraFamily family, std::size_t truncation);

    Flavor flavor() const { return flavor_; }
    const VertexAlgebraFamily& family() const { return *family_; }
    std::size_t truncation() const { return truncation_; }
    std::size_t dim() const { return words_.size(); }
    const std::vector<PathWord>& words() const { return words_; }
    const PathWord& word(std::size_t i) const { return words_[i]; }
    std::optional<std::size_t> index_of(const PathWord& w) const;
    const FDAlgebra& algebra() const { return algebra_; }

    std::size_t start_vertex(std::size_t i) const { return words_[i].start; }
    std::size_t end_vertex(std::size_t i) const;
    std::size_t arrow_count(std::size_t i) const { return words_[i].length(); }
    /// Number of factors in the word (arrows plus standalone coefficients).
    std::size_t slot_count(std::size_t i) const;

    /// Identity of the algebra at vertex v, as an element.
    Vec vertex_unit(std::size_t v) const;
    /// Words with at least t arrows span J^t.
    SubspaceBasis arrow_ideal_power(std::size_t t) const;
    /// Words that generate the algebra: length 0, and length 1 without
    /// standalone coefficients (with identity coefficients when generalized).
    const std::vector<std::size_t>& generator_indices() const { return generators_; }

    /// Product of two basis words in word coordinates.
    SparseVec multiply_words(std::size_t a, std::size_t b) const;
    /// Product of two generic words (no truncation index needed).
    std::map<PathWord, Scalar> multiply_words(const PathWord& a, const PathWord& b) const;

    std::string render_word(std::size_t i) const;
    std::string render(const Vec& x) const;

private:
    TruncatedPathAlgebra() = default;

    Flavor flavor_ = Flavor::Pseudo;
    std::shared_ptr<const VertexAlgebraFamily> family_;
    std::size_t truncation_ = 1;
    std::vector<PathWord> words_;
    std::map<PathWord, std::size_t> index_;
    std::vector<std::size_t> generators_;
    FDAlgebra algebra_;
};

/// Maximum basis size for truncated path algebras.
std::size_t basis_cap();

/// Collapses each pseudo word into the generalized algebra by multiplying
/// standalone coefficients into the neighbouring arrow coefficients. Returns
/// the dim(generalized) x dim(pseudo) matrix. Throws FamilyMismatch.
Matrix iota(const TruncatedPathAlgebra& pseudo, const TruncatedPathAlgebra& generalized);

/// Two-sided ideal generated by the given elements.
SubspaceBasis ideal_generated(const TruncatedPathAlgebra& alg, const std::vector<Vec>& gens);
/// Grows an ideal by more elements.
void extend_generated(const TruncatedPathAlgebra& alg, SubspaceBasis& ideal, const std::vector<Vec>& gens);

/// An element whose words all start at `start` and end at `end`.
struct Relation {
    Vec element;
    std::size_t start = 0;
    std::size_t end = 0;
};

/// The nonzero pieces e_i x e_j, in (i, j) order.
std::vector<Relation> split_into_relations(const TruncatedPathAlgebra& alg, const Vec& x);

/// Builds alg / <rho>, checks that its radical is the image of J. Throws
/// PreconditionFailed when a vertex algebra is not flagged simple or J^s is
/// not inside <rho> for the given s (0 means the truncation itself).
Report radical_of_quotient_check(const TruncatedPathAlgebra& alg, const std::vector<Relation>& rho,
                                 std::size_t s = 0);

} // namespace algpres
