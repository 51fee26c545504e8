#pragma once

#include "algpres/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace algpres {

/// A finite-dimensional associative unital algebra given by structure
/// constants: x_i * x_j = sum_k c_ijk x_k, stored sparsely per (i, j).
class FDAlgebra {
public:
    FDAlgebra() = default;
    /// table[i * dim + j] holds the coordinates of x_i * x_j. Throws NotUnital
    /// if `one` is not a two-sided identity.
    FDAlgebra(FieldRef f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec one);
    static FDAlgebra from_products(FieldRef f, std::vector<std::string> labels,
                                   const std::function<Vec(std::size_t, std::size_t)>& product, Vec one);

    FieldRef field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& one() const { return one_; }
    const SparseVec& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vec basis_vector(std::size_t i) const { return unit_vec(field_, dim_, i); }

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec power(const Vec& a, std::uint64_t e) const;
    /// Matrix of x -> a*x (column j is a*x_j).
    Matrix left_multiplication(const Vec& a) const;
    /// Matrix of x -> x*a.
    Matrix right_multiplication(const Vec& a) const;
    Scalar left_trace(const Vec& a) const;

    /// First failing (i, j, k) triple, described, or nullopt.
    std::optional<std::string> associativity_failure() const;
    bool is_commutative() const;
    bool operator==(const FDAlgebra& other) const;

private:
    FieldRef field_ = nullptr;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> table_;
    Vec one_;
};

/// The algebra structure on span(basis) inherited from `alg`; products must
/// stay inside the span (NotClosed otherwise). `one` is given in the new basis.
FDAlgebra restrict_to(const FDAlgebra& alg, const std::vector<Vec>& basis, std::vector<std::string> labels,
                      const Vec& one);

/// span{u*v : u in a, v in b}
SubspaceBasis product_space(const FDAlgebra& alg, const SubspaceBasis& a, const SubspaceBasis& b);
/// Failure description when s is not a two-sided ideal. It is enough to test
/// multipliers that generate the algebra (all basis elements when empty).
std::optional<std::string> ideal_failure(const FDAlgebra& alg, const SubspaceBasis& s,
                                         const std::vector<std::size_t>& multipliers = {});
/// Smallest two-sided ideal containing the given vectors. The ideal is closed
/// under multiplication by the listed basis elements, which must generate the
/// algebra (all basis elements when empty).
SubspaceBasis ideal_closure(const FDAlgebra& alg, const std::vector<Vec>& gens,
                            const std::vector<std::size_t>& multipliers = {});
/// Grows an existing ideal by more generators.
void extend_ideal(const FDAlgebra& alg, SubspaceBasis& ideal, const std::vector<Vec>& gens,
                  const std::vector<std::size_t>& multipliers = {});

/// [I, I^2, I^3, ..., 0] up to the first zero power (I^0 is not included).
std::vector<SubspaceBasis> ideal_powers(const FDAlgebra& alg, const SubspaceBasis& ideal,
                                        std::size_t max_steps = 1000);

struct RadicalResult {
    SubspaceBasis basis;
    std::string method;                ///< "trace-form", "frobenius", "claimed", ...
    std::vector<std::string> notes;    ///< facts taken on trust, if any
};

/// The Jacobson radical, computed by the trace form (char 0 or char > dim),
/// by the Frobenius kernel for commutative algebras over finite fields and
/// function fields over them, or by verifying a claimed basis.
RadicalResult radical(const FDAlgebra& alg, const std::optional<SubspaceBasis>& claimed = std::nullopt);

enum class Certainty { Proven, Assumed };

struct SemisimplicityResult {
    bool semisimple = false;
    Certainty certainty = Certainty::Proven;
    std::string reason;
};
SemisimplicityResult semisimplicity(const FDAlgebra& alg);

/// Least m with r^m = 0.
std::size_t loewy_length(const FDAlgebra& alg, const SubspaceBasis& rad);

struct QuotientResult {
    FDAlgebra algebra;
    Matrix projection;               ///< dim(quotient) x dim(alg)
    std::vector<std::size_t> reps;   ///< coordinates of alg kept as coset representatives
};
/// Throws NotAnIdeal; `multipliers` as for ideal_failure.
QuotientResult quotient_algebra(const FDAlgebra& alg, const SubspaceBasis& ideal,
                                const std::vector<std::size_t>& multipliers = {});

SubspaceBasis center(const FDAlgebra& alg);

/// Minimal polynomial of a over the field, computed in the unital subalgebra
/// whose identity is `unit` (monic, lowest degree first).
Poly minimal_polynomial(const FDAlgebra& alg, const Vec& a, const Vec& unit);

enum class Simplicity { Verified, Heuristic, Asserted };
std::string to_string(Simplicity s);

struct SimpleComponent {
    Vec idempotent;            ///< central primitive idempotent in alg
    std::vector<Vec> basis;    ///< basis of e*alg in alg coordinates; basis[0] = idempotent
    FDAlgebra algebra;         ///< structure constants in that basis
    Simplicity simplicity = Simplicity::Verified;
    std::string note;
};

/// Splits a semisimple algebra into simple components via minimal polynomials
/// of central elements. Falls back to (and verifies) claimed idempotents.
std::vector<SimpleComponent> semisimple_decompose(
    const FDAlgebra& alg, const std::optional<std::vector<Vec>>& claimed_idempotents = std::nullopt);

struct SimplicityReport {
    bool simple = false;
    Simplicity status = Simplicity::Verified;
    std::string note;
};
/// Simplicity test on an algebra already known to be semisimple.
SimplicityReport simplicity_of(const FDAlgebra& alg);

/// Structure constants of a ⊗ b^op on the basis x_i ⊗ y_j (index i*dim(b)+j).
FDAlgebra tensor_with_opposite(const FDAlgebra& a, const FDAlgebra& b);

/// Radical of a ⊗ b^op from known radicals of the factors.
SubspaceBasis tensor_radical(const FDAlgebra& a, const SubspaceBasis& rad_a, const FDAlgebra& b,
                             const SubspaceBasis& rad_b);

} // namespace algpres
