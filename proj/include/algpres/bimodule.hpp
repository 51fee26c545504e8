#pragma once

#include "algpres/fdalgebra.hpp"

#include <optional>
#include <random>

namespace algpres {

/// A finite-dimensional left_algebra-right_algebra bimodule. left_action[a]
/// is the matrix of m -> x_a * m, right_action[b] that of m -> m * y_b.
struct BimoduleData {
    FDAlgebra left_algebra;
    FDAlgebra right_algebra;
    std::size_t dim = 0;
    std::vector<Matrix> left_action;
    std::vector<Matrix> right_action;
    /// Radicals of the acting algebras when known (zero for simple ones);
    /// computed on demand otherwise.
    std::optional<SubspaceBasis> left_radical;
    std::optional<SubspaceBasis> right_radical;
};

/// First violated module axiom, described, or nullopt.
std::optional<std::string> module_failure(const BimoduleData& m);

/// Matrices of the enveloping algebra left ⊗ right^op acting on m, indexed
/// like tensor_with_opposite: (x_a ⊗ y_b) . v = x_a * v * y_b.
std::vector<Matrix> enveloping_action(const BimoduleData& m);

/// Smallest submodule containing the given vectors.
SubspaceBasis generated_submodule(const std::vector<Matrix>& action, const SubspaceBasis& start,
                                  const std::vector<Vec>& gens);

struct RankResult {
    std::size_t rank = 0;
    std::vector<Vec> generators;
    bool exhaustive = false;               ///< every vector of the top was tried at each step
    std::vector<std::size_t> seed_ranks;   ///< rank found per retry seed
    bool generators_verified = false;      ///< the generators span m as a bimodule
};

/// Minimal number of bimodule generators. The rank is computed on
/// m / rad(E) m (E the enveloping algebra) by greedily adding the candidate
/// with the largest cyclic submodule. Over finite fields with at most
/// `exhaustive_limit` vectors every vector is a candidate; otherwise the
/// candidates are the coordinate vectors and 64 seeded random combinations,
/// retried with 8 seeds. Throws NotAModule.
RankResult bimodule_min_generators(const BimoduleData& m, std::uint64_t seed = 0,
                                   std::uint64_t exhaustive_limit = 4096);

/// Pseudo-random field element for candidate generation.
Scalar random_coefficient(FieldRef f, std::mt19937_64& rng);

} // namespace algpres
