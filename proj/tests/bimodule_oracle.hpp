#pragma once

// Random bimodules over small prime fields and a brute-force rank oracle,
// shared by the unit tests and the acceptance suite.

#include "algpres/bimodule.hpp"
#include "algpres/builders.hpp"
#include "support.hpp"

#include <set>

namespace testsupport {

inline std::string subspace_key(const SubspaceBasis& s) {
    std::string key;
    for (const auto& row : s.rows()) {
        for (const auto& e : row) key += std::to_string(e.index) + ":" + e.value.str() + ",";
        key += ";";
    }
    return key;
}

// Closure of a subspace under the matrices, by repeated application.
inline SubspaceBasis oracle_closure(const std::vector<Matrix>& acts, SubspaceBasis s) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& v : s.vectors())
            for (const auto& a : acts)
                if (s.insert(a.apply(v))) grew = true;
    }
    return s;
}

// Least k such that some k vectors generate m: breadth-first search over the
// submodules generated by k vectors.
inline std::size_t oracle_rank(const BimoduleData& m) {
    FieldRef f = m.left_algebra.field();
    std::size_t n = m.dim;
    if (n == 0) return 0;
    std::vector<Matrix> acts;
    for (const auto& l : m.left_action) acts.push_back(l);
    for (const auto& r : m.right_action) acts.push_back(r);
    auto all = all_vectors(f, n);
    std::vector<SubspaceBasis> level{SubspaceBasis(f, n)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<SubspaceBasis> next;
        std::set<std::string> keys;
        for (const auto& sub : level) {
            std::set<std::string> tried;
            for (const auto& v : all) {
                Vec w = sub.reduce(v);
                if (is_zero_vec(w)) continue;
                std::size_t lead = 0;
                while (w[lead].is_zero()) ++lead;
                if (!w[lead].is_one()) continue;  // one vector per line
                std::string wk;
                for (const auto& x : w) wk += x.str() + ",";
                if (!tried.insert(wk).second) continue;
                SubspaceBasis grown = sub;
                grown.insert(w);
                grown = oracle_closure(acts, grown);
                if (grown.dim() == n) return k;
                if (keys.insert(subspace_key(grown)).second) next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return n;
}

// A small algebra with its radical, which small characteristic may hide
// from the trace form.
inline std::pair<FDAlgebra, SubspaceBasis> random_small_algebra(FieldRef f, std::mt19937_64& rng) {
    Poly sq{f->zero(), f->zero(), f->one()};
    switch (rng() % 5) {
    case 0: return {build::ground(f), SubspaceBasis(f, 1)};
    case 1: return {build::direct_sum(build::ground(f), build::ground(f)), SubspaceBasis(f, 2)};
    case 2: return {build::upper_triangular(f, 2), SubspaceBasis::span(f, 3, {unit_vec(f, 3, 1)})};
    case 3: return {build::polynomial_quotient(f, sq), SubspaceBasis::span(f, 2, {unit_vec(f, 2, 1)})};
    default: return {build::matrix_algebra(f, 2), SubspaceBasis(f, 4)};
    }
}

// A direct sum of random cyclic bimodules (quotients of left ⊗ right^op by
// random relations) with dimension between 1 and max_dim.
inline BimoduleData random_bimodule(FieldRef f, std::mt19937_64& rng, std::size_t max_dim) {
    for (;;) {
        auto [left, left_rad] = random_small_algebra(f, rng);
        auto [right, right_rad] = random_small_algebra(f, rng);
        FDAlgebra env = tensor_with_opposite(left, right);
        std::size_t n = env.dim();
        std::vector<Matrix> lefts, rights;
        for (std::size_t a = 0; a < left.dim(); ++a) {
            Vec e = zero_vec(f, n);
            for (std::size_t j = 0; j < right.dim(); ++j) e[a * right.dim() + j] = right.one()[j];
            lefts.push_back(env.left_multiplication(e));
        }
        for (std::size_t b = 0; b < right.dim(); ++b) {
            Vec e = zero_vec(f, n);
            for (std::size_t i = 0; i < left.dim(); ++i) e[i * right.dim() + b] = left.one()[i];
            rights.push_back(env.left_multiplication(e));
        }
        std::vector<Matrix> acts = lefts;
        acts.insert(acts.end(), rights.begin(), rights.end());

        // Each part is a cyclic module given by induced action matrices.
        std::vector<std::pair<std::vector<Matrix>, std::vector<Matrix>>> parts;
        std::size_t total = 0, wanted = 1 + rng() % 4;
        for (std::size_t attempt = 0; attempt < 8 && parts.size() < wanted && total < max_dim; ++attempt) {
            SubspaceBasis rel(f, n);
            std::size_t extra = rng() % 3;
            while (n - rel.dim() > max_dim - total || extra-- > 0) {
                rel.insert(random_vec(f, n, rng, 0.5));
                rel = oracle_closure(acts, rel);
                if (rel.dim() == n) break;
            }
            if (rel.dim() == n || n - rel.dim() > max_dim - total) continue;
            std::vector<Vec> reps = quotient_basis(SubspaceBasis::whole(f, n), rel).vectors();
            RelativeCoordinates rc(rel, reps);
            auto induced = [&](const Matrix& a) {
                std::vector<Vec> cols;
                for (const auto& r : reps) cols.push_back(rc.require(a.apply(r)));
                return Matrix::from_columns(f, reps.size(), cols);
            };
            std::vector<Matrix> pl, pr;
            for (const auto& a : lefts) pl.push_back(induced(a));
            for (const auto& b : rights) pr.push_back(induced(b));
            total += reps.size();
            parts.emplace_back(std::move(pl), std::move(pr));
        }
        if (parts.empty()) continue;

        auto block_diag = [&](std::size_t which, std::size_t idx) {
            Matrix out(f, total, total);
            std::size_t off = 0;
            for (const auto& p : parts) {
                const Matrix& m = (which == 0 ? p.first : p.second)[idx];
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) out.at(off + i, off + j) = m.at(i, j);
                off += m.rows();
            }
            return out;
        };
        BimoduleData m;
        m.left_algebra = left;
        m.right_algebra = right;
        m.dim = total;
        m.left_radical = left_rad;
        m.right_radical = right_rad;
        for (std::size_t a = 0; a < left.dim(); ++a) m.left_action.push_back(block_diag(0, a));
        for (std::size_t b = 0; b < right.dim(); ++b) m.right_action.push_back(block_diag(1, b));
        return m;
    }
}

} // namespace testsupport
