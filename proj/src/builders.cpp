#include "algpres/builders.hpp"

#include "algpres/error.hpp"
#include "algpres/poly.hpp"

namespace algpres::build {

FDAlgebra matrix_pattern(FieldRef f, std::size_t n, const std::function<bool(std::size_t, std::size_t)>& allowed) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    std::vector<std::string> labels;
    std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (allowed(i, j)) {
                index[i][j] = static_cast<long>(units.size());
                units.emplace_back(i, j);
                labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            }
    std::size_t d = units.size();
    Vec one = zero_vec(f, d);
    for (std::size_t i = 0; i < n; ++i) {
        if (index[i][i] < 0) fail("InvalidAlgebra", "matrix pattern misses a diagonal unit");
        one[index[i][i]] = f->one();
    }
    return FDAlgebra::from_products(
        f, std::move(labels),
        [&](std::size_t a, std::size_t b) {
            Vec out = zero_vec(f, d);
            auto [i, j] = units[a];
            auto [k, l] = units[b];
            if (j == k) {
                if (index[i][l] < 0) fail("NotClosed", "matrix pattern is not closed under products");
                out[index[i][l]] = f->one();
            }
            return out;
        },
        std::move(one));
}

FDAlgebra matrix_algebra(FieldRef f, std::size_t n) {
    return matrix_pattern(f, n, [](std::size_t, std::size_t) { return true; });
}

FDAlgebra upper_triangular(FieldRef f, std::size_t n) {
    return matrix_pattern(f, n, [](std::size_t i, std::size_t j) { return i <= j; });
}

FDAlgebra block_triangular(FieldRef f, std::size_t n) {
    return matrix_pattern(f, 2 * n, [n](std::size_t i, std::size_t j) { return i < n || j >= n; });
}

FDAlgebra polynomial_quotient(FieldRef f, const Poly& modulus, const std::string& var) {
    int d = poly::degree(modulus);
    if (d < 1 || !modulus.back().is_one()) fail("InvalidAlgebra", "modulus must be monic of positive degree");
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
    return FDAlgebra::from_products(
        f, std::move(labels),
        [&](std::size_t a, std::size_t b) {
            Poly r = poly::rem(f, poly::monomial(f->one(), a + b), modulus);
            Vec out = zero_vec(f, d);
            for (std::size_t k = 0; k < r.size(); ++k) out[k] = r[k];
            return out;
        },
        unit_vec(f, d, 0));
}

FDAlgebra direct_sum(const FDAlgebra& a, const FDAlgebra& b) {
    FieldRef f = a.field();
    if (b.field() != f) fail("MixedFields", "direct sum of algebras over different fields");
    std::size_t da = a.dim(), db = b.dim(), n = da + db;
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
    Vec one = zero_vec(f, n);
    for (std::size_t i = 0; i < da; ++i) one[i] = a.one()[i];
    for (std::size_t i = 0; i < db; ++i) one[da + i] = b.one()[i];
    return FDAlgebra::from_products(
        f, std::move(labels),
        [&](std::size_t i, std::size_t j) {
            Vec out = zero_vec(f, n);
            if (i < da && j < da)
                for (const auto& e : a.basis_product(i, j)) out[e.index] = e.value;
            else if (i >= da && j >= da)
                for (const auto& e : b.basis_product(i - da, j - da)) out[da + e.index] = e.value;
            return out;
        },
        std::move(one));
}

FDAlgebra ground(FieldRef f, const std::string& label) {
    return FDAlgebra::from_products(
        f, {label}, [f](std::size_t, std::size_t) { return Vec{f->one()}; }, Vec{f->one()});
}

} // namespace algpres::build
