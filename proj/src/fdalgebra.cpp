#include "algpres/fdalgebra.hpp"

#include "algpres/error.hpp"

#include <deque>

namespace algpres {

namespace {

// a += c * x for sparse x, on a dense accumulator.
void accumulate(Vec& acc, const Scalar& c, const SparseVec& x) {
    for (const auto& e : x) acc[e.index] += c * e.value;
}

} // namespace

FDAlgebra::FDAlgebra(FieldRef f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec one)
    : field_(f), dim_(labels.size()), labels_(std::move(labels)), table_(std::move(table)), one_(std::move(one)) {
    if (table_.size() != dim_ * dim_) fail("InvalidAlgebra", "structure table has the wrong size");
    if (one_.size() != dim_) fail("InvalidAlgebra", "identity vector has the wrong length");
    for (const auto& x : one_)
        if (x.field() != f) fail("MixedFields", "identity coordinates over another field");
    for (const auto& row : table_)
        for (const auto& e : row) {
            if (e.index >= dim_) fail("InvalidAlgebra", "structure constant index out of range");
            if (e.value.field() != f) fail("MixedFields", "structure constant over another field");
        }
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec x = basis_vector(i);
        if (multiply(one_, x) != x || multiply(x, one_) != x)
            fail("NotUnital", "identity does not act as identity on " + labels_[i]);
    }
}

FDAlgebra FDAlgebra::from_products(FieldRef f, std::vector<std::string> labels,
                                   const std::function<Vec(std::size_t, std::size_t)>& product, Vec one) {
    std::size_t n = labels.size();
    std::vector<SparseVec> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = to_sparse(product(i, j));
    return FDAlgebra(f, std::move(labels), std::move(table), std::move(one));
}

Vec FDAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(field_, dim_);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!b[j].is_zero()) support.push_back(j);
    if (support.empty()) return out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j : support) {
            const SparseVec& p = table_[i * dim_ + j];
            if (p.empty()) continue;
            accumulate(out, a[i] * b[j], p);
        }
    }
    return out;
}

Vec FDAlgebra::power(const Vec& a, std::uint64_t e) const {
    Vec result = one_;
    Vec base = a;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

Matrix FDAlgebra::left_multiplication(const Vec& a) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& e : table_[i * dim_ + j]) m.at(e.index, j) += a[i] * e.value;
    }
    return m;
}

Matrix FDAlgebra::right_multiplication(const Vec& a) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& e : table_[j * dim_ + i]) m.at(e.index, j) += a[i] * e.value;
    }
    return m;
}

Scalar FDAlgebra::left_trace(const Vec& a) const {
    Scalar t = field_->zero();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& e : table_[i * dim_ + j])
                if (e.index == j) t += a[i] * e.value;
    }
    return t;
}

std::optional<std::string> FDAlgebra::associativity_failure() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const SparseVec& ij = table_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                Vec lhs = zero_vec(field_, dim_);
                for (const auto& e : ij) accumulate(lhs, e.value, table_[e.index * dim_ + k]);
                Vec rhs = zero_vec(field_, dim_);
                for (const auto& e : table_[j * dim_ + k]) accumulate(rhs, e.value, table_[i * dim_ + e.index]);
                if (lhs != rhs)
                    return "(" + labels_[i] + "*" + labels_[j] + ")*" + labels_[k] + " != " + labels_[i] + "*(" +
                           labels_[j] + "*" + labels_[k] + ")";
            }
        }
    return std::nullopt;
}

bool FDAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const SparseVec& a = table_[i * dim_ + j];
            const SparseVec& b = table_[j * dim_ + i];
            if (a.size() != b.size()) return false;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k].index != b[k].index || a[k].value != b[k].value) return false;
        }
    return true;
}

bool FDAlgebra::operator==(const FDAlgebra& o) const {
    if (field_ != o.field_ || dim_ != o.dim_ || one_ != o.one_) return false;
    for (std::size_t t = 0; t < table_.size(); ++t) {
        const SparseVec& a = table_[t];
        const SparseVec& b = o.table_[t];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].index != b[k].index || a[k].value != b[k].value) return false;
    }
    return true;
}

// ---------------------------------------------------------------- subspaces and ideals

FDAlgebra restrict_to(const FDAlgebra& alg, const std::vector<Vec>& basis, std::vector<std::string> labels,
                      const Vec& one) {
    FieldRef f = alg.field();
    if (labels.size() != basis.size()) fail("InvalidAlgebra", "label count differs from basis size");
    RelativeCoordinates coords(SubspaceBasis(f, alg.dim()), basis);
    std::size_t n = basis.size();
    std::vector<SparseVec> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto c = coords.coordinates(alg.multiply(basis[i], basis[j]));
            if (!c) fail("NotClosed", "span is not closed under multiplication");
            table[i * n + j] = to_sparse(*c);
        }
    return FDAlgebra(f, std::move(labels), std::move(table), one);
}

SubspaceBasis product_space(const FDAlgebra& alg, const SubspaceBasis& a, const SubspaceBasis& b) {
    SubspaceBasis out(alg.field(), alg.dim());
    auto bv = b.vectors();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec u = a.vector(i);
        for (const auto& v : bv) {
            out.insert(alg.multiply(u, v));
            if (out.dim() == alg.dim()) return out;
        }
    }
    return out;
}

std::optional<std::string> ideal_failure(const FDAlgebra& alg, const SubspaceBasis& s,
                                        const std::vector<std::size_t>& multipliers) {
    if (s.ambient() != alg.dim()) fail("AmbientMismatch", "subspace does not live in the algebra");
    std::size_t n = alg.dim();
    std::vector<std::size_t> mults = multipliers;
    if (mults.empty())
        for (std::size_t i = 0; i < n; ++i) mults.push_back(i);
    FieldRef f = alg.field();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const SparseVec& v = s.rows()[r];
        for (std::size_t i : mults) {
            Vec left = zero_vec(f, n), right = zero_vec(f, n);
            for (const auto& e : v) {
                accumulate(left, e.value, alg.basis_product(i, e.index));
                accumulate(right, e.value, alg.basis_product(e.index, i));
            }
            if (!s.contains(left))
                return alg.labels()[i] + " times basis vector " + std::to_string(r) + " leaves the subspace";
            if (!s.contains(right))
                return "basis vector " + std::to_string(r) + " times " + alg.labels()[i] + " leaves the subspace";
        }
    }
    return std::nullopt;
}

void extend_ideal(const FDAlgebra& alg, SubspaceBasis& ideal, const std::vector<Vec>& gens,
                  const std::vector<std::size_t>& multipliers) {
    std::size_t n = alg.dim();
    std::vector<std::size_t> mults = multipliers;
    if (mults.empty())
        for (std::size_t i = 0; i < n; ++i) mults.push_back(i);
    std::deque<Vec> queue(gens.begin(), gens.end());
    FieldRef f = alg.field();
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        if (ideal.dim() == n) return;
        if (!ideal.insert(v)) continue;
        SparseVec sv = to_sparse(v);
        for (std::size_t m : mults) {
            Vec left = zero_vec(f, n), right = zero_vec(f, n);
            for (const auto& e : sv) {
                accumulate(left, e.value, alg.basis_product(m, e.index));
                accumulate(right, e.value, alg.basis_product(e.index, m));
            }
            if (!is_zero_vec(left)) queue.push_back(std::move(left));
            if (!is_zero_vec(right)) queue.push_back(std::move(right));
        }
    }
}

SubspaceBasis ideal_closure(const FDAlgebra& alg, const std::vector<Vec>& gens,
                            const std::vector<std::size_t>& multipliers) {
    SubspaceBasis ideal(alg.field(), alg.dim());
    extend_ideal(alg, ideal, gens, multipliers);
    return ideal;
}

std::vector<SubspaceBasis> ideal_powers(const FDAlgebra& alg, const SubspaceBasis& ideal, std::size_t max_steps) {
    std::vector<SubspaceBasis> out{ideal};
    while (!out.back().is_zero()) {
        if (out.size() > max_steps) fail("NotNilpotent", "ideal powers do not reach zero");
        SubspaceBasis next = product_space(alg, out.back(), ideal);
        if (next == out.back()) fail("NotNilpotent", "ideal powers stabilise at a nonzero subspace");
        out.push_back(std::move(next));
    }
    return out;
}

std::size_t loewy_length(const FDAlgebra& alg, const SubspaceBasis& rad) {
    if (alg.dim() == 0) return 0;
    // r^m = 0 where powers = [r, r^2, ..., r^m = 0].
    return ideal_powers(alg, rad).size();
}

QuotientResult quotient_algebra(const FDAlgebra& alg, const SubspaceBasis& ideal,
                                const std::vector<std::size_t>& multipliers) {
    if (auto why = ideal_failure(alg, ideal, multipliers)) fail("NotAnIdeal", *why);
    FieldRef f = alg.field();
    std::size_t n = alg.dim();
    std::vector<bool> pivot(n, false);
    for (std::size_t p : ideal.pivots()) pivot[p] = true;
    std::vector<std::size_t> reps;
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) {
            slot[i] = reps.size();
            reps.push_back(i);
        }
    std::size_t q = reps.size();
    auto project = [&](const Vec& v) {
        Vec red = ideal.reduce(v);
        Vec out = zero_vec(f, q);
        for (std::size_t k = 0; k < q; ++k) out[k] = red[reps[k]];
        return out;
    };
    Matrix proj(f, q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = project(alg.basis_vector(j));
        for (std::size_t k = 0; k < q; ++k) proj.at(k, j) = col[k];
    }
    std::vector<std::string> labels;
    for (std::size_t r : reps) labels.push_back(alg.labels()[r]);
    std::vector<SparseVec> table(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            table[a * q + b] = to_sparse(project(to_dense(f, n, alg.basis_product(reps[a], reps[b]))));
    FDAlgebra quo(f, std::move(labels), std::move(table), project(alg.one()));
    return {std::move(quo), std::move(proj), std::move(reps)};
}

SubspaceBasis center(const FDAlgebra& alg) {
    std::size_t n = alg.dim();
    FieldRef f = alg.field();
    SubspaceBasis rows(f, n);
    for (std::size_t i = 0; i < n && rows.dim() < n; ++i) {
        Vec x = alg.basis_vector(i);
        Matrix d = alg.left_multiplication(x);
        Matrix r = alg.right_multiplication(x);
        for (std::size_t a = 0; a < n; ++a) {
            Vec row = zero_vec(f, n);
            for (std::size_t b = 0; b < n; ++b) row[b] = d.at(a, b) - r.at(a, b);
            rows.insert(row);
        }
    }
    Matrix m = rows.dim() ? rows.as_matrix() : Matrix(f, 0, n);
    return kernel(m);
}

FDAlgebra tensor_with_opposite(const FDAlgebra& a, const FDAlgebra& b) {
    FieldRef f = a.field();
    if (b.field() != f) fail("MixedFields", "tensor factors over different fields");
    std::size_t da = a.dim(), db = b.dim(), n = da * db;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) labels.push_back(a.labels()[i] + "@" + b.labels()[j]);
    std::vector<SparseVec> table(n * n);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    const SparseVec& left = a.basis_product(i, k);
                    const SparseVec& right = b.basis_product(l, j);
                    if (left.empty() || right.empty()) continue;
                    Vec acc = zero_vec(f, n);
                    for (const auto& x : left)
                        for (const auto& y : right) acc[x.index * db + y.index] += x.value * y.value;
                    table[(i * db + j) * n + (k * db + l)] = to_sparse(acc);
                }
    Vec one = zero_vec(f, n);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) one[i * db + j] = a.one()[i] * b.one()[j];
    return FDAlgebra(f, std::move(labels), std::move(table), std::move(one));
}

} // namespace algpres
