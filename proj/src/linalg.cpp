#include "algpres/linalg.hpp"

#include "algpres/error.hpp"

#include <algorithm>

namespace algpres {

Vec zero_vec(FieldRef f, std::size_t n) { return Vec(n, f->zero()); }

Vec unit_vec(FieldRef f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = f->one();
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({static_cast<std::uint32_t>(i), v[i]});
    return out;
}

Vec to_dense(FieldRef f, std::size_t n, const SparseVec& v) {
    Vec out = zero_vec(f, n);
    for (const auto& e : v) out[e.index] = e.value;
    return out;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

void axpy(Vec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero()) return;
    for (const auto& e : x) y[e.index] += a * e.value;
}

Vec add_vec(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale_vec(const Vec& a, const Scalar& c) {
    Vec out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(x * c);
    return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldRef f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f->zero()) {}

Matrix Matrix::identity(FieldRef f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Matrix Matrix::from_rows(FieldRef f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail("AmbientMismatch", "row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(FieldRef f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail("AmbientMismatch", "column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) fail("AmbientMismatch", "vector length differs from column count");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * x[j];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail("AmbientMismatch", "matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

// ---------------------------------------------------------------- SubspaceBasis

SubspaceBasis SubspaceBasis::span(FieldRef f, std::size_t ambient, const std::vector<Vec>& vecs) {
    SubspaceBasis s(f, ambient);
    for (const auto& v : vecs) s.insert(v);
    return s;
}

SubspaceBasis SubspaceBasis::whole(FieldRef f, std::size_t ambient) {
    SubspaceBasis s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.rows_.push_back({{static_cast<std::uint32_t>(i), f->one()}});
        s.pivots_.push_back(i);
    }
    return s;
}

std::vector<Vec> SubspaceBasis::vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(vector(i));
    return out;
}

void SubspaceBasis::reduce_in_place(Vec& v) const {
    if (v.size() != ambient_) fail("AmbientMismatch", "vector length differs from ambient dimension");
    // Rows are fully reduced, so each pivot can be cleared independently.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = v[pivots_[r]];
        if (c.is_zero()) continue;
        axpy(v, -c, rows_[r]);
    }
}

Vec SubspaceBasis::reduce(const Vec& v) const {
    Vec out = v;
    reduce_in_place(out);
    return out;
}

bool SubspaceBasis::insert(const Vec& v) {
    Vec w = v;
    reduce_in_place(w);
    std::size_t pc = 0;
    while (pc < w.size() && w[pc].is_zero()) ++pc;
    if (pc == w.size()) return false;
    Scalar inv = w[pc].inverse();
    SparseVec row;
    for (std::size_t i = pc; i < w.size(); ++i)
        if (!w[i].is_zero()) row.push_back({static_cast<std::uint32_t>(i), i == pc ? field_->one() : w[i] * inv});

    // Clear the new pivot column from the existing rows.
    for (auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), pc,
                                   [](const SparseEntry& e, std::size_t idx) { return e.index < idx; });
        if (it == r.end() || it->index != pc) continue;
        Scalar c = it->value;
        SparseVec merged;
        merged.reserve(r.size() + row.size());
        std::size_t a = 0, b = 0;
        while (a < r.size() || b < row.size()) {
            if (b == row.size() || (a < r.size() && r[a].index < row[b].index)) {
                merged.push_back(r[a++]);
            } else if (a == r.size() || row[b].index < r[a].index) {
                merged.push_back({row[b].index, -(c * row[b].value)});
                ++b;
            } else {
                Scalar val = r[a].value - c * row[b].value;
                if (!val.is_zero()) merged.push_back({r[a].index, val});
                ++a;
                ++b;
            }
        }
        r = std::move(merged);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

bool SubspaceBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_) fail("AmbientMismatch", "subspaces live in different ambient spaces");
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.rows_.size(); ++i)
        if (!contains(other.vector(i))) return false;
    return true;
}

Vec SubspaceBasis::coordinates(const Vec& v) const {
    Vec out;
    out.reserve(rows_.size());
    for (std::size_t p : pivots_) out.push_back(v[p]);
    return out;
}

Matrix SubspaceBasis::as_matrix() const { return Matrix::from_rows(field_, ambient_, vectors()); }

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
    if (ambient_ != o.ambient_ || pivots_ != o.pivots_) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != o.rows_[r].size()) return false;
        for (std::size_t k = 0; k < rows_[r].size(); ++k)
            if (rows_[r][k].index != o.rows_[r][k].index || rows_[r][k].value != o.rows_[r][k].value)
                return false;
    }
    return true;
}

// ---------------------------------------------------------------- RelativeCoordinates

// Rows (u | 0) for u in U and (r_k | e_k) for the reps. Reducing (v | 0)
// against the echelon form leaves (0 | -beta) exactly when v = u + sum beta_k r_k.
RelativeCoordinates::RelativeCoordinates(const SubspaceBasis& modulo, const std::vector<Vec>& reps)
    : field_(modulo.field()), ambient_(modulo.ambient()), count_(reps.size()),
      tagged_(modulo.field(), modulo.ambient() + reps.size()) {
    for (std::size_t i = 0; i < modulo.dim(); ++i) {
        Vec row = modulo.vector(i);
        row.resize(ambient_ + count_, field_->zero());
        tagged_.insert(row);
    }
    for (std::size_t k = 0; k < reps.size(); ++k) {
        Vec row = reps[k];
        if (row.size() != ambient_) fail("AmbientMismatch", "representative has wrong length");
        row.resize(ambient_ + count_, field_->zero());
        row[ambient_ + k] = field_->one();
        tagged_.insert(row);
    }
    for (std::size_t p : tagged_.pivots())
        if (p >= ambient_) fail("NotIndependent", "representatives are dependent modulo the subspace");
}

std::optional<Vec> RelativeCoordinates::coordinates(const Vec& v) const {
    if (v.size() != ambient_) fail("AmbientMismatch", "vector has wrong length");
    Vec w = v;
    w.resize(ambient_ + count_, field_->zero());
    w = tagged_.reduce(w);
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!w[i].is_zero()) return std::nullopt;
    Vec out;
    out.reserve(count_);
    for (std::size_t k = 0; k < count_; ++k) out.push_back(-w[ambient_ + k]);
    return out;
}

Vec RelativeCoordinates::require(const Vec& v) const {
    auto c = coordinates(v);
    if (!c) fail("NotInSpan", "vector lies outside the expected span");
    return *c;
}

// ---------------------------------------------------------------- free functions

RrefResult rref(const Matrix& m) {
    SubspaceBasis s(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (const auto& e : s.rows()[r]) out.at(r, e.index) = e.value;
    return {out, s.pivots()};
}

std::size_t rank(const Matrix& m) { return image(m.transpose()).dim(); }

SubspaceBasis kernel(const Matrix& m) {
    SubspaceBasis s(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : s.pivots()) is_pivot[p] = true;
    SubspaceBasis k(m.field(), m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = unit_vec(m.field(), m.cols(), free);
        for (std::size_t r = 0; r < s.dim(); ++r) {
            const auto& row = s.rows()[r];
            auto it = std::lower_bound(row.begin(), row.end(), free,
                                       [](const SparseEntry& e, std::size_t idx) { return e.index < idx; });
            if (it != row.end() && it->index == free) v[s.pivots()[r]] = -it->value;
        }
        k.insert(v);
    }
    return k;
}

SubspaceBasis image(const Matrix& m) {
    SubspaceBasis s(m.field(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) s.insert(m.column(j));
    return s;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) fail("AmbientMismatch", "right-hand side length differs from row count");
    FieldRef f = m.field();
    std::size_t n = m.cols();
    SubspaceBasis s(f, n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec row = m.row(i);
        row.push_back(rhs[i]);
        s.insert(row);
    }
    Vec x = zero_vec(f, n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        std::size_t p = s.pivots()[r];
        if (p == n) return std::nullopt;
        const auto& row = s.rows()[r];
        if (!row.empty() && row.back().index == n) x[p] = row.back().value;
    }
    return x;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) fail("AmbientMismatch", "subspaces live in different ambient spaces");
    SubspaceBasis s = a;
    for (std::size_t i = 0; i < b.dim(); ++i) s.insert(b.vector(i));
    return s;
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) fail("AmbientMismatch", "subspaces live in different ambient spaces");
    FieldRef f = a.field();
    std::size_t n = a.ambient();
    // Zassenhaus: rows (u|u) for u in a and (w|0) for w in b; rows whose left
    // half vanishes carry the intersection in their right half.
    SubspaceBasis z(f, 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec u = a.vector(i);
        Vec row = u;
        row.insert(row.end(), u.begin(), u.end());
        z.insert(row);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Vec row = b.vector(i);
        row.resize(2 * n, f->zero());
        z.insert(row);
    }
    SubspaceBasis out(f, n);
    for (std::size_t r = 0; r < z.dim(); ++r) {
        if (z.pivots()[r] < n) continue;
        Vec v = zero_vec(f, n);
        for (const auto& e : z.rows()[r]) v[e.index - n] = e.value;
        out.insert(v);
    }
    return out;
}

SubspaceBasis quotient_basis(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) fail("AmbientMismatch", "subspaces live in different ambient spaces");
    SubspaceBasis acc = b;
    SubspaceBasis out(a.field(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec v = a.vector(i);
        if (acc.insert(v)) out.insert(v);
    }
    return out;
}

} // namespace algpres
