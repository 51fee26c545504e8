#pragma once

#include "algpres/field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace algpres {

using Vec = std::vector<Scalar>;

struct SparseEntry {
    std::uint32_t index;
    Scalar value;
};
/// Nonzero entries in increasing index order.
using SparseVec = std::vector<SparseEntry>;

Vec zero_vec(FieldRef f, std::size_t n);
Vec unit_vec(FieldRef f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
SparseVec to_sparse(const Vec& v);
Vec to_dense(FieldRef f, std::size_t n, const SparseVec& v);
/// y += a*x
void axpy(Vec& y, const Scalar& a, const Vec& x);
void axpy(Vec& y, const Scalar& a, const SparseVec& x);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Vec& a, const Scalar& c);

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldRef f, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldRef f, std::size_t n);
    static Matrix from_rows(FieldRef f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(FieldRef f, std::size_t rows, const std::vector<Vec>& cols);

    FieldRef field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    /// M*x for a column vector x.
    Vec apply(const Vec& x) const;
    Matrix operator*(const Matrix& other) const;
    Matrix transpose() const;
    bool operator==(const Matrix& other) const;

private:
    FieldRef field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// A subspace of field^n, stored as the rows of its canonical reduced
/// row-echelon form. Equal subspaces have identical representations.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(FieldRef f, std::size_t ambient) : field_(f), ambient_(ambient) {}
    static SubspaceBasis span(FieldRef f, std::size_t ambient, const std::vector<Vec>& vecs);
    static SubspaceBasis whole(FieldRef f, std::size_t ambient);

    FieldRef field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec vector(std::size_t i) const { return to_dense(field_, ambient_, rows_[i]); }
    std::vector<Vec> vectors() const;

    /// Adds v to the span; returns false when v was already in it.
    bool insert(const Vec& v);
    /// The canonical representative of v modulo the subspace (zero at pivots).
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const SubspaceBasis& other) const;
    /// Coefficients of v (assumed inside) with respect to rows().
    Vec coordinates(const Vec& v) const;
    Matrix as_matrix() const;

    bool operator==(const SubspaceBasis& other) const;
    bool operator!=(const SubspaceBasis& other) const { return !(*this == other); }

private:
    void reduce_in_place(Vec& v) const;

    FieldRef field_ = nullptr;
    std::size_t ambient_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to chosen representatives modulo a subspace:
/// for v in U ⊕ span(reps), returns the coefficients of the reps.
class RelativeCoordinates {
public:
    RelativeCoordinates() = default;
    RelativeCoordinates(const SubspaceBasis& modulo, const std::vector<Vec>& reps);
    std::size_t size() const { return count_; }
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Throws NotInSpan when v lies outside U ⊕ span(reps).
    Vec require(const Vec& v) const;

private:
    FieldRef field_ = nullptr;
    std::size_t ambient_ = 0, count_ = 0;
    SubspaceBasis tagged_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Right null space {x : m*x = 0}.
SubspaceBasis kernel(const Matrix& m);
/// Column space of m.
SubspaceBasis image(const Matrix& m);
/// Some x with m*x = rhs, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);
/// A complement of b inside a, spanned by coset representatives of a/(a∩b)
/// drawn from a's basis.
SubspaceBasis quotient_basis(const SubspaceBasis& a, const SubspaceBasis& b);

} // namespace algpres
