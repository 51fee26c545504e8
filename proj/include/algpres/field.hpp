#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace algpres {

class Field;
class Scalar;

/// Handle to an interned, immutable field descriptor. Descriptors live for the
/// whole process, so two handles denote the same field iff they are equal.
using FieldRef = const Field*;

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
using Poly = std::vector<Scalar>;

enum class FieldKind { Rationals, Prime, RationalFunction, Extension };

/// An element of one field of the tower, always kept in canonical form, so
/// equality of scalars is equality of representations.
class Scalar {
public:
    /// num/den with gcd 1 and monic den; an empty den stands for 1.
    struct Fraction {
        Poly num;
        Poly den;
    };
    /// Coordinates over the base in the power basis, reduced mod the minpoly.
    struct Coords {
        Poly value;
    };

    Scalar() = default;

    FieldRef field() const { return field_; }
    bool valid() const { return field_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(rep_); }
    const Fraction& fraction() const { return std::get<Fraction>(rep_); }
    const Poly& coords() const { return std::get<Coords>(rep_).value; }

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    std::string str() const;

private:
    friend class Field;
    using Rep = std::variant<std::monostate, mpq_class, std::uint64_t, Fraction, Coords>;
    Scalar(FieldRef f, Rep r) : field_(f), rep_(std::move(r)) {}

    FieldRef field_ = nullptr;
    Rep rep_;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);

class Field {
public:
    static FieldRef rationals();
    static FieldRef prime(std::uint64_t p);
    static FieldRef rational_functions(FieldRef base, const std::string& var);
    /// `minpoly` is monic over `base`, lowest degree first.
    static FieldRef extension(FieldRef base, const Poly& minpoly, const std::string& gen);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return characteristic_; }
    FieldRef base() const { return base_; }
    const std::string& symbol() const { return symbol_; }
    const Poly& minpoly() const { return minpoly_; }
    std::size_t degree() const { return minpoly_.empty() ? 1 : minpoly_.size() - 1; }
    int depth() const;
    bool is_finite() const;
    /// Number of elements when finite and below 2^62.
    std::optional<std::uint64_t> cardinality() const;
    /// Canonical textual description, also the interning key.
    const std::string& key() const { return key_; }
    /// Facts taken on trust while building the tower (e.g. irreducibility of a
    /// high-degree minimal polynomial).
    const std::vector<std::string>& assumptions() const { return assumptions_; }
    bool in_tower(FieldRef f) const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    Scalar from_rational(const mpq_class& v) const;
    /// The adjoined symbol: t for a function field, the root x for an extension.
    Scalar generator() const;
    /// Embeds an element of any field below this one in the tower.
    Scalar lift(const Scalar& x) const;
    Scalar make_fraction(Poly num, Poly den) const;
    Scalar make_coords(Poly coords) const;
    /// The index-th element of a finite field, for exhaustive searches.
    Scalar element(std::uint64_t index) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    Scalar parse(const std::string& text) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;
    static FieldRef intern(std::unique_ptr<Field> f);
    void check(const Scalar& a) const;

    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t characteristic_ = 0;
    FieldRef base_ = nullptr;
    std::string symbol_;
    Poly minpoly_;
    std::string key_;
    std::vector<std::string> assumptions_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// True exactly when the field is guaranteed perfect by construction
/// (rationals and prime fields); false means "no guarantee".
bool is_perfect_guarantee(FieldRef f);

/// The derivation p + q*x -> q on a quadratic extension k[x]/(x^2 - c) in
/// characteristic 2. The result lives in the base field k.
Scalar derivation_delta(const Scalar& f);

} // namespace algpres
