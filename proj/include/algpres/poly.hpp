#pragma once

#include "algpres/field.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

// Univariate polynomials over a field of the tower. Every routine takes the
// coefficient field explicitly because the zero polynomial carries none.
namespace algpres::poly {

void trim(Poly& p);
int degree(const Poly& p);
bool is_zero(const Poly& p);

Poly constant(const Scalar& c);
Poly monomial(const Scalar& c, std::size_t deg);
Poly add(FieldRef f, const Poly& a, const Poly& b);
Poly sub(FieldRef f, const Poly& a, const Poly& b);
Poly mul(FieldRef f, const Poly& a, const Poly& b);
Poly scale(FieldRef f, const Poly& a, const Scalar& c);
Poly monic(FieldRef f, const Poly& a);
std::pair<Poly, Poly> divmod(FieldRef f, const Poly& a, const Poly& b);
Poly rem(FieldRef f, const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(FieldRef f, Poly a, Poly b);
/// Returns (g, u, v) with u*a + v*b = g and g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(FieldRef f, const Poly& a, const Poly& b);
Poly derivative(FieldRef f, const Poly& a);
Scalar eval(FieldRef f, const Poly& a, const Scalar& x);
Poly mulmod(FieldRef f, const Poly& a, const Poly& b, const Poly& m);

std::string to_string(const Poly& p, const std::string& var);

/// All distinct roots of p (nonzero) lying in f, or nullopt when f has no
/// supported root-finding procedure or the search would be too large.
std::optional<std::vector<Scalar>> roots(FieldRef f, const Poly& p);

/// Monic polynomials of the given degree over a finite field, in a fixed order.
/// Returns nullopt when there are more than `limit` of them.
std::optional<std::vector<Poly>> monic_polys_of_degree(FieldRef f, std::size_t deg,
                                                        std::uint64_t limit);

} // namespace algpres::poly
