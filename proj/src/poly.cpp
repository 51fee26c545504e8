#include "algpres/poly.hpp"

#include "algpres/error.hpp"

#include <set>

namespace algpres::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const Poly& p) { return p.empty(); }

Poly constant(const Scalar& c) {
    Poly p{c};
    trim(p);
    return p;
}

Poly monomial(const Scalar& c, std::size_t deg) {
    if (c.is_zero()) return {};
    Poly p(deg + 1, c.field()->zero());
    p[deg] = c;
    return p;
}

Poly add(FieldRef f, const Poly& a, const Poly& b) {
    const Poly& lo = a.size() < b.size() ? a : b;
    const Poly& hi = a.size() < b.size() ? b : a;
    Poly r = hi;
    for (std::size_t i = 0; i < lo.size(); ++i) r[i] = f->add(r[i], lo[i]);
    trim(r);
    return r;
}

Poly sub(FieldRef f, const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), f->zero());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f->sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(FieldRef f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = f->add(r[i + j], f->mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

Poly scale(FieldRef f, const Poly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    Poly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(f->mul(x, c));
    trim(r);
    return r;
}

Poly monic(FieldRef f, const Poly& a) {
    if (a.empty() || a.back().is_one()) return a;
    return scale(f, a, f->inv(a.back()));
}

std::pair<Poly, Poly> divmod(FieldRef f, const Poly& a, const Poly& b) {
    if (b.empty()) fail("DivisionByZero", "polynomial division by zero");
    Poly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    Poly q(r.size() - b.size() + 1, f->zero());
    Scalar lead_inv = f->inv(b.back());
    bool monic_divisor = b.back().is_one();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Scalar c = monic_divisor ? r.back() : f->mul(r.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            if (b[i].is_zero()) continue;
            r[shift + i] = f->sub(r[shift + i], f->mul(c, b[i]));
        }
        r.pop_back();
        trim(r);
    }
    trim(q);
    return {q, r};
}

Poly rem(FieldRef f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly gcd(FieldRef f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(f, a, b);
        a = std::move(b);
        b = monic(f, r);
    }
    return monic(f, a);
}

std::tuple<Poly, Poly, Poly> ext_gcd(FieldRef f, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    Poly s0{f->one()}, s1{};
    Poly t0{}, t1{f->one()};
    while (!r1.empty()) {
        auto [q, r] = divmod(f, r0, r1);
        Poly s2 = sub(f, s0, mul(f, q, s1));
        Poly t2 = sub(f, t0, mul(f, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    Scalar c = f->inv(r0.back());
    return {scale(f, r0, c), scale(f, s0, c), scale(f, t0, c)};
}

Poly derivative(FieldRef f, const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f->mul(f->from_int(static_cast<long long>(i)), a[i]));
    trim(r);
    return r;
}

Scalar eval(FieldRef f, const Poly& a, const Scalar& x) {
    Scalar acc = f->zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f->add(f->mul(acc, x), a[i]);
    return acc;
}

Poly mulmod(FieldRef f, const Poly& a, const Poly& b, const Poly& m) { return rem(f, mul(f, a, b), m); }

std::string to_string(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    auto top_level_sum = [](const std::string& s) {
        int depth = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '(' || c == '[') ++depth;
            else if (c == ')' || c == ']') --depth;
            else if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
        }
        return false;
    };
    std::string out;
    for (std::size_t d = p.size(); d-- > 0;) {
        if (p[d].is_zero()) continue;
        std::string cs = p[d].str();
        std::string term;
        if (d == 0) {
            term = top_level_sum(cs) ? "(" + cs + ")" : cs;
        } else {
            std::string mono = var + (d > 1 ? "^" + std::to_string(d) : "");
            if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else if (!top_level_sum(cs)) term = cs + "*" + mono;
            else term = "(" + cs + ")*" + mono;
        }
        if (out.empty() || term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

std::optional<std::vector<Poly>> monic_polys_of_degree(FieldRef f, std::size_t deg, std::uint64_t limit) {
    auto q = f->cardinality();
    if (!q) return std::nullopt;
    unsigned __int128 count = 1;
    for (std::size_t i = 0; i < deg; ++i) {
        count *= *q;
        if (count > limit) return std::nullopt;
    }
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(count); ++idx) {
        Poly p(deg + 1, f->zero());
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < deg; ++i) {
            p[i] = f->element(rest % *q);
            rest /= *q;
        }
        p[deg] = f->one();
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

constexpr std::uint64_t kSearchLimit = 1u << 20;

std::optional<std::vector<mpz_class>> integer_divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 48) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) factors.push_back({d, e});
    }
    if (n > 1) factors.push_back({n, 1});
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

std::optional<std::vector<Scalar>> rational_roots(FieldRef f, const Poly& p) {
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    mpz_class a0 = mpq_class(p.front().rational() * lcm).get_num();
    mpz_class an = mpq_class(p.back().rational() * lcm).get_num();
    auto num_divs = integer_divisors(a0);
    auto den_divs = integer_divisors(an);
    if (!num_divs || !den_divs) return std::nullopt;
    std::vector<Scalar> out;
    std::set<std::string> seen;
    for (const auto& n : *num_divs)
        for (const auto& d : *den_divs)
            for (int sign : {1, -1}) {
                mpq_class cand(n * sign, d);
                cand.canonicalize();
                Scalar x = f->from_rational(cand);
                if (seen.insert(x.str()).second && eval(f, p, x).is_zero()) out.push_back(x);
            }
    return out;
}

std::optional<std::vector<Scalar>> exhaustive_roots(FieldRef f, const Poly& p) {
    auto q = f->cardinality();
    if (!q || *q > kSearchLimit) return std::nullopt;
    std::vector<Scalar> out;
    for (std::uint64_t i = 0; i < *q; ++i) {
        Scalar x = f->element(i);
        if (eval(f, p, x).is_zero()) out.push_back(x);
    }
    return out;
}

// Monic divisors of a nonzero polynomial over a finite field, via trial
// division by monic polynomials of increasing degree.
std::optional<std::vector<Poly>> monic_divisors(FieldRef f, Poly n) {
    n = monic(f, n);
    std::vector<std::pair<Poly, int>> factors;
    std::uint64_t budget = kSearchLimit;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(degree(n)); ++d) {
        auto cands = monic_polys_of_degree(f, d, budget);
        if (!cands) return std::nullopt;
        budget -= cands->size();
        for (const auto& c : *cands) {
            int e = 0;
            for (;;) {
                auto [q, r] = divmod(f, n, c);
                if (!r.empty()) break;
                n = std::move(q);
                ++e;
            }
            if (e) factors.push_back({c, e});
            if (2 * d > static_cast<std::size_t>(degree(n))) break;
        }
    }
    if (degree(n) > 0) factors.push_back({n, 1});
    std::vector<Poly> divs{{f->one()}};
    for (const auto& [fac, e] : factors) {
        std::size_t base = divs.size();
        Poly pw{f->one()};
        for (int k = 1; k <= e; ++k) {
            pw = mul(f, pw, fac);
            for (std::size_t i = 0; i < base; ++i) divs.push_back(mul(f, divs[i], pw));
        }
    }
    return divs;
}

std::optional<std::vector<Scalar>> function_field_roots(FieldRef f, const Poly& p) {
    FieldRef b = f->base();
    if (!b->is_finite()) return std::nullopt;
    // Clear denominators to get coefficients in b[t].
    Poly lcm{b->one()};
    for (const auto& c : p) {
        const auto& den = c.fraction().den;
        if (den.empty()) continue;
        Poly g = gcd(b, lcm, den);
        lcm = divmod(b, mul(b, lcm, den), g).first;
    }
    auto cleared = [&](const Scalar& c) {
        const auto& fr = c.fraction();
        Poly den = fr.den.empty() ? Poly{b->one()} : fr.den;
        return divmod(b, mul(b, fr.num, lcm), den).first;
    };
    auto num_divs = monic_divisors(b, cleared(p.front()));
    auto den_divs = monic_divisors(b, cleared(p.back()));
    if (!num_divs || !den_divs) return std::nullopt;
    std::uint64_t units = *b->cardinality() - 1;
    if ((unsigned __int128)num_divs->size() * den_divs->size() * units > kSearchLimit) return std::nullopt;
    std::vector<Scalar> out;
    std::set<std::string> seen;
    for (const auto& n : *num_divs)
        for (const auto& d : *den_divs)
            for (std::uint64_t u = 1; u <= units; ++u) {
                Scalar x = f->make_fraction(scale(b, n, b->element(u)), d);
                if (seen.insert(x.str()).second && eval(f, p, x).is_zero()) out.push_back(x);
            }
    return out;
}

} // namespace

std::optional<std::vector<Scalar>> roots(FieldRef f, const Poly& p) {
    Poly q = p;
    trim(q);
    if (q.empty()) fail("InvalidArgument", "roots of the zero polynomial");
    std::vector<Scalar> out;
    if (q.front().is_zero()) {
        out.push_back(f->zero());
        std::size_t k = 0;
        while (q[k].is_zero()) ++k;
        q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (degree(q) <= 0) return out;
    if (degree(q) == 1) {
        out.push_back(f->neg(f->div(q[0], q[1])));
        return out;
    }
    std::optional<std::vector<Scalar>> more;
    switch (f->kind()) {
    case FieldKind::Rationals: more = rational_roots(f, q); break;
    case FieldKind::Prime: more = exhaustive_roots(f, q); break;
    case FieldKind::Extension: more = exhaustive_roots(f, q); break;
    case FieldKind::RationalFunction: more = function_field_roots(f, q); break;
    }
    if (!more) return std::nullopt;
    out.insert(out.end(), more->begin(), more->end());
    return out;
}

} // namespace algpres::poly
