#include "algpres/field.hpp"

#include "algpres/error.hpp"
#include "algpres/poly.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace algpres {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::unique_ptr<Field>>& registry() {
    static std::map<std::string, std::unique_ptr<Field>> r;
    return r;
}

bool valid_symbol(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool equal_polys(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// True when s has a '+' or '-' outside brackets other than a leading sign.
bool has_top_level_sum(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

bool has_top_level_op(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (depth == 0 && (c == '+' || c == '-' || c == '*' || c == '/')) return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Scalar

bool Scalar::is_zero() const {
    switch (rep_.index()) {
    case 1: return sgn(rational()) == 0;
    case 2: return residue() == 0;
    case 3: return fraction().num.empty();
    case 4: return coords().empty();
    default: return true;
    }
}

bool Scalar::is_one() const { return field_ && *this == field_->one(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_ || rep_.index() != o.rep_.index()) return false;
    switch (rep_.index()) {
    case 1: return rational() == o.rational();
    case 2: return residue() == o.residue();
    case 3: return equal_polys(fraction().num, o.fraction().num) &&
                   equal_polys(fraction().den, o.fraction().den);
    case 4: return equal_polys(coords(), o.coords());
    default: return true;
    }
}

Scalar Scalar::operator-() const {
    if (!field_) fail("MixedFields", "operation on an unbound scalar");
    return field_->neg(*this);
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (!field_) fail("MixedFields", "operation on an unbound scalar");
    *this = field_->add(*this, b);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
    if (!field_) fail("MixedFields", "operation on an unbound scalar");
    *this = field_->sub(*this, b);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
    if (!field_) fail("MixedFields", "operation on an unbound scalar");
    *this = field_->mul(*this, b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
    if (!field_) fail("MixedFields", "operation on an unbound scalar");
    *this = field_->div(*this, b);
    return *this;
}

Scalar Scalar::inverse() const {
    if (!field_) fail("MixedFields", "operation on an unbound scalar");
    return field_->inv(*this);
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar result = field_->one();
    Scalar base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string Scalar::str() const {
    switch (rep_.index()) {
    case 1: return rational().get_str();
    case 2: return std::to_string(residue());
    case 3: {
        const auto& fr = fraction();
        const std::string& var = field_->symbol();
        if (fr.num.empty()) return "0";
        std::string num = poly::to_string(fr.num, var);
        if (fr.den.empty()) return num;
        std::string den = poly::to_string(fr.den, var);
        if (has_top_level_sum(num)) num = "(" + num + ")";
        if (has_top_level_op(den)) den = "(" + den + ")";
        return num + "/" + den;
    }
    case 4: {
        std::string out = "[";
        const Poly& c = coords();
        for (std::size_t i = 0; i < field_->degree(); ++i) {
            if (i) out += ",";
            out += i < c.size() ? c[i].str() : "0";
        }
        return out + "]";
    }
    default: return "<unbound>";
    }
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.field()) fail("MixedFields", "operation on an unbound scalar");
    return a.field()->mul(a, b);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!a.field()) fail("MixedFields", "operation on an unbound scalar");
    return a.field()->div(a, b);
}

// ---------------------------------------------------------------- Field construction

FieldRef Field::intern(std::unique_ptr<Field> f) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& reg = registry();
    auto it = reg.find(f->key_);
    if (it != reg.end()) return it->second.get();
    FieldRef out = f.get();
    reg.emplace(f->key_, std::move(f));
    return out;
}

FieldRef Field::rationals() {
    static FieldRef q = [] {
        std::unique_ptr<Field> f(new Field());
        f->kind_ = FieldKind::Rationals;
        f->key_ = "Q";
        return intern(std::move(f));
    }();
    return q;
}

FieldRef Field::prime(std::uint64_t p) {
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62)) fail("NotPrime", "prime too large for residue arithmetic");
    std::unique_ptr<Field> f(new Field());
    f->kind_ = FieldKind::Prime;
    f->characteristic_ = p;
    f->key_ = "F" + std::to_string(p);
    return intern(std::move(f));
}

FieldRef Field::rational_functions(FieldRef base, const std::string& var) {
    if (!base) fail("InvalidField", "missing base field");
    if (!valid_symbol(var)) fail("InvalidField", "bad variable name '" + var + "'");
    for (FieldRef b = base; b; b = b->base_) {
        if (b->kind_ == FieldKind::RationalFunction)
            fail("InvalidField", "multivariate function fields are not supported");
        if (b->symbol_ == var) fail("InvalidField", "symbol '" + var + "' already used in tower");
    }
    if (base->depth() + 1 > 3) fail("InvalidField", "field tower deeper than 3");
    std::unique_ptr<Field> f(new Field());
    f->kind_ = FieldKind::RationalFunction;
    f->characteristic_ = base->characteristic_;
    f->base_ = base;
    f->symbol_ = var;
    f->key_ = base->key_ + "(" + var + ")";
    f->assumptions_ = base->assumptions_;
    return intern(std::move(f));
}

FieldRef Field::extension(FieldRef base, const Poly& minpoly, const std::string& gen) {
    if (!base) fail("InvalidField", "missing base field");
    if (!valid_symbol(gen)) fail("InvalidField", "bad generator name '" + gen + "'");
    for (FieldRef b = base; b; b = b->base_)
        if (b->symbol_ == gen) fail("InvalidField", "symbol '" + gen + "' already used in tower");
    if (base->depth() + 1 > 3) fail("InvalidField", "field tower deeper than 3");
    Poly m = minpoly;
    for (const auto& c : m)
        if (c.field() != base) fail("MixedFields", "minimal polynomial not over the base field");
    poly::trim(m);
    if (poly::degree(m) < 2) fail("InvalidField", "minimal polynomial must have degree >= 2");
    if (!m.back().is_one()) fail("InvalidField", "minimal polynomial must be monic");

    std::vector<std::string> assumptions = base->assumptions_;
    std::string mp = poly::to_string(m, gen);
    if (poly::degree(m) <= 3) {
        auto rts = poly::roots(base, m);
        if (!rts)
            assumptions.push_back("irreducibility of " + mp + " over " + base->key_ + " assumed");
        else if (!rts->empty())
            fail("ReducibleMinpoly", mp + " has the root " + rts->front().str());
    } else {
        assumptions.push_back("irreducibility of " + mp + " over " + base->key_ + " assumed");
    }

    std::unique_ptr<Field> f(new Field());
    f->kind_ = FieldKind::Extension;
    f->characteristic_ = base->characteristic_;
    f->base_ = base;
    f->symbol_ = gen;
    f->minpoly_ = m;
    f->key_ = base->key_ + "[" + gen + "]/(" + mp + ")";
    f->assumptions_ = std::move(assumptions);
    return intern(std::move(f));
}

int Field::depth() const { return base_ ? base_->depth() + 1 : 1; }

bool Field::is_finite() const {
    switch (kind_) {
    case FieldKind::Prime: return true;
    case FieldKind::Extension: return base_->is_finite();
    default: return false;
    }
}

std::optional<std::uint64_t> Field::cardinality() const {
    if (kind_ == FieldKind::Prime) return characteristic_;
    if (kind_ != FieldKind::Extension) return std::nullopt;
    auto q = base_->cardinality();
    if (!q) return std::nullopt;
    u128 n = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
        n *= *q;
        if (n >= ((u128)1 << 62)) return std::nullopt;
    }
    return static_cast<u64>(n);
}

bool Field::in_tower(FieldRef f) const {
    for (FieldRef b = this; b; b = b->base_)
        if (b == f) return true;
    return false;
}

void Field::check(const Scalar& a) const {
    if (a.field_ != this)
        fail("MixedFields", "scalar from " + (a.field_ ? a.field_->key_ : std::string("<unbound>")) +
                                " used in " + key_);
}

// ---------------------------------------------------------------- constants

Scalar Field::zero() const {
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(this, mpq_class(0));
    case FieldKind::Prime: return Scalar(this, u64{0});
    case FieldKind::RationalFunction: return Scalar(this, Scalar::Fraction{});
    case FieldKind::Extension: return Scalar(this, Scalar::Coords{});
    }
    return {};
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_mpz(mpz_class(std::to_string(v))); }

Scalar Field::from_mpz(const mpz_class& v) const {
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(this, mpq_class(v));
    case FieldKind::Prime: {
        mpz_class r = v % mpz_class(std::to_string(characteristic_));
        if (r < 0) r += mpz_class(std::to_string(characteristic_));
        return Scalar(this, static_cast<u64>(std::stoull(r.get_str())));
    }
    default: return lift(base_->from_mpz(v));
    }
}

Scalar Field::from_rational(const mpq_class& v) const {
    if (kind_ == FieldKind::Rationals) {
        mpq_class c = v;
        c.canonicalize();
        return Scalar(this, std::move(c));
    }
    return div(from_mpz(v.get_num()), from_mpz(v.get_den()));
}

Scalar Field::generator() const {
    Scalar g = base_ ? base_->one() : Scalar();
    switch (kind_) {
    case FieldKind::RationalFunction: return Scalar(this, Scalar::Fraction{{base_->zero(), g}, {}});
    case FieldKind::Extension: return make_coords({base_->zero(), g});
    default: fail("InvalidField", key_ + " has no generator");
    }
}

Scalar Field::lift(const Scalar& x) const {
    if (x.field_ == this) return x;
    if (!x.field_ || !base_ || !in_tower(x.field_))
        fail("WrongField", "cannot embed an element of " +
                               (x.field_ ? x.field_->key_ : std::string("<unbound>")) + " into " + key_);
    Scalar y = base_->lift(x);
    Poly p{y};
    poly::trim(p);
    if (kind_ == FieldKind::RationalFunction) return Scalar(this, Scalar::Fraction{std::move(p), {}});
    return Scalar(this, Scalar::Coords{std::move(p)});
}

Scalar Field::make_fraction(Poly num, Poly den) const {
    if (kind_ != FieldKind::RationalFunction) fail("WrongField", key_ + " is not a function field");
    for (const auto& c : num) base_->check(c);
    for (const auto& c : den) base_->check(c);
    poly::trim(num);
    poly::trim(den);
    if (den.empty()) fail("DivisionByZero", "zero denominator");
    if (num.empty()) return zero();
    if (den.size() > 1) {
        Poly g = poly::gcd(base_, num, den);
        if (g.size() > 1) {
            num = poly::divmod(base_, num, g).first;
            den = poly::divmod(base_, den, g).first;
        }
    }
    if (!den.back().is_one()) {
        Scalar lc = base_->inv(den.back());
        num = poly::scale(base_, num, lc);
        den = poly::scale(base_, den, lc);
    }
    if (den.size() == 1) den.clear();
    return Scalar(this, Scalar::Fraction{std::move(num), std::move(den)});
}

Scalar Field::make_coords(Poly coords) const {
    if (kind_ != FieldKind::Extension) fail("WrongField", key_ + " is not an extension field");
    for (const auto& c : coords) base_->check(c);
    poly::trim(coords);
    if (coords.size() > degree()) coords = poly::rem(base_, coords, minpoly_);
    return Scalar(this, Scalar::Coords{std::move(coords)});
}

Scalar Field::element(std::uint64_t index) const {
    if (kind_ == FieldKind::Prime) {
        if (index >= characteristic_) fail("OutOfRange", "element index out of range");
        return Scalar(this, index);
    }
    if (kind_ != FieldKind::Extension || !is_finite()) fail("InvalidField", key_ + " is not finite");
    u64 q = *base_->cardinality();
    Poly c;
    for (std::size_t i = 0; i < degree(); ++i) {
        c.push_back(base_->element(index % q));
        index /= q;
    }
    if (index) fail("OutOfRange", "element index out of range");
    return make_coords(std::move(c));
}

// ---------------------------------------------------------------- arithmetic

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(this, mpq_class(a.rational() + b.rational()));
    case FieldKind::Prime: {
        u64 s = a.residue() + b.residue();
        if (s >= characteristic_) s -= characteristic_;
        return Scalar(this, s);
    }
    case FieldKind::RationalFunction: {
        const auto& x = a.fraction();
        const auto& y = b.fraction();
        if (x.num.empty()) return b;
        if (y.num.empty()) return a;
        if (x.den.empty() && y.den.empty()) {
            Poly n = poly::add(base_, x.num, y.num);
            return Scalar(this, Scalar::Fraction{std::move(n), {}});
        }
        if (equal_polys(x.den, y.den)) return make_fraction(poly::add(base_, x.num, y.num), x.den);
        Poly dx = x.den.empty() ? Poly{base_->one()} : x.den;
        Poly dy = y.den.empty() ? Poly{base_->one()} : y.den;
        Poly n = poly::add(base_, poly::mul(base_, x.num, dy), poly::mul(base_, y.num, dx));
        return make_fraction(std::move(n), poly::mul(base_, dx, dy));
    }
    case FieldKind::Extension:
        return Scalar(this, Scalar::Coords{poly::add(base_, a.coords(), b.coords())});
    }
    return {};
}

Scalar Field::neg(const Scalar& a) const {
    check(a);
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(this, mpq_class(-a.rational()));
    case FieldKind::Prime: return Scalar(this, a.residue() ? characteristic_ - a.residue() : 0);
    case FieldKind::RationalFunction: {
        const auto& x = a.fraction();
        return Scalar(this, Scalar::Fraction{poly::scale(base_, x.num, base_->neg(base_->one())), x.den});
    }
    case FieldKind::Extension:
        return Scalar(this, Scalar::Coords{poly::scale(base_, a.coords(), base_->neg(base_->one()))});
    }
    return {};
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(this, mpq_class(a.rational() * b.rational()));
    case FieldKind::Prime: return Scalar(this, mulmod64(a.residue(), b.residue(), characteristic_));
    case FieldKind::RationalFunction: {
        const auto& x = a.fraction();
        const auto& y = b.fraction();
        if (x.num.empty() || y.num.empty()) return zero();
        if (x.den.empty() && y.den.empty())
            return Scalar(this, Scalar::Fraction{poly::mul(base_, x.num, y.num), {}});
        // Cross-cancel before multiplying so the gcd work stays small.
        Poly xn = x.num, yn = y.num;
        Poly xd = x.den.empty() ? Poly{base_->one()} : x.den;
        Poly yd = y.den.empty() ? Poly{base_->one()} : y.den;
        Poly g1 = poly::gcd(base_, xn, yd);
        if (g1.size() > 1) {
            xn = poly::divmod(base_, xn, g1).first;
            yd = poly::divmod(base_, yd, g1).first;
        }
        Poly g2 = poly::gcd(base_, yn, xd);
        if (g2.size() > 1) {
            yn = poly::divmod(base_, yn, g2).first;
            xd = poly::divmod(base_, xd, g2).first;
        }
        return make_fraction(poly::mul(base_, xn, yn), poly::mul(base_, xd, yd));
    }
    case FieldKind::Extension: {
        if (a.coords().empty() || b.coords().empty()) return zero();
        return Scalar(this, Scalar::Coords{poly::mulmod(base_, a.coords(), b.coords(), minpoly_)});
    }
    }
    return {};
}

Scalar Field::inv(const Scalar& a) const {
    check(a);
    if (a.is_zero()) fail("DivisionByZero", "division by zero in " + key_);
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(this, mpq_class(1 / a.rational()));
    case FieldKind::Prime: return Scalar(this, powmod64(a.residue(), characteristic_ - 2, characteristic_));
    case FieldKind::RationalFunction: {
        const auto& x = a.fraction();
        Poly d = x.den.empty() ? Poly{base_->one()} : x.den;
        return make_fraction(std::move(d), x.num);
    }
    case FieldKind::Extension: {
        auto [g, u, v] = poly::ext_gcd(base_, a.coords(), minpoly_);
        (void)v;
        if (poly::degree(g) != 0)
            fail("ReducibleMinpoly", "minimal polynomial of " + key_ + " is reducible");
        return make_coords(std::move(u));
    }
    }
    return {};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    if (b.is_zero()) fail("DivisionByZero", "division by zero in " + key_);
    if (kind_ == FieldKind::Rationals) return Scalar(this, mpq_class(a.rational() / b.rational()));
    return mul(a, inv(b));
}

// ---------------------------------------------------------------- misc

bool is_perfect_guarantee(FieldRef f) {
    return f && (f->kind() == FieldKind::Rationals || f->kind() == FieldKind::Prime);
}

Scalar derivation_delta(const Scalar& f) {
    FieldRef F = f.field();
    if (!F || F->kind() != FieldKind::Extension || F->degree() != 2 || F->characteristic() != 2 ||
        !F->minpoly()[1].is_zero())
        fail("WrongField", "derivation defined only on a quadratic extension x^2 - c in characteristic 2");
    const Poly& c = f.coords();
    return c.size() > 1 ? c[1] : F->base()->zero();
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Scalar run(FieldRef f) {
        Scalar v = expr(f);
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail("ParseError", "cannot parse coefficient \"" + s_ + "\" at " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr(FieldRef f) {
        Scalar v = term(f);
        for (;;) {
            if (eat('+')) v = f->add(v, term(f));
            else if (eat('-')) v = f->sub(v, term(f));
            else return v;
        }
    }

    Scalar term(FieldRef f) {
        Scalar v = unary(f);
        for (;;) {
            if (eat('*')) v = f->mul(v, unary(f));
            else if (eat('/')) v = f->div(v, unary(f));
            else return v;
        }
    }

    Scalar unary(FieldRef f) {
        if (eat('-')) return f->neg(unary(f));
        if (eat('+')) return unary(f);
        return power(f);
    }

    Scalar power(FieldRef f) {
        Scalar v = primary(f);
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected exponent");
            v = v.pow(std::stoull(s_.substr(start, pos_ - start)));
        }
        return v;
    }

    Scalar primary(FieldRef f) {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (eat('(')) {
            Scalar v = expr(f);
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (c == '[') {
            ++pos_;
            FieldRef ext = f;
            while (ext && ext->kind() != FieldKind::Extension) ext = ext->base();
            if (!ext) error("coordinate literal outside an extension field");
            Poly coords;
            if (!eat(']')) {
                do {
                    coords.push_back(expr(ext->base()));
                } while (eat(','));
                if (!eat(']')) error("expected ']'");
            }
            if (coords.size() > ext->degree()) error("too many coordinates");
            return f->lift(ext->make_coords(std::move(coords)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return f->from_mpz(mpz_class(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (FieldRef b = f; b; b = b->base())
                if (b->symbol() == name) return f->lift(b->generator());
            error("unknown symbol '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar Field::parse(const std::string& text) const { return Parser(text).run(this); }

} // namespace algpres
