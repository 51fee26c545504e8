#include "algpres/bimodule.hpp"

#include "algpres/error.hpp"

namespace algpres {

namespace {

Matrix combine(FieldRef f, std::size_t n, const std::vector<Matrix>& mats, const SparseVec& coeffs) {
    Matrix out(f, n, n);
    for (const auto& e : coeffs)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += e.value * mats[e.index].at(r, c);
    return out;
}

Matrix combine(FieldRef f, std::size_t n, const std::vector<Matrix>& mats, const Vec& coeffs) {
    return combine(f, n, mats, to_sparse(coeffs));
}

std::optional<std::string> action_failure(const FDAlgebra& alg, const std::vector<Matrix>& act, std::size_t n,
                                          bool right, const char* side) {
    FieldRef f = alg.field();
    if (act.size() != alg.dim()) return std::string(side) + " action has the wrong number of matrices";
    for (const auto& m : act)
        if (m.rows() != n || m.cols() != n || (n && m.field() != f))
            return std::string(side) + " action matrix has the wrong shape";
    if (combine(f, n, act, alg.one()) != Matrix::identity(f, n))
        return std::string("identity does not act trivially on the ") + side;
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            Matrix lhs = combine(f, n, act, alg.basis_product(a, b));
            Matrix rhs = right ? act[b] * act[a] : act[a] * act[b];
            if (lhs != rhs)
                return std::string(side) + " action is not multiplicative on " + alg.labels()[a] + ", " +
                       alg.labels()[b];
        }
    return std::nullopt;
}

} // namespace

std::optional<std::string> module_failure(const BimoduleData& m) {
    if (auto why = action_failure(m.left_algebra, m.left_action, m.dim, false, "left")) return why;
    if (auto why = action_failure(m.right_algebra, m.right_action, m.dim, true, "right")) return why;
    for (std::size_t a = 0; a < m.left_action.size(); ++a)
        for (std::size_t b = 0; b < m.right_action.size(); ++b)
            if (m.left_action[a] * m.right_action[b] != m.right_action[b] * m.left_action[a])
                return "left and right actions do not commute on " + m.left_algebra.labels()[a] + ", " +
                       m.right_algebra.labels()[b];
    return std::nullopt;
}

std::vector<Matrix> enveloping_action(const BimoduleData& m) {
    std::vector<Matrix> out;
    for (const auto& l : m.left_action)
        for (const auto& r : m.right_action) out.push_back(l * r);
    return out;
}

SubspaceBasis generated_submodule(const std::vector<Matrix>& action, const SubspaceBasis& start,
                                  const std::vector<Vec>& gens) {
    SubspaceBasis out = start;
    std::vector<Vec> queue = gens;
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        if (!out.insert(v)) continue;
        for (const auto& a : action) queue.push_back(a.apply(v));
    }
    return out;
}

Scalar random_coefficient(FieldRef f, std::mt19937_64& rng) {
    switch (f->kind()) {
    case FieldKind::Rationals: return f->from_int(static_cast<long long>(rng() % 9) - 4);
    case FieldKind::Prime: return f->from_int(static_cast<long long>(rng() % f->characteristic()));
    case FieldKind::RationalFunction: {
        Poly num;
        for (int i = 0; i < 3; ++i) num.push_back(random_coefficient(f->base(), rng));
        return f->make_fraction(num, {f->base()->one()});
    }
    case FieldKind::Extension: {
        Poly c;
        for (std::size_t i = 0; i < f->degree(); ++i) c.push_back(random_coefficient(f->base(), rng));
        return f->make_coords(c);
    }
    }
    return f->zero();
}

namespace {

// E.x is already a submodule, so its span is that of the action images.
std::size_t grown_dim(const std::vector<Matrix>& action, const SubspaceBasis& s, const Vec& x) {
    SubspaceBasis t = s;
    for (const auto& a : action) t.insert(a.apply(x));
    return t.dim();
}

std::vector<Vec> peel(const std::vector<Matrix>& action, const SubspaceBasis& base, std::size_t n,
                      const std::vector<Vec>& fixed, std::mt19937_64* rng) {
    FieldRef f = base.field();
    SubspaceBasis s = base;
    std::vector<Vec> gens;
    while (s.dim() < n) {
        std::vector<Vec> candidates = fixed;
        if (rng) {
            for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit_vec(f, n, i));
            for (int k = 0; k < 64; ++k) {
                Vec v(n, f->zero());
                for (auto& c : v) c = random_coefficient(f, *rng);
                candidates.push_back(std::move(v));
            }
        }
        const Vec* best = nullptr;
        std::size_t best_dim = s.dim();
        for (const auto& x : candidates) {
            std::size_t d = grown_dim(action, s, x);
            if (d > best_dim) {
                best_dim = d;
                best = &x;
            }
        }
        if (!best) fail("InternalError", "no candidate enlarges the submodule");
        gens.push_back(*best);
        for (const auto& a : action) s.insert(a.apply(*best));
    }
    return gens;
}

} // namespace

RankResult bimodule_min_generators(const BimoduleData& m, std::uint64_t seed, std::uint64_t exhaustive_limit) {
    if (auto why = module_failure(m)) fail("NotAModule", *why);
    RankResult out;
    FieldRef f = m.left_algebra.field();
    std::size_t n = m.dim;
    if (n == 0) {
        out.exhaustive = out.generators_verified = true;
        return out;
    }
    auto action = enveloping_action(m);
    SubspaceBasis rad_l = m.left_radical ? *m.left_radical : radical(m.left_algebra).basis;
    SubspaceBasis rad_r = m.right_radical ? *m.right_radical : radical(m.right_algebra).basis;
    SubspaceBasis rad_e = tensor_radical(m.left_algebra, rad_l, m.right_algebra, rad_r);

    // rad(E) m, a submodule because rad(E) is an ideal.
    SubspaceBasis base(f, n);
    for (const auto& v : rad_e.vectors()) {
        Matrix a = combine(f, n, action, v);
        for (std::size_t j = 0; j < n && base.dim() < n; ++j) base.insert(a.column(j));
    }

    auto card = f->cardinality();
    std::uint64_t total = 1;
    bool small = card.has_value();
    for (std::size_t i = 0; small && i < n; ++i) {
        total *= *card;
        small = total <= exhaustive_limit;
    }
    if (small) {
        std::vector<Vec> all;
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            Vec v;
            std::uint64_t r = idx;
            for (std::size_t i = 0; i < n; ++i) {
                v.push_back(f->element(r % *card));
                r /= *card;
            }
            all.push_back(std::move(v));
        }
        out.generators = peel(action, base, n, all, nullptr);
        out.exhaustive = true;
        out.seed_ranks = {out.generators.size()};
    } else {
        for (std::uint64_t s = 0; s < 8; ++s) {
            std::mt19937_64 rng(seed * 8 + s);
            auto gens = peel(action, base, n, {}, &rng);
            out.seed_ranks.push_back(gens.size());
            if (out.generators.empty() || gens.size() < out.generators.size()) out.generators = std::move(gens);
        }
    }
    out.rank = out.generators.size();
    out.generators_verified = generated_submodule(action, SubspaceBasis(f, n), out.generators).dim() == n;
    if (!out.generators_verified) fail("InternalError", "peeled generators do not generate the bimodule");
    return out;
}

} // namespace algpres
