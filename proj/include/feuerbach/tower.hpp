#pragma once
// Ordered field towers Q(sqrt(r1))(sqrt(r2))... with exact arithmetic,
// exact sign determination, and in-tower square root extraction.
//
// An element of a level-k tower is a dense vector of 2^k rational
// coefficients over the monomial basis: index i carries the product of
// sqrt(r_j) over the set bits j of i. The low half of the vector is the
// embedding of the parent tower, so lifting along the ancestor chain is a
// zero-pad and arithmetic recurses on halves.

#include <cassert>
#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace feuerbach {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

inline int tower_level(const TowerPtr& t);

namespace detail {

using CSpan = std::span<const Rational>;

inline bool span_is_zero(CSpan a) {
    for (const Rational& x : a)
        if (x != 0) return false;
    return true;
}

inline std::vector<Rational> span_add(CSpan a, CSpan b) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline std::vector<Rational> span_sub(CSpan a, CSpan b) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline void span_scale(std::vector<Rational>& a, const Rational& c) {
    for (Rational& x : a) x *= c;
}

std::vector<Rational> span_mul(const Tower* t, CSpan a, CSpan b);
std::vector<Rational> span_inv(const Tower* t, CSpan a);
int span_sign(const Tower* t, CSpan a);
std::optional<std::vector<Rational>> span_sqrt(const Tower* t, CSpan a);
double span_double(const Tower* t, CSpan a);

} // namespace detail

class FieldElem {
public:
    FieldElem() : coeff_(1, Rational(0)) {}
    FieldElem(int v) : coeff_(1, Rational(v)) {}
    FieldElem(const Integer& v) : coeff_(1, Rational(v)) {}
    FieldElem(Rational v) : coeff_(1, std::move(v)) {}
    FieldElem(TowerPtr ctx, std::vector<Rational> coeff)
        : ctx_(std::move(ctx)), coeff_(std::move(coeff)) {
        assert(coeff_.size() == (size_t(1) << tower_level(ctx_)));
    }

    static FieldElem zero(const TowerPtr& ctx) {
        return FieldElem(ctx, std::vector<Rational>(size_t(1) << tower_level(ctx), Rational(0)));
    }
    static FieldElem rational_in(const TowerPtr& ctx, const Rational& q) {
        auto z = zero(ctx);
        z.coeff_[0] = q;
        return z;
    }

    const TowerPtr& ctx() const noexcept { return ctx_; }
    const std::vector<Rational>& coeff() const noexcept { return coeff_; }

    bool is_zero() const { return detail::span_is_zero(coeff_); }

    // True when every non-constant coordinate vanishes.
    bool is_rational_value() const {
        for (size_t i = 1; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        assert(is_rational_value());
        return coeff_[0];
    }

    FieldElem operator-() const {
        FieldElem r = *this;
        for (Rational& x : r.coeff_) x = -x;
        return r;
    }

private:
    TowerPtr ctx_;                 // nullptr means Q
    std::vector<Rational> coeff_;  // size 2^level

    friend FieldElem lift(const FieldElem&, const TowerPtr&);
};

class Tower {
public:
    Tower(TowerPtr parent_in, FieldElem radicand_in)
        : parent(std::move(parent_in)),
          radicand(std::move(radicand_in)),
          level(tower_level(parent) + 1) {
        assert(radicand.ctx().get() == parent.get());
        if (radicand.is_rational_value())
            rational_radicand = radicand.rational_value();
    }

    TowerPtr parent;
    FieldElem radicand;  // element of the parent tower
    int level;
    std::optional<Rational> rational_radicand;
};

inline int tower_level(const TowerPtr& t) { return t ? t->level : 0; }
inline size_t tower_dim(const TowerPtr& t) { return size_t(1) << tower_level(t); }

// True when anc is the same tower as t or appears on t's parent chain.
inline bool in_ancestry(const Tower* anc, const Tower* t) {
    while (t != anc) {
        if (!t) return false;
        t = t->parent.get();
    }
    return true;
}

inline FieldElem lift(const FieldElem& x, const TowerPtr& ctx) {
    if (x.ctx().get() == ctx.get()) return x;
    if (!in_ancestry(x.ctx().get(), ctx.get()))
        fail(ErrorCode::ctx_mismatch, "element does not embed into the target tower");
    std::vector<Rational> c(tower_dim(ctx), Rational(0));
    for (size_t i = 0; i < x.coeff().size(); ++i) c[i] = x.coeff()[i];
    return FieldElem(ctx, std::move(c));
}

// Picks the deeper of the two contexts, requiring the shallower to sit on
// its ancestor chain.
inline const TowerPtr& common_ctx(const FieldElem& a, const FieldElem& b) {
    if (a.ctx().get() == b.ctx().get()) return a.ctx();
    if (tower_level(a.ctx()) >= tower_level(b.ctx())) {
        if (!in_ancestry(b.ctx().get(), a.ctx().get()))
            fail(ErrorCode::ctx_mismatch, "elements live in unrelated towers");
        return a.ctx();
    }
    if (!in_ancestry(a.ctx().get(), b.ctx().get()))
        fail(ErrorCode::ctx_mismatch, "elements live in unrelated towers");
    return b.ctx();
}

namespace detail {

// (a0 + a1 s)(b0 + b1 s) with s^2 = r: three half-size products, Karatsuba
// style, plus a multiply by r that degenerates to a scale for the common
// case of a rational radicand.
inline std::vector<Rational> span_mul(const Tower* t, CSpan a, CSpan b) {
    if (!t) return {a[0] * b[0]};
    const size_t h = a.size() / 2;
    const Tower* p = t->parent.get();
    CSpan a0 = a.first(h), a1 = a.last(h);
    CSpan b0 = b.first(h), b1 = b.last(h);

    std::vector<Rational> m1 = span_mul(p, a0, b0);
    std::vector<Rational> m2 = span_mul(p, a1, b1);
    std::vector<Rational> sa = span_add(a0, a1);
    std::vector<Rational> sb = span_add(b0, b1);
    std::vector<Rational> m3 = span_mul(p, sa, sb);
    for (size_t i = 0; i < h; ++i) m3[i] -= m1[i] + m2[i];

    std::vector<Rational> low;
    if (t->rational_radicand) {
        span_scale(m2, *t->rational_radicand);
        low = span_add(m1, m2);
    } else {
        std::vector<Rational> m2r = span_mul(p, m2, t->radicand.coeff());
        low = span_add(m1, m2r);
    }

    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < h; ++i) {
        out[i] = std::move(low[i]);
        out[h + i] = std::move(m3[i]);
    }
    return out;
}

inline std::vector<Rational> span_mul_radicand(const Tower* t, std::vector<Rational> x) {
    // x * r where r is the radicand adjoined at level t (x in parent of t).
    if (t->rational_radicand) {
        span_scale(x, *t->rational_radicand);
        return x;
    }
    return span_mul(t->parent.get(), x, t->radicand.coeff());
}

inline std::vector<Rational> span_inv(const Tower* t, CSpan a) {
    if (span_is_zero(a)) fail(ErrorCode::division_by_zero, "inverse of zero");
    if (!t) return {Rational(1) / a[0]};
    const size_t h = a.size() / 2;
    const Tower* p = t->parent.get();
    CSpan a0 = a.first(h), a1 = a.last(h);

    if (span_is_zero(a1)) {
        std::vector<Rational> out(a.size(), Rational(0));
        std::vector<Rational> i0 = span_inv(p, a0);
        for (size_t i = 0; i < h; ++i) out[i] = std::move(i0[i]);
        return out;
    }
    // 1/(a0 + a1 s) = (a0 - a1 s) / (a0^2 - a1^2 r); the norm cannot vanish
    // because r is not a square in the parent tower.
    std::vector<Rational> n = span_mul(p, a0, a0);
    std::vector<Rational> a1r = span_mul_radicand(t, span_mul(p, a1, a1));
    for (size_t i = 0; i < h; ++i) n[i] -= a1r[i];
    std::vector<Rational> ni = span_inv(p, n);
    std::vector<Rational> low = span_mul(p, a0, ni);
    std::vector<Rational> high = span_mul(p, a1, ni);
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < h; ++i) {
        out[i] = std::move(low[i]);
        out[h + i] = -high[i];
    }
    return out;
}

inline int span_sign(const Tower* t, CSpan a) {
    if (!t) return sign_rat(a[0]);
    const size_t h = a.size() / 2;
    const Tower* p = t->parent.get();
    CSpan a0 = a.first(h), a1 = a.last(h);
    const int s0 = span_sign(p, a0);
    const int s1 = span_sign(p, a1);
    if (s1 == 0) return s0;
    if (s0 == 0) return s1;
    if (s0 == s1) return s0;
    // Opposite signs: a0 + a1 s has the sign of a0 exactly when
    // a0^2 > a1^2 r, i.e. when the norm a0^2 - a1^2 r is positive.
    std::vector<Rational> n = span_mul(p, a0, a0);
    std::vector<Rational> a1r = span_mul_radicand(t, span_mul(p, a1, a1));
    for (size_t i = 0; i < h; ++i) n[i] -= a1r[i];
    const int sn = span_sign(p, n);
    assert(sn != 0);
    return s0 * sn;
}

inline std::optional<std::vector<Rational>> span_sqrt(const Tower* t, CSpan x) {
    if (!t) {
        auto r = exact_rat_sqrt(x[0]);
        if (!r) return std::nullopt;
        return std::vector<Rational>{*r};
    }
    const size_t h = x.size() / 2;
    const Tower* p = t->parent.get();
    CSpan x0 = x.first(h), x1 = x.last(h);

    auto assemble = [&](std::vector<Rational> low, std::vector<Rational> high) {
        std::vector<Rational> out(x.size());
        for (size_t i = 0; i < h; ++i) {
            out[i] = std::move(low[i]);
            out[h + i] = std::move(high[i]);
        }
        return out;
    };

    if (span_is_zero(x1)) {
        if (auto u = span_sqrt(p, x0))
            return assemble(std::move(*u), std::vector<Rational>(h, Rational(0)));
        // x0 = v^2 r gives sqrt = v s.
        std::vector<Rational> q = span_mul(p, x0, span_inv(p, t->radicand.coeff()));
        if (auto v = span_sqrt(p, q))
            return assemble(std::vector<Rational>(h, Rational(0)), std::move(*v));
        return std::nullopt;
    }

    // x = (u + v s)^2 forces d = x0^2 - x1^2 r = (u^2 - v^2 r)^2, then
    // u^2 = (x0 +- sqrt(d)) / 2 and v = x1 / (2u).
    std::vector<Rational> d = span_mul(p, x0, x0);
    std::vector<Rational> x1r = span_mul_radicand(t, span_mul(p, x1, x1));
    for (size_t i = 0; i < h; ++i) d[i] -= x1r[i];
    auto e = span_sqrt(p, d);
    if (!e) return std::nullopt;

    for (int branch = 0; branch < 2; ++branch) {
        std::vector<Rational> u2(h);
        for (size_t i = 0; i < h; ++i) {
            Rational ei = branch == 0 ? (*e)[i] : -(*e)[i];
            u2[i] = (x0[i] + ei) / 2;
        }
        if (span_is_zero(u2)) continue;
        auto u = span_sqrt(p, u2);
        if (!u || span_is_zero(*u)) continue;
        std::vector<Rational> two_u = *u;
        for (Rational& c : two_u) c *= 2;
        std::vector<Rational> v = span_mul(p, x1, span_inv(p, two_u));
        std::vector<Rational> cand = assemble(std::move(*u), std::move(v));
        std::vector<Rational> check = span_mul(t, cand, cand);
        bool ok = true;
        for (size_t i = 0; i < x.size(); ++i)
            if (check[i] != x[i]) { ok = false; break; }
        if (ok) return cand;
    }
    return std::nullopt;
}

inline double span_double(const Tower* t, CSpan a) {
    if (!t) return to_double(a[0]);
    const size_t h = a.size() / 2;
    const Tower* p = t->parent.get();
    const double r = span_double(p, t->radicand.coeff());
    return span_double(p, a.first(h)) + span_double(p, a.last(h)) * std::sqrt(r);
}

} // namespace detail

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const TowerPtr& ctx = common_ctx(a, b);
    FieldElem la = lift(a, ctx), lb = lift(b, ctx);
    return FieldElem(ctx, detail::span_add(la.coeff(), lb.coeff()));
}

inline FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const TowerPtr& ctx = common_ctx(a, b);
    FieldElem la = lift(a, ctx), lb = lift(b, ctx);
    return FieldElem(ctx, detail::span_sub(la.coeff(), lb.coeff()));
}

inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const TowerPtr& ctx = common_ctx(a, b);
    FieldElem la = lift(a, ctx), lb = lift(b, ctx);
    return FieldElem(ctx, detail::span_mul(ctx.get(), la.coeff(), lb.coeff()));
}

inline FieldElem inv(const FieldElem& a) {
    return FieldElem(a.ctx(), detail::span_inv(a.ctx().get(), a.coeff()));
}

inline FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    const TowerPtr& ctx = common_ctx(a, b);
    FieldElem la = lift(a, ctx), lb = lift(b, ctx);
    return FieldElem(ctx, detail::span_mul(ctx.get(), la.coeff(),
                                           detail::span_inv(ctx.get(), lb.coeff())));
}

inline FieldElem& operator+=(FieldElem& a, const FieldElem& b) { return a = a + b; }
inline FieldElem& operator-=(FieldElem& a, const FieldElem& b) { return a = a - b; }
inline FieldElem& operator*=(FieldElem& a, const FieldElem& b) { return a = a * b; }
inline FieldElem& operator/=(FieldElem& a, const FieldElem& b) { return a = a / b; }

inline bool operator==(const FieldElem& a, const FieldElem& b) {
    const TowerPtr& ctx = common_ctx(a, b);
    return lift(a, ctx).coeff() == lift(b, ctx).coeff();
}
inline bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

inline int sign_of(const FieldElem& a) {
    return detail::span_sign(a.ctx().get(), a.coeff());
}

inline int compare(const FieldElem& a, const FieldElem& b) { return sign_of(a - b); }

inline bool operator<(const FieldElem& a, const FieldElem& b) { return compare(a, b) < 0; }
inline bool operator<=(const FieldElem& a, const FieldElem& b) { return compare(a, b) <= 0; }
inline bool operator>(const FieldElem& a, const FieldElem& b) { return compare(a, b) > 0; }
inline bool operator>=(const FieldElem& a, const FieldElem& b) { return compare(a, b) >= 0; }

inline FieldElem abs(const FieldElem& a) { return sign_of(a) < 0 ? -a : a; }

inline FieldElem square(const FieldElem& a) { return a * a; }

inline double to_double(const FieldElem& a) {
    return detail::span_double(a.ctx().get(), a.coeff());
}

// Nonnegative square root inside the element's own tower, if one exists.
inline std::optional<FieldElem> sqrt_in_tower(const FieldElem& x) {
    auto c = detail::span_sqrt(x.ctx().get(), x.coeff());
    if (!c) return std::nullopt;
    FieldElem r(x.ctx(), std::move(*c));
    if (sign_of(r) < 0) r = -r;
    return r;
}

// Extends ctx by sqrt(x). The stored radicand is canonicalized: rational
// square content is pulled out of x, and a plain rational radicand is
// reduced to a square-free-split integer. Returns the new tower together
// with the element representing sqrt(x) in it.
inline std::pair<TowerPtr, FieldElem> adjoin_sqrt(const TowerPtr& ctx, const FieldElem& x_in) {
    FieldElem x = lift(x_in, ctx);
    const int s = sign_of(x);
    if (s < 0) fail(ErrorCode::negative_radicand, "cannot adjoin the square root of a negative element");
    if (s == 0) fail(ErrorCode::already_square, "zero is already a square");
    if (sqrt_in_tower(x)) fail(ErrorCode::already_square, "element already has a square root in the tower");

    Rational scale(1);
    FieldElem radicand = x;
    if (x.is_rational_value()) {
        const Rational& q = x.rational_value();
        // sqrt(p/q) = sqrt(p q) / q; split p q = s^2 m with m square-free.
        Integer pq = num(q) * den(q);
        auto [sq, m] = square_free_split(pq);
        scale = Rational(sq, den(q));
        radicand = FieldElem::rational_in(ctx, Rational(m));
    } else {
        Rational c = rational_content(x.coeff());
        Rational sp = square_part(c);
        // Pull the denominator square-free part across so the radicand has
        // integral content.
        Integer md = square_free_split(den(c)).second;
        Rational f = sp / Rational(md);
        scale = f;
        FieldElem inv_f2 = FieldElem(Rational(1) / (f * f));
        radicand = x * inv_f2;
    }

    TowerPtr ext = std::make_shared<Tower>(ctx, radicand);
    std::vector<Rational> c(tower_dim(ext), Rational(0));
    c[tower_dim(ctx)] = scale;
    return {ext, FieldElem(ext, std::move(c))};
}

// sqrt(x) in ctx when it exists there, otherwise adjoins it.
inline std::pair<TowerPtr, FieldElem> require_sqrt(const TowerPtr& ctx, const FieldElem& x_in) {
    FieldElem x = lift(x_in, ctx);
    if (sign_of(x) < 0)
        fail(ErrorCode::negative_radicand, "square root of a negative element");
    if (auto r = sqrt_in_tower(x)) return {ctx, *r};
    return adjoin_sqrt(ctx, x);
}

// Re-expresses x in a structurally unrelated tower when all the radicals it
// uses have square roots there. Used to compare values across independently
// grown towers.
inline std::optional<FieldElem> transfer_to(const FieldElem& x, const TowerPtr& target) {
    if (x.is_rational_value())
        return FieldElem::rational_in(target, x.rational_value());
    const Tower* t = x.ctx().get();
    auto r_moved = transfer_to(t->radicand, target);
    if (!r_moved) return std::nullopt;
    auto s = sqrt_in_tower(*r_moved);
    if (!s) return std::nullopt;
    const size_t h = x.coeff().size() / 2;
    FieldElem low(t->parent, std::vector<Rational>(x.coeff().begin(), x.coeff().begin() + h));
    FieldElem high(t->parent, std::vector<Rational>(x.coeff().begin() + h, x.coeff().end()));
    auto lm = transfer_to(low, target);
    auto hm = transfer_to(high, target);
    if (!lm || !hm) return std::nullopt;
    return *lm + *hm * *s;
}

namespace detail {

// Exact floor of a nonnegative element: a double guess narrows the search,
// bisection with exact sign tests settles it.
inline Integer floor_nonneg(const FieldElem& m) {
    auto cmp = [&](const Integer& n) { return sign_of(m - FieldElem(n)); };
    Integer g(std::floor(std::max(0.0, to_double(m))));
    if (g >= 0 && cmp(g) >= 0 && cmp(g + 1) < 0) return g;
    if (g > 0 && cmp(g - 1) >= 0 && cmp(g) < 0) return g - 1;
    if (g >= 0 && cmp(g + 1) >= 0 && cmp(g + 2) < 0) return g + 1;
    Integer lo = 0, hi = 1;
    while (cmp(hi) >= 0) hi <<= 1;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) >> 1;
        if (cmp(mid) >= 0) lo = mid;
        else hi = mid;
    }
    return lo;
}

} // namespace detail

// Exact decimal rendering with the requested number of fractional digits,
// rounding half away from zero.
inline std::string approx(const FieldElem& x, int digits) {
    assert(digits >= 0);
    const int s = sign_of(x);
    FieldElem ax = s < 0 ? -x : x;
    FieldElem scaled = ax * FieldElem(pow10_rat(digits));
    Integer n = detail::floor_nonneg(scaled);
    // Round up when the fractional part is at least one half.
    FieldElem frac2 = (scaled - FieldElem(n)) * FieldElem(2) - FieldElem(1);
    if (sign_of(frac2) >= 0) ++n;
    std::string body = n.str();
    if (digits > 0) {
        if (body.size() <= static_cast<size_t>(digits))
            body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<size_t>(digits), ".");
    }
    if (s < 0 && n != 0) body.insert(0, "-");
    return body;
}

// Positive rational content across the coefficients of a set of elements.
inline Rational content_of(std::span<const FieldElem> xs) {
    Integer g = 0, l = 1;
    for (const FieldElem& x : xs) {
        for (const Rational& c : x.coeff()) {
            if (c == 0) continue;
            g = gcd(g, abs(num(c)));
            l = lcm(l, den(c));
        }
    }
    if (g == 0) return 0;
    return Rational(g, l);
}

// Divides the set by its positive content, leaving coprime integer
// coefficients. Signs are preserved; an all-zero set is left alone.
inline void divide_content(std::span<FieldElem> xs) {
    Rational c = content_of(xs);
    if (c == 0 || c == 1) return;
    FieldElem f{Rational(1) / c};
    for (FieldElem& x : xs) x = x * f;
}

} // namespace feuerbach
