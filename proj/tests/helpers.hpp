#pragma once
// Shared test utilities: deterministic randomness and small value generators.

#include <random>

#include "feuerbach/rational.hpp"
#include "feuerbach/tower.hpp"

namespace testutil {

using RNG = std::mt19937_64;

inline feuerbach::Rational random_rational(RNG& g, int max_abs = 9, int max_den = 4) {
    std::uniform_int_distribution<int> dn(-max_abs, max_abs);
    std::uniform_int_distribution<int> dd(1, max_den);
    return feuerbach::Rational(dn(g), dd(g));
}

inline feuerbach::FieldElem random_elem(RNG& g, const feuerbach::TowerPtr& ctx,
                                        int max_abs = 9, int max_den = 4) {
    std::vector<feuerbach::Rational> c(feuerbach::tower_dim(ctx));
    for (auto& x : c) x = random_rational(g, max_abs, max_den);
    return feuerbach::FieldElem(ctx, std::move(c));
}

inline feuerbach::FieldElem random_nonzero(RNG& g, const feuerbach::TowerPtr& ctx,
                                           int max_abs = 9, int max_den = 4) {
    for (;;) {
        auto x = random_elem(g, ctx, max_abs, max_den);
        if (!x.is_zero()) return x;
    }
}

} // namespace testutil
