#pragma once
// Text form for tower elements.
//
// Grammar (whitespace insignificant):
//   element := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := integer | 'sqrt' '(' element ')' | '(' element ')'
//   integer := ['-'] digit+
//
// Rendering puts an element over a single positive denominator with integer
// numerator coefficients, e.g. "(-79+5*sqrt(13))/102". Parsing evaluates the
// grammar exactly, growing a tower as new radicals appear, so the printed
// form always parses back to the same value.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "tower.hpp"

namespace feuerbach {

namespace detail {

inline std::string render_impl(const FieldElem& x);

inline std::string sqrt_token(const Tower* t) {
    return "sqrt(" + render_impl(t->radicand) + ")";
}

// Monomial for coefficient index i: the product of the radicals whose
// levels correspond to the set bits of i, lowest level first.
inline std::string monomial_token(const TowerPtr& ctx, size_t i) {
    std::vector<const Tower*> chain(static_cast<size_t>(tower_level(ctx)));
    const Tower* t = ctx.get();
    while (t) {
        chain[static_cast<size_t>(t->level) - 1] = t;
        t = t->parent.get();
    }
    std::string out;
    for (size_t b = 0; b < chain.size(); ++b) {
        if (!(i & (size_t(1) << b))) continue;
        if (!out.empty()) out += "*";
        out += sqrt_token(chain[b]);
    }
    return out;
}

inline std::string render_impl(const FieldElem& x) {
    if (x.is_zero()) return "0";

    Integer denom = 1;
    for (const Rational& c : x.coeff())
        if (c != 0) denom = lcm(denom, den(c));

    std::string numer;
    int terms = 0;
    for (size_t i = 0; i < x.coeff().size(); ++i) {
        const Rational& c = x.coeff()[i];
        if (c == 0) continue;
        Integer n = num(c) * (denom / den(c));
        std::string mono = monomial_token(x.ctx(), i);
        std::string term;
        if (mono.empty()) {
            term = n.str();
        } else if (n == 1) {
            term = mono;
        } else if (n == -1) {
            term = "-" + mono;
        } else {
            term = n.str() + "*" + mono;
        }
        if (terms > 0 && term[0] != '-') numer += "+";
        numer += term;
        ++terms;
    }

    if (denom == 1) return numer;
    if (terms > 1) numer = "(" + numer + ")";
    return numer + "/" + denom.str();
}

} // namespace detail

inline std::string render(const FieldElem& x) { return detail::render_impl(x); }

// Evaluating parser. One parser instance accumulates a single tower across
// calls, so a batch of related inputs ends up in one shared context.
class ElemParser {
public:
    ElemParser() = default;
    explicit ElemParser(TowerPtr start) : tower_(std::move(start)) {}

    const TowerPtr& tower() const noexcept { return tower_; }

    FieldElem parse(std::string_view text) {
        text_ = text;
        pos_ = 0;
        FieldElem v = element();
        skip_ws();
        if (pos_ != text_.size()) reject("trailing input");
        return lift(v, tower_);
    }

private:
    TowerPtr tower_;
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void reject(const std::string& what) {
        fail(ErrorCode::parse_error,
             what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElem element() {
        FieldElem v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else break;
        }
        return v;
    }

    FieldElem term() {
        FieldElem v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                FieldElem d = factor();
                if (d.is_zero()) reject("division by zero");
                v = v / d;
            } else {
                break;
            }
        }
        return v;
    }

    FieldElem factor() {
        skip_ws();
        if (pos_ >= text_.size()) reject("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FieldElem v = element();
            if (!eat(')')) reject("expected ')'");
            return v;
        }
        if (c == 's') {
            if (text_.substr(pos_, 4) != "sqrt") reject("unexpected token");
            pos_ += 4;
            if (!eat('(')) reject("expected '(' after sqrt");
            FieldElem arg = element();
            if (!eat(')')) reject("expected ')'");
            arg = lift(arg, tower_);
            if (sign_of(arg) < 0) reject("negative radicand under sqrt");
            auto [ext, root] = require_sqrt(tower_, arg);
            tower_ = ext;
            return root;
        }
        if (c == '-') {
            // Signed integers are covered by the integer rule; a minus in
            // front of anything else negates the factor.
            if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
                return integer();
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer();
        reject("unexpected character");
    }

    FieldElem integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        size_t digits_begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits_begin) {
            pos_ = start;
            reject("expected an integer");
        }
        Integer n(std::string(text_.substr(digits_begin, pos_ - digits_begin)));
        if (neg) n = -n;
        return FieldElem(n);
    }
};

} // namespace feuerbach
