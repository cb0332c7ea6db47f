#ifndef QDK_PARSE_HPP
#define QDK_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>

#include "qdk/hscript.hpp"

namespace qdk {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p)
        : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

/// Recursive-descent parser for operator words over ScriptH.
///
/// Grammar: expr := term (('+'|'-') term)*
///          term := factor (('*'|'/') factor)*
///          factor := '-' factor | power
///          power := atom ('^' ('-')? integer)?
///          atom := integer | 'q' | 't' | 's' | 'd' '(' integer ')'
///                | 'D' '(' integer ')' | '(' expr ')'
/// with s = sigma, d(i) = delta^(i), D(n) = d_n. Division and negative powers
/// are only defined when the operand is scalar (a rational function).
class ExprParser {
public:
    ExprParser(FieldPtr f, std::string src) : field_(std::move(f)), src_(std::move(src)) {}

    ScriptHElem parse() {
        ScriptHElem e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected input", pos_);
        return e;
    }

private:
    FieldPtr field_;
    std::string src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected integer", start);
        if (pos_ - start > 9) throw ParseError("integer too large", start);
        return std::stol(src_.substr(start, pos_ - start));
    }

    static bool is_scalar(const ScriptHElem& e) {
        return e.is_zero() ||
               (e.terms().size() == 1 && e.terms().begin()->first == ScriptHElem::Key{0, 0});
    }
    RatFunc scalar_of(const ScriptHElem& e, std::size_t pos) const {
        if (e.is_zero()) return RatFunc(field_);
        if (!is_scalar(e)) throw ParseError("operand must be scalar", pos);
        return e.terms().begin()->second;
    }

    ScriptHElem expr() {
        ScriptHElem e = term();
        for (;;) {
            if (eat('+')) e = e + term();
            else if (eat('-')) e = e - term();
            else return e;
        }
    }

    ScriptHElem term() {
        ScriptHElem e = factor();
        for (;;) {
            if (eat('*')) {
                e = e * factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RatFunc x = scalar_of(factor(), at);
                if (x.is_zero()) throw ParseError("division by zero", at);
                e = e.scaled(RatFunc::constant(field_->one()) / x);
            } else {
                return e;
            }
        }
    }

    ScriptHElem factor() {
        if (eat('-')) return -factor();
        return power();
    }

    ScriptHElem power() {
        std::size_t at = pos_;
        ScriptHElem base = atom();
        if (!eat('^')) return base;
        bool neg = eat('-');
        long e = integer();
        if (e > 256) throw ParseError("exponent too large", at);
        if (neg) {
            RatFunc x = scalar_of(base, at);
            if (x.is_zero()) throw ParseError("division by zero", at);
            x = RatFunc::constant(field_->one()) / x;
            base = ScriptHElem::from_ratfunc(x);
        }
        ScriptHElem r = ScriptHElem::one(field_);
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    ScriptHElem atom() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ScriptHElem::from_ratfunc(
                RatFunc::constant(field_->from_int(integer())));
        if (eat('(')) {
            ScriptHElem e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (eat('q')) return ScriptHElem::from_ratfunc(RatFunc::constant(field_->q()));
        if (eat('t')) return ScriptHElem::from_ratfunc(RatFunc::t(field_));
        if (eat('s')) return ScriptHElem::sigma(field_);
        if (eat('d') || eat('D')) {
            bool big = src_[pos_ - 1] == 'D';
            if (!eat('(')) throw ParseError("expected '('", pos_);
            long k = integer();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            if (k < 0) throw ParseError("index must be nonnegative", at);
            return big ? ScriptHElem::d(field_, static_cast<unsigned long>(k))
                       : ScriptHElem::delta_image(field_, static_cast<unsigned long>(k));
        }
        throw ParseError("unexpected character", at);
    }
};

inline ScriptHElem parse_operator(const FieldPtr& f, const std::string& src) {
    return ExprParser(f, src).parse();
}

/// Parses an expression that must evaluate to a rational function.
inline RatFunc parse_ratfunc(const FieldPtr& f, const std::string& src) {
    ScriptHElem e = parse_operator(f, src);
    if (e.is_zero()) return RatFunc(f);
    if (e.terms().size() != 1 || e.terms().begin()->first != ScriptHElem::Key{0, 0})
        throw ParseError("expected a rational function, got an operator", 0);
    return e.terms().begin()->second;
}

}  // namespace qdk

#endif  // QDK_PARSE_HPP
