#include "torsor/parse.hpp"

#include <cctype>

namespace torsor {

namespace {

class ExprParser {
   public:
    ExprParser(std::string_view text, const FieldSpecPtr& spec, char var)
        : s_(text), spec_(spec), var_(var) {}

    RationalFunction parse() {
        skip_ws();
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
    FieldSpecPtr spec_;
    char var_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction b = base();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected integer exponent", at);
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 100000) throw ParseError("exponent too large", at);
                ++pos_;
            }
            if (neg) e = -e;
            if (b.is_zero() && e <= 0) throw ParseError("zero to a nonpositive power", at);
            b = b.pow(e);
        }
        return b;
    }

    RationalFunction base() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", at);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (c == '-') {  // unary minus on a base
            ++pos_;
            return -base();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return RationalFunction(ring_embed_int(Fq::from_int(spec_.get(), 0), v));
        }
        if (var_ != 0 && c == var_) {
            ++pos_;
            return RationalFunction::var(spec_.get());
        }
        if (c == 't') {
            ++pos_;
            if (spec_->degree() < 2)
                throw ParseError("'t' requires an extension field (d > 1)", at);
            return RationalFunction(Fq::generator(spec_.get()));
        }
        if (c == 'x' || c == 'u')
            throw ParseError(std::string("variable '") + c + "' not admitted here", at);
        throw ParseError("unexpected character", at);
    }
};

std::vector<std::string_view> split_top(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

std::string_view strip(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
}

}  // namespace

RationalFunction parse_rational(std::string_view text, const FieldSpecPtr& spec, char var) {
    return ExprParser(text, spec, var).parse();
}

Fq parse_element(std::string_view text, const FieldSpecPtr& spec) {
    RationalFunction r = parse_rational(text, spec, 0);
    if (!r.is_constant() && !r.is_zero()) throw ParseError("expected a constant element", 0);
    return r.is_zero() ? Fq::from_int(spec.get(), 0) : r.eval(Fq::from_int(spec.get(), 0));
}

std::vector<RationalFunction> parse_witt_literal(std::string_view text, const FieldSpecPtr& spec,
                                                 char var) {
    std::string_view v = strip(text);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError("Witt literal must be of the form [expr,...]", 0);
    v = v.substr(1, v.size() - 2);
    std::vector<RationalFunction> out;
    for (auto part : split_top(v, ',')) out.push_back(parse_rational(part, spec, var));
    if (out.empty()) throw ParseError("empty Witt literal", 1);
    return out;
}

std::vector<BigInt> parse_witt_literal_int(std::string_view text) {
    std::string_view v = strip(text);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError("Witt literal must be of the form [int,...]", 0);
    v = v.substr(1, v.size() - 2);
    std::vector<BigInt> out;
    for (auto part : split_top(v, ',')) {
        auto w = strip(part);
        if (w.empty()) throw ParseError("empty Witt component", 0);
        try {
            out.emplace_back(std::string(w));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer '" + std::string(w) + "'", 0);
        }
    }
    return out;
}

PointOfP1 parse_point(std::string_view text, const FieldSpecPtr& spec) {
    auto v = strip(text);
    if (v == "inf" || v == "infinity" || v == "oo")
        return PointOfP1::infinity(spec.get());
    return PointOfP1::finite(parse_element(v, spec));
}

Modulus parse_modulus(std::string_view text, const FieldSpecPtr& spec) {
    Modulus m;
    auto v = strip(text);
    if (v.empty() || v == "0") return m;
    for (auto part : split_top(v, ',')) {
        auto entry = strip(part);
        auto colon = entry.rfind(':');
        if (colon == std::string_view::npos)
            throw ParseError("modulus entry must be 'point:multiplicity'", 0);
        PointOfP1 x = parse_point(entry.substr(0, colon), spec);
        auto ms = strip(entry.substr(colon + 1));
        long mult = 0;
        for (char c : ms) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad multiplicity '" + std::string(ms) + "'", 0);
            mult = mult * 10 + (c - '0');
        }
        if (mult < 1) throw ParseError("multiplicities must be >= 1", 0);
        if (m.at(x) != 0) throw ParseError("repeated point in modulus", 0);
        m.set(x, mult);
    }
    return m;
}

std::set<PointOfP1> parse_point_set(std::string_view text, const FieldSpecPtr& spec) {
    std::set<PointOfP1> out;
    auto v = strip(text);
    if (v.empty()) return out;
    for (auto part : split_top(v, ',')) out.insert(parse_point(part, spec));
    return out;
}

}  // namespace torsor
