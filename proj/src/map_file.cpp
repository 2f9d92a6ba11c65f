#include "polydyn/map_file.hpp"

#include <cctype>
#include <map>

namespace polydyn {

namespace {

enum class Tok {
    Ident, Nat, LBrace, RBrace, LParen, RParen,
    Plus, Minus, Star, Caret, Slash, Comma, Colon, Equals, Arrow, End,
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Tok::End, "", line, col};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id += advance();
            return {Tok::Ident, id, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += advance();
            return {Tok::Nat, digits, line, col};
        }
        advance();
        switch (c) {
            case '{': return {Tok::LBrace, "{", line, col};
            case '}': return {Tok::RBrace, "}", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            case '+': return {Tok::Plus, "+", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case ',': return {Tok::Comma, ",", line, col};
            case ':': return {Tok::Colon, ":", line, col};
            case '=': return {Tok::Equals, "=", line, col};
            case '-':
                if (pos_ < s_.size() && s_[pos_] == '>') {
                    advance();
                    return {Tok::Arrow, "->", line, col};
                }
                return {Tok::Minus, "-", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            advance();
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    std::vector<MapSpec> parse_file() {
        std::vector<MapSpec> maps;
        maps.push_back(parse_mapdef());
        while (cur_.kind != Tok::End) maps.push_back(parse_mapdef());
        return maps;
    }

private:
    void shift() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, cur_.line, cur_.col);
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) fail("expected " + what + ", got '" + cur_.text + "'");
        Token t = cur_;
        shift();
        return t;
    }

    bool accept(Tok kind) {
        if (cur_.kind != kind) return false;
        shift();
        return true;
    }

    std::string expect_keyword_with_colon(const std::string& kw) {
        Token t = expect(Tok::Ident, "'" + kw + ":'");
        if (t.text != kw)
            throw ParseError("expected '" + kw + ":', got '" + t.text + "'", t.line, t.col);
        expect(Tok::Colon, "':' after '" + kw + "'");
        return t.text;
    }

    MapSpec parse_mapdef() {
        Token kw = expect(Tok::Ident, "'map'");
        if (kw.text != "map")
            throw ParseError("expected 'map', got '" + kw.text + "'", kw.line, kw.col);
        Token name = expect(Tok::Ident, "map name");
        expect(Tok::LBrace, "'{'");
        var_index_.clear();
        params_.clear();

        expect_keyword_with_colon("vars");
        std::vector<std::string> vars;
        vars.push_back(expect(Tok::Ident, "variable name").text);
        while (accept(Tok::Comma)) vars.push_back(expect(Tok::Ident, "variable name").text);
        for (size_t i = 0; i < vars.size(); ++i) {
            if (var_index_.count(vars[i]) || params_.count(vars[i]))
                fail("duplicate identifier '" + vars[i] + "'");
            var_index_[vars[i]] = static_cast<int>(i);
        }
        dim_ = static_cast<int>(vars.size());

        std::vector<std::pair<std::string, Rational>> params;
        if (cur_.kind == Tok::Ident && cur_.text == "params") {
            shift();
            expect(Tok::Colon, "':' after 'params'");
            do {
                Token pname = expect(Tok::Ident, "parameter name");
                if (var_index_.count(pname.text) || params_.count(pname.text))
                    throw ParseError("duplicate identifier '" + pname.text + "'",
                                     pname.line, pname.col);
                expect(Tok::Equals, "'='");
                Rational value = parse_signed_rational();
                params_[pname.text] = value;
                params.emplace_back(pname.text, value);
            } while (accept(Tok::Comma));
        }

        std::map<int, RationalPoly> rules;
        while (cur_.kind == Tok::Ident) {
            Token lhs = cur_;
            shift();
            auto it = var_index_.find(lhs.text);
            if (it == var_index_.end())
                throw ParseError("rule for undeclared variable '" + lhs.text + "'",
                                 lhs.line, lhs.col);
            if (rules.count(it->second))
                throw ParseError("duplicate rule for variable '" + lhs.text + "'",
                                 lhs.line, lhs.col);
            expect(Tok::Arrow, "'->'");
            rules.emplace(it->second, parse_expr());
        }
        expect(Tok::RBrace, "'}' or a rule");

        for (size_t i = 0; i < vars.size(); ++i)
            if (!rules.count(static_cast<int>(i)))
                fail("missing rule for variable '" + vars[i] + "'");

        std::vector<RationalPoly> comps;
        comps.reserve(vars.size());
        for (size_t i = 0; i < vars.size(); ++i)
            comps.push_back(rules.at(static_cast<int>(i)));
        MapSpec spec{name.text, vars, std::move(params),
                     RationalMap(std::move(comps), name.text, vars)};
        return spec;
    }

    Rational parse_signed_rational() {
        bool neg = accept(Tok::Minus);
        Rational r = parse_rational();
        return neg ? -r : r;
    }

    Rational parse_rational() {
        Token num = expect(Tok::Nat, "number");
        std::string text = num.text;
        if (accept(Tok::Slash)) {
            Token den = expect(Tok::Nat, "denominator");
            if (den.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", den.line, den.col);
            text += "/" + den.text;
        }
        return Rational::from_string(text);
    }

    RationalPoly parse_expr() {
        RationalPoly acc = parse_term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool plus = cur_.kind == Tok::Plus;
            shift();
            RationalPoly rhs = parse_term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    RationalPoly parse_term() {
        RationalPoly acc = parse_factor();
        while (accept(Tok::Star)) acc = acc * parse_factor();
        return acc;
    }

    RationalPoly parse_factor() {
        if (accept(Tok::Minus)) return -parse_factor();
        RationalPoly base = parse_primary();
        while (accept(Tok::Caret)) {
            Token e = expect(Tok::Nat, "natural exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    RationalPoly parse_primary() {
        if (cur_.kind == Tok::Nat)
            return RationalPoly::constant(dim_, parse_rational());
        if (cur_.kind == Tok::Ident) {
            Token id = cur_;
            shift();
            auto vit = var_index_.find(id.text);
            if (vit != var_index_.end()) return RationalPoly::variable(dim_, vit->second);
            auto pit = params_.find(id.text);
            if (pit != params_.end()) return RationalPoly::constant(dim_, pit->second);
            throw ParseError("undeclared identifier '" + id.text + "'", id.line, id.col);
        }
        if (accept(Tok::LParen)) {
            RationalPoly e = parse_expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail("expected a number, identifier, or '('");
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 0, 0};
    std::map<std::string, int> var_index_;
    std::map<std::string, Rational> params_;
    int dim_ = 0;
};

}  // namespace

std::vector<MapSpec> parse_map_file(const std::string& text) {
    return Parser(text).parse_file();
}

MapSpec parse_single_map(const std::string& text) {
    return parse_map_file(text).front();
}

std::string render_map(const MapSpec& spec) {
    std::string out = "map " + spec.name + " {\n  vars: ";
    for (size_t i = 0; i < spec.vars.size(); ++i)
        out += (i ? ", " : "") + spec.vars[i];
    out += "\n";
    for (size_t i = 0; i < spec.vars.size(); ++i)
        out += "  " + spec.vars[i] + " -> " +
               spec.map.component(static_cast<int>(i)).str(spec.vars) + "\n";
    out += "}\n";
    return out;
}

ComplexMap to_float_map(const MapSpec& spec) {
    ComplexMap m = to_complex(spec.map);
    return ComplexMap(m.components(), spec.name, spec.vars);
}

}  // namespace polydyn
