#include "knotfog/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace knotfog {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at column " + std::to_string(position + 1) + ": " + message),
      position_(position), detail_(message) {}

namespace {

enum class Tok { ident, integer, lparen, rparen, comma, equals, hash, plus, minus, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t pos;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::end)
        return "end of input";
    return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(c)) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::ident, s.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Tok::integer, s.substr(start, i - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        case '=': kind = Tok::equals; break;
        case '#': kind = Tok::hash; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        default:
            throw ParseError(start, "unexpected character '" + std::string(1, s[i]) + "'");
        }
        out.push_back({kind, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Tok::end, {}, s.size()});
    return out;
}

struct Parsed {
    KnotExpr expr;
    std::size_t depth;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    KnotExpr parse_all() {
        Parsed p = parse_expr(0);
        if (peek().kind != Tok::end)
            throw ParseError(peek().pos, "expected '#' or end of input, found " + describe(peek()));
        return std::move(p.expr);
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }

    const Token& advance() { return tokens_[cursor_ == tokens_.size() - 1 ? cursor_ : cursor_++]; }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(peek().pos, std::string("expected ") + what + ", found " + describe(peek()));
        return advance();
    }

    void expect_keyword(std::string_view word) {
        const Token& t = peek();
        if (t.kind != Tok::ident || t.text != word)
            throw ParseError(t.pos, "expected '" + std::string(word) + "', found " + describe(t));
        advance();
    }

    static void check_depth(std::size_t depth, std::size_t pos) {
        if (depth > kMaxParseDepth)
            throw ParseError(pos, "expression nesting exceeds " + std::to_string(kMaxParseDepth) + " levels");
    }

    Parsed parse_expr(std::size_t nesting) {
        check_depth(nesting + 1, peek().pos);
        Parsed left = parse_term(nesting);
        while (peek().kind == Tok::hash) {
            const std::size_t pos = advance().pos;
            Parsed right = parse_term(nesting);
            const std::size_t d = 1 + std::max(left.depth, right.depth);
            check_depth(d, pos);
            left = {knot::sum(std::move(left.expr), std::move(right.expr)), d};
        }
        return left;
    }

    std::int64_t parse_int() {
        const std::size_t pos = peek().pos;
        const bool negative = peek().kind == Tok::minus;
        if (negative)
            advance();
        const Token& digits = expect(Tok::integer, "integer");
        // Accumulate the magnitude as unsigned so INT64_MIN is representable.
        std::uint64_t magnitude = 0;
        const auto [end, ec] = std::from_chars(digits.text.data(), digits.text.data() + digits.text.size(), magnitude);
        (void)end;
        const std::uint64_t limit = negative ? std::uint64_t{1} << 63 : (std::uint64_t{1} << 63) - 1;
        if (ec != std::errc{} || magnitude > limit)
            throw ParseError(pos, "integer literal out of range");
        return negative ? static_cast<std::int64_t>(0 - magnitude) : static_cast<std::int64_t>(magnitude);
    }

    TriState parse_tri() {
        const Token& t = expect(Tok::ident, "yes, no or unknown");
        if (t.text == "yes")
            return TriState::yes;
        if (t.text == "no")
            return TriState::no;
        if (t.text == "unknown")
            return TriState::unknown;
        throw ParseError(t.pos, "expected yes, no or unknown, found " + describe(t));
    }

    template <class F>
    static KnotExpr build(std::size_t pos, F&& make) {
        try {
            return make();
        } catch (const std::invalid_argument& e) {
            throw ParseError(pos, e.what());
        }
    }

    Parsed parse_term(std::size_t nesting) {
        const Token& head = peek();
        const std::size_t pos = head.pos;
        if (head.kind == Tok::lparen) {
            advance();
            Parsed inner = parse_expr(nesting + 1);
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (head.kind != Tok::ident)
            throw ParseError(pos, "expected a knot, found " + describe(head));
        const std::string_view word = head.text;
        advance();

        if (word == "unknot")
            return {knot::unknot(), 1};
        if (word == "trefoil")
            return {knot::trefoil(), 1};
        if (word == "fig8")
            return {knot::fig8(), 1};
        if (word == "kfam") {
            expect(Tok::lparen, "'('");
            const std::size_t arg_pos = peek().pos;
            const std::int64_t n = parse_int();
            expect(Tok::rparen, "')'");
            return {build(arg_pos, [n] { return knot::kfam(n); }), 1};
        }
        if (word == "wh0") {
            expect(Tok::lparen, "'('");
            Parsed companion = parse_expr(nesting + 1);
            Clasp clasp = Clasp::positive;
            if (peek().kind == Tok::comma) {
                advance();
                expect_keyword("clasp");
                expect(Tok::equals, "'='");
                if (peek().kind == Tok::plus)
                    clasp = Clasp::positive;
                else if (peek().kind == Tok::minus)
                    clasp = Clasp::negative;
                else
                    throw ParseError(peek().pos, "expected '+' or '-', found " + describe(peek()));
                advance();
            }
            expect(Tok::rparen, "')'");
            const std::size_t d = companion.depth + 1;
            check_depth(d, pos);
            return {knot::wh0(std::move(companion.expr), clasp), d};
        }
        if (word == "ksat") {
            expect(Tok::lparen, "'('");
            Parsed j = parse_expr(nesting + 1);
            expect(Tok::comma, "','");
            Parsed l = parse_expr(nesting + 1);
            expect(Tok::comma, "','");
            const std::size_t twist_pos = peek().pos;
            const std::int64_t m = parse_int();
            expect(Tok::comma, "','");
            const std::int64_t n = parse_int();
            expect(Tok::rparen, "')'");
            const std::size_t d = 1 + std::max(j.depth, l.depth);
            check_depth(d, pos);
            return {build(twist_pos, [&] { return knot::ksat(std::move(j.expr), std::move(l.expr), m, n); }), d};
        }
        if (word == "atom")
            return {parse_atom_args(), 1};
        throw ParseError(pos, "unknown knot '" + std::string(word) + "'");
    }

    KnotExpr parse_atom_args() {
        expect(Tok::lparen, "'('");
        const Token& name = expect(Tok::ident, "atom name");
        expect(Tok::comma, "','");
        expect_keyword("genus");
        expect(Tok::equals, "'='");
        const std::size_t genus_pos = peek().pos;
        const std::int64_t genus = parse_int();
        std::optional<TriState> torus, cable, slice;
        while (peek().kind == Tok::comma) {
            advance();
            const Token& key = expect(Tok::ident, "torus, cable or slice");
            std::optional<TriState>* slot = nullptr;
            if (key.text == "torus")
                slot = &torus;
            else if (key.text == "cable")
                slot = &cable;
            else if (key.text == "slice")
                slot = &slice;
            else
                throw ParseError(key.pos, "expected torus, cable or slice, found " + describe(key));
            if (slot->has_value())
                throw ParseError(key.pos, "flag '" + std::string(key.text) + "' given twice");
            expect(Tok::equals, "'='");
            *slot = parse_tri();
        }
        expect(Tok::rparen, "')'");
        return build(genus_pos, [&] {
            return knot::atom(std::string(name.text), genus, torus.value_or(TriState::unknown),
                              cable.value_or(TriState::unknown), slice.value_or(TriState::unknown));
        });
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
};

} // namespace

KnotExpr parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace knotfog
