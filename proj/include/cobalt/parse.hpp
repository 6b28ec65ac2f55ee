#pragma once

#include "cobalt/term.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

// Text form of morphism terms.
//
//   word := "1" | letter { "@" letter }        letter := "x" | "x*"
//   term := ten { ";" ten }                    (";" binds looser than "@")
//   ten  := atom { "@" atom }
//   atom := "id(" word ")" | "cup" | "cup*" | "cap" | "cap*"
//         | "b(" letter "," letter ")" | "b-(" letter "," letter ")"
//         | "(" term ")"
//
// Composition reads diagrammatically: "f ; g" is f first.  Whitespace is
// insignificant.  Both operators are left-associative.

namespace cobalt {

struct parse_error : std::runtime_error {
    int line, col;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_),
          col(col_) {}
};

namespace detail {

class TermParser {
public:
    explicit TermParser(const std::string& src) : s_(src) {}

    Term parse() {
        Term t = parse_term();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return t;
    }

private:
    Term parse_term() {
        Term t = parse_tensor();
        while (eat(';')) {
            Term rhs = parse_tensor();
            t = Term::compose(t, rhs);
        }
        return t;
    }

    Term parse_tensor() {
        Term t = parse_atom();
        while (eat('@')) {
            Term rhs = parse_atom();
            t = Term::tensor(t, rhs);
        }
        return t;
    }

    Term parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            Term t = parse_term();
            expect(')');
            return t;
        }
        if (match_kw("id")) {
            expect('(');
            ObjectWord w = parse_word();
            expect(')');
            return Term::id(std::move(w));
        }
        if (match_kw("cup")) return Term::cup(eat('*') ? CupOrient::starred : CupOrient::plain);
        if (match_kw("cap")) return Term::cap(eat('*') ? CupOrient::starred : CupOrient::plain);
        if (match_kw("b-")) {
            expect('(');
            Letter u = parse_letter();
            expect(',');
            Letter v = parse_letter();
            expect(')');
            return Term::braid(u, v, BraidSign::neg);
        }
        if (match_kw("b")) {
            expect('(');
            Letter u = parse_letter();
            expect(',');
            Letter v = parse_letter();
            expect(')');
            return Term::braid(u, v, BraidSign::pos);
        }
        fail("expected a term atom");
        return Term();  // unreachable
    }

    ObjectWord parse_word() {
        skip_ws();
        if (eat('1')) return {};
        ObjectWord w;
        w.push_back(parse_letter());
        while (eat('@')) w.push_back(parse_letter());
        return w;
    }

    Letter parse_letter() {
        skip_ws();
        if (!eat('x')) fail("expected a letter");
        return eat('*') ? Letter::XStar : Letter::X;
    }

    // --- low-level scanning ---

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    // Keyword match that refuses to split "cap" out of "cup"-like clashes:
    // keywords here never run into each other except via '*' and '(' which
    // are not identifier characters, so a plain prefix match suffices.
    bool match_kw(const std::string& kw) {
        skip_ws();
        if (s_.compare(pos_, kw.size(), kw) != 0) return false;
        // "b" must not swallow the 'b' of nothing else; "b-" is checked first
        // by the caller.  Reject if the next char continues an identifier.
        if (kw == "b" && pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') return false;
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
        return true;
    }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line_, col_); }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

}  // namespace detail

inline Term parse_term(const std::string& text) { return detail::TermParser(text).parse(); }

// Printer emitting the same grammar; parse_term(print_term(t)) == t.
inline std::string print_term(const Term& t) {
    if (const auto* n = t.as<IdNode>()) return "id(" + word_str(n->word) + ")";
    if (const auto* n = t.as<CupNode>())
        return n->orient == CupOrient::plain ? "cup" : "cup*";
    if (const auto* n = t.as<CapNode>())
        return n->orient == CupOrient::plain ? "cap" : "cap*";
    if (const auto* n = t.as<BraidNode>()) {
        std::string s = n->sign == BraidSign::pos ? "b(" : "b-(";
        return s + letter_str(n->u) + "," + letter_str(n->v) + ")";
    }
    if (const auto* n = t.as<ComposeNode>()) {
        Term f(n->first), g(n->second);
        std::string lhs = print_term(f);
        std::string rhs = print_term(g);
        // ";" is left-associative: a right-nested compose needs parentheses.
        if (g.as<ComposeNode>()) rhs = "(" + rhs + ")";
        return lhs + " ; " + rhs;
    }
    const auto* n = t.as<TensorNode>();
    Term f(n->left), g(n->right);
    std::string lhs = print_term(f);
    std::string rhs = print_term(g);
    if (f.as<ComposeNode>()) lhs = "(" + lhs + ")";
    if (g.as<ComposeNode>() || g.as<TensorNode>()) rhs = "(" + rhs + ")";
    return lhs + " @ " + rhs;
}

}  // namespace cobalt
