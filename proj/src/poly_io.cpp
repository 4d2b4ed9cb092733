#include "transversal/poly_io.hpp"

#include <algorithm>
#include <cctype>

#include "transversal/errors.hpp"
#include "transversal/term_order.hpp"

namespace transversal {

namespace {

std::string print_term(const RingPtr& ring, const Monomial& m, const Rational& c,
                       bool leading)
{
    std::string s;
    Rational a = c;
    if (leading) {
        if (sgn(a) < 0) {
            s += "-";
            a = -a;
        }
    } else {
        s += sgn(a) < 0 ? " - " : " + ";
        a = abs(a);
    }
    const bool constant = m.is_one();
    if (a != 1 || constant) {
        s += rational_to_string(a);
        if (!constant)
            s += "*";
    }
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            s += "*";
        first = false;
        s += ring->variable_name(i);
        if (m[i] != 1)
            s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string print_polynomial(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    const RingPtr& ring = p.ring();
    std::vector<const Polynomial::TermMap::value_type*> terms;
    for (const auto& t : p.terms())
        terms.push_back(&t);
    const TermOrder& ord = ring->default_order();
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
        return compare_monomials(a->first, b->first, ord) == Ordering::Greater;
    });
    std::string s;
    bool leading = true;
    for (auto* t : terms) {
        s += print_term(ring, t->first, t->second, leading);
        leading = false;
    }
    return s;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() { return text[pos++]; }

    [[noreturn]] void fail(const std::string& msg)
    {
        throw ParseError("polynomial syntax: " + msg, 1, static_cast<int>(pos) + 1);
    }
};

std::string lex_number(Lexer& lx)
{
    std::string num;
    while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
        num += lx.take();
    if (num.empty())
        lx.fail("expected digits");
    return num;
}

std::string lex_identifier(Lexer& lx)
{
    std::string id;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (lx.pos >= lx.text.size() || !head(lx.text[lx.pos]))
        lx.fail("expected identifier");
    id += lx.take();
    while (lx.pos < lx.text.size() && tail(lx.text[lx.pos]))
        id += lx.take();
    return id;
}

// factor := rational | identifier ('^' integer)?
Polynomial parse_factor(Lexer& lx, const RingPtr& ring)
{
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lex_number(lx);
        if (lx.peek() == '/') {
            lx.take();
            lx.skip_ws();
            num += "/" + lex_number(lx);
        }
        return Polynomial::constant(ring, rational_from_string(num));
    }
    std::string name = lex_identifier(lx);
    int idx = ring->variable_index(name);
    if (idx < 0)
        lx.fail("unknown variable '" + name + "'");
    int power = 1;
    if (lx.peek() == '^') {
        lx.take();
        lx.skip_ws();
        power = std::stoi(lex_number(lx));
    }
    return Polynomial::variable(ring, static_cast<std::size_t>(idx), power);
}

// term := ['-'|'+'] factor ('*' factor)*
Polynomial parse_term(Lexer& lx, const RingPtr& ring)
{
    bool negative = false;
    while (true) {
        char c = lx.peek();
        if (c == '-') {
            negative = !negative;
            lx.take();
        } else if (c == '+') {
            lx.take();
        } else {
            break;
        }
    }
    Polynomial p = parse_factor(lx, ring);
    while (lx.peek() == '*') {
        lx.take();
        p = p * parse_factor(lx, ring);
    }
    return negative ? -p : p;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring)
{
    Lexer lx{text};
    if (lx.eof())
        lx.fail("empty input");
    Polynomial p = parse_term(lx, ring);
    while (!lx.eof()) {
        char c = lx.peek();
        if (c != '+' && c != '-')
            lx.fail("expected '+' or '-'");
        p += parse_term(lx, ring);
    }
    return p;
}

}  // namespace transversal
