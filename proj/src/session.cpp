#include "transversal/session.hpp"

#include <algorithm>
#include <cctype>

namespace transversal {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }
    char take()
    {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws_and_comments()
    {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else if (c == '#') {
                while (!eof() && peek() != '\n')
                    take();
            } else {
                break;
            }
        }
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

bool ident_head(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_tail(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_identifier(Cursor& cur)
{
    cur.skip_ws_and_comments();
    if (!ident_head(cur.peek()))
        cur.fail("expected identifier");
    std::string id;
    id += cur.take();
    while (!cur.eof() && ident_tail(cur.peek()))
        id += cur.take();
    return id;
}

void expect(Cursor& cur, char c)
{
    cur.skip_ws_and_comments();
    if (cur.peek() != c)
        cur.fail(std::string("expected '") + c + "'");
    cur.take();
}

bool accept(Cursor& cur, char c)
{
    cur.skip_ws_and_comments();
    if (cur.peek() != c)
        return false;
    cur.take();
    return true;
}

int read_integer(Cursor& cur)
{
    cur.skip_ws_and_comments();
    std::string num;
    if (cur.peek() == '-')
        num += cur.take();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected integer");
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        num += cur.take();
    return std::stoi(num);
}

// raw text until one of the stop characters at depth 0 (no nesting in
// the polynomial syntax)
std::string read_until(Cursor& cur, const std::string& stops)
{
    std::string out;
    while (!cur.eof() && stops.find(cur.peek()) == std::string::npos) {
        if (cur.peek() == '#') {
            cur.skip_ws_and_comments();
            continue;
        }
        out += cur.take();
    }
    return out;
}

std::vector<std::string> split_list(Cursor& cur, char close)
{
    std::vector<std::string> items;
    cur.skip_ws_and_comments();
    if (cur.peek() == close) {
        cur.take();
        return items;
    }
    while (true) {
        std::string item = read_until(cur, std::string(",") + close);
        // trim
        auto a = item.find_first_not_of(" \t\r\n");
        auto b = item.find_last_not_of(" \t\r\n");
        items.push_back(a == std::string::npos ? "" : item.substr(a, b - a + 1));
        if (accept(cur, ','))
            continue;
        expect(cur, close);
        break;
    }
    return items;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

struct Parser {
    Cursor cur;
    SessionScript script;
    std::string lastRingName;

    explicit Parser(const std::string& text) : cur{text} {}

    RingPtr require_ring(const std::string& name)
    {
        auto it = script.env.rings.find(name);
        if (it == script.env.rings.end())
            cur.fail("undefined ring '" + name + "'");
        return it->second;
    }

    void declare(const std::string& name)
    {
        if (script.env.declared(name))
            cur.fail("name '" + name + "' is already declared");
        script.env.order.push_back(name);
    }

    void parse_ring_decl()
    {
        std::string name = read_identifier(cur);
        expect(cur, '=');
        std::string field = read_identifier(cur);
        if (field != "QQ")
            cur.fail("only the coefficient field QQ is supported");
        expect(cur, '[');
        std::vector<std::string> vars = split_list(cur, ']');
        for (auto& v : vars)
            if (v.empty() || !ident_head(v[0]))
                cur.fail("bad variable name '" + v + "'");
        RingPtr free;
        try {
            free = RingDescriptor::make(vars);
        } catch (const Error& e) {
            cur.fail(e.what());
        }
        std::vector<std::string> relTexts;
        RingPtr ring = free;
        if (accept(cur, '/')) {
            expect(cur, '(');
            relTexts = split_list(cur, ')');
            std::vector<Polynomial> rels;
            for (const auto& t : relTexts) {
                try {
                    rels.push_back(parse_polynomial(t, free));
                } catch (const ParseError&) {
                    cur.fail("bad relation '" + t + "'");
                }
            }
            ring = RingDescriptor::make_quotient(free, rels);
            relTexts.clear();
            for (const auto& p : ring->quotient_relations())
                relTexts.push_back(print_polynomial(p));
        }
        expect(cur, ';');
        declare(name);
        script.env.rings[name] = ring;
        std::string echo = "ring " + name + " = QQ[" + join(vars, ",") + "]";
        if (!relTexts.empty())
            echo += " / (" + join(relTexts, ", ") + ")";
        script.env.declEcho[name] = echo + ";";
        lastRingName = name;
    }

    void parse_ideal_decl()
    {
        std::string name = read_identifier(cur);
        expect(cur, '=');
        expect(cur, '(');
        std::vector<std::string> genTexts = split_list(cur, ')');
        std::string ringName = lastRingName;
        cur.skip_ws_and_comments();
        if (ident_head(cur.peek())) {
            std::string kw = read_identifier(cur);
            if (kw != "in")
                cur.fail("expected 'in RING' or ';'");
            ringName = read_identifier(cur);
        }
        expect(cur, ';');
        if (ringName.empty())
            cur.fail("no ring declared before ideal '" + name + "'");
        RingPtr ring = require_ring(ringName);
        std::vector<Polynomial> gens;
        for (const auto& t : genTexts) {
            if (t.empty())
                continue;
            try {
                gens.push_back(parse_polynomial(t, ring));
            } catch (const ParseError& e) {
                cur.fail(std::string("in generator '") + t + "': " + e.what());
            }
        }
        declare(name);
        IdealHandle handle(ring, gens);
        script.env.ideals[name] = handle;
        std::vector<std::string> canon;
        for (const auto& g : handle.generators())
            canon.push_back(print_polynomial(g));
        script.env.declEcho[name] =
            "ideal " + name + " = (" + join(canon, ", ") + ") in " + ringName + ";";
    }

    void parse_module_decl()
    {
        std::string name = read_identifier(cur);
        expect(cur, '=');
        std::string kind = read_identifier(cur);
        if (kind != "submodule" && kind != "cokernel")
            cur.fail("expected 'submodule' or 'cokernel'");
        expect(cur, '(');
        std::string ringName = read_identifier(cur);
        RingPtr ring = require_ring(ringName);
        expect(cur, '^');
        int rank = read_integer(cur);
        if (rank < 1)
            cur.fail("rank must be positive");
        std::vector<FreeModuleElem> rows;
        std::vector<std::string> rowEcho;
        cur.skip_ws_and_comments();
        if (accept(cur, ';')) {
            while (true) {
                cur.skip_ws_and_comments();
                if (cur.peek() == ')') {
                    cur.take();
                    break;
                }
                expect(cur, '[');
                std::vector<std::string> comps = split_list(cur, ']');
                if (static_cast<int>(comps.size()) != rank)
                    cur.fail("vector has " + std::to_string(comps.size()) + " entries, expected " +
                             std::to_string(rank));
                std::vector<Polynomial> ps;
                for (const auto& t : comps) {
                    try {
                        ps.push_back(t.empty() ? Polynomial::zero(ring)
                                               : parse_polynomial(t, ring));
                    } catch (const ParseError& e) {
                        cur.fail(std::string("in vector entry '") + t + "': " + e.what());
                    }
                }
                rows.push_back(FreeModuleElem(ps));
                accept(cur, ',');  // commas between vectors optional
            }
        } else {
            expect(cur, ')');
        }
        expect(cur, ';');
        declare(name);
        ModulePresentation pres =
            kind == "submodule"
                ? ModulePresentation::submodule(ring, static_cast<std::size_t>(rank), rows)
                : ModulePresentation::cokernel(ring, static_cast<std::size_t>(rank), rows);
        try {
            pres.validate();
        } catch (const Error& e) {
            cur.fail(e.what());
        }
        script.env.modules[name] = pres;
        const auto& canonicalRows = kind == "submodule" ? pres.generators : pres.relations;
        for (const auto& r : canonicalRows)
            rowEcho.push_back(r.to_string());
        std::string echo = "module " + name + " = " + kind + "(" + ringName + "^" +
                           std::to_string(rank);
        if (!rowEcho.empty())
            echo += "; " + join(rowEcho, ", ");
        script.env.declEcho[name] = echo + ");";
    }

    static const std::vector<std::string>& known_verbs()
    {
        static const std::vector<std::string> verbs = {
            "relation_type", "rees_ideal",   "multi_rees", "assoc_graded",      "tor",
            "transversality", "tor2_clause", "sigma_iso",  "pi_iso",            "rt_bound",
            "flatness",       "artin_rees",  "sample_maximal_rt", "groebner",   "intersect",
            "hilbert",        "effective_dims",
        };
        return verbs;
    }

    void parse_run()
    {
        SessionCommand cmd;
        cmd.line = cur.line;
        cmd.verb = read_identifier(cur);
        const auto& verbs = known_verbs();
        if (std::find(verbs.begin(), verbs.end(), cmd.verb) == verbs.end())
            cur.fail("unknown command '" + cmd.verb + "'");
        while (true) {
            cur.skip_ws_and_comments();
            if (cur.peek() == ';') {
                cur.take();
                break;
            }
            if (!ident_head(cur.peek()))
                cur.fail("expected operand name, key=value, or ';'");
            std::string word = read_identifier(cur);
            cur.skip_ws_and_comments();
            if (cur.peek() == '=') {
                cur.take();
                cur.skip_ws_and_comments();
                std::string value;
                if (cur.peek() == '(') {
                    // one or more adjacent parenthesized groups
                    while (accept(cur, '(')) {
                        std::vector<std::string> items = split_list(cur, ')');
                        for (auto& it : items)
                            it.erase(std::remove_if(it.begin(), it.end(), ::isspace), it.end());
                        value += "(" + join(items, ",") + ")";
                        cur.skip_ws_and_comments();
                        if (cur.peek() != '(')
                            break;
                    }
                } else {
                    if (cur.peek() == '-')
                        value += cur.take();
                    while (!cur.eof() && ident_tail(cur.peek()))
                        value += cur.take();
                    if (value.empty())
                        cur.fail("empty value for key '" + word + "'");
                }
                cmd.named[word] = value;
            } else {
                if (!script.env.declared(word))
                    cur.fail("undefined name '" + word + "'");
                cmd.positionals.push_back(word);
            }
        }
        std::string echo = "run " + cmd.verb;
        for (const auto& p : cmd.positionals)
            echo += " " + p;
        for (const auto& [k, v] : cmd.named)
            echo += " " + k + "=" + v;
        cmd.echo = echo + ";";
        script.commands.push_back(std::move(cmd));
    }

    SessionScript parse()
    {
        while (true) {
            cur.skip_ws_and_comments();
            if (cur.eof())
                break;
            std::string kw = read_identifier(cur);
            if (kw == "ring")
                parse_ring_decl();
            else if (kw == "ideal")
                parse_ideal_decl();
            else if (kw == "module")
                parse_module_decl();
            else if (kw == "run")
                parse_run();
            else
                cur.fail("expected 'ring', 'ideal', 'module' or 'run', got '" + kw + "'");
        }
        return std::move(script);
    }
};

}  // namespace

SessionScript parse_session(const std::string& text)
{
    return Parser(text).parse();
}

std::string print_session(const SessionScript& script)
{
    std::string out;
    for (const auto& name : script.env.order)
        out += script.env.declEcho.at(name) + "\n";
    for (const auto& cmd : script.commands)
        out += cmd.echo + "\n";
    return out;
}

bool SessionScript::operator==(const SessionScript& o) const
{
    if (env.order != o.env.order || env.declEcho != o.env.declEcho)
        return false;
    if (commands.size() != o.commands.size())
        return false;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (commands[i].verb != o.commands[i].verb ||
            commands[i].positionals != o.commands[i].positionals ||
            commands[i].named != o.commands[i].named)
            return false;
    }
    return true;
}

}  // namespace transversal
