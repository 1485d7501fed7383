#include <finlogic/formula.hpp>

#include <algorithm>
#include <cctype>

namespace finlogic {

auto bot() -> Formula { return std::make_shared<const Node>(Node{Op::bot, 0, nullptr, nullptr}); }
auto var(int index) -> Formula { return std::make_shared<const Node>(Node{Op::var, index, nullptr, nullptr}); }
auto conj(Formula a, Formula b) -> Formula { return std::make_shared<const Node>(Node{Op::conj, 0, std::move(a), std::move(b)}); }
auto disj(Formula a, Formula b) -> Formula { return std::make_shared<const Node>(Node{Op::disj, 0, std::move(a), std::move(b)}); }
auto imp(Formula a, Formula b) -> Formula { return std::make_shared<const Node>(Node{Op::imp, 0, std::move(a), std::move(b)}); }
auto box(Formula a) -> Formula { return std::make_shared<const Node>(Node{Op::box, 0, std::move(a), nullptr}); }
auto neg(Formula a) -> Formula { return imp(std::move(a), bot()); }
auto top() -> Formula { return neg(bot()); }

auto equal(const Formula & a, const Formula & b) -> bool
{
    if (a == b)
        return true;
    if (! a || ! b || a->op != b->op)
        return false;
    switch (a->op) {
    case Op::bot: return true;
    case Op::var: return a->var == b->var;
    case Op::box: return equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

auto is_intuitionistic(const Formula & f) -> bool
{
    return count_op(f, Op::box) == 0;
}

auto variables(const Formula & f) -> std::uint64_t
{
    switch (f->op) {
    case Op::bot: return 0;
    case Op::var: return std::uint64_t{1} << f->var;
    case Op::box: return variables(f->lhs);
    default: return variables(f->lhs) | variables(f->rhs);
    }
}

auto node_count(const Formula & f) -> int
{
    if (! f)
        return 0;
    return 1 + node_count(f->lhs) + node_count(f->rhs);
}

auto depth(const Formula & f) -> int
{
    if (! f || f->op == Op::bot || f->op == Op::var)
        return 0;
    return 1 + std::max(depth(f->lhs), depth(f->rhs));
}

auto count_op(const Formula & f, Op op) -> int
{
    if (! f)
        return 0;
    return (f->op == op ? 1 : 0) + count_op(f->lhs, op) + count_op(f->rhs, op);
}

namespace {
    // precedence: imp 1, disj 2, conj 3, unary 4
    auto level(const Formula & f) -> int
    {
        switch (f->op) {
        case Op::imp: return f->rhs->op == Op::bot ? 4 : 1;
        case Op::disj: return 2;
        case Op::conj: return 3;
        default: return 4;
        }
    }

    auto print(const Formula & f, std::string & out) -> void;

    auto print_at(const Formula & f, int need, std::string & out) -> void
    {
        if (level(f) < need) {
            out += '(';
            print(f, out);
            out += ')';
        }
        else
            print(f, out);
    }

    auto print(const Formula & f, std::string & out) -> void
    {
        switch (f->op) {
        case Op::bot: out += "bot"; break;
        case Op::var: out += "p" + std::to_string(f->var); break;
        case Op::box:
            out += "[]";
            print_at(f->lhs, 4, out);
            break;
        case Op::imp:
            if (f->rhs->op == Op::bot) {
                out += "~";
                print_at(f->lhs, 4, out);
            }
            else {
                print_at(f->lhs, 2, out);
                out += " -> ";
                print_at(f->rhs, 1, out);
            }
            break;
        case Op::disj:
            print_at(f->lhs, 2, out);
            out += " | ";
            print_at(f->rhs, 3, out);
            break;
        case Op::conj:
            print_at(f->lhs, 3, out);
            out += " & ";
            print_at(f->rhs, 4, out);
            break;
        }
    }

    enum class Tok { end, lparen, rparen, imp, disj, conj, neg, box, bot, var };

    struct Lexer {
        std::string_view text;
        std::size_t pos = 0;
        Tok tok = Tok::end;
        int var = 0;
        std::size_t start = 0;

        auto fail(const std::string & what) const -> SyntaxError
        {
            return SyntaxError(what + " at position " + std::to_string(start));
        }

        auto starts(std::string_view s) const -> bool { return text.substr(pos, s.size()) == s; }

        auto next() -> void
        {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
            start = pos;
            if (pos >= text.size()) {
                tok = Tok::end;
                return;
            }
            struct Sym {
                std::string_view s;
                Tok t;
            };
            static constexpr Sym symbols[] = {
                {"->", Tok::imp}, {"→", Tok::imp}, {"|", Tok::disj}, {"∨", Tok::disj}, {"&", Tok::conj},
                {"∧", Tok::conj}, {"~", Tok::neg}, {"¬", Tok::neg}, {"[]", Tok::box}, {"□", Tok::box},
                {"⊥", Tok::bot}, {"(", Tok::lparen}, {")", Tok::rparen}};
            for (auto & sym : symbols)
                if (starts(sym.s)) {
                    pos += sym.s.size();
                    tok = sym.t;
                    return;
                }
            if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
                std::size_t end = pos;
                while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end])))
                    ++end;
                auto word = text.substr(pos, end - pos);
                pos = end;
                if (word == "bot") {
                    tok = Tok::bot;
                    return;
                }
                if (word.size() == 1 && std::string_view("pqrs").find(word[0]) != std::string_view::npos) {
                    tok = Tok::var;
                    var = static_cast<int>(std::string_view("pqrs").find(word[0]));
                    return;
                }
                if (word.size() > 1 && word[0] == 'p' && std::all_of(word.begin() + 1, word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                    if (word.size() > 3)
                        throw fail("variable index too large");
                    tok = Tok::var;
                    var = std::stoi(std::string(word.substr(1)));
                    if (var >= 64)
                        throw fail("variable index too large");
                    return;
                }
                throw fail("unknown identifier '" + std::string(word) + "'");
            }
            throw fail("unexpected character");
        }
    };

    struct Parser {
        Lexer lex;

        auto formula() -> Formula
        {
            auto lhs = disjunction();
            if (lex.tok == Tok::imp) {
                lex.next();
                return imp(lhs, formula());
            }
            return lhs;
        }

        auto disjunction() -> Formula
        {
            auto f = conjunction();
            while (lex.tok == Tok::disj) {
                lex.next();
                f = disj(f, conjunction());
            }
            return f;
        }

        auto conjunction() -> Formula
        {
            auto f = unary();
            while (lex.tok == Tok::conj) {
                lex.next();
                f = conj(f, unary());
            }
            return f;
        }

        auto unary() -> Formula
        {
            if (lex.tok == Tok::neg) {
                lex.next();
                return neg(unary());
            }
            if (lex.tok == Tok::box) {
                lex.next();
                return box(unary());
            }
            return atom();
        }

        auto atom() -> Formula
        {
            switch (lex.tok) {
            case Tok::bot:
                lex.next();
                return bot();
            case Tok::var: {
                int v = lex.var;
                lex.next();
                return var(v);
            }
            case Tok::lparen: {
                lex.next();
                auto f = formula();
                if (lex.tok != Tok::rparen)
                    throw lex.fail("expected ')'");
                lex.next();
                return f;
            }
            case Tok::end: throw lex.fail("unexpected end of input");
            default: throw lex.fail("expected a formula");
            }
        }
    };
}

auto to_string(const Formula & f) -> std::string
{
    std::string out;
    print(f, out);
    return out;
}

auto parse(std::string_view text) -> Formula
{
    Parser p{Lexer{text}};
    p.lex.next();
    auto f = p.formula();
    if (p.lex.tok != Tok::end)
        throw p.lex.fail("trailing input");
    return f;
}

auto bw(int n) -> Formula
{
    if (n < 0)
        throw ParameterOutOfRange("bw needs n >= 0");
    Formula outer;
    for (int i = 0; i <= n; ++i) {
        Formula inner;
        for (int j = 0; j <= n; ++j)
            if (j != i)
                inner = inner ? disj(inner, var(j)) : var(j);
        auto disjunct = imp(var(i), inner ? inner : bot());
        outer = outer ? disj(outer, disjunct) : disjunct;
    }
    return outer;
}

auto godel_translate(const Formula & f) -> Formula
{
    switch (f->op) {
    case Op::bot: return f;
    case Op::var: return box(f);
    case Op::conj: return conj(godel_translate(f->lhs), godel_translate(f->rhs));
    case Op::disj: return disj(godel_translate(f->lhs), godel_translate(f->rhs));
    case Op::imp: return box(imp(godel_translate(f->lhs), godel_translate(f->rhs)));
    case Op::box: throw NotIntuitionistic("formula contains a box: " + to_string(f));
    }
    return f;
}

auto grz_axiom() -> Formula
{
    auto p = var(0);
    return imp(box(imp(box(imp(p, box(p))), p)), box(p));
}

}
