#include "calabi/potential.hpp"

#include <cctype>

#include "calabi/errors.hpp"
#include "calabi/scalar.hpp"

namespace calabi {

bool AtomGroup::operator==(const AtomGroup& o) const {
    if (inner == o.inner) return true;
    if (!inner || !o.inner) return false;
    return *inner == *o.inner;
}

bool Coef::operator==(const Coef& o) const { return value == o.value; }

namespace {

enum class Tok { number, ident, plus, minus, star, slash, lparen, rparen, end };

struct Token {
    Tok type;
    std::size_t offset;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    Token cur_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            cur_ = {Tok::end, start, ""};
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': cur_ = {Tok::plus, start, "+"}; ++pos_; return;
            case '-': cur_ = {Tok::minus, start, "-"}; ++pos_; return;
            case '*': cur_ = {Tok::star, start, "*"}; ++pos_; return;
            case '/': cur_ = {Tok::slash, start, "/"}; ++pos_; return;
            case '(': cur_ = {Tok::lparen, start, "("}; ++pos_; return;
            case ')': cur_ = {Tok::rparen, start, ")"}; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t i = pos_;
            bool dot = false;
            while (i < text_.size()) {
                char d = text_[i];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    ++i;
                } else if (d == '.' && !dot) {
                    dot = true;
                    ++i;
                } else if ((d == 'e' || d == 'E') && i + 1 < text_.size() &&
                           (std::isdigit(static_cast<unsigned char>(text_[i + 1])) ||
                            ((text_[i + 1] == '+' || text_[i + 1] == '-') && i + 2 < text_.size() &&
                             std::isdigit(static_cast<unsigned char>(text_[i + 2]))))) {
                    i += text_[i + 1] == '+' || text_[i + 1] == '-' ? 2 : 1;
                    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
                    break;
                } else {
                    break;
                }
            }
            cur_ = {Tok::number, start, std::string(text_.substr(start, i - start))};
            pos_ = i;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t i = pos_;
            while (i < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'))
                ++i;
            cur_ = {Tok::ident, start, std::string(text_.substr(start, i - start))};
            pos_ = i;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
};

bool is_atom_name(const std::string& s) {
    return s == "normsq" || s == "sepdecay" || s == "raddecay" || s == "taubnut_slice";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    PotentialExpr parse() {
        PotentialExpr e = parse_pot();
        if (lex_.peek().type != Tok::end)
            throw ParseError("unexpected trailing input", lex_.peek().offset);
        return e;
    }

private:
    Lexer lex_;

    PotentialExpr parse_pot() {
        PotentialExpr e;
        e.terms.push_back(parse_term(false));
        while (lex_.peek().type == Tok::plus || lex_.peek().type == Tok::minus) {
            bool neg = lex_.take().type == Tok::minus;
            e.terms.push_back(parse_term(neg));
        }
        return e;
    }

    PotentialTerm parse_term(bool negated) {
        PotentialTerm t;
        t.negated = negated;
        const Token& tok = lex_.peek();
        if (tok.type == Tok::number) {
            Token num = lex_.take();
            Coef c;
            if (lex_.peek().type == Tok::slash) {
                lex_.take();
                if (lex_.peek().type != Tok::number)
                    throw ParseError("expected denominator", lex_.peek().offset);
                Token den = lex_.take();
                try {
                    c.value = rational_from_decimal(num.text + "/" + den.text);
                } catch (const Error&) {
                    throw ParseError("invalid rational coefficient", num.offset);
                }
            } else {
                try {
                    c.value = rational_from_decimal(num.text);
                } catch (const Error&) {
                    throw ParseError("invalid numeric coefficient", num.offset);
                }
            }
            t.coef = std::move(c);
            expect(Tok::star, "expected '*' after coefficient");
            t.atom = parse_atom();
            return t;
        }
        if (tok.type == Tok::ident && !is_atom_name(tok.text)) {
            // A bare identifier is only valid as a parameter coefficient.
            Token id = lex_.take();
            if (lex_.peek().type == Tok::lparen)
                throw ParseError("unknown atom '" + id.text + "'", id.offset);
            if (lex_.peek().type != Tok::star)
                throw ParseError("unknown atom '" + id.text + "'", id.offset);
            lex_.take();
            t.coef = Coef{id.text};
            t.atom = parse_atom();
            return t;
        }
        t.atom = parse_atom();
        return t;
    }

    PotentialAtom parse_atom() {
        const Token& tok = lex_.peek();
        if (tok.type == Tok::lparen) {
            lex_.take();
            PotentialExpr inner = parse_pot();
            expect(Tok::rparen, "expected ')'");
            return AtomGroup{std::make_shared<PotentialExpr>(std::move(inner))};
        }
        if (tok.type != Tok::ident) throw ParseError("expected atom", tok.offset);
        Token id = lex_.take();
        if (id.text == "normsq") return AtomNormSq{};
        if (!is_atom_name(id.text)) throw ParseError("unknown atom '" + id.text + "'", id.offset);
        expect(Tok::lparen, "expected '(' after '" + id.text + "'");
        if (lex_.peek().type != Tok::ident)
            throw ParseError("expected parameter name", lex_.peek().offset);
        Token param = lex_.take();
        expect(Tok::rparen, "expected ')'");
        if (id.text == "sepdecay") return AtomSepDecay{param.text};
        if (id.text == "raddecay") return AtomRadDecay{param.text};
        return AtomTaubNutSlice{param.text};
    }

    void expect(Tok type, const std::string& msg) {
        if (lex_.peek().type != type) throw ParseError(msg, lex_.peek().offset);
        lex_.take();
    }
};

std::string atom_to_string(const PotentialAtom& a) {
    struct V {
        std::string operator()(const AtomNormSq&) const { return "normsq"; }
        std::string operator()(const AtomSepDecay& d) const {
            return "sepdecay(" + d.alpha_param + ")";
        }
        std::string operator()(const AtomRadDecay& d) const {
            return "raddecay(" + d.alpha_param + ")";
        }
        std::string operator()(const AtomTaubNutSlice& d) const {
            return "taubnut_slice(" + d.m_param + ")";
        }
        std::string operator()(const AtomGroup& g) const { return "(" + to_string(*g.inner) + ")"; }
    };
    return std::visit(V{}, a);
}

void collect_atom_params(const PotentialAtom& a, std::set<std::string>& out) {
    struct V {
        std::set<std::string>& out;
        void operator()(const AtomNormSq&) const {}
        void operator()(const AtomSepDecay& d) const { out.insert(d.alpha_param); }
        void operator()(const AtomRadDecay& d) const { out.insert(d.alpha_param); }
        void operator()(const AtomTaubNutSlice& d) const { out.insert(d.m_param); }
        void operator()(const AtomGroup& g) const {
            for (const auto& p : collect_parameters(*g.inner)) out.insert(p);
        }
    };
    std::visit(V{out}, a);
}

template <typename Pred>
bool any_atom(const PotentialExpr& e, Pred pred) {
    for (const auto& t : e.terms) {
        if (pred(t.atom)) return true;
        if (const auto* g = std::get_if<AtomGroup>(&t.atom))
            if (any_atom(*g->inner, pred)) return true;
    }
    return false;
}

}  // namespace

PotentialExpr parse_potential(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const PotentialExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const PotentialTerm& t = e.terms[i];
        if (i == 0) {
            if (t.negated) out += "- ";  // not producible by the grammar; kept readable
        } else {
            out += t.negated ? " - " : " + ";
        }
        if (t.coef) {
            if (const auto* q = std::get_if<mpq_class>(&t.coef->value))
                out += rational_str(*q);
            else
                out += std::get<std::string>(t.coef->value);
            out += "*";
        }
        out += atom_to_string(t.atom);
    }
    return out;
}

std::set<std::string> collect_parameters(const PotentialExpr& e) {
    std::set<std::string> out;
    for (const auto& t : e.terms) {
        if (t.coef)
            if (const auto* id = std::get_if<std::string>(&t.coef->value)) out.insert(*id);
        collect_atom_params(t.atom, out);
    }
    return out;
}

namespace {

void collect_decay_params_impl(const PotentialExpr& e, std::set<std::string>& out) {
    for (const auto& t : e.terms) {
        if (const auto* s = std::get_if<AtomSepDecay>(&t.atom)) out.insert(s->alpha_param);
        if (const auto* r = std::get_if<AtomRadDecay>(&t.atom)) out.insert(r->alpha_param);
        if (const auto* g = std::get_if<AtomGroup>(&t.atom))
            collect_decay_params_impl(*g->inner, out);
    }
}

}  // namespace

std::set<std::string> collect_decay_exponent_params(const PotentialExpr& e) {
    std::set<std::string> out;
    collect_decay_params_impl(e, out);
    return out;
}

bool uses_decay_atom(const PotentialExpr& e) {
    return any_atom(e, [](const PotentialAtom& a) {
        return std::holds_alternative<AtomSepDecay>(a) || std::holds_alternative<AtomRadDecay>(a);
    });
}

bool uses_radial_decay_atom(const PotentialExpr& e) {
    return any_atom(e,
                    [](const PotentialAtom& a) { return std::holds_alternative<AtomRadDecay>(a); });
}

bool uses_taubnut_atom(const PotentialExpr& e) {
    return any_atom(
        e, [](const PotentialAtom& a) { return std::holds_alternative<AtomTaubNutSlice>(a); });
}

}  // namespace calabi
