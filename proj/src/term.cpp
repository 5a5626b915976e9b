#include "seqlogic/term.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

namespace seqlogic {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::make(Op op, std::string name, std::vector<Term> kids) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->hash = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(op));
    n->atoms = op == Op::Atom ? 1 : 0;
    for (const Term& k : kids) {
        n->atoms += k.node_->atoms;
        n->size += k.node_->size;
        n->hash = mix(n->hash, k.node_->hash);
    }
    n->name = std::move(name);
    n->kids = std::move(kids);
    return Term(std::move(n));
}

Term::Term() : Term(tru()) {}

Term Term::atom(std::string name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw std::invalid_argument("invalid atom name '" + name + "'");
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw std::invalid_argument("invalid atom name '" + name + "'");
    return make(Op::Atom, std::move(name), {});
}

Term Term::tru() {
    static const Term t = make(Op::True, "", {});
    return t;
}

Term Term::fls() {
    static const Term f = make(Op::False, "", {});
    return f;
}

Term Term::negate(Term t) { return make(Op::Not, "", {std::move(t)}); }
Term Term::and_sc(Term l, Term r) { return make(Op::AndSC, "", {std::move(l), std::move(r)}); }
Term Term::or_sc(Term l, Term r) { return make(Op::OrSC, "", {std::move(l), std::move(r)}); }
Term Term::and_full(Term l, Term r) { return make(Op::AndFull, "", {std::move(l), std::move(r)}); }
Term Term::or_full(Term l, Term r) { return make(Op::OrFull, "", {std::move(l), std::move(r)}); }

Term Term::cond(Term then_, Term if_, Term else_) {
    return make(Op::Cond, "", {std::move(then_), std::move(if_), std::move(else_)});
}

Term Term::binary(Op op, Term l, Term r) {
    switch (op) {
        case Op::AndSC:
        case Op::OrSC:
        case Op::AndFull:
        case Op::OrFull:
            return make(op, "", {std::move(l), std::move(r)});
        default:
            throw std::invalid_argument("Term::binary: not a binary connective");
    }
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.op != y.op || x.size != y.size || x.name != y.name) return false;
    for (std::size_t i = 0; i < x.kids.size(); ++i)
        if (x.kids[i] != y.kids[i]) return false;
    return true;
}

const char* language_name(Language l) {
    switch (l) {
        case Language::ST: return "ST";
        case Language::FT: return "FT";
        case Language::CT: return "CT";
        case Language::MIXED: return "MIXED";
    }
    return "?";
}

namespace {

struct Usage {
    bool sc = false, full = false, cond = false, neg = false;
};

void collect(const Term& t, Usage& u) {
    switch (t.op()) {
        case Op::AndSC:
        case Op::OrSC: u.sc = true; break;
        case Op::AndFull:
        case Op::OrFull: u.full = true; break;
        case Op::Cond: u.cond = true; break;
        case Op::Not: u.neg = true; break;
        default: break;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) collect(t.child(i), u);
}

}  // namespace

std::set<Language> classify_language(const Term& t) {
    Usage u;
    collect(t, u);
    std::set<Language> out{Language::MIXED};
    if (!u.full && !u.cond) out.insert(Language::ST);
    if (!u.sc && !u.cond) out.insert(Language::FT);
    if (!u.sc && !u.full && !u.neg) out.insert(Language::CT);
    return out;
}

bool in_language(const Term& t, Language l) { return classify_language(t).count(l) > 0; }

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, True, False, Bang, Amp, AmpAmp, Bar, BarBar, Quest, Colon, LParen, RParen, End };

const char* tok_text(Tok k) {
    switch (k) {
        case Tok::Ident: return "atom";
        case Tok::True: return "T";
        case Tok::False: return "F";
        case Tok::Bang: return "!";
        case Tok::Amp: return "&";
        case Tok::AmpAmp: return "&&";
        case Tok::Bar: return "|";
        case Tok::BarBar: return "||";
        case Tok::Quest: return "?";
        case Tok::Colon: return ":";
        case Tok::LParen: return "(";
        case Tok::RParen: return ")";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

class Parser {
public:
    Parser(std::string_view src, ParseOptions opts) : src_(src), opts_(opts) { advance(); }

    Term parse_all() {
        if (cur_.kind == Tok::End) fail("empty input");
        Term t = term();
        expect(Tok::End);
        return t;
    }

private:
    std::string_view src_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    Token cur_{Tok::End, 0, {}};
    std::vector<std::string> expected_;

    [[noreturn]] void fail(const std::string& msg) {
        std::set<std::string> uniq(expected_.begin(), expected_.end());
        std::vector<std::string> exp(uniq.begin(), uniq.end());
        std::ostringstream os;
        os << "parse error at offset " << cur_.offset << ": " << msg;
        if (!exp.empty()) {
            os << "; expected one of:";
            for (const auto& e : exp) os << " '" << e << "'";
        }
        throw ParseError(cur_.offset, std::move(exp), os.str());
    }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, start, {}};
            return;
        }
        char c = src_[pos_];
        auto two = [&](char d) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == d; };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string word(src_.substr(start, pos_ - start));
            if (word == "T" || word == "true")
                cur_ = {Tok::True, start, word};
            else if (word == "F" || word == "false")
                cur_ = {Tok::False, start, word};
            else
                cur_ = {Tok::Ident, start, word};
            return;
        }
        Tok k;
        std::size_t len = 1;
        switch (c) {
            case '!': k = Tok::Bang; break;
            case '&': k = two('&') ? (len = 2, Tok::AmpAmp) : Tok::Amp; break;
            case '|': k = two('|') ? (len = 2, Tok::BarBar) : Tok::Bar; break;
            case '?': k = Tok::Quest; break;
            case ':': k = Tok::Colon; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: {
                cur_ = {Tok::End, start, {}};
                std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                        ? "byte 0x" + hex(static_cast<unsigned char>(c))
                                        : std::string("'") + c + "'";
                fail("unknown character " + shown);
            }
        }
        pos_ += len;
        cur_ = {k, start, std::string(src_.substr(start, len))};
    }

    static std::string hex(unsigned v) {
        const char* d = "0123456789abcdef";
        return {d[v >> 4], d[v & 15]};
    }

    bool check(Tok k) {
        if (cur_.kind == k) return true;
        expected_.emplace_back(tok_text(k));
        return false;
    }

    bool accept(Tok k) {
        if (!check(k)) return false;
        expected_.clear();
        advance();
        return true;
    }

    void expect(Tok k) {
        if (!accept(k)) fail(cur_.kind == Tok::End ? "unexpected end of input" : "unexpected '" + cur_.text + "'");
    }

    Term term() { return cond(); }

    Term cond() {
        Term p = orsc();
        if (accept(Tok::Quest)) {
            Term q = term();
            expect(Tok::Colon);
            Term r = cond();
            return Term::cond(std::move(q), std::move(p), std::move(r));
        }
        return p;
    }

    template <typename Next>
    Term chain(Tok tok, Op op, Next next) {
        Term l = (this->*next)();
        while (accept(tok)) {
            Term r = (this->*next)();
            l = Term::binary(op, std::move(l), std::move(r));
        }
        return l;
    }

    Term orsc() { return chain(Tok::BarBar, Op::OrSC, &Parser::andsc); }
    Term andsc() { return chain(Tok::AmpAmp, Op::AndSC, &Parser::orf); }
    Term orf() { return chain(Tok::Bar, Op::OrFull, &Parser::andf); }
    Term andf() { return chain(Tok::Amp, Op::AndFull, &Parser::unary); }

    Term unary() {
        if (accept(Tok::Bang)) return Term::negate(unary());
        if (accept(Tok::True)) return Term::tru();
        if (accept(Tok::False)) return Term::fls();
        if (check(Tok::Ident)) {
            std::string name = cur_.text;
            bool lower = std::islower(static_cast<unsigned char>(name[0])) != 0;
            bool upper = std::isupper(static_cast<unsigned char>(name[0])) != 0;
            if (!lower && !(upper && opts_.allow_variables)) {
                expected_.clear();
                expected_.emplace_back("atom");
                fail(upper ? "'" + name + "' is not an atom (atoms start with a lowercase letter)"
                           : "invalid identifier '" + name + "'");
            }
            expected_.clear();
            advance();
            return Term::atom(std::move(name));
        }
        if (accept(Tok::LParen)) {
            Term t = term();
            expect(Tok::RParen);
            return t;
        }
        fail(cur_.kind == Tok::End ? "unexpected end of input" : "unexpected '" + cur_.text + "'");
    }
};

// Binding strength used by the printer; higher binds tighter.
int level(Op op) {
    switch (op) {
        case Op::Cond: return 0;
        case Op::OrSC: return 1;
        case Op::AndSC: return 2;
        case Op::OrFull: return 3;
        case Op::AndFull: return 4;
        default: return 5;
    }
}

const char* op_text(Op op) {
    switch (op) {
        case Op::OrSC: return " || ";
        case Op::AndSC: return " && ";
        case Op::OrFull: return " | ";
        case Op::AndFull: return " & ";
        default: return "";
    }
}

void emit(const Term& t, int min_level, std::string& out) {
    bool paren = level(t.op()) < min_level;
    if (paren) out += '(';
    switch (t.op()) {
        case Op::Atom: out += t.name(); break;
        case Op::True: out += 'T'; break;
        case Op::False: out += 'F'; break;
        case Op::Not:
            out += '!';
            emit(t.arg(), 5, out);
            break;
        case Op::Cond:
            emit(t.condition(), 1, out);
            out += " ? ";
            emit(t.then_branch(), 0, out);
            out += " : ";
            emit(t.else_branch(), 0, out);
            break;
        default: {
            int l = level(t.op());
            emit(t.lhs(), l, out);
            out += op_text(t.op());
            emit(t.rhs(), l + 1, out);
        }
    }
    if (paren) out += ')';
}

}  // namespace

Term parse(std::string_view input, ParseOptions opts) { return Parser(input, opts).parse_all(); }

std::string print(const Term& t) {
    std::string out;
    emit(t, 0, out);
    return out;
}

Term substitute(const Term& t, const std::vector<std::pair<std::string, Term>>& subst) {
    switch (t.op()) {
        case Op::Atom:
            for (const auto& [name, image] : subst)
                if (name == t.name()) return image;
            return t;
        case Op::True:
        case Op::False: return t;
        case Op::Not: return Term::negate(substitute(t.arg(), subst));
        case Op::Cond:
            return Term::cond(substitute(t.then_branch(), subst), substitute(t.condition(), subst),
                              substitute(t.else_branch(), subst));
        default: return Term::binary(t.op(), substitute(t.lhs(), subst), substitute(t.rhs(), subst));
    }
}

}  // namespace seqlogic
