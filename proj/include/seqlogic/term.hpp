// Terms over atoms with side effects: short-circuit, fully evaluated and
// conditional connectives, plus the concrete syntax.
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqlogic {

enum class Op : unsigned char {
    Atom,
    True,
    False,
    Not,
    AndSC,    // &&
    OrSC,     // ||
    AndFull,  // &
    OrFull,   // |
    Cond,     // p ? q : r, children stored as (then, if, else)
};

class Term {
public:
    Term();  // T

    static Term atom(std::string name);
    static Term tru();
    static Term fls();
    static Term negate(Term t);
    static Term and_sc(Term l, Term r);
    static Term or_sc(Term l, Term r);
    static Term and_full(Term l, Term r);
    static Term or_full(Term l, Term r);
    static Term cond(Term then_, Term if_, Term else_);
    static Term binary(Op op, Term l, Term r);

    Op op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    std::size_t arity() const { return node_->kids.size(); }
    const Term& child(std::size_t i) const { return node_->kids[i]; }

    // Binary and unary accessors. For Cond use then_branch/condition/else_branch.
    const Term& arg() const { return node_->kids[0]; }
    const Term& lhs() const { return node_->kids[0]; }
    const Term& rhs() const { return node_->kids[1]; }
    const Term& then_branch() const { return node_->kids[0]; }
    const Term& condition() const { return node_->kids[1]; }
    const Term& else_branch() const { return node_->kids[2]; }

    bool is_atom() const { return op() == Op::Atom; }
    bool is_true() const { return op() == Op::True; }
    bool is_false() const { return op() == Op::False; }

    // Number of atom occurrences.
    std::size_t atom_count() const { return node_->atoms; }
    std::size_t size() const { return node_->size; }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node {
        Op op;
        std::string name;
        std::vector<Term> kids;
        std::size_t atoms = 0;
        std::size_t size = 1;
        std::size_t hash = 0;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make(Op op, std::string name, std::vector<Term> kids);

    std::shared_ptr<const Node> node_;
};

enum class Language { ST, FT, CT, MIXED };

const char* language_name(Language l);

// Every language t belongs to; MIXED is always present.
std::set<Language> classify_language(const Term& t);
bool in_language(const Term& t, Language l);

bool is_identifier(std::string_view s);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what);
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Raised when a term is outside the language an operation requires.
class LanguageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ParseOptions {
    // Schema variables are uppercase identifiers other than T and F.
    bool allow_variables = false;
};

Term parse(std::string_view input, ParseOptions opts = {});
std::string print(const Term& t);

// Simultaneous substitution of terms for variables (atoms by name).
Term substitute(const Term& t, const std::vector<std::pair<std::string, Term>>& subst);

}  // namespace seqlogic
