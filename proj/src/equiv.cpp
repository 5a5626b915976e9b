#include "seqlogic/equiv.hpp"

#include "seqlogic/normalize.hpp"

namespace seqlogic {

GuardExceeded::GuardExceeded(std::size_t atoms, std::size_t limit)
    : std::runtime_error("term has " + std::to_string(atoms) + " atom occurrences, limit is " +
                         std::to_string(limit)),
      atoms_(atoms),
      limit_(limit) {}

namespace {

using Path = std::vector<std::pair<std::string, bool>>;

Trace leftmost_trace(const Tree& x, Path path) {
    Tree cur = x;
    while (!cur.is_leaf()) {
        path.emplace_back(cur.atom(), true);
        cur = cur.left();
    }
    return Trace{std::move(path), cur.label() == Leaf::T};
}

// Finds the first position where the trees differ.
bool diverge(const Tree& a, const Tree& b, Path& path, EquivResult& out) {
    if (a == b) return false;
    bool same_shape = !a.is_leaf() && !b.is_leaf() && a.atom() == b.atom();
    if (!same_shape) {
        // Prefer a witness from whichever side is a leaf, so the trace is
        // as short as possible.
        bool from_lhs = a.is_leaf() || !b.is_leaf();
        out.witness = leftmost_trace(from_lhs ? a : b, path);
        out.witness_from_lhs = from_lhs;
        return true;
    }
    path.emplace_back(a.atom(), true);
    if (diverge(a.left(), b.left(), path, out)) return true;
    path.back().second = false;
    if (diverge(a.right(), b.right(), path, out)) return true;
    path.pop_back();
    return false;
}

void guard(const Term& t, const EquivOptions& opts) {
    if (t.atom_count() > opts.max_atoms) throw GuardExceeded(t.atom_count(), opts.max_atoms);
}

void require(const Term& t, Language l, const char* fn) {
    if (!in_language(t, l))
        throw LanguageError(std::string(fn) + ": not an " + language_name(l) + "-term: " + print(t));
}

}  // namespace

EquivResult compare_trees(const EvalTree& lhs, const EvalTree& rhs) {
    EquivResult r;
    r.lhs_tree_size = lhs.leaf_count();
    r.rhs_tree_size = rhs.leaf_count();
    Path path;
    r.equal = !diverge(lhs, rhs, path, r);
    return r;
}

bool witness_valid(const EquivResult& r, const EvalTree& lhs, const EvalTree& rhs) {
    if (r.equal || !r.witness) return false;
    const Tree& own = r.witness_from_lhs ? lhs : rhs;
    const Tree& other = r.witness_from_lhs ? rhs : lhs;
    Leaf yield = r.witness->yield ? Leaf::T : Leaf::F;
    auto here = follow(own, r.witness->path);
    if (!here || !here->is_leaf() || here->label() != yield) return false;
    auto there = follow(other, r.witness->path);
    return !there || !there->is_leaf() || there->label() != yield;
}

EquivResult equal_ffel(const Term& p, const Term& q, const EquivOptions& opts) {
    require(p, Language::FT, "equal_ffel");
    require(q, Language::FT, "equal_ffel");
    guard(p, opts);
    guard(q, opts);
    EquivResult r = compare_trees(fe(p), fe(q));
    if (opts.cross_check && r.equal != (fel_normalize(p) == fel_normalize(q)))
        throw std::logic_error("equal_ffel: tree equality and normal-form identity disagree on " + print(p) +
                               " and " + print(q));
    return r;
}

EquivResult equal_fscl(const Term& p, const Term& q, const EquivOptions& opts) {
    require(p, Language::ST, "equal_fscl");
    require(q, Language::ST, "equal_fscl");
    guard(p, opts);
    guard(q, opts);
    EquivResult r = compare_trees(se(p), se(q));
    if (opts.cross_check && r.equal != (scl_normalize(p) == scl_normalize(q)))
        throw std::logic_error("equal_fscl: tree equality and normal-form identity disagree on " + print(p) +
                               " and " + print(q));
    return r;
}

EquivResult equal_mixed(const Term& p, const Term& q, const EquivOptions& opts) {
    guard(p, opts);
    guard(q, opts);
    return compare_trees(ce(p), ce(q));
}

namespace {

Term h(const Term& p) {
    switch (p.op()) {
        case Op::Atom:
        case Op::True:
        case Op::False: return p;
        case Op::Not: return Term::negate(h(p.arg()));
        case Op::AndFull: {
            Term l = h(p.lhs()), r = h(p.rhs());
            return Term::and_sc(Term::or_sc(l, Term::and_sc(r, Term::fls())), r);
        }
        case Op::OrFull: {
            Term l = h(p.lhs()), r = h(p.rhs());
            return Term::or_sc(Term::and_sc(l, Term::or_sc(r, Term::tru())), r);
        }
        default: throw LanguageError("translate_h: not an FT-term");
    }
}

}  // namespace

Term translate_h(const Term& p) {
    require(p, Language::FT, "translate_h");
    Term out = h(p);
#ifndef NDEBUG
    if (p.atom_count() <= 12 && se(out) != fe(p))
        throw std::logic_error("translate_h: se(h(p)) differs from fe(p) for " + print(p));
#endif
    return out;
}

}  // namespace seqlogic
