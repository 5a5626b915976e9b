// Normalization to FNF.
#include "seqlogic/normalize.hpp"

namespace seqlogic {

namespace {

using C = NormalCategory;

C cat(const Term& t) { return classify_fnf(t); }

[[noreturn]] void reject(const char* fn, const Term& t) {
    throw NormalFormError(std::string(fn) + ": argument outside its grammatical category: " + print(t));
}

Term And(Term l, Term r) { return Term::and_full(std::move(l), std::move(r)); }
Term Or(Term l, Term r) { return Term::or_full(std::move(l), std::move(r)); }

Term fn(const Term& p);
Term fn1(const Term& p);
Term fc(const Term& p, const Term& q);
Term fc1(const Term& p, const Term& q);
Term fc2(const Term& p, const Term& q);
Term fc3(const Term& p, const Term& q);

Term fn(const Term& p) {
    switch (cat(p)) {
        case C::TTerm:
            if (p.is_true()) return Term::fls();
            return And(p.lhs(), fn(p.rhs()));
        case C::FTerm:
            if (p.is_false()) return Term::tru();
            return Or(p.lhs(), fn(p.rhs()));
        case C::TStarTerm: return And(p.lhs(), fn1(p.rhs()));
        default: reject("fn", p);
    }
}

// Negation of a *-term, keeping the T-term tails of the l-terms.
Term fn1(const Term& p) {
    switch (cat(p)) {
        case C::LTermPos: return And(Term::negate(p.lhs()), p.rhs());
        case C::LTermNeg: return And(p.lhs().arg(), p.rhs());
        case C::StarConj: return Or(fn1(p.lhs()), fn1(p.rhs()));
        case C::StarDisj: return And(fn1(p.lhs()), fn1(p.rhs()));
        default: reject("fn1", p);
    }
}

Term fc(const Term& p, const Term& q) {
    C cp = cat(p);
    C cq = cat(q);
    if (cq != C::TTerm && cq != C::FTerm && cq != C::TStarTerm) reject("fc", q);
    switch (cp) {
        case C::TTerm:
            if (p.is_true()) return q;
            if (cq == C::TTerm) return Or(p.lhs(), fc(p.rhs(), q));
            if (cq == C::FTerm) return And(p.lhs(), fc(p.rhs(), q));
            return And(fc(p, q.lhs()), q.rhs());
        case C::FTerm:
            if (p.is_false()) {
                if (cq == C::TTerm) return fn(q);
                if (cq == C::FTerm) return q;
                return fc(q, Term::fls());
            }
            return And(p.lhs(), fc(p.rhs(), q));
        case C::TStarTerm:
            if (cq == C::TTerm) return And(p.lhs(), fc1(p.rhs(), q));
            if (cq == C::FTerm) return fc(p.lhs(), fc2(p.rhs(), q));
            return And(p.lhs(), fc3(p.rhs(), q));
        default: reject("fc", p);
    }
}

// *-term followed by a T-term: the T-term is absorbed into the last l-term.
Term fc1(const Term& p, const Term& q) {
    switch (cat(p)) {
        case C::LTermPos:
        case C::LTermNeg: return And(p.lhs(), fc(p.rhs(), q));
        case C::StarConj: return And(p.lhs(), fc1(p.rhs(), q));
        case C::StarDisj: return Or(p.lhs(), fc1(p.rhs(), q));
        default: reject("fc1", p);
    }
}

// *-term followed by an F-term: the result is an F-term.
Term fc2(const Term& p, const Term& q) {
    switch (cat(p)) {
        case C::LTermPos: return And(p.lhs(), fc(p.rhs(), q));
        case C::LTermNeg: return And(p.lhs().arg(), fc(p.rhs(), q));
        case C::StarConj:
        case C::StarDisj: return fc2(p.lhs(), fc2(p.rhs(), q));
        default: reject("fc2", p);
    }
}

// *-term followed by a T-*-term q = Q^T & R.
Term fc3(const Term& p, const Term& q) {
    if (cat(q) != C::TStarTerm) reject("fc3", q);
    const Term& qt = q.lhs();
    const Term& r = q.rhs();
    switch (cat(r)) {
        case C::LTermPos:
        case C::LTermNeg:
        case C::StarDisj: return And(fc1(p, qt), r);
        case C::StarConj: return And(fc3(p, And(qt, r.lhs())), r.rhs());
        default: reject("fc3", q);
    }
}

void require_fnf(const char* fn, const Term& t) {
    if (!is_fnf(t)) throw NormalFormError(std::string(fn) + ": argument not in FNF: " + print(t));
}

}  // namespace

Term fel_fn(const Term& p) {
    require_fnf("fel_fn", p);
    return fn(p);
}

Term fel_fc(const Term& p, const Term& q) {
    require_fnf("fel_fc", p);
    require_fnf("fel_fc", q);
    return fc(p, q);
}

Term fel_normalize(const Term& t) {
    switch (t.op()) {
        case Op::Atom: return And(Term::tru(), And(t, Term::tru()));
        case Op::True:
        case Op::False: return t;
        case Op::Not: return fn(fel_normalize(t.arg()));
        case Op::AndFull: return fc(fel_normalize(t.lhs()), fel_normalize(t.rhs()));
        case Op::OrFull:
            return fn(fc(fn(fel_normalize(t.lhs())), fn(fel_normalize(t.rhs()))));
        default: throw LanguageError("fel_normalize: not an FT-term: " + print(t));
    }
}

}  // namespace seqlogic
