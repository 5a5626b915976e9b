// Normalization to SNF.
#include "seqlogic/normalize.hpp"

namespace seqlogic {

namespace {

using C = NormalCategory;

C cat(const Term& t) { return classify_snf(t); }

[[noreturn]] void reject(const char* fn, const Term& t) {
    throw NormalFormError(std::string(fn) + ": argument outside its grammatical category: " + print(t));
}

Term And(Term l, Term r) { return Term::and_sc(std::move(l), std::move(r)); }
Term Or(Term l, Term r) { return Term::or_sc(std::move(l), std::move(r)); }

// Pieces of an l-term (head && P^T) || P^F, where head is a or !a.
struct Lit {
    const Term& head;
    const Term& pt;
    const Term& pf;
    const Term& atom() const { return head.is_atom() ? head : head.arg(); }
};

Lit split(const Term& l) { return {l.lhs().lhs(), l.lhs().rhs(), l.rhs()}; }

Term fn(const Term& p);
Term fn1(const Term& p);
Term fc(const Term& p, const Term& q);
Term fc1(const Term& p, const Term& q);
Term fc2(const Term& p, const Term& q);
Term fc3(const Term& p, const Term& q);

Term fn(const Term& p) {
    switch (cat(p)) {
        case C::TTerm: {
            if (p.is_true()) return Term::fls();
            // (a && P^T) || Q^T
            const Term& a = p.lhs().lhs();
            return And(Or(a, fn(p.rhs())), fn(p.lhs().rhs()));
        }
        case C::FTerm: {
            if (p.is_false()) return Term::tru();
            // (a || P^F) && Q^F
            const Term& a = p.lhs().lhs();
            return Or(And(a, fn(p.rhs())), fn(p.lhs().rhs()));
        }
        case C::TStarTerm: return And(p.lhs(), fn1(p.rhs()));
        default: reject("fn", p);
    }
}

Term fn1(const Term& p) {
    switch (cat(p)) {
        case C::LTermPos: {
            Lit l = split(p);
            return Or(And(Term::negate(l.head), fn(l.pf)), fn(l.pt));
        }
        case C::LTermNeg: {
            Lit l = split(p);
            return Or(And(l.atom(), fn(l.pf)), fn(l.pt));
        }
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
        case C::TTerm: {
            if (p.is_true()) return q;
            // p = (a && P^T) || Q^T
            const Term& a = p.lhs().lhs();
            const Term& pt = p.lhs().rhs();
            const Term& qt = p.rhs();
            if (cq == C::TTerm) return Or(And(a, fc(pt, q)), fc(qt, q));
            if (cq == C::FTerm) return And(Or(a, fc(qt, q)), fc(pt, q));
            return And(fc(p, q.lhs()), q.rhs());
        }
        case C::FTerm: return p;
        case C::TStarTerm:
            if (cq == C::TTerm) return And(p.lhs(), fc1(p.rhs(), q));
            if (cq == C::FTerm) return fc(p.lhs(), fc2(p.rhs(), q));
            return And(p.lhs(), fc3(p.rhs(), q));
        default: reject("fc", p);
    }
}

Term fc1(const Term& p, const Term& q) {
    switch (cat(p)) {
        case C::LTermPos:
        case C::LTermNeg: {
            Lit l = split(p);
            return Or(And(l.head, fc(l.pt, q)), l.pf);
        }
        case C::StarConj: return And(p.lhs(), fc1(p.rhs(), q));
        case C::StarDisj: return Or(fc1(p.lhs(), q), fc1(p.rhs(), q));
        default: reject("fc1", p);
    }
}

Term fc2(const Term& p, const Term& q) {
    switch (cat(p)) {
        case C::LTermPos: {
            Lit l = split(p);
            return And(Or(l.atom(), l.pf), fc(l.pt, q));
        }
        case C::LTermNeg: {
            Lit l = split(p);
            return And(Or(l.atom(), fc(l.pt, q)), l.pf);
        }
        case C::StarConj: return fc2(p.lhs(), fc2(p.rhs(), q));
        case C::StarDisj:
            // The outer negation acts on a *-term, so it is the *-term
            // negation fn1.
            return fc2(fn1(fc1(p.lhs(), fn(q))), fc2(p.rhs(), q));
        default: reject("fc2", p);
    }
}

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

void require_snf(const char* fn, const Term& t) {
    if (!is_snf(t)) throw NormalFormError(std::string(fn) + ": argument not in SNF: " + print(t));
}

}  // namespace

Term scl_fn(const Term& p) {
    require_snf("scl_fn", p);
    return fn(p);
}

Term scl_fc(const Term& p, const Term& q) {
    require_snf("scl_fc", p);
    require_snf("scl_fc", q);
    return fc(p, q);
}

Term scl_normalize(const Term& t) {
    switch (t.op()) {
        case Op::Atom: return And(Term::tru(), Or(And(t, Term::tru()), Term::fls()));
        case Op::True:
        case Op::False: return t;
        case Op::Not: return fn(scl_normalize(t.arg()));
        case Op::AndSC: return fc(scl_normalize(t.lhs()), scl_normalize(t.rhs()));
        case Op::OrSC: return fn(fc(fn(scl_normalize(t.lhs())), fn(scl_normalize(t.rhs()))));
        default: throw LanguageError("scl_normalize: not an ST-term: " + print(t));
    }
}

}  // namespace seqlogic
