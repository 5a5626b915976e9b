#include "seqlogic/normalize.hpp"

namespace seqlogic {

const char* category_name(NormalCategory c) {
    switch (c) {
        case NormalCategory::TTerm: return "T-term";
        case NormalCategory::FTerm: return "F-term";
        case NormalCategory::LTermPos: return "l-term (positive)";
        case NormalCategory::LTermNeg: return "l-term (negative)";
        case NormalCategory::StarConj: return "*-term (conjunction)";
        case NormalCategory::StarDisj: return "*-term (disjunction)";
        case NormalCategory::TStarTerm: return "T-*-term";
        case NormalCategory::NotNormal: return "not normal";
    }
    return "?";
}

bool is_star(NormalCategory c) {
    return c == NormalCategory::LTermPos || c == NormalCategory::LTermNeg || c == NormalCategory::StarConj ||
           c == NormalCategory::StarDisj;
}

bool is_conjunctive(NormalCategory c) { return is_star(c) && c != NormalCategory::StarDisj; }
bool is_disjunctive(NormalCategory c) { return is_star(c) && c != NormalCategory::StarConj; }

namespace {

bool is_neg_atom(const Term& t) { return t.op() == Op::Not && t.arg().is_atom(); }

// Both grammars share the same shape above the l-terms; only the
// connectives and the T-term/F-term/l-term productions differ.
struct Grammar {
    Op conj, disj;
    bool short_circuit;

    bool t_term(const Term& t) const {
        if (t.is_true()) return true;
        if (!short_circuit)
            return t.op() == disj && t.lhs().is_atom() && t_term(t.rhs());
        // (a && P^T) || P^T
        return t.op() == disj && t.lhs().op() == conj && t.lhs().lhs().is_atom() && t_term(t.lhs().rhs()) &&
               t_term(t.rhs());
    }

    bool f_term(const Term& t) const {
        if (t.is_false()) return true;
        if (!short_circuit)
            return t.op() == conj && t.lhs().is_atom() && f_term(t.rhs());
        // (a || P^F) && P^F
        return t.op() == conj && t.lhs().op() == disj && t.lhs().lhs().is_atom() && f_term(t.lhs().rhs()) &&
               f_term(t.rhs());
    }

    NormalCategory lit(const Term& t) const {
        const Term* head;
        if (!short_circuit) {
            // a & P^T, !a & P^T
            if (t.op() != conj || !t_term(t.rhs())) return NormalCategory::NotNormal;
            head = &t.lhs();
        } else {
            // (a && P^T) || P^F, (!a && P^T) || P^F
            if (t.op() != disj || t.lhs().op() != conj || !t_term(t.lhs().rhs()) || !f_term(t.rhs()))
                return NormalCategory::NotNormal;
            head = &t.lhs().lhs();
        }
        if (head->is_atom()) return NormalCategory::LTermPos;
        if (is_neg_atom(*head)) return NormalCategory::LTermNeg;
        return NormalCategory::NotNormal;
    }

    NormalCategory star(const Term& t) const {
        if (auto l = lit(t); l != NormalCategory::NotNormal) return l;
        if (t.op() == conj && is_star(star(t.lhs())) && is_disjunctive(star(t.rhs())))
            return NormalCategory::StarConj;
        if (t.op() == disj && is_star(star(t.lhs())) && is_conjunctive(star(t.rhs())))
            return NormalCategory::StarDisj;
        return NormalCategory::NotNormal;
    }

    NormalCategory classify(const Term& t) const {
        if (t_term(t)) return NormalCategory::TTerm;
        if (f_term(t)) return NormalCategory::FTerm;
        if (t.op() == conj && t_term(t.lhs()) && is_star(star(t.rhs()))) return NormalCategory::TStarTerm;
        return star(t);
    }
};

constexpr Grammar fel_grammar{Op::AndFull, Op::OrFull, false};
constexpr Grammar scl_grammar{Op::AndSC, Op::OrSC, true};

bool whole(NormalCategory c) {
    return c == NormalCategory::TTerm || c == NormalCategory::FTerm || c == NormalCategory::TStarTerm;
}

}  // namespace

NormalCategory classify_fnf(const Term& t) {
    if (!in_language(t, Language::FT)) throw LanguageError("classify_fnf: not an FT-term: " + print(t));
    return fel_grammar.classify(t);
}

NormalCategory classify_snf(const Term& t) {
    if (!in_language(t, Language::ST)) throw LanguageError("classify_snf: not an ST-term: " + print(t));
    return scl_grammar.classify(t);
}

bool is_fnf(const Term& t) { return in_language(t, Language::FT) && whole(fel_grammar.classify(t)); }
bool is_snf(const Term& t) { return in_language(t, Language::ST) && whole(scl_grammar.classify(t)); }

namespace nf {

Term fel_lit(const std::string& a, bool positive, const Term& pt) {
    Term head = positive ? Term::atom(a) : Term::negate(Term::atom(a));
    return Term::and_full(head, pt);
}

Term scl_lit(const std::string& a, bool positive, const Term& pt, const Term& pf) {
    Term head = positive ? Term::atom(a) : Term::negate(Term::atom(a));
    return Term::or_sc(Term::and_sc(head, pt), pf);
}

}  // namespace nf

}  // namespace seqlogic
