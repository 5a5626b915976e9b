// Random *-terms assembled from l-terms that occur in normal forms.
#pragma once

#include <random>
#include <vector>

#include "seqlogic/equiv.hpp"
#include "seqlogic/normalize.hpp"

namespace stars {

using seqlogic::NormalCategory;
using seqlogic::Term;

struct Logic {
    bool full;
    seqlogic::Language lang;
    Term (*normalize)(const Term&);
    NormalCategory (*classify)(const Term&);

    Term conj(Term l, Term r) const { return full ? Term::and_full(l, r) : Term::and_sc(l, r); }
    Term disj(Term l, Term r) const { return full ? Term::or_full(l, r) : Term::or_sc(l, r); }
};

inline const Logic kFel{true, seqlogic::Language::FT, seqlogic::fel_normalize, seqlogic::classify_fnf};
inline const Logic kScl{false, seqlogic::Language::ST, seqlogic::scl_normalize, seqlogic::classify_snf};

inline void collect_literals(const Logic& lg, const Term& star, std::vector<Term>& out) {
    NormalCategory c = lg.classify(star);
    if (c == NormalCategory::LTermPos || c == NormalCategory::LTermNeg) {
        out.push_back(star);
    } else {
        collect_literals(lg, star.lhs(), out);
        collect_literals(lg, star.rhs(), out);
    }
}

// l-terms harvested from the *-parts of normalized random terms.
inline std::vector<Term> literal_pool(const Logic& lg, std::size_t want, std::uint64_t seed0) {
    std::vector<Term> out;
    for (std::uint64_t seed = seed0; out.size() < want; ++seed) {
        Term n = lg.normalize(seqlogic::gen_term(lg.lang, 4, 3, seed));
        if (lg.classify(n) == NormalCategory::TStarTerm) collect_literals(lg, n.rhs(), out);
    }
    out.resize(want);
    return out;
}

enum class Need { Any, Conjunctive, Disjunctive };

// A *-term with `size` l-terms. Conjunctions take a disjunctive right
// operand and disjunctions a conjunctive one, as the grammar requires.
inline Term random_star(const Logic& lg, const std::vector<Term>& lits, std::mt19937_64& rng, std::size_t size,
                        Need need) {
    if (size == 1) return lits[std::uniform_int_distribution<std::size_t>(0, lits.size() - 1)(rng)];
    bool conj = need == Need::Conjunctive   ? true
                : need == Need::Disjunctive ? false
                                            : std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, size - 1)(rng);
    Term l = random_star(lg, lits, rng, k, Need::Any);
    Term r = random_star(lg, lits, rng, size - k, conj ? Need::Disjunctive : Need::Conjunctive);
    return conj ? lg.conj(l, r) : lg.disj(l, r);
}

}  // namespace stars
