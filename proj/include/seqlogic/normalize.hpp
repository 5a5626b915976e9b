// Normal forms for the fully evaluated (FNF) and short-circuit (SNF) logics.
#pragma once

#include <stdexcept>
#include <string>

#include "seqlogic/term.hpp"

namespace seqlogic {

// Grammatical category of a term with respect to FNF or SNF. A term that
// fits several productions gets its most specific one: an l-term is also a
// *-term, but classifies as LTermPos/LTermNeg.
enum class NormalCategory {
    TTerm,
    FTerm,
    LTermPos,
    LTermNeg,
    StarConj,  // P* & P^d (or && on the SNF side)
    StarDisj,  // P* | P^c
    TStarTerm,
    NotNormal,
};

const char* category_name(NormalCategory c);

bool is_star(NormalCategory c);  // l-term or *-term
bool is_conjunctive(NormalCategory c);  // P^c: l-term or *-conjunction
bool is_disjunctive(NormalCategory c);  // P^d: l-term or *-disjunction

NormalCategory classify_fnf(const Term& t);
NormalCategory classify_snf(const Term& t);

// Whole normal forms: T-terms, F-terms and T-*-terms.
bool is_fnf(const Term& t);
bool is_snf(const Term& t);

// Raised when a normalizer auxiliary receives an argument outside its
// grammatical precondition.
class NormalFormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// FEL side.
Term fel_fn(const Term& p);
Term fel_fc(const Term& p, const Term& q);
Term fel_normalize(const Term& t);

// SCL side.
Term scl_fn(const Term& p);
Term scl_fc(const Term& p, const Term& q);
Term scl_normalize(const Term& t);

// Shorthands used when building normal forms by hand.
namespace nf {
// FEL l-terms: a & P^T and !a & P^T
Term fel_lit(const std::string& a, bool positive, const Term& pt);
// SCL l-terms: (a && P^T) || P^F and (!a && P^T) || P^F
Term scl_lit(const std::string& a, bool positive, const Term& pt, const Term& pf);
}  // namespace nf

}  // namespace seqlogic
