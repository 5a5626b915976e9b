// Tree decompositions and the inversion of fe / se on normal forms.
#pragma once

#include <optional>
#include <stdexcept>

#include "seqlogic/evaltree.hpp"
#include "seqlogic/term.hpp"

namespace seqlogic {

enum class DecompKind { FelCd, FelDd, FelTsd, SclCd, SclDd, SclTsd };

const char* decomp_kind_name(DecompKind k);

struct Decomposition {
    HoleTree context;
    EvalTree core;
    DecompKind kind;
};

// Plugs the core back into the context according to the kind:
//   FelCd:  context[[1] -> core, [2] -> core[T -> F]]
//   FelDd:  context[[1] -> core[F -> T], [2] -> core]
//   others: context[[] -> core]
EvalTree recompose(const Decomposition& d);

std::optional<Decomposition> fel_cd(const EvalTree& x);
std::optional<Decomposition> fel_dd(const EvalTree& x);
std::optional<Decomposition> fel_tsd(const EvalTree& x);
std::optional<Decomposition> scl_cd(const EvalTree& x);
std::optional<Decomposition> scl_dd(const EvalTree& x);
std::optional<Decomposition> scl_tsd(const EvalTree& x);

// The tree is not the image of a normal form.
class InversionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Returns the FNF-term P with fe(P) == x; throws InversionError otherwise.
Term fel_g(const EvalTree& x);
// Returns the SNF-term P with se(P) == x; throws InversionError otherwise.
Term scl_g(const EvalTree& x);

}  // namespace seqlogic
