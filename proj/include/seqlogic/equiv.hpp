// Equivalence decisions, the FEL-to-SCL translation, equation catalogs and
// the randomized soundness checker.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqlogic/evaltree.hpp"
#include "seqlogic/term.hpp"

namespace seqlogic {

constexpr std::size_t kDefaultMaxAtoms = 20;

class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(std::size_t atoms, std::size_t limit);
    std::size_t atoms() const { return atoms_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t atoms_, limit_;
};

struct EquivResult {
    bool equal = false;
    // A trace of one tree that the other tree lacks or yields differently.
    std::optional<Trace> witness;
    bool witness_from_lhs = true;
    std::uint64_t lhs_tree_size = 0;
    std::uint64_t rhs_tree_size = 0;
};

struct EquivOptions {
    std::size_t max_atoms = kDefaultMaxAtoms;
    // Compare canonical forms as well and fail loudly on disagreement.
    bool cross_check = true;
};

EquivResult compare_trees(const EvalTree& lhs, const EvalTree& rhs);
// True when the witness is a trace of the tree it claims to come from and
// is absent from (or yields differently in) the other one.
bool witness_valid(const EquivResult& r, const EvalTree& lhs, const EvalTree& rhs);

EquivResult equal_ffel(const Term& p, const Term& q, const EquivOptions& opts = {});
EquivResult equal_fscl(const Term& p, const Term& q, const EquivOptions& opts = {});
EquivResult equal_mixed(const Term& p, const Term& q, const EquivOptions& opts = {});

// h: full connectives expressed with short-circuit ones.
Term translate_h(const Term& p);

enum class SchemaLogic { FFEL, FSCL, MIXED, CP, CP_s, CP_f };

const char* logic_name(SchemaLogic l);
// Language the closed instances of a schema are drawn from.
Language instance_language(SchemaLogic l);

struct EquationSchema {
    std::string name;
    Term lhs;
    Term rhs;
    std::vector<std::string> variables;
    SchemaLogic logic;
};

// Parses both sides with uppercase variables and checks them against the
// logic's term language.
EquationSchema make_schema(std::string name, std::string_view lhs, std::string_view rhs, SchemaLogic logic);

struct Catalog {
    std::string name;
    std::vector<EquationSchema> schemas;
};

const std::vector<Catalog>& catalogs();
const Catalog* find_catalog(std::string_view name);
// Tab-separated table: catalog, schema, logic, lhs, rhs.
std::string export_catalogs();

struct GenOptions {
    std::size_t max_atoms = 6;
    std::size_t alphabet = 3;
    unsigned max_depth = 8;
};

Term gen_term(Language lang, std::size_t max_atoms, std::size_t alphabet, std::uint64_t seed);
Term gen_term(Language lang, const GenOptions& opts, std::uint64_t seed);

struct Counterexample {
    std::size_t trial = 0;
    std::vector<std::pair<std::string, Term>> substitution;
    Term lhs, rhs;
    EquivResult result;
};

struct SchemaReport {
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::optional<Counterexample> counterexample;
};

struct CheckOptions {
    std::size_t trials = 200;
    std::size_t max_atoms = 6;  // per substituted term
    std::size_t alphabet = 3;
    std::uint64_t seed = 0;
};

// Trials run in parallel; the reported counterexample is the one with the
// smallest trial index, so the result matches check_schema_serial.
SchemaReport check_schema(const EquationSchema& s, const CheckOptions& opts);
SchemaReport check_schema_serial(const EquationSchema& s, const CheckOptions& opts);

// The closed instance used by a given trial.
std::vector<std::pair<std::string, Term>> trial_substitution(const EquationSchema& s, const CheckOptions& opts,
                                                             std::size_t trial);

}  // namespace seqlogic
