#include <algorithm>
#include <set>
#include <sstream>

#include "seqlogic/equiv.hpp"

namespace seqlogic {

const char* logic_name(SchemaLogic l) {
    switch (l) {
        case SchemaLogic::FFEL: return "FFEL";
        case SchemaLogic::FSCL: return "FSCL";
        case SchemaLogic::MIXED: return "MIXED";
        case SchemaLogic::CP: return "CP";
        case SchemaLogic::CP_s: return "CP_s";
        case SchemaLogic::CP_f: return "CP_f";
    }
    return "?";
}

Language instance_language(SchemaLogic l) {
    switch (l) {
        case SchemaLogic::FFEL: return Language::FT;
        case SchemaLogic::FSCL: return Language::ST;
        case SchemaLogic::CP: return Language::CT;
        default: return Language::MIXED;
    }
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
    if (t.is_atom()) out.insert(t.name());
    for (std::size_t i = 0; i < t.arity(); ++i) collect_vars(t.child(i), out);
}

bool fits(const Term& t, SchemaLogic l) {
    auto langs = classify_language(t);
    switch (l) {
        case SchemaLogic::FFEL: return langs.count(Language::FT) > 0;
        case SchemaLogic::FSCL: return langs.count(Language::ST) > 0;
        case SchemaLogic::CP: return langs.count(Language::CT) > 0;
        default: return true;
    }
}

}  // namespace

EquationSchema make_schema(std::string name, std::string_view lhs, std::string_view rhs, SchemaLogic logic) {
    ParseOptions opts;
    opts.allow_variables = true;
    EquationSchema s{std::move(name), parse(lhs, opts), parse(rhs, opts), {}, logic};
    std::set<std::string> vars;
    collect_vars(s.lhs, vars);
    collect_vars(s.rhs, vars);
    for (const auto& v : vars) {
        if (is_identifier(v))
            throw std::invalid_argument("schema " + s.name + ": '" + v + "' is an atom, not a variable");
        s.variables.push_back(v);
    }
    if (!fits(s.lhs, logic) || !fits(s.rhs, logic))
        throw LanguageError("schema " + s.name + " leaves the language of " + logic_name(logic));
    return s;
}

namespace {

using L = SchemaLogic;

std::vector<Catalog> build() {
    auto cat = [](std::string name, L logic,
                  std::initializer_list<std::tuple<const char*, const char*, const char*>> rows) {
        Catalog c{std::move(name), {}};
        for (auto [n, l, r] : rows) c.schemas.push_back(make_schema(n, l, r, logic));
        return c;
    };
    // Conditionals q <| p |> r are written p ? q : r.
    return {
        cat("EqFFEL", L::FFEL,
            {{"FEL1", "F", "!T"},
             {"FEL2", "X | Y", "!(!X & !Y)"},
             {"FEL3", "!!X", "X"},
             {"FEL4", "(X & Y) & Z", "X & (Y & Z)"},
             {"FEL5", "T & X", "X"},
             {"FEL6", "X & T", "X"},
             {"FEL7", "X & F", "F & X"},
             {"FEL8", "X & F", "!X & F"},
             {"FEL9", "(X & F) | Y", "(X | T) & Y"},
             {"FEL10", "X | (Y & F)", "X & (Y | T)"}}),
        cat("EqFSCL", L::FSCL,
            {{"SCL1", "F", "!T"},
             {"SCL2", "X || Y", "!(!X && !Y)"},
             {"SCL3", "!!X", "X"},
             {"SCL4", "(X && Y) && Z", "X && (Y && Z)"},
             {"SCL5", "T && X", "X"},
             {"SCL6", "X && T", "X"},
             {"SCL7", "F && X", "F"},
             {"SCL8", "X && F", "!X && F"},
             {"SCL9", "(X && F) || Y", "(X || T) && Y"},
             {"SCL10", "(X && Y) || (Z && F)", "(X || (Z && F)) && (Y || (Z && F))"}}),
        cat("CP", L::CP,
            {{"CP1", "T ? X : Y", "X"},
             {"CP2", "F ? X : Y", "Y"},
             {"CP3", "X ? T : F", "X"},
             {"CP4", "(Z ? Y : U) ? X : V", "Z ? (Y ? X : V) : (U ? X : V)"}}),
        cat("CP_s", L::CP_s,
            {{"CPs-not", "!X", "X ? F : T"},
             {"CPs-and", "X && Y", "X ? Y : F"},
             {"CPs-or", "X || Y", "X ? T : Y"}}),
        cat("CP_f", L::CP_f,
            {{"CPf-not", "!X", "X ? F : T"},
             {"CPf-and", "X & Y", "X ? Y : (Y ? F : F)"},
             {"CPf-or", "X | Y", "X ? (Y ? T : T) : Y"}}),
        cat("GeneralExt", L::MIXED,
            {{"GEN-and", "X & Y", "(X || (Y && F)) && Y"},
             {"GEN-or", "X | Y", "(X && (Y || T)) || Y"}}),
        cat("DerivedLemmas-FEL", L::FFEL,
            {{"feqs1", "X & (Y & F)", "!X & (Y & F)"},
             {"feqs2", "(X | T) & Y", "!(X | T) | Y"},
             {"feqs3", "X | (Y & (Z | T))", "(X | Y) & (Z | T)"},
             {"feqs2-1", "X & (Y & (Z & F))", "(X | Y) & (Z & F)"},
             {"feqs2-2", "!X & (Y | T)", "!(X & (Y | T))"}}),
        cat("DerivedLemmas-SCL", L::FSCL,
            {{"seqs1", "(X || Y) && (Z && F)", "(!X || (Z && F)) && (Y && (Z && F))"},
             {"seqs2", "(X || (Y && F)) && (Z && F)", "(!X || (Z && F)) && (Y && F)"},
             {"seqs3", "(X && (Y || T)) || (Z && F)", "(X || (Z && F)) && (Y || T)"},
             {"seqs2-1", "(X || T) && !Y", "!((X || T) && Y)"},
             {"seqs2-2", "(X && (Y && (Z || T))) || (W && (Z || T))", "((X && Y) || W) && (Z || T)"},
             {"seqs2-3", "(X || ((Y || T) && (Z && F))) && ((W || T) && (Z && F))",
              "((X && (W || T)) || (Y || T)) && (Z && F)"},
             {"seqs2-4", "(X || ((Y || T) && (Z && F))) && (W && F)",
              "((!X && (Y || T)) || (W && F)) && (Z && F)"}}),
    };
}

}  // namespace

const std::vector<Catalog>& catalogs() {
    static const std::vector<Catalog> all = build();
    return all;
}

const Catalog* find_catalog(std::string_view name) {
    for (const Catalog& c : catalogs())
        if (c.name == name) return &c;
    return nullptr;
}

std::string export_catalogs() {
    std::ostringstream os;
    os << "catalog\tschema\tlogic\tlhs\trhs\n";
    for (const Catalog& c : catalogs())
        for (const EquationSchema& s : c.schemas)
            os << c.name << '\t' << s.name << '\t' << logic_name(s.logic) << '\t' << print(s.lhs) << '\t'
               << print(s.rhs) << '\n';
    return os.str();
}

}  // namespace seqlogic
