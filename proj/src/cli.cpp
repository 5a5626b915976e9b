#include "seqlogic/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "seqlogic/decompose.hpp"
#include "seqlogic/equiv.hpp"
#include "seqlogic/evaltree.hpp"
#include "seqlogic/normalize.hpp"

namespace seqlogic {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string logic = "mixed";
    bool dot = false;
    bool from_stdin = false;
    bool tree_input = false;
    std::size_t max_atoms = kDefaultMaxAtoms;
    std::string catalog;
    std::size_t trials = 200;
    std::size_t term_atoms = 6;
    std::uint64_t seed = 0;
    std::vector<std::string> inputs;
};

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

class Runner {
public:
    Runner(Settings s, std::istream& in, std::ostream& out, std::ostream& err)
        : s_(std::move(s)), in_(in), out_(out), err_(err) {}

    int dispatch(const std::string& cmd) {
        if (cmd == "catalog") return catalog();
        if (cmd == "check") return check();
        if (s_.from_stdin) {
            auto lines = read_lines(in_);
            s_.inputs.insert(s_.inputs.end(), lines.begin(), lines.end());
        }
        std::size_t want = cmd == "decide" ? 2 : 1;
        if (s_.inputs.size() != want)
            throw UsageError(cmd + " expects " + std::to_string(want) + " input" + (want > 1 ? "s" : "") + ", got " +
                             std::to_string(s_.inputs.size()));
        if (cmd == "tree") return tree();
        if (cmd == "traces") return traces_cmd();
        if (cmd == "normalize") return normalize();
        if (cmd == "classify") return classify();
        if (cmd == "decide") return decide();
        if (cmd == "translate") return translate();
        if (cmd == "invert") return invert();
        if (cmd == "memorize") return memorize_cmd();
        throw UsageError("unknown subcommand " + cmd);
    }

private:
    Settings s_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;

    Term term(std::size_t i) const { return parse(s_.inputs[i]); }

    void guard(const Term& t) const {
        if (t.atom_count() > s_.max_atoms) throw GuardExceeded(t.atom_count(), s_.max_atoms);
    }

    EvalTree evaluate(const Term& t) const {
        guard(t);
        if (s_.logic == "ffel") return fe(t);
        if (s_.logic == "fscl") return se(t);
        return ce(t);
    }

    void need_free_logic(const char* cmd) const {
        if (s_.logic == "mixed") throw UsageError(std::string(cmd) + " needs --logic ffel or --logic fscl");
    }

    void print_tree(const Tree& x) {
        if (s_.dot)
            out_ << to_dot(x);
        else
            out_ << to_text(x) << '\n';
    }

    int tree() {
        print_tree(evaluate(term(0)));
        return kExitOk;
    }

    int traces_cmd() {
        for (const Trace& t : traces(evaluate(term(0)))) out_ << format_trace(t) << '\n';
        return kExitOk;
    }

    int normalize() {
        need_free_logic("normalize");
        Term t = term(0);
        out_ << print(s_.logic == "ffel" ? fel_normalize(t) : scl_normalize(t)) << '\n';
        return kExitOk;
    }

    int classify() {
        Term t = term(0);
        if (s_.logic == "mixed") {
            std::string sep;
            for (Language l : classify_language(t)) {
                out_ << sep << language_name(l);
                sep = " ";
            }
            out_ << '\n';
            return kExitOk;
        }
        out_ << category_name(s_.logic == "ffel" ? classify_fnf(t) : classify_snf(t)) << '\n';
        return kExitOk;
    }

    int decide() {
        Term p = term(0), q = term(1);
        EquivOptions opts;
        opts.max_atoms = s_.max_atoms;
        EquivResult r = s_.logic == "ffel"   ? equal_ffel(p, q, opts)
                        : s_.logic == "fscl" ? equal_fscl(p, q, opts)
                                             : equal_mixed(p, q, opts);
        if (r.equal) {
            out_ << "EQUAL\n";
            return kExitOk;
        }
        out_ << "NOT EQUAL\n";
        out_ << "witness (" << (r.witness_from_lhs ? "left" : "right") << "): " << format_trace(*r.witness) << '\n';
        return kExitNegative;
    }

    int translate() {
        out_ << print(translate_h(term(0))) << '\n';
        return kExitOk;
    }

    int invert() {
        need_free_logic("invert");
        Tree x = parse_tree(s_.inputs[0]);
        out_ << print(s_.logic == "ffel" ? fel_g(x) : scl_g(x)) << '\n';
        return kExitOk;
    }

    int memorize_cmd() {
        Tree x = s_.tree_input ? parse_tree(s_.inputs[0]) : evaluate(term(0));
        if (x.has_holes()) throw UsageError("memorize: tree contains holes");
        print_tree(memorize(x));
        return kExitOk;
    }

    int catalog() {
        if (s_.catalog.empty()) {
            out_ << export_catalogs();
            return kExitOk;
        }
        const Catalog* c = find_catalog(s_.catalog);
        if (!c) throw UsageError("unknown catalog " + s_.catalog);
        out_ << "catalog\tschema\tlogic\tlhs\trhs\n";
        for (const auto& sc : c->schemas)
            out_ << c->name << '\t' << sc.name << '\t' << logic_name(sc.logic) << '\t' << print(sc.lhs) << '\t'
                 << print(sc.rhs) << '\n';
        return kExitOk;
    }

    int check() {
        std::vector<const Catalog*> which;
        if (s_.catalog.empty() || s_.catalog == "all") {
            for (const Catalog& c : catalogs()) which.push_back(&c);
        } else if (const Catalog* c = find_catalog(s_.catalog)) {
            which.push_back(c);
        } else {
            throw UsageError("unknown catalog " + s_.catalog);
        }
        CheckOptions opts;
        opts.trials = s_.trials;
        opts.seed = s_.seed;
        opts.max_atoms = s_.term_atoms;
        bool all = true;
        for (const Catalog* c : which) {
            for (const EquationSchema& sc : c->schemas) {
                SchemaReport rep = check_schema(sc, opts);
                out_ << (rep.passed ? "PASS " : "FAIL ") << c->name << ' ' << sc.name << '\n';
                if (!rep.passed) {
                    all = false;
                    const Counterexample& cx = *rep.counterexample;
                    out_ << "  trial " << cx.trial << ":";
                    for (const auto& [v, t] : cx.substitution) out_ << ' ' << v << " := " << print(t) << ';';
                    out_ << "\n  witness (" << (cx.result.witness_from_lhs ? "left" : "right")
                         << "): " << format_trace(*cx.result.witness) << '\n';
                }
            }
        }
        return all ? kExitOk : kExitNegative;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Evaluation-tree semantics, normal forms and equivalence for left-sequential logics"};
    app.require_subcommand(1);
    Settings s;

    auto logic_opt = [&](CLI::App* sub) {
        sub->add_option("--logic", s.logic, "ffel, fscl or mixed")
            ->check(CLI::IsMember({"ffel", "fscl", "mixed"}))
            ->capture_default_str();
    };
    auto inputs = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", s.inputs, what);
        sub->add_flag("--stdin", s.from_stdin, "read inputs from standard input, one per line");
    };
    auto guard_opt = [&](CLI::App* sub) {
        sub->add_option("--max-atoms", s.max_atoms, "atom-occurrence limit for tree construction")
            ->capture_default_str();
    };

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"tree", "print the evaluation tree"},
        {"traces", "print the trace set, one trace per line"},
        {"normalize", "print the normal form"},
        {"classify", "print the normal-form category (or term languages with --logic mixed)"},
        {"decide", "decide equality of two terms"},
        {"translate", "rewrite full connectives into short-circuit ones"},
        {"invert", "recover the normal form from a tree in text format"},
        {"memorize", "apply the memorizing transform to a tree"},
        {"check", "check equation catalogs on random instances"},
        {"catalog", "print the equation catalogs as a table"},
    };
    for (const Spec& sp : specs) {
        CLI::App* sub = app.add_subcommand(sp.name, sp.help);
        std::string n = sp.name;
        if (n == "check" || n == "catalog") {
            sub->add_option("--catalog", s.catalog, "catalog name (default: all)");
            if (n == "check") {
                sub->add_option("--trials", s.trials, "random instances per schema")->capture_default_str();
                sub->add_option("--seed", s.seed, "random seed")->capture_default_str();
                sub->add_option("--term-atoms", s.term_atoms, "atom limit of each substituted term")
                    ->capture_default_str();
            }
            continue;
        }
        logic_opt(sub);
        inputs(sub, n == "invert" ? "tree in text format" : "term");
        if (n != "normalize" && n != "classify" && n != "translate" && n != "invert") guard_opt(sub);
        if (n == "tree" || n == "memorize") sub->add_flag("--dot", s.dot, "emit Graphviz DOT");
        if (n == "memorize") sub->add_flag("--tree-input", s.tree_input, "input is a tree in text format");
    }

    std::vector<const char*> argv;
    if (args.empty()) argv.push_back("seqlogic");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return Runner(std::move(s), in, out, err).dispatch(cmd);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LanguageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InversionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNegative;
    }
}

}  // namespace seqlogic
