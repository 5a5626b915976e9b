#include <atomic>
#include <limits>

#include "seqlogic/equiv.hpp"

namespace seqlogic {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::optional<Counterexample> run_trial(const EquationSchema& s, const CheckOptions& opts, std::size_t trial) {
    auto subst = trial_substitution(s, opts, trial);
    Term l = substitute(s.lhs, subst);
    Term r = substitute(s.rhs, subst);
    EquivResult res = compare_trees(ce(l), ce(r));
    if (res.equal) return std::nullopt;
    return Counterexample{trial, std::move(subst), std::move(l), std::move(r), std::move(res)};
}

}  // namespace

std::vector<std::pair<std::string, Term>> trial_substitution(const EquationSchema& s, const CheckOptions& opts,
                                                             std::size_t trial) {
    std::vector<std::pair<std::string, Term>> out;
    Language lang = instance_language(s.logic);
    for (std::size_t v = 0; v < s.variables.size(); ++v) {
        std::uint64_t seed = splitmix(splitmix(splitmix(opts.seed) ^ trial) ^ v);
        out.emplace_back(s.variables[v], gen_term(lang, opts.max_atoms, opts.alphabet, seed));
    }
    return out;
}

SchemaReport check_schema_serial(const EquationSchema& s, const CheckOptions& opts) {
    SchemaReport rep{s.name, true, opts.trials, std::nullopt};
    for (std::size_t t = 0; t < opts.trials; ++t) {
        if (auto cx = run_trial(s, opts, t)) {
            rep.passed = false;
            rep.counterexample = std::move(cx);
            break;
        }
    }
    return rep;
}

SchemaReport check_schema(const EquationSchema& s, const CheckOptions& opts) {
    SchemaReport rep{s.name, true, opts.trials, std::nullopt};
    const long n = static_cast<long>(opts.trials);
    std::vector<std::optional<Counterexample>> found(opts.trials);
    std::atomic<long> first_fail{std::numeric_limits<long>::max()};
#pragma omp parallel for schedule(dynamic, 4)
    for (long t = 0; t < n; ++t) {
        if (t > first_fail.load(std::memory_order_relaxed)) continue;
        found[t] = run_trial(s, opts, static_cast<std::size_t>(t));
        if (found[t]) {
            long cur = first_fail.load();
            while (t < cur && !first_fail.compare_exchange_weak(cur, t)) {
            }
        }
    }
    long f = first_fail.load();
    if (f != std::numeric_limits<long>::max()) {
        rep.passed = false;
        rep.counterexample = std::move(found[f]);
    }
    return rep;
}

}  // namespace seqlogic
