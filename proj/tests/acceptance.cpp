// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "oracle.hpp"
#include "rewrite.hpp"
#include "seqlogic/decompose.hpp"
#include "seqlogic/equiv.hpp"
#include "seqlogic/normalize.hpp"
#include "stars.hpp"

using namespace seqlogic;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Collects the first few failure descriptions of a criterion.
struct Tally {
    std::size_t failures = 0;
    std::vector<std::string> notes;

    void fail(std::string what) {
        if (failures++ < 3) notes.push_back(std::move(what));
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        if (!ok) fail(what());
    }
};

Term P(const char* s) { return parse(s); }

Tally golden_trees() {
    Tally t;
    t.expect(fe(P("(a & b) | c")) == golden::fe_and_or(), [] { return "fe((a & b) | c)"; });
    t.expect(fe(P("(a | b) & c")) == golden::fe_or_and(), [] { return "fe((a | b) & c)"; });
    t.expect(se(P("(a && b) || c")) == golden::se_and_or(), [] { return "se((a && b) || c)"; });
    t.expect(se(P("(a || b) && c")) == golden::se_or_and(), [] { return "se((a || b) && c)"; });
    // The independent interpreter must agree with the transcriptions too.
    t.expect(oracle::operational_tree(P("(a & b) | c")) == golden::fe_and_or(), [] { return "oracle fe"; });
    t.expect(oracle::operational_tree(P("(a || b) && c")) == golden::se_or_and(), [] { return "oracle se"; });
    return t;
}

Tally golden_traces() {
    Tally t;
    std::vector<std::string> got;
    for (const Trace& tr : traces(fe(P("(a & b) | c")))) got.push_back(format_trace(tr));
    t.expect(got == golden::traces_and_or(), [&] {
        std::string s;
        for (auto& g : got) s += g + "; ";
        return "got " + s;
    });
    return t;
}

Tally worked_computations() {
    Tally t;
    t.expect(fe(P("a | b")) == golden::fe_a_or_b(), [] { return "fe(a | b) = " + to_text(fe(P("a | b"))); });
    t.expect(se(P("a || b")) == golden::se_a_or_b(), [] { return "se(a || b) = " + to_text(se(P("a || b"))); });
    return t;
}

Tally catalog_soundness() {
    Tally t;
    CheckOptions opts;
    opts.trials = 200;
    opts.alphabet = 3;
    opts.max_atoms = 6;
    opts.seed = kSeed;
    std::size_t n = 0;
    for (const Catalog& c : catalogs()) {
        for (const EquationSchema& s : c.schemas) {
            ++n;
            SchemaReport r = check_schema(s, opts);
            t.expect(r.passed && r.trials == 200, [&] { return c.name + " " + s.name; });
        }
    }
    t.expect(n == 44, [&] { return "expected 44 schemas, found " + std::to_string(n); });
    return t;
}

Tally normalization() {
    Tally t;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Term f = gen_term(Language::FT, 12, 3, kSeed + i);
        Term fn = fel_normalize(f);
        t.expect(is_fnf(fn) && fe(fn) == fe(f), [&] { return "FT " + print(f); });
        Term s = gen_term(Language::ST, 12, 3, kSeed + i);
        Term sn = scl_normalize(s);
        t.expect(is_snf(sn) && se(sn) == se(s), [&] { return "ST " + print(s); });
    }
    return t;
}

Tally inversion() {
    Tally t;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Term fn = fel_normalize(gen_term(Language::FT, 12, 3, kSeed + i));
        try {
            t.expect(fel_g(fe(fn)) == fn, [&] { return "FEL " + print(fn); });
        } catch (const InversionError& e) {
            t.fail(e.what());
        }
        Term sn = scl_normalize(gen_term(Language::ST, 12, 3, kSeed + i));
        try {
            t.expect(scl_g(se(sn)) == sn, [&] { return "SCL " + print(sn); });
        } catch (const InversionError& e) {
            t.fail(e.what());
        }
    }
    return t;
}

// Half of the pairs are equal by construction (random identity rewrites),
// half are independent draws over two atoms, where equality is frequent.
Tally completeness() {
    Tally t;
    std::mt19937_64 rng(kSeed);
    std::size_t equal[2] = {0, 0};
    for (int full = 0; full < 2; ++full) {
        Language lang = full ? Language::FT : Language::ST;
        auto tree = full ? fe : se;
        auto norm = full ? fel_normalize : scl_normalize;
        for (std::uint64_t i = 0; i < 500; ++i) {
            Term p = gen_term(lang, 6, 2, kSeed + i);
            Term q = i % 2 ? rewrite::perturb(p, rng, full) : gen_term(lang, 6, 2, kSeed + 7919 * (i + 1));
            bool trees = tree(p) == tree(q);
            bool forms = norm(p) == norm(q);
            equal[full] += trees;
            t.expect(trees == forms, [&] { return print(p) + " vs " + print(q); });
            if (i % 2) t.expect(trees, [&] { return "rewrite changed the tree: " + print(p); });
        }
    }
    // Both outcomes must be exercised.
    for (int full = 0; full < 2; ++full)
        t.expect(equal[full] > 250 && equal[full] < 500, [&] { return "degenerate pair mix"; });
    return t;
}

Tally exclusivity() {
    Tally t;
    for (const stars::Logic* lg : {&stars::kFel, &stars::kScl}) {
        auto lits = stars::literal_pool(*lg, 80, kSeed);
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < 100; ++i) {
            Term q = stars::random_star(*lg, lits, rng, 2 + i % 5,
                                        i % 2 ? stars::Need::Conjunctive : stars::Need::Disjunctive);
            auto what = [&] { return print(q); };
            bool conj = i % 2;
            Tree x = lg->full ? fe(q) : se(q);
            auto cd = lg->full ? fel_cd(x) : scl_cd(x);
            auto dd = lg->full ? fel_dd(x) : scl_dd(x);
            t.expect(cd.has_value() == conj && dd.has_value() == !conj, what);
            const auto& d = conj ? cd : dd;
            if (!d) continue;
            Tree left = lg->full ? fe(q.lhs()) : se(q.lhs());
            Tree right = lg->full ? fe(q.rhs()) : se(q.rhs());
            Tree ctx = lg->full ? replace(left, {{Leaf::T, Tree::leaf(Leaf::Hole1)}, {Leaf::F, Tree::leaf(Leaf::Hole2)}})
                                : replace(left, {{conj ? Leaf::T : Leaf::F, hole()}});
            t.expect(d->context == ctx && d->core == right, what);
            t.expect(recompose(*d) == x, what);
        }
    }
    return t;
}

Tally embedding() {
    Tally t;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Term p = gen_term(Language::FT, 12, 3, kSeed + i);
        Term h = translate_h(p);
        t.expect(in_language(h, Language::ST) && se(h) == fe(p), [&] { return print(p); });
    }
    return t;
}

Tally negative_controls() {
    Tally t;
    auto unequal = [&](const char* p, const char* q) {
        Term a = P(p), b = P(q);
        EquivResult r = equal_fscl(a, b);
        t.expect(!r.equal && r.witness && witness_valid(r, se(a), se(b)),
                 [&] { return std::string(p) + " vs " + q; });
    };
    unequal("a && b", "b && a");
    unequal("a && F", "F");
    EquivResult r = equal_ffel(P("a & F"), P("F & a"));
    t.expect(r.equal && !r.witness, [] { return "a & F vs F & a"; });
    return t;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Tally (*run)();
    };
    const Criterion criteria[] = {
        {"golden trees", golden_trees},
        {"golden traces", golden_traces},
        {"worked computations", worked_computations},
        {"catalog soundness", catalog_soundness},
        {"normalization", normalization},
        {"inversion", inversion},
        {"completeness", completeness},
        {"decomposition exclusivity", exclusivity},
        {"embedding", embedding},
        {"negative controls", negative_controls},
    };
    int failed = 0;
    int n = 0;
    for (const Criterion& c : criteria) {
        ++n;
        auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            t.fail(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s (%.0f ms)\n", t.failures ? "FAIL" : "PASS", n, c.name, ms);
        for (const auto& note : t.notes) std::printf("    %s\n", note.c_str());
        failed += t.failures != 0;
    }
    return failed ? 1 : 0;
}
