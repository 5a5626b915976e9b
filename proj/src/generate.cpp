#include <random>

#include "seqlogic/equiv.hpp"

namespace seqlogic {

namespace {

std::string atom_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

class Generator {
public:
    Generator(Language lang, const GenOptions& opts, std::uint64_t seed)
        : lang_(lang), opts_(opts), atoms_left_(opts.max_atoms), rng_(seed) {}

    Term run() { return go(0); }

private:
    Language lang_;
    GenOptions opts_;
    std::size_t atoms_left_;
    std::mt19937_64 rng_;

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    std::vector<Op> constructors() const {
        switch (lang_) {
            case Language::ST: return {Op::Not, Op::AndSC, Op::OrSC};
            case Language::FT: return {Op::Not, Op::AndFull, Op::OrFull};
            case Language::CT: return {Op::Cond};
            case Language::MIXED: return {Op::Not, Op::AndSC, Op::OrSC, Op::AndFull, Op::OrFull, Op::Cond};
        }
        return {};
    }

    Term leaf() {
        // Constants are weighted up so absorption cases come up often.
        double atom_w = atoms_left_ > 0 ? 2.0 : 0.0;
        double r = uniform() * (atom_w + 2.0);
        if (r < atom_w) {
            --atoms_left_;
            return Term::atom(atom_name(pick(std::max<std::size_t>(opts_.alphabet, 1))));
        }
        return r < atom_w + 1.0 ? Term::tru() : Term::fls();
    }

    Term go(unsigned depth) {
        double p_compound = depth >= opts_.max_depth ? 0.0 : 0.97;
        for (unsigned i = 0; i < depth; ++i) p_compound *= 0.86;
        if (uniform() >= p_compound) return leaf();
        auto ops = constructors();
        Op op = ops[pick(ops.size())];
        switch (op) {
            case Op::Not: return Term::negate(go(depth + 1));
            case Op::Cond: {
                Term c = go(depth + 1);
                Term t = go(depth + 1);
                Term e = go(depth + 1);
                return Term::cond(std::move(t), std::move(c), std::move(e));
            }
            default: {
                Term l = go(depth + 1);
                Term r = go(depth + 1);
                return Term::binary(op, std::move(l), std::move(r));
            }
        }
    }
};

}  // namespace

Term gen_term(Language lang, const GenOptions& opts, std::uint64_t seed) {
    return Generator(lang, opts, seed).run();
}

Term gen_term(Language lang, std::size_t max_atoms, std::size_t alphabet, std::uint64_t seed) {
    GenOptions opts;
    opts.max_atoms = max_atoms;
    opts.alphabet = alphabet;
    return gen_term(lang, opts, seed);
}

}  // namespace seqlogic
