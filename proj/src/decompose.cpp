#include "seqlogic/decompose.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "seqlogic/normalize.hpp"

namespace seqlogic {

const char* decomp_kind_name(DecompKind k) {
    switch (k) {
        case DecompKind::FelCd: return "FEL-cd";
        case DecompKind::FelDd: return "FEL-dd";
        case DecompKind::FelTsd: return "FEL-tsd";
        case DecompKind::SclCd: return "SCL-cd";
        case DecompKind::SclDd: return "SCL-dd";
        case DecompKind::SclTsd: return "SCL-tsd";
    }
    return "?";
}

EvalTree recompose(const Decomposition& d) {
    switch (d.kind) {
        case DecompKind::FelCd:
            return replace(d.context, {{Leaf::Hole1, d.core}, {Leaf::Hole2, replace(d.core, {{Leaf::T, leaf_f()}})}});
        case DecompKind::FelDd:
            return replace(d.context, {{Leaf::Hole1, replace(d.core, {{Leaf::F, leaf_t()}})}, {Leaf::Hole2, d.core}});
        default: return replace(d.context, {{Leaf::Hole, d.core}});
    }
}

namespace {

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return t.hash(); }
};

using TreeSet = std::unordered_set<Tree, TreeHash>;

constexpr unsigned kTF = leaf_bit(Leaf::T) | leaf_bit(Leaf::F);

void distinct_subtrees(const Tree& x, std::unordered_set<const void*>& seen, TreeSet& out) {
    if (!seen.insert(x.id()).second) return;
    out.insert(x);
    if (x.is_leaf()) return;
    distinct_subtrees(x.left(), seen, out);
    distinct_subtrees(x.right(), seen, out);
}

// Subtrees containing both T and F, grouped by depth.
std::map<unsigned, std::vector<Tree>> mixed_subtrees_by_depth(const Tree& x) {
    std::unordered_set<const void*> seen;
    TreeSet all;
    distinct_subtrees(x, seen, all);
    std::map<unsigned, std::vector<Tree>> out;
    for (const Tree& t : all)
        if ((t.leaf_mask() & kTF) == kTF) out[t.depth()].push_back(t);
    return out;
}

// Replaces the topmost occurrences of `first` by `first_label` and of
// `second` (if given) by `second_label`, testing `first` before `second` at
// each position. Fails if a leaf in `forbidden` remains outside every
// occurrence.
class Cutter {
public:
    Cutter(const Tree& first, Leaf first_label, const Tree* second, Leaf second_label, unsigned forbidden)
        : first_(first), second_(second), l1_(first_label), l2_(second_label), forbidden_(forbidden) {}

    std::optional<Tree> operator()(const Tree& x) {
        if (x == first_) return Tree::leaf(l1_);
        if (second_ && x == *second_) return Tree::leaf(l2_);
        if (x.is_leaf()) {
            if (x.leaf_mask() & forbidden_) return std::nullopt;
            return x;
        }
        if (auto it = memo_.find(x.id()); it != memo_.end()) return it->second;
        std::optional<Tree> out;
        if (auto l = (*this)(x.left())) {
            if (auto r = (*this)(x.right())) out = Tree::node(x.atom(), *l, *r);
        }
        memo_.emplace(x.id(), out);
        return out;
    }

private:
    const Tree& first_;
    const Tree* second_;
    Leaf l1_, l2_;
    unsigned forbidden_;
    std::unordered_map<const void*, std::optional<Tree>> memo_;
};

// Among same-depth candidates, the smallest text serialization wins.
std::optional<Decomposition> pick(std::vector<Decomposition>& found) {
    if (found.empty()) return std::nullopt;
    if (found.size() > 1) {
        std::sort(found.begin(), found.end(), [](const Decomposition& a, const Decomposition& b) {
            return to_text(a.core) < to_text(b.core);
        });
    }
    return found.front();
}

void check_recomposition(const Decomposition& d, const Tree& x) {
    if (recompose(d) != x)
        throw std::logic_error(std::string(decomp_kind_name(d.kind)) + ": recomposition law violated");
}

std::optional<Decomposition> fel_search(const EvalTree& x, bool conj) {
    if (x.has_holes()) throw std::invalid_argument("decomposition of a tree with holes");
    for (auto& [depth, zs] : mixed_subtrees_by_depth(x)) {
        std::vector<Decomposition> found;
        for (const Tree& z : zs) {
            // cd: Z -> [1], Z[T->F] -> [2]; dd: Z -> [2], Z[F->T] -> [1].
            Tree other = conj ? replace(z, {{Leaf::T, leaf_f()}}) : replace(z, {{Leaf::F, leaf_t()}});
            Leaf zl = conj ? Leaf::Hole1 : Leaf::Hole2;
            Leaf ol = conj ? Leaf::Hole2 : Leaf::Hole1;
            auto y = Cutter(z, zl, &other, ol, kTF)(x);
            if (!y || !y->contains(Leaf::Hole1) || !y->contains(Leaf::Hole2)) continue;
            found.push_back({*y, z, conj ? DecompKind::FelCd : DecompKind::FelDd});
        }
        if (auto d = pick(found)) {
            check_recomposition(*d, x);
            return d;
        }
    }
    return std::nullopt;
}

std::optional<Decomposition> scl_search(const EvalTree& x, bool conj) {
    if (x.has_holes()) throw std::invalid_argument("decomposition of a tree with holes");
    // cd: the context keeps F leaves and has no T; dd the other way round.
    Leaf kept = conj ? Leaf::F : Leaf::T;
    Leaf banned = conj ? Leaf::T : Leaf::F;
    for (auto& [depth, zs] : mixed_subtrees_by_depth(x)) {
        std::vector<Decomposition> found;
        for (const Tree& z : zs) {
            auto y = Cutter(z, Leaf::Hole, nullptr, Leaf::Hole, leaf_bit(banned))(x);
            if (!y || !y->contains(Leaf::Hole) || !y->contains(kept)) continue;
            found.push_back({*y, z, conj ? DecompKind::SclCd : DecompKind::SclDd});
        }
        if (auto d = pick(found)) {
            check_recomposition(*d, x);
            return d;
        }
    }
    return std::nullopt;
}

// Trees Z such that x is a T/F-free context with every hole filled by Z.
const TreeSet& tsd_candidates(const Tree& x, std::unordered_map<const void*, TreeSet>& memo) {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    TreeSet out{x};
    if (!x.is_leaf()) {
        const TreeSet& l = tsd_candidates(x.left(), memo);
        const TreeSet& r = tsd_candidates(x.right(), memo);
        for (const Tree& t : l)
            if (r.count(t)) out.insert(t);
    }
    return memo.emplace(x.id(), std::move(out)).first->second;
}

std::optional<Decomposition> tsd_search(const EvalTree& x, DecompKind kind) {
    if (x.has_holes()) throw std::invalid_argument("decomposition of a tree with holes");
    std::unordered_map<const void*, TreeSet> memo;
    const TreeSet& cands = tsd_candidates(x, memo);
    // The minimal-depth candidate admits no further T/F-free split, so it is
    // the non-decomposable core. A core must yield both T and F, so T-term
    // images such as T <| a |> T have none.
    unsigned best = ~0u;
    std::vector<Decomposition> found;
    for (const Tree& z : cands) {
        if ((z.leaf_mask() & kTF) != kTF || z.depth() > best) continue;
        if (z.depth() < best) {
            best = z.depth();
            found.clear();
        }
        found.push_back({leaf_t(), z, kind});
    }
    auto d = pick(found);
    if (!d) return std::nullopt;
    auto y = Cutter(d->core, Leaf::Hole, nullptr, Leaf::Hole, kTF)(x);
    if (!y) throw std::logic_error("tsd: candidate core does not cover every leaf");
    d->context = *y;
    check_recomposition(*d, x);
    return d;
}

}  // namespace

std::optional<Decomposition> fel_cd(const EvalTree& x) { return fel_search(x, true); }
std::optional<Decomposition> fel_dd(const EvalTree& x) { return fel_search(x, false); }
std::optional<Decomposition> fel_tsd(const EvalTree& x) { return tsd_search(x, DecompKind::FelTsd); }
std::optional<Decomposition> scl_cd(const EvalTree& x) { return scl_search(x, true); }
std::optional<Decomposition> scl_dd(const EvalTree& x) { return scl_search(x, false); }
std::optional<Decomposition> scl_tsd(const EvalTree& x) { return tsd_search(x, DecompKind::SclTsd); }

// ---------------------------------------------------------------------------
// Inversion

namespace {

[[noreturn]] void no_inverse(const char* where, const Tree& x) {
    std::string text = to_text(x);
    if (text.size() > 200) text = text.substr(0, 200) + "...";
    throw InversionError(std::string(where) + ": tree is not the image of a normal form: " + text);
}

Tree fill_holes(const Tree& y) {
    return replace(y, {{Leaf::Hole, leaf_t()}, {Leaf::Hole1, leaf_t()}, {Leaf::Hole2, leaf_f()}});
}

namespace fel {

Term gT(const Tree& x) {
    if (x.is_leaf()) {
        if (x.label() != Leaf::T) no_inverse("fel gT", x);
        return Term::tru();
    }
    return Term::or_full(Term::atom(x.atom()), gT(x.left()));
}

Term gF(const Tree& x) {
    if (x.is_leaf()) {
        if (x.label() != Leaf::F) no_inverse("fel gF", x);
        return Term::fls();
    }
    return Term::and_full(Term::atom(x.atom()), gF(x.right()));
}

Term gl(const Tree& x) {
    if (x.is_leaf()) no_inverse("fel gl", x);
    Term a = Term::atom(x.atom());
    if (x.left().only(Leaf::T)) return Term::and_full(a, gT(x.left()));
    if (x.right().only(Leaf::T)) return Term::and_full(Term::negate(a), gT(x.right()));
    no_inverse("fel gl", x);
}

Term gstar(const Tree& x) {
    if (auto d = fel_cd(x)) return Term::and_full(gstar(fill_holes(d->context)), gstar(d->core));
    if (auto d = fel_dd(x)) return Term::or_full(gstar(fill_holes(d->context)), gstar(d->core));
    return gl(x);
}

Term g(const Tree& x) {
    if (x.only(Leaf::T)) return gT(x);
    if (x.only(Leaf::F)) return gF(x);
    auto d = fel_tsd(x);
    if (!d) no_inverse("fel g", x);
    return Term::and_full(gT(fill_holes(d->context)), gstar(d->core));
}

}  // namespace fel

namespace scl {

Term gT(const Tree& x) {
    if (x.is_leaf()) {
        if (x.label() != Leaf::T) no_inverse("scl gT", x);
        return Term::tru();
    }
    return Term::or_sc(Term::and_sc(Term::atom(x.atom()), gT(x.left())), gT(x.right()));
}

Term gF(const Tree& x) {
    if (x.is_leaf()) {
        if (x.label() != Leaf::F) no_inverse("scl gF", x);
        return Term::fls();
    }
    return Term::and_sc(Term::or_sc(Term::atom(x.atom()), gF(x.right())), gF(x.left()));
}

Term gl(const Tree& x) {
    if (x.is_leaf()) no_inverse("scl gl", x);
    Term a = Term::atom(x.atom());
    if (x.left().only(Leaf::T)) return Term::or_sc(Term::and_sc(a, gT(x.left())), gF(x.right()));
    if (x.right().only(Leaf::T))
        return Term::or_sc(Term::and_sc(Term::negate(a), gT(x.right())), gF(x.left()));
    no_inverse("scl gl", x);
}

Term gstar(const Tree& x) {
    if (auto d = scl_cd(x)) return Term::and_sc(gstar(replace(d->context, {{Leaf::Hole, leaf_t()}})), gstar(d->core));
    if (auto d = scl_dd(x)) return Term::or_sc(gstar(replace(d->context, {{Leaf::Hole, leaf_f()}})), gstar(d->core));
    return gl(x);
}

Term g(const Tree& x) {
    if (x.only(Leaf::T)) return gT(x);
    if (x.only(Leaf::F)) return gF(x);
    auto d = scl_tsd(x);
    if (!d) no_inverse("scl g", x);
    return Term::and_sc(gT(replace(d->context, {{Leaf::Hole, leaf_t()}})), gstar(d->core));
}

}  // namespace scl

}  // namespace

Term fel_g(const EvalTree& x) {
    if (x.has_holes()) throw std::invalid_argument("fel_g: tree contains holes");
    Term p = fel::g(x);
    if (!is_fnf(p) || fe(p) != x) no_inverse("fel_g", x);
    return p;
}

Term scl_g(const EvalTree& x) {
    if (x.has_holes()) throw std::invalid_argument("scl_g: tree contains holes");
    Term p = scl::g(x);
    if (!is_snf(p) || se(p) != x) no_inverse("scl_g", x);
    return p;
}

}  // namespace seqlogic
