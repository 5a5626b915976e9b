#include "seqlogic/evaltree.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace seqlogic {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Tree::Tree() : Tree(leaf(Leaf::T)) {}

Tree Tree::leaf(Leaf l) {
    static const std::array<Tree, 5> leaves = [] {
        std::array<Tree, 5> out{Tree(nullptr), Tree(nullptr), Tree(nullptr), Tree(nullptr), Tree(nullptr)};
        for (unsigned i = 0; i < 5; ++i) {
            auto n = std::make_shared<Node>();
            n->label = static_cast<Leaf>(i);
            n->mask = 1u << i;
            n->hash = mix(0x5bd1e995, i);
            out[i] = Tree(std::move(n));
        }
        return out;
    }();
    return leaves[static_cast<unsigned>(l)];
}

Tree Tree::node(std::string atom, Tree left, Tree right) {
    auto n = std::make_shared<Node>();
    n->is_leaf = false;
    n->depth = 1 + std::max(left.depth(), right.depth());
    n->leaves = left.leaf_count() + right.leaf_count();
    n->mask = left.leaf_mask() | right.leaf_mask();
    n->perfect = left.is_perfect() && right.is_perfect() && left.depth() == right.depth();
    n->hash = mix(mix(mix(std::hash<std::string>{}(atom), left.hash()), right.hash()), 0x27d4eb2f);
    n->atom = std::move(atom);
    n->kids = std::make_unique<const std::pair<Tree, Tree>>(std::move(left), std::move(right));
    return Tree(std::move(n));
}

bool operator==(const Tree& a, const Tree& b) {
    if (a.n_ == b.n_) return true;
    const auto& x = *a.n_;
    const auto& y = *b.n_;
    if (x.hash != y.hash || x.is_leaf != y.is_leaf || x.depth != y.depth || x.leaves != y.leaves ||
        x.mask != y.mask)
        return false;
    if (x.is_leaf) return x.label == y.label;
    return x.atom == y.atom && x.kids->first == y.kids->first && x.kids->second == y.kids->second;
}

LeafMap::LeafMap(std::initializer_list<std::pair<Leaf, Tree>> entries) {
    for (const auto& [l, t] : entries) set(l, t);
}

LeafMap& LeafMap::set(Leaf l, Tree t) {
    img_[static_cast<unsigned>(l)] = std::move(t);
    mask_ |= leaf_bit(l);
    return *this;
}

namespace {

// Memoized on node identity so shared subtrees are rewritten once.
class Replacer {
public:
    explicit Replacer(const LeafMap& m) : m_(m) {}

    Tree operator()(const Tree& x) {
        if ((x.leaf_mask() & m_.domain_mask()) == 0) return x;
        if (x.is_leaf()) return *m_.get(x.label());
        if (auto it = memo_.find(x.id()); it != memo_.end()) return it->second;
        Tree out = Tree::node(x.atom(), (*this)(x.left()), (*this)(x.right()));
        memo_.emplace(x.id(), out);
        return out;
    }

private:
    const LeafMap& m_;
    std::unordered_map<const void*, Tree> memo_;
};

}  // namespace

Tree replace(const Tree& x, const LeafMap& m) { return Replacer(m)(x); }

Tree leaf_t() { return Tree::leaf(Leaf::T); }
Tree leaf_f() { return Tree::leaf(Leaf::F); }
Tree hole() { return Tree::leaf(Leaf::Hole); }
Tree atom_tree(const std::string& a) { return Tree::node(a, leaf_t(), leaf_f()); }
Tree swap_leaves(const Tree& x) { return replace(x, {{Leaf::T, leaf_f()}, {Leaf::F, leaf_t()}}); }

EvalTree ce(const Term& t) {
    switch (t.op()) {
        case Op::Atom: return atom_tree(t.name());
        case Op::True: return leaf_t();
        case Op::False: return leaf_f();
        case Op::Not: return swap_leaves(ce(t.arg()));
        case Op::AndSC: return replace(ce(t.lhs()), {{Leaf::T, ce(t.rhs())}});
        case Op::OrSC: return replace(ce(t.lhs()), {{Leaf::F, ce(t.rhs())}});
        case Op::AndFull: {
            Tree q = ce(t.rhs());
            return replace(ce(t.lhs()), {{Leaf::T, q}, {Leaf::F, replace(q, {{Leaf::T, leaf_f()}})}});
        }
        case Op::OrFull: {
            Tree q = ce(t.rhs());
            return replace(ce(t.lhs()), {{Leaf::T, replace(q, {{Leaf::F, leaf_t()}})}, {Leaf::F, q}});
        }
        case Op::Cond:
            return replace(ce(t.condition()), {{Leaf::T, ce(t.then_branch())}, {Leaf::F, ce(t.else_branch())}});
    }
    throw std::logic_error("ce: unknown operator");
}

EvalTree fe(const Term& t) {
    if (!in_language(t, Language::FT)) throw LanguageError("fe: not an FT-term: " + print(t));
    return ce(t);
}

EvalTree se(const Term& t) {
    if (!in_language(t, Language::ST)) throw LanguageError("se: not an ST-term: " + print(t));
    return ce(t);
}

// ---------------------------------------------------------------------------
// Traces

namespace {

void collect_traces(const Tree& x, std::vector<std::pair<std::string, bool>>& path, std::vector<Trace>& out) {
    if (x.is_leaf()) {
        if (x.label() != Leaf::T && x.label() != Leaf::F)
            throw std::invalid_argument("traces: tree contains hole leaves");
        out.push_back(Trace{path, x.label() == Leaf::T});
        return;
    }
    path.emplace_back(x.atom(), true);
    collect_traces(x.left(), path, out);
    path.back().second = false;
    collect_traces(x.right(), path, out);
    path.pop_back();
}

Tree build(std::vector<const Trace*>& ts, std::size_t level) {
    if (ts.empty()) throw std::invalid_argument("trace set is not prefix-complete");
    if (ts.size() == 1 && ts[0]->path.size() == level) return ts[0]->yield ? leaf_t() : leaf_f();
    std::vector<const Trace*> l, r;
    const std::string* atom = nullptr;
    for (const Trace* t : ts) {
        if (t->path.size() == level) throw std::invalid_argument("trace set has a trace that is a proper prefix");
        const auto& [a, b] = t->path[level];
        if (atom && *atom != a) throw std::invalid_argument("trace set disagrees on atom '" + a + "'");
        atom = &a;
        (b ? l : r).push_back(t);
    }
    Tree lt = build(l, level + 1);
    Tree rt = build(r, level + 1);
    return Tree::node(*atom, std::move(lt), std::move(rt));
}

}  // namespace

std::vector<Trace> traces(const EvalTree& x) {
    std::vector<Trace> out;
    std::vector<std::pair<std::string, bool>> path;
    collect_traces(x, path, out);
    return out;
}

EvalTree from_traces(const std::vector<Trace>& ts) {
    std::vector<const Trace*> ptrs;
    for (const Trace& t : ts) ptrs.push_back(&t);
    return build(ptrs, 0);
}

std::string format_trace(const Trace& t) {
    std::string out;
    for (const auto& [a, b] : t.path) {
        out += a;
        out += b ? 'T' : 'F';
        out += ' ';
    }
    out += "-> ";
    out += t.yield ? 'T' : 'F';
    return out;
}

std::optional<Tree> follow(const Tree& x, const std::vector<std::pair<std::string, bool>>& path) {
    Tree cur = x;
    for (const auto& [a, b] : path) {
        if (cur.is_leaf() || cur.atom() != a) return std::nullopt;
        cur = b ? cur.left() : cur.right();
    }
    return cur;
}

// ---------------------------------------------------------------------------
// memorize

namespace {

Tree memo_walk(const Tree& x, std::vector<std::pair<std::string, bool>>& held) {
    if (x.is_leaf()) return x;
    for (auto it = held.rbegin(); it != held.rend(); ++it) {
        if (it->first == x.atom()) {
            Tree kept = memo_walk(it->second ? x.left() : x.right(), held);
            return Tree::node(x.atom(), kept, kept);
        }
    }
    held.emplace_back(x.atom(), true);
    Tree l = memo_walk(x.left(), held);
    held.back().second = false;
    Tree r = memo_walk(x.right(), held);
    held.pop_back();
    return Tree::node(x.atom(), std::move(l), std::move(r));
}

}  // namespace

EvalTree memorize(const EvalTree& x) {
    std::vector<std::pair<std::string, bool>> held;
    return memo_walk(x, held);
}

// ---------------------------------------------------------------------------
// Text and DOT

namespace {

const char* leaf_text(Leaf l) {
    switch (l) {
        case Leaf::T: return "T";
        case Leaf::F: return "F";
        case Leaf::Hole: return "[]";
        case Leaf::Hole1: return "[1]";
        case Leaf::Hole2: return "[2]";
    }
    return "?";
}

void write_text(const Tree& x, std::string& out) {
    if (x.is_leaf()) {
        out += leaf_text(x.label());
        return;
    }
    out += '(';
    write_text(x.left(), out);
    out += " <| ";
    out += x.atom();
    out += " |> ";
    write_text(x.right(), out);
    out += ')';
}

class TreeReader {
public:
    explicit TreeReader(std::string_view s) : s_(s) {}

    Tree read_all() {
        skip();
        if (i_ >= s_.size()) fail("empty input");
        Tree t = read();
        skip();
        if (i_ != s_.size()) fail("trailing characters");
        return t;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(i_, {}, "tree parse error at offset " + std::to_string(i_) + ": " + msg);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool lit(std::string_view w) {
        skip();
        if (s_.substr(i_, w.size()) == w) {
            i_ += w.size();
            return true;
        }
        return false;
    }

    void need(std::string_view w) {
        if (!lit(w)) fail("expected '" + std::string(w) + "'");
    }

    Tree read() {
        skip();
        if (lit("[1]")) return Tree::leaf(Leaf::Hole1);
        if (lit("[2]")) return Tree::leaf(Leaf::Hole2);
        if (lit("[]")) return Tree::leaf(Leaf::Hole);
        if (lit("(")) {
            Tree l = read();
            need("<|");
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string atom(s_.substr(start, i_ - start));
            if (!is_identifier(atom)) {
                i_ = start;
                fail("expected an atom");
            }
            need("|>");
            Tree r = read();
            need(")");
            return Tree::node(std::move(atom), std::move(l), std::move(r));
        }
        if (i_ < s_.size() && (s_[i_] == 'T' || s_[i_] == 'F')) {
            bool t = s_[i_] == 'T';
            ++i_;
            if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                --i_;
                fail("expected a leaf or '('");
            }
            return t ? leaf_t() : leaf_f();
        }
        fail("expected a leaf or '('");
    }
};

}  // namespace

std::string to_text(const Tree& x) {
    std::string out;
    write_text(x, out);
    return out;
}

Tree parse_tree(std::string_view text) { return TreeReader(text).read_all(); }

std::string to_dot(const Tree& x) {
    std::ostringstream os;
    os << "digraph tree {\n";
    std::size_t next = 0;
    std::function<std::size_t(const Tree&)> walk = [&](const Tree& t) -> std::size_t {
        std::size_t id = next++;
        if (t.is_leaf()) {
            os << "  n" << id << " [label=\"" << leaf_text(t.label()) << "\", shape=box];\n";
            return id;
        }
        os << "  n" << id << " [label=\"" << t.atom() << "\"];\n";
        std::size_t l = walk(t.left());
        std::size_t r = walk(t.right());
        os << "  n" << id << " -> n" << l << " [label=\"T\"];\n";
        os << "  n" << id << " -> n" << r << " [label=\"F\"];\n";
        return id;
    };
    walk(x);
    os << "}\n";
    return os.str();
}

}  // namespace seqlogic
