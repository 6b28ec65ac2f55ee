#pragma once

#include "cobalt/word.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Morphism terms of the free k-tuply monoidal category with duals on one
// object.  Terms are immutable trees; composition is written in diagrammatic
// order throughout: Compose(f, g) means "f first, then g".

namespace cobalt {

struct type_error : std::runtime_error {
    explicit type_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct level_error : std::runtime_error {
    explicit level_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Monoidal depth k in {0,1,2,3}; anything above 3 behaves identically and is
// clamped on construction.  n selects the degenerate object-only column
// (n = 0) or the morphism calculus (n = 1).
struct Level {
    int k = 1;
    int n = 1;

    static Level of(int k_raw, int n = 1) {
        if (k_raw < 0) throw level_error("k must be non-negative");
        if (n != 0 && n != 1) throw level_error("n must be 0 or 1");
        return Level{k_raw > 3 ? 3 : k_raw, n};
    }
};

enum class CupOrient { plain, starred };  // plain: 1 -> x (x) x*, starred: 1 -> x* (x) x
enum class BraidSign { pos, neg };

class Term;
using TermPtr = std::shared_ptr<const class TermNode>;

struct IdNode {
    ObjectWord word;
};
struct CupNode {
    CupOrient orient;
};
struct CapNode {
    CupOrient orient;  // plain: x* (x) x -> 1, starred: x (x) x* -> 1
};
struct BraidNode {
    Letter u, v;
    BraidSign sign;  // pos: u(x)v -> v(x)u, neg: the inverse, v(x)u -> u(x)v
};
struct ComposeNode {
    TermPtr first, second;
};
struct TensorNode {
    TermPtr left, right;
};

class TermNode {
public:
    using Payload = std::variant<IdNode, CupNode, CapNode, BraidNode, ComposeNode, TensorNode>;
    explicit TermNode(Payload p) : payload(std::move(p)) {}
    Payload payload;
};

// Value handle around the shared immutable tree.
class Term {
public:
    Term() = default;
    explicit Term(TermPtr p) : p_(std::move(p)) {}

    static Term id(ObjectWord w) { return make(IdNode{std::move(w)}); }
    static Term id_letter(Letter l) { return id(ObjectWord{l}); }
    static Term cup(CupOrient o) { return make(CupNode{o}); }
    static Term cap(CupOrient o) { return make(CapNode{o}); }
    static Term braid(Letter u, Letter v, BraidSign s) { return make(BraidNode{u, v, s}); }
    static Term compose(Term f, Term g) { return make(ComposeNode{f.p_, g.p_}); }
    static Term tensor(Term f, Term g) { return make(TensorNode{f.p_, g.p_}); }

    bool valid() const { return p_ != nullptr; }
    const TermNode::Payload& payload() const { return p_->payload; }
    TermPtr ptr() const { return p_; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&p_->payload);
    }

    bool operator==(const Term& o) const { return structural_equal(*this, o); }
    bool operator!=(const Term& o) const { return !(*this == o); }

    static bool structural_equal(const Term& a, const Term& b) {
        if (a.p_ == b.p_) return true;
        const auto& pa = a.p_->payload;
        const auto& pb = b.p_->payload;
        if (pa.index() != pb.index()) return false;
        if (const auto* x = std::get_if<IdNode>(&pa))
            return x->word == std::get<IdNode>(pb).word;
        if (const auto* x = std::get_if<CupNode>(&pa))
            return x->orient == std::get<CupNode>(pb).orient;
        if (const auto* x = std::get_if<CapNode>(&pa))
            return x->orient == std::get<CapNode>(pb).orient;
        if (const auto* x = std::get_if<BraidNode>(&pa)) {
            const auto& y = std::get<BraidNode>(pb);
            return x->u == y.u && x->v == y.v && x->sign == y.sign;
        }
        if (const auto* x = std::get_if<ComposeNode>(&pa)) {
            const auto& y = std::get<ComposeNode>(pb);
            return structural_equal(Term(x->first), Term(y.first)) &&
                   structural_equal(Term(x->second), Term(y.second));
        }
        const auto& x = std::get<TensorNode>(pa);
        const auto& y = std::get<TensorNode>(pb);
        return structural_equal(Term(x.left), Term(y.left)) &&
               structural_equal(Term(x.right), Term(y.right));
    }

private:
    static Term make(TermNode::Payload p) {
        return Term(std::make_shared<TermNode>(std::move(p)));
    }
    TermPtr p_;
};

// Path from the root: 0 = first/left child, 1 = second/right child.
using NodePath = std::vector<int>;

inline std::string path_str(const NodePath& p) {
    std::string s = "/";
    for (int i : p) s += std::to_string(i) + "/";
    return s;
}

inline std::size_t term_size(const Term& t) {
    if (const auto* c = t.as<ComposeNode>())
        return 1 + term_size(Term(c->first)) + term_size(Term(c->second));
    if (const auto* x = t.as<TensorNode>())
        return 1 + term_size(Term(x->left)) + term_size(Term(x->right));
    return 1;
}

// ---------------------------------------------------------------------------
// Typing

// Generator boundaries.
inline std::pair<ObjectWord, ObjectWord> cup_type(CupOrient o) {
    if (o == CupOrient::plain) return {{}, {Letter::X, Letter::XStar}};
    return {{}, {Letter::XStar, Letter::X}};
}
inline std::pair<ObjectWord, ObjectWord> cap_type(CupOrient o) {
    if (o == CupOrient::plain) return {{Letter::XStar, Letter::X}, {}};
    return {{Letter::X, Letter::XStar}, {}};
}
inline std::pair<ObjectWord, ObjectWord> braid_type(const BraidNode& b) {
    ObjectWord uv{b.u, b.v}, vu{b.v, b.u};
    if (b.sign == BraidSign::pos) return {uv, vu};
    return {vu, uv};
}

namespace detail {
inline std::pair<ObjectWord, ObjectWord> dom_cod_at(const Term& t, NodePath& path) {
    if (const auto* n = t.as<IdNode>()) return {n->word, n->word};
    if (const auto* n = t.as<CupNode>()) return cup_type(n->orient);
    if (const auto* n = t.as<CapNode>()) return cap_type(n->orient);
    if (const auto* n = t.as<BraidNode>()) return braid_type(*n);
    if (const auto* n = t.as<ComposeNode>()) {
        path.push_back(0);
        auto f = dom_cod_at(Term(n->first), path);
        path.back() = 1;
        auto g = dom_cod_at(Term(n->second), path);
        path.pop_back();
        if (f.second != g.first)
            throw type_error("composition mismatch at " + path_str(path) + ": cod " +
                             word_str(f.second) + " != dom " + word_str(g.first));
        return {f.first, g.second};
    }
    const auto* n = t.as<TensorNode>();
    path.push_back(0);
    auto l = dom_cod_at(Term(n->left), path);
    path.back() = 1;
    auto r = dom_cod_at(Term(n->right), path);
    path.pop_back();
    return {concat(l.first, r.first), concat(l.second, r.second)};
}

inline void check_level_at(const Term& t, Level lv, NodePath& path) {
    if (lv.n == 0) {
        const auto* n = t.as<IdNode>();
        if (!n || n->word.size() != 1)
            throw level_error("at n=0 only identities of single letters exist (node " +
                              path_str(path) + ")");
        return;
    }
    if (const auto* n = t.as<IdNode>()) {
        if (lv.k == 0 && n->word.size() != 1)
            throw level_error("k=0 admits no monoidal structure: id must be on a single letter (node " +
                              path_str(path) + ")");
        return;
    }
    if (t.as<CupNode>() || t.as<CapNode>()) {
        if (lv.k < 1)
            throw level_error("cups and caps require k >= 1 (node " + path_str(path) + ")");
        return;
    }
    if (t.as<BraidNode>()) {
        if (lv.k < 2)
            throw level_error("braidings require k >= 2 (node " + path_str(path) + ")");
        return;
    }
    if (const auto* n = t.as<ComposeNode>()) {
        path.push_back(0);
        check_level_at(Term(n->first), lv, path);
        path.back() = 1;
        check_level_at(Term(n->second), lv, path);
        path.pop_back();
        return;
    }
    const auto* n = t.as<TensorNode>();
    if (lv.k < 1) throw level_error("tensor requires k >= 1 (node " + path_str(path) + ")");
    path.push_back(0);
    check_level_at(Term(n->left), lv, path);
    path.back() = 1;
    check_level_at(Term(n->right), lv, path);
    path.pop_back();
}
}  // namespace detail

// Domain and codomain of a term; throws type_error naming the node path on
// any composition mismatch.
inline std::pair<ObjectWord, ObjectWord> dom_cod(const Term& t) {
    NodePath path;
    return detail::dom_cod_at(t, path);
}

// Full check against an ambient level: boundary typing plus the constructor
// gating for that k (no braids below k=2, no monoidal nodes at k=0).
inline std::pair<ObjectWord, ObjectWord> typecheck(const Term& t, Level lv) {
    NodePath path;
    detail::check_level_at(t, lv, path);
    return dom_cod(t);
}

// A term paired with the level it was checked at.
struct TypedTerm {
    Term term;
    Level level;
    ObjectWord dom, cod;

    static TypedTerm make(Term t, Level lv) {
        auto dc = typecheck(t, lv);
        return TypedTerm{std::move(t), lv, std::move(dc.first), std::move(dc.second)};
    }
};

// ---------------------------------------------------------------------------
// Dagger: reverse every constructor.  An involution on terms.

inline Term dagger(const Term& t) {
    if (t.as<IdNode>()) return t;
    if (const auto* n = t.as<CupNode>())
        // i_x^dagger = e_{x*} and i_{x*}^dagger = e_x.
        return Term::cap(n->orient == CupOrient::plain ? CupOrient::starred : CupOrient::plain);
    if (const auto* n = t.as<CapNode>())
        return Term::cup(n->orient == CupOrient::plain ? CupOrient::starred : CupOrient::plain);
    if (const auto* n = t.as<BraidNode>())
        return Term::braid(n->u, n->v, n->sign == BraidSign::pos ? BraidSign::neg : BraidSign::pos);
    if (const auto* n = t.as<ComposeNode>())
        return Term::compose(dagger(Term(n->second)), dagger(Term(n->first)));
    const auto* n = t.as<TensorNode>();
    return Term::tensor(dagger(Term(n->left)), dagger(Term(n->right)));
}

// ---------------------------------------------------------------------------
// Word-level cups and caps, expanded into nested letter generators.
//
//   cup_word(w) : 1 -> w (x) w*        cap_word(w) : w* (x) w -> 1

inline Term cup_letter(Letter l) {
    return Term::cup(l == Letter::X ? CupOrient::plain : CupOrient::starred);
}
inline Term cap_letter(Letter l) {
    return Term::cap(l == Letter::X ? CupOrient::plain : CupOrient::starred);
}

inline Term cup_word(const ObjectWord& w) {
    if (w.empty()) return Term::id({});
    Letter head = w.front();
    ObjectWord rest(w.begin() + 1, w.end());
    if (rest.empty()) return cup_letter(head);
    // i_{l rest} = i_l ; (1_l (x) i_rest (x) 1_{l*})
    Term inner = Term::tensor(Term::tensor(Term::id({head}), cup_word(rest)),
                              Term::id({star(head)}));
    return Term::compose(cup_letter(head), inner);
}

inline Term cap_word(const ObjectWord& w) {
    if (w.empty()) return Term::id({});
    Letter head = w.front();
    ObjectWord rest(w.begin() + 1, w.end());
    if (rest.empty()) return cap_letter(head);
    // e_{l rest} = (1_{rest*} (x) e_l (x) 1_rest) ; e_rest
    Term inner = Term::tensor(Term::tensor(Term::id(word_star(rest)), cap_letter(head)),
                              Term::id(rest));
    return Term::compose(inner, cap_word(rest));
}

// Adjoint morphism t* : cod(t)* -> dom(t)*, built as the duality composite
//   (1 (x) i_dom) ; (1 (x) t (x) 1) ; (e_cod (x) 1).
// Requires a monoidal level (k >= 1).
inline Term adjoint(const Term& t, Level lv) {
    if (lv.k < 1) throw level_error("adjoint needs monoidal structure (k >= 1)");
    auto [d, c] = dom_cod(t);
    ObjectWord cs = word_star(c), ds = word_star(d);
    Term stage1 = Term::tensor(Term::id(cs), cup_word(d));
    Term stage2 = Term::tensor(Term::tensor(Term::id(cs), t), Term::id(ds));
    Term stage3 = Term::tensor(cap_word(c), Term::id(ds));
    return Term::compose(Term::compose(stage1, stage2), stage3);
}

// ---------------------------------------------------------------------------
// Child access by path, shared by the rewrite machinery.

inline std::optional<Term> child(const Term& t, int idx) {
    if (const auto* n = t.as<ComposeNode>())
        return idx == 0 ? Term(n->first) : Term(n->second);
    if (const auto* n = t.as<TensorNode>())
        return idx == 0 ? Term(n->left) : Term(n->right);
    return std::nullopt;
}

inline std::optional<Term> subterm(const Term& t, const NodePath& path) {
    Term cur = t;
    for (int i : path) {
        auto c = child(cur, i);
        if (!c) return std::nullopt;
        cur = *c;
    }
    return cur;
}

inline std::optional<Term> replace_subterm(const Term& t, const NodePath& path, const Term& repl,
                                           std::size_t depth = 0) {
    if (depth == path.size()) return repl;
    int idx = path[depth];
    if (const auto* n = t.as<ComposeNode>()) {
        auto sub = replace_subterm(Term(idx == 0 ? n->first : n->second), path, repl, depth + 1);
        if (!sub) return std::nullopt;
        return idx == 0 ? Term::compose(*sub, Term(n->second))
                        : Term::compose(Term(n->first), *sub);
    }
    if (const auto* n = t.as<TensorNode>()) {
        auto sub = replace_subterm(Term(idx == 0 ? n->left : n->right), path, repl, depth + 1);
        if (!sub) return std::nullopt;
        return idx == 0 ? Term::tensor(*sub, Term(n->right)) : Term::tensor(Term(n->left), *sub);
    }
    return std::nullopt;
}

}  // namespace cobalt
