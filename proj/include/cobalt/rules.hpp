#pragma once

#include "cobalt/term.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// The relation systems, as directed rewrite rules on term trees.  Every rule
// has an inverse rule, so reachability under bounded rewriting is symmetric.
// Rules are type-preserving on well-typed inputs and never change a term's
// canonical form at the levels where one exists.

namespace cobalt {

struct rewrite_error : std::runtime_error {
    explicit rewrite_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct RuleDef {
    std::string name;
    int min_k;  // smallest level at which the rule is part of the system
    std::function<std::optional<Term>(const Term&)> apply;  // at a single node
};

namespace rules_detail {

inline bool is_id_word(const Term& t, const ObjectWord& w) {
    const auto* n = t.as<IdNode>();
    return n && n->word == w;
}

inline Term tri_zig(CupOrient o) {
    // (i (x) 1) ; (1 (x) e) straightening the l strand, l fixed by o.
    ObjectWord l = o == CupOrient::plain ? ObjectWord{Letter::X} : ObjectWord{Letter::XStar};
    return Term::compose(Term::tensor(Term::cup(o), Term::id(l)),
                         Term::tensor(Term::id(l), Term::cap(o)));
}

inline Term tri_zag(CupOrient o) {
    // (1 (x) i) ; (e (x) 1) straightening the dual strand.
    ObjectWord l = o == CupOrient::plain ? ObjectWord{Letter::XStar} : ObjectWord{Letter::X};
    return Term::compose(Term::tensor(Term::id(l), Term::cup(o)),
                         Term::tensor(Term::cap(o), Term::id(l)));
}

// Braid slide of a single strand u across a cup/cap, the naturality of the
// braiding instantiated at the duality generators.  sign picks which way the
// moving strand crosses.
inline Term natcup_big(CupOrient o, Letter u, BraidSign s) {
    auto [l1, l2] = [&] {
        ObjectWord c = cup_type(o).second;
        return std::pair<Letter, Letter>{c[0], c[1]};
    }();
    Term b1 = s == BraidSign::pos ? Term::braid(u, l1, BraidSign::pos)
                                  : Term::braid(l1, u, BraidSign::neg);
    Term b2 = s == BraidSign::pos ? Term::braid(u, l2, BraidSign::pos)
                                  : Term::braid(l2, u, BraidSign::neg);
    return Term::compose(
        Term::compose(Term::tensor(Term::id({u}), Term::cup(o)),
                      Term::tensor(b1, Term::id({l2}))),
        Term::tensor(Term::id({l1}), b2));
}

inline Term natcup_small(CupOrient o, Letter u) {
    return Term::tensor(Term::cup(o), Term::id({u}));
}

inline Term natcap_big(CupOrient o, Letter u, BraidSign s) {
    auto [l1, l2] = [&] {
        ObjectWord d = cap_type(o).first;
        return std::pair<Letter, Letter>{d[0], d[1]};
    }();
    Term b1 = s == BraidSign::pos ? Term::braid(u, l1, BraidSign::pos)
                                  : Term::braid(l1, u, BraidSign::neg);
    Term b2 = s == BraidSign::pos ? Term::braid(u, l2, BraidSign::pos)
                                  : Term::braid(l2, u, BraidSign::neg);
    return Term::compose(
        Term::compose(Term::tensor(b1, Term::id({l2})),
                      Term::tensor(Term::id({l1}), b2)),
        Term::tensor(Term::cap(o), Term::id({u})));
}

inline Term natcap_small(CupOrient o, Letter u) {
    return Term::tensor(Term::id({u}), Term::cap(o));
}

inline std::optional<Term> match_exact(const Term& t, const Term& pat, const Term& result) {
    if (t == pat) return result;
    return std::nullopt;
}

}  // namespace rules_detail

inline const std::vector<RuleDef>& rule_registry() {
    using rules_detail::natcap_big;
    using rules_detail::natcap_small;
    using rules_detail::natcup_big;
    using rules_detail::natcup_small;
    using rules_detail::tri_zag;
    using rules_detail::tri_zig;

    static const std::vector<RuleDef> defs = [] {
        std::vector<RuleDef> r;

        // --- identity laws ------------------------------------------------
        r.push_back({"id.elim.l", 0, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c || !Term(c->first).as<IdNode>()) return std::nullopt;
                         return Term(c->second);
                     }});
        r.push_back({"id.elim.r", 0, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c || !Term(c->second).as<IdNode>()) return std::nullopt;
                         return Term(c->first);
                     }});
        r.push_back({"id.intro.l", 0, [](const Term& t) -> std::optional<Term> {
                         return Term::compose(Term::id(dom_cod(t).first), t);
                     }});
        r.push_back({"id.intro.r", 0, [](const Term& t) -> std::optional<Term> {
                         return Term::compose(t, Term::id(dom_cod(t).second));
                     }});

        // --- associativity of both operations ------------------------------
        r.push_back({"compose.assoc.l", 0, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c) return std::nullopt;
                         const auto* cl = Term(c->first).as<ComposeNode>();
                         if (!cl) return std::nullopt;
                         return Term::compose(Term(cl->first),
                                              Term::compose(Term(cl->second), Term(c->second)));
                     }});
        r.push_back({"compose.assoc.r", 0, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c) return std::nullopt;
                         const auto* cr = Term(c->second).as<ComposeNode>();
                         if (!cr) return std::nullopt;
                         return Term::compose(Term::compose(Term(c->first), Term(cr->first)),
                                              Term(cr->second));
                     }});
        r.push_back({"tensor.assoc.l", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x) return std::nullopt;
                         const auto* xl = Term(x->left).as<TensorNode>();
                         if (!xl) return std::nullopt;
                         return Term::tensor(Term(xl->left),
                                             Term::tensor(Term(xl->right), Term(x->right)));
                     }});
        r.push_back({"tensor.assoc.r", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x) return std::nullopt;
                         const auto* xr = Term(x->right).as<TensorNode>();
                         if (!xr) return std::nullopt;
                         return Term::tensor(Term::tensor(Term(x->left), Term(xr->left)),
                                             Term(xr->right));
                     }});

        // --- strict unit object -------------------------------------------
        r.push_back({"unit.elim.l", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x || !rules_detail::is_id_word(Term(x->left), {})) return std::nullopt;
                         return Term(x->right);
                     }});
        r.push_back({"unit.elim.r", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x || !rules_detail::is_id_word(Term(x->right), {})) return std::nullopt;
                         return Term(x->left);
                     }});
        r.push_back({"unit.intro.l", 1, [](const Term& t) -> std::optional<Term> {
                         return Term::tensor(Term::id({}), t);
                     }});
        r.push_back({"unit.intro.r", 1, [](const Term& t) -> std::optional<Term> {
                         return Term::tensor(t, Term::id({}));
                     }});

        // --- identities split and join across tensor -----------------------
        r.push_back({"id.split", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* n = t.as<IdNode>();
                         if (!n || n->word.size() < 2) return std::nullopt;
                         ObjectWord head{n->word.front()};
                         ObjectWord rest(n->word.begin() + 1, n->word.end());
                         return Term::tensor(Term::id(head), Term::id(rest));
                     }});
        r.push_back({"id.join", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x) return std::nullopt;
                         const auto* l = Term(x->left).as<IdNode>();
                         const auto* rr = Term(x->right).as<IdNode>();
                         if (!l || !rr) return std::nullopt;
                         return Term::id(concat(l->word, rr->word));
                     }});

        // --- exchange law ---------------------------------------------------
        r.push_back({"exchange.split", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x) return std::nullopt;
                         const auto* cl = Term(x->left).as<ComposeNode>();
                         const auto* cr = Term(x->right).as<ComposeNode>();
                         if (!cl || !cr) return std::nullopt;
                         return Term::compose(
                             Term::tensor(Term(cl->first), Term(cr->first)),
                             Term::tensor(Term(cl->second), Term(cr->second)));
                     }});
        r.push_back({"exchange.join", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c) return std::nullopt;
                         const auto* xl = Term(c->first).as<TensorNode>();
                         const auto* xr = Term(c->second).as<TensorNode>();
                         if (!xl || !xr) return std::nullopt;
                         // The split of the interface must line up.
                         if (dom_cod(Term(xl->left)).second != dom_cod(Term(xr->left)).first)
                             return std::nullopt;
                         return Term::tensor(Term::compose(Term(xl->left), Term(xr->left)),
                                             Term::compose(Term(xl->right), Term(xr->right)));
                     }});

        // --- scalars are central: slide closed diagrams across tensor ------
        r.push_back({"scalar.slide.l", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x) return std::nullopt;
                         auto dc = dom_cod(Term(x->left));
                         if (!dc.first.empty() || !dc.second.empty()) return std::nullopt;
                         return Term::tensor(Term(x->right), Term(x->left));
                     }});
        r.push_back({"scalar.slide.r", 1, [](const Term& t) -> std::optional<Term> {
                         const auto* x = t.as<TensorNode>();
                         if (!x) return std::nullopt;
                         auto dc = dom_cod(Term(x->right));
                         if (!dc.first.empty() || !dc.second.empty()) return std::nullopt;
                         return Term::tensor(Term(x->right), Term(x->left));
                     }});

        // --- triangle identities -------------------------------------------
        struct Tri {
            const char* reduce;
            const char* expand;
            Term big;
            ObjectWord small;
        };
        std::vector<Tri> tris = {
            {"tri.zig.x.reduce", "tri.zig.x.expand", tri_zig(CupOrient::plain), {Letter::X}},
            {"tri.zag.x.reduce", "tri.zag.x.expand", tri_zag(CupOrient::plain), {Letter::XStar}},
            {"tri.zig.xs.reduce", "tri.zig.xs.expand", tri_zig(CupOrient::starred), {Letter::XStar}},
            {"tri.zag.xs.reduce", "tri.zag.xs.expand", tri_zag(CupOrient::starred), {Letter::X}},
        };
        for (const auto& tri : tris) {
            Term big = tri.big;
            ObjectWord small = tri.small;
            r.push_back({tri.reduce, 1, [big, small](const Term& t) -> std::optional<Term> {
                             return rules_detail::match_exact(t, big, Term::id(small));
                         }});
            r.push_back({tri.expand, 1, [big, small](const Term& t) -> std::optional<Term> {
                             return rules_detail::match_exact(t, Term::id(small), big);
                         }});
        }

        // --- braiding inverses ----------------------------------------------
        r.push_back({"braid.cancel.pm", 2, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c) return std::nullopt;
                         const auto* b1 = Term(c->first).as<BraidNode>();
                         const auto* b2 = Term(c->second).as<BraidNode>();
                         if (!b1 || !b2 || b1->u != b2->u || b1->v != b2->v) return std::nullopt;
                         if (b1->sign != BraidSign::pos || b2->sign != BraidSign::neg)
                             return std::nullopt;
                         return Term::id({b1->u, b1->v});
                     }});
        r.push_back({"braid.cancel.mp", 2, [](const Term& t) -> std::optional<Term> {
                         const auto* c = t.as<ComposeNode>();
                         if (!c) return std::nullopt;
                         const auto* b1 = Term(c->first).as<BraidNode>();
                         const auto* b2 = Term(c->second).as<BraidNode>();
                         if (!b1 || !b2 || b1->u != b2->u || b1->v != b2->v) return std::nullopt;
                         if (b1->sign != BraidSign::neg || b2->sign != BraidSign::pos)
                             return std::nullopt;
                         return Term::id({b1->v, b1->u});
                     }});
        r.push_back({"braid.intro.pm", 2, [](const Term& t) -> std::optional<Term> {
                         const auto* n = t.as<IdNode>();
                         if (!n || n->word.size() != 2) return std::nullopt;
                         Letter u = n->word[0], v = n->word[1];
                         return Term::compose(Term::braid(u, v, BraidSign::pos),
                                              Term::braid(u, v, BraidSign::neg));
                     }});
        r.push_back({"braid.intro.mp", 2, [](const Term& t) -> std::optional<Term> {
                         const auto* n = t.as<IdNode>();
                         if (!n || n->word.size() != 2) return std::nullopt;
                         Letter u = n->word[1], v = n->word[0];
                         return Term::compose(Term::braid(u, v, BraidSign::neg),
                                              Term::braid(u, v, BraidSign::pos));
                     }});

        // --- braiding naturality across cups and caps (k >= 2) -------------
        for (CupOrient o : {CupOrient::plain, CupOrient::starred})
            for (Letter u : {Letter::X, Letter::XStar})
                for (BraidSign s : {BraidSign::pos, BraidSign::neg}) {
                    std::string tag = std::string(o == CupOrient::plain ? ".p." : ".s.") +
                                      (u == Letter::X ? "x" : "xs") +
                                      (s == BraidSign::pos ? ".over" : ".under");
                    Term big_cup = natcup_big(o, u, s), small_cup = natcup_small(o, u);
                    r.push_back({"braid.nat.cup.reduce" + tag, 2,
                                 [big_cup, small_cup](const Term& t) {
                                     return rules_detail::match_exact(t, big_cup, small_cup);
                                 }});
                    r.push_back({"braid.nat.cup.expand" + tag, 2,
                                 [big_cup, small_cup](const Term& t) {
                                     return rules_detail::match_exact(t, small_cup, big_cup);
                                 }});
                    Term big_cap = natcap_big(o, u, s), small_cap = natcap_small(o, u);
                    r.push_back({"braid.nat.cap.reduce" + tag, 2,
                                 [big_cap, small_cap](const Term& t) {
                                     return rules_detail::match_exact(t, big_cap, small_cap);
                                 }});
                    r.push_back({"braid.nat.cap.expand" + tag, 2,
                                 [big_cap, small_cap](const Term& t) {
                                     return rules_detail::match_exact(t, small_cap, big_cap);
                                 }});
                }

        // --- symmetry: both crossings agree (k >= 3) ------------------------
        r.push_back({"braid.symm.p2m", 3, [](const Term& t) -> std::optional<Term> {
                         const auto* b = t.as<BraidNode>();
                         if (!b || b->sign != BraidSign::pos) return std::nullopt;
                         return Term::braid(b->v, b->u, BraidSign::neg);
                     }});
        r.push_back({"braid.symm.m2p", 3, [](const Term& t) -> std::optional<Term> {
                         const auto* b = t.as<BraidNode>();
                         if (!b || b->sign != BraidSign::neg) return std::nullopt;
                         return Term::braid(b->v, b->u, BraidSign::pos);
                     }});

        // --- trivial twist: crossing a cup converts its orientation (k >= 3)
        struct CB {
            const char* reduce;
            const char* expand;
            Term big, small;
        };
        std::vector<CB> cbs = {
            {"twist.cup.x.reduce", "twist.cup.x.expand",
             Term::compose(Term::cup(CupOrient::plain),
                           Term::braid(Letter::X, Letter::XStar, BraidSign::pos)),
             Term::cup(CupOrient::starred)},
            {"twist.cup.xs.reduce", "twist.cup.xs.expand",
             Term::compose(Term::cup(CupOrient::starred),
                           Term::braid(Letter::XStar, Letter::X, BraidSign::pos)),
             Term::cup(CupOrient::plain)},
            {"twist.cap.x.reduce", "twist.cap.x.expand",
             Term::compose(Term::braid(Letter::X, Letter::XStar, BraidSign::pos),
                           Term::cap(CupOrient::plain)),
             Term::cap(CupOrient::starred)},
            {"twist.cap.xs.reduce", "twist.cap.xs.expand",
             Term::compose(Term::braid(Letter::XStar, Letter::X, BraidSign::pos),
                           Term::cap(CupOrient::starred)),
             Term::cap(CupOrient::plain)},
        };
        for (const auto& cb : cbs) {
            Term big = cb.big, small = cb.small;
            r.push_back({cb.reduce, 3, [big, small](const Term& t) {
                             return rules_detail::match_exact(t, big, small);
                         }});
            r.push_back({cb.expand, 3, [big, small](const Term& t) {
                             return rules_detail::match_exact(t, small, big);
                         }});
        }

        return r;
    }();
    return defs;
}

inline const RuleDef& find_rule(const std::string& name) {
    for (const auto& r : rule_registry())
        if (r.name == name) return r;
    throw rewrite_error("unknown rule: " + name);
}

// Apply one named rule at one position.  Throws if the position is invalid
// or the rule does not match there.
inline Term apply_relation(const Term& t, const std::string& rule, const NodePath& pos,
                           Level lv) {
    const RuleDef& def = find_rule(rule);
    if (lv.k < def.min_k)
        throw rewrite_error("rule " + rule + " needs k >= " + std::to_string(def.min_k));
    auto sub = subterm(t, pos);
    if (!sub) throw rewrite_error("invalid position " + path_str(pos));
    auto replaced = def.apply(*sub);
    if (!replaced) throw rewrite_error("rule " + rule + " does not match at " + path_str(pos));
    auto out = replace_subterm(t, pos, *replaced);
    if (!out) throw rewrite_error("invalid position " + path_str(pos));
    return *out;
}

struct RuleApplication {
    std::string rule;
    NodePath pos;
    Term result;
};

namespace rules_detail {
inline void collect_at(const Term& root, const Term& node, NodePath& pos, int k,
                       std::vector<RuleApplication>& out) {
    for (const auto& def : rule_registry()) {
        if (k < def.min_k) continue;
        auto replaced = def.apply(node);
        if (!replaced) continue;
        auto result = replace_subterm(root, pos, *replaced);
        out.push_back(RuleApplication{def.name, pos, *result});
    }
    for (int i = 0; i < 2; ++i) {
        auto c = child(node, i);
        if (!c) break;
        pos.push_back(i);
        collect_at(root, *c, pos, k, out);
        pos.pop_back();
    }
}
}  // namespace rules_detail

// Every single-step rewrite of t legal at level k.
inline std::vector<RuleApplication> all_applications(const Term& t, Level lv) {
    std::vector<RuleApplication> out;
    NodePath pos;
    rules_detail::collect_at(t, t, pos, lv.k, out);
    return out;
}

}  // namespace cobalt
