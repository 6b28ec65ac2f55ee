#pragma once

#include "cobalt/canonical.hpp"
#include "cobalt/evaldatum.hpp"
#include "cobalt/parse.hpp"
#include "cobalt/rules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

// Equality of terms.  Total at k in {0,1,3}; at k = 2 a semi-decision:
// separate by a braided evaluation datum, else search the relation system
// within a budget, else answer unknown.

namespace cobalt {

// ---------------------------------------------------------------------------
// A layered representative term for each canonical form: caps closing the
// domain arcs, braid slices sorting the through strands (k = 3 only), cups
// opening the codomain arcs, loops appended at the right edge.

namespace rep_detail {

struct Slice {
    enum Kind { Cap, Cup, BraidP } kind;
    std::size_t pos;
    Letter l1, l2;  // the two letters consumed (Cap, BraidP) or produced (Cup)
};

struct Elim {
    std::vector<Slice> slices;          // caps/braids removing every arc
    std::vector<std::size_t> leftover;  // surviving point indices, in order
};

// Remove all arcs from a word by caps, braiding arc ends together first when
// crossings are allowed.  Deterministic: always attack the arc containing
// the smallest remaining index.
inline Elim eliminate_arcs(const ObjectWord& word,
                           const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                           bool planar) {
    Elim out;
    std::vector<std::size_t> cur(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) cur[i] = i;
    std::map<std::size_t, std::size_t> mate;
    std::set<std::size_t> open;
    for (auto [i, j] : arcs) {
        mate[i] = j;
        mate[j] = i;
        open.insert(i);
    }
    auto letter_of = [&](std::size_t token) { return word[token]; };
    auto pos_of = [&](std::size_t token) {
        return static_cast<std::size_t>(std::find(cur.begin(), cur.end(), token) - cur.begin());
    };

    while (!open.empty()) {
        std::size_t chosen_i = 0, chosen_p = 0;
        bool found = false;
        if (planar) {
            // Leftmost arc whose two ends are currently adjacent.
            for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
                std::size_t a = cur[p], b = cur[p + 1];
                auto it = mate.find(a);
                if (it != mate.end() && it->second == b) {
                    chosen_i = std::min(a, b);
                    chosen_p = p;
                    found = true;
                    break;
                }
            }
            if (!found) throw canonical_error("internal: planar arc elimination stuck");
        } else {
            chosen_i = *open.begin();
            std::size_t p = pos_of(chosen_i), q = pos_of(mate[chosen_i]);
            if (p > q) std::swap(p, q);
            // Braid the far end leftward until the arc ends sit side by side.
            for (std::size_t t = q; t > p + 1; --t) {
                out.slices.push_back(
                    Slice{Slice::BraidP, t - 1, letter_of(cur[t - 1]), letter_of(cur[t])});
                std::swap(cur[t - 1], cur[t]);
            }
            chosen_p = p;
            found = true;
        }
        std::size_t a = cur[chosen_p], b = cur[chosen_p + 1];
        out.slices.push_back(Slice{Slice::Cap, chosen_p, letter_of(a), letter_of(b)});
        open.erase(std::min(a, b));
        open.erase(std::max(a, b));
        cur.erase(cur.begin() + chosen_p, cur.begin() + chosen_p + 2);
    }
    out.leftover = cur;
    return out;
}

inline Term slice_term(const ObjectWord& word_before, const Slice& s) {
    Term gen = Term::id({});
    std::size_t consumed = 0;
    switch (s.kind) {
        case Slice::Cap:
            // cap consumes [x*,x]; the starred flavour consumes [x,x*].
            gen = Term::cap(s.l1 == Letter::XStar ? CupOrient::plain : CupOrient::starred);
            consumed = 2;
            break;
        case Slice::Cup:
            gen = Term::cup(s.l1 == Letter::X ? CupOrient::plain : CupOrient::starred);
            consumed = 0;
            break;
        case Slice::BraidP:
            gen = Term::braid(s.l1, s.l2, BraidSign::pos);
            consumed = 2;
            break;
    }
    ObjectWord left(word_before.begin(), word_before.begin() + s.pos);
    ObjectWord right(word_before.begin() + s.pos + consumed, word_before.end());
    Term t = gen;
    if (!left.empty()) t = Term::tensor(Term::id(left), t);
    if (!right.empty()) t = Term::tensor(t, Term::id(right));
    return t;
}

inline ObjectWord apply_slice(const ObjectWord& w, const Slice& s) {
    ObjectWord out(w.begin(), w.begin() + s.pos);
    switch (s.kind) {
        case Slice::Cap:
            out.insert(out.end(), w.begin() + s.pos + 2, w.end());
            break;
        case Slice::Cup:
            out.push_back(s.l1);
            out.push_back(s.l2);
            out.insert(out.end(), w.begin() + s.pos, w.end());
            break;
        case Slice::BraidP:
            out.push_back(s.l2);
            out.push_back(s.l1);
            out.insert(out.end(), w.begin() + s.pos + 2, w.end());
            break;
    }
    return out;
}

}  // namespace rep_detail

// The canonical representative term of a canonical form.  Distinct forms get
// structurally distinct representatives; every term rewrites to the
// representative of its own form at k in {1,3}.
inline Term representative_term(const CanonicalForm& cf) {
    using rep_detail::Slice;
    bool planar = cf.k == 1;

    std::vector<std::pair<std::size_t, std::size_t>> dom_arcs, cod_arcs;
    std::map<std::size_t, std::size_t> through;  // dom index -> cod index
    for (const auto& m : cf.matching) {
        if (m.a.side == 0 && m.b.side == 0)
            dom_arcs.emplace_back(m.a.index, m.b.index);
        else if (m.a.side == 1 && m.b.side == 1)
            cod_arcs.emplace_back(m.a.index, m.b.index);
        else
            through[m.a.index] = m.b.index;
    }

    std::vector<Slice> slices;
    auto dom_elim = rep_detail::eliminate_arcs(cf.dom, dom_arcs, planar);
    slices = dom_elim.slices;

    // Build the codomain by running its own arc elimination and replaying it
    // backwards, caps turning into cups.
    auto cod_elim = rep_detail::eliminate_arcs(cf.cod, cod_arcs, planar);

    // Reorder the surviving strands to the order the codomain replay expects.
    std::vector<std::size_t> have;  // cod indices, current order
    for (std::size_t tok : dom_elim.leftover) have.push_back(through.at(tok));
    const std::vector<std::size_t>& want = cod_elim.leftover;
    if (have.size() != want.size())
        throw canonical_error("internal: through-strand count mismatch");
    // Current letters of the surviving strands follow their cod indices.
    auto letter_of_cod = [&](std::size_t c) { return cf.cod[c]; };
    for (std::size_t target = 0; target < want.size(); ++target) {
        std::size_t at =
            static_cast<std::size_t>(std::find(have.begin(), have.end(), want[target]) -
                                     have.begin());
        if (at == have.size()) throw canonical_error("internal: lost through strand");
        for (std::size_t t = at; t > target; --t) {
            slices.push_back(Slice{Slice::BraidP, static_cast<std::size_t>(t - 1),
                                   letter_of_cod(have[t - 1]), letter_of_cod(have[t])});
            std::swap(have[t - 1], have[t]);
        }
    }
    if (planar && have != want)
        throw canonical_error("internal: planar through strands out of order");

    for (auto it = cod_elim.slices.rbegin(); it != cod_elim.slices.rend(); ++it) {
        Slice s = *it;
        if (s.kind == Slice::Cap) {
            s.kind = Slice::Cup;
        } else {
            std::swap(s.l1, s.l2);  // undo the swap with the opposite braid
        }
        slices.push_back(s);
    }

    // Loops live at the right edge: a cup immediately closed by a cap.
    auto push_loop = [&](bool cw_loop) {
        std::size_t edge = cf.cod.size();
        if (cw_loop) {
            slices.push_back(Slice{Slice::Cup, edge, Letter::X, Letter::XStar});
            slices.push_back(Slice{Slice::Cap, edge, Letter::X, Letter::XStar});
        } else {
            slices.push_back(Slice{Slice::Cup, edge, Letter::XStar, Letter::X});
            slices.push_back(Slice{Slice::Cap, edge, Letter::XStar, Letter::X});
        }
    };
    for (long i = 0; i < cf.cw; ++i) push_loop(true);
    for (long i = 0; i < cf.ccw; ++i) push_loop(false);
    for (long i = 0; i < cf.any; ++i) push_loop(true);

    Term result;
    if (slices.empty()) {
        result = Term::id(cf.dom);
    } else {
        ObjectWord w = cf.dom;
        bool first = true;
        for (const Slice& s : slices) {
            Term st = rep_detail::slice_term(w, s);
            result = first ? st : Term::compose(result, st);
            first = false;
            w = rep_detail::apply_slice(w, s);
        }
        if (w != cf.cod)
            throw canonical_error("internal: representative ends on the wrong word");
    }
    CanonicalOptions opts;
    opts.merge_loops_at_k3 = cf.loops_merged || cf.k < 3;
    if (canonical_form(result, Level::of(cf.k), opts) != cf)
        throw canonical_error("internal: representative does not realize its form");
    return result;
}

// ---------------------------------------------------------------------------
// Bounded rewriting reachability.

struct SearchLimits {
    std::size_t budget = 10000;  // total node expansions
    std::size_t size_cap = 0;    // 0: three times the larger input
};

namespace search_detail {
inline std::string key(const Term& t) { return print_term(t); }
}

// Bidirectional breadth-first search through single rule applications.
inline bool rewrite_reachable(const Term& s, const Term& t, Level lv, SearchLimits lim = {}) {
    if (s == t) return true;
    std::size_t cap = lim.size_cap
                          ? lim.size_cap
                          : std::max<std::size_t>(3 * std::max(term_size(s), term_size(t)), 12);

    std::map<std::string, Term> fwd{{search_detail::key(s), s}};
    std::map<std::string, Term> bwd{{search_detail::key(t), t}};
    std::deque<Term> fq{s}, bq{t};
    std::size_t spent = 0;

    auto expand = [&](std::deque<Term>& q, std::map<std::string, Term>& seen,
                      std::map<std::string, Term>& other, bool& met) {
        if (q.empty()) return;
        Term cur = q.front();
        q.pop_front();
        for (const auto& app : all_applications(cur, lv)) {
            if (term_size(app.result) > cap) continue;
            std::string k = search_detail::key(app.result);
            if (other.count(k)) {
                met = true;
                return;
            }
            if (seen.emplace(k, app.result).second) q.push_back(app.result);
        }
    };

    while ((!fq.empty() || !bq.empty()) && spent < lim.budget) {
        bool met = false;
        if (fq.size() <= bq.size() && !fq.empty())
            expand(fq, fwd, bwd, met);
        else
            expand(bq, bwd, fwd, met);
        if (met) return true;
        ++spent;
    }
    return false;
}

// Single-source breadth-first reach set, used by the completeness checks:
// walk outward from a representative until every wanted term is seen.
// Returns the keys never reached.
inline std::vector<std::string> reach_all(const Term& source, const std::vector<Term>& wanted,
                                          Level lv, SearchLimits lim = {}) {
    std::set<std::string> missing;
    for (const auto& w : wanted) missing.insert(search_detail::key(w));
    missing.erase(search_detail::key(source));

    std::size_t base = term_size(source);
    for (const auto& w : wanted) base = std::max(base, term_size(w));
    std::size_t cap = lim.size_cap ? lim.size_cap : std::max<std::size_t>(base + 6, 12);

    std::set<std::string> seen{search_detail::key(source)};
    std::deque<Term> q{source};
    std::size_t spent = 0;
    while (!q.empty() && !missing.empty() && spent < lim.budget) {
        Term cur = q.front();
        q.pop_front();
        ++spent;
        for (const auto& app : all_applications(cur, lv)) {
            if (term_size(app.result) > cap) continue;
            std::string k = search_detail::key(app.result);
            if (!seen.insert(k).second) continue;
            missing.erase(k);
            q.push_back(app.result);
        }
    }
    return {missing.begin(), missing.end()};
}

// ---------------------------------------------------------------------------
// The equality decision.

enum class EqVerdict { equal, distinct, unknown };

inline const char* verdict_name(EqVerdict v) {
    switch (v) {
        case EqVerdict::equal: return "equal";
        case EqVerdict::distinct: return "distinct";
        case EqVerdict::unknown: return "unknown";
    }
    return "?";
}

struct EqualOptions {
    std::size_t budget = 10000;
    CanonicalOptions canon;
    // Separating datum for k = 2; the bundled one when absent.
    const EvalDatum* separator = nullptr;
};

inline EqVerdict equal(const Term& s, const Term& t, Level lv, const EqualOptions& opts = {}) {
    auto ds = typecheck(s, lv);
    auto dt = typecheck(t, lv);
    if (ds != dt)
        throw type_error("equal: boundary mismatch: " + word_str(ds.first) + " -> " +
                         word_str(ds.second) + " vs " + word_str(dt.first) + " -> " +
                         word_str(dt.second));

    if (lv.k == 1 || lv.k == 3)
        return canonical_form(s, lv, opts.canon) == canonical_form(t, lv, opts.canon)
                   ? EqVerdict::equal
                   : EqVerdict::distinct;

    if (lv.k == 0) {
        // Only identity morphisms exist, so agreeing boundaries decide.
        return EqVerdict::equal;
    }

    // k = 2: semi-decision.  A differing evaluation separates; a rewrite
    // path identifies; otherwise the honest answer is unknown.
    static const EvalDatum bundled = separating_datum_k2();
    const EvalDatum& sep = opts.separator ? *opts.separator : bundled;
    Evaluator ev(sep);
    if (ev.eval(s) != ev.eval(t)) return EqVerdict::distinct;
    SearchLimits lim;
    lim.budget = opts.budget;
    if (rewrite_reachable(s, t, lv, lim)) return EqVerdict::equal;
    return EqVerdict::unknown;
}

}  // namespace cobalt
