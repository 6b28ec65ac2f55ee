#pragma once

#include "cobalt/term.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

// Canonical forms for the decidable levels.  A term denotes a tangle
// diagram; tracing its strands yields a matching on the boundary points
// plus a multiset of closed loops.  At k = 1 the matching is planar and the
// two loop orientation classes are kept apart; at k >= 3 crossings are
// immaterial and the loop classes merge.  Equality of canonical forms
// decides equality of terms at k in {1,3}.

namespace cobalt {

struct canonical_error : std::runtime_error {
    explicit canonical_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CanonicalOptions {
    // Merging the two loop orientation classes at k >= 3 follows from taking
    // the twist to be the identity; keep it switchable.
    bool merge_loops_at_k3 = true;
};

struct BoundaryPoint {
    int side;  // 0 = dom, 1 = cod
    std::size_t index;

    bool operator==(const BoundaryPoint& o) const { return side == o.side && index == o.index; }
    bool operator<(const BoundaryPoint& o) const {
        return std::tie(side, index) < std::tie(o.side, o.index);
    }
};

struct StrandPair {
    BoundaryPoint a, b;  // a < b in boundary order
    bool fwd;            // true when the strand flows from a to b

    bool operator==(const StrandPair& o) const { return a == o.a && b == o.b && fwd == o.fwd; }
    bool operator<(const StrandPair& o) const {
        return std::tie(a, b, fwd) < std::tie(o.a, o.b, o.fwd);
    }
};

struct CanonicalForm {
    int k = 1;
    ObjectWord dom, cod;
    std::vector<StrandPair> matching;  // sorted
    // Loop counters: (cw, ccw) when orientation classes are distinct, a
    // single counter when merged.
    bool loops_merged = false;
    long cw = 0, ccw = 0, any = 0;

    bool operator==(const CanonicalForm& o) const {
        return k == o.k && dom == o.dom && cod == o.cod && matching == o.matching &&
               loops_merged == o.loops_merged && cw == o.cw && ccw == o.ccw && any == o.any;
    }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }

    bool operator<(const CanonicalForm& o) const {
        return std::tie(k, dom, cod, matching, loops_merged, cw, ccw, any) <
               std::tie(o.k, o.dom, o.cod, o.matching, o.loops_merged, o.cw, o.ccw, o.any);
    }
};

namespace detail {

// Open diagram fragment.  Boundary points are encoded 0..|dom|-1 for the
// domain and |dom|..|dom|+|cod|-1 for the codomain.  partner[] matches
// endpoints in pairs; turn[] carries the strand's accumulated turning in
// half-turn units (each cup or cap is one half-turn, signed by travel
// direction, which the letters fix).
struct Fragment {
    ObjectWord dom, cod;
    std::vector<int> partner;
    std::vector<int> turn;
    std::vector<int> loops;  // accumulated turning of each closed loop

    std::size_t dsize() const { return dom.size(); }
    std::size_t csize() const { return cod.size(); }
};

inline Fragment frag_id(const ObjectWord& w) {
    Fragment f;
    f.dom = f.cod = w;
    std::size_t n = w.size();
    f.partner.resize(2 * n);
    f.turn.assign(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        f.partner[i] = static_cast<int>(n + i);
        f.partner[n + i] = static_cast<int>(i);
    }
    return f;
}

inline Fragment frag_arc2(ObjectWord dom, ObjectWord cod, int turn) {
    Fragment f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.partner = {1, 0};
    f.turn = {turn, turn};
    return f;
}

inline Fragment frag_cup(CupOrient o) {
    // Travelling through a minimum right-to-left is a clockwise half-turn;
    // the letters on i_x force exactly that, and i_{x*} the opposite.
    if (o == CupOrient::plain)
        return frag_arc2({}, {Letter::X, Letter::XStar}, -1);
    return frag_arc2({}, {Letter::XStar, Letter::X}, +1);
}

inline Fragment frag_cap(CupOrient o) {
    if (o == CupOrient::plain)
        return frag_arc2({Letter::XStar, Letter::X}, {}, +1);
    return frag_arc2({Letter::X, Letter::XStar}, {}, -1);
}

inline Fragment frag_braid(const BraidNode& b) {
    Fragment f;
    auto ty = braid_type(b);
    f.dom = ty.first;
    f.cod = ty.second;
    f.partner = {3, 2, 1, 0};
    f.turn.assign(4, 0);
    return f;
}

inline Fragment frag_tensor(const Fragment& l, const Fragment& r) {
    Fragment f;
    f.dom = concat(l.dom, r.dom);
    f.cod = concat(l.cod, r.cod);
    std::size_t M = f.dsize();
    f.partner.resize(M + f.csize());
    f.turn.resize(M + f.csize());
    auto map_l = [&](int e) {
        return e < static_cast<int>(l.dsize()) ? e
                                               : static_cast<int>(M) + (e - static_cast<int>(l.dsize()));
    };
    auto map_r = [&](int e) {
        return e < static_cast<int>(r.dsize())
                   ? static_cast<int>(l.dsize()) + e
                   : static_cast<int>(M + l.csize()) + (e - static_cast<int>(r.dsize()));
    };
    for (std::size_t e = 0; e < l.partner.size(); ++e) {
        f.partner[map_l(static_cast<int>(e))] = map_l(l.partner[e]);
        f.turn[map_l(static_cast<int>(e))] = l.turn[e];
    }
    for (std::size_t e = 0; e < r.partner.size(); ++e) {
        f.partner[map_r(static_cast<int>(e))] = map_r(r.partner[e]);
        f.turn[map_r(static_cast<int>(e))] = r.turn[e];
    }
    f.loops = l.loops;
    f.loops.insert(f.loops.end(), r.loops.begin(), r.loops.end());
    return f;
}

inline Fragment frag_compose(const Fragment& f, const Fragment& g) {
    if (f.cod != g.dom) throw canonical_error("fragment gluing mismatch");
    const int a = static_cast<int>(f.dsize());
    const int b = static_cast<int>(f.csize());
    const int c = static_cast<int>(g.csize());

    Fragment out;
    out.dom = f.dom;
    out.cod = g.cod;
    out.partner.assign(a + c, -1);
    out.turn.assign(a + c, 0);
    out.loops = f.loops;
    out.loops.insert(out.loops.end(), g.loops.begin(), g.loops.end());

    // External endpoints: 0..a-1 are f's domain, a..a+c-1 are g's codomain.
    // Walking starts at an external endpoint and alternates between f and g
    // strands across the interface.
    std::vector<char> seen_iface(b, 0);

    auto walk = [&](bool start_in_f, int start_local) {
        bool in_f = start_in_f;
        int local = start_local;  // endpoint index within the current fragment
        int turn_sum = 0;
        while (true) {
            const Fragment& cur = in_f ? f : g;
            turn_sum += cur.turn[local];
            int p = cur.partner[local];
            if (in_f) {
                if (p < a) return std::make_tuple(0, p, turn_sum);  // f domain: external
                int j = p - a;  // interface
                seen_iface[j] = 1;
                in_f = false;
                local = j;  // g domain endpoint j
            } else {
                int gd = static_cast<int>(g.dsize());
                if (p >= gd) return std::make_tuple(1, p - gd, turn_sum);  // g codomain
                seen_iface[p] = 1;
                in_f = true;
                local = a + p;  // f codomain endpoint p
            }
        }
    };

    auto ext_encode = [&](int side, int idx) { return side == 0 ? idx : a + idx; };

    std::vector<char> done(a + c, 0);
    auto connect = [&](int side, int idx, bool in_f_start, int local_start) {
        int e = ext_encode(side, idx);
        if (done[e]) return;
        auto [oside, oidx, turn_sum] = walk(in_f_start, local_start);
        int o = ext_encode(oside, oidx);
        out.partner[e] = o;
        out.partner[o] = e;
        out.turn[e] = out.turn[o] = turn_sum;
        done[e] = done[o] = 1;
    };

    for (int i = 0; i < a; ++i) connect(0, i, true, i);
    for (int j = 0; j < c; ++j) connect(1, j, false, static_cast<int>(g.dsize()) + j);

    // Anything left on the interface closes up into loops.
    for (int j = 0; j < b; ++j) {
        if (seen_iface[j]) continue;
        int turn_sum = 0;
        int cur = j;
        do {
            seen_iface[cur] = 1;
            // f strand from interface point cur...
            turn_sum += f.turn[a + cur];
            int p = f.partner[a + cur] - a;  // stays on the interface
            seen_iface[p] = 1;
            // ...then the g strand onward.
            turn_sum += g.turn[p];
            cur = g.partner[p];
        } while (cur != j);
        out.loops.push_back(turn_sum);
    }
    return out;
}

inline Fragment trace(const Term& t) {
    if (const auto* n = t.as<IdNode>()) return frag_id(n->word);
    if (const auto* n = t.as<CupNode>()) return frag_cup(n->orient);
    if (const auto* n = t.as<CapNode>()) return frag_cap(n->orient);
    if (const auto* n = t.as<BraidNode>()) return frag_braid(*n);
    if (const auto* n = t.as<ComposeNode>())
        return frag_compose(trace(Term(n->first)), trace(Term(n->second)));
    const auto* n = t.as<TensorNode>();
    return frag_tensor(trace(Term(n->left)), trace(Term(n->right)));
}

// Strand flow enters the diagram at domain x points and codomain x* points.
inline bool is_inflow(const BoundaryPoint& p, const ObjectWord& dom, const ObjectWord& cod) {
    Letter l = p.side == 0 ? dom[p.index] : cod[p.index];
    return p.side == 0 ? (l == Letter::X) : (l == Letter::XStar);
}

// Linear position along the rectangle boundary, domain left-to-right then
// codomain right-to-left; two chords cross iff their positions interleave.
inline std::size_t boundary_pos(const BoundaryPoint& p, std::size_t dsize, std::size_t csize) {
    return p.side == 0 ? p.index : dsize + (csize - 1 - p.index);
}

inline bool chords_cross(const StrandPair& s, const StrandPair& t, std::size_t dsize,
                         std::size_t csize) {
    std::size_t a1 = boundary_pos(s.a, dsize, csize), a2 = boundary_pos(s.b, dsize, csize);
    std::size_t b1 = boundary_pos(t.a, dsize, csize), b2 = boundary_pos(t.b, dsize, csize);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

}  // namespace detail

// Canonical form of a well-typed term at k in {1,3}.  k = 0 and k = 2 have
// no canonical form here: k = 0 objects compare as words, k = 2 equality is
// only semi-decided (see equal()).
inline CanonicalForm canonical_form(const Term& t, Level lv,
                                    const CanonicalOptions& opts = {}) {
    if (lv.k != 1 && lv.k != 3)
        throw canonical_error(
            lv.k == 0 ? "k=0 has no diagram calculus: decide by word equality"
                      : "k=2 has no canonical form: decide by bounded rewriting and "
                        "evaluation invariants");
    typecheck(t, lv);
    detail::Fragment f = detail::trace(t);

    CanonicalForm cf;
    cf.k = lv.k;
    cf.dom = f.dom;
    cf.cod = f.cod;

    std::size_t a = f.dsize();
    for (std::size_t e = 0; e < f.partner.size(); ++e) {
        std::size_t o = static_cast<std::size_t>(f.partner[e]);
        if (o < e) continue;
        BoundaryPoint p1{e < a ? 0 : 1, e < a ? e : e - a};
        BoundaryPoint p2{o < a ? 0 : 1, o < a ? o : o - a};
        if (p2 < p1) std::swap(p1, p2);
        bool fwd = detail::is_inflow(p1, f.dom, f.cod);
        cf.matching.push_back(StrandPair{p1, p2, fwd});
    }
    std::sort(cf.matching.begin(), cf.matching.end());

    if (lv.k == 1) {
        // Planar sanity: no braid constructors exist at this level, so a
        // crossing matching would mean the tracer itself is broken.
        for (std::size_t i = 0; i < cf.matching.size(); ++i)
            for (std::size_t j = i + 1; j < cf.matching.size(); ++j)
                if (detail::chords_cross(cf.matching[i], cf.matching[j], a, f.csize()))
                    throw canonical_error("internal: non-planar matching at k=1");
    }

    bool merge = lv.k >= 3 && opts.merge_loops_at_k3;
    cf.loops_merged = merge;
    for (int turn : f.loops) {
        if (merge) {
            ++cf.any;
            continue;
        }
        // An embedded planar loop turns through exactly one full revolution.
        if (turn == -2)
            ++cf.cw;
        else if (turn == 2)
            ++cf.ccw;
        else
            throw canonical_error("internal: planar loop with winding " + std::to_string(turn));
    }
    return cf;
}

// ---------------------------------------------------------------------------
// The n = 0 column: words in the free monoid with involution and its
// abelianized quotients.

struct C0Word {
    int k = 1;
    ObjectWord word;            // for k <= 1
    std::size_t n = 0, m = 0;   // for k >= 2: exponents of x and x*

    bool operator==(const C0Word& o) const {
        return k == o.k && word == o.word && n == o.n && m == o.m;
    }
    bool operator!=(const C0Word& o) const { return !(*this == o); }
};

inline C0Word normalize_c0(const ObjectWord& w, Level lv) {
    C0Word out;
    out.k = lv.k;
    if (lv.k == 0) {
        if (w.size() > 1)
            throw level_error("k=0 carries no product: words must have length <= 1");
        out.word = w;
        return out;
    }
    if (lv.k == 1) {
        out.word = w;
        return out;
    }
    for (Letter l : w)
        (l == Letter::X ? out.n : out.m)++;
    return out;
}

// Text form "x x* x**..." -> letters with stars reduced mod 2.
inline ObjectWord parse_c0_word(const std::string& text) {
    ObjectWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != 'x') throw canonical_error("expected 'x' in object word");
        ++i;
        int stars = 0;
        while (i < text.size() && text[i] == '*') {
            ++stars;
            ++i;
        }
        w.push_back(stars % 2 == 0 ? Letter::X : Letter::XStar);
    }
    return w;
}

}  // namespace cobalt
