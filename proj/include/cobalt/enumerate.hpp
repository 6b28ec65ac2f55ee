#pragma once

#include "cobalt/term.hpp"

#include <map>
#include <vector>

// Exhaustive term universes for the soundness/completeness sweeps: every
// well-typed term buildable from a leaf pool within a constructor budget.
// Each constructor node counts one, so sizes are odd.

namespace cobalt {

struct EnumeratedTerm {
    Term term;
    ObjectWord dom, cod;
};

struct UniverseSpec {
    int k = 1;
    std::size_t max_size = 5;
    std::size_t max_id_len = 2;  // identity leaves carry words up to this length
};

namespace enum_detail {
inline void gen_words(std::size_t max_len, ObjectWord& cur, std::vector<ObjectWord>& out) {
    out.push_back(cur);
    if (cur.size() == max_len) return;
    for (Letter l : {Letter::X, Letter::XStar}) {
        cur.push_back(l);
        gen_words(max_len, cur, out);
        cur.pop_back();
    }
}
}  // namespace enum_detail

inline std::vector<EnumeratedTerm> enumerate_terms(const UniverseSpec& spec) {
    std::vector<std::vector<EnumeratedTerm>> by_size(spec.max_size + 1);

    // Leaves.
    std::vector<ObjectWord> words;
    {
        ObjectWord w;
        enum_detail::gen_words(spec.max_id_len, w, words);
    }
    auto add_leaf = [&](Term t) {
        auto dc = dom_cod(t);
        by_size[1].push_back(EnumeratedTerm{std::move(t), dc.first, dc.second});
    };
    for (const auto& w : words) {
        if (spec.k == 0 && w.size() != 1) continue;
        add_leaf(Term::id(w));
    }
    if (spec.k >= 1) {
        for (CupOrient o : {CupOrient::plain, CupOrient::starred}) {
            add_leaf(Term::cup(o));
            add_leaf(Term::cap(o));
        }
    }
    if (spec.k >= 2) {
        for (Letter u : {Letter::X, Letter::XStar})
            for (Letter v : {Letter::X, Letter::XStar})
                for (BraidSign s : {BraidSign::pos, BraidSign::neg})
                    add_leaf(Term::braid(u, v, s));
    }

    for (std::size_t size = 3; size <= spec.max_size; size += 2) {
        for (std::size_t ls = 1; ls < size - 1; ls += 2) {
            std::size_t rs = size - 1 - ls;
            // Index the right-hand candidates by domain for composition.
            std::map<ObjectWord, std::vector<const EnumeratedTerm*>> by_dom;
            for (const auto& r : by_size[rs]) by_dom[r.dom].push_back(&r);
            for (const auto& l : by_size[ls]) {
                auto it = by_dom.find(l.cod);
                if (it != by_dom.end())
                    for (const auto* r : it->second)
                        by_size[size].push_back(EnumeratedTerm{
                            Term::compose(l.term, r->term), l.dom, r->cod});
                if (spec.k >= 1)
                    for (const auto& r : by_size[rs])
                        by_size[size].push_back(
                            EnumeratedTerm{Term::tensor(l.term, r.term), concat(l.dom, r.dom),
                                           concat(l.cod, r.cod)});
            }
        }
    }

    std::vector<EnumeratedTerm> all;
    for (auto& bucket : by_size)
        for (auto& t : bucket) all.push_back(std::move(t));
    return all;
}

}  // namespace cobalt
