#pragma once

#include "cobalt/report.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite monoids, categories and 2-categories given by explicit tables, with
// the constructions and checkers built on them: products, exchange,
// naturality, generalized centers.  Everything is validated on construction;
// composite indices use npos for "not composable".

namespace cobalt {

struct table_error : std::runtime_error {
    explicit table_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// ---------------------------------------------------------------------------

struct FiniteMonoid {
    std::vector<std::string> elems;
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = i * j

    std::size_t size() const { return elems.size(); }
    std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == name) return i;
        return std::nullopt;
    }

    static FiniteMonoid make(std::vector<std::string> elems, std::size_t unit,
                             std::vector<std::vector<std::size_t>> table) {
        FiniteMonoid m{std::move(elems), unit, std::move(table)};
        m.validate();
        return m;
    }

    void validate() const {
        const std::size_t n = elems.size();
        if (unit >= n) throw table_error("monoid unit out of range");
        if (table.size() != n) throw table_error("monoid table has wrong height");
        for (const auto& row : table) {
            if (row.size() != n) throw table_error("monoid table has wrong width");
            for (std::size_t v : row)
                if (v >= n) throw table_error("monoid table entry out of range");
        }
        for (std::size_t i = 0; i < n; ++i)
            if (mul(unit, i) != i || mul(i, unit) != i)
                throw table_error("monoid unit law fails at " + elems[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (mul(mul(i, j), k) != mul(i, mul(j, k)))
                        throw table_error("monoid associativity fails at (" + elems[i] + "," +
                                          elems[j] + "," + elems[k] + ")");
    }

    bool commutative() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (mul(i, j) != mul(j, i)) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------

struct FiniteCategory {
    struct Mor {
        std::string id;
        std::size_t dom, cod;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    // compose[f][g] = index of "f then g"; npos when cod(f) != dom(g).
    std::vector<std::vector<std::size_t>> compose_table;
    std::vector<std::size_t> identities;  // per object

    std::size_t compose(std::size_t f, std::size_t g) const { return compose_table[f][g]; }

    std::optional<std::size_t> mor_index(const std::string& id) const {
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            if (morphisms[i].id == id) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> obj_index(const std::string& id) const {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == id) return i;
        return std::nullopt;
    }

    static FiniteCategory make(std::vector<std::string> objects, std::vector<Mor> morphisms,
                               std::vector<std::vector<std::size_t>> compose_table,
                               std::vector<std::size_t> identities) {
        FiniteCategory c{std::move(objects), std::move(morphisms), std::move(compose_table),
                         std::move(identities)};
        c.validate();
        return c;
    }

    void validate() const {
        const std::size_t m = morphisms.size();
        if (identities.size() != objects.size())
            throw table_error("one identity per object required");
        if (compose_table.size() != m) throw table_error("compose table has wrong height");
        for (const auto& mor : morphisms)
            if (mor.dom >= objects.size() || mor.cod >= objects.size())
                throw table_error("morphism " + mor.id + " has out-of-range endpoints");
        for (std::size_t x = 0; x < objects.size(); ++x) {
            std::size_t e = identities[x];
            if (e >= m || morphisms[e].dom != x || morphisms[e].cod != x)
                throw table_error("identity of " + objects[x] + " is not an endomorphism");
        }
        for (std::size_t f = 0; f < m; ++f) {
            if (compose_table[f].size() != m) throw table_error("compose table has wrong width");
            for (std::size_t g = 0; g < m; ++g) {
                bool composable = morphisms[f].cod == morphisms[g].dom;
                std::size_t fg = compose_table[f][g];
                if (!composable) {
                    if (fg != npos)
                        throw table_error("composite defined for non-composable pair " +
                                          morphisms[f].id + ";" + morphisms[g].id);
                    continue;
                }
                if (fg >= m)
                    throw table_error("composite missing for " + morphisms[f].id + ";" +
                                      morphisms[g].id);
                if (morphisms[fg].dom != morphisms[f].dom || morphisms[fg].cod != morphisms[g].cod)
                    throw table_error("composite has wrong endpoints: " + morphisms[f].id + ";" +
                                      morphisms[g].id);
            }
        }
        for (std::size_t f = 0; f < m; ++f) {
            if (compose(identities[morphisms[f].dom], f) != f ||
                compose(f, identities[morphisms[f].cod]) != f)
                throw table_error("identity law fails at " + morphisms[f].id);
        }
        for (std::size_t f = 0; f < m; ++f)
            for (std::size_t g = 0; g < m; ++g) {
                if (compose(f, g) == npos) continue;
                for (std::size_t h = 0; h < m; ++h) {
                    if (compose(g, h) == npos) continue;
                    if (compose(compose(f, g), h) != compose(f, compose(g, h)))
                        throw table_error("associativity fails at (" + morphisms[f].id + "," +
                                          morphisms[g].id + "," + morphisms[h].id + ")");
                }
            }
    }

    // One-object category carrying a monoid.
    static FiniteCategory from_monoid(const FiniteMonoid& m, const std::string& obj = "*") {
        std::vector<Mor> mors;
        for (const auto& e : m.elems) mors.push_back(Mor{e, 0, 0});
        std::vector<std::vector<std::size_t>> table(m.size(),
                                                    std::vector<std::size_t>(m.size(), npos));
        // Monoid products are written left-to-right; category composition
        // here is diagrammatic, so f;g realizes the product f*g.
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) table[i][j] = m.mul(i, j);
        return make({obj}, std::move(mors), std::move(table), {m.unit});
    }
};

// Cartesian product: objects and morphisms are pairs, everything
// componentwise.  The generating squares commute by construction, which the
// exchange-style tests verify on the resulting tables.
inline FiniteCategory product_category(const FiniteCategory& c, const FiniteCategory& d) {
    std::vector<std::string> objects;
    for (const auto& x : c.objects)
        for (const auto& y : d.objects) objects.push_back("(" + x + "," + y + ")");
    std::vector<FiniteCategory::Mor> mors;
    auto oidx = [&](std::size_t i, std::size_t j) { return i * d.objects.size() + j; };
    for (const auto& f : c.morphisms)
        for (const auto& g : d.morphisms)
            mors.push_back(FiniteCategory::Mor{"(" + f.id + "," + g.id + ")",
                                               oidx(f.dom, g.dom), oidx(f.cod, g.cod)});
    const std::size_t M = mors.size();
    auto midx = [&](std::size_t i, std::size_t j) { return i * d.morphisms.size() + j; };
    std::vector<std::vector<std::size_t>> table(M, std::vector<std::size_t>(M, npos));
    for (std::size_t f1 = 0; f1 < c.morphisms.size(); ++f1)
        for (std::size_t g1 = 0; g1 < d.morphisms.size(); ++g1)
            for (std::size_t f2 = 0; f2 < c.morphisms.size(); ++f2)
                for (std::size_t g2 = 0; g2 < d.morphisms.size(); ++g2) {
                    std::size_t cf = c.compose(f1, f2), dg = d.compose(g1, g2);
                    if (cf == npos || dg == npos) continue;
                    table[midx(f1, g1)][midx(f2, g2)] = midx(cf, dg);
                }
    std::vector<std::size_t> ids;
    for (std::size_t x = 0; x < c.objects.size(); ++x)
        for (std::size_t y = 0; y < d.objects.size(); ++y)
            ids.push_back(midx(c.identities[x], d.identities[y]));
    return FiniteCategory::make(std::move(objects), std::move(mors), std::move(table),
                                std::move(ids));
}

// ---------------------------------------------------------------------------

struct Finite2Category {
    struct Mor {
        std::string id;
        std::size_t dom, cod;  // object indices
    };
    struct TwoMor {
        std::string id;
        std::size_t src, tgt;  // 1-morphism indices with equal endpoints
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<TwoMor> two_morphisms;
    std::vector<std::size_t> identities;    // identity 1-morphism per object
    std::vector<std::size_t> identities2;   // identity 2-morphism per 1-morphism
    std::vector<std::vector<std::size_t>> vcompose;  // [a][b] = "a then b", npos if tgt(a)!=src(b)
    std::vector<std::vector<std::size_t>> hcompose;  // [a][b] across composable 1-morphisms

    std::size_t vcomp(std::size_t a, std::size_t b) const { return vcompose[a][b]; }
    std::size_t hcomp(std::size_t a, std::size_t b) const { return hcompose[a][b]; }

    static Finite2Category make(Finite2Category tc) {
        tc.validate();
        return tc;
    }

    void validate() const {
        const std::size_t m = morphisms.size(), t = two_morphisms.size();
        if (identities.size() != objects.size()) throw table_error("missing object identities");
        if (identities2.size() != m) throw table_error("missing 2-identities");
        for (const auto& a : two_morphisms) {
            if (a.src >= m || a.tgt >= m) throw table_error("2-morphism endpoints out of range");
            const auto& f = morphisms[a.src];
            const auto& g = morphisms[a.tgt];
            if (f.dom != g.dom || f.cod != g.cod)
                throw table_error("2-morphism " + a.id + " joins non-parallel morphisms");
        }
        for (std::size_t f = 0; f < m; ++f) {
            std::size_t e = identities2[f];
            if (e >= t || two_morphisms[e].src != f || two_morphisms[e].tgt != f)
                throw table_error("2-identity of " + morphisms[f].id + " malformed");
        }
        if (vcompose.size() != t || hcompose.size() != t)
            throw table_error("2-composition tables have wrong height");
        for (std::size_t a = 0; a < t; ++a) {
            if (vcompose[a].size() != t || hcompose[a].size() != t)
                throw table_error("2-composition tables have wrong width");
            for (std::size_t b = 0; b < t; ++b) {
                bool vc = two_morphisms[a].tgt == two_morphisms[b].src;
                std::size_t ab = vcompose[a][b];
                if (vc != (ab != npos))
                    throw table_error("vertical composability mismatch");
                if (vc && (two_morphisms[ab].src != two_morphisms[a].src ||
                           two_morphisms[ab].tgt != two_morphisms[b].tgt))
                    throw table_error("vertical composite has wrong endpoints");
                bool hc = morphisms[two_morphisms[a].src].cod ==
                          morphisms[two_morphisms[b].src].dom;
                std::size_t hab = hcompose[a][b];
                if (hc != (hab != npos)) throw table_error("horizontal composability mismatch");
            }
        }
        // Vertical identity and associativity: each hom(x,y) is a category.
        for (std::size_t a = 0; a < t; ++a) {
            if (vcomp(identities2[two_morphisms[a].src], a) != a ||
                vcomp(a, identities2[two_morphisms[a].tgt]) != a)
                throw table_error("vertical identity law fails at " + two_morphisms[a].id);
            for (std::size_t b = 0; b < t; ++b) {
                if (vcomp(a, b) == npos) continue;
                for (std::size_t c = 0; c < t; ++c) {
                    if (vcomp(b, c) == npos) continue;
                    if (vcomp(vcomp(a, b), c) != vcomp(a, vcomp(b, c)))
                        throw table_error("vertical associativity fails");
                }
            }
        }
        // Horizontal composition respects 2-identities.
        for (std::size_t f = 0; f < m; ++f)
            for (std::size_t g = 0; g < m; ++g) {
                if (morphisms[f].cod != morphisms[g].dom) continue;
                std::size_t h = hcomp(identities2[f], identities2[g]);
                const auto& hc = two_morphisms[h];
                const auto& sf = morphisms[hc.src];
                if (sf.dom != morphisms[f].dom || sf.cod != morphisms[g].cod)
                    throw table_error("horizontal identity composite has wrong endpoints");
                if (hc.src != hc.tgt || identities2[hc.src] != h)
                    throw table_error("horizontal composite of identities is not an identity");
            }
    }

    // A commutative (or not) monoid packaged with one object and one
    // 1-morphism; its elements become the 2-morphisms and both compositions
    // are the monoid product.
    static Finite2Category from_monoid_2cell(const FiniteMonoid& mon) {
        Finite2Category tc;
        tc.objects = {"*"};
        tc.morphisms = {{"1", 0, 0}};
        for (const auto& e : mon.elems) tc.two_morphisms.push_back({e, 0, 0});
        tc.identities = {0};
        tc.identities2 = {mon.unit};
        std::size_t n = mon.size();
        tc.vcompose.assign(n, std::vector<std::size_t>(n, npos));
        tc.hcompose.assign(n, std::vector<std::size_t>(n, npos));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                tc.vcompose[i][j] = tc.hcompose[i][j] = mon.mul(i, j);
        return make(std::move(tc));
    }
};

// The exchange identity over every quadruple where both sides are defined:
// (a ; a') (x) (b ; b') = (a (x) b) ; (a' (x) b'), vertical composition
// written diagrammatically.
inline Report check_exchange(const Finite2Category& tc) {
    Report rep;
    const std::size_t t = tc.two_morphisms.size();
    for (std::size_t a = 0; a < t; ++a)
        for (std::size_t a2 = 0; a2 < t; ++a2) {
            if (tc.vcomp(a, a2) == npos) continue;
            for (std::size_t b = 0; b < t; ++b) {
                if (tc.hcomp(a, b) == npos) continue;
                for (std::size_t b2 = 0; b2 < t; ++b2) {
                    if (tc.vcomp(b, b2) == npos) continue;
                    std::size_t lhs = tc.hcomp(tc.vcomp(a, a2), tc.vcomp(b, b2));
                    std::size_t rhs = tc.vcomp(tc.hcomp(a, b), tc.hcomp(a2, b2));
                    if (lhs != rhs) {
                        rep.add("exchange", false,
                                "witness (" + tc.two_morphisms[a].id + "," +
                                    tc.two_morphisms[a2].id + "," + tc.two_morphisms[b].id + "," +
                                    tc.two_morphisms[b2].id + "): " + tc.two_morphisms[lhs].id +
                                    " vs " + tc.two_morphisms[rhs].id);
                        return rep;
                    }
                }
            }
        }
    rep.add("exchange", true);
    return rep;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations between finite categories.

struct FunctorTable {
    std::vector<std::size_t> on_objects;
    std::vector<std::size_t> on_morphisms;
};

inline Report validate_functor(const FiniteCategory& c, const FiniteCategory& d,
                               const FunctorTable& F, const std::string& name = "functor") {
    Report rep;
    if (F.on_objects.size() != c.objects.size() || F.on_morphisms.size() != c.morphisms.size()) {
        rep.add(name + ".shape", false, "table sizes do not match the category");
        return rep;
    }
    for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
        const auto& mor = c.morphisms[f];
        const auto& img = d.morphisms[F.on_morphisms[f]];
        if (img.dom != F.on_objects[mor.dom] || img.cod != F.on_objects[mor.cod]) {
            rep.add(name + ".endpoints", false, "at " + mor.id);
            return rep;
        }
    }
    for (std::size_t x = 0; x < c.objects.size(); ++x)
        if (F.on_morphisms[c.identities[x]] != d.identities[F.on_objects[x]]) {
            rep.add(name + ".identities", false, "at " + c.objects[x]);
            return rep;
        }
    for (std::size_t f = 0; f < c.morphisms.size(); ++f)
        for (std::size_t g = 0; g < c.morphisms.size(); ++g) {
            if (c.compose(f, g) == npos) continue;
            if (F.on_morphisms[c.compose(f, g)] !=
                d.compose(F.on_morphisms[f], F.on_morphisms[g])) {
                rep.add(name + ".composition", false,
                        "at " + c.morphisms[f].id + ";" + c.morphisms[g].id);
                return rep;
            }
        }
    rep.add(name, true);
    return rep;
}

// Naturality squares alpha_x ; G(f) = F(f) ; alpha_y for every f : x -> y.
inline Report check_natural(const FiniteCategory& c, const FiniteCategory& d,
                            const FunctorTable& F, const FunctorTable& G,
                            const std::vector<std::size_t>& alpha) {
    Report repF = validate_functor(c, d, F, "F");
    if (!repF.valid()) return repF;
    Report repG = validate_functor(c, d, G, "G");
    if (!repG.valid()) return repG;

    Report rep;
    if (alpha.size() != c.objects.size()) {
        rep.add("alpha.shape", false, "one component per object required");
        return rep;
    }
    for (std::size_t x = 0; x < c.objects.size(); ++x) {
        const auto& comp = d.morphisms[alpha[x]];
        if (comp.dom != F.on_objects[x] || comp.cod != G.on_objects[x]) {
            rep.add("alpha.endpoints", false, "component at " + c.objects[x]);
            return rep;
        }
    }
    for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
        const auto& mor = c.morphisms[f];
        std::size_t lhs = d.compose(alpha[mor.dom], G.on_morphisms[f]);
        std::size_t rhs = d.compose(F.on_morphisms[f], alpha[mor.cod]);
        if (lhs != rhs) {
            rep.add("naturality", false, "square fails at " + mor.id);
            return rep;
        }
    }
    rep.add("naturality", true);
    return rep;
}

// ---------------------------------------------------------------------------
// Generalized centers.  Set: the full endofunction monoid.  Monoid: the
// classical center.  Category: families of endomorphisms natural against
// every morphism, a commutative monoid under componentwise composition.

inline FiniteMonoid center_of_set(const std::vector<std::string>& elems) {
    const std::size_t n = elems.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= n;
    std::vector<std::vector<std::size_t>> maps;
    std::vector<std::size_t> cur(n, 0);
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            cur[i] = c % n;
            c /= n;
        }
        maps.push_back(cur);
    }
    auto name_of = [&](const std::vector<std::size_t>& f) {
        std::string s = "[";
        for (std::size_t i = 0; i < n; ++i) {
            if (i) s += " ";
            s += elems[f[i]];
        }
        return s + "]";
    };
    std::vector<std::string> names;
    for (const auto& f : maps) names.push_back(name_of(f));
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> table(maps.size(),
                                                std::vector<std::size_t>(maps.size(), 0));
    auto find_map = [&](const std::vector<std::size_t>& f) {
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i] == f) return i;
        throw table_error("internal: endofunction not found");
    };
    {
        std::vector<std::size_t> idmap(n);
        for (std::size_t i = 0; i < n; ++i) idmap[i] = i;
        unit = find_map(idmap);
    }
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = 0; j < maps.size(); ++j) {
            std::vector<std::size_t> comp(n);  // first i, then j
            for (std::size_t e = 0; e < n; ++e) comp[e] = maps[j][maps[i][e]];
            table[i][j] = find_map(comp);
        }
    return FiniteMonoid::make(std::move(names), unit, std::move(table));
}

inline FiniteMonoid center_of_monoid(const FiniteMonoid& m) {
    std::vector<std::size_t> central;
    for (std::size_t a = 0; a < m.size(); ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < m.size() && ok; ++b) ok = m.mul(a, b) == m.mul(b, a);
        if (ok) central.push_back(a);
    }
    std::vector<std::string> names;
    for (std::size_t a : central) names.push_back(m.elems[a]);
    auto pos = [&](std::size_t a) {
        for (std::size_t i = 0; i < central.size(); ++i)
            if (central[i] == a) return i;
        throw table_error("internal: center not closed under product");
    };
    std::vector<std::vector<std::size_t>> table(central.size(),
                                                std::vector<std::size_t>(central.size(), 0));
    for (std::size_t i = 0; i < central.size(); ++i)
        for (std::size_t j = 0; j < central.size(); ++j)
            table[i][j] = pos(m.mul(central[i], central[j]));
    FiniteMonoid z = FiniteMonoid::make(std::move(names), pos(m.unit), std::move(table));
    if (!z.commutative()) throw table_error("internal: monoid center not commutative");
    return z;
}

// Families alpha_x in End(x) with alpha_x ; f = f ; alpha_y for all f.
inline FiniteMonoid center_of_category(const FiniteCategory& c) {
    std::vector<std::vector<std::size_t>> endos(c.objects.size());
    for (std::size_t f = 0; f < c.morphisms.size(); ++f)
        if (c.morphisms[f].dom == c.morphisms[f].cod) endos[c.morphisms[f].dom].push_back(f);

    std::vector<std::vector<std::size_t>> families;
    std::vector<std::size_t> cur(c.objects.size(), 0);
    auto natural = [&](const std::vector<std::size_t>& fam) {
        for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
            const auto& mor = c.morphisms[f];
            if (c.compose(fam[mor.dom], f) != c.compose(f, fam[mor.cod])) return false;
        }
        return true;
    };
    // Odometer over one endomorphism choice per object.
    while (true) {
        std::vector<std::size_t> fam(c.objects.size());
        for (std::size_t x = 0; x < c.objects.size(); ++x) {
            if (endos[x].empty()) throw table_error("object without endomorphisms");
            fam[x] = endos[x][cur[x]];
        }
        if (natural(fam)) families.push_back(fam);
        std::size_t x = 0;
        while (x < c.objects.size() && ++cur[x] == endos[x].size()) cur[x++] = 0;
        if (x == c.objects.size()) break;
    }

    auto name_of = [&](const std::vector<std::size_t>& fam) {
        std::string s = "{";
        for (std::size_t x = 0; x < fam.size(); ++x) {
            if (x) s += " ";
            s += c.morphisms[fam[x]].id;
        }
        return s + "}";
    };
    std::vector<std::string> names;
    for (const auto& fam : families) names.push_back(name_of(fam));
    auto find_family = [&](const std::vector<std::size_t>& fam) {
        for (std::size_t i = 0; i < families.size(); ++i)
            if (families[i] == fam) return i;
        throw table_error("internal: center families not closed");
    };
    std::vector<std::size_t> idfam;
    for (std::size_t x = 0; x < c.objects.size(); ++x) idfam.push_back(c.identities[x]);
    std::size_t unit = find_family(idfam);
    std::vector<std::vector<std::size_t>> table(families.size(),
                                                std::vector<std::size_t>(families.size(), 0));
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = 0; j < families.size(); ++j) {
            std::vector<std::size_t> comp(c.objects.size());
            for (std::size_t x = 0; x < c.objects.size(); ++x)
                comp[x] = c.compose(families[i][x], families[j][x]);
            table[i][j] = find_family(comp);
        }
    FiniteMonoid z = FiniteMonoid::make(std::move(names), unit, std::move(table));
    if (!z.commutative()) throw table_error("internal: categorical center not commutative");
    return z;
}

}  // namespace cobalt
