#include "cobalt/finite.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

using namespace cobalt;

namespace {

FiniteMonoid cyclic(std::size_t n) {
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back("g" + std::to_string(i));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return FiniteMonoid::make(std::move(elems), 0, std::move(table));
}

// Symmetric group on three letters, elements as permutations of 012.
FiniteMonoid s3() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    auto find = [&](const std::array<int, 3>& p) -> std::size_t {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw table_error("not a permutation");
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int e = 0; e < 3; ++e) comp[e] = perms[j][perms[i][e]];
            table[i][j] = find(comp);
        }
    return FiniteMonoid::make(std::move(names), 0, std::move(table));
}

// The monoid of all maps 2 -> 2 under composition.
FiniteMonoid transformation2() {
    // maps encoded by images of 0 and 1
    std::vector<std::array<int, 2>> maps = {{0, 1}, {1, 0}, {0, 0}, {1, 1}};
    std::vector<std::string> names = {"id", "swap", "c0", "c1"};
    auto find = [&](const std::array<int, 2>& f) -> std::size_t {
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i] == f) return i;
        throw table_error("unreachable");
    };
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::array<int, 2> comp{};
            for (int e = 0; e < 2; ++e) comp[e] = maps[j][maps[i][e]];
            table[i][j] = find(comp);
        }
    return FiniteMonoid::make(std::move(names), 0, std::move(table));
}

FiniteMonoid relabel(const FiniteMonoid& m, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) perm[i] = i;
    for (std::size_t i = m.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    std::vector<std::string> elems(m.size());
    std::vector<std::vector<std::size_t>> table(m.size(), std::vector<std::size_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) elems[perm[i]] = m.elems[i];
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            table[perm[i]][perm[j]] = perm[m.mul(i, j)];
    return FiniteMonoid::make(std::move(elems), perm[m.unit], std::move(table));
}

}  // namespace

TEST_CASE("monoid validation catches bad tables") {
    // a*e = e violates the unit law
    CHECK_THROWS_AS(FiniteMonoid::make({"e", "a"}, 0, {{0, 1}, {0, 1}}), table_error);
    CHECK_NOTHROW(cyclic(4));
    CHECK_THROWS_AS(FiniteMonoid::make({"e"}, 1, {{0}}), table_error);
}

TEST_CASE("one-object categories carry monoids") {
    FiniteCategory c = FiniteCategory::from_monoid(cyclic(3));
    CHECK(c.objects.size() == 1);
    CHECK(c.morphisms.size() == 3);
}

TEST_CASE("category validation") {
    // two objects, one arrow between them
    std::vector<FiniteCategory::Mor> mors = {{"1a", 0, 0}, {"1b", 1, 1}, {"f", 0, 1}};
    std::vector<std::vector<std::size_t>> table = {
        {0, npos, 2}, {npos, 1, npos}, {npos, 2, npos}};
    CHECK_NOTHROW(FiniteCategory::make({"a", "b"}, mors, table, {0, 1}));

    // break the identity law
    auto bad = table;
    bad[0][2] = 0;
    CHECK_THROWS_AS(FiniteCategory::make({"a", "b"}, mors, bad, {0, 1}), table_error);
}

TEST_CASE("product with the point is the identity construction") {
    FiniteCategory point = FiniteCategory::make({"*"}, {{"1", 0, 0}}, {{0}}, {0});
    FiniteCategory c = FiniteCategory::from_monoid(s3());
    FiniteCategory prod = product_category(c, point);
    CHECK(prod.objects.size() == c.objects.size());
    CHECK(prod.morphisms.size() == c.morphisms.size());
}

TEST_CASE("product counts multiply and the squares commute") {
    std::vector<FiniteCategory::Mor> mors = {{"1a", 0, 0}, {"1b", 1, 1}, {"f", 0, 1}};
    std::vector<std::vector<std::size_t>> table = {
        {0, npos, 2}, {npos, 1, npos}, {npos, 2, npos}};
    FiniteCategory arrow = FiniteCategory::make({"a", "b"}, mors, table, {0, 1});
    FiniteCategory c = FiniteCategory::from_monoid(cyclic(2));
    FiniteCategory prod = product_category(arrow, c);
    CHECK(prod.objects.size() == arrow.objects.size() * c.objects.size());
    CHECK(prod.morphisms.size() == arrow.morphisms.size() * c.morphisms.size());

    // (f x id);(id x g) = (id x g);(f x id) for every f in C, g in D
    for (std::size_t f = 0; f < arrow.morphisms.size(); ++f)
        for (std::size_t g = 0; g < c.morphisms.size(); ++g) {
            auto midx = [&](std::size_t i, std::size_t j) {
                return i * c.morphisms.size() + j;
            };
            std::size_t f_idy = midx(f, c.identities[c.morphisms[g].dom]);
            std::size_t idx_g = midx(arrow.identities[arrow.morphisms[f].cod], g);
            std::size_t idy_g = midx(arrow.identities[arrow.morphisms[f].dom], g);
            std::size_t f_idy2 = midx(f, c.identities[c.morphisms[g].cod]);
            CHECK(prod.compose(f_idy, idx_g) == prod.compose(idy_g, f_idy2));
        }
}

TEST_CASE("exchange holds for commutative monoids packaged as 2-categories") {
    Finite2Category tc = Finite2Category::from_monoid_2cell(cyclic(4));
    CHECK(check_exchange(tc).valid());

    // a single identity 2-cell
    Finite2Category one = Finite2Category::from_monoid_2cell(cyclic(1));
    CHECK(check_exchange(one).valid());
}

TEST_CASE("exchange fails for a noncommutative packaging, witness included") {
    // left-zero semigroup with adjoined unit: a*b = a for a,b != e
    FiniteMonoid lz = FiniteMonoid::make({"e", "a", "b"}, 0,
                                         {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
    CHECK_FALSE(lz.commutative());
    Finite2Category tc = Finite2Category::from_monoid_2cell(lz);
    Report rep = check_exchange(tc);
    CHECK_FALSE(rep.valid());
    CHECK(rep.items[0].detail.find("witness") != std::string::npos);
}

TEST_CASE("perturbing one horizontal entry breaks exchange") {
    Finite2Category tc = Finite2Category::from_monoid_2cell(cyclic(3));
    tc.hcompose[1][1] = 0;  // g1 (x) g1 should be g2
    Report rep = check_exchange(tc);
    CHECK_FALSE(rep.valid());
}

TEST_CASE("naturality: identity components always pass, center components for monoids") {
    FiniteCategory c = FiniteCategory::from_monoid(s3());
    FunctorTable idf;
    idf.on_objects = {0};
    idf.on_morphisms.resize(c.morphisms.size());
    for (std::size_t i = 0; i < c.morphisms.size(); ++i) idf.on_morphisms[i] = i;

    CHECK(check_natural(c, c, idf, idf, {c.identities[0]}).valid());

    // valid components of Id => Id over a one-object category are exactly
    // the central elements
    FiniteMonoid m = s3();
    for (std::size_t a = 0; a < m.size(); ++a) {
        bool central = true;
        for (std::size_t b = 0; b < m.size(); ++b)
            central = central && m.mul(a, b) == m.mul(b, a);
        CHECK(check_natural(c, c, idf, idf, {a}).valid() == central);
    }

    // a perturbed component names the violating morphism
    Report rep = check_natural(c, c, idf, idf, {1});
    CHECK_FALSE(rep.valid());
    CHECK_FALSE(rep.items.back().detail.empty());
}

TEST_CASE("center of a set is the endofunction monoid") {
    FiniteMonoid z = center_of_set({"p", "q"});
    CHECK(z.size() == 4);
    CHECK_FALSE(z.commutative());  // the full transformation monoid is not
}

TEST_CASE("center of S3 is trivial") {
    FiniteMonoid z = center_of_monoid(s3());
    CHECK(z.size() == 1);
    CHECK(z.elems[0] == "012");
}

TEST_CASE("center of a commutative monoid is everything") {
    CHECK(center_of_monoid(cyclic(5)).size() == 5);
}

TEST_CASE("categorical center agrees with the monoid center") {
    std::mt19937_64 rng(41);
    std::vector<FiniteMonoid> pool = {cyclic(2), cyclic(3), cyclic(4), cyclic(5), s3(),
                                      transformation2()};
    for (int trial = 0; trial < 10; ++trial) {
        FiniteMonoid m = relabel(pool[trial % pool.size()], rng);
        FiniteMonoid zm = center_of_monoid(m);
        FiniteMonoid zc = center_of_category(FiniteCategory::from_monoid(m));
        REQUIRE(zm.size() == zc.size());
        // same elements: the categorical one wraps names in braces
        for (std::size_t i = 0; i < zm.size(); ++i)
            CHECK(zc.elems[i] == "{" + zm.elems[i] + "}");
        for (std::size_t i = 0; i < zm.size(); ++i)
            for (std::size_t j = 0; j < zm.size(); ++j)
                CHECK(zm.mul(i, j) == zc.mul(i, j));
        CHECK(zm.commutative());
    }
}

TEST_CASE("center of a multi-object category") {
    // the arrow category: families are pairs (u, v) with u;f = f;v, so only
    // the identity family is natural
    std::vector<FiniteCategory::Mor> mors = {{"1a", 0, 0}, {"1b", 1, 1}, {"f", 0, 1}};
    std::vector<std::vector<std::size_t>> table = {
        {0, npos, 2}, {npos, 1, npos}, {npos, 2, npos}};
    FiniteCategory arrow = FiniteCategory::make({"a", "b"}, mors, table, {0, 1});
    FiniteMonoid z = center_of_category(arrow);
    CHECK(z.size() == 1);
}
