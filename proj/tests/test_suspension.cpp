#include "cobalt/suspension.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cobalt;

TEST_CASE("free monoid words") {
    FreeWord w = {"a", "b", "a"};
    CHECK(free_monoid_normalize(w) == w);
    CHECK(free_monoid_concat({"a"}, {}) == FreeWord{"a"});
    CHECK(free_monoid_concat({}, {"a"}) == FreeWord{"a"});
    CHECK(FreeWord{"a", "b"} != FreeWord{"b", "a"});
}

TEST_CASE("abelianization is idempotent") {
    CHECK(abelianize({"a", "b", "a"}) ==
          std::map<std::string, std::size_t>{{"a", 2}, {"b", 1}});
    CHECK(abelianize({}).empty());

    // second application: feed the multiset back in as a sorted word
    std::vector<std::string> letters = {"p", "q", "r"};
    std::vector<FreeWord> words = {{}};
    for (int len = 1; len <= 5; ++len) {
        std::vector<FreeWord> next;
        for (const auto& w : words)
            if (w.size() == static_cast<std::size_t>(len - 1))
                for (const auto& l : letters) {
                    FreeWord v = w;
                    v.push_back(l);
                    next.push_back(v);
                }
        for (const auto& w : next) words.push_back(w);
    }
    for (const auto& w : words) {
        auto once = abelianize(w);
        FreeWord flat;
        for (const auto& [l, n] : once)
            for (std::size_t i = 0; i < n; ++i) flat.push_back(l);
        CHECK(abelianize(flat) == once);
    }
}

namespace {
BinOp table_of(std::vector<std::vector<std::size_t>> t) { return BinOp{std::move(t)}; }
}  // namespace

TEST_CASE("a commutative monoid against itself satisfies everything") {
    BinOp xor2 = table_of({{0, 1}, {1, 0}});
    EHVerdict v = eckmann_hilton(2, xor2, xor2, 0);
    CHECK(v.status == EHVerdict::ok);
    CHECK(v.ops_equal);
    CHECK(v.commutative);
}

TEST_CASE("a non-shared unit is a precondition failure, not a counterexample") {
    BinOp xor2 = table_of({{0, 1}, {1, 0}});
    BinOp and2 = table_of({{0, 0}, {0, 1}});  // unit is 1, not 0
    EHVerdict v = eckmann_hilton(2, xor2, and2, 0);
    CHECK(v.status == EHVerdict::precondition_failed);
}

TEST_CASE("noncommutative operations fail interchange with a witness") {
    // left-zero with a unit adjoined on three elements
    BinOp lz = table_of({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
    EHVerdict v = eckmann_hilton(3, lz, lz, 0);
    CHECK(v.status == EHVerdict::interchange_failed);
    CHECK(v.detail.find("quadruple") != std::string::npos);
}

TEST_CASE("exhaustive two-element scan: interchange forces agreement") {
    // all 16 x 16 pairs of binary operations; whenever some element is a
    // two-sided unit for both and interchange holds, the operations must
    // coincide and commute
    int checked = 0;
    for (int code1 = 0; code1 < 16; ++code1)
        for (int code2 = 0; code2 < 16; ++code2) {
            auto decode = [](int code) {
                BinOp op;
                op.table = {{static_cast<std::size_t>(code & 1),
                             static_cast<std::size_t>((code >> 1) & 1)},
                            {static_cast<std::size_t>((code >> 2) & 1),
                             static_cast<std::size_t>((code >> 3) & 1)}};
                return op;
            };
            BinOp op1 = decode(code1), op2 = decode(code2);
            for (std::size_t u = 0; u < 2; ++u) {
                if (!op1.is_two_sided_unit(u) || !op2.is_two_sided_unit(u)) continue;
                EHVerdict v = eckmann_hilton(2, op1, op2, u);
                if (v.status == EHVerdict::ok) {
                    ++checked;
                    CHECK(v.ops_equal);
                    CHECK(v.commutative);
                }
            }
        }
    CHECK(checked > 0);
}
