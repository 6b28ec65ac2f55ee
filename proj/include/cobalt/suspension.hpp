#pragma once

#include "cobalt/finite.hpp"

#include <map>
#include <string>
#include <vector>

// The degenerate suspension ladder for sets, and the Eckmann-Hilton
// argument as an executable checker.

namespace cobalt {

// Free monoid on a set of labels: words under concatenation.  Already in
// normal form; the unit is the empty word.
using FreeWord = std::vector<std::string>;

inline FreeWord free_monoid_normalize(FreeWord w) { return w; }

inline FreeWord free_monoid_concat(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Abelianization: the multiset of letters.  Idempotent, which is the whole
// point: the ladder stops moving after this step.
inline std::map<std::string, std::size_t> abelianize(const FreeWord& w) {
    std::map<std::string, std::size_t> out;
    for (const auto& l : w) ++out[l];
    return out;
}

// ---------------------------------------------------------------------------
// Eckmann-Hilton: two unital operations satisfying the interchange law
// coincide and are commutative.

struct BinOp {
    std::vector<std::vector<std::size_t>> table;

    std::size_t size() const { return table.size(); }
    std::size_t apply(std::size_t a, std::size_t b) const { return table[a][b]; }

    void validate(std::size_t n) const {
        if (table.size() != n) throw table_error("operation table has wrong height");
        for (const auto& row : table) {
            if (row.size() != n) throw table_error("operation table has wrong width");
            for (std::size_t v : row)
                if (v >= n) throw table_error("operation table entry out of range");
        }
    }

    bool is_two_sided_unit(std::size_t u) const {
        for (std::size_t a = 0; a < size(); ++a)
            if (apply(u, a) != a || apply(a, u) != a) return false;
        return true;
    }
};

struct EHVerdict {
    enum Status { precondition_failed, interchange_failed, ok } status;
    std::string detail;  // which precondition, or the witness quadruple
    bool ops_equal = false;
    bool commutative = false;
};

// Hypotheses: shared_unit is a two-sided unit for both operations (a failed
// unit is a precondition error, not a counterexample) and the interchange
//   (a .1 b) .2 (c .1 d) = (a .2 c) .1 (b .2 d)
// holds on all quadruples.  Conclusion, verified rather than trusted: the
// operations coincide and are commutative.
inline EHVerdict eckmann_hilton(std::size_t n, const BinOp& op1, const BinOp& op2,
                                std::size_t shared_unit) {
    op1.validate(n);
    op2.validate(n);
    if (shared_unit >= n)
        return {EHVerdict::precondition_failed, "unit index out of range", false, false};
    if (!op1.is_two_sided_unit(shared_unit))
        return {EHVerdict::precondition_failed, "unit is not two-sided for op1", false, false};
    if (!op2.is_two_sided_unit(shared_unit))
        return {EHVerdict::precondition_failed, "unit is not two-sided for op2", false, false};

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (op2.apply(op1.apply(a, b), op1.apply(c, d)) !=
                        op1.apply(op2.apply(a, c), op2.apply(b, d)))
                        return {EHVerdict::interchange_failed,
                                "quadruple (" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + "," + std::to_string(d) + ")",
                                false, false};

    EHVerdict v{EHVerdict::ok, "", true, true};
    for (std::size_t a = 0; a < n && v.ops_equal; ++a)
        for (std::size_t b = 0; b < n && v.ops_equal; ++b)
            v.ops_equal = op1.apply(a, b) == op2.apply(a, b);
    for (std::size_t a = 0; a < n && v.commutative; ++a)
        for (std::size_t b = 0; b < n && v.commutative; ++b)
            v.commutative = op1.apply(a, b) == op1.apply(b, a);
    if (!v.ops_equal || !v.commutative)
        throw table_error("internal: interchange held but the argument's conclusion failed");
    return v;
}

}  // namespace cobalt
