#pragma once

#include "cobalt/finite.hpp"
#include "cobalt/matrix.hpp"
#include "cobalt/report.hpp"

#include <string>
#include <vector>

// Deformations of a commutative algebra truncated at second order:
//   a * b = ab + h m1(a,b) + h^2 m2(a,b).
// star_check expands associativity of * order by order and tests the
// antisymmetrized m1 for the bracket laws.

namespace cobalt {

struct StarData {
    std::size_t dim = 1;
    std::vector<std::string> basis;  // names, for witnesses
    RigMatrix mult;                  // d x d^2, rational
    RigMatrix m1, m2;                // d x d^2

    std::string basis_name(std::size_t i) const {
        return i < basis.size() ? basis[i] : "e" + std::to_string(i);
    }
};

namespace star_detail {

inline RigMatrix mat_add(const RigMatrix& a, const RigMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw shape_error("mat_add shape");
    RigMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j).add(b.at(i, j));
    return out;
}

inline RigMatrix basis_vec(std::size_t i, std::size_t d) {
    RigMatrix v = RigMatrix::zero(d, 1, Rig::rational);
    v.at(i, 0) = RigValue::one(Rig::rational);
    return v;
}

inline RigMatrix pairwise(const RigMatrix& op, const RigMatrix& a, const RigMatrix& b) {
    return mat_mul(op, kron(a, b));
}

inline bool is_zero(const RigMatrix& m) {
    for (const auto& v : m.entries())
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace star_detail

inline Report star_check(const StarData& sd) {
    using namespace star_detail;
    const std::size_t d = sd.dim;
    if (sd.mult.rows() != d || sd.mult.cols() != d * d || sd.m1.rows() != d ||
        sd.m1.cols() != d * d || sd.m2.rows() != d || sd.m2.cols() != d * d)
        throw shape_error("star data must be d x d^2 over the rationals");
    if (sd.mult.rig() != Rig::rational)
        throw rig_error("star products are checked over the rationals");

    RigMatrix I = RigMatrix::identity(d, Rig::rational);
    RigMatrix S = swap_matrix(d, d, Rig::rational);

    // The underlying algebra must be commutative and associative before any
    // deformation question makes sense.
    if (mat_mul(sd.mult, kron(sd.mult, I)) != mat_mul(sd.mult, kron(I, sd.mult)))
        throw table_error("base algebra is not associative");
    if (mat_mul(sd.mult, S) != sd.mult) throw table_error("base algebra is not commutative");

    Report rep;

    // Order h of associativity: m1(ab, c) + m1(a,b) c = m1(a, bc) + a m1(b,c).
    {
        RigMatrix lhs = mat_add(mat_mul(sd.m1, kron(sd.mult, I)),
                                mat_mul(sd.mult, kron(sd.m1, I)));
        RigMatrix rhs = mat_add(mat_mul(sd.m1, kron(I, sd.mult)),
                                mat_mul(sd.mult, kron(I, sd.m1)));
        rep.add("order_h", lhs == rhs, lhs == rhs ? "" : "cocycle condition fails");
    }

    // Order h^2: m2(ab,c) + m1(m1(a,b),c) + m2(a,b)c
    //          = m2(a,bc) + m1(a,m1(b,c)) + a m2(b,c).
    {
        RigMatrix lhs = mat_add(
            mat_add(mat_mul(sd.m2, kron(sd.mult, I)), mat_mul(sd.m1, kron(sd.m1, I))),
            mat_mul(sd.mult, kron(sd.m2, I)));
        RigMatrix rhs = mat_add(
            mat_add(mat_mul(sd.m2, kron(I, sd.mult)), mat_mul(sd.m1, kron(I, sd.m1))),
            mat_mul(sd.mult, kron(I, sd.m2)));
        rep.add("order_h2", lhs == rhs, lhs == rhs ? "" : "second-order condition fails");
    }

    // Bracket {a,b} = m1(a,b) - m1(b,a).
    RigMatrix bracket = RigMatrix::zero(d, d * d, Rig::rational);
    {
        RigMatrix m1s = mat_mul(sd.m1, S);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d * d; ++j)
                bracket.at(i, j) = sd.m1.at(i, j).sub(m1s.at(i, j));
    }

    // Antisymmetry holds by construction; verified anyway.
    {
        bool anti = is_zero(mat_add(bracket, mat_mul(bracket, S)));
        rep.add("bracket.antisymmetry", anti, anti ? "" : "bracket is not antisymmetric");
    }

    // Leibniz {a, bc} = {a,b} c + b {a,c}, witnessed on basis triples.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j)
                for (std::size_t k = 0; k < d && ok; ++k) {
                    RigMatrix a = basis_vec(i, d), b = basis_vec(j, d), c = basis_vec(k, d);
                    RigMatrix lhs = pairwise(bracket, a, pairwise(sd.mult, b, c));
                    RigMatrix rhs = mat_add(pairwise(sd.mult, pairwise(bracket, a, b), c),
                                            pairwise(sd.mult, b, pairwise(bracket, a, c)));
                    if (lhs != rhs) {
                        ok = false;
                        witness = "(" + sd.basis_name(i) + "," + sd.basis_name(j) + "," +
                                  sd.basis_name(k) + ")";
                    }
                }
        rep.add("bracket.leibniz", ok, witness);
    }

    // Jacobi {a,{b,c}} + {b,{c,a}} + {c,{a,b}} = 0 on basis triples.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j)
                for (std::size_t k = 0; k < d && ok; ++k) {
                    RigMatrix a = basis_vec(i, d), b = basis_vec(j, d), c = basis_vec(k, d);
                    RigMatrix sum = mat_add(
                        mat_add(pairwise(bracket, a, pairwise(bracket, b, c)),
                                pairwise(bracket, b, pairwise(bracket, c, a))),
                        pairwise(bracket, c, pairwise(bracket, a, b)));
                    if (!is_zero(sum)) {
                        ok = false;
                        witness = "(" + sd.basis_name(i) + "," + sd.basis_name(j) + "," +
                                  sd.basis_name(k) + ")";
                    }
                }
        rep.add("bracket.jacobi", ok, witness);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Stock deformation data on the six-dimensional quotient of Q[u,v] by total
// degree >= 3, basis {1, u, v, u^2, uv, v^2}.

namespace star_detail {

// Exponent pairs of the basis monomials.
inline const std::vector<std::pair<int, int>>& poly6_basis() {
    static const std::vector<std::pair<int, int>> b = {{0, 0}, {1, 0}, {0, 1},
                                                       {2, 0}, {1, 1}, {0, 2}};
    return b;
}

inline std::size_t poly6_index(int du, int dv) {
    const auto& b = poly6_basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].first == du && b[i].second == dv) return i;
    throw shape_error("monomial outside the truncated basis");
}

// d/du^a d/dv^b of a monomial, with its integer coefficient.
struct MonoTerm {
    BigRat coeff;
    int du, dv;
};

inline MonoTerm differentiate(int du, int dv, int au, int av) {
    BigRat c = 1;
    for (int i = 0; i < au; ++i) c *= du - i;
    for (int i = 0; i < av; ++i) c *= dv - i;
    if (du < au || dv < av) return {BigRat(0), 0, 0};
    return {c, du - au, dv - av};
}

}  // namespace star_detail

// The classic derivative-based first and second order terms,
//   m1 = (1/2)(du (x) dv - dv (x) du) followed by multiplication,
//   m2 = (1/8)(duu (x) dvv - 2 dudv (x) dudv + dvv (x) duu),
// optionally weighted by an extra factor w = u^weight_u v^weight_v applied to
// every output.  The unweighted pair is the textbook deformation of the
// polynomial algebra; on this truncated quotient its defect is visible and
// deliberate (see the tests).  Weighting by u^2 pushes every boundary case
// into the truncated ideal and yields a deformation that satisfies all the
// checks on the quotient.
inline StarData truncated_poly_star(int weight_u = 0, int weight_v = 0) {
    using namespace star_detail;
    const auto& basis = poly6_basis();
    const std::size_t d = basis.size();
    StarData sd;
    sd.dim = d;
    sd.basis = {"1", "u", "v", "u^2", "uv", "v^2"};
    sd.mult = RigMatrix::zero(d, d * d, Rig::rational);
    sd.m1 = RigMatrix::zero(d, d * d, Rig::rational);
    sd.m2 = RigMatrix::zero(d, d * d, Rig::rational);

    auto emit = [&](RigMatrix& target, std::size_t col, BigRat coeff, int du, int dv) {
        if (coeff == 0) return;
        if (du + dv >= 3) return;  // the truncated ideal
        std::size_t row = poly6_index(du, dv);
        target.at(row, col) =
            target.at(row, col).add(RigValue::rational(coeff));
    };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t col = i * d + j;
            auto [iu, iv] = basis[i];
            auto [ju, jv] = basis[j];
            emit(sd.mult, col, BigRat(1), iu + ju, iv + jv);

            // One derivative each way.
            auto a1 = differentiate(iu, iv, 1, 0), b1 = differentiate(ju, jv, 0, 1);
            auto a2 = differentiate(iu, iv, 0, 1), b2 = differentiate(ju, jv, 1, 0);
            emit(sd.m1, col, a1.coeff * b1.coeff / 2, a1.du + b1.du + weight_u,
                 a1.dv + b1.dv + weight_v);
            emit(sd.m1, col, -a2.coeff * b2.coeff / 2, a2.du + b2.du + weight_u,
                 a2.dv + b2.dv + weight_v);

            // Two derivatives each way; double weight for the second order.
            struct P {
                int au, av, bu, bv;
                BigRat c;
            };
            std::vector<P> second = {{2, 0, 0, 2, BigRat(1, 8)},
                                     {1, 1, 1, 1, BigRat(-2, 8)},
                                     {0, 2, 2, 0, BigRat(1, 8)}};
            for (const auto& p : second) {
                auto da = differentiate(iu, iv, p.au, p.av);
                auto db = differentiate(ju, jv, p.bu, p.bv);
                emit(sd.m2, col, p.c * da.coeff * db.coeff, da.du + db.du + 2 * weight_u,
                     da.dv + db.dv + 2 * weight_v);
            }
        }
    return sd;
}

}  // namespace cobalt
