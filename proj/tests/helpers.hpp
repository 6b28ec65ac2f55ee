#pragma once

#include "cobalt/evaldatum.hpp"
#include "cobalt/matrix.hpp"

#include <random>

// Shared helpers for the test suites.  All randomness flows through a
// mt19937_64 with an explicit seed so reruns are identical.

namespace cobalt::testing {

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline RigValue random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 4) {
    long num = rand_int(rng, -max_num, max_num);
    long den = rand_int(rng, 1, max_den);
    return RigValue::rational(num, den);
}

inline RigMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               Rig rig = Rig::rational, long max_abs = 9) {
    std::vector<RigValue> es;
    es.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        long v = rand_int(rng, rig == Rig::natural ? 0 : -max_abs, max_abs);
        es.push_back(RigValue::of_int(v, rig));
    }
    return RigMatrix(rows, cols, std::move(es));
}

inline RigMatrix random_invertible(std::mt19937_64& rng, std::size_t n,
                                   Rig rig = Rig::rational) {
    for (int tries = 0; tries < 100; ++tries) {
        RigMatrix m = random_matrix(rng, n, n, rig, 3);
        RigMatrix inv;
        if (try_inverse(m, inv)) return m;
    }
    throw std::runtime_error("could not draw an invertible matrix");
}

// Independent matrix product by raw index loops, for oracle duty.
inline RigMatrix naive_mat_mul(const RigMatrix& a, const RigMatrix& b) {
    RigMatrix c = RigMatrix::zero(a.rows(), b.cols(), a.rig());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RigValue s = RigValue::zero(a.rig());
            for (std::size_t k = 0; k < a.cols(); ++k) s = s.add(a.at(i, k).mul(b.at(k, j)));
            c.at(i, j) = s;
        }
    return c;
}

// Independent Kronecker product by raw index loops.
inline RigMatrix naive_kron(const RigMatrix& a, const RigMatrix& b) {
    RigMatrix c = RigMatrix::zero(a.rows() * b.rows(), a.cols() * b.cols(), a.rig());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            std::size_t ia = i / b.rows(), ib = i % b.rows();
            std::size_t ja = j / b.cols(), jb = j % b.cols();
            c.at(i, j) = a.at(ia, ja).mul(b.at(ib, jb));
        }
    return c;
}

// A k = 1 datum from two independent invertible frames: cup = vec(M),
// cap = vec(M^-1) and likewise for the starred pair.
inline EvalDatum random_k1_datum(std::mt19937_64& rng, std::size_t d) {
    EvalDatum ed;
    ed.rig = Rig::rational;
    ed.dim = d;
    ed.k = 1;
    auto make_pair = [&](RigMatrix& cupv, RigMatrix& capv) {
        RigMatrix M = random_invertible(rng, d);
        RigMatrix Minv;
        try_inverse(M, Minv);
        cupv = RigMatrix::zero(d * d, 1, Rig::rational);
        capv = RigMatrix::zero(1, d * d, Rig::rational);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                cupv.at(i * d + j, 0) = M.at(i, j);
                capv.at(0, i * d + j) = Minv.at(i, j);
            }
    };
    make_pair(ed.cup, ed.cap);
    make_pair(ed.cup_star, ed.cap_star);
    return ed;
}

}  // namespace cobalt::testing
