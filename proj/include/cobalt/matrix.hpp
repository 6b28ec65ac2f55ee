#pragma once

#include "cobalt/rig.hpp"

#include <cstddef>
#include <functional>
#include <vector>

// Dense matrices over a single rig, row-major.  Desk-scale only: the
// evaluation functors never produce sides beyond a few dozen.

namespace cobalt {

class RigMatrix {
public:
    RigMatrix() : rig_(Rig::natural), rows_(0), cols_(0) {}

    RigMatrix(std::size_t rows, std::size_t cols, std::vector<RigValue> entries)
        : rig_(entries.empty() ? Rig::natural : entries.front().rig()),
          rows_(rows),
          cols_(cols),
          e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw shape_error("entry count " + std::to_string(e_.size()) + " != " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
        for (const auto& v : e_)
            if (v.rig() != rig_)
                throw rig_error("mixed rig variants in one matrix");
    }

    static RigMatrix zero(std::size_t rows, std::size_t cols, Rig r) {
        return RigMatrix(rows, cols, std::vector<RigValue>(rows * cols, RigValue::zero(r)));
    }

    static RigMatrix identity(std::size_t n, Rig r) {
        RigMatrix m = zero(n, n, r);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RigValue::one(r);
        return m;
    }

    // Convenience for tests and fixtures: dense int grid into a chosen rig.
    static RigMatrix from_ints(const std::vector<std::vector<long>>& grid, Rig r) {
        std::size_t rows = grid.size();
        std::size_t cols = rows ? grid.front().size() : 0;
        std::vector<RigValue> es;
        es.reserve(rows * cols);
        for (const auto& row : grid) {
            if (row.size() != cols) throw shape_error("ragged int grid");
            for (long v : row) es.push_back(RigValue::of_int(v, r));
        }
        return RigMatrix(rows, cols, std::move(es));
    }

    Rig rig() const { return rig_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const RigValue& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    RigValue& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const std::vector<RigValue>& entries() const { return e_; }

    bool operator==(const RigMatrix& o) const {
        return rig_ == o.rig_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RigMatrix& o) const { return !(*this == o); }

    bool approx_equal(const RigMatrix& o, double tol = 1e-9) const {
        if (rig_ != o.rig_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (!e_[i].approx_equal(o.e_[i], tol)) return false;
        return true;
    }

private:
    Rig rig_;
    std::size_t rows_, cols_;
    std::vector<RigValue> e_;
};

inline RigMatrix mat_mul(const RigMatrix& a, const RigMatrix& b) {
    if (a.rig() != b.rig())
        throw rig_error(std::string("rig mismatch in mat_mul: ") + rig_name(a.rig()) + " vs " +
                        rig_name(b.rig()));
    if (a.cols() != b.rows())
        throw shape_error("mat_mul dimension mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
    RigMatrix c = RigMatrix::zero(a.rows(), b.cols(), a.rig());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const RigValue& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j).add(aik.mul(b.at(k, j)));
        }
    return c;
}

// Kronecker product with index convention (i tensor j) -> i*b.rows + j on
// rows and likewise on columns.
inline RigMatrix kron(const RigMatrix& a, const RigMatrix& b) {
    if (a.rig() != b.rig())
        throw rig_error(std::string("rig mismatch in kron: ") + rig_name(a.rig()) + " vs " +
                        rig_name(b.rig()));
    RigMatrix c = RigMatrix::zero(a.rows() * b.rows(), a.cols() * b.cols(), a.rig());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const RigValue& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c.at(i * b.rows() + k, j * b.cols() + l) = aij.mul(b.at(k, l));
        }
    return c;
}

// Permutation matrix sending basis vector e_i (x) e_j of R^{d1 (x) d2} to
// e_j (x) e_i.
inline RigMatrix swap_matrix(std::size_t d1, std::size_t d2, Rig r) {
    RigMatrix m = RigMatrix::zero(d1 * d2, d1 * d2, r);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            m.at(j * d1 + i, i * d2 + j) = RigValue::one(r);
    return m;
}

inline RigMatrix transpose(const RigMatrix& a) {
    RigMatrix t = RigMatrix::zero(a.cols(), a.rows(), a.rig());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

// Conjugate transpose: plain transpose for real carriers, entrywise
// conjugation for complex.  Rejected over naturals.
inline RigMatrix dagger_matrix(const RigMatrix& a) {
    if (!rig_has_involution(a.rig()))
        throw rig_error("dagger over a rig without involution (naturals)");
    RigMatrix t = RigMatrix::zero(a.cols(), a.rows(), a.rig());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j).conj();
    return t;
}

inline RigValue trace(const RigMatrix& a) {
    if (a.rows() != a.cols()) throw shape_error("trace of a non-square matrix");
    RigValue s = RigValue::zero(a.rig());
    for (std::size_t i = 0; i < a.rows(); ++i) s = s.add(a.at(i, i));
    return s;
}

inline RigMatrix scalar_mul(const RigValue& c, const RigMatrix& a) {
    RigMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = c.mul(a.at(i, j));
    return out;
}

// Gauss-Jordan inverse.  Works directly over rigs with division; natural and
// integer matrices are lifted to rationals and the result is accepted only
// if every entry embeds back.  Returns false if singular or not invertible
// over the rig.
inline bool try_inverse(const RigMatrix& a, RigMatrix& out) {
    if (a.rows() != a.cols()) return false;
    const std::size_t n = a.rows();
    Rig work_rig = a.rig();
    RigMatrix m = a;
    if (a.rig() == Rig::natural || a.rig() == Rig::integer) {
        work_rig = Rig::rational;
        m = RigMatrix::zero(n, n, work_rig);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = RigValue::rational(BigRat(a.at(i, j).as_int()));
    }
    RigMatrix inv = RigMatrix::identity(n, work_rig);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        RigValue p = m.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = p.mul(m.at(col, j));
            inv.at(col, j) = p.mul(inv.at(col, j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            RigValue f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j).sub(f.mul(m.at(col, j)));
                inv.at(i, j) = inv.at(i, j).sub(f.mul(inv.at(col, j)));
            }
        }
    }
    if (work_rig != a.rig()) {
        // Demote back to the original carrier if every entry allows it.
        RigMatrix demoted = RigMatrix::zero(n, n, a.rig());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const BigRat& q = inv.at(i, j).as_rat();
                if (boost::multiprecision::denominator(q) != 1) return false;
                BigInt num = boost::multiprecision::numerator(q);
                if (a.rig() == Rig::natural && num < 0) return false;
                demoted.at(i, j) = a.rig() == Rig::natural ? RigValue::natural(num)
                                                           : RigValue::integer(num);
            }
        out = demoted;
        return true;
    }
    out = inv;
    return true;
}

}  // namespace cobalt
