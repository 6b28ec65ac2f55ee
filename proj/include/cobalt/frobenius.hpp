#pragma once

#include "cobalt/matrix.hpp"
#include "cobalt/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// The 2-dimensional cobordism engine.  A commutative Frobenius algebra
// supplies the images of the generating surfaces; movies are Morse-slice
// factorizations acting on an ordered list of circles.

namespace cobalt {

struct movie_error : std::runtime_error {
    explicit movie_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Commutative monoid object with a trace whose pairing admits a copairing.
struct FrobeniusData {
    Rig rig = Rig::rational;
    std::size_t dim = 1;
    RigMatrix unit;       // d x 1
    RigMatrix mult;       // d x d^2
    RigMatrix trace_cov;  // 1 x d
    RigMatrix copairing;  // d^2 x 1

    // Comultiplication is derived, never supplied: (mult (x) id) . (id (x) copairing).
    RigMatrix comult() const {
        RigMatrix I = RigMatrix::identity(dim, rig);
        return mat_mul(kron(mult, I), kron(I, copairing));
    }

    RigMatrix pairing() const { return mat_mul(trace_cov, mult); }  // 1 x d^2
};

namespace frob_detail {
inline std::string first_diff(const RigMatrix& a, const RigMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).approx_equal(b.at(i, j)))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                       a.at(i, j).str() + " vs " + b.at(i, j).str();
    return "";
}

inline void check_eq(Report& rep, const std::string& name, const RigMatrix& a,
                     const RigMatrix& b) {
    std::string diff = first_diff(a, b);
    rep.add(name, diff.empty(), diff);
}
}  // namespace frob_detail

inline Report validate_frobenius(const FrobeniusData& fd) {
    using frob_detail::check_eq;
    const std::size_t d = fd.dim;
    if (fd.unit.rows() != d || fd.unit.cols() != 1) throw shape_error("unit must be d x 1");
    if (fd.mult.rows() != d || fd.mult.cols() != d * d)
        throw shape_error("mult must be d x d^2");
    if (fd.trace_cov.rows() != 1 || fd.trace_cov.cols() != d)
        throw shape_error("trace must be 1 x d");
    if (fd.copairing.rows() != d * d || fd.copairing.cols() != 1)
        throw shape_error("copairing must be d^2 x 1");

    Report rep;
    RigMatrix I = RigMatrix::identity(d, fd.rig);

    check_eq(rep, "associativity", mat_mul(fd.mult, kron(fd.mult, I)),
             mat_mul(fd.mult, kron(I, fd.mult)));
    check_eq(rep, "commutativity", mat_mul(fd.mult, swap_matrix(d, d, fd.rig)), fd.mult);
    check_eq(rep, "unit.left", mat_mul(fd.mult, kron(fd.unit, I)), I);
    check_eq(rep, "unit.right", mat_mul(fd.mult, kron(I, fd.unit)), I);

    RigMatrix p = fd.pairing();
    check_eq(rep, "snake.left", mat_mul(kron(I, p), kron(fd.copairing, I)), I);
    check_eq(rep, "snake.right", mat_mul(kron(p, I), kron(I, fd.copairing)), I);

    // The two bracketings of the derived comultiplication agree.
    RigMatrix alt = mat_mul(kron(I, fd.mult), kron(fd.copairing, I));
    check_eq(rep, "comult.bracketings", fd.comult(), alt);
    return rep;
}

// ---------------------------------------------------------------------------
// Movies.

enum class SliceOp { Birth, Death, Merge, Split, Swap };

inline const char* slice_op_name(SliceOp op) {
    switch (op) {
        case SliceOp::Birth: return "birth";
        case SliceOp::Death: return "death";
        case SliceOp::Merge: return "merge";
        case SliceOp::Split: return "split";
        case SliceOp::Swap: return "swap";
    }
    return "?";
}

struct MovieSlice {
    SliceOp op;
    std::size_t pos;
};

struct Movie {
    std::size_t in_circles = 0;
    std::vector<MovieSlice> slices;

    // Circle count after each slice; throws if any position is out of range.
    std::size_t out_circles() const {
        std::size_t n = in_circles;
        for (const auto& s : slices) {
            switch (s.op) {
                case SliceOp::Birth:
                    if (s.pos > n) throw movie_error("birth position out of range");
                    ++n;
                    break;
                case SliceOp::Death:
                    if (s.pos >= n) throw movie_error("death position out of range");
                    --n;
                    break;
                case SliceOp::Merge:
                    if (s.pos + 1 >= n) throw movie_error("merge position out of range");
                    --n;
                    break;
                case SliceOp::Split:
                    if (s.pos >= n) throw movie_error("split position out of range");
                    ++n;
                    break;
                case SliceOp::Swap:
                    if (s.pos + 1 >= n) throw movie_error("swap position out of range");
                    break;
            }
        }
        return n;
    }
};

namespace frob_detail {
inline RigMatrix id_pow(const FrobeniusData& fd, std::size_t n) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= fd.dim;
    return RigMatrix::identity(p, fd.rig);
}
}  // namespace frob_detail

// Matrix of one slice acting on `circles` circles.
inline RigMatrix slice_matrix(const MovieSlice& s, std::size_t circles, const FrobeniusData& fd) {
    using frob_detail::id_pow;
    const std::size_t d = fd.dim;
    RigMatrix local = RigMatrix::identity(1, fd.rig);
    std::size_t consumed = 0;
    switch (s.op) {
        case SliceOp::Birth:
            if (s.pos > circles) throw movie_error("birth position out of range");
            local = fd.unit;
            consumed = 0;
            break;
        case SliceOp::Death:
            if (s.pos >= circles) throw movie_error("death position out of range");
            local = fd.trace_cov;
            consumed = 1;
            break;
        case SliceOp::Merge:
            if (s.pos + 1 >= circles) throw movie_error("merge position out of range");
            local = fd.mult;
            consumed = 2;
            break;
        case SliceOp::Split:
            if (s.pos >= circles) throw movie_error("split position out of range");
            local = fd.comult();
            consumed = 1;
            break;
        case SliceOp::Swap:
            if (s.pos + 1 >= circles) throw movie_error("swap position out of range");
            local = swap_matrix(d, d, fd.rig);
            consumed = 2;
            break;
    }
    return kron(kron(id_pow(fd, s.pos), local), id_pow(fd, circles - s.pos - consumed));
}

// Product of the slice matrices, a d^out x d^in matrix.
inline RigMatrix eval_movie(const Movie& mv, const FrobeniusData& fd) {
    mv.out_circles();  // validates positions
    std::size_t n = mv.in_circles;
    RigMatrix acc = frob_detail::id_pow(fd, n);
    for (const auto& s : mv.slices) {
        acc = mat_mul(slice_matrix(s, n, fd), acc);
        switch (s.op) {
            case SliceOp::Birth:
            case SliceOp::Split: ++n; break;
            case SliceOp::Death:
            case SliceOp::Merge: --n; break;
            case SliceOp::Swap: break;
        }
    }
    return acc;
}

// The standard genus-g closed surface: birth, g handles, death.
inline Movie surface_movie(std::size_t genus) {
    Movie mv;
    mv.in_circles = 0;
    mv.slices.push_back({SliceOp::Birth, 0});
    for (std::size_t i = 0; i < genus; ++i) {
        mv.slices.push_back({SliceOp::Split, 0});
        mv.slices.push_back({SliceOp::Merge, 0});
    }
    mv.slices.push_back({SliceOp::Death, 0});
    return mv;
}

inline RigValue surface_invariant(std::size_t genus, const FrobeniusData& fd) {
    return eval_movie(surface_movie(genus), fd).at(0, 0);
}

// ---------------------------------------------------------------------------
// Movie moves: pairs of movies related by a handle slide or cancellation
// must evaluate identically.

struct MoviePair {
    std::string name;
    Movie lhs, rhs;
};

inline std::vector<MoviePair> movie_move_corpus() {
    auto mv = [](std::size_t in, std::vector<MovieSlice> slices) {
        Movie m;
        m.in_circles = in;
        m.slices = std::move(slices);
        return m;
    };
    using S = SliceOp;
    std::vector<MoviePair> moves;
    // Handle cancellations: a birth or death against a saddle is a cylinder.
    moves.push_back({"cancel.birth_merge.l", mv(1, {{S::Birth, 0}, {S::Merge, 0}}), mv(1, {})});
    moves.push_back({"cancel.birth_merge.r", mv(1, {{S::Birth, 1}, {S::Merge, 0}}), mv(1, {})});
    moves.push_back({"cancel.split_death.l", mv(1, {{S::Split, 0}, {S::Death, 0}}), mv(1, {})});
    moves.push_back({"cancel.split_death.r", mv(1, {{S::Split, 0}, {S::Death, 1}}), mv(1, {})});
    // Saddle associativity and commutativity.
    moves.push_back({"merge.assoc", mv(3, {{S::Merge, 0}, {S::Merge, 0}}),
                     mv(3, {{S::Merge, 1}, {S::Merge, 0}})});
    moves.push_back({"merge.comm", mv(2, {{S::Swap, 0}, {S::Merge, 0}}), mv(2, {{S::Merge, 0}})});
    moves.push_back({"split.coassoc", mv(1, {{S::Split, 0}, {S::Split, 0}}),
                     mv(1, {{S::Split, 0}, {S::Split, 1}})});
    moves.push_back({"split.cocomm", mv(1, {{S::Split, 0}, {S::Swap, 0}}), mv(1, {{S::Split, 0}})});
    // Snake pairs: copairing then pairing straightens the cylinder.
    moves.push_back({"snake.left",
                     mv(1, {{S::Birth, 0}, {S::Split, 0}, {S::Merge, 1}, {S::Death, 1}}),
                     mv(1, {})});
    moves.push_back({"snake.right",
                     mv(1, {{S::Birth, 1}, {S::Split, 1}, {S::Merge, 0}, {S::Death, 0}}),
                     mv(1, {})});
    // The symmetry is natural and involutive.
    moves.push_back({"swap.involution", mv(2, {{S::Swap, 0}, {S::Swap, 0}}), mv(2, {})});
    moves.push_back({"swap.nat.birth", mv(1, {{S::Birth, 0}, {S::Swap, 0}}),
                     mv(1, {{S::Birth, 1}})});
    // The Frobenius move: saddle orders around a split agree.
    moves.push_back({"frobenius.left", mv(2, {{S::Split, 0}, {S::Merge, 1}}),
                     mv(2, {{S::Merge, 0}, {S::Split, 0}})});
    moves.push_back({"frobenius.right", mv(2, {{S::Split, 1}, {S::Merge, 0}}),
                     mv(2, {{S::Merge, 0}, {S::Split, 0}})});
    return moves;
}

inline Report check_movie_moves(const FrobeniusData& fd) {
    Report rep;
    for (const auto& mp : movie_move_corpus())
        frob_detail::check_eq(rep, mp.name, eval_movie(mp.lhs, fd), eval_movie(mp.rhs, fd));
    return rep;
}

// ---------------------------------------------------------------------------
// Stock algebras.

// The ground rig as a one-dimensional Frobenius algebra.
inline FrobeniusData trivial_frobenius(Rig rig = Rig::rational) {
    FrobeniusData fd;
    fd.rig = rig;
    fd.dim = 1;
    fd.unit = RigMatrix::identity(1, rig);
    fd.mult = RigMatrix::identity(1, rig);
    fd.trace_cov = RigMatrix::identity(1, rig);
    fd.copairing = RigMatrix::identity(1, rig);
    return fd;
}

// Group algebra of Z/n over the rationals, trace = coefficient of the unit.
// The pairing is a permutation matrix, so the copairing solves exactly.
inline FrobeniusData cyclic_group_algebra(std::size_t n) {
    FrobeniusData fd;
    fd.rig = Rig::rational;
    fd.dim = n;
    fd.unit = RigMatrix::zero(n, 1, fd.rig);
    fd.unit.at(0, 0) = RigValue::one(fd.rig);
    fd.mult = RigMatrix::zero(n, n * n, fd.rig);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            fd.mult.at((i + j) % n, i * n + j) = RigValue::one(fd.rig);
    fd.trace_cov = RigMatrix::zero(1, n, fd.rig);
    fd.trace_cov.at(0, 0) = RigValue::one(fd.rig);
    // pairing(g^i, g^j) = [i + j = 0 mod n]; invert it for the copairing.
    fd.copairing = RigMatrix::zero(n * n, 1, fd.rig);
    for (std::size_t i = 0; i < n; ++i)
        fd.copairing.at(i * n + (n - i) % n, 0) = RigValue::one(fd.rig);
    return fd;
}

// Product of n copies of the ground field, trace summing the coordinates.
inline FrobeniusData product_field_algebra(std::size_t n) {
    FrobeniusData fd;
    fd.rig = Rig::rational;
    fd.dim = n;
    fd.unit = RigMatrix::zero(n, 1, fd.rig);
    fd.mult = RigMatrix::zero(n, n * n, fd.rig);
    fd.trace_cov = RigMatrix::zero(1, n, fd.rig);
    fd.copairing = RigMatrix::zero(n * n, 1, fd.rig);
    for (std::size_t i = 0; i < n; ++i) {
        fd.unit.at(i, 0) = RigValue::one(fd.rig);
        fd.mult.at(i, i * n + i) = RigValue::one(fd.rig);
        fd.trace_cov.at(0, i) = RigValue::one(fd.rig);
        fd.copairing.at(i * n + i, 0) = RigValue::one(fd.rig);
    }
    return fd;
}

// Change of basis by an invertible P: the same algebra presented in another
// frame.  Keeps validity and every closed invariant.
inline FrobeniusData conjugate_frobenius(const FrobeniusData& fd, const RigMatrix& P) {
    RigMatrix Pinv;
    if (!try_inverse(P, Pinv)) throw shape_error("basis change must be invertible");
    FrobeniusData out = fd;
    out.unit = mat_mul(P, fd.unit);
    out.mult = mat_mul(P, mat_mul(fd.mult, kron(Pinv, Pinv)));
    out.trace_cov = mat_mul(fd.trace_cov, Pinv);
    out.copairing = mat_mul(kron(P, P), fd.copairing);
    return out;
}

}  // namespace cobalt
