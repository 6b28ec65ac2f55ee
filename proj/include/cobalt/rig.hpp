#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

// Scalar arithmetic over commutative rigs ("rings without negatives").
// Five carriers: naturals, integers, rationals, complex rationals and
// float64.  The exact carriers use arbitrary precision; float64 exists
// for user-supplied data only and is compared with tolerance elsewhere.

namespace cobalt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct rig_error : std::runtime_error {
    explicit rig_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct shape_error : std::runtime_error {
    explicit shape_error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Rig { natural, integer, rational, complex_rational, float64 };

inline const char* rig_name(Rig r) {
    switch (r) {
        case Rig::natural: return "natural";
        case Rig::integer: return "integer";
        case Rig::rational: return "rational";
        case Rig::complex_rational: return "complex";
        case Rig::float64: return "float";
    }
    return "?";
}

inline Rig rig_from_name(const std::string& s) {
    if (s == "natural") return Rig::natural;
    if (s == "integer") return Rig::integer;
    if (s == "rational") return Rig::rational;
    if (s == "complex") return Rig::complex_rational;
    if (s == "float") return Rig::float64;
    throw rig_error("unknown rig name: " + s);
}

// Does the rig define an involution usable by dagger?  Conjugation for
// complex, identity for the other carriers; naturals are excluded so that
// requesting a dagger over them is a typed error rather than a silent noop.
inline bool rig_has_involution(Rig r) { return r != Rig::natural; }

inline bool rig_has_negation(Rig r) {
    return r != Rig::natural;
}

struct ComplexRat {
    BigRat re;
    BigRat im;
    bool operator==(const ComplexRat& o) const { return re == o.re && im == o.im; }
};

// One scalar of one rig.  Immutable value type; all operations are pure and
// either return a fresh value or throw rig_error.
class RigValue {
public:
    RigValue() : rig_(Rig::natural), v_(BigInt(0)) {}

    static RigValue natural(BigInt n) {
        if (n < 0) throw rig_error("natural value must be non-negative");
        return RigValue(Rig::natural, std::move(n));
    }
    static RigValue integer(BigInt n) { return RigValue(Rig::integer, std::move(n)); }
    static RigValue rational(BigRat q) { return RigValue(Rig::rational, std::move(q)); }
    static RigValue rational(long p, long q) { return rational(BigRat(p, q)); }
    static RigValue complex(BigRat re, BigRat im) {
        return RigValue(Rig::complex_rational, ComplexRat{std::move(re), std::move(im)});
    }
    static RigValue f64(double x) { return RigValue(Rig::float64, x); }

    // Small-integer embedding into any rig.
    static RigValue of_int(long n, Rig r) {
        switch (r) {
            case Rig::natural: return natural(BigInt(n));
            case Rig::integer: return integer(BigInt(n));
            case Rig::rational: return rational(BigRat(n));
            case Rig::complex_rational: return complex(BigRat(n), BigRat(0));
            case Rig::float64: return f64(static_cast<double>(n));
        }
        throw rig_error("bad rig");
    }

    static RigValue zero(Rig r) { return of_int(0, r); }
    static RigValue one(Rig r) { return of_int(1, r); }

    Rig rig() const { return rig_; }
    bool is_zero() const { return *this == zero(rig_); }
    bool is_one() const { return *this == one(rig_); }

    const BigInt& as_int() const { return std::get<BigInt>(v_); }
    const BigRat& as_rat() const { return std::get<BigRat>(v_); }
    const ComplexRat& as_complex() const { return std::get<ComplexRat>(v_); }
    double as_f64() const { return std::get<double>(v_); }

    RigValue add(const RigValue& o) const {
        require_same(o, "add");
        switch (rig_) {
            case Rig::natural:
            case Rig::integer: return RigValue(rig_, BigInt(as_int() + o.as_int()));
            case Rig::rational: return RigValue(rig_, BigRat(as_rat() + o.as_rat()));
            case Rig::complex_rational:
                return RigValue(rig_, ComplexRat{BigRat(as_complex().re + o.as_complex().re),
                                                 BigRat(as_complex().im + o.as_complex().im)});
            case Rig::float64: return RigValue(rig_, as_f64() + o.as_f64());
        }
        throw rig_error("bad rig");
    }

    RigValue mul(const RigValue& o) const {
        require_same(o, "mul");
        switch (rig_) {
            case Rig::natural:
            case Rig::integer: return RigValue(rig_, BigInt(as_int() * o.as_int()));
            case Rig::rational: return RigValue(rig_, BigRat(as_rat() * o.as_rat()));
            case Rig::complex_rational: {
                const auto& a = as_complex();
                const auto& b = o.as_complex();
                return RigValue(rig_, ComplexRat{BigRat(a.re * b.re - a.im * b.im),
                                                 BigRat(a.re * b.im + a.im * b.re)});
            }
            case Rig::float64: return RigValue(rig_, as_f64() * o.as_f64());
        }
        throw rig_error("bad rig");
    }

    RigValue neg() const {
        switch (rig_) {
            case Rig::natural:
                throw rig_error("naturals carry no negation");
            case Rig::integer: return RigValue(rig_, BigInt(-as_int()));
            case Rig::rational: return RigValue(rig_, BigRat(-as_rat()));
            case Rig::complex_rational:
                return RigValue(rig_, ComplexRat{-as_complex().re, -as_complex().im});
            case Rig::float64: return RigValue(rig_, -as_f64());
        }
        throw rig_error("bad rig");
    }

    RigValue sub(const RigValue& o) const { return add(o.neg()); }

    // Multiplicative inverse of a nonzero value; rationals, complex and
    // floats only.
    RigValue inverse() const {
        if (is_zero()) throw rig_error("inverse of zero");
        switch (rig_) {
            case Rig::natural:
            case Rig::integer:
                throw rig_error(std::string(rig_name(rig_)) + " values have no general inverse");
            case Rig::rational: return RigValue(rig_, BigRat(BigRat(1) / as_rat()));
            case Rig::complex_rational: {
                const auto& a = as_complex();
                BigRat n(a.re * a.re + a.im * a.im);
                return RigValue(rig_, ComplexRat{BigRat(a.re / n), BigRat(-a.im / n)});
            }
            case Rig::float64: return RigValue(rig_, 1.0 / as_f64());
        }
        throw rig_error("bad rig");
    }

    // Involution: complex conjugation; identity on the other carriers that
    // have one.  Rejected on naturals.
    RigValue conj() const {
        if (!rig_has_involution(rig_))
            throw rig_error("naturals carry no involution");
        if (rig_ == Rig::complex_rational)
            return RigValue(rig_, ComplexRat{as_complex().re, -as_complex().im});
        return *this;
    }

    bool operator==(const RigValue& o) const {
        if (rig_ != o.rig_) return false;
        return v_ == o.v_;
    }
    bool operator!=(const RigValue& o) const { return !(*this == o); }

    // Exact equality for exact rigs, |a-b| <= tol elementwise for floats.
    bool approx_equal(const RigValue& o, double tol = 1e-9) const {
        if (rig_ != o.rig_) return false;
        if (rig_ == Rig::float64) return std::fabs(as_f64() - o.as_f64()) <= tol;
        return *this == o;
    }

    std::string str() const {
        switch (rig_) {
            case Rig::natural:
            case Rig::integer: return as_int().str();
            case Rig::rational: return rat_str(as_rat());
            case Rig::complex_rational: {
                const auto& c = as_complex();
                return rat_str(c.re) + (c.im >= 0 ? "+" : "") + rat_str(c.im) + "i";
            }
            case Rig::float64: return std::to_string(as_f64());
        }
        return "?";
    }

    static std::string rat_str(const BigRat& q) {
        if (boost::multiprecision::denominator(q) == 1)
            return boost::multiprecision::numerator(q).str();
        return boost::multiprecision::numerator(q).str() + "/" +
               boost::multiprecision::denominator(q).str();
    }

private:
    using Payload = std::variant<BigInt, BigRat, ComplexRat, double>;

    RigValue(Rig r, Payload v) : rig_(r), v_(std::move(v)) {}

    void require_same(const RigValue& o, const char* what) const {
        if (rig_ != o.rig_)
            throw rig_error(std::string("rig mismatch in ") + what + ": " + rig_name(rig_) +
                            " vs " + rig_name(o.rig_));
    }

    Rig rig_;
    Payload v_;
};

}  // namespace cobalt
