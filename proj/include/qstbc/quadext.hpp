#pragma once

#include "qstbc/field.hpp"

#include <complex>

namespace qstbc {

// The relative quadratic extension K = F(alpha1) cut out by a monic
// polynomial x^2 + p x + q with p, q in O_F. alpha1 and alpha2 denote the
// two roots; exact arithmetic never picks one, only the numeric embeddings
// do (via the principal complex square root of the discriminant).

// Principal square root: nonnegative real part, and +i sqrt(|x|) on the
// negative real axis (signed zeros normalized away).
std::complex<double> principal_sqrt(std::complex<double> z);

class QuadPoly {
public:
    QuadPoly(RingElem p, RingElem q);

    long d() const { return p_.d(); }
    const RingElem& p() const { return p_; }
    const RingElem& q() const { return q_; }

    RingElem discriminant() const;  // p^2 - 4q
    bool irreducible() const;       // iff the discriminant is not a square in F

    // Numeric roots; index 1 is (-p + principal_sqrt(disc))/2, index 2 the other.
    std::complex<double> root(int which) const;

    bool operator==(const QuadPoly& o) const { return p_ == o.p_ && q_ == o.q_; }

private:
    RingElem p_, q_;
};

// Polynomial whose roots are the originals shifted by p0: coefficients
// become (p - 2 p0, q - p0 p + p0^2). The discriminant is unchanged.
QuadPoly translate_roots(const QuadPoly& poly, const RingElem& p0);

// a + b*alpha1 with a, b in F. Field coordinates (rather than ring ones) so
// that half-integer witnesses are representable.
class ExtElem {
public:
    ExtElem(QuadPoly poly, FieldElem a, FieldElem b);

    const QuadPoly& poly() const { return poly_; }
    const FieldElem& a() const { return a_; }
    const FieldElem& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // a + b*alpha2 = (a - p b) - b*alpha1
    ExtElem conjugate() const;

    // N_{K/F}(a + b alpha1) = (a + b alpha1)(a + b alpha2) = a^2 - p a b + q b^2
    FieldElem rel_norm() const;

    // Numeric image under sigma_1 (which = 1) or sigma_2 (which = 2).
    std::complex<double> embed(int which) const;

    friend ExtElem operator+(const ExtElem& x, const ExtElem& y);
    friend ExtElem operator-(const ExtElem& x, const ExtElem& y);
    friend ExtElem operator*(const ExtElem& x, const ExtElem& y);
    ExtElem operator-() const { return ExtElem(poly_, -a_, -b_); }

    bool operator==(const ExtElem& o) const {
        return poly_ == o.poly_ && a_ == o.a_ && b_ == o.b_;
    }

private:
    QuadPoly poly_;
    FieldElem a_, b_;
};

inline ExtElem ext_scalar(const QuadPoly& poly, FieldElem a) {
    long d = poly.d();
    return ExtElem(poly, std::move(a), field_zero(d));
}

inline ExtElem ext_alpha(const QuadPoly& poly) {
    long d = poly.d();
    return ExtElem(poly, field_zero(d), field_one(d));
}

}  // namespace qstbc
