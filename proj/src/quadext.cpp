#include "qstbc/quadext.hpp"

namespace qstbc {

std::complex<double> principal_sqrt(std::complex<double> z) {
    if (z.imag() == 0.0) z = {z.real(), +0.0};
    return std::sqrt(z);
}

QuadPoly::QuadPoly(RingElem p, RingElem q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.d() != q_.d()) {
        throw std::invalid_argument("polynomial coefficients from different fields");
    }
}

RingElem QuadPoly::discriminant() const {
    return p_ * p_ - ring_integer(d(), 4) * q_;
}

bool QuadPoly::irreducible() const {
    return !sqrt_in_field(discriminant().to_field()).has_value();
}

std::complex<double> QuadPoly::root(int which) const {
    if (which != 1 && which != 2) throw std::invalid_argument("root index must be 1 or 2");
    std::complex<double> pz = p_.to_field().to_complex();
    std::complex<double> s = principal_sqrt(discriminant().to_field().to_complex());
    return which == 1 ? (-pz + s) / 2.0 : (-pz - s) / 2.0;
}

QuadPoly translate_roots(const QuadPoly& poly, const RingElem& p0) {
    RingElem two(poly.d(), 2, 0);
    return QuadPoly(poly.p() - two * p0, poly.q() - p0 * poly.p() + p0 * p0);
}

ExtElem::ExtElem(QuadPoly poly, FieldElem a, FieldElem b)
    : poly_(std::move(poly)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.d() != poly_.d() || b_.d() != poly_.d()) {
        throw std::invalid_argument("extension element coordinates from the wrong base field");
    }
}

ExtElem ExtElem::conjugate() const {
    FieldElem p = poly_.p().to_field();
    return ExtElem(poly_, a_ - p * b_, -b_);
}

FieldElem ExtElem::rel_norm() const {
    FieldElem p = poly_.p().to_field();
    FieldElem q = poly_.q().to_field();
    return a_ * a_ - p * a_ * b_ + q * b_ * b_;
}

std::complex<double> ExtElem::embed(int which) const {
    return a_.to_complex() + b_.to_complex() * poly_.root(which);
}

ExtElem operator+(const ExtElem& x, const ExtElem& y) {
    if (!(x.poly_ == y.poly_)) throw std::invalid_argument("extension elements over different polynomials");
    return ExtElem(x.poly_, x.a_ + y.a_, x.b_ + y.b_);
}

ExtElem operator-(const ExtElem& x, const ExtElem& y) {
    if (!(x.poly_ == y.poly_)) throw std::invalid_argument("extension elements over different polynomials");
    return ExtElem(x.poly_, x.a_ - y.a_, x.b_ - y.b_);
}

ExtElem operator*(const ExtElem& x, const ExtElem& y) {
    if (!(x.poly_ == y.poly_)) throw std::invalid_argument("extension elements over different polynomials");
    // alpha^2 = -p alpha - q
    FieldElem p = x.poly_.p().to_field();
    FieldElem q = x.poly_.q().to_field();
    FieldElem bb = x.b_ * y.b_;
    return ExtElem(x.poly_, x.a_ * y.a_ - q * bb, x.a_ * y.b_ + x.b_ * y.a_ - p * bb);
}

}  // namespace qstbc
