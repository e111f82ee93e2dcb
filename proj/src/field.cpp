#include "qstbc/field.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace qstbc {

bool is_squarefree(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

void check_field_param(long d) {
    if (d < 1 || !is_squarefree(d)) {
        throw std::invalid_argument("field parameter d must be a positive squarefree integer, got " +
                                    std::to_string(d));
    }
}

namespace {

void check_same_field(long du, long dv) {
    if (du != dv) {
        throw std::invalid_argument("elements of Q(sqrt(-" + std::to_string(du) +
                                    ")) and Q(sqrt(-" + std::to_string(dv) + ")) do not mix");
    }
}

}  // namespace

FieldElem::FieldElem(long d, Rat x, Rat y) : d_(d), x_(std::move(x)), y_(std::move(y)) {
    check_field_param(d_);
}

Rat FieldElem::abs_sq() const { return x_ * x_ + Rat(d_) * y_ * y_; }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("inversion of zero field element");
    Rat n = abs_sq();
    return FieldElem(d_, x_ / n, -y_ / n);
}

std::complex<double> FieldElem::to_complex() const {
    return {to_double(x_), to_double(y_) * std::sqrt(static_cast<double>(d_))};
}

FieldElem operator+(const FieldElem& u, const FieldElem& v) {
    check_same_field(u.d_, v.d_);
    return FieldElem(u.d_, u.x_ + v.x_, u.y_ + v.y_);
}

FieldElem operator-(const FieldElem& u, const FieldElem& v) {
    check_same_field(u.d_, v.d_);
    return FieldElem(u.d_, u.x_ - v.x_, u.y_ - v.y_);
}

FieldElem operator*(const FieldElem& u, const FieldElem& v) {
    check_same_field(u.d_, v.d_);
    // (x1 + y1 s)(x2 + y2 s) with s^2 = -d
    return FieldElem(u.d_, u.x_ * v.x_ - Rat(u.d_) * u.y_ * v.y_, u.x_ * v.y_ + u.y_ * v.x_);
}

FieldElem operator/(const FieldElem& u, const FieldElem& v) { return u * v.inv(); }

std::optional<FieldElem> sqrt_in_field(const FieldElem& z) {
    const long d = z.d();
    const Rat& x = z.x();
    const Rat& y = z.y();

    // w = u + v sqrt(-d) with w^2 = z means u^2 - d v^2 = x and 2uv = y.
    if (y == 0) {
        if (x == 0) return field_zero(d);
        if (x > 0) {
            // v = 0, u^2 = x
            if (auto u = exact_sqrt(x)) return FieldElem(d, *u, 0);
            return std::nullopt;
        }
        // u = 0, v^2 = -x/d
        if (auto v = exact_sqrt(-x / d)) return FieldElem(d, 0, *v);
        return std::nullopt;
    }

    // y != 0 forces u != 0 and v = y/(2u); substituting gives
    // u^2 = (x + t)/2 with t = sqrt(x^2 + d y^2). The other sign of t makes
    // u^2 negative, so only this branch can carry a root.
    auto t = exact_sqrt(x * x + Rat(d) * y * y);
    if (!t) return std::nullopt;
    auto u = exact_sqrt((x + *t) / 2);
    if (!u || *u == 0) return std::nullopt;
    FieldElem w(d, *u, y / (2 * *u));
    if (!(w * w == z)) return std::nullopt;
    return w;
}

RingElem::RingElem(long d, Int a, Int b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    check_field_param(d_);
}

FieldElem RingElem::to_field() const {
    if (half_basis(d_)) {
        return FieldElem(d_, Rat(a_) + Rat(b_, 2), Rat(b_, 2));
    }
    return FieldElem(d_, Rat(a_), Rat(b_));
}

Int RingElem::norm() const {
    if (half_basis(d_)) {
        // |a + b(1+sqrt(-d))/2|^2 = a^2 + ab + b^2 (1+d)/4
        return a_ * a_ + a_ * b_ + b_ * b_ * Int((1 + d_) / 4);
    }
    return a_ * a_ + Int(d_) * b_ * b_;
}

RingElem RingElem::conj() const {
    // conj(omega) = 1 - omega in the half-integer case, -omega otherwise
    if (half_basis(d_)) return RingElem(d_, a_ + b_, -b_);
    return RingElem(d_, a_, -b_);
}

RingElem operator+(const RingElem& u, const RingElem& v) {
    check_same_field(u.d(), v.d());
    return RingElem(u.d(), u.a() + v.a(), u.b() + v.b());
}

RingElem operator-(const RingElem& u, const RingElem& v) {
    check_same_field(u.d(), v.d());
    return RingElem(u.d(), u.a() - v.a(), u.b() - v.b());
}

RingElem operator*(const RingElem& u, const RingElem& v) {
    check_same_field(u.d(), v.d());
    const long d = u.d();
    if (half_basis(d)) {
        // omega^2 = omega - (1+d)/4
        Int c((1 + d) / 4);
        return RingElem(d, u.a() * v.a() - c * u.b() * v.b(),
                        u.a() * v.b() + u.b() * v.a() + u.b() * v.b());
    }
    return RingElem(d, u.a() * v.a() - Int(d) * u.b() * v.b(), u.a() * v.b() + u.b() * v.a());
}

std::optional<RingElem> ring_from_field(const FieldElem& u) {
    if (half_basis(u.d())) {
        Rat b = 2 * u.y();
        Rat a = u.x() - u.y();
        if (!is_integer(a) || !is_integer(b)) return std::nullopt;
        return RingElem(u.d(), numerator(a), numerator(b));
    }
    if (!is_integer(u.x()) || !is_integer(u.y())) return std::nullopt;
    return RingElem(u.d(), numerator(u.x()), numerator(u.y()));
}

std::vector<RingElem> enumerate_disk(long d, const Rat& bound_sq) {
    check_field_param(d);
    std::vector<RingElem> out;
    if (bound_sq <= 0) return out;
    if (bound_sq > Rat(1000000000000LL)) {
        throw std::domain_error("disk bound too large");
    }

    // Conservative integer ranges from a float estimate, then an exact filter.
    const double bf = to_double(bound_sq);
    const bool half = half_basis(d);
    const long bmax = static_cast<long>(std::sqrt(bf * (half ? 4.0 : 1.0) / d)) + 2;
    for (long b = -bmax; b <= bmax; ++b) {
        const double re_shift = half ? 0.5 * b : 0.0;
        const long arange = static_cast<long>(std::sqrt(bf)) + static_cast<long>(std::fabs(re_shift)) + 2;
        for (long a = -arange; a <= arange; ++a) {
            RingElem z(d, a, b);
            if (z.norm() * denominator(bound_sq) < numerator(bound_sq)) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), [](const RingElem& u, const RingElem& v) {
        return std::make_tuple(u.norm(), u.a(), u.b()) < std::make_tuple(v.norm(), v.a(), v.b());
    });
    return out;
}

}  // namespace qstbc
