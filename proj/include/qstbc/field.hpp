#pragma once

#include "qstbc/rational.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace qstbc {

// Arithmetic in the imaginary quadratic field F = Q(sqrt(-d)) and its ring of
// integers O_F, with d a positive squarefree integer. Elements carry d so
// that values from different fields never silently mix. All magnitude
// comparisons go through exact squared moduli; nothing here touches floating
// point except the to_complex() embeddings.

bool is_squarefree(long d);

// Throws std::invalid_argument unless d is positive and squarefree.
void check_field_param(long d);

// True iff O_F has the half-integer basis {1, (1+sqrt(-d))/2},
// i.e. -d = 1 (mod 4).
inline bool half_basis(long d) { return mod(Int(-d), 4) == 1; }

// x + y*sqrt(-d) with x, y rational.
class FieldElem {
public:
    FieldElem(long d, Rat x, Rat y);

    long d() const { return d_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    // |x + y sqrt(-d)|^2 = x^2 + d y^2, exact.
    Rat abs_sq() const;

    FieldElem conj() const { return FieldElem(d_, x_, -y_); }
    FieldElem inv() const;  // throws std::domain_error on zero

    std::complex<double> to_complex() const;

    friend FieldElem operator+(const FieldElem& u, const FieldElem& v);
    friend FieldElem operator-(const FieldElem& u, const FieldElem& v);
    friend FieldElem operator*(const FieldElem& u, const FieldElem& v);
    friend FieldElem operator/(const FieldElem& u, const FieldElem& v);
    FieldElem operator-() const { return FieldElem(d_, -x_, -y_); }

    bool operator==(const FieldElem& o) const {
        return d_ == o.d_ && x_ == o.x_ && y_ == o.y_;
    }

private:
    long d_;
    Rat x_, y_;
};

inline FieldElem field_rational(long d, Rat x) { return FieldElem(d, std::move(x), 0); }
inline FieldElem field_zero(long d) { return FieldElem(d, 0, 0); }
inline FieldElem field_one(long d) { return FieldElem(d, 1, 0); }
inline FieldElem sqrt_minus_d(long d) { return FieldElem(d, 0, 1); }

// A square root of z in F when one exists (decided exactly), else nullopt.
// Canonical root: x() > 0, or x() == 0 and y() >= 0.
std::optional<FieldElem> sqrt_in_field(const FieldElem& z);

// a + b*omega_d where omega_d = (1+sqrt(-d))/2 if -d = 1 (mod 4),
// omega_d = sqrt(-d) otherwise.
class RingElem {
public:
    RingElem(long d, Int a, Int b);

    long d() const { return d_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    FieldElem to_field() const;

    // Exact |.|^2; a nonnegative integer (the absolute norm).
    Int norm() const;

    RingElem conj() const;

    friend RingElem operator+(const RingElem& u, const RingElem& v);
    friend RingElem operator-(const RingElem& u, const RingElem& v);
    friend RingElem operator*(const RingElem& u, const RingElem& v);
    RingElem operator-() const { return RingElem(d_, -a_, -b_); }

    bool operator==(const RingElem& o) const {
        return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
    }

private:
    long d_;
    Int a_, b_;
};

inline RingElem ring_integer(long d, Int n) { return RingElem(d, std::move(n), 0); }
inline RingElem ring_omega(long d) { return RingElem(d, 0, 1); }

// Lossless re-embedding of a field element into O_F, when it is integral.
std::optional<RingElem> ring_from_field(const FieldElem& u);

// All z in O_F with |z|^2 < bound_sq (strict), ordered by (|z|^2, a, b).
std::vector<RingElem> enumerate_disk(long d, const Rat& bound_sq);

}  // namespace qstbc
