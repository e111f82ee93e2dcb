#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstbc/quadext.hpp"

#include <random>

using namespace qstbc;

namespace {

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    long field_param() {
        static const long ds[] = {1, 2, 3, 5, 7, 11};
        return ds[rng() % 6];
    }
    Rat rational(long num_range = 8, long den_range = 3) {
        long num = static_cast<long>(rng() % (2 * num_range + 1)) - num_range;
        long den = 1 + static_cast<long>(rng() % den_range);
        return Rat(num, den);
    }
    RingElem ring_elem(long d, long range = 4) {
        long a = static_cast<long>(rng() % (2 * range + 1)) - range;
        long b = static_cast<long>(rng() % (2 * range + 1)) - range;
        return RingElem(d, a, b);
    }
    // any monic quadratic with nonzero discriminant
    QuadPoly poly(long d) {
        while (true) {
            QuadPoly p(ring_elem(d), ring_elem(d));
            if (!p.discriminant().is_zero()) return p;
        }
    }
    ExtElem ext_elem(const QuadPoly& p) {
        long d = p.d();
        return ExtElem(p, FieldElem(d, rational(), rational()), FieldElem(d, rational(), rational()));
    }
};

QuadPoly poly_int(long d, long pa, long pb, long qa, long qb) {
    return QuadPoly(RingElem(d, pa, pb), RingElem(d, qa, qb));
}

}  // namespace

TEST_CASE("discriminant examples") {
    CHECK(poly_int(2, -1, 0, 1, 0).discriminant() == ring_integer(2, -3));  // x^2 - x + 1
    CHECK(poly_int(7, 0, 0, 1, 0).discriminant() == ring_integer(7, -4));   // x^2 + 1
    CHECK(poly_int(5, 0, 0, 0, 0).discriminant() == ring_integer(5, 0));    // x^2
}

TEST_CASE("irreducibility over the right field") {
    // x^2 +- sqrt(-2) x - 1 over Q(sqrt(-2))
    CHECK(poly_int(2, 0, 1, -1, 0).irreducible());
    CHECK(poly_int(2, 0, -1, -1, 0).irreducible());
    // x^2 +- x over Q(sqrt(-11)): disc is a square
    CHECK(!poly_int(11, 1, 0, 0, 0).irreducible());
    CHECK(!poly_int(11, -1, 0, 0, 0).irreducible());
    // x^2 +- x + 1 over Q(sqrt(-7))
    CHECK(poly_int(7, 1, 0, 1, 0).irreducible());
    CHECK(poly_int(7, -1, 0, 1, 0).irreducible());
}

TEST_CASE("relative norm examples") {
    QuadPoly p = poly_int(2, 0, 1, -1, 0);  // x^2 + sqrt(-2) x - 1
    CHECK(ext_scalar(p, field_one(2)).rel_norm() == field_one(2));
    // rel_norm(alpha1) = q = -1 (the product of the roots)
    CHECK(ext_alpha(p).rel_norm() == field_rational(2, -1));

    QuadPoly p7 = poly_int(7, -1, 0, 1, 0);
    CHECK(ext_alpha(p7).rel_norm() == field_one(7));
}

TEST_CASE("relative norm is multiplicative") {
    Gen gen(2024);
    for (int i = 0; i < 1000; ++i) {
        QuadPoly p = gen.poly(gen.field_param());
        ExtElem x = gen.ext_elem(p);
        ExtElem y = gen.ext_elem(p);
        CHECK((x * y).rel_norm() == x.rel_norm() * y.rel_norm());
    }
}

TEST_CASE("conjugation realizes the second root") {
    Gen gen(555);
    for (int i = 0; i < 500; ++i) {
        QuadPoly p = gen.poly(gen.field_param());
        ExtElem x = gen.ext_elem(p);
        ExtElem prod = x * x.conjugate();
        // x * conj(x) is the scalar rel_norm(x)
        CHECK(prod.b().is_zero());
        CHECK(prod.a() == x.rel_norm());
    }
}

TEST_CASE("numeric embeddings") {
    QuadPoly p7 = poly_int(7, 0, 0, 1, 0);  // x^2 + 1: alpha1 = i, alpha2 = -i
    CHECK(std::abs(ext_alpha(p7).embed(1) - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(ext_alpha(p7).embed(2) - std::complex<double>(0, -1)) < 1e-12);

    QuadPoly p2 = poly_int(2, -1, 0, 1, 0);  // x^2 - x + 1: alpha1 = (1+sqrt(-3))/2
    CHECK(std::abs(ext_alpha(p2).embed(1) - std::complex<double>(0.5, 0.86602540378443865)) < 1e-12);

    ExtElem one = ext_scalar(p2, field_one(2));
    CHECK(std::abs(one.embed(1) - 1.0) < 1e-15);
    CHECK(std::abs(one.embed(2) - 1.0) < 1e-15);
}

TEST_CASE("embeddings are consistent with the exact norm") {
    Gen gen(808);
    for (int i = 0; i < 500; ++i) {
        QuadPoly p = gen.poly(gen.field_param());
        ExtElem x = gen.ext_elem(p);
        std::complex<double> lhs = x.embed(1) * x.embed(2);
        CHECK(std::abs(lhs - x.rel_norm().to_complex()) < 1e-9);

        std::complex<double> diff = ext_alpha(p).embed(1) - ext_alpha(p).embed(2);
        CHECK(std::abs(diff * diff - p.discriminant().to_field().to_complex()) < 1e-9);
    }
}

TEST_CASE("root translation keeps the discriminant") {
    Gen gen(99);
    for (int i = 0; i < 500; ++i) {
        long d = gen.field_param();
        QuadPoly p = gen.poly(d);
        RingElem p0 = gen.ring_elem(d);
        QuadPoly t = translate_roots(p, p0);
        CHECK(t.discriminant() == p.discriminant());
        // and the coefficient moves as p - 2 p0
        CHECK(t.p() == p.p() - ring_integer(d, 2) * p0);
    }
}
