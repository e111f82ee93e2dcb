#include "qstbc/normcert.hpp"

#include <cstdint>

namespace qstbc {

namespace {

// ext_disc = c * (nonzero square in F)?
bool disc_matches(const RingElem& ext_disc, long c) {
    FieldElem disc = ext_disc.to_field();
    if (disc.is_zero()) return false;
    return sqrt_in_field(disc / field_rational(disc.d(), c)).has_value();
}

// N(u + v*alpha) = u^2 - p u v + q v^2, all in O_F. The scan is the hot
// path of every certificate, so when all coordinates fit comfortably into
// int64 it runs on __int128 arithmetic; otherwise it falls back to exact
// big-int ring arithmetic. Both paths visit pairs in the same order.
struct I64Ring {
    std::int64_t a, b;
};

// With d <= 1000, coefficient coordinates below 2^10 and disk coordinates
// below 2^15, every intermediate in the norm evaluation stays under 2^58.
bool fits(const Int& v, long bits) {
    const Int lim = Int(1) << bits;
    return v > -lim && v < lim;
}

I64Ring mul(const I64Ring& u, const I64Ring& v, bool half, std::int64_t c, std::int64_t d) {
    __int128 aa = static_cast<__int128>(u.a) * v.a;
    __int128 bb = static_cast<__int128>(u.b) * v.b;
    __int128 cross = static_cast<__int128>(u.a) * v.b + static_cast<__int128>(u.b) * v.a;
    __int128 ra, rb;
    if (half) {
        ra = aa - c * bb;
        rb = cross + bb;
    } else {
        ra = aa - static_cast<__int128>(d) * bb;
        rb = cross;
    }
    return {static_cast<std::int64_t>(ra), static_cast<std::int64_t>(rb)};
}

std::optional<std::pair<std::size_t, std::size_t>> scan_i64(const std::vector<RingElem>& disk,
                                                            const RingElem& p, const RingElem& q,
                                                            const RingElem& target) {
    const long d = p.d();
    const bool half = half_basis(d);
    const std::int64_t c = half ? (1 + d) / 4 : 0;

    std::vector<I64Ring> e(disk.size());
    for (std::size_t i = 0; i < disk.size(); ++i) {
        e[i] = {disk[i].a().convert_to<std::int64_t>(), disk[i].b().convert_to<std::int64_t>()};
    }
    I64Ring pe{p.a().convert_to<std::int64_t>(), p.b().convert_to<std::int64_t>()};
    I64Ring qe{q.a().convert_to<std::int64_t>(), q.b().convert_to<std::int64_t>()};
    I64Ring te{target.a().convert_to<std::int64_t>(), target.b().convert_to<std::int64_t>()};

    for (std::size_t i = 0; i < e.size(); ++i) {
        I64Ring uu = mul(e[i], e[i], half, c, d);
        for (std::size_t j = 0; j < e.size(); ++j) {
            I64Ring uv = mul(e[i], e[j], half, c, d);
            I64Ring vv = mul(e[j], e[j], half, c, d);
            I64Ring puv = mul(pe, uv, half, c, d);
            I64Ring qvv = mul(qe, vv, half, c, d);
            if (uu.a - puv.a + qvv.a == te.a && uu.b - puv.b + qvv.b == te.b) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> scan_exact(const std::vector<RingElem>& disk,
                                                              const RingElem& p, const RingElem& q,
                                                              const RingElem& target) {
    for (std::size_t i = 0; i < disk.size(); ++i) {
        RingElem uu = disk[i] * disk[i];
        for (std::size_t j = 0; j < disk.size(); ++j) {
            RingElem n = uu - p * (disk[i] * disk[j]) + q * (disk[j] * disk[j]);
            if (n == target) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace

bool obstruction_minus_one_mod3(const Int& dF, const RingElem& ext_disc) {
    if (mod(dF, 3) != 1) return false;
    return disc_matches(ext_disc, -3);
}

bool obstruction_minus_one_mod8(const Int& dF, const RingElem& ext_disc) {
    if (mod(dF, 8) != 1) return false;
    return disc_matches(ext_disc, -1);
}

std::optional<ExtElem> witness_search(const QuadPoly& poly, const FieldElem& gamma,
                                      const Rat& radius_sq, const std::vector<long>& denominators) {
    if (gamma.d() != poly.d()) throw std::invalid_argument("gamma from the wrong field");
    if (!(radius_sq > 0)) throw std::domain_error("witness search radius must be positive");
    if (denominators.empty()) throw std::domain_error("witness search needs at least one denominator");

    std::vector<long> ms = denominators;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    const long d = poly.d();
    for (long m : ms) {
        if (m < 1) throw std::domain_error("denominators must be positive");
        // rel_norm((u + v alpha)/m) = gamma  <=>  N(u + v alpha) = gamma m^2,
        // and the left side lies in O_F, so skip m unless gamma m^2 does too.
        FieldElem gm = gamma * field_rational(d, Rat(Int(m) * m));
        auto target = ring_from_field(gm);
        if (!target) continue;

        std::vector<RingElem> disk = enumerate_disk(d, radius_sq * Rat(Int(m) * m));

        bool small = d <= 1000 && fits(poly.p().a(), 10) && fits(poly.p().b(), 10) &&
                     fits(poly.q().a(), 10) && fits(poly.q().b(), 10) && fits(target->a(), 10) &&
                     fits(target->b(), 10);
        for (const RingElem& z : disk) {
            if (!small) break;
            small = fits(z.a(), 15) && fits(z.b(), 15);
        }

        auto hit = small ? scan_i64(disk, poly.p(), poly.q(), *target)
                         : scan_exact(disk, poly.p(), poly.q(), *target);
        if (hit) {
            Rat inv_m(1, m);
            FieldElem a = disk[hit->first].to_field() * field_rational(d, inv_m);
            FieldElem b = disk[hit->second].to_field() * field_rational(d, inv_m);
            ExtElem w(poly, a, b);
            if (!(w.rel_norm() == gamma)) {
                throw std::logic_error("witness scan returned an element of the wrong norm");
            }
            return w;
        }
    }
    return std::nullopt;
}

NormStatus decide_norm(const QuadPoly& poly, const FieldElem& gamma, const SearchBudget& budget) {
    if (!poly.irreducible()) {
        throw std::domain_error("norm decision requires an irreducible polynomial");
    }
    if (gamma.is_zero()) throw std::domain_error("gamma must be nonzero");

    if (auto w = witness_search(poly, gamma, budget)) {
        return NormStatus{NormVerdict::IsNorm, std::move(w), std::nullopt};
    }

    // gamma = -N(w) and -1 not a norm together rule gamma out: gamma = N(x)
    // would give -1 = N(x / w). The gamma = -1 case is the paper's, with w = 1.
    const Int dF = -Int(poly.d());
    const RingElem disc = poly.discriminant();
    int prime = 0;
    if (obstruction_minus_one_mod3(dF, disc)) {
        prime = 3;
    } else if (obstruction_minus_one_mod8(dF, disc)) {
        prime = 2;
    }
    if (prime != 0) {
        if (auto neg = witness_search(poly, -gamma, budget)) {
            Obstruction ob;
            ob.prime = prime;
            std::string dstr = dF.str();
            if (prime == 3) {
                ob.congruence = "d = " + dstr + " = 1 (mod 3): K = F(sqrt(-3)) embeds in Q_3(sqrt(-3)) "
                                "and the norm form a^2 + 3b^2 never equals -1 = 2 (mod 3) there";
            } else {
                ob.congruence = "d = " + dstr + " = 1 (mod 8): K = F(i) embeds in Q_2(i) "
                                "and the norm form a^2 + b^2 never equals -1 over Q_2";
            }
            if (!((-gamma) == field_one(poly.d()))) {
                ob.congruence += "; -gamma is a witnessed norm, so gamma cannot be one";
            }
            return NormStatus{NormVerdict::NotNorm, std::nullopt, std::move(ob)};
        }
    }
    return NormStatus{NormVerdict::Unknown, std::nullopt, std::nullopt};
}

}  // namespace qstbc
