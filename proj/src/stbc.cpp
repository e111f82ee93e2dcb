#include "qstbc/stbc.hpp"

namespace qstbc {

CodeSpec make_code(long d, const QuadPoly& poly, const RingElem& gamma, const SearchBudget& budget) {
    check_field_param(d);
    if (poly.d() != d || gamma.d() != d) {
        throw std::invalid_argument("polynomial and gamma must live over Q(sqrt(-" + std::to_string(d) + "))");
    }
    if (gamma.is_zero()) throw std::domain_error("gamma must be nonzero");
    if (!poly.irreducible()) {
        throw std::domain_error("reducible polynomial: the code family needs an irreducible quadratic");
    }

    NormStatus status = decide_norm(poly, gamma.to_field(), budget);
    if (status.verdict == NormVerdict::IsNorm) {
        throw gamma_is_norm_error("gamma-is-norm: gamma is a relative norm, the code cannot have full diversity",
                                  *status.witness);
    }

    Rat gram = base_gen_matrix(d).gram_det_sq;
    Rat c_det_sq = Rat(gamma.norm()) * Rat(poly.discriminant().norm()) * gram * gram;
    CodeSpec spec{d, poly, gamma, c_det_sq, Rat(1) / c_det_sq, std::move(status)};
    return spec;
}

Codeword encode(const CodeSpec& spec, const Symbols& symbols) {
    for (const RingElem& s : symbols) {
        if (s.d() != spec.d) throw std::invalid_argument("symbols from the wrong field");
    }
    return Codeword{spec, symbols};
}

Eigen::Matrix2cd Codeword::matrix() const {
    ExtElem x1(spec.poly, symbols[0].to_field(), symbols[1].to_field());
    ExtElem x2(spec.poly, symbols[2].to_field(), symbols[3].to_field());
    std::complex<double> g = spec.gamma.to_field().to_complex();
    Eigen::Matrix2cd m;
    m << x1.embed(1), x2.embed(1), g * x2.embed(2), x1.embed(2);
    return m;
}

FieldElem det_codeword(const Codeword& w) {
    ExtElem x1(w.spec.poly, w.symbols[0].to_field(), w.symbols[1].to_field());
    ExtElem x2(w.spec.poly, w.symbols[2].to_field(), w.symbols[3].to_field());
    return x1.rel_norm() - w.spec.gamma.to_field() * x2.rel_norm();
}

Rat detmin_enumerate(const CodeSpec& spec, long box) {
    if (box < 1) throw std::domain_error("symbol box must be at least 1");
    const long d = spec.d;

    // N(a + b alpha) depends only on the (a, b) pair, so tabulate the norms
    // of one layer and take the minimum over pairs of table entries.
    std::vector<FieldElem> norms;
    std::size_t zero_index = 0;
    for (long a1 = -box; a1 <= box; ++a1)
        for (long a2 = -box; a2 <= box; ++a2)
            for (long b1 = -box; b1 <= box; ++b1)
                for (long b2 = -box; b2 <= box; ++b2) {
                    if (a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0) zero_index = norms.size();
                    ExtElem x(spec.poly, RingElem(d, a1, a2).to_field(), RingElem(d, b1, b2).to_field());
                    norms.push_back(x.rel_norm());
                }
    FieldElem gamma = spec.gamma.to_field();
    std::optional<Rat> best;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        for (std::size_t j = 0; j < norms.size(); ++j) {
            if (i == zero_index && j == zero_index) continue;
            Rat v = (norms[i] - gamma * norms[j]).abs_sq();
            if (!best || v < *best) best = v;
        }
    }
    return *best;
}

Eigen::Matrix2cd balanced_encode(const CodeSpec& spec, const Symbols& symbols) {
    Codeword w = encode(spec, symbols);
    ExtElem x2(spec.poly, symbols[2].to_field(), symbols[3].to_field());
    std::complex<double> sg = principal_sqrt(spec.gamma.to_field().to_complex());
    Eigen::Matrix2cd m = w.matrix();
    m(0, 1) = sg * x2.embed(1);
    m(1, 0) = sg * x2.embed(2);
    return m;
}

std::strong_ordering compare(const CodeSpec& c1, const CodeSpec& c2) {
    if (c1.c_det_sq < c2.c_det_sq) return std::strong_ordering::less;
    if (c2.c_det_sq < c1.c_det_sq) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::pair<ComplexGen, ComplexGen> two_layer_generators(const CodeSpec& spec) {
    std::complex<double> a1 = spec.poly.root(1);
    std::complex<double> a2 = spec.poly.root(2);
    std::complex<double> g = spec.gamma.to_field().to_complex();
    Eigen::Matrix2cd g1, g2;
    g1 << 1.0, a1, 1.0, a2;
    g2 << 1.0, a1, g, g * a2;
    return {ComplexGen(g1), ComplexGen(g2)};
}

}  // namespace qstbc
