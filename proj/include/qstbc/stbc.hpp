#pragma once

#include "qstbc/lattice.hpp"
#include "qstbc/normcert.hpp"

#include <array>
#include <compare>

namespace qstbc {

// The 2x2 code family C(F, alpha1, alpha2, gamma): codewords
//
//     X = [ a + b alpha1        c + d alpha1 ]
//         [ gamma (c + d alpha2)  a + b alpha2 ]
//
// with information symbols a, b, c, d in O_F and gamma in O_F not a relative
// norm of F(alpha1)/F. Validity rests on the norm certificate: a code whose
// gamma has a norm witness is rejected outright, a code whose status is
// merely Unknown is constructed but reported unverified.

struct CodeSpec {
    long d;
    QuadPoly poly;
    RingElem gamma;
    Rat c_det_sq;  // |gamma|^2 |disc|^2 |det M|^4
    Rat rho;       // 1 / c_det_sq
    NormStatus norm_status;

    bool verified() const { return norm_status.verdict == NormVerdict::NotNorm; }
};

struct gamma_is_norm_error : std::domain_error {
    gamma_is_norm_error(std::string msg, ExtElem w)
        : std::domain_error(std::move(msg)), witness(std::move(w)) {}
    ExtElem witness;
};

// Throws std::domain_error("reducible ...") for a reducible polynomial,
// std::domain_error for gamma = 0, gamma_is_norm_error (with the witness)
// when the certificate finds gamma to be a norm.
CodeSpec make_code(long d, const QuadPoly& poly, const RingElem& gamma,
                   const SearchBudget& budget = {});

// Symbols (a, b, c, d) of Definition 5's layout, in that order.
using Symbols = std::array<RingElem, 4>;

struct Codeword {
    CodeSpec spec;
    Symbols symbols;

    // Double-precision materialization via the embeddings.
    Eigen::Matrix2cd matrix() const;
};

Codeword encode(const CodeSpec& spec, const Symbols& symbols);

// Exact determinant N(a + b alpha1) - gamma N(c + d alpha1); lies in O_F.
FieldElem det_codeword(const Codeword& w);

// Minimum exact |det|^2 over all nonzero symbol tuples with coordinates in
// [-box, box]^8.
Rat detmin_enumerate(const CodeSpec& spec, long box);

// Codeword variant with sqrt(gamma) on both off-diagonal entries; same
// determinant, equalized per-antenna energy when |gamma| = 1.
Eigen::Matrix2cd balanced_encode(const CodeSpec& spec, const Symbols& symbols);

// Determinant criterion: smaller c_det means the better code (both codes are
// assumed to share det_min = 1, which make_code's certificate context gives).
std::strong_ordering compare(const CodeSpec& c1, const CodeSpec& c2);

// The two layer generator matrices G1 = [[1, a1], [1, a2]] and
// G2 = [[1, a1], [gamma, gamma a2]] of the composed-lattice view.
std::pair<ComplexGen, ComplexGen> two_layer_generators(const CodeSpec& spec);

}  // namespace qstbc
