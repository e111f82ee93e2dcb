#pragma once

#include "qstbc/stbc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qstbc {

// Certified search for optimal codes over a fixed O_F: reduce p by
// translation parity classes, enumerate every (polynomial, gamma) pair whose
// reduced c_det would beat the target, and gate each one through the norm
// certificate. The search is certified exactly when every such pair is
// eliminated by an explicit norm witness; a single Unknown (budget gap) or
// NotNorm (a genuinely better code) spoils the certificate.

// Translation-reduced representative of p modulo 2 O_F: the element p - 2p0
// of minimal |.|, ties broken toward positive coordinates. Satisfies
// |p'|^2 <= (1+d)/4 in the half-integer-basis case and <= 1+d otherwise.
RingElem reduce_p(const RingElem& p);

struct Candidate {
    QuadPoly poly;
    RingElem disc;
};

// All irreducible x^2 + p x + q with p a minimal parity representative and
// |p^2 - 4q|^2 < bound_sq (strict), in deterministic (p, disc) disk order.
// The q values come from the exact disk |p^2 - 4q|^2 < bound_sq in 4 O_F.
std::vector<Candidate> enumerate_candidates(long d, const Rat& bound_sq);

struct GatedCandidate {
    QuadPoly poly;
    RingElem gamma;
    NormStatus status;
};

struct SearchReport {
    long d = 0;
    Rat bound_sq;  // target^2 on (|gamma| |disc|)^2, the |det M|^2-free c_det
    std::vector<GatedCandidate> survivors;
    std::optional<CodeSpec> best;
    bool certified = false;
};

// target_reduced_c_det is the reference |gamma| |p^2-4q| value with the
// |det M|^2 factor removed (it is constant over a fixed base field).
SearchReport optimal_search(long d, const Rat& target_reduced_c_det,
                            const SearchBudget& budget = {});

// All positive squarefree d with |det M|^4 < threshold_sq, i.e. whose base
// lattice is dense enough for a code over O_{Q(sqrt(-d))} to possibly beat
// a reference of that c_det.
std::vector<long> candidate_fields(const Rat& threshold_sq);

struct TableRow {
    CodeSpec spec;
    double printed_rho;   // the value printed in the published table
    bool flagged;         // recomputed rho disagrees with the printed one
    std::string field_str;
    std::string extension_str;
    std::string polynomial_str;
    std::string algebra_str;
    std::vector<std::string> notes;  // alternate readings for flagged rows
};

// The five published optimal codes over O_{Q(sqrt(-d))}, d in {1,2,3,7,11},
// rebuilt from their (field, polynomial, gamma) data with rho recomputed
// exactly and compared against the printed value (tolerance 5e-4).
std::vector<TableRow> reproduce_table(const SearchBudget& budget = {});

// The Golden code C(Q(i), (1+sqrt 5)/2, (1-sqrt 5)/2, i) as a CodeSpec;
// the classical rho = 1/25 baseline.
CodeSpec golden_code(const SearchBudget& budget = {});

// The published optimal code over O_{Q(sqrt(-d))} for d in {1,2,3,7,11}.
std::optional<CodeSpec> reference_code(long d, const SearchBudget& budget = {});

}  // namespace qstbc
