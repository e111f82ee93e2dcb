#pragma once

#include "qstbc/quadext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qstbc {

// Decides whether gamma is a relative norm of K = F(alpha1) over F, as far
// as the two congruence obstructions and a bounded witness search can tell.
// A verdict is never claimed without a checkable artifact: IsNorm carries an
// element of exact norm gamma, NotNorm carries the congruence record that
// rules the norm equation out p-adically. Everything else stays Unknown.

enum class NormVerdict { IsNorm, NotNorm, Unknown };

struct Obstruction {
    int prime = 0;  // 2 or 3
    std::string congruence;
};

struct NormStatus {
    NormVerdict verdict = NormVerdict::Unknown;
    std::optional<ExtElem> witness;         // present iff IsNorm
    std::optional<Obstruction> obstruction; // present iff NotNorm
};

struct SearchBudget {
    Rat radius_sq = 50;
    std::vector<long> denominators = {1, 2};
};

// gamma = -1 is not a norm of K = F(sqrt(-3)) over F = Q(sqrt(dF)) when
// dF = 1 (mod 3): F embeds into Q_3 by Hensel's lemma and the norm form
// a^2 + 3b^2 never hits -1 = 2 (mod 3) there. Returns true only when both
// hypotheses hold for the literal integer dF (ext_disc = -3 times a nonzero
// square in F; dF = 1 mod 3); false means "no certificate", never "is a norm".
bool obstruction_minus_one_mod3(const Int& dF, const RingElem& ext_disc);

// The 2-adic analogue: -1 is not a norm of K = F(i) over F = Q(sqrt(dF))
// when dF = 1 (mod 8), via the form a^2 + b^2 over Q_2.
bool obstruction_minus_one_mod8(const Int& dF, const RingElem& ext_disc);

// Scans x = (u + v*alpha1)/m with u, v in the O_F-disk |.|^2 < radius_sq*m^2
// and m over the given denominators (ascending); returns the first x with
// rel_norm(x) = gamma exactly, in the canonical order (m, then u, then v by
// the disk order). Absence of a witness proves nothing.
std::optional<ExtElem> witness_search(const QuadPoly& poly, const FieldElem& gamma,
                                      const Rat& radius_sq, const std::vector<long>& denominators);

inline std::optional<ExtElem> witness_search(const QuadPoly& poly, const FieldElem& gamma,
                                             const SearchBudget& budget = {}) {
    return witness_search(poly, gamma, budget.radius_sq, budget.denominators);
}

// IsNorm when the witness search succeeds; NotNorm when -gamma is a
// witnessed norm and an applicable obstruction certifies -1 is not one
// (so gamma = -N(w) cannot be a norm either); Unknown otherwise.
// Throws std::domain_error on a reducible polynomial or gamma = 0.
NormStatus decide_norm(const QuadPoly& poly, const FieldElem& gamma,
                       const SearchBudget& budget = {});

}  // namespace qstbc
