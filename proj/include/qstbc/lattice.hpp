#pragma once

#include "qstbc/rational.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace qstbc {

// Generator matrices of real and complex lattices, the realification that
// represents a complex lattice as a real one of doubled dimension, and the
// normalized density / normalized minimum determinant bookkeeping. The float
// side is for identities and reports; exact rationals are threaded alongside
// wherever closed forms exist and take precedence in reports.

// Rows are basis vectors. Construction rejects rank-deficient matrices
// (|det| <= 1e-12 relative to the Hadamard bound).
struct RealGen {
    explicit RealGen(Eigen::MatrixXd entries);

    int n() const { return static_cast<int>(m.rows()); }
    double abs_det() const { return std::abs(m.determinant()); }

    Eigen::MatrixXd m;
};

struct ComplexGen {
    explicit ComplexGen(Eigen::MatrixXcd entries);

    int n() const { return static_cast<int>(m.rows()); }
    double abs_det() const { return std::abs(m.determinant()); }

    Eigen::MatrixXcd m;
};

// The 2n x 2n real matrix with 2x2 blocks [[Re g, -Im g], [Im g, Re g]]
// per entry of G; |det(realify(G))| = |det G|^2.
RealGen realify(const ComplexGen& g);

struct BaseLattice {
    RealGen gen;     // the 2x2 generator matrix M of O_F as a real lattice
    Rat gram_det_sq; // |det M|^2, exact: d or d/4 by the congruence class of -d
};

BaseLattice base_gen_matrix(long d);

// prod over layers of |det G_l|^2 * |det M_l|^n for an n*L-dimensional
// composed lattice.
double composed_abs_det(const std::vector<std::pair<ComplexGen, RealGen>>& layers);

struct DensityReport {
    Rat det_min;
    Rat gram_abs_det;
    Rat rho;           // det_min^(2n) / gram_abs_det
    double rho_float;
    double delta;      // rho^(1/2n)
    int n;
};

// Throws std::domain_error unless det_min > 0 and gram_abs_det > 0.
DensityReport density(const Rat& det_min, const Rat& gram_abs_det, int n);

}  // namespace qstbc
