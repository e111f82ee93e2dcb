#include "qstbc/lattice.hpp"

#include "qstbc/field.hpp"

#include <cmath>
#include <stdexcept>

namespace qstbc {

namespace {

template <typename Matrix>
void check_full_rank(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("generator matrix must be square and nonempty");
    }
    double hadamard = 1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) hadamard *= m.row(i).norm();
    if (!(std::abs(m.determinant()) > 1e-12 * hadamard)) {
        throw std::domain_error("generator matrix is numerically rank-deficient");
    }
}

}  // namespace

RealGen::RealGen(Eigen::MatrixXd entries) : m(std::move(entries)) { check_full_rank(m); }

ComplexGen::ComplexGen(Eigen::MatrixXcd entries) : m(std::move(entries)) { check_full_rank(m); }

RealGen realify(const ComplexGen& g) {
    const int n = g.n();
    Eigen::MatrixXd r(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::complex<double>& e = g.m(i, j);
            r(2 * i, 2 * j) = e.real();
            r(2 * i, 2 * j + 1) = -e.imag();
            r(2 * i + 1, 2 * j) = e.imag();
            r(2 * i + 1, 2 * j + 1) = e.real();
        }
    }
    return RealGen(std::move(r));
}

BaseLattice base_gen_matrix(long d) {
    check_field_param(d);
    Eigen::MatrixXd m(2, 2);
    const double s = std::sqrt(static_cast<double>(d));
    if (half_basis(d)) {
        m << 1.0, 0.5, 0.0, s / 2.0;
        return BaseLattice{RealGen(std::move(m)), Rat(d, 4)};
    }
    m << 1.0, 0.0, 0.0, s;
    return BaseLattice{RealGen(std::move(m)), Rat(d)};
}

double composed_abs_det(const std::vector<std::pair<ComplexGen, RealGen>>& layers) {
    if (layers.empty()) throw std::invalid_argument("composed lattice needs at least one layer");
    const int n = layers.front().first.n();
    double acc = 1.0;
    for (const auto& [g, m] : layers) {
        if (g.n() != n) throw std::invalid_argument("composed layers must share a dimension");
        acc *= g.abs_det() * g.abs_det() * std::pow(m.abs_det(), n);
    }
    return acc;
}

DensityReport density(const Rat& det_min, const Rat& gram_abs_det, int n) {
    if (!(det_min > 0) || !(gram_abs_det > 0) || n < 1) {
        throw std::domain_error("density needs det_min > 0, gram determinant > 0 and n >= 1");
    }
    DensityReport r;
    r.det_min = det_min;
    r.gram_abs_det = gram_abs_det;
    r.rho = rat_pow(det_min, static_cast<unsigned>(2 * n)) / gram_abs_det;
    r.rho_float = to_double(r.rho);
    r.delta = std::pow(r.rho_float, 1.0 / (2.0 * n));
    r.n = n;
    return r;
}

}  // namespace qstbc
