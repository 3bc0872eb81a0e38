#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

// Finite spectral representation of the state space.
//
// The linear operator A and the noise covariance C are simultaneously
// diagonal in a fixed sine basis e_k(xi) = sqrt(2) sin(k pi xi) on (0,1).
// A state is its coefficient vector in that basis; grid fields live on the
// uniform interior collocation grid xi_j = j/(M+1), j = 1..M. With
// M >= 2N the analysis/synthesis pair below is an exact inverse on the
// first N modes (discrete sine orthogonality), so linear dynamics never
// alias.

namespace spde {

using Vec = Eigen::VectorXd;

enum class Preset { HeatDirichlet, ScaledIdentityHOneNoise, Custom };

struct Norms {
    double l2 = 0.0;        // Euclidean norm of the coefficients (Parseval)
    double sup_grid = 0.0;  // max |field| over the collocation grid
    double h1 = 0.0;        // sqrt(sum (k pi)^2 v_k^2), sine-basis H1 seminorm
};

class SpectralModel {
public:
    static SpectralModel heat_dirichlet(int n_modes, int grid_size,
                                        double noise_scale = 1.0);
    // a_k = -1/2 for all k, c_k = (k pi)^(-2 beta); requires beta > 2.
    static SpectralModel scaled_identity_h1(int n_modes, int grid_size,
                                            double beta);
    static SpectralModel custom(std::vector<double> eigenvalues,
                                std::vector<double> noise_coeffs,
                                int grid_size);
    // Two-column CSV (a_k, c_k), one row per mode. '#' lines are skipped.
    static SpectralModel from_spectrum_csv(const std::string& path,
                                           int grid_size);

    int n_modes() const { return n_modes_; }
    int grid_size() const { return grid_size_; }
    Preset preset() const { return preset_; }
    const Vec& eigenvalues() const { return eigenvalues_; }
    const Vec& noise_coeffs() const { return noise_coeffs_; }
    double max_eigenvalue() const { return eigenvalues_.maxCoeff(); }

    // e^{tA} v, coefficient-wise; requires t >= 0.
    Vec semigroup_apply(double t, const Vec& v) const;

    // Covariance of the stochastic convolution at time t:
    // per-mode c_k (1 - e^{2 a_k t}) / (-2 a_k).
    Vec covariance_qt(double t) const;

    // Stationary covariance, per-mode c_k / (-2 a_k).
    Vec covariance_qinf() const;

    // n R(n, A) x = n/(n - a_k) x_k; requires n > 0.
    Vec resolvent_mollify(double n, const Vec& x) const;

    Vec to_grid(const Vec& coeffs) const;
    Vec from_grid(const Vec& field) const;

    Norms norms(const Vec& coeffs) const;

    double quad_weight() const { return quad_weight_; }
    double grid_node(int j) const { return (j + 1) * quad_weight_; }
    // M x N synthesis matrix, B(j,k) = sqrt(2) sin((k+1) pi xi_j).
    const Eigen::MatrixXd& basis() const { return basis_; }

    void check_state(const Vec& v) const;  // finite entries, length N
    void check_field(const Vec& f) const;  // length M

private:
    SpectralModel(Preset preset, std::vector<double> a, std::vector<double> c,
                  int grid_size);

    Preset preset_;
    int n_modes_;
    int grid_size_;
    Vec eigenvalues_;
    Vec noise_coeffs_;
    double quad_weight_;
    Eigen::MatrixXd basis_;
};

}  // namespace spde
