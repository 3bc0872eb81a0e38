#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spde/spectral.hpp"

// The nonlinear drift F, its dissipativity certificates, and the Yosida /
// Mehler regularizing family.
//
// Conventions. zeta2 is the one-sided Lipschitz budget of F: the shifted
// map G = F - zeta2*I is dissipative, which makes the resolvent equation
//     y - delta (F(y) - zeta2 y) = x
// uniquely solvable for every delta > 0. For the preset drifts:
//   Linear            F(x) = zeta2 x                    (G = 0)
//   NemytskiiGradient F(f)(xi) = -phi'(f(xi)) - zeta2 f(xi), phi' nondecreasing
//   KernelCubic       F(x) = P3(x) + zeta2 x, P3 a symmetric trilinear form
// Nonlinear terms are evaluated pointwise / by quadrature on the collocation
// grid and projected back to the first N modes, discarding aliased content
// (grid_size >= 3 n_modes keeps the cubic clean).

namespace spde {

struct KernelSpec {
    enum class Form { RankOneProduct, FullTensor };

    Form form = Form::RankOneProduct;
    Vec factor;                  // grid field k(xi); kernel is -k(x1)k(x2)k(x3)k(x)
    std::vector<double> tensor;  // M^4 values, row-major (x1,x2,x3,x)
    int tensor_m = 0;

    static KernelSpec rank_one(Vec factor_grid);
    // Validates symmetry in the first three slots and nonpositive entries.
    static KernelSpec full_tensor(std::vector<double> values, int m);

    // Binary format: magic "KTEN", u32 grid size M, u64 payload byte count,
    // then M^4 little-endian doubles, row-major.
    static KernelSpec load_kten(const std::string& path);
    void save_kten(const std::string& path) const;
};

struct DriftSpec {
    enum class Variant { Zero, Linear, NemytskiiGradient, KernelCubic };

    Variant variant = Variant::Zero;
    std::vector<double> phi_prime;  // polynomial coefficients of phi', ascending
    double zeta2 = 0.0;
    KernelSpec kernel;
    double zeta = 0.0;  // joint dissipativity bound for A + F: max_k a_k + zeta2

    static DriftSpec zero(const SpectralModel& model);
    static DriftSpec linear(const SpectralModel& model, double zeta2);
    static DriftSpec nemytskii(const SpectralModel& model,
                               std::vector<double> phi_prime, double zeta2);
    static DriftSpec kernel_cubic(const SpectralModel& model, KernelSpec kernel,
                                  double zeta2);
};

struct DissipativityReport {
    double zeta2_hat = 0.0;  // empirical sup of <F(x)-F(y), x-y> / |x-y|^2
    int n_pairs = 0;
    Vec worst_x, worst_y;    // pair attaining the sup
};

struct YosidaReport {
    double delta = 0.0;
    int n_pairs = 0;
    // Violations of the three Yosida bounds, relative to the slack scales
    // described in yosida_property_check. Nonpositive means "holds".
    double lipschitz_excess = 0.0;  // |G_d(x)-G_d(z)| vs (2/delta)|x-z|
    double monotone_excess = 0.0;   // <G_d(x)-G_d(z), x-z> vs 0
    double norm_excess = 0.0;       // |G_d(x)| vs |G(x)|
    double mean_approx_error = 0.0; // mean |F_d(x) - F(x)| over sampled x
    double max_approx_error = 0.0;
    bool pass = false;
    Vec witness_x, witness_z;       // pair attaining the largest excess
};

Vec drift_eval(const SpectralModel& model, const DriftSpec& drift, const Vec& x);

// Trilinear form V(f,g,h) as N-mode coefficients; symmetric in (f,g,h).
Vec kernel_apply(const SpectralModel& model, const KernelSpec& kernel,
                 const Vec& f, const Vec& g, const Vec& h);

DissipativityReport dissipativity_estimate(const SpectralModel& model,
                                           const DriftSpec& drift, int n_pairs,
                                           std::uint64_t sampler_seed);

// Solves y - delta (F(y) - zeta2 y) = x to residual <= 1e-10 (1 + |x|).
Vec yosida_resolve(const SpectralModel& model, const DriftSpec& drift,
                   double delta, const Vec& x);

// F_delta(x) = F(x_delta) with x_delta = yosida_resolve(x).
Vec yosida_F(const SpectralModel& model, const DriftSpec& drift, double delta,
             const Vec& x);

// Gaussian smoothing of F_delta with kernel N(e^{-(s/2) Q^{-1}} x, Q_s),
// Q_s = Q (I - e^{-s Q^{-1}}), estimated by Monte Carlo over n_samples draws.
// smoothing_cov (the diagonal of Q) must be strictly positive.
Vec mehler_smooth(const SpectralModel& model, const DriftSpec& drift,
                  double delta, double s, const Vec& smoothing_cov,
                  const Vec& x, int n_samples, std::uint64_t seed);

// Samples n_pairs pairs and checks the resolvent-family bounds
//   |G_d(x)-G_d(z)| <= (2/delta)|x-z|,
//   <G_d(x)-G_d(z), x-z> <= 0,
//   |G_d(x)| <= |G(x)|,
// each with 1e-8 relative slack, and records |F_d - F| at the sampled points
// so callers can assert convergence along a delta ladder.
YosidaReport yosida_property_check(const SpectralModel& model,
                                   const DriftSpec& drift, double delta,
                                   int n_pairs, std::uint64_t seed);

}  // namespace spde
