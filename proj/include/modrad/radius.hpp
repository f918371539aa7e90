#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modrad/linking.hpp"

namespace modrad {

struct RadiusConfig {
    std::size_t grid_points = 1024;
    double refine_tol = 1e-10;
    std::size_t max_refine_iters = 200;
};

void validate_radius_config(const RadiusConfig& cfg);

// Output of a certified maximization over the unit circle. The reported
// value is an achieved objective value, so
//   value <= true sup <= value + certificate.
struct RadiusResult {
    double value = 0.0;
    double argmax_theta = 0.0;
    double certificate = 0.0;
    std::optional<std::vector<std::pair<double, double>>> profile_samples;
};

// (lambda M + conj(lambda) M*) / 2; Hermitian for unit lambda.
CMatrix re_part(Complex lambda, const CMatrix& m);

// w(M) = sup over unit lambda of ||re_part(lambda, M)||, with a Lipschitz
// certificate (the objective is ||M||-Lipschitz in the angle).
RadiusResult numerical_radius(const CMatrix& m, const RadiusConfig& cfg = {});

// Plain maximum over `samples` equispaced angles; independent cross-check
// with no refinement and no certificate.
double numerical_radius_bruteforce(const CMatrix& m, std::size_t samples);

// Module numerical radius: half the sup over unit lambda of the linking
// norm of omega_element(lambda, x).
RadiusResult omega(const ModuleElement& x, const RadiusConfig& cfg = {});

// Same with the uniform-grid profile samples attached, for flatness probes
// and plotting.
RadiusResult omega_with_profile(const ModuleElement& x, const RadiusConfig& cfg = {});

// The same quantity routed through the generic engine: w of the assembled
// lower-corner element. Must agree with omega up to both certificates.
RadiusResult omega_via_w(const ModuleElement& x, const RadiusConfig& cfg = {});

}  // namespace modrad
