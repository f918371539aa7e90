#include "modrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "modrad/linalg.hpp"

namespace modrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Node {
    double theta;
    double f;
};

// Upper bound for f on [left, right] given endpoint values and a Lipschitz
// constant: the apex of the two cones f(t) <= f_end + L |t - t_end|.
double cell_upper_bound(const Node& left, const Node& right, double lipschitz) {
    return 0.5 * (left.f + right.f + lipschitz * (right.theta - left.theta));
}

// Golden-section scan for a local maximum of f on [a, b]; returns the best
// evaluated point.
Node golden_polish(const std::function<double(double)>& f, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    Node best = (fc >= fd) ? Node{c, fc} : Node{d, fd};
    for (int iter = 0; iter < 40 && (b - a) > 4.0 * std::numeric_limits<double>::epsilon(); ++iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
            if (fc > best.f) best = {c, fc};
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
            if (fd > best.f) best = {d, fd};
        }
    }
    return best;
}

// Certified maximization of a periodic objective over one full turn.
// Uniform grid, then bisection of the cell with the largest Lipschitz
// upper bound until the gap to the best achieved value is small, then a
// golden-section polish around the incumbent.
RadiusResult maximize_over_circle(const std::function<double(double)>& f, double lipschitz,
                                  const RadiusConfig& cfg, bool collect_profile) {
    validate_radius_config(cfg);
    const std::size_t n = cfg.grid_points;
    const double h = kTwoPi / static_cast<double>(n);

    std::vector<Node> nodes;
    nodes.reserve(n + cfg.max_refine_iters + 2);
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = static_cast<double>(k) * h;
        nodes.push_back({theta, f(theta)});
    }
    nodes.push_back({kTwoPi, nodes.front().f});

    RadiusResult result;
    if (collect_profile) {
        result.profile_samples.emplace();
        result.profile_samples->reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            result.profile_samples->emplace_back(nodes[k].theta, nodes[k].f);
        }
    }

    double value = -std::numeric_limits<double>::infinity();
    double arg = 0.0;
    for (const Node& node : nodes) {
        if (node.f > value) {
            value = node.f;
            arg = node.theta;
        }
    }

    auto worst_cell = [&]() {
        std::size_t best_k = 0;
        double best_ub = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
            const double ub = cell_upper_bound(nodes[k], nodes[k + 1], lipschitz);
            if (ub > best_ub) {
                best_ub = ub;
                best_k = k;
            }
        }
        return std::pair<std::size_t, double>{best_k, best_ub};
    };

    for (std::size_t iter = 0; iter < cfg.max_refine_iters; ++iter) {
        const auto [k, ub] = worst_cell();
        if (ub - value <= cfg.refine_tol * (1.0 + std::abs(value))) break;
        const double mid = 0.5 * (nodes[k].theta + nodes[k + 1].theta);
        if (mid <= nodes[k].theta || mid >= nodes[k + 1].theta) break;
        const double fmid = f(mid);
        nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(k) + 1, {mid, fmid});
        if (fmid > value) {
            value = fmid;
            arg = mid;
        }
    }

    // Polish around the incumbent inside its neighboring nodes.
    {
        std::size_t i = 0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (nodes[k].theta == arg) {
                i = k;
                break;
            }
        }
        const double left =
            (i == 0) ? nodes[nodes.size() - 2].theta - kTwoPi : nodes[i - 1].theta;
        const double right = (i + 1 < nodes.size()) ? nodes[i + 1].theta : kTwoPi;
        const Node polished = golden_polish(f, left, right);
        if (polished.f > value) {
            value = polished.f;
            arg = polished.theta;
        }
    }

    const double ub_final = worst_cell().second;
    result.value = value;
    result.argmax_theta = arg - kTwoPi * std::floor(arg / kTwoPi);
    if (result.argmax_theta >= kTwoPi) result.argmax_theta = 0.0;
    result.certificate = std::max(0.0, ub_final - value);
    return result;
}

double hermitian_objective_norm(const CMatrix& herm) {
    return linalg::hermitian_norm(herm);
}

}  // namespace

void validate_radius_config(const RadiusConfig& cfg) {
    if (cfg.grid_points < 8) {
        throw UsageError("grid_points must be at least 8");
    }
    if (!(cfg.refine_tol > 0.0)) {
        throw UsageError("refine_tol must be positive");
    }
    if (cfg.max_refine_iters < 1) {
        throw UsageError("max_refine_iters must be at least 1");
    }
}

CMatrix re_part(Complex lambda, const CMatrix& m) {
    if (!m.is_square()) {
        throw NotSquareError("re_part requires a square matrix");
    }
    if (std::abs(std::abs(lambda) - 1.0) > kUnitModulusTol) {
        throw NotUnitModulusError("re_part requires |lambda| = 1");
    }
    const std::size_t n = m.rows();
    CMatrix out(n, n);
    const Complex conj_lambda = std::conj(lambda);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = 0.5 * (lambda * m(i, j) + conj_lambda * std::conj(m(j, i)));
        }
    }
    return out;
}

RadiusResult numerical_radius(const CMatrix& m, const RadiusConfig& cfg) {
    if (!m.is_square()) {
        throw NotSquareError("numerical_radius requires a square matrix");
    }
    const double lipschitz = linalg::operator_norm(m);
    auto objective = [&m](double theta) {
        return hermitian_objective_norm(re_part(std::polar(1.0, theta), m));
    };
    return maximize_over_circle(objective, lipschitz, cfg, false);
}

double numerical_radius_bruteforce(const CMatrix& m, std::size_t samples) {
    if (!m.is_square()) {
        throw NotSquareError("numerical_radius_bruteforce requires a square matrix");
    }
    if (samples < 16) {
        throw UsageError("numerical_radius_bruteforce requires at least 16 samples");
    }
    double best = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
        best = std::max(best, hermitian_objective_norm(re_part(std::polar(1.0, theta), m)));
    }
    return best;
}

namespace {

RadiusResult omega_impl(const ModuleElement& x, const RadiusConfig& cfg, bool collect_profile) {
    const double lipschitz = module_norm(x);
    auto objective = [&x](double theta) {
        return 0.5 * linking_norm(omega_element(std::polar(1.0, theta), x));
    };
    return maximize_over_circle(objective, lipschitz, cfg, collect_profile);
}

}  // namespace

RadiusResult omega(const ModuleElement& x, const RadiusConfig& cfg) {
    return omega_impl(x, cfg, false);
}

RadiusResult omega_with_profile(const ModuleElement& x, const RadiusConfig& cfg) {
    return omega_impl(x, cfg, true);
}

RadiusResult omega_via_w(const ModuleElement& x, const RadiusConfig& cfg) {
    return numerical_radius(assemble(embed_r(x)), cfg);
}

}  // namespace modrad
