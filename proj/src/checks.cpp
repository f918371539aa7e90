#include "modrad/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

#include "modrad/linalg.hpp"

namespace modrad {
namespace checks {

namespace {

constexpr double kCrossValidationTol = 1e-10;

constexpr std::uint64_t kSaltX = 'x';
constexpr std::uint64_t kSaltY = 'y';
constexpr std::uint64_t kSaltA = 'a';
constexpr std::uint64_t kSaltLambda = 'l';
constexpr std::uint64_t kSaltPairSize = 'p';
constexpr std::uint64_t kSaltPairA = 0x4100;
constexpr std::uint64_t kSaltPairB = 0x4200;

// Collects asserted inequalities for one trial of one check. Slacks are
// raw (before tolerance); a violation is a slack below its negated
// allowance, or an explicitly failed predicate.
class Accumulator {
public:
    void require(double slack, double allowance) {
        worst_ = std::min(worst_, slack);
        if (slack < -allowance) violated_ = true;
    }

    void require_flag(bool ok, double margin) {
        worst_ = std::min(worst_, margin);
        if (!ok) violated_ = true;
    }

    CheckOutcome outcome(std::string name) const {
        CheckOutcome out;
        out.name = std::move(name);
        out.trials = 1;
        out.violations = violated_ ? 1 : 0;
        out.worst_margin = worst_;
        return out;
    }

private:
    double worst_ = std::numeric_limits<double>::infinity();
    bool violated_ = false;
};

// Norm of the block-diagonal element whose corners are <u,v> acting on the
// algebra and the compact operator of (u, v); the D of the triangle
// refinement.
double product_block_norm(const ModuleElement& u, const ModuleElement& v) {
    const ModuleShape& s = u.shape();
    const LinkingElement e(s, inner_product(u, v).mat(), CMatrix(s.n, s.m), CMatrix(s.m, s.n),
                           theta(u, v));
    return linking_norm(e);
}

CheckOutcome assess_norm_axioms(const ModuleElement& x, Complex alpha, const RadiusResult& om_x,
                                const RadiusResult& om_y, const RadiusResult& om_ax,
                                const RadiusResult& om_sum, const TrialConfig& cfg) {
    Accumulator acc;
    acc.require(om_x.value, 0.0);
    if (om_x.value <= cfg.tol) {
        acc.require(cfg.tol - module_norm(x), 0.0);
    }
    const double abs_alpha = std::abs(alpha);
    acc.require(-std::abs(om_ax.value - abs_alpha * om_x.value),
                cfg.tol + om_ax.certificate + abs_alpha * om_x.certificate);
    acc.require(om_x.value + om_y.value - om_sum.value,
                cfg.tol + om_sum.certificate + om_x.certificate + om_y.certificate);
    return acc.outcome("norm_axioms");
}

CheckOutcome assess_sandwich(const ModuleElement& x, const RadiusResult& om_x,
                             const TrialConfig& cfg) {
    Accumulator acc;
    const double nx = module_norm(x);
    const double allowance = cfg.tol + om_x.certificate;
    acc.require(nx - om_x.value, allowance);
    acc.require(om_x.value - 0.5 * nx, allowance);
    return acc.outcome("norm_sandwich");
}

CheckOutcome assess_tightness(const ModuleElement& x, const RadiusResult& om_x,
                              const TrialConfig& cfg) {
    Accumulator acc;
    acc.require(cfg.tol - std::abs(om_x.value - 0.5 * module_norm(x)), 0.0);
    return acc.outcome("lower_bound_tightness");
}

RefinementCheck assess_refined_lower_bound(const ModuleElement& x, const RadiusResult& om_x,
                                           const TrialConfig& cfg) {
    const ModuleShape& s = x.shape();
    const double nx = module_norm(x);
    const double plus = linking_norm(omega_element(Complex{1.0, 0.0}, x));
    const LinkingElement minus_el(s, CMatrix(s.n, s.n), Complex{-1.0, 0.0} * adjoint(x.mat()),
                                  x.mat(), CMatrix(s.m, s.m));
    const double minus = linking_norm(minus_el);

    RefinementTerms terms;
    terms.gamma = std::max(nx, plus);
    terms.gamma_prime = std::max(nx, minus);
    terms.delta = std::abs(nx - plus);
    terms.delta_prime = std::abs(nx - minus);
    terms.lower_bound = 0.125 * (4.0 * nx + 2.0 * std::abs(terms.gamma - terms.gamma_prime) +
                                 terms.delta + terms.delta_prime);

    Accumulator acc;
    acc.require(om_x.value - terms.lower_bound, cfg.tol + om_x.certificate);
    acc.require(terms.lower_bound - 0.5 * nx, cfg.tol);
    return {acc.outcome("refined_lower_bound"), terms};
}

CheckOutcome assess_degeneracy(const RefinementTerms& terms) {
    Accumulator acc;
    acc.require(kDegeneracyTol - terms.delta, 0.0);
    acc.require(kDegeneracyTol - terms.delta_prime, 0.0);
    acc.require(kDegeneracyTol - std::abs(terms.gamma - terms.gamma_prime), 0.0);
    return acc.outcome("refinement_degeneracy");
}

CheckOutcome assess_equality_condition(const ModuleElement& x, const RadiusResult& om_x,
                                       const TrialConfig& cfg) {
    const double nx = module_norm(x);
    const double lhs_gap = std::abs(om_x.value - 0.5 * nx);
    const std::size_t grid = std::max<std::size_t>(256, cfg.radius_cfg.grid_points);
    double profile_dev = 0.0;
    for (std::size_t k = 0; k < grid; ++k) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
        const double norm = linking_norm(omega_element(std::polar(1.0, theta), x));
        profile_dev = std::max(profile_dev, std::abs(norm - nx));
    }
    const bool lhs = lhs_gap <= cfg.tol;
    const bool rhs = profile_dev <= cfg.tol;
    const double margin = (lhs == rhs ? 1.0 : -1.0) *
                          std::min(std::abs(cfg.tol - lhs_gap), std::abs(cfg.tol - profile_dev));
    Accumulator acc;
    acc.require_flag(lhs == rhs, margin);
    return acc.outcome("equality_characterization");
}

ScaledBoundsCheck assess_scaled_bounds(const ModuleElement& x, const AlgebraElement& a,
                                       const RadiusResult& om_x, const TrialConfig& cfg) {
    const ModuleShape& s = a.shape();
    const CMatrix herm = a.mat() + adjoint(a.mat());
    const CMatrix skew = a.mat() - adjoint(a.mat());
    const ModuleElement x_plus = module_action(x, AlgebraElement(s, herm));
    const ModuleElement x_minus = module_action(x, AlgebraElement(s, skew));
    const ModuleElement x_h = module_action(x, AlgebraElement(s, Complex{0.5, 0.0} * herm));

    const RadiusResult om_plus = omega(x_plus, cfg.radius_cfg);
    const RadiusResult om_minus = omega(x_minus, cfg.radius_cfg);
    const RadiusResult om_h = omega(x_h, cfg.radius_cfg);

    const double na = linalg::operator_norm(a.mat());
    const double nherm = linalg::operator_norm(herm);
    const double nskew = linalg::operator_norm(skew);

    Accumulator acc;
    acc.require(2.0 * nherm * om_x.value - om_plus.value,
                cfg.tol + om_plus.certificate + 2.0 * nherm * om_x.certificate);
    acc.require(4.0 * na * om_x.value - om_plus.value,
                cfg.tol + om_plus.certificate + 4.0 * na * om_x.certificate);
    acc.require(2.0 * nskew * om_x.value - om_minus.value,
                cfg.tol + om_minus.certificate + 2.0 * nskew * om_x.certificate);
    acc.require(nherm * om_x.value - om_h.value,
                cfg.tol + om_h.certificate + nherm * om_x.certificate);

    ScaledBoundsCheck result;
    result.improvement = 4.0 * na * om_x.value - 2.0 * nherm * om_x.value;
    acc.require(result.improvement, cfg.tol);
    result.outcome = acc.outcome("hermitian_action_bounds");
    return result;
}

CheckOutcome assess_improvement(double improvement) {
    Accumulator acc;
    acc.require(improvement, kDegeneracyTol);
    return acc.outcome("hermitian_action_improvement");
}

CheckOutcome assess_triangle(const RadiusResult& om_x, const RadiusResult& om_y,
                             const RadiusResult& om_sum, double d, const TrialConfig& cfg) {
    const double middle =
        linalg::sym2x2_norm({om_x.value, 0.5 * std::sqrt(std::max(0.0, d)), om_y.value});
    Accumulator acc;
    acc.require(middle - om_sum.value,
                cfg.tol + om_sum.certificate + om_x.certificate + om_y.certificate);
    acc.require(om_x.value + om_y.value - middle,
                cfg.tol + 2.0 * (om_x.certificate + om_y.certificate));
    acc.require(4.0 * om_x.value * om_y.value - d,
                cfg.tol + 4.0 * (om_x.certificate * (om_y.value + om_y.certificate) +
                                 om_y.certificate * om_x.value));
    return acc.outcome("triangle_refinement");
}

CheckOutcome assess_equality_case(const RadiusResult& om_x, const RadiusResult& om_2x, double d_xx,
                                  const TrialConfig& cfg) {
    const double middle =
        linalg::sym2x2_norm({om_x.value, 0.5 * std::sqrt(std::max(0.0, d_xx)), om_x.value});
    Accumulator acc;
    acc.require(cfg.tol - std::abs(om_2x.value - 2.0 * om_x.value), 0.0);
    acc.require(cfg.tol - std::abs(middle - 2.0 * om_x.value), 0.0);
    const double implied = 10.0 * cfg.tol * (1.0 + 2.0 * om_x.value);
    acc.require(implied - std::abs(d_xx - 4.0 * om_x.value * om_x.value), 0.0);
    acc.require(middle - om_2x.value,
                cfg.tol + om_2x.certificate + 2.0 * om_x.certificate);
    return acc.outcome("triangle_equality_case");
}

AdditivityCheck assess_additivity(const RadiusResult& om_x, const RadiusResult& om_y,
                                  const RadiusResult& om_sum, double d, const TrialConfig& cfg) {
    AdditivityCheck result;
    result.antecedent_gap = std::abs(om_sum.value - om_x.value - om_y.value);
    Accumulator acc;
    if (result.antecedent_gap <= cfg.tol) {
        const double implied = 10.0 * cfg.tol * (1.0 + om_x.value + om_y.value);
        acc.require(implied - std::abs(d - 4.0 * om_x.value * om_y.value), 0.0);
        result.vacuous = false;
    } else {
        acc.require(result.antecedent_gap - cfg.tol, 0.0);
        result.vacuous = true;
    }
    result.outcome = acc.outcome("additivity_consequence");
    return result;
}

CheckOutcome assess_cross_validation(const RadiusResult& om_x, const RadiusResult& om_w) {
    Accumulator acc;
    acc.require(-std::abs(om_x.value - om_w.value),
                om_x.certificate + om_w.certificate + kCrossValidationTol);
    return acc.outcome("engine_cross_validation");
}

CheckOutcome assess_kernel_identities(const ModuleElement& x, const ModuleElement& y,
                                      const AlgebraElement& a) {
    const ModuleShape& s = x.shape();
    Accumulator acc;

    acc.require(-product_identities_deviation(x, y, a), kProductIdentityTol);
    acc.require(-max_abs_diff(assemble(adjoint_linking(embed_r(x))), assemble(embed_l(x))),
                kProductIdentityTol);

    const LinkingElement e1(s, a.mat(), adjoint(y.mat()), x.mat(), theta(x, y));
    const LinkingElement e2(s, adjoint(a.mat()), adjoint(x.mat()), y.mat(), theta(y, x));
    const CMatrix m1 = assemble(e1);
    const CMatrix m2 = assemble(e2);
    const double n1 = linking_norm(e1);
    const double n2 = linking_norm(e2);

    const double star_norm = linalg::operator_norm(adjoint(m1) * m1);
    acc.require(-std::abs(n1 * n1 - star_norm), kProductIdentityTol * (1.0 + n1 * n1));

    const double prod_norm = linalg::operator_norm(m1 * m2);
    acc.require(n1 * n2 - prod_norm, kProductIdentityTol * (1.0 + n1 * n2));

    return acc.outcome("kernel_identities");
}

// Merges single-trial outcomes under canonical names, tracking the worst
// trial's seed.
class Merger {
public:
    void add(const CheckOutcome& one, std::uint64_t seed) {
        auto it = by_name_.find(one.name);
        if (it == by_name_.end()) {
            CheckOutcome agg = one;
            agg.witness_seed = seed;
            by_name_.emplace(one.name, agg);
            return;
        }
        CheckOutcome& agg = it->second;
        agg.trials += one.trials;
        agg.violations += one.violations;
        if (one.worst_margin < agg.worst_margin) {
            agg.worst_margin = one.worst_margin;
            agg.witness_seed = seed;
        }
    }

    std::vector<CheckOutcome> ordered() const {
        std::vector<CheckOutcome> out;
        for (const std::string& name : outcome_names()) {
            auto it = by_name_.find(name);
            if (it != by_name_.end()) out.push_back(it->second);
        }
        return out;
    }

private:
    std::map<std::string, CheckOutcome> by_name_;
};

class EnabledSet {
public:
    EnabledSet() = default;

    explicit EnabledSet(const std::vector<std::string>& filter) {
        if (filter.empty()) return;
        const auto& known = outcome_names();
        for (const std::string& name : filter) {
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                throw UsageError("unknown check name: " + name);
            }
        }
        selected_.emplace(filter.begin(), filter.end());
    }

    bool operator()(const std::string& name) const {
        return !selected_ || selected_->count(name) > 0;
    }

private:
    std::optional<std::set<std::string>> selected_;
};

std::uint64_t trial_seed(std::uint64_t master, std::size_t index) {
    // Trial 0 reuses the master seed so a recorded witness seed replays as
    // a one-trial run.
    return index == 0 ? master : rng::derive_seed(master, index);
}

void run_trial(const TrialConfig& cfg, std::size_t index, const EnabledSet& on, Merger& merger) {
    const std::uint64_t seed = trial_seed(cfg.master_seed, index);
    const auto [x, y, a] = gen_instance(seed, cfg.shape);
    const RadiusConfig& rc = cfg.radius_cfg;

    std::optional<RadiusResult> om_x_v, om_y_v, om_sum_v, om_2x_v;
    std::optional<double> d_xy_v, d_xx_v;
    auto om_x = [&]() -> const RadiusResult& {
        if (!om_x_v) om_x_v = omega(x, rc);
        return *om_x_v;
    };
    auto om_y = [&]() -> const RadiusResult& {
        if (!om_y_v) om_y_v = omega(y, rc);
        return *om_y_v;
    };
    auto om_sum = [&]() -> const RadiusResult& {
        if (!om_sum_v) om_sum_v = omega(x + y, rc);
        return *om_sum_v;
    };
    auto om_2x = [&]() -> const RadiusResult& {
        if (!om_2x_v) om_2x_v = omega(x + x, rc);
        return *om_2x_v;
    };
    auto d_xy = [&]() -> double {
        if (!d_xy_v) d_xy_v = product_block_norm(x, y);
        return *d_xy_v;
    };
    auto d_xx = [&]() -> double {
        if (!d_xx_v) d_xx_v = product_block_norm(x, x);
        return *d_xx_v;
    };

    if (on("norm_axioms")) {
        const Complex alpha = cfg.scale_samples.empty()
                                  ? Complex{1.0, 0.0}
                                  : cfg.scale_samples[index % cfg.scale_samples.size()];
        const RadiusResult om_ax = omega(alpha * x, rc);
        merger.add(assess_norm_axioms(x, alpha, om_x(), om_y(), om_ax, om_sum(), cfg), seed);
    }
    if (on("norm_sandwich")) {
        merger.add(assess_sandwich(x, om_x(), cfg), seed);
    }
    if (on("lower_bound_tightness")) {
        merger.add(assess_tightness(x, om_x(), cfg), seed);
    }
    if (on("refined_lower_bound") || on("refinement_degeneracy")) {
        const RefinementCheck rc_check = assess_refined_lower_bound(x, om_x(), cfg);
        if (on("refined_lower_bound")) merger.add(rc_check.outcome, seed);
        if (on("refinement_degeneracy")) merger.add(assess_degeneracy(rc_check.terms), seed);
    }
    if (on("equality_characterization")) {
        merger.add(assess_equality_condition(x, om_x(), cfg), seed);
    }
    if (on("hermitian_action_bounds") || on("hermitian_action_improvement")) {
        const ScaledBoundsCheck sb = assess_scaled_bounds(x, a, om_x(), cfg);
        if (on("hermitian_action_bounds")) merger.add(sb.outcome, seed);
        if (on("hermitian_action_improvement")) {
            merger.add(assess_improvement(sb.improvement), seed);
        }
    }
    if (on("spectral_radius_bound_random")) {
        rng::CounterRng pick(rng::derive_seed(seed, kSaltPairSize));
        for (std::uint64_t k = 0; k < 2; ++k) {
            const std::size_t size = 2 + static_cast<std::size_t>(pick.next_u64() % 5);
            const CMatrix A = rng::random_ginibre(size, size, rng::derive_seed(seed, kSaltPairA + k));
            const CMatrix B = rng::random_ginibre(size, size, rng::derive_seed(seed, kSaltPairB + k));
            CheckOutcome out = check_spectral_radius_bound(A, B, cfg.tol);
            out.name = "spectral_radius_bound_random";
            merger.add(out, seed);
        }
    }
    if (on("spectral_radius_bound_structured")) {
        rng::CounterRng angle(rng::derive_seed(seed, kSaltLambda));
        const Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi * angle.next_unit());
        CheckOutcome out = check_spectral_radius_bound(assemble(omega_element(lambda, x)),
                                                       assemble(omega_element(lambda, y)), cfg.tol);
        out.name = "spectral_radius_bound_structured";
        merger.add(out, seed);
    }
    if (on("triangle_refinement")) {
        merger.add(assess_triangle(om_x(), om_y(), om_sum(), d_xy(), cfg), seed);
    }
    if (on("triangle_equality_case")) {
        merger.add(assess_equality_case(om_x(), om_2x(), d_xx(), cfg), seed);
    }
    if (on("additivity_consequence") || on("additivity_vacuous")) {
        const AdditivityCheck mixed = assess_additivity(om_x(), om_y(), om_sum(), d_xy(), cfg);
        const char* mixed_name = mixed.vacuous ? "additivity_vacuous" : "additivity_consequence";
        if (on(mixed_name)) {
            CheckOutcome out = mixed.outcome;
            out.name = mixed_name;
            merger.add(out, seed);
        }
        if (on("additivity_consequence")) {
            const AdditivityCheck same = assess_additivity(om_x(), om_x(), om_2x(), d_xx(), cfg);
            if (!same.vacuous) merger.add(same.outcome, seed);
        }
    }
    if (on("engine_cross_validation")) {
        merger.add(assess_cross_validation(om_x(), omega_via_w(x, rc)), seed);
    }
    if (on("kernel_identities")) {
        merger.add(assess_kernel_identities(x, y, a), seed);
    }
}

}  // namespace

void validate_trial_config(const TrialConfig& cfg) {
    validate_shape(cfg.shape);
    if (cfg.trials < 1) {
        throw UsageError("trials must be at least 1");
    }
    if (!(cfg.tol > 0.0)) {
        throw UsageError("tol must be positive");
    }
    validate_radius_config(cfg.radius_cfg);
}

const std::vector<std::string>& outcome_names() {
    static const std::vector<std::string> names = {
        "norm_axioms",
        "norm_sandwich",
        "lower_bound_tightness",
        "refined_lower_bound",
        "refinement_degeneracy",
        "equality_characterization",
        "hermitian_action_bounds",
        "hermitian_action_improvement",
        "spectral_radius_bound_random",
        "spectral_radius_bound_structured",
        "triangle_refinement",
        "triangle_equality_case",
        "additivity_consequence",
        "additivity_vacuous",
        "engine_cross_validation",
        "kernel_identities",
    };
    return names;
}

std::tuple<ModuleElement, ModuleElement, AlgebraElement> gen_instance(std::uint64_t seed,
                                                                      const ModuleShape& shape) {
    validate_shape(shape);
    ModuleElement x(shape, rng::random_ginibre(shape.m, shape.n, rng::derive_seed(seed, kSaltX)));
    ModuleElement y(shape, rng::random_ginibre(shape.m, shape.n, rng::derive_seed(seed, kSaltY)));
    AlgebraElement a(shape, rng::random_ginibre(shape.n, shape.n, rng::derive_seed(seed, kSaltA)));
    return {std::move(x), std::move(y), std::move(a)};
}

CheckOutcome check_norm_axioms(const ModuleElement& x, const ModuleElement& y, Complex alpha,
                               const TrialConfig& cfg) {
    const RadiusConfig& rc = cfg.radius_cfg;
    return assess_norm_axioms(x, alpha, omega(x, rc), omega(y, rc), omega(alpha * x, rc),
                              omega(x + y, rc), cfg);
}

CheckOutcome check_sandwich(const ModuleElement& x, const TrialConfig& cfg) {
    return assess_sandwich(x, omega(x, cfg.radius_cfg), cfg);
}

RefinementCheck check_refined_lower_bound(const ModuleElement& x, const TrialConfig& cfg) {
    return assess_refined_lower_bound(x, omega(x, cfg.radius_cfg), cfg);
}

CheckOutcome check_equality_condition(const ModuleElement& x, const TrialConfig& cfg) {
    return assess_equality_condition(x, omega(x, cfg.radius_cfg), cfg);
}

ScaledBoundsCheck check_scaled_bounds(const ModuleElement& x, const AlgebraElement& a,
                                      const TrialConfig& cfg) {
    if (x.shape().n != a.shape().n) {
        throw ShapeMismatchError("check_scaled_bounds: algebra size does not match module columns");
    }
    return assess_scaled_bounds(x, a, omega(x, cfg.radius_cfg), cfg);
}

CheckOutcome check_spectral_radius_bound(const CMatrix& A, const CMatrix& B, double tol) {
    const double radius = linalg::spectral_radius(A + B);
    const double cross = linalg::operator_norm(A * B);
    const double bound = linalg::sym2x2_norm(
        {linalg::operator_norm(A), std::sqrt(std::max(0.0, cross)), linalg::operator_norm(B)});
    Accumulator acc;
    acc.require(bound - radius, tol);
    return acc.outcome("spectral_radius_bound");
}

CheckOutcome check_triangle_refinement(const ModuleElement& x, const ModuleElement& y,
                                       const TrialConfig& cfg) {
    const RadiusConfig& rc = cfg.radius_cfg;
    return assess_triangle(omega(x, rc), omega(y, rc), omega(x + y, rc), product_block_norm(x, y),
                           cfg);
}

AdditivityCheck check_additivity_consequence(const ModuleElement& x, const ModuleElement& y,
                                             const TrialConfig& cfg) {
    const RadiusConfig& rc = cfg.radius_cfg;
    return assess_additivity(omega(x, rc), omega(y, rc), omega(x + y, rc),
                             product_block_norm(x, y), cfg);
}

SuiteReport run_suite(const TrialConfig& cfg) {
    return run_plan(std::vector<TrialConfig>{cfg});
}

SuiteReport run_suite(const TrialConfig& cfg, const std::vector<std::string>& check_filter) {
    return run_plan(std::vector<TrialConfig>{cfg}, check_filter);
}

SuiteReport run_plan(const std::vector<TrialConfig>& plan) {
    return run_plan(plan, {});
}

SuiteReport run_plan(const std::vector<TrialConfig>& plan,
                     const std::vector<std::string>& check_filter) {
    if (plan.empty()) {
        throw UsageError("trial plan must contain at least one configuration");
    }
    for (const TrialConfig& cfg : plan) validate_trial_config(cfg);
    const EnabledSet on(check_filter);

    Merger merger;
    for (const TrialConfig& cfg : plan) {
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            run_trial(cfg, t, on, merger);
        }
    }

    SuiteReport report;
    report.configs = plan;
    report.outcomes = merger.ordered();
    report.passed = std::all_of(report.outcomes.begin(), report.outcomes.end(),
                                [](const CheckOutcome& o) { return o.violations == 0; });
    return report;
}

std::vector<TrialConfig> default_plan(std::uint64_t master_seed) {
    std::vector<TrialConfig> plan;
    for (const ModuleShape& shape :
         {ModuleShape{1, 1}, ModuleShape{1, 3}, ModuleShape{2, 2}, ModuleShape{3, 2},
          ModuleShape{4, 4}}) {
        TrialConfig cfg;
        cfg.shape = shape;
        cfg.master_seed = master_seed;
        plan.push_back(cfg);
    }
    return plan;
}

}  // namespace checks
}  // namespace modrad
