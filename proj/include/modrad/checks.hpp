#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "modrad/radius.hpp"
#include "modrad/rng.hpp"

namespace modrad {
namespace checks {

inline constexpr const char* kVersion = "0.1.0";

// Tolerance for the degeneracy probes (the refinement terms and the bound
// improvement are expected to vanish or stay nonnegative this tightly).
inline constexpr double kDegeneracyTol = 1e-9;

struct TrialConfig {
    ModuleShape shape{2, 2};
    std::size_t trials = 200;
    std::uint64_t master_seed = 0;
    // Trimmed engine settings: plenty for these profiles, keeps full plans fast.
    RadiusConfig radius_cfg{256, 1e-10, 60};
    double tol = 1e-8;
    std::vector<Complex> scale_samples = {Complex{0.0, 2.0}, Complex{-1.5, 0.0},
                                          Complex{0.6, 0.8}};
};

void validate_trial_config(const TrialConfig& cfg);

// Terms of the eighth-sum lower bound: gamma and gamma_prime are the maxima
// of ||x|| against the two sign variants of the off-diagonal element,
// delta and delta_prime the corresponding absolute gaps.
struct RefinementTerms {
    double gamma = 0.0;
    double gamma_prime = 0.0;
    double delta = 0.0;
    double delta_prime = 0.0;
    double lower_bound = 0.0;
};

struct CheckOutcome {
    std::string name;
    std::size_t trials = 0;
    std::size_t violations = 0;
    // Most negative slack seen across all asserted inequalities; slacks are
    // measured before tolerance, so slightly negative values can still pass.
    double worst_margin = 0.0;
    std::optional<std::uint64_t> witness_seed;
};

struct RefinementCheck {
    CheckOutcome outcome;
    RefinementTerms terms;
};

struct ScaledBoundsCheck {
    CheckOutcome outcome;
    // 4||a|| Omega(x) - 2||a + a*|| Omega(x): how much the Hermitian-part
    // bound improves on the coarse one.
    double improvement = 0.0;
};

struct AdditivityCheck {
    CheckOutcome outcome;
    bool vacuous = false;
    // |Omega(x+y) - Omega(x) - Omega(y)|: distance from the additivity
    // antecedent.
    double antecedent_gap = 0.0;
};

struct SuiteReport {
    std::vector<TrialConfig> configs;
    std::vector<CheckOutcome> outcomes;
    bool passed = false;
    std::string version = kVersion;
};

// Deterministic trial instances: independent Ginibre draws for x, y, a from
// tagged sub-seeds.
std::tuple<ModuleElement, ModuleElement, AlgebraElement> gen_instance(std::uint64_t seed,
                                                                      const ModuleShape& shape);

// Norm axioms: nonnegativity, definiteness, absolute homogeneity with the
// given scalar, and the triangle inequality.
CheckOutcome check_norm_axioms(const ModuleElement& x, const ModuleElement& y, Complex alpha,
                               const TrialConfig& cfg);

// Half the module norm below, the module norm above.
CheckOutcome check_sandwich(const ModuleElement& x, const TrialConfig& cfg);

// The eighth-sum lower bound; also confirms it is at least half the norm.
RefinementCheck check_refined_lower_bound(const ModuleElement& x, const TrialConfig& cfg);

// Biconditional: the radius equals half the norm exactly when the lambda
// profile of the off-diagonal norm sits at the module norm everywhere.
CheckOutcome check_equality_condition(const ModuleElement& x, const TrialConfig& cfg);

// Bounds for x(a + a*) and x(a - a*) against the Hermitian and
// skew-Hermitian parts of a, the coarse 4||a|| bound, and the Hermitian
// specialization.
ScaledBoundsCheck check_scaled_bounds(const ModuleElement& x, const AlgebraElement& a,
                                      const TrialConfig& cfg);

// Spectral radius of a sum against the 2x2 norm bound built from
// ||A||, ||AB||^(1/2), ||B||.
CheckOutcome check_spectral_radius_bound(const CMatrix& A, const CMatrix& B, double tol = 1e-8);

// Two-sided refinement of the triangle inequality through the block-diagonal
// product norm D, including D <= 4 Omega(x) Omega(y).
CheckOutcome check_triangle_refinement(const ModuleElement& x, const ModuleElement& y,
                                       const TrialConfig& cfg);

// If the radius is additive on (x, y), then D = 4 Omega(x) Omega(y) up to
// an implied tolerance; trials with a failing antecedent pass vacuously.
AdditivityCheck check_additivity_consequence(const ModuleElement& x, const ModuleElement& y,
                                             const TrialConfig& cfg);

// All checks over seeded trials at one shape, aggregated per check name.
SuiteReport run_suite(const TrialConfig& cfg);
SuiteReport run_suite(const TrialConfig& cfg, const std::vector<std::string>& check_filter);

// Same across several shapes, outcomes merged.
SuiteReport run_plan(const std::vector<TrialConfig>& plan);
SuiteReport run_plan(const std::vector<TrialConfig>& plan,
                     const std::vector<std::string>& check_filter);

// The stock coverage plan: scalar, tall, square, wide, and larger square
// shapes, 200 trials each.
std::vector<TrialConfig> default_plan(std::uint64_t master_seed);

// Canonical outcome names in report order.
const std::vector<std::string>& outcome_names();

}  // namespace checks
}  // namespace modrad
