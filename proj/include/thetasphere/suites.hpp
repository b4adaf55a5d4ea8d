#pragma once

#include <memory>
#include <random>

#include "thetasphere/integral.hpp"
#include "thetasphere/report.hpp"

namespace thetasphere {

/// Seeded generator of random elements for the property suites.
class Sampler {
public:
    explicit Sampler(const ManifoldSpec& spec, uint64_t seed) : spec_(&spec), rng_(seed) {}

    AlgebraElement element(int max_letters = 4, int terms = 3);
    AlgebraElement homogeneous(int max_letters = 4, int terms = 3);
    FormElement form(int form_degree, int max_letters = 3, int terms = 3);
    Coefficient coefficient();
    uint64_t integer(uint64_t bound) { return rng_() % bound; }
    double real() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng_); }

private:
    Word random_word(int max_letters, int frame_letters);
    const ManifoldSpec* spec_;
    std::mt19937_64 rng_;
};

struct SuiteOptions {
    uint64_t seed = 12345;
    Theta theta{};
    int samples = 50;
};

Report verify_algebra_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report verify_projection_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report curvature_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report self_dual_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report charge_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report norms_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report braiding_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report moduli_dim_suite(long long k_max_or_single, bool single, const SuiteOptions& opt);
Report gauge_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);
Report all_suites(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt);

} // namespace thetasphere
