#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "thetasphere/suites.hpp"

using namespace thetasphere;

namespace {

std::shared_ptr<const ManifoldSpec> resolve_spec(const std::string& name_or_path) {
    if (auto b = ManifoldSpec::builtin(name_or_path)) return b;
    return ManifoldSpec::load_file(name_or_path);
}

Rational parse_theta(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                    boost::multiprecision::cpp_int(s.substr(slash + 1)));
}

int emit(const Report& rep, const std::string& json_path) {
    std::cout << rep.to_text();
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        f << rep.to_json();
    }
    return rep.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thetasphere: exact workbench for theta-deformed spheres and the basic "
                 "instanton"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string spec_name = "s4-theta";
    std::string json_path;
    std::string theta_str = "0";
    uint64_t seed = 12345;
    long long k = 5;
    uint64_t max_iter = 0;

    auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
        if (with_spec)
            cmd->add_option("--spec", spec_name, "builtin spec name or path to a .spec file");
        cmd->add_option("--json", json_path, "write the machine-readable report here");
        cmd->add_option("--theta", theta_str, "deformation parameter as a rational p/q");
        cmd->add_option("--seed", seed, "seed for the randomized suites");
        cmd->add_option("--max-iter", max_iter, "rewriting iteration cap");
    };

    auto* c_algebra = app.add_subcommand("verify-algebra", "commutation and relation checks");
    auto* c_proj = app.add_subcommand("verify-projection", "instanton data identities");
    auto* c_curv = app.add_subcommand("curvature", "projection calculus identities");
    auto* c_sd = app.add_subcommand("self-dual", "self-duality certificate");
    auto* c_charge = app.add_subcommand("charge", "topological charge");
    auto* c_norms = app.add_subcommand("norms", "Hermitian structure and Sobolev norms");
    auto* c_moduli = app.add_subcommand("moduli-dim", "instanton moduli dimension table");
    auto* c_braid = app.add_subcommand("braiding-demo", "braiding of homogeneous elements");
    auto* c_gauge = app.add_subcommand("gauge", "gauge action checks");
    auto* c_all = app.add_subcommand("all", "every suite");
    for (auto* cmd : {c_algebra, c_proj, c_curv, c_sd, c_charge, c_norms, c_braid, c_gauge, c_all})
        add_common(cmd);
    add_common(c_moduli, false);
    bool k_single = false;
    c_moduli->add_option("--k", k, "single charge (otherwise the table k=1..5)")
        ->each([&](const std::string&) { k_single = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // unknown command or bad flags
    }

    try {
        SuiteOptions opt;
        opt.seed = seed;
        opt.theta = Theta{parse_theta(theta_str)};
        if (max_iter > 0) detail::set_default_max_steps(max_iter);

        if (app.got_subcommand(c_moduli))
            return emit(moduli_dim_suite(k, k_single, opt), json_path);

        auto spec = resolve_spec(spec_name);
        Report rep;
        if (app.got_subcommand(c_algebra)) rep = verify_algebra_suite(spec, opt);
        else if (app.got_subcommand(c_proj)) rep = verify_projection_suite(spec, opt);
        else if (app.got_subcommand(c_curv)) rep = curvature_suite(spec, opt);
        else if (app.got_subcommand(c_sd)) rep = self_dual_suite(spec, opt);
        else if (app.got_subcommand(c_charge)) rep = charge_suite(spec, opt);
        else if (app.got_subcommand(c_norms)) rep = norms_suite(spec, opt);
        else if (app.got_subcommand(c_braid)) rep = braiding_suite(spec, opt);
        else if (app.got_subcommand(c_gauge)) rep = gauge_suite(spec, opt);
        else rep = all_suites(spec, opt);
        return emit(rep, json_path);
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 3;
    } catch (const ReductionLimitError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
