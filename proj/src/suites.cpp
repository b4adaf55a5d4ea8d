#include "thetasphere/suites.hpp"

#include <cmath>

#include "thetasphere/errors.hpp"
#include "thetasphere/hodge.hpp"

namespace thetasphere {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

} // namespace

Word Sampler::random_word(int max_letters, int frame_letters) {
    const int n = spec_->n_generators();
    int len = static_cast<int>(rng_() % (max_letters + 1));
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<unsigned char>(rng_() % n));
    for (int i = 0; i < frame_letters; ++i)
        w.push_back(spec_->frame_letter(static_cast<int>(rng_() % n)));
    return w;
}

Coefficient Sampler::coefficient() {
    switch (rng_() % 6) {
        case 0: return Coefficient::one();
        case 1: return -Coefficient::one();
        case 2: return Coefficient::imaginary_unit();
        case 3: return Coefficient::mu(1);
        case 4: return Coefficient::mu(-1);
        default: return Coefficient::rational(Rational(1, 2));
    }
}

AlgebraElement Sampler::element(int max_letters, int terms) {
    std::vector<detail::RawTerm> raw;
    for (int t = 0; t < terms; ++t) raw.push_back({random_word(max_letters, 0), coefficient()});
    return AlgebraElement::from_raw(*spec_, std::move(raw));
}

AlgebraElement Sampler::homogeneous(int max_letters, int terms) {
    // random homogeneous element: pick one degree and keep words matching it
    Word pivot = random_word(max_letters, 0);
    MultiDegree d = word_degree(*spec_, pivot);
    std::vector<detail::RawTerm> raw{{pivot, coefficient()}};
    int attempts = 0;
    while (static_cast<int>(raw.size()) < terms && ++attempts < 64) {
        Word w = random_word(max_letters, 0);
        if (word_degree(*spec_, w) == d) raw.push_back({std::move(w), coefficient()});
    }
    return AlgebraElement::from_raw(*spec_, std::move(raw));
}

FormElement Sampler::form(int form_degree, int max_letters, int terms) {
    std::vector<detail::RawTerm> raw;
    for (int t = 0; t < terms; ++t)
        raw.push_back({random_word(max_letters, form_degree), coefficient()});
    return FormElement::from_raw(*spec_, std::move(raw));
}

namespace {

Report make_report(const std::string& suite, const ManifoldSpec& spec, const SuiteOptions& opt) {
    Report r;
    r.suite = suite;
    r.spec_name = spec.name;
    r.spec_digest = spec_hash(spec);
    r.seed = opt.seed;
    r.theta = rational_to_string(opt.theta.value);
    return r;
}

} // namespace

Report verify_algebra_suite(std::shared_ptr<const ManifoldSpec> spec_ptr,
                            const SuiteOptions& opt) {
    const ManifoldSpec& spec = *spec_ptr;
    Report rep = make_report("verify-algebra", spec, opt);
    Sampler sampler(spec, opt.seed);

    rep.run("phase-table-bicharacter", [&] {
        ManifoldSpec copy = spec;
        copy.solve_twist_and_validate(); // throws when the table is inconsistent
    });

    // every declared commutation phase is honored by the product
    for (const auto& e : spec.phase_table) {
        const auto& gn = spec.generators[e.g].name;
        const auto& hn = spec.generators[e.h].name;
        rep.run("commutation " + gn + "*" + hn + " = mu^" + std::to_string(e.exponent) + " " +
                    hn + "*" + gn,
                [&, e] {
                    AlgebraElement lhs = AlgebraElement::generator(spec, e.g) *
                                         AlgebraElement::generator(spec, e.h);
                    AlgebraElement rhs = (AlgebraElement::generator(spec, e.h) *
                                          AlgebraElement::generator(spec, e.g))
                                             .scale(Coefficient::mu(e.exponent));
                    require(lhs == rhs, "relation violated");
                });
    }

    rep.run("relations-reduce-to-zero", [&] {
        for (const auto& rel : spec.relations) {
            std::vector<detail::RawTerm> raw{{rel.lhs, Coefficient::one()}};
            for (const auto& [w, c] : rel.rhs) raw.push_back({w, -c});
            require(AlgebraElement::from_raw(spec, std::move(raw)).is_zero(),
                    "relation does not reduce: " + rel.source);
        }
    });

    rep.run("relations-star-closed", [&] {
        for (const auto& rel : spec.relations) {
            std::vector<detail::RawTerm> raw{{rel.lhs, Coefficient::one()}};
            for (const auto& [w, c] : rel.rhs) raw.push_back({w, -c});
            AlgebraElement poly = AlgebraElement::from_raw(spec, raw);
            require(poly.star().is_zero(), "star of relation not derivable: " + rel.source);
        }
    });

    rep.run("relation-centrality-random", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement w = sampler.element();
            for (const auto& rel : spec.relations) {
                std::vector<detail::RawTerm> raw{{rel.lhs, Coefficient::one()}};
                for (const auto& [rw, rc] : rel.rhs) raw.push_back({rw, -rc});
                AlgebraElement poly = AlgebraElement::from_raw(spec, raw);
                require((poly * w).is_zero() && (w * poly).is_zero(),
                        "relation is not central under rewriting");
            }
        }
    });

    rep.run("star-involution-random", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.element();
            require(a.star().star() == a, "star is not involutive");
        }
    });

    rep.run("star-antihomomorphism-random", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.element(), b = sampler.element();
            require((a * b).star() == b.star() * a.star(), "star is not an anti-homomorphism");
        }
    });

    rep.run("product-associativity-random", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous(), b = sampler.homogeneous(),
                           c = sampler.homogeneous();
            require((a * b) * c == a * (b * c), "product is not associative");
        }
    });

    rep.run("degree-additivity-random", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous(), b = sampler.homogeneous();
            auto da = a.homogeneous_degree(), db = b.homogeneous_degree();
            AlgebraElement ab = a * b;
            if (ab.is_zero()) continue;
            auto dab = ab.homogeneous_degree();
            require(dab.has_value() && *dab == (*da + *db), "degrees are not additive");
        }
    });

    return rep;
}

Report verify_projection_suite(std::shared_ptr<const ManifoldSpec> spec,
                               const SuiteOptions& opt) {
    InstantonData data = build_instanton_data(spec);
    Report rep = make_report("verify-projection", *spec, opt);

    rep.run("u-star-u = 1", [&] {
        MatrixForm lhs = data.hopf_frame.adjoint() * data.hopf_frame;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                AlgebraElement e = lhs.at(i, j).to_algebra();
                AlgebraElement want = i == j ? AlgebraElement::unit(*data.total)
                                             : AlgebraElement::zero(*data.total);
                require(e == want, "u*u entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") = " + e.render());
            }
    });
    rep.run("p*p = p", [&] {
        require((data.projection * data.projection - data.projection).reduces_to_zero(),
                "p^2 != p");
    });
    rep.run("p* = p", [&] {
        require((data.projection.adjoint() - data.projection).reduces_to_zero(), "p* != p");
    });
    rep.run("trace p = 2", [&] {
        AlgebraElement tr = data.projection.trace().to_algebra();
        require(tr == AlgebraElement::unit(*data.base).scale(Coefficient::rational(2)),
                "trace != 2, got " + tr.render());
    });
    rep.run("p = u u* under the inclusion", [&] {
        AlgebraMorphism inc = AlgebraMorphism::hopf_inclusion(data);
        MatrixForm uu = data.hopf_frame * data.hopf_frame.adjoint();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                AlgebraElement mapped = inc.apply(data.projection.at(i, j).to_algebra());
                require(mapped == uu.at(i, j).to_algebra(),
                        "entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") disagrees with u u*");
            }
    });
    return rep;
}

Report curvature_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt) {
    InstantonData data = build_instanton_data(spec);
    const MatrixForm& p = data.projection;
    Report rep = make_report("curvature", *data.base, opt);

    MatrixForm dp = p.d_entrywise();
    MatrixForm f = curvature(p);

    rep.run("p dp p = 0", [&] { require((p * dp * p).reduces_to_zero(), "p dp p != 0"); });
    rep.run("F = pF", [&] { require((f - p * f).reduces_to_zero(), "F != pF"); });
    rep.run("F = Fp", [&] { require((f - f * p).reduces_to_zero(), "F != Fp"); });
    rep.run("p (dp)^3 p = 0",
            [&] { require((p * dp * dp * dp * p).reduces_to_zero(), "p(dp)^3p != 0"); });
    rep.run("tr F = 0", [&] { require(f.trace().reduce().is_zero(), "tr F != 0"); });
    rep.run("identity endomorphism is parallel",
            [&] { require(lifted_commutator(p, p.reduce()).reduces_to_zero(), "[nabla,p] != 0"); });
    rep.run("curvature endomorphism is parallel",
            [&] { require(lifted_commutator(p, f).reduces_to_zero(), "[nabla,F] != 0"); });
    return rep;
}

Report self_dual_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt) {
    InstantonData data = build_instanton_data(spec);
    Report rep = make_report("self-dual", *data.base, opt);

    rep.run("P_minus(F) = 0 for the basic instanton", [&] {
        auto cert = self_duality_check(data.projection);
        if (cert.status == CertStatus::INCONCLUSIVE) throw ReductionLimitError(cert.detail);
        require(cert.status == CertStatus::PASS, cert.detail);
    });
    rep.run("reversed orientation fails (negative control)", [&] {
        auto cert = self_duality_check(data.projection, /*reversed=*/true);
        require(cert.status == CertStatus::FAIL,
                "anti-self-dual certificate unexpectedly " + to_string(cert.status));
    });
    rep.run("constant projection is vacuously self-dual", [&] {
        MatrixForm trivial(*data.base, 4, 4);
        trivial.at(0, 0) = FormElement::unit(*data.base);
        trivial.at(1, 1) = FormElement::unit(*data.base);
        require(curvature(trivial).is_zero(), "constant projection has curvature");
        auto cert = self_duality_check(trivial);
        require(cert.status == CertStatus::PASS, "trivial certificate failed");
    });
    return rep;
}

Report charge_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt) {
    InstantonData data = build_instanton_data(spec);
    Report rep = make_report("charge", *data.base, opt);

    rep.run("volume: integral(1) = 8/3*pi^2", [&] {
        IntegralValue v = invariant_integral(AlgebraElement::unit(*data.base));
        require(v.as_rational() == Rational(8, 3), "volume is " + v.to_string());
    });
    rep.run("second Chern charge = 1, mu-free", [&] {
        ChargeResult c = second_chern_charge(data.projection);
        require(c.value == 1, "charge is " + c.value.str());
        require(c.mu_free, "charge depends on mu");
    });
    rep.run("trivial projection has charge 0", [&] {
        MatrixForm trivial(*data.base, 4, 4);
        trivial.at(0, 0) = FormElement::unit(*data.base);
        trivial.at(1, 1) = FormElement::unit(*data.base);
        ChargeResult c = second_chern_charge(trivial);
        require(c.value == 0, "charge is " + c.value.str());
    });
    return rep;
}

Report norms_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt) {
    InstantonData data = build_instanton_data(spec);
    const ManifoldSpec& base = *data.base;
    const ManifoldSpec& total = *data.total;
    Report rep = make_report("norms", base, opt);
    Sampler sampler(base, opt.seed);

    rep.run("<u1,u1> = 1", [&] {
        MatrixForm u1(total, 4, 1);
        for (int j = 0; j < 4; ++j) u1.at(j, 0) = data.hopf_frame.at(j, 0);
        require(hermitian(u1, u1) == AlgebraElement::unit(total), "<u1,u1> != 1");
    });
    rep.run("||1||_2^2 = integral(1)", [&] {
        MatrixForm one(base, 1, 1);
        one.at(0, 0) = FormElement::unit(base);
        double n2 = p_norm(one, 2, opt.theta);
        double vol = invariant_integral(AlgebraElement::unit(base)).evaluate(opt.theta).real();
        require(std::abs(n2 * n2 - vol) < 1e-9, "||1||_2^2 != integral(1)");
    });
    rep.run("hermitian right-linearity", [&] {
        for (int i = 0; i < 8; ++i) {
            MatrixForm phi(base, 2, 1), psi(base, 2, 1);
            phi.at(0, 0) = FormElement(sampler.element(2, 2));
            phi.at(1, 0) = FormElement(sampler.element(2, 2));
            psi.at(0, 0) = FormElement(sampler.element(2, 2));
            psi.at(1, 0) = FormElement(sampler.element(2, 2));
            AlgebraElement a = sampler.element(2, 2);
            MatrixForm psia(base, 2, 1);
            psia.at(0, 0) = psi.at(0, 0) * FormElement(a);
            psia.at(1, 0) = psi.at(1, 0) * FormElement(a);
            require(hermitian(phi, psia) == hermitian(phi, psi) * a,
                    "<phi, psi a> != <phi,psi> a");
        }
    });
    rep.run("sobolev k=0 equals the 2-norm", [&] {
        MatrixForm col(base, 4, 1);
        for (int j = 0; j < 4; ++j) col.at(j, 0) = data.projection.at(j, 0);
        double s0 = sobolev_norm(data.projection, col, 0, opt.theta);
        double n2 = p_norm(col, 2, opt.theta);
        require(std::abs(s0 - n2) < 1e-9, "sobolev k=0 differs from the 2-norm");
    });
    rep.run("sobolev monotone in k", [&] {
        for (int i = 0; i < 2; ++i) {
            MatrixForm raw(base, 4, 1);
            for (int j = 0; j < 4; ++j) raw.at(j, 0) = FormElement(sampler.element(1, 1));
            MatrixForm col = (data.projection * raw).reduce();
            auto pieces = sobolev_pieces(data.projection, col, 2);
            double acc = 0;
            std::vector<double> norms;
            for (const auto& piece : pieces) {
                double v = piece.evaluate(opt.theta).real();
                require(v >= -1e-9, "negative squared norm piece: " + piece.to_string());
                acc += v;
                norms.push_back(std::sqrt(std::max(acc, 0.0)));
            }
            require(norms[1] >= norms[0] - 1e-9 && norms[2] >= norms[1] - 1e-9,
                    "sobolev norms not monotone");
        }
    });
    rep.run("cauchy-schwarz", [&] {
        for (int i = 0; i < 6; ++i) {
            MatrixForm phi(base, 2, 1), psi(base, 2, 1);
            for (int j = 0; j < 2; ++j) {
                phi.at(j, 0) = FormElement(sampler.element(2, 2));
                psi.at(j, 0) = FormElement(sampler.element(2, 2));
            }
            double lhs =
                std::abs(invariant_integral(hermitian(phi, psi)).evaluate(opt.theta));
            double rhs = p_norm(phi, 2, opt.theta) * p_norm(psi, 2, opt.theta);
            require(lhs <= rhs + 1e-9, "cauchy-schwarz violated");
        }
    });
    return rep;
}

Report braiding_suite(std::shared_ptr<const ManifoldSpec> spec_ptr, const SuiteOptions& opt) {
    const ManifoldSpec& spec = *spec_ptr;
    Report rep = make_report("braiding", spec, opt);
    Sampler sampler(spec, opt.seed);

    rep.run("braiding squares to the identity", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous(), b = sampler.homogeneous();
            BraidedPair once = braiding(a, b);
            BraidedPair twice = braiding(once.first, once.second);
            require(twice.first == a && twice.second == b, "braiding did not swap back");
            require((once.factor * twice.factor).is_one(), "braiding factors do not cancel");
        }
    });
    rep.run("braiding factor matches the commutation relation", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous(), b = sampler.homogeneous();
            BraidedPair br = braiding(a, b);
            require(a * b == (b * a).scale(br.factor), "ab != factor * ba");
        }
    });
    rep.run("classical limit is the plain transposition", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous(), b = sampler.homogeneous();
            BraidedPair br = braiding(a, b);
            auto v = br.factor.evaluate(Theta{0});
            require(std::abs(v.real() - 1.0) < 1e-12 && std::abs(v.imag()) < 1e-12,
                    "factor at theta=0 is not 1");
        }
    });
    rep.run("bicharacter at zero degree", [&] {
        MultiDegree zero(std::vector<int>(spec.torus_rank, 0));
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous();
            auto d = a.homogeneous_degree();
            require(bicharacter(spec, *d, zero).is_one() &&
                        bicharacter(spec, zero, *d).is_one(),
                    "bicharacter at 0 is not 1");
        }
    });
    rep.run("bicharacter skew symmetry", [&] {
        for (int i = 0; i < opt.samples; ++i) {
            AlgebraElement a = sampler.homogeneous(), b = sampler.homogeneous();
            auto r = a.homogeneous_degree(), s = b.homogeneous_degree();
            require((bicharacter(spec, *r, *s) * bicharacter(spec, *s, *r)).is_one(),
                    "chi(r,s)chi(s,r) != 1");
        }
    });
    return rep;
}

Report gauge_suite(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt) {
    InstantonData data = build_instanton_data(spec);
    const ManifoldSpec& base = *data.base;
    const MatrixForm& p = data.projection;
    Report rep = make_report("gauge", base, opt);

    // a compatible potential to transform: alpha = p dp p - (p dp p)* would be
    // zero; use alpha = c (p (dx0) p - adjoint) restricted to the module
    MatrixForm x0dx0(base, 4, 4);
    {
        int g = base.generator_index("x0");
        FormElement w = FormElement::generator(base, g) * FormElement::frame(base, g);
        for (int i = 0; i < 4; ++i) x0dx0.at(i, i) = w;
    }
    MatrixForm raw_alpha = (p * x0dx0 * p).reduce();
    MatrixForm alpha = (raw_alpha - raw_alpha.adjoint()).reduce();

    rep.run("identity gauge transformation fixes alpha", [&] {
        MatrixForm out = gauge_transform_form(alpha, p, p);
        require((out - alpha).reduces_to_zero(), "alpha^p != alpha");
    });
    rep.run("constant phases act trivially", [&] {
        for (Coefficient c : {Coefficient::imaginary_unit(), Coefficient::mu(1),
                              Coefficient::mu(-2) * Coefficient::imaginary_unit()}) {
            MatrixForm u = p.scale(c);
            MatrixForm out = gauge_transform_form(alpha, u, p);
            require((out - alpha).reduces_to_zero(), "constant phase moved alpha");
        }
    });
    rep.run("gauge transform preserves skew-adjointness", [&] {
        MatrixForm w = MatrixForm::identity(base, 4);
        w.at(0, 0) = FormElement::unit(base).scale(Coefficient::rational(Rational(3, 5)));
        w.at(0, 1) = FormElement::unit(base).scale(Coefficient::rational(Rational(4, 5)));
        w.at(1, 0) = FormElement::unit(base).scale(Coefficient::rational(Rational(-4, 5)));
        w.at(1, 1) = FormElement::unit(base).scale(Coefficient::rational(Rational(3, 5)));
        MatrixForm u = (w * p).reduce();
        MatrixForm out = gauge_transform_form(alpha, u, p);
        require((out + out.adjoint()).reduces_to_zero(), "alpha^U is not skew-adjoint");
    });
    rep.run("curvature transforms as F -> U F U*", [&] {
        MatrixForm w = MatrixForm::identity(base, 4);
        w.at(2, 2) = FormElement::unit(base).scale(Coefficient::imaginary_unit());
        w.at(3, 3) = FormElement::unit(base).scale(-Coefficient::imaginary_unit());
        MatrixForm u = (w * p).reduce();
        MatrixForm ustar = u.adjoint();
        MatrixForm target = (u * ustar).reduce();
        MatrixForm a_new = gauge_transform_form(alpha, u, p);
        MatrixForm lhs = curvature_with_potential(target, a_new);
        MatrixForm rhs = (u * curvature_with_potential(p, alpha) * ustar).reduce();
        require((lhs - rhs).reduces_to_zero(), "curvature is not gauge covariant");
    });
    rep.run("gauge action composes", [&] {
        MatrixForm w1 = MatrixForm::identity(base, 4);
        w1.at(0, 0) = FormElement::unit(base).scale(Coefficient::imaginary_unit());
        w1.at(1, 1) = FormElement::unit(base).scale(-Coefficient::imaginary_unit());
        MatrixForm u1 = (w1 * p).reduce();
        MatrixForm p1 = (u1 * u1.adjoint()).reduce();
        MatrixForm w2 = MatrixForm::identity(base, 4);
        w2.at(2, 3) = FormElement::unit(base);
        w2.at(3, 2) = -FormElement::unit(base);
        w2.at(2, 2) = FormElement::zero(base);
        w2.at(3, 3) = FormElement::zero(base);
        MatrixForm u2 = (w2 * p1).reduce();
        MatrixForm a1 = gauge_transform_form(alpha, u1, p);
        MatrixForm a12 = gauge_transform_form(a1, u2, p1);
        MatrixForm u21 = (u2 * u1).reduce();
        MatrixForm direct = gauge_transform_form(alpha, u21, p);
        require((a12 - direct).reduces_to_zero(), "(alpha^U1)^U2 != alpha^(U2 U1)");
    });
    return rep;
}

Report moduli_dim_suite(long long k, bool single, const SuiteOptions& opt) {
    Report rep;
    rep.suite = "moduli-dim";
    rep.spec_name = "s4-theta";
    rep.spec_digest = spec_hash(*ManifoldSpec::builtin("s4-theta"));
    rep.seed = opt.seed;
    rep.theta = rational_to_string(opt.theta.value);
    auto check_k = [&](long long kk) {
        ChernData data;
        data.k = kk;
        ModuliDimension md = index_and_dimension(data);
        std::string name = "k=" + std::to_string(kk);
        std::string detail = "ind=" + std::to_string(md.index) +
                             " dim=" + std::to_string(md.dimension) +
                             (md.no_irreducible ? " (no irreducible instantons)" : "");
        bool ok = md.index == 8 * kk - 4 && md.dimension == 8 * kk - 3 &&
                  md.no_irreducible == (md.dimension <= 0);
        rep.add(name, ok, detail);
    };
    if (single) check_k(k);
    else
        for (long long kk = 1; kk <= k; ++kk) check_k(kk);
    return rep;
}

Report all_suites(std::shared_ptr<const ManifoldSpec> spec, const SuiteOptions& opt) {
    Report rep = make_report("all", *spec, opt);
    rep.merge(verify_algebra_suite(spec, opt));
    rep.merge(braiding_suite(spec, opt));
    if (spec->instanton) {
        rep.merge(verify_projection_suite(spec, opt));
        rep.merge(curvature_suite(spec, opt));
        rep.merge(self_dual_suite(spec, opt));
        rep.merge(charge_suite(spec, opt));
        rep.merge(gauge_suite(spec, opt));
        rep.merge(norms_suite(spec, opt));
    }
    rep.merge(moduli_dim_suite(5, false, opt));
    return rep;
}

} // namespace thetasphere
