#include "thetasphere/integral.hpp"

#include <cmath>

#include "thetasphere/errors.hpp"
#include "thetasphere/hodge.hpp"

namespace thetasphere {

std::complex<double> IntegralValue::evaluate(const Theta& theta) const {
    return pi2_multiple.evaluate(theta) * (M_PI * M_PI);
}

std::string IntegralValue::to_string() const {
    if (pi2_multiple.is_zero()) return "0";
    if (pi2_multiple.mu_free() && pi2_multiple.terms().begin()->second.im == 0)
        return rational_to_string(pi2_multiple.as_rational()) + "*pi^2";
    return "(" + pi2_multiple.to_string() + ")*pi^2";
}

namespace {

// Gamma(k + 1/2) / sqrt(pi), exact
Rational gamma_half_ratio(int k) {
    Rational r = 1;
    for (int j = 1; j <= k; ++j) r *= Rational(2 * j - 1, 2);
    return r;
}

Rational binomial(int n, int k) {
    Rational r = 1;
    for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
    return r;
}

} // namespace

Rational sphere_monomial_integral(const std::vector<int>& exponents) {
    // closed Gamma form; odd exponents integrate to zero
    int total_half = 0;
    for (int e : exponents) {
        if (e < 0) throw Error("negative exponent");
        if (e % 2 == 1) return 0;
        total_half += e / 2;
    }
    const int n = static_cast<int>(exponents.size());
    if (n % 2 == 0) throw Error("even ambient dimension not supported");
    const int m = (n - 1) / 2; // pi^m carried by the caller's unit
    Rational num = 2;
    for (int e : exponents) num *= gamma_half_ratio(e / 2);
    return num / gamma_half_ratio(total_half + m);
}

IntegralValue invariant_integral(const AlgebraElement& a) {
    const ManifoldSpec& spec = *a.spec();
    if (!spec.ambient)
        throw PreconditionError("invariant integral needs an ambient sphere frame");
    const AmbientData& amb = *spec.ambient;
    if (amb.coordinates.size() != 5)
        throw PreconditionError("invariant integral implemented for five ambient coordinates");

    Coefficient total;
    for (const auto& [w, c] : a.terms()) {
        if (!word_degree(spec, w).is_zero()) continue; // torus invariance
        // counts per coordinate
        std::vector<int> count(spec.n_generators(), 0);
        for (unsigned char l : w) {
            if (spec.is_frame_letter(l))
                throw PreconditionError("invariant integral of a form of positive degree");
            ++count[l];
        }
        for (const auto& [g, h] : amb.pairs)
            if (count[g] != count[h])
                throw Error("invariant word is unbalanced; unsupported ambient pairing");
        // x0^a prod (g g*)^{b_k} -> y0^a prod (y^2 + y'^2)^{b_k}
        int a0 = count[amb.self_coordinate];
        if (a0 % 2 == 1) continue;
        std::vector<int> pair_counts;
        for (const auto& [g, h] : amb.pairs) pair_counts.push_back(count[g]);
        // expand the binomials exactly
        Rational acc = 0;
        std::vector<int> split(pair_counts.size(), 0);
        while (true) {
            Rational coeff = 1;
            std::vector<int> exps;
            exps.push_back(a0);
            for (size_t k = 0; k < pair_counts.size(); ++k) {
                coeff *= binomial(pair_counts[k], split[k]);
                exps.push_back(2 * split[k]);
                exps.push_back(2 * (pair_counts[k] - split[k]));
            }
            acc += coeff * sphere_monomial_integral(exps);
            size_t k = 0;
            while (k < split.size() && split[k] == pair_counts[k]) split[k++] = 0;
            if (k == split.size()) break;
            ++split[k];
        }
        total = total + c * Coefficient::rational(acc);
    }
    return {total};
}

IntegralValue integrate_top_form(const FormElement& form) {
    const ManifoldSpec& spec = *form.spec();
    if (!spec.ambient)
        throw PreconditionError("top-form integration needs an ambient frame");
    const AmbientData& amb = *spec.ambient;

    std::vector<detail::RawTerm> nf_raw;
    for (const auto& [w, c] : amb.normal_form_terms) nf_raw.push_back({w, c});
    FormElement nflat = FormElement::from_raw(spec, std::move(nf_raw));
    FormElement top = nflat * form;

    std::vector<detail::RawTerm> raw;
    for (const auto& [w, c] : top.terms()) {
        uint32_t mask = 0;
        Word alg;
        for (unsigned char l : w) {
            if (spec.is_frame_letter(l)) mask |= 1u << spec.base_generator(l);
            else alg.push_back(l);
        }
        if (mask != amb.full_mask) continue; // only the volume word pairs
        raw.push_back({std::move(alg), c * amb.top_reading});
    }
    AlgebraElement coefficient = AlgebraElement::from_raw(spec, std::move(raw));
    return invariant_integral(coefficient);
}

FormElement hermitian_pairing(const MatrixForm& a, const MatrixForm& b) {
    if (a.rows() != b.rows() || a.cols() != 1 || b.cols() != 1)
        throw DimensionError("hermitian pairing expects equal-length columns");
    FormElement acc = FormElement::zero(*a.spec());
    for (int j = 0; j < a.rows(); ++j) acc = acc + a.at(j, 0).star() * b.at(j, 0);
    return acc;
}

AlgebraElement hermitian(const MatrixForm& a, const MatrixForm& b) {
    return hermitian_pairing(a, b).to_algebra();
}

double p_norm(const MatrixForm& column, int p, const Theta& theta) {
    if (p <= 0 || p % 2 != 0)
        throw PreconditionError("p-norms require even p (roots of algebra elements undefined)");
    AlgebraElement pairing = hermitian(column, column);
    AlgebraElement power = AlgebraElement::unit(*column.spec());
    for (int i = 0; i < p / 2; ++i) power = power * pairing;
    IntegralValue integral = invariant_integral(power);
    double value = integral.evaluate(theta).real();
    if (value < 0 && value > -1e-12) value = 0;
    return std::pow(value, 1.0 / p);
}

IntegralValue one_form_norm_squared(const MatrixForm& column) {
    IntegralValue acc{};
    for (int j = 0; j < column.rows(); ++j) {
        const FormElement& f = column.at(j, 0);
        if (f.is_zero()) continue;
        acc = acc + integrate_top_form(f.star() * hodge_star_unreduced(f));
    }
    return acc;
}

namespace {

// real coordinate functions of the ambient frame: y_0 = x0, then (re, im)
// per complex pair
std::vector<AlgebraElement> real_coordinates(const ManifoldSpec& spec) {
    const AmbientData& amb = *spec.ambient;
    std::vector<AlgebraElement> ys;
    ys.push_back(AlgebraElement::generator(spec, amb.self_coordinate));
    const Coefficient half = Coefficient::rational(Rational(1, 2));
    const Coefficient mhalf_i =
        Coefficient::from_value(GaussianRational{0, Rational(-1, 2)});
    for (const auto& [g, h] : amb.pairs) {
        AlgebraElement zg = AlgebraElement::generator(spec, g);
        AlgebraElement zh = AlgebraElement::generator(spec, h);
        ys.push_back((zg + zh).scale(half));
        ys.push_back((zg - zh).scale(mhalf_i));
    }
    return ys;
}

// tangential projector q = 1 - y y^T over the algebra
MatrixForm tangential_projector(const ManifoldSpec& spec) {
    auto ys = real_coordinates(spec);
    const int n = static_cast<int>(ys.size());
    MatrixForm q = MatrixForm::identity(spec, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q.at(i, j) = (q.at(i, j) - FormElement(ys[i] * ys[j])).reduce();
    return q;
}

// components of a one-form column against the real co-frame: w_{j,alpha}
MatrixForm real_components(const ManifoldSpec& spec, const MatrixForm& forms) {
    const AmbientData& amb = *spec.ambient;
    const int n = spec.n_generators();
    // dy_alpha ordering must match real_coordinates: self, then pairs
    std::vector<std::vector<GaussianRational>> C(n, std::vector<GaussianRational>(n));
    {
        int alpha = 0;
        C[amb.self_coordinate][alpha++] = GaussianRational{1};
        for (const auto& [g, h] : amb.pairs) {
            C[g][alpha] = GaussianRational{1};
            C[h][alpha] = GaussianRational{1};
            C[g][alpha + 1] = GaussianRational{0, 1};
            C[h][alpha + 1] = GaussianRational{0, -1};
            alpha += 2;
        }
    }
    MatrixForm out(spec, forms.rows(), n);
    for (int j = 0; j < forms.rows(); ++j) {
        for (const auto& [w, c] : forms.at(j, 0).terms()) {
            Word alg;
            int frame = -1;
            for (unsigned char l : w) {
                if (spec.is_frame_letter(l)) {
                    if (frame >= 0) throw PreconditionError("expected a one-form column");
                    frame = spec.base_generator(l);
                } else {
                    alg.push_back(l);
                }
            }
            if (frame < 0) throw PreconditionError("expected a one-form column");
            for (int alpha = 0; alpha < n; ++alpha) {
                if (C[frame][alpha].is_zero()) continue;
                FormElement piece = FormElement::from_raw(
                    spec, {{alg, c * Coefficient::from_value(C[frame][alpha])}});
                out.at(j, alpha) = out.at(j, alpha) + piece;
            }
        }
    }
    return out.reduce();
}

} // namespace

std::vector<IntegralValue> sobolev_pieces(const MatrixForm& projection,
                                          const MatrixForm& column, int k) {
    if (k < 0 || k > 2) throw PreconditionError("sobolev norms implemented for k <= 2");
    const ManifoldSpec& spec = *projection.spec();
    std::vector<IntegralValue> pieces;
    pieces.push_back(invariant_integral(hermitian(column, column)));
    if (k >= 1) {
        MatrixForm grad = grassmann_apply(projection, column);
        pieces.push_back(one_form_norm_squared(grad));
        if (k >= 2) {
            MatrixForm q = tangential_projector(spec);
            MatrixForm w = (real_components(spec, grad) * q).reduce();
            MatrixForm s = (projection * w.d_entrywise() * q).reduce();
            IntegralValue acc{};
            for (int i = 0; i < s.rows(); ++i) {
                for (int j = 0; j < s.cols(); ++j) {
                    const FormElement& f = s.at(i, j);
                    if (f.is_zero()) continue;
                    acc = acc + integrate_top_form(f.star() * hodge_star_unreduced(f));
                }
            }
            pieces.push_back(acc);
        }
    }
    return pieces;
}

double sobolev_norm(const MatrixForm& projection, const MatrixForm& column, int k,
                    const Theta& theta) {
    auto pieces = sobolev_pieces(projection, column, k);
    double acc = 0;
    for (const auto& piece : pieces) acc += piece.evaluate(theta).real();
    if (acc < 0 && acc > -1e-12) acc = 0;
    return std::sqrt(acc);
}

ChargeResult second_chern_charge(const MatrixForm& projection) {
    MatrixForm f = curvature(projection);
    FormElement action = (f * f).trace();
    ChargeResult result;
    result.action_pairing = integrate_top_form(action);
    Coefficient charge =
        result.action_pairing.pi2_multiple * Coefficient::rational(Rational(-1, 8));
    result.mu_free = charge.mu_free();
    if (!result.mu_free)
        throw Error("second Chern charge is mu-dependent: " + charge.to_string());
    Rational r = charge.as_rational();
    if (boost::multiprecision::denominator(r) != 1)
        throw Error("second Chern charge is not integral: " + rational_to_string(r) +
                    " (convention or reduction bug)");
    result.value = boost::multiprecision::numerator(r);
    return result;
}

ModuliDimension index_and_dimension(const ChernData& data) {
    ModuliDimension out;
    out.index = static_cast<long long>(data.spinor_rank) * (4 * data.k) - data.ad_rank;
    out.dimension = out.index + data.h0 + data.h2;
    out.no_irreducible = out.dimension <= 0;
    return out;
}

} // namespace thetasphere
