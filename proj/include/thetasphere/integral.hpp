#pragma once

#include "thetasphere/matrix.hpp"

namespace thetasphere {

/// Exact multiple of the symbolic unit pi^2 (Gaussian-rational Laurent in mu;
/// the spec-level values are plain rationals and render as "p/q*pi^2").
struct IntegralValue {
    Coefficient pi2_multiple;

    IntegralValue operator+(const IntegralValue& o) const {
        return {pi2_multiple + o.pi2_multiple};
    }
    IntegralValue scale(const Coefficient& c) const { return {pi2_multiple * c}; }
    bool operator==(const IntegralValue& o) const { return pi2_multiple == o.pi2_multiple; }
    bool is_zero() const { return pi2_multiple.is_zero(); }
    Rational as_rational() const { return pi2_multiple.as_rational(); }
    /// numeric value (times pi^2) at the given theta
    std::complex<double> evaluate(const Theta& theta) const;
    std::string to_string() const;
};

/// integral over S^{n-1} of prod y_i^{exponents[i]}, exact (n = 5 gives
/// rational multiples of pi^2)
Rational sphere_monomial_integral(const std::vector<int>& exponents);

/// torus-invariant noncommutative integral: classical integral of the
/// degree-(0,...,0) part over the round sphere
IntegralValue invariant_integral(const AlgebraElement& a);

/// pairs a four-form against the oriented volume via n-flat wedge in the
/// ambient free dga; well-defined on ideal classes
IntegralValue integrate_top_form(const FormElement& form);

/// sum_j a_j* b_j over column entries (general form degree)
FormElement hermitian_pairing(const MatrixForm& a, const MatrixForm& b);
/// the Hermitian structure on function columns
AlgebraElement hermitian(const MatrixForm& a, const MatrixForm& b);

/// ||phi||_p = (integral <phi,phi>^{p/2})^{1/p}, p even, at numeric theta
double p_norm(const MatrixForm& column, int p, const Theta& theta);

/// L^2 pairing of one-form columns through the Hodge star
IntegralValue one_form_norm_squared(const MatrixForm& column);

/// Sobolev (2,k)-norm on module sections, k <= 2, Grassmann connection and
/// the tangential cotangent projector
double sobolev_norm(const MatrixForm& projection, const MatrixForm& column, int k,
                    const Theta& theta);
/// the exact squared pieces ||nabla^j phi||_2^2 for j = 0..k
std::vector<IntegralValue> sobolev_pieces(const MatrixForm& projection,
                                          const MatrixForm& column, int k);

struct ChargeResult {
    boost::multiprecision::cpp_int value; // the instanton number
    IntegralValue action_pairing;         // integral of tr(F wedge F)
    bool mu_free = false;
};

/// -(1/8 pi^2) integral of tr(F^F); exact, must land on an integer
ChargeResult second_chern_charge(const MatrixForm& projection);

struct ChernData {
    int spinor_rank = 2; // rank of the half-spinor fibre
    int ad_rank = 4;     // rank of the adjoint bundle fibre
    long long k = 0;     // instanton number
    int h0 = 1;          // constants
    int h2 = 0;          // positive scalar curvature
};

struct ModuliDimension {
    long long index = 0;
    long long dimension = 0;
    bool no_irreducible = false; // flagged when the dimension is not positive
};

ModuliDimension index_and_dimension(const ChernData& data);

} // namespace thetasphere
