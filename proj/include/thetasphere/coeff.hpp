#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <string>

#include "thetasphere/errors.hpp"

namespace thetasphere {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);

/// Gaussian rational a + b*i with exact components.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const;
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

std::string gaussian_to_string(const GaussianRational& v);

/// Deformation parameter theta; exact rational, evaluated to double on demand.
struct Theta {
    Rational value{0};
    double as_double() const { return static_cast<double>(value); }
};

/// Exact element of the Laurent ring Q(i)[mu, mu^-1], mu the formal unit
/// phase e^{i pi theta}.  Canonical sparse form: no zero values stored.
class Coefficient {
public:
    Coefficient() = default;

    static Coefficient zero() { return {}; }
    static Coefficient one() { return from_value(GaussianRational{1}); }
    static Coefficient imaginary_unit() { return from_value(GaussianRational{0, 1}); }
    static Coefficient rational(Rational r) { return from_value(GaussianRational{std::move(r)}); }
    static Coefficient from_value(GaussianRational v, int exponent = 0);
    /// mu^k
    static Coefficient mu(int k = 1) { return from_value(GaussianRational{1}, k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// true when no term carries a nonzero mu exponent
    bool mu_free() const;
    /// single-term test; units of the ring are exactly the mu-monomials
    bool is_monomial() const { return terms_.size() == 1; }

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator-() const;
    bool operator==(const Coefficient& o) const { return terms_ == o.terms_; }

    /// multiply by (+-1) mu^k in one pass
    Coefficient shift_mu(int k, bool negate) const;

    /// involution: conjugates values and negates mu exponents (mu* = mu^-1)
    Coefficient involution() const;
    /// multiplicative inverse; defined for mu-monomials only
    Coefficient inverse() const;

    /// numeric value at mu = exp(i pi theta)
    std::complex<double> evaluate(const Theta& theta) const;
    /// exact classical limit mu = 1
    GaussianRational classical_value() const;
    /// exact rational value, requires mu-free and real
    Rational as_rational() const;

    const std::map<int, GaussianRational>& terms() const { return terms_; }
    std::string to_string() const;

private:
    // exponent of mu -> value
    std::map<int, GaussianRational> terms_;
};

} // namespace thetasphere
