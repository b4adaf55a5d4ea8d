#include "thetasphere/coeff.hpp"

#include <cmath>
#include <sstream>

namespace thetasphere {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

GaussianRational GaussianRational::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw Error("division by zero gaussian rational");
    return {re / n, -im / n};
}

std::string gaussian_to_string(const GaussianRational& v) {
    if (v.is_zero()) return "0";
    if (v.im == 0) return rational_to_string(v.re);
    std::string im_part;
    if (v.im == 1) im_part = "i";
    else if (v.im == -1) im_part = "-i";
    else im_part = rational_to_string(v.im) + "*i";
    if (v.re == 0) return im_part;
    std::string s = rational_to_string(v.re);
    if (v.im > 0) s += "+" + im_part;
    else s += im_part; // carries its own minus
    return "(" + s + ")";
}

Coefficient Coefficient::from_value(GaussianRational v, int exponent) {
    Coefficient c;
    if (!v.is_zero()) c.terms_[exponent] = std::move(v);
    return c;
}

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == GaussianRational{1};
}

bool Coefficient::mu_free() const {
    for (const auto& [k, v] : terms_)
        if (k != 0) return false;
    return true;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    Coefficient r = *this;
    for (const auto& [k, v] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = v;
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

Coefficient Coefficient::operator-() const {
    Coefficient r;
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
    Coefficient r;
    for (const auto& [k1, v1] : terms_) {
        for (const auto& [k2, v2] : o.terms_) {
            GaussianRational p = v1 * v2;
            if (p.is_zero()) continue;
            auto it = r.terms_.find(k1 + k2);
            if (it == r.terms_.end()) {
                r.terms_[k1 + k2] = p;
            } else {
                it->second = it->second + p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Coefficient Coefficient::shift_mu(int k, bool negate) const {
    Coefficient r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k,
                                                            negate ? -v : v);
    return r;
}

Coefficient Coefficient::involution() const {
    Coefficient r;
    for (const auto& [k, v] : terms_) r.terms_[-k] = v.conj();
    return r;
}

Coefficient Coefficient::inverse() const {
    if (!is_monomial()) throw Error("coefficient inverse defined for mu-monomials only");
    const auto& [k, v] = *terms_.begin();
    return from_value(v.inverse(), -k);
}

std::complex<double> Coefficient::evaluate(const Theta& theta) const {
    std::complex<double> acc{0.0, 0.0};
    const double t = theta.as_double();
    for (const auto& [k, v] : terms_) {
        std::complex<double> phase = std::polar(1.0, M_PI * t * k);
        acc += v.to_complex() * phase;
    }
    return acc;
}

GaussianRational Coefficient::classical_value() const {
    GaussianRational acc;
    for (const auto& [k, v] : terms_) acc = acc + v;
    return acc;
}

Rational Coefficient::as_rational() const {
    if (is_zero()) return 0;
    if (!mu_free()) throw Error("coefficient is not mu-free: " + to_string());
    const auto& v = terms_.begin()->second;
    if (v.im != 0) throw Error("coefficient is not real: " + to_string());
    return v.re;
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        std::string val = gaussian_to_string(v);
        bool negative = val.size() > 0 && val[0] == '-';
        if (first) {
            first = false;
        } else if (negative) {
            s += " - ";
            val = val.substr(1);
        } else {
            s += " + ";
        }
        if (k == 0) {
            s += val;
        } else {
            std::string mu = k == 1 ? "mu" : "mu^" + std::to_string(k);
            if (val == "1") s += mu;
            else if (val == "-1") s += "-" + mu;
            else s += val + "*" + mu;
        }
    }
    return s;
}

} // namespace thetasphere
