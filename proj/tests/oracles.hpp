// Test-only oracles, independent of the rewriting engine:
//  - a commutative polynomial ring with substitution-based sphere reduction
//  - a classical exterior algebra over it
//  - a pointwise numeric Hodge star on the embedded sphere
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "thetasphere/element.hpp"

namespace oracles {

using thetasphere::AlgebraElement;
using thetasphere::FormElement;
using thetasphere::GaussianRational;
using thetasphere::ManifoldSpec;
using thetasphere::Rational;

// ---------------------------------------------------------------- commutative

struct CommutativePoly {
    // exponent vector per generator -> value
    std::map<std::vector<int>, GaussianRational> terms;

    void add(const std::vector<int>& mono, const GaussianRational& v) {
        if (v.is_zero()) return;
        auto it = terms.find(mono);
        if (it == terms.end()) {
            terms[mono] = v;
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    CommutativePoly mul(const CommutativePoly& o) const {
        CommutativePoly r;
        for (const auto& [m1, v1] : terms)
            for (const auto& [m2, v2] : o.terms) {
                std::vector<int> m = m1;
                for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
                r.add(m, v1 * v2);
            }
        return r;
    }

    bool operator==(const CommutativePoly& o) const { return terms == o.terms; }
};

// substitution-based reduction: the pair (a, b) rewrites x_a x_b -> 1 - sum of
// the other conjugate pairs (the round sphere relation), self coordinate c
inline CommutativePoly reduce_sphere(const CommutativePoly& p, int a, int b, int c,
                                     const std::vector<std::pair<int, int>>& other_pairs) {
    CommutativePoly work = p;
    for (;;) {
        bool changed = false;
        CommutativePoly next;
        for (const auto& [m, v] : work.terms) {
            if (m[a] >= 1 && m[b] >= 1) {
                changed = true;
                std::vector<int> base = m;
                --base[a];
                --base[b];
                next.add(base, v); // * 1
                std::vector<int> sq = base;
                sq[c] += 2;
                next.add(sq, -v);
                for (auto [g, h] : other_pairs) {
                    std::vector<int> gh = base;
                    ++gh[g];
                    ++gh[h];
                    next.add(gh, -v);
                }
            } else {
                next.add(m, v);
            }
        }
        work = std::move(next);
        if (!changed) return work;
    }
}

// classical limit mu = 1 of an engine element, as oracle data
inline CommutativePoly classical_limit(const AlgebraElement& e) {
    CommutativePoly p;
    const int n = e.spec()->n_generators();
    for (const auto& [w, c] : e.terms()) {
        std::vector<int> mono(n, 0);
        for (unsigned char l : w) ++mono[l];
        p.add(mono, c.classical_value());
    }
    return p;
}

// ------------------------------------------------------------------ exterior

struct ExteriorTerm {
    std::vector<int> mono;
    uint32_t mask = 0;
};

struct ExteriorPoly {
    std::map<std::pair<std::vector<int>, uint32_t>, GaussianRational> terms;

    void add(const std::vector<int>& mono, uint32_t mask, const GaussianRational& v) {
        if (v.is_zero()) return;
        auto key = std::make_pair(mono, mask);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms[key] = v;
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    ExteriorPoly wedge(const ExteriorPoly& o) const {
        ExteriorPoly r;
        for (const auto& [k1, v1] : terms)
            for (const auto& [k2, v2] : o.terms) {
                if (k1.second & k2.second) continue;
                // sign of merging the two ascending index sets
                int sign = 0;
                for (int b = 0; b < 32; ++b)
                    if (k2.second & (1u << b)) {
                        uint32_t higher = k1.second >> (b + 1);
                        sign += __builtin_popcount(higher);
                    }
                std::vector<int> m = k1.first;
                for (size_t i = 0; i < m.size(); ++i) m[i] += k2.first[i];
                GaussianRational v = v1 * v2;
                if (sign % 2) v = -v;
                r.add(m, k1.second | k2.second, v);
            }
        return r;
    }

    ExteriorPoly d() const {
        ExteriorPoly r;
        for (const auto& [k, v] : terms) {
            const auto& mono = k.first;
            const uint32_t mask = k.second;
            for (size_t g = 0; g < mono.size(); ++g) {
                if (mono[g] == 0) continue;
                if (mask & (1u << g)) continue; // repeated frame symbol dies
                std::vector<int> m = mono;
                --m[g];
                GaussianRational nv = v * GaussianRational{mono[g]};
                // df wedges from the left; sort dx_g into the ascending mask
                if (__builtin_popcount(mask & ((1u << g) - 1)) % 2) nv = -nv;
                r.add(m, mask | (1u << g), nv);
            }
        }
        return r;
    }

    bool operator==(const ExteriorPoly& o) const { return terms == o.terms; }
};

inline ExteriorPoly classical_limit_form(const FormElement& e) {
    ExteriorPoly p;
    const auto& spec = *e.spec();
    const int n = spec.n_generators();
    for (const auto& [w, c] : e.terms()) {
        std::vector<int> mono(n, 0);
        uint32_t mask = 0;
        for (unsigned char l : w) {
            if (spec.is_frame_letter(l)) mask |= 1u << spec.base_generator(l);
            else ++mono[l];
        }
        p.add(mono, mask, c.classical_value());
    }
    return p;
}

// --------------------------------------------------------- numeric hodge star

// evaluates a two-form over the s4 spec at a classical point (theta = 0),
// returning the ambient antisymmetric matrix in the real frame dy_0..dy_4
struct NumericHodge {
    // complex coordinate values at a real point
    static std::array<std::complex<double>, 5> coords(const std::array<double, 5>& y) {
        return {std::complex<double>(y[0], 0), {y[1], y[2]}, {y[1], -y[2]},
                {y[3], y[4]}, {y[3], -y[4]}};
    }

    static std::array<std::array<std::complex<double>, 5>, 5> frame_change() {
        std::array<std::array<std::complex<double>, 5>, 5> C{};
        C[0][0] = 1;
        C[1][1] = 1;
        C[1][2] = {0, 1};
        C[2][1] = 1;
        C[2][2] = {0, -1};
        C[3][3] = 1;
        C[3][4] = {0, 1};
        C[4][3] = 1;
        C[4][4] = {0, -1};
        return C;
    }

    static std::array<std::array<std::complex<double>, 5>, 5> ambient_two_form(
        const FormElement& f, const std::array<double, 5>& y) {
        const auto& spec = *f.spec();
        auto xv = coords(y);
        auto C = frame_change();
        std::array<std::array<std::complex<double>, 5>, 5> M{};
        for (const auto& [w, c] : f.terms()) {
            std::complex<double> val = c.classical_value().to_complex();
            std::vector<int> fr;
            for (unsigned char l : w) {
                if (spec.is_frame_letter(l)) fr.push_back(spec.base_generator(l));
                else val *= xv[l];
            }
            if (fr.size() != 2) throw std::runtime_error("expected a two-form");
            for (int al = 0; al < 5; ++al)
                for (int be = 0; be < 5; ++be) {
                    auto t = val * C[fr[0]][al] * C[fr[1]][be] * 0.5;
                    M[al][be] += t;
                    M[be][al] -= t;
                }
        }
        return M;
    }

    // orthonormal oriented tangent frame at y: det[y, t1..t4] = +orientation
    static std::array<std::array<double, 5>, 4> tangent_frame(const std::array<double, 5>& y,
                                                              int orientation) {
        std::vector<std::array<double, 5>> vecs{y};
        for (int e = 0; e < 5 && vecs.size() < 5; ++e) {
            std::array<double, 5> cand{};
            cand[e] = 1.0;
            for (const auto& v : vecs) {
                double d = 0;
                for (int i = 0; i < 5; ++i) d += cand[i] * v[i];
                for (int i = 0; i < 5; ++i) cand[i] -= d * v[i];
            }
            double n = 0;
            for (double t : cand) n += t * t;
            n = std::sqrt(n);
            if (n > 1e-6) {
                for (double& t : cand) t /= n;
                vecs.push_back(cand);
            }
        }
        // determinant sign by Gaussian elimination
        double det = 1.0;
        std::array<std::array<double, 5>, 5> m;
        for (int i = 0; i < 5; ++i) m[i] = vecs[i];
        for (int i = 0; i < 5; ++i) {
            int piv = i;
            for (int r = i + 1; r < 5; ++r)
                if (std::fabs(m[r][i]) > std::fabs(m[piv][i])) piv = r;
            if (piv != i) {
                std::swap(m[piv], m[i]);
                det = -det;
            }
            det *= m[i][i];
            for (int r = i + 1; r < 5; ++r) {
                double f = m[r][i] / m[i][i];
                for (int c2 = i; c2 < 5; ++c2) m[r][c2] -= f * m[i][c2];
            }
        }
        std::array<std::array<double, 5>, 4> t;
        for (int i = 0; i < 4; ++i) t[i] = vecs[i + 1];
        if (det * orientation < 0)
            for (int i = 0; i < 5; ++i) t[0][i] = -t[0][i];
        return t;
    }

    static int eps4(int a, int b, int c, int d) {
        int p[4] = {a, b, c, d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] == p[j]) return 0;
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    }

    // max abs deviation between the symbolic star evaluated at y and the
    // pointwise numeric star of the same two-form
    static double check(const FormElement& f, const FormElement& star_f,
                        const std::array<double, 5>& y, int orientation) {
        auto A = ambient_two_form(f, y);
        auto S = ambient_two_form(star_f, y);
        auto t = tangent_frame(y, orientation);
        auto pull = [&](const auto& M) {
            std::array<std::array<std::complex<double>, 4>, 4> B{};
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    std::complex<double> acc = 0;
                    for (int al = 0; al < 5; ++al)
                        for (int be = 0; be < 5; ++be)
                            acc += M[al][be] * t[k][al] * t[l][be];
                    B[k][l] = acc;
                }
            return B;
        };
        auto B = pull(A), Sb = pull(S);
        double err = 0;
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
                std::complex<double> ns = 0;
                for (int m = 0; m < 4; ++m)
                    for (int n = 0; n < 4; ++n) ns += 0.5 * eps4(k, l, m, n) * B[m][n];
                err = std::max(err, std::abs(ns - Sb[k][l]));
            }
        return err;
    }
};

inline std::array<double, 5> random_sphere_point(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<double, 5> y;
    double n = 0;
    do {
        n = 0;
        for (double& v : y) {
            v = gauss(rng);
            n += v * v;
        }
    } while (n < 1e-6);
    n = std::sqrt(n);
    for (double& v : y) v /= n;
    return y;
}

} // namespace oracles
