#include "thetasphere/hodge.hpp"

#include <chrono>
#include <map>

#include "thetasphere/errors.hpp"
#include "thetasphere/matrix.hpp"

namespace thetasphere {

namespace {

// ---- constant Grassmann algebra over the real co-frame symbols ----
// words are sorted index tuples; coefficients Gaussian rationals
using GWord = std::vector<int>;
using GElem = std::map<GWord, GaussianRational>;

void g_add(GElem& acc, const GWord& w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc[w] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// multiply by a single symbol from the right
GElem g_mul_symbol(const GElem& a, int sym, const GaussianRational& c) {
    GElem out;
    for (const auto& [w, v] : a) {
        int cnt = 0;
        bool dead = false;
        for (int l : w) {
            if (l == sym) { dead = true; break; }
            if (l > sym) ++cnt;
        }
        if (dead) continue;
        GWord nw = w;
        nw.push_back(sym);
        std::sort(nw.begin(), nw.end());
        GaussianRational s = v * c;
        if (cnt % 2) s = -s;
        g_add(out, nw, s);
    }
    return out;
}

int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    }
    return sign;
}

struct FrameBasis {
    int n = 0;                                       // number of real symbols
    std::vector<std::vector<GaussianRational>> C;    // dx_a = sum C[a][alpha] dy_alpha
    std::vector<std::vector<GaussianRational>> D;    // dy_alpha = sum D[alpha][a] dx_a
};

// complex frame word (local coordinate indices) -> real Grassmann element
GElem to_real(const FrameBasis& fb, const std::vector<int>& cw) {
    GElem acc{{GWord{}, GaussianRational{1}}};
    for (int a : cw) {
        GElem next;
        for (int al = 0; al < fb.n; ++al) {
            if (fb.C[a][al].is_zero()) continue;
            GElem part = g_mul_symbol(acc, al, fb.C[a][al]);
            for (const auto& [w, v] : part) g_add(next, w, v);
        }
        acc = std::move(next);
    }
    return acc;
}

// real word -> complex Grassmann element (words of local coordinate indices)
GElem to_complex(const FrameBasis& fb, const GWord& rw) {
    GElem acc{{GWord{}, GaussianRational{1}}};
    for (int al : rw) {
        GElem next;
        for (int a = 0; a < fb.n; ++a) {
            if (fb.D[al][a].is_zero()) continue;
            GElem part = g_mul_symbol(acc, a, fb.D[al][a]);
            for (const auto& [w, v] : part) g_add(next, w, v);
        }
        acc = std::move(next);
    }
    return acc;
}

// ambient star of a sorted real word: sign * complement, w.r.t. dy_0..dy_{n-1}
std::pair<int, GWord> star_real(int n, const GWord& w) {
    std::vector<char> in(n, 0);
    for (int l : w) in[l] = 1;
    GWord comp;
    for (int l = 0; l < n; ++l)
        if (!in[l]) comp.push_back(l);
    std::vector<int> perm = w;
    perm.insert(perm.end(), comp.begin(), comp.end());
    return {permutation_sign(std::move(perm)), comp};
}

uint32_t word_mask(const std::vector<int>& w) {
    uint32_t m = 0;
    for (int l : w) m |= 1u << l;
    return m;
}

std::vector<int> mask_word(uint32_t m, int n) {
    std::vector<int> w;
    for (int l = 0; l < n; ++l)
        if (m & (1u << l)) w.push_back(l);
    return w;
}

} // namespace

void build_ambient_frame(ManifoldSpec& spec) {
    if (!spec.ambient) return;
    AmbientData& amb = *spec.ambient;
    const int nc = static_cast<int>(amb.coordinates.size());
    if (amb.self_coordinate < 0)
        throw SpecError("ambient frame needs a self-conjugate coordinate");
    if (nc != spec.n_generators())
        throw SpecError("ambient frame must list every generator");
    {
        auto sorted = amb.coordinates;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < nc; ++i)
            if (sorted[i] != i)
                throw SpecError("ambient coordinates must cover the generators");
    }
    // the functor phase chi = mu^{r.X.s} with X = T/2 needs an even twist
    for (const auto& row : spec.twist)
        for (int v : row)
            if (v % 2 != 0)
                throw SpecError("ambient frame requires an even twist matrix");

    if (spec.relations.size() != 1)
        throw SpecError("ambient frame expects exactly the sphere relation");

    // n-flat = half the differential of the sphere polynomial
    {
        std::vector<detail::RawTerm> raw;
        raw.push_back({spec.relations[0].lhs, Coefficient::one()});
        for (const auto& [w, c] : spec.relations[0].rhs) raw.push_back({w, -c});
        FormElement poly = FormElement::from_raw(spec, std::move(raw));
        FormElement nf = poly.exterior_d().scale(Coefficient::rational(Rational(1, 2)));
        amb.normal_form_terms.assign(nf.terms().begin(), nf.terms().end());
        // unit radius check: iota_n(n-flat) must be 1 modulo the relations
        std::vector<detail::RawTerm> contracted;
        for (const auto& [w, c] : nf.terms()) {
            Word cw;
            for (unsigned char l : w)
                cw.push_back(spec.is_frame_letter(l)
                                 ? static_cast<unsigned char>(spec.base_generator(l))
                                 : l);
            contracted.push_back({std::move(cw), c});
        }
        AlgebraElement radius = AlgebraElement::from_raw(spec, std::move(contracted));
        if (!(radius == AlgebraElement::unit(spec)))
            throw SpecError("ambient frame is not a unit sphere: iota_n(n-flat) != 1");
    }

    // real co-frame: self coordinate first would break ascending masks; use the
    // generator order for complex letters, real symbols enumerated per group
    FrameBasis fb;
    fb.n = nc;
    fb.C.assign(nc, std::vector<GaussianRational>(nc));
    fb.D.assign(nc, std::vector<GaussianRational>(nc));
    {
        int next_real = 0;
        std::vector<int> real_of(nc, -1);
        // allocate real symbols in coordinate order: self -> 1, pair -> 2
        std::vector<char> seen(nc, 0);
        for (int i = 0; i < nc; ++i) {
            int g = amb.coordinates[i];
            if (seen[g]) continue;
            if (g == amb.self_coordinate) {
                real_of[g] = next_real++;
                seen[g] = 1;
            } else {
                int h = spec.generators[g].star_partner;
                real_of[g] = next_real;
                real_of[h] = next_real; // pair shares (re, im) block
                next_real += 2;
                seen[g] = seen[h] = 1;
            }
        }
        const GaussianRational one{1}, ih{0, 1}, half{Rational(1, 2)},
            mih{0, Rational(-1, 2)};
        for (const auto& [g, h] : amb.pairs) {
            int re = real_of[g], im = real_of[g] + 1;
            // dx_g = dy_re + i dy_im ; dx_h = dy_re - i dy_im
            fb.C[g][re] = one;
            fb.C[g][im] = ih;
            fb.C[h][re] = one;
            fb.C[h][im] = -ih;
            // dy_re = (dx_g + dx_h)/2 ; dy_im = -i(dx_g - dx_h)/2
            fb.D[re][g] = half;
            fb.D[re][h] = half;
            fb.D[im][g] = mih;
            fb.D[im][h] = -mih;
        }
        fb.C[amb.self_coordinate][real_of[amb.self_coordinate]] = one;
        fb.D[real_of[amb.self_coordinate]][amb.self_coordinate] = one;
    }

    // functor phase exponent sum_{i<j} r_i.X.r_j with X = T/2, over the letter
    // degrees of a word (coordinate prefix + frame letters)
    auto half_pair = [&](const MultiDegree& r, const MultiDegree& s) {
        long acc = 0;
        for (int i = 0; i < spec.torus_rank; ++i)
            for (int j = 0; j < spec.torus_rank; ++j)
                acc += static_cast<long>(r[i]) * spec.twist[i][j] * s[j];
        return static_cast<int>(acc / 2);
    };
    auto phase_exponent = [&](const std::vector<int>& letters) {
        int e = 0;
        for (size_t i = 0; i < letters.size(); ++i)
            for (size_t j = i + 1; j < letters.size(); ++j)
                e += half_pair(spec.generators[letters[i]].degree,
                               spec.generators[letters[j]].degree);
        return e;
    };

    // star table: for every input mask, transport iota_n(star5(.)) with the
    // functor phase correction mu^{E(in) - E(out)}
    amb.star_table.clear();
    amb.full_mask = (1u << nc) - 1;
    for (uint32_t mask = 0; mask <= amb.full_mask; ++mask) {
        std::vector<int> in_word = mask_word(mask, nc);
        // the tangential star is (-1)^r iota_n star_ambient on r-forms
        const bool degree_sign = in_word.size() % 2 == 1;
        int ein = phase_exponent(in_word);
        GElem real = to_real(fb, in_word);
        std::vector<AmbientData::StarEntry> entries;
        std::map<std::pair<int, uint32_t>, Coefficient> acc;
        for (const auto& [rw, rc] : real) {
            auto [sgn, comp] = star_real(nc, rw);
            GaussianRational signed_c = rc;
            if (sgn * amb.orientation < 0) signed_c = -signed_c;
            if (degree_sign) signed_c = -signed_c;
            for (const auto& [cw, cc] : to_complex(fb, comp)) {
                // iota_n: sum_j (-1)^j coordinate_j * (word minus j)
                for (size_t j = 0; j < cw.size(); ++j) {
                    std::vector<int> rest;
                    for (size_t k = 0; k < cw.size(); ++k)
                        if (k != j) rest.push_back(cw[k]);
                    GaussianRational v = signed_c * cc;
                    if (j % 2) v = -v;
                    std::vector<int> out_letters;
                    out_letters.push_back(cw[j]);
                    for (int l : rest) out_letters.push_back(l);
                    int corr = ein - phase_exponent(out_letters);
                    auto key = std::make_pair(cw[j], word_mask(rest));
                    auto it = acc.find(key);
                    Coefficient add = Coefficient::from_value(v, corr);
                    if (it == acc.end()) acc[key] = add;
                    else it->second = it->second + add;
                }
            }
        }
        for (auto& [key, c] : acc)
            if (!c.is_zero()) entries.push_back({key.first, key.second, c});
        amb.star_table[mask] = std::move(entries);
    }

    // reading of the canonical full frame word against the oriented real volume:
    // vol_real = orientation * dy_0...dy_{n-1} = kappa * dx-word, so a word
    // coefficient f corresponds to f / kappa
    {
        GWord all;
        for (int l = 0; l < nc; ++l) all.push_back(l);
        GElem cplx = to_complex(fb, all);
        std::vector<int> full = mask_word(amb.full_mask, nc);
        auto it = cplx.find(full);
        if (it == cplx.end() || it->second.is_zero())
            throw SpecError("degenerate ambient volume form");
        GaussianRational kappa = it->second;
        amb.top_reading = Coefficient::from_value(kappa.inverse());
        if (amb.orientation < 0) amb.top_reading = -amb.top_reading;
    }
}

FormElement hodge_star(const FormElement& form, bool reversed) {
    return hodge_star_unreduced(form, reversed).reduce();
}

FormElement hodge_star_unreduced(const FormElement& form, bool reversed) {
    const ManifoldSpec& spec = *form.spec();
    if (!spec.ambient)
        throw PreconditionError("hodge star requires an ambient frame (spec '" + spec.name +
                                "' has none)");
    const AmbientData& amb = *spec.ambient;
    std::vector<detail::RawTerm> raw;
    for (const auto& [w, c] : form.terms()) {
        Word alg;
        uint32_t mask = 0;
        for (unsigned char l : w) {
            if (spec.is_frame_letter(l)) mask |= 1u << spec.base_generator(l);
            else alg.push_back(l);
        }
        auto it = amb.star_table.find(mask);
        if (it == amb.star_table.end()) continue;
        for (const auto& e : it->second) {
            Word nw = alg;
            nw.push_back(static_cast<unsigned char>(e.coordinate));
            for (int g = 0; g < spec.n_generators(); ++g)
                if (e.out_mask & (1u << g)) nw.push_back(spec.frame_letter(g));
            Coefficient nc = c * e.coeff;
            if (reversed) nc = -nc;
            raw.push_back({std::move(nw), nc});
        }
    }
    return FormElement::from_raw(spec, std::move(raw));
}

FormElement project_sd(const FormElement& form, bool reversed) {
    if (form.pure_form_degree().value_or(-1) != 2 && !form.is_zero())
        throw PreconditionError("self-dual projection expects a two-form");
    FormElement half = (form + hodge_star(form, reversed))
                           .scale(Coefficient::rational(Rational(1, 2)));
    return half.reduce();
}

FormElement project_asd(const FormElement& form, bool reversed) {
    if (form.pure_form_degree().value_or(-1) != 2 && !form.is_zero())
        throw PreconditionError("anti-self-dual projection expects a two-form");
    FormElement half = (form - hodge_star(form, reversed))
                           .scale(Coefficient::rational(Rational(1, 2)));
    return half.reduce();
}

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::PASS: return "PASS";
        case CertStatus::FAIL: return "FAIL";
        default: return "INCONCLUSIVE";
    }
}

SelfDualityCertificate self_duality_check(const MatrixForm& projection, bool reversed) {
    SelfDualityCertificate cert;
    auto t0 = std::chrono::steady_clock::now();
    try {
        MatrixForm curv = curvature(projection);
        bool all_zero = true;
        for (int i = 0; i < curv.rows(); ++i) {
            for (int j = 0; j < curv.cols(); ++j) {
                const FormElement& entry = curv.at(i, j);
                cert.max_terms = std::max(cert.max_terms, entry.terms().size());
                FormElement asd = entry.is_zero()
                                      ? entry
                                      : project_asd(entry, reversed);
                ++cert.entries_checked;
                if (!asd.is_zero()) {
                    all_zero = false;
                    ++cert.entries_failed;
                }
            }
        }
        cert.status = all_zero ? CertStatus::PASS : CertStatus::FAIL;
        if (!all_zero)
            cert.detail = std::to_string(cert.entries_failed) + " curvature entries have a "
                          "nonzero anti-self-dual part";
    } catch (const ReductionLimitError& e) {
        cert.status = CertStatus::INCONCLUSIVE;
        cert.detail = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return cert;
}

} // namespace thetasphere
