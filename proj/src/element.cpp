#include "thetasphere/element.hpp"

#include <algorithm>

#include "thetasphere/errors.hpp"

namespace thetasphere {

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
    MultiDegree r = *this;
    for (size_t i = 0; i < r.components.size(); ++i) r.components[i] += o.components[i];
    return r;
}

MultiDegree MultiDegree::operator-() const {
    MultiDegree r = *this;
    for (auto& c : r.components) c = -c;
    return r;
}

bool MultiDegree::is_zero() const {
    for (int c : components)
        if (c != 0) return false;
    return true;
}

std::string MultiDegree::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(components[i]);
    }
    return s + ")";
}

namespace detail {

namespace {
uint64_t g_max_steps = 20'000'000;
}

uint64_t default_max_steps() { return g_max_steps; }
void set_default_max_steps(uint64_t v) { g_max_steps = v; }

namespace {

// insertion sort with phase bookkeeping; false when the term dies
bool sort_word(const ManifoldSpec& spec, Word& w, Coefficient& c) {
    const size_t n = w.size();
    long mu_shift = 0;
    bool negate = false;
    for (size_t i = 1; i < n; ++i) {
        size_t j = i;
        while (j > 0 && w[j] < w[j - 1]) {
            unsigned char a = w[j - 1], b = w[j];
            mu_shift += spec.swap_exponent(a, b);
            if (spec.is_frame_letter(a) && spec.is_frame_letter(b)) negate = !negate;
            w[j - 1] = b;
            w[j] = a;
            --j;
        }
    }
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && spec.is_frame_letter(w[i])) return false;
    if (mu_shift != 0 || negate)
        c = c.shift_mu(static_cast<int>(mu_shift), negate);
    return true;
}

// positions of the rule lhs inside the sorted word w (leftmost picks),
// or empty when it does not occur
std::vector<size_t> match_rule(const Word& w, const Word& lhs) {
    std::vector<size_t> pos;
    size_t from = 0;
    for (unsigned char l : lhs) {
        size_t i = from;
        while (i < w.size() && w[i] != l) ++i;
        if (i == w.size()) return {};
        pos.push_back(i);
        from = i + 1;
    }
    return pos;
}

} // namespace

TermMap normalize(const ManifoldSpec& spec, std::vector<RawTerm> raw,
                  bool apply_relations, uint64_t max_steps) {
    TermMap out;
    std::vector<RawTerm> stack = std::move(raw);
    uint64_t steps = 0;
    while (!stack.empty()) {
        if (++steps > max_steps)
            throw ReductionLimitError("rewriting exceeded " + std::to_string(max_steps) +
                                      " steps");
        RawTerm t = std::move(stack.back());
        stack.pop_back();
        if (t.coeff.is_zero()) continue;
        if (!sort_word(spec, t.word, t.coeff)) continue;
        if (t.coeff.is_zero()) continue;

        if (apply_relations) {
            bool rewritten = false;
            for (const auto& rule : spec.relations) {
                auto pos = match_rule(t.word, rule.lhs);
                if (pos.empty()) continue;
                // bring the matched letters together at pos[0]: move each
                // subsequent pick left across the gap, collecting phases
                Word w = t.word;
                Coefficient c = t.coeff;
                long mu_shift = 0;
                bool negate = false;
                for (size_t k = 1; k < pos.size(); ++k) {
                    size_t target = pos[0] + k;
                    for (size_t i = pos[k]; i > target; --i) {
                        unsigned char moving = w[i], other = w[i - 1];
                        // (other moving) -> (moving other): inverse swap
                        mu_shift += spec.swap_exponent(other, moving);
                        if (spec.is_frame_letter(other) && spec.is_frame_letter(moving))
                            negate = !negate;
                        w[i] = other;
                        w[i - 1] = moving;
                    }
                }
                if (mu_shift != 0 || negate)
                    c = c.shift_mu(static_cast<int>(mu_shift), negate);
                Word prefix = w.substr(0, pos[0]);
                Word suffix = w.substr(pos[0] + rule.lhs.size());
                for (const auto& [rw, rc] : rule.rhs)
                    stack.push_back({prefix + rw + suffix, c * rc});
                rewritten = true;
                break;
            }
            if (rewritten) continue;
        }

        auto it = out.find(t.word);
        if (it == out.end()) {
            out.emplace(std::move(t.word), std::move(t.coeff));
        } else {
            it->second = it->second + t.coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

} // namespace detail

MultiDegree word_degree(const ManifoldSpec& spec, const Word& w) {
    MultiDegree d(std::vector<int>(spec.torus_rank, 0));
    for (unsigned char l : w) d = d + spec.letter_degree(l);
    return d;
}

int word_form_degree(const ManifoldSpec& spec, const Word& w) {
    int d = 0;
    for (unsigned char l : w) d += spec.letter_form_degree(l);
    return d;
}

std::string render_word(const ManifoldSpec& spec, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        unsigned char l = w[i];
        if (spec.is_frame_letter(l)) s += "d";
        s += spec.generators[spec.base_generator(l)].name;
    }
    return s;
}

std::string render_terms(const ManifoldSpec& spec, const TermMap& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        std::string cs = c.to_string();
        bool composite = c.terms().size() > 1;
        bool negative = !composite && cs[0] == '-';
        if (first) {
            first = false;
        } else if (negative) {
            s += " - ";
            cs = cs.substr(1);
        } else {
            s += " + ";
        }
        if (composite) cs = "(" + cs + ")";
        if (w.empty()) {
            s += cs;
        } else if (cs == "1") {
            s += render_word(spec, w);
        } else if (cs == "-1") {
            s += "-" + render_word(spec, w);
        } else {
            s += cs + "*" + render_word(spec, w);
        }
    }
    return s;
}

// ---------------------------------------------------------------- algebra

AlgebraElement AlgebraElement::zero(const ManifoldSpec& spec) { return AlgebraElement(&spec); }

AlgebraElement AlgebraElement::unit(const ManifoldSpec& spec) {
    return from_raw(spec, {{Word{}, Coefficient::one()}});
}

AlgebraElement AlgebraElement::generator(const ManifoldSpec& spec, int index) {
    return from_raw(spec, {{Word(1, static_cast<unsigned char>(index)), Coefficient::one()}});
}

AlgebraElement AlgebraElement::generator(const ManifoldSpec& spec, const std::string& name) {
    int i = spec.generator_index(name);
    if (i < 0) throw SpecError("unknown generator: " + name);
    return generator(spec, i);
}

AlgebraElement AlgebraElement::from_raw(const ManifoldSpec& spec,
                                        std::vector<detail::RawTerm> raw) {
    AlgebraElement e(&spec);
    e.terms_ = detail::normalize(spec, std::move(raw), true, detail::default_max_steps());
    return e;
}

static void check_same_spec(const ManifoldSpec* a, const ManifoldSpec* b) {
    if (a != b) throw PreconditionError("elements over different specs");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same_spec(spec_, o.spec_);
    AlgebraElement r = *this;
    for (const auto& [w, c] : o.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_[w] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scale(-Coefficient::one());
}

AlgebraElement AlgebraElement::scale(const Coefficient& c) const {
    AlgebraElement r(spec_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) {
        Coefficient p = v * c;
        if (!p.is_zero()) r.terms_[w] = p;
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same_spec(spec_, o.spec_);
    std::vector<detail::RawTerm> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) raw.push_back({w1 + w2, c1 * c2});
    return from_raw(*spec_, std::move(raw));
}

AlgebraElement AlgebraElement::star() const {
    std::vector<detail::RawTerm> raw;
    raw.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            sw.push_back(static_cast<unsigned char>(spec_->star_letter(*it)));
        raw.push_back({std::move(sw), c.involution()});
    }
    return from_raw(*spec_, std::move(raw));
}

std::map<MultiDegree, AlgebraElement> AlgebraElement::decompose_homogeneous() const {
    std::map<MultiDegree, AlgebraElement> parts;
    for (const auto& [w, c] : terms_) {
        MultiDegree d = word_degree(*spec_, w);
        auto [it, fresh] = parts.try_emplace(d, AlgebraElement(spec_));
        it->second.terms_[w] = c;
    }
    return parts;
}

std::optional<MultiDegree> AlgebraElement::homogeneous_degree() const {
    std::optional<MultiDegree> deg;
    for (const auto& [w, c] : terms_) {
        MultiDegree d = word_degree(*spec_, w);
        if (!deg) deg = d;
        else if (!(*deg == d)) return std::nullopt;
    }
    if (!deg) deg = MultiDegree(std::vector<int>(spec_->torus_rank, 0));
    return deg;
}

Coefficient bicharacter(const ManifoldSpec& spec, const MultiDegree& r, const MultiDegree& s) {
    if (r.size() != static_cast<size_t>(spec.torus_rank) || r.size() != s.size())
        throw PreconditionError("degree length mismatch");
    return spec.twist_phase(s, r);
}

BraidedPair braiding(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_spec(a.spec(), b.spec());
    auto ra = a.homogeneous_degree();
    auto rb = b.homogeneous_degree();
    if (!ra || !rb) throw PreconditionError("braiding requires homogeneous elements");
    return {b, a, a.spec()->twist_phase(*ra, *rb)};
}

// ------------------------------------------------------------------ forms

FormElement FormElement::zero(const ManifoldSpec& spec) { return FormElement(&spec); }

FormElement FormElement::unit(const ManifoldSpec& spec) {
    return from_raw(spec, {{Word{}, Coefficient::one()}});
}

FormElement FormElement::generator(const ManifoldSpec& spec, int index) {
    return from_raw(spec, {{Word(1, static_cast<unsigned char>(index)), Coefficient::one()}});
}

FormElement FormElement::frame(const ManifoldSpec& spec, int index) {
    return from_raw(spec, {{Word(1, spec.frame_letter(index)), Coefficient::one()}});
}

FormElement FormElement::from_raw(const ManifoldSpec& spec, std::vector<detail::RawTerm> raw) {
    FormElement e(&spec);
    e.terms_ = detail::normalize(spec, std::move(raw), false, detail::default_max_steps());
    return e;
}

FormElement FormElement::operator+(const FormElement& o) const {
    check_same_spec(spec_, o.spec_);
    FormElement r = *this;
    for (const auto& [w, c] : o.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_[w] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

FormElement FormElement::operator-(const FormElement& o) const {
    return *this + o.scale(-Coefficient::one());
}

FormElement FormElement::scale(const Coefficient& c) const {
    FormElement r(spec_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) {
        Coefficient p = v * c;
        if (!p.is_zero()) r.terms_[w] = p;
    }
    return r;
}

FormElement FormElement::operator*(const FormElement& o) const {
    check_same_spec(spec_, o.spec_);
    std::vector<detail::RawTerm> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) raw.push_back({w1 + w2, c1 * c2});
    return from_raw(*spec_, std::move(raw));
}

FormElement FormElement::star() const {
    std::vector<detail::RawTerm> raw;
    raw.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            sw.push_back(static_cast<unsigned char>(spec_->star_letter(*it)));
        raw.push_back({std::move(sw), c.involution()});
    }
    return from_raw(*spec_, std::move(raw));
}

FormElement FormElement::exterior_d() const {
    std::vector<detail::RawTerm> raw;
    for (const auto& [w, c] : terms_) {
        int frame_left = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            if (spec_->is_frame_letter(w[i])) {
                ++frame_left; // d of a frame symbol vanishes
                continue;
            }
            Word nw = w;
            nw[i] = spec_->frame_letter(w[i]);
            Coefficient sign = frame_left % 2 == 0 ? Coefficient::one() : -Coefficient::one();
            raw.push_back({std::move(nw), c * sign});
        }
    }
    return from_raw(*spec_, std::move(raw));
}

FormElement FormElement::reduce() const {
    if (!spec_->ambient)
        throw PreconditionError("reduce_mod_ideal requires an ambient frame (spec '" +
                                spec_->name + "' has none)");
    const auto& amb = *spec_->ambient;
    // tangential projection: every frame letter dg -> dg - g * n_flat,
    // then the sphere relations; canonical on ideal classes
    std::vector<detail::RawTerm> raw;
    for (const auto& [w, c] : terms_) {
        std::vector<detail::RawTerm> parts{{Word{}, c}};
        for (unsigned char l : w) {
            if (!spec_->is_frame_letter(l)) {
                for (auto& p : parts) p.word.push_back(l);
                continue;
            }
            unsigned char coord = static_cast<unsigned char>(spec_->base_generator(l));
            std::vector<detail::RawTerm> next;
            next.reserve(parts.size() * (amb.normal_form_terms.size() + 1));
            for (const auto& p : parts) {
                Word keep = p.word;
                keep.push_back(l);
                next.push_back({std::move(keep), p.coeff});
                for (const auto& [nw, nc] : amb.normal_form_terms) {
                    Word sub = p.word;
                    sub.push_back(coord);
                    sub += nw;
                    next.push_back({std::move(sub), p.coeff * (-nc)});
                }
            }
            parts = std::move(next);
        }
        for (auto& p : parts) raw.push_back(std::move(p));
    }
    FormElement e(spec_);
    e.terms_ = detail::normalize(*spec_, std::move(raw), true, detail::default_max_steps());
    return e;
}

AlgebraElement FormElement::to_algebra() const {
    std::vector<detail::RawTerm> raw;
    for (const auto& [w, c] : terms_) {
        if (word_form_degree(*spec_, w) != 0)
            throw PreconditionError("form has positive degree; not a function");
        raw.push_back({w, c});
    }
    return AlgebraElement::from_raw(*spec_, std::move(raw));
}

int FormElement::max_form_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, word_form_degree(*spec_, w));
    return d;
}

std::optional<int> FormElement::pure_form_degree() const {
    std::optional<int> deg;
    for (const auto& [w, c] : terms_) {
        int d = word_form_degree(*spec_, w);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    if (!deg) deg = 0;
    return deg;
}

std::map<MultiDegree, FormElement> FormElement::decompose_homogeneous() const {
    std::map<MultiDegree, FormElement> parts;
    for (const auto& [w, c] : terms_) {
        MultiDegree d = word_degree(*spec_, w);
        auto [it, fresh] = parts.try_emplace(d, FormElement(spec_));
        it->second.terms_[w] = c;
    }
    return parts;
}

} // namespace thetasphere
