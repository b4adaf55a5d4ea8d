#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "thetasphere/manifold.hpp"

namespace thetasphere {

/// graded lexicographic word order: total length first, then letter sequence
struct GradedLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using TermMap = std::map<Word, Coefficient, GradedLexLess>;

namespace detail {

struct RawTerm {
    Word word;
    Coefficient coeff;
};

/// Sorts words with phase bookkeeping, kills repeated frame letters, and
/// (optionally) applies the spec's oriented polynomial relations to fixpoint.
/// Deterministic: leftmost redex, rules in declaration order.
TermMap normalize(const ManifoldSpec& spec, std::vector<RawTerm> raw,
                  bool apply_relations, uint64_t max_steps);

uint64_t default_max_steps();
void set_default_max_steps(uint64_t);

} // namespace detail

MultiDegree word_degree(const ManifoldSpec& spec, const Word& w);
int word_form_degree(const ManifoldSpec& spec, const Word& w);
std::string render_word(const ManifoldSpec& spec, const Word& w);
std::string render_terms(const ManifoldSpec& spec, const TermMap& terms);

class FormElement;

/// Element of the noncommutative function algebra, stored in normal form
/// (sorted words, relations applied).
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const ManifoldSpec* spec) : spec_(spec) {}

    static AlgebraElement zero(const ManifoldSpec& spec);
    static AlgebraElement unit(const ManifoldSpec& spec);
    static AlgebraElement generator(const ManifoldSpec& spec, int index);
    static AlgebraElement generator(const ManifoldSpec& spec, const std::string& name);
    static AlgebraElement from_raw(const ManifoldSpec& spec, std::vector<detail::RawTerm> raw);

    const ManifoldSpec* spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const { return scale(-Coefficient::one()); }
    AlgebraElement operator*(const AlgebraElement& o) const; // twisted product
    AlgebraElement scale(const Coefficient& c) const;
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    /// anti-linear anti-automorphism
    AlgebraElement star() const;

    std::map<MultiDegree, AlgebraElement> decompose_homogeneous() const;
    /// degree when homogeneous
    std::optional<MultiDegree> homogeneous_degree() const;

    std::string render() const { return render_terms(*spec_, terms_); }

    friend class FormElement;

private:
    const ManifoldSpec* spec_ = nullptr;
    TermMap terms_;
};

/// chi(r,s)^2 in the spec's convention: the commutation phase by which a
/// degree-s element moves left past a degree-r element
Coefficient bicharacter(const ManifoldSpec& spec, const MultiDegree& r, const MultiDegree& s);

struct BraidedPair {
    AlgebraElement first;
    AlgebraElement second;
    Coefficient factor;
};

/// categorical braiding on homogeneous elements: (a,b) -> factor * (b,a)
BraidedPair braiding(const AlgebraElement& a, const AlgebraElement& b);

/// Element of the twisted differential graded algebra over the free frame
/// symbols; polynomial relations are NOT folded in (reduce_mod_ideal does).
class FormElement {
public:
    FormElement() = default;
    explicit FormElement(const ManifoldSpec* spec) : spec_(spec) {}
    /// inject a function element
    explicit FormElement(const AlgebraElement& a) : spec_(a.spec()), terms_(a.terms_) {}

    static FormElement zero(const ManifoldSpec& spec);
    static FormElement unit(const ManifoldSpec& spec);
    static FormElement generator(const ManifoldSpec& spec, int index);
    /// the frame symbol d(g)
    static FormElement frame(const ManifoldSpec& spec, int index);
    static FormElement from_raw(const ManifoldSpec& spec, std::vector<detail::RawTerm> raw);

    const ManifoldSpec* spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FormElement operator+(const FormElement& o) const;
    FormElement operator-(const FormElement& o) const;
    FormElement operator-() const { return scale(-Coefficient::one()); }
    /// twisted wedge product (free dga)
    FormElement operator*(const FormElement& o) const;
    FormElement scale(const Coefficient& c) const;
    bool operator==(const FormElement& o) const { return terms_ == o.terms_; }

    FormElement star() const;
    /// undeformed exterior derivative, graded Leibniz
    FormElement exterior_d() const;
    /// canonical representative modulo the differentiated sphere ideal
    FormElement reduce() const;
    /// function part as an algebra element; requires form degree 0
    AlgebraElement to_algebra() const;

    int max_form_degree() const;
    /// single form degree of all terms, or nullopt
    std::optional<int> pure_form_degree() const;
    std::map<MultiDegree, FormElement> decompose_homogeneous() const;

    std::string render() const { return render_terms(*spec_, terms_); }

    friend FormElement hodge_star(const FormElement&, bool);
    friend class AlgebraElement;

private:
    const ManifoldSpec* spec_ = nullptr;
    TermMap terms_;
};

} // namespace thetasphere
