#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thetasphere/coeff.hpp"

namespace thetasphere {

/// Torus multidegree in Z^N.
struct MultiDegree {
    std::vector<int> components;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> c) : components(std::move(c)) {}

    size_t size() const { return components.size(); }
    int operator[](size_t i) const { return components[i]; }

    MultiDegree operator+(const MultiDegree& o) const;
    MultiDegree operator-() const;
    bool operator==(const MultiDegree& o) const { return components == o.components; }
    bool operator<(const MultiDegree& o) const { return components < o.components; }
    bool is_zero() const;
    std::string to_string() const;
};

struct Generator {
    std::string name;
    MultiDegree degree;
    int star_partner = -1; // generator index, possibly self
};

// letters: 0..n_generators-1 algebra generators, n..2n-1 their frame symbols d(g)
using Word = std::basic_string<unsigned char>;

/// g h = mu^exponent h g
struct PhaseEntry {
    int g = 0, h = 0;
    int exponent = 0;
};

/// Rewrite rule lhs -> sum coeff * word, oriented by the graded-lex order.
struct OrientedRelation {
    Word lhs;
    std::vector<std::pair<Word, Coefficient>> rhs;
    std::string source; // the equality it was oriented from, as written
};

/// Ambient frame data for sphere-type specs: the five coordinates, the
/// complex pairing against an orthonormal real basis, and the orientation.
struct AmbientData {
    std::vector<int> coordinates;               // generator indices, ascending
    std::vector<std::pair<int, int>> pairs;     // (g, g*) complex pairs; self-pairs excluded
    int self_coordinate = -1;                   // the real self-conjugate coordinate
    int orientation = 1;

    struct StarEntry {
        int coordinate;    // algebra generator inserted by the normal contraction
        uint32_t out_mask; // frame letters of the output word
        Coefficient coeff; // classical constant with functor phase correction folded in
    };
    // derived at load:
    std::map<uint32_t, std::vector<StarEntry>> star_table; // input frame mask -> entries
    std::vector<std::pair<Word, Coefficient>> normal_form_terms; // n-flat as raw terms
    Coefficient top_reading;    // word coefficient of dx0..dx2s -> multiple of the volume word
    uint32_t full_mask = 0;
};

struct InstantonBlock {
    std::string role;    // "base" or "total"
    std::string partner; // name of the paired spec
};

/// A validated toric noncommutative manifold specification: generators with
/// torus degrees, commutation phases, oriented polynomial relations, and the
/// optional ambient frame and instanton blocks.
class ManifoldSpec {
public:
    std::string name;
    int torus_rank = 0;
    std::vector<Generator> generators;
    std::vector<PhaseEntry> phase_table;
    std::vector<std::vector<int>> twist; // T with word(ab) = mu^{deg a.T.deg b}(-1)^{|a||b|} word(ba)
    std::vector<OrientedRelation> relations;
    std::optional<AmbientData> ambient;
    std::optional<InstantonBlock> instanton;

    int n_generators() const { return static_cast<int>(generators.size()); }
    bool is_frame_letter(unsigned char l) const { return l >= generators.size(); }
    int base_generator(unsigned char l) const { return l % n_generators(); }
    const MultiDegree& letter_degree(unsigned char l) const {
        return generators[base_generator(l)].degree;
    }
    int letter_form_degree(unsigned char l) const { return is_frame_letter(l) ? 1 : 0; }
    unsigned char frame_letter(int g) const {
        return static_cast<unsigned char>(g + n_generators());
    }
    int star_letter(unsigned char l) const {
        int p = generators[base_generator(l)].star_partner;
        return is_frame_letter(l) ? p + n_generators() : p;
    }

    int generator_index(const std::string& name) const; // -1 when absent

    /// deg(a) . T . deg(b)
    int swap_exponent(unsigned char a, unsigned char b) const;
    /// mu^{r.T.s}
    Coefficient twist_phase(const MultiDegree& r, const MultiDegree& s) const;

    /// derives the twist matrix from the pairwise phase table and checks every
    /// ordered generator pair against it (bicharacter consistency)
    void solve_twist_and_validate();

    /// canonical text of the spec file (the golden rendering)
    std::string render() const;

    static std::shared_ptr<const ManifoldSpec> builtin(const std::string& name);
    static std::shared_ptr<const ManifoldSpec> load_file(const std::string& path);
    static std::shared_ptr<const ManifoldSpec> parse(const std::string& text);
    static std::vector<std::string> builtin_names();

    /// resolves the instanton partner: builtin name first, then sibling file
    std::shared_ptr<const ManifoldSpec> load_partner(const std::string& origin_path = "") const;

private:
    std::vector<std::vector<int>> letter_swap_; // cached deg(a).T.deg(b) per letter pair
};

/// FNV-1a of the canonical rendering; stable across platforms.
std::string spec_hash(const ManifoldSpec& spec);

void build_ambient_frame(ManifoldSpec& spec); // fills AmbientData derived fields

} // namespace thetasphere
