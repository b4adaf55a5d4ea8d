#include <cctype>
#include <fstream>
#include <sstream>

#include "thetasphere/element.hpp"
#include "thetasphere/errors.hpp"
#include "thetasphere/manifold.hpp"

namespace thetasphere {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

MultiDegree parse_degree(const std::string& s, int rank) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw SpecError("bad degree: " + s);
    std::vector<int> comps;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string part;
    while (std::getline(is, part, ',')) comps.push_back(std::stoi(trim(part)));
    if (rank >= 0 && static_cast<int>(comps.size()) != rank)
        throw SpecError("degree " + s + " has wrong rank");
    return MultiDegree(comps);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw SpecError("zero denominator: " + s);
    return Rational(num, den);
}

bool is_number_token(const std::string& t) {
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])) && t[i] != '/') return false;
    return true;
}

// one side of a relation equality -> raw terms
std::vector<detail::RawTerm> parse_poly(const ManifoldSpec& spec, const std::string& text) {
    std::vector<detail::RawTerm> terms;
    auto toks = split_ws(text);
    Coefficient coeff = Coefficient::one();
    Word word;
    bool any_factor = false;
    auto flush = [&](bool negate_next) {
        if (any_factor) terms.push_back({word, coeff});
        coeff = negate_next ? -Coefficient::one() : Coefficient::one();
        word.clear();
        any_factor = false;
    };
    for (const auto& t : toks) {
        if (t == "+") {
            flush(false);
        } else if (t == "-") {
            flush(true);
        } else if (t == "i") {
            coeff = coeff * Coefficient::imaginary_unit();
            any_factor = true;
        } else if (t.rfind("mu", 0) == 0 && (t.size() == 2 || t[2] == '^')) {
            int k = t.size() == 2 ? 1 : std::stoi(t.substr(3));
            coeff = coeff * Coefficient::mu(k);
            any_factor = true;
        } else if (is_number_token(t)) {
            coeff = coeff * Coefficient::rational(parse_rational(t));
            any_factor = true;
        } else {
            int g = spec.generator_index(t);
            if (g < 0) throw SpecError("unknown token in relation: " + t);
            word.push_back(static_cast<unsigned char>(g));
            any_factor = true;
        }
    }
    flush(false);
    return terms;
}

// orient an equality into a rewrite rule: highest word becomes the lhs
OrientedRelation orient_relation(const ManifoldSpec& spec, const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw SpecError("relation without '=': " + line);
    auto lhs_raw = parse_poly(spec, line.substr(0, eq));
    auto rhs_raw = parse_poly(spec, line.substr(eq + 1));
    for (auto& t : rhs_raw) t.coeff = -t.coeff;
    for (auto& t : rhs_raw) lhs_raw.push_back(std::move(t));
    // commutation-only normal form
    TermMap poly = detail::normalize(spec, std::move(lhs_raw), false, detail::default_max_steps());
    if (poly.empty()) throw SpecError("trivial relation: " + line);
    const auto& [top_word, top_coeff] = *poly.rbegin();
    if (top_word.empty()) throw SpecError("relation reduces to a constant: " + line);
    OrientedRelation rel;
    rel.lhs = top_word;
    rel.source = trim(line);
    Coefficient inv = top_coeff.inverse();
    for (const auto& [w, c] : poly) {
        if (w == top_word) continue;
        rel.rhs.emplace_back(w, -(c * inv));
    }
    return rel;
}

} // namespace

std::shared_ptr<const ManifoldSpec> ManifoldSpec::parse(const std::string& text) {
    auto spec = std::make_shared<ManifoldSpec>();
    std::istringstream is(text);
    std::string line, section;
    std::vector<std::string> relation_lines;
    std::vector<std::string> star_names;
    std::string ambient_coords;
    int ambient_orientation = 1;
    bool have_ambient = false;
    std::map<std::string, std::string> instanton_kv;

    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            if (section == "ambient") have_ambient = true;
            continue;
        }
        if (section == "manifold") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw SpecError("bad manifold line: " + line);
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (key == "name") spec->name = val;
            else if (key == "torus_rank") spec->torus_rank = std::stoi(val);
            else throw SpecError("unknown manifold key: " + key);
        } else if (section == "generators") {
            auto toks = split_ws(line);
            if (toks.size() != 3) throw SpecError("bad generator line: " + line);
            Generator g;
            g.name = toks[0];
            g.degree = parse_degree(toks[1], spec->torus_rank);
            spec->generators.push_back(std::move(g));
            star_names.push_back(toks[2]); // resolved after all names are known
        } else if (section == "phases") {
            auto toks = split_ws(line);
            if (toks.size() != 3) throw SpecError("bad phase line: " + line);
            PhaseEntry e;
            e.g = spec->generator_index(toks[0]);
            e.h = spec->generator_index(toks[1]);
            if (e.g < 0 || e.h < 0) throw SpecError("unknown generator in phase line: " + line);
            e.exponent = std::stoi(toks[2]);
            spec->phase_table.push_back(e);
        } else if (section == "relations") {
            relation_lines.push_back(line);
        } else if (section == "ambient") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw SpecError("bad ambient line: " + line);
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (key == "coordinates") ambient_coords = val;
            else if (key == "orientation") ambient_orientation = std::stoi(val);
            else throw SpecError("unknown ambient key: " + key);
        } else if (section == "instanton") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw SpecError("bad instanton line: " + line);
            instanton_kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        } else {
            throw SpecError("content outside a known section: " + line);
        }
    }
    if (spec->name.empty()) throw SpecError("spec has no name");
    if (spec->generators.empty()) throw SpecError("spec has no generators");

    // resolve star partners
    for (size_t i = 0; i < spec->generators.size(); ++i) {
        int p = spec->generator_index(star_names[i]);
        if (p < 0) throw SpecError("unknown star partner: " + star_names[i]);
        spec->generators[i].star_partner = p;
    }

    spec->solve_twist_and_validate();

    for (const auto& rl : relation_lines)
        spec->relations.push_back(orient_relation(*spec, rl));
    spec->solve_twist_and_validate(); // homogeneity of the oriented relations

    if (have_ambient) {
        AmbientData amb;
        amb.orientation = ambient_orientation;
        std::istringstream groups(ambient_coords);
        std::string group;
        while (std::getline(groups, group, '|')) {
            auto toks = split_ws(group);
            if (toks.size() == 1) {
                int g = spec->generator_index(toks[0]);
                if (g < 0) throw SpecError("unknown ambient coordinate: " + toks[0]);
                if (amb.self_coordinate >= 0)
                    throw SpecError("ambient frame allows exactly one self-conjugate coordinate");
                amb.self_coordinate = g;
                amb.coordinates.push_back(g);
            } else if (toks.size() == 2) {
                int g = spec->generator_index(toks[0]);
                int h = spec->generator_index(toks[1]);
                if (g < 0 || h < 0) throw SpecError("unknown ambient pair: " + group);
                if (spec->generators[g].star_partner != h)
                    throw SpecError("ambient pair is not a star pair: " + group);
                amb.pairs.emplace_back(g, h);
                amb.coordinates.push_back(g);
                amb.coordinates.push_back(h);
            } else {
                throw SpecError("bad ambient coordinate group: " + group);
            }
        }
        spec->ambient = std::move(amb);
        build_ambient_frame(*spec);
    }

    if (!instanton_kv.empty()) {
        InstantonBlock blk;
        blk.role = instanton_kv.count("role") ? instanton_kv["role"] : "";
        blk.partner = instanton_kv.count("partner") ? instanton_kv["partner"] : "";
        if (blk.role != "base" && blk.role != "total")
            throw SpecError("instanton role must be base or total");
        spec->instanton = std::move(blk);
    }
    return spec;
}

std::string ManifoldSpec::render() const {
    std::ostringstream os;
    os << "[manifold]\n";
    os << "name = " << name << "\n";
    os << "torus_rank = " << torus_rank << "\n";
    os << "\n[generators]\n";
    for (const auto& g : generators) {
        os << g.name << " (";
        for (size_t i = 0; i < g.degree.size(); ++i) {
            if (i) os << ",";
            os << g.degree[i];
        }
        os << ") " << generators[g.star_partner].name << "\n";
    }
    os << "\n[phases]\n";
    auto sorted = phase_table;
    std::sort(sorted.begin(), sorted.end(), [](const PhaseEntry& a, const PhaseEntry& b) {
        return std::tie(a.g, a.h) < std::tie(b.g, b.h);
    });
    for (const auto& e : sorted)
        os << generators[e.g].name << " " << generators[e.h].name << " " << e.exponent << "\n";
    os << "\n[relations]\n";
    for (const auto& r : relations) os << r.source << "\n";
    if (ambient) {
        os << "\n[ambient]\n";
        os << "coordinates = ";
        bool first = true;
        size_t pair_at = 0;
        for (size_t i = 0; i < ambient->coordinates.size();) {
            if (!first) os << " | ";
            first = false;
            int c = ambient->coordinates[i];
            if (c == ambient->self_coordinate) {
                os << generators[c].name;
                ++i;
            } else {
                os << generators[ambient->pairs[pair_at].first].name << " "
                   << generators[ambient->pairs[pair_at].second].name;
                ++pair_at;
                i += 2;
            }
        }
        os << "\n";
        os << "orientation = " << ambient->orientation << "\n";
    }
    if (instanton) {
        os << "\n[instanton]\n";
        os << "role = " << instanton->role << "\n";
        os << "partner = " << instanton->partner << "\n";
    }
    return os.str();
}

namespace {

const char* kS4Spec = R"(# s4-theta: toric deformation of the round four-sphere
[manifold]
name = s4-theta
torus_rank = 2

[generators]
x0 (0,0) x0
x1 (1,0) x1s
x1s (-1,0) x1
x2 (0,1) x2s
x2s (0,-1) x2

[phases]
x1 x2 2
x1 x2s -2
x1s x2 -2
x1s x2s 2

[relations]
x1s x1 + x2s x2 + x0 x0 = 1

[ambient]
coordinates = x0 | x1 x1s | x2 x2s
orientation = -1

[instanton]
role = base
partner = s7-theta
)";

const char* kS7Spec = R"(# s7-theta: toric deformation of the round seven-sphere
[manifold]
name = s7-theta
torus_rank = 2

[generators]
z1 (1,0) z1s
z1s (-1,0) z1
z2 (-1,0) z2s
z2s (1,0) z2
z3 (0,1) z3s
z3s (0,-1) z3
z4 (0,-1) z4s
z4s (0,1) z4

[phases]
z1 z3 -1
z1 z3s 1
z1 z4 1
z1 z4s -1
z1s z3 1
z1s z3s -1
z1s z4 -1
z1s z4s 1
z2 z3 1
z2 z3s -1
z2 z4 -1
z2 z4s 1
z2s z3 -1
z2s z3s 1
z2s z4 1
z2s z4s -1

[relations]
z1s z1 + z2s z2 + z3s z3 + z4s z4 = 1

[instanton]
role = total
partner = s4-theta
)";

} // namespace

std::vector<std::string> ManifoldSpec::builtin_names() { return {"s4-theta", "s7-theta"}; }

std::shared_ptr<const ManifoldSpec> ManifoldSpec::builtin(const std::string& name) {
    static std::map<std::string, std::shared_ptr<const ManifoldSpec>> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const ManifoldSpec> spec;
    if (name == "s4-theta") spec = parse(kS4Spec);
    else if (name == "s7-theta") spec = parse(kS7Spec);
    else return nullptr;
    cache[name] = spec;
    return spec;
}

std::shared_ptr<const ManifoldSpec> ManifoldSpec::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SpecError("cannot open spec file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse(os.str());
}

std::shared_ptr<const ManifoldSpec> ManifoldSpec::load_partner(
    const std::string& origin_path) const {
    if (!instanton || instanton->partner.empty())
        throw SpecError("spec '" + name + "' declares no instanton partner");
    if (auto b = builtin(instanton->partner)) return b;
    std::string dir;
    auto slash = origin_path.find_last_of('/');
    if (slash != std::string::npos) dir = origin_path.substr(0, slash + 1);
    return load_file(dir + instanton->partner + ".spec");
}

} // namespace thetasphere
