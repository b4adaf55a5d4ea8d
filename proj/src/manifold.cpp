#include "thetasphere/manifold.hpp"

#include <algorithm>
#include <sstream>

#include "thetasphere/element.hpp"
#include "thetasphere/errors.hpp"

namespace thetasphere {

int ManifoldSpec::generator_index(const std::string& gname) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == gname) return static_cast<int>(i);
    return -1;
}

int ManifoldSpec::swap_exponent(unsigned char a, unsigned char b) const {
    return letter_swap_[a][b];
}

Coefficient ManifoldSpec::twist_phase(const MultiDegree& r, const MultiDegree& s) const {
    long acc = 0;
    for (int i = 0; i < torus_rank; ++i)
        for (int j = 0; j < torus_rank; ++j)
            acc += static_cast<long>(r[i]) * twist[i][j] * s[j];
    return Coefficient::mu(static_cast<int>(acc));
}

void ManifoldSpec::solve_twist_and_validate() {
    const int N = torus_rank;
    if (N <= 0) throw SpecError("torus_rank must be positive");
    for (const auto& g : generators) {
        if (g.degree.size() != static_cast<size_t>(N))
            throw SpecError("generator " + g.name + " has degree of wrong length");
        if (g.star_partner < 0 || g.star_partner >= n_generators())
            throw SpecError("generator " + g.name + " has no star partner");
        const auto& pd = generators[g.star_partner].degree;
        if (!((-g.degree) == pd))
            throw SpecError("star partner degree of " + g.name + " is not the negation");
        if (g.star_partner == generator_index(g.name) && !g.degree.is_zero())
            throw SpecError("self-conjugate generator " + g.name + " must have degree zero");
    }

    // antisymmetric T from the pairwise table: unknowns t_ij (i<j)
    const int nu = N * (N - 1) / 2;
    auto var = [N](int i, int j) { return i * N + j - (i + 1) * (i + 2) / 2; };
    std::vector<std::vector<Rational>> rows; // nu coefficients + rhs
    for (const auto& e : phase_table) {
        std::vector<Rational> row(nu + 1, 0);
        const auto& dg = generators[e.g].degree;
        const auto& dh = generators[e.h].degree;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                row[var(i, j)] = Rational(dg[i]) * dh[j] - Rational(dg[j]) * dh[i];
        row[nu] = e.exponent;
        rows.push_back(std::move(row));
    }
    // exact Gaussian elimination
    std::vector<Rational> sol(nu, 0);
    {
        size_t r = 0;
        std::vector<int> pivot_col;
        for (int c = 0; c < nu && r < rows.size(); ++c) {
            size_t p = r;
            while (p < rows.size() && rows[p][c] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[r]);
            for (size_t q = 0; q < rows.size(); ++q) {
                if (q == r || rows[q][c] == 0) continue;
                Rational f = rows[q][c] / rows[r][c];
                for (int k = c; k <= nu; ++k) rows[q][k] -= f * rows[r][k];
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (size_t q = r; q < rows.size(); ++q)
            if (rows[q][nu] != 0) throw SpecError("phase table is not a bicharacter");
        for (size_t q = 0; q < r; ++q) {
            Rational v = rows[q][nu] / rows[q][pivot_col[q]];
            if (boost::multiprecision::denominator(v) != 1)
                throw SpecError("phase table needs a non-integer twist");
            sol[pivot_col[q]] = v;
        }
    }
    twist.assign(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            int v = static_cast<int>(sol[var(i, j)]);
            twist[i][j] = v;
            twist[j][i] = -v;
        }
    {
        const int n = 2 * n_generators();
        letter_swap_.assign(n, std::vector<int>(n, 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto& ra = letter_degree(static_cast<unsigned char>(a));
                const auto& rb = letter_degree(static_cast<unsigned char>(b));
                long acc = 0;
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j)
                        acc += static_cast<long>(ra[i]) * twist[i][j] * rb[j];
                letter_swap_[a][b] = static_cast<int>(acc);
            }
    }

    // every ordered pair must match the derived bicharacter; the table lists
    // one direction, the other follows from phase(g,h) phase(h,g) = 1
    auto listed = [&](int g, int h) -> std::optional<int> {
        for (const auto& e : phase_table) {
            if (e.g == g && e.h == h) return e.exponent;
            if (e.g == h && e.h == g) return -e.exponent;
        }
        return std::nullopt;
    };
    for (int g = 0; g < n_generators(); ++g)
        for (int h = 0; h < n_generators(); ++h) {
            if (g == h) continue;
            int derived = swap_exponent(static_cast<unsigned char>(g),
                                        static_cast<unsigned char>(h));
            int stated = listed(g, h).value_or(0);
            if (derived != stated)
                throw SpecError("phase of (" + generators[g].name + "," + generators[h].name +
                                ") is mu^" + std::to_string(stated) +
                                " but degrees force mu^" + std::to_string(derived));
        }

    // relations must be homogeneous
    for (const auto& rel : relations) {
        MultiDegree d;
        {
            MultiDegree acc(std::vector<int>(N, 0));
            for (unsigned char l : rel.lhs) acc = acc + letter_degree(l);
            d = acc;
        }
        for (const auto& [w, c] : rel.rhs) {
            MultiDegree acc(std::vector<int>(N, 0));
            for (unsigned char l : w) acc = acc + letter_degree(l);
            if (!(acc == d)) throw SpecError("relation is not homogeneous: " + rel.source);
        }
    }
}

std::string spec_hash(const ManifoldSpec& spec) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : spec.render()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace thetasphere
