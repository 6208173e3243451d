#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "liequad/rmatrix.hpp"

namespace liequad {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A weight in fundamental-weight coordinates.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    bool dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
    }
    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
    }
    auto operator<=>(const Weight&) const = default;

    Weight operator+(const Weight& o) const {
        Weight w = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
        return w;
    }
    Weight operator-(const Weight& o) const {
        Weight w = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] -= o.coords[i];
        return w;
    }
    Weight operator*(int s) const {
        Weight w = *this;
        for (auto& c : w.coords) c *= s;
        return w;
    }
};

inline std::string weight_str(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.coords[i]);
    }
    return s;
}

/**
 * Root datum of a split simple type: Cartan matrix (Bourbaki numbering),
 * positive roots in simple-root coordinates, the Weyl vector, and the
 * fixed Weyl-invariant form on weight space used by the dimension and
 * multiplicity formulas.
 *
 * Convention: cartan[i][j] = <alpha_i, alpha_j^v>, so a weight mu pairs
 * with the i-th coroot as mu.coords[i] and a root alpha = sum c_k alpha_k
 * has fundamental coordinates (C^T c).
 */
struct RootSystemData {
    Series series;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots;  // (height, lex) order
    Weight delta;                                  // (1,...,1)

    // Symmetrizer d_i with (alpha_i, alpha_j) = cartan[i][j] * d_j; scaled
    // to the smallest positive integers.
    std::vector<Rational> sym_d;
    // Gram matrix of the fundamental weights under the same form.
    std::vector<std::vector<Rational>> weight_gram;

    std::size_t dim_g() const { return static_cast<std::size_t>(rank) + 2 * positive_roots.size(); }

    Weight root_to_weight(const std::vector<int>& c) const {
        Weight w(std::vector<int>(rank, 0));
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) w.coords[j] += c[k] * cartan[k][j];
        return w;
    }

    /// Fixed invariant form between two weights in fundamental coordinates.
    Rational form(const Weight& mu, const Weight& nu) const {
        Rational s = 0;
        for (int i = 0; i < rank; ++i) {
            if (mu.coords[i] == 0) continue;
            for (int j = 0; j < rank; ++j)
                if (nu.coords[j] != 0) s += Rational(mu.coords[i]) * weight_gram[i][j] * nu.coords[j];
        }
        return s;
    }

    /// (mu, alpha) for a root in simple-root coordinates.
    Rational form_with_root(const Weight& mu, const std::vector<int>& c) const {
        Rational s = 0;
        for (int k = 0; k < rank; ++k)
            if (c[k] != 0 && mu.coords[k] != 0) s += Rational(c[k]) * sym_d[k] * mu.coords[k];
        return s;
    }

    int root_height(const std::vector<int>& c) const {
        int h = 0;
        for (int v : c) h += v;
        return h;
    }

    const std::vector<int>& highest_root() const { return positive_roots.back(); }

    /// Dominant representative of the Weyl orbit of mu.
    Weight dominant_representative(Weight mu) const {
        for (;;) {
            int i = 0;
            while (i < rank && mu.coords[i] >= 0) ++i;
            if (i == rank) return mu;
            const int c = mu.coords[i];
            for (int j = 0; j < rank; ++j) mu.coords[j] -= c * cartan[i][j];
        }
    }
};

inline std::string type_str(const RootSystemData& rs) {
    return std::string(1, static_cast<char>(rs.series)) + std::to_string(rs.rank);
}

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(Series series, int rank) {
    const int n = rank;
    auto valid = [&] {
        switch (series) {
            case Series::A: return n >= 1;
            case Series::B: return n >= 2;
            case Series::C: return n >= 3;
            case Series::D: return n >= 4;
            case Series::E: return n >= 6 && n <= 8;
            case Series::F: return n == 4;
            case Series::G: return n == 2;
        }
        return false;
    }();
    if (!valid)
        throw ParseError("invalid simple type " + std::string(1, static_cast<char>(series)) +
                         std::to_string(rank));

    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto edge = [&](int i, int j, int cij = -1, int cji = -1) {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1);
    };
    switch (series) {
        case Series::A:
            chain(0, n - 1);
            break;
        case Series::B:  // alpha_n short
            chain(0, n - 2);
            edge(n - 2, n - 1, -2, -1);
            break;
        case Series::C:  // alpha_n long
            chain(0, n - 2);
            edge(n - 2, n - 1, -1, -2);
            break;
        case Series::D:
            chain(0, n - 2);
            c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
            edge(n - 3, n - 1);
            break;
        case Series::E:
            // Bourbaki: 1-3-4-5-6(-7(-8)) chain with node 2 attached to 4.
            edge(0, 2);
            chain(2, n - 1);
            c[1][2] = c[2][1] = 0;
            edge(1, 3);
            break;
        case Series::F:
            edge(0, 1);
            edge(1, 2, -2, -1);
            edge(2, 3);
            break;
        case Series::G:
            edge(0, 1, -1, -3);
            break;
    }
    return c;
}

} // namespace detail

/**
 * Builds the complete root datum for a valid simple type. Positive roots
 * are enumerated by height-increasing closure from the simple roots: a
 * candidate alpha + alpha_i is a root iff p - <alpha, alpha_i^v> > 0 where
 * p is the length of the alpha_i-string below alpha.
 */
inline RootSystemData build_root_system(Series series, int rank) {
    RootSystemData rs;
    rs.series = series;
    rs.rank = rank;
    rs.cartan = detail::cartan_matrix(series, rank);
    rs.delta = Weight(std::vector<int>(rank, 1));

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
        rs.positive_roots.push_back(e);
    }
    while (!frontier.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < rank; ++i) {
                int pairing = 0;  // <r, alpha_i^v>
                for (int k = 0; k < rank; ++k) pairing += r[k] * rs.cartan[k][i];
                int p = 0;
                std::vector<int> down = r;
                for (;;) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    std::vector<int> up = r;
                    up[i] += 1;
                    if (!seen.count(up)) next.insert(up);
                }
            }
        }
        frontier.assign(next.begin(), next.end());
        for (const auto& r : frontier) {
            seen.insert(r);
            rs.positive_roots.push_back(r);
        }
    }

    // Symmetrizer: propagate d_j = d_i * c[j][i] / c[i][j] along the Dynkin
    // graph, then clear denominators.
    std::vector<Rational> d(rank, Rational(0));
    d[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank; ++i) {
            if (d[i] == 0) continue;
            for (int j = 0; j < rank; ++j) {
                if (i == j || rs.cartan[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * rs.cartan[j][i] / rs.cartan[i][j];
                changed = true;
            }
        }
    }
    Int lcm_den = 1;
    for (const auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    for (auto& x : d) x *= lcm_den;
    Int gcd_num = 0;
    for (const auto& x : d) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
    for (auto& x : d) x /= gcd_num;
    rs.sym_d = d;

    // weight_gram = C^{-1} * diag(d)
    RMatrix c(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c.set(i, j, rs.cartan[i][j]);
    auto cinv = inverse(c);
    if (!cinv) throw InvariantError("singular Cartan matrix");
    rs.weight_gram.assign(rank, std::vector<Rational>(rank, Rational(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.weight_gram[i][j] = cinv->get(i, j) * d[j];

    return rs;
}

inline std::pair<Series, int> parse_type(std::string_view text) {
    if (text.size() < 2) throw ParseError("invalid type string '" + std::string(text) + "'");
    char s = text[0];
    if (s < 'A' || s > 'G') throw ParseError("invalid series '" + std::string(text) + "'");
    for (char ch : text.substr(1))
        if (ch < '0' || ch > '9') throw ParseError("invalid rank in '" + std::string(text) + "'");
    return {static_cast<Series>(s), std::stoi(std::string(text.substr(1)))};
}

inline RootSystemData build_root_system(std::string_view type_string) {
    auto [series, rank] = parse_type(type_string);
    return build_root_system(series, rank);
}

inline Weight parse_weight(std::string_view text, int rank) {
    std::vector<int> coords;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ParseError("empty weight coordinate");
        bool neg = cur[0] == '-';
        for (std::size_t i = neg ? 1 : 0; i < cur.size(); ++i)
            if (cur[i] < '0' || cur[i] > '9') throw ParseError("invalid weight '" + std::string(text) + "'");
        if (cur == "-") throw ParseError("invalid weight '" + std::string(text) + "'");
        coords.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    if (static_cast<int>(coords.size()) != rank)
        throw ParseError("weight '" + std::string(text) + "' has wrong rank");
    return Weight(std::move(coords));
}

/// Weyl dimension formula: product over positive roots of
/// (lambda + delta, alpha) / (delta, alpha).
inline unsigned long long weyl_dim(const RootSystemData& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.coords.size()) != rs.rank) throw Error("weight rank mismatch");
    if (!lambda.dominant()) throw Error("weyl_dim: weight is not dominant");
    Rational dim = 1;
    const Weight shifted = lambda + rs.delta;
    for (const auto& alpha : rs.positive_roots)
        dim *= rs.form_with_root(shifted, alpha) / rs.form_with_root(rs.delta, alpha);
    if (denominator(dim) != 1) throw InvariantError("non-integral Weyl dimension");
    Int n = numerator(dim);
    if (n <= 0 || n > Int(1) << 62) throw InvariantError("Weyl dimension out of range");
    return n.convert_to<unsigned long long>();
}

/// Full weight system of V(lambda) with multiplicities, organized by
/// level (height of lambda - mu).
struct WeightSystem {
    std::map<Weight, long long> mult;
    std::vector<std::vector<Weight>> by_level;
};

/**
 * Freudenthal's recursion, evaluated on dominant weights only and spread
 * to the rest of each Weyl orbit by symmetry:
 *   (|lambda+delta|^2 - |mu+delta|^2) m(mu)
 *       = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha).
 */
inline WeightSystem freudenthal_weight_system(const RootSystemData& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.coords.size()) != rs.rank) throw Error("weight rank mismatch");
    if (!lambda.dominant()) throw Error("freudenthal: weight is not dominant");

    WeightSystem ws;
    ws.mult[lambda] = 1;
    ws.by_level.push_back({lambda});

    std::vector<Weight> root_weights;
    for (const auto& alpha : rs.positive_roots) root_weights.push_back(rs.root_to_weight(alpha));

    const Rational top_norm = rs.form(lambda + rs.delta, lambda + rs.delta);

    for (std::size_t level = 1;; ++level) {
        std::set<Weight> candidates;
        for (const auto& nu : ws.by_level[level - 1])
            for (int i = 0; i < rs.rank; ++i) {
                Weight mu = nu;
                for (int j = 0; j < rs.rank; ++j) mu.coords[j] -= rs.cartan[i][j];
                candidates.insert(mu);
            }
        std::vector<Weight> found;
        for (const auto& mu : candidates) {
            long long m = 0;
            if (mu.dominant()) {
                Rational num = 0;
                for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
                    const int ht = rs.root_height(rs.positive_roots[r]);
                    for (std::size_t k = 1; k * ht <= level; ++k) {
                        Weight nu = mu + root_weights[r] * static_cast<int>(k);
                        auto it = ws.mult.find(nu);
                        if (it == ws.mult.end()) continue;
                        num += Rational(it->second) * rs.form_with_root(nu, rs.positive_roots[r]);
                    }
                }
                const Rational den = top_norm - rs.form(mu + rs.delta, mu + rs.delta);
                if (den == 0) throw InvariantError("freudenthal: degenerate level");
                const Rational value = 2 * num / den;
                if (denominator(value) != 1 || numerator(value) < 0)
                    throw InvariantError("freudenthal: non-integral multiplicity");
                m = numerator(value).convert_to<long long>();
            } else {
                auto it = ws.mult.find(rs.dominant_representative(mu));
                m = it == ws.mult.end() ? 0 : it->second;
            }
            if (m > 0) {
                ws.mult[mu] = m;
                found.push_back(mu);
            }
        }
        if (found.empty()) break;
        ws.by_level.push_back(std::move(found));
    }
    return ws;
}

inline std::map<Weight, long long> freudenthal_multiplicities(const RootSystemData& rs,
                                                              const Weight& lambda) {
    return freudenthal_weight_system(rs, lambda).mult;
}

} // namespace liequad
