#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "liequad/rootdata.hpp"

namespace liequad {

/**
 * An irreducible highest-weight module realized as explicit exact matrices
 * for the Chevalley generators.
 *
 * Basis vectors are classes of lowering words f_{i_k} ... f_{i_1} v0,
 * selected greedily per weight space by contravariant-form Gram rank and
 * ordered by (level, lexicographic word). Vectors are not normalized;
 * everything downstream is basis-independent or checked through
 * basis-independent identities.
 */
struct RepModule {
    RootSystemData rs;
    Weight highest_weight;
    std::size_t dim = 0;
    std::vector<Weight> basis_weights;              // position 0 is v0
    std::vector<std::vector<int>> basis_words;      // lowering-index sequences
    std::vector<RMatrix> E, F, H;                   // rank generator matrices
    std::map<Weight, RMatrix> contravariant_grams;  // per weight space
};

namespace detail {

// Lowering words are stored as index sequences [i_k, ..., i_1] for
// f_{i_k} ... f_{i_1} v0: position 0 is the outermost (last applied)
// operator.
using Word = std::vector<int>;
using WordCombo = std::map<Word, Rational>;

class ShapovalovTable {
public:
    ShapovalovTable(const RootSystemData& rs, const Weight& lambda) : rs_(rs), lambda_(lambda) {}

    /// e_i applied to a word, expanded as a combination of shorter words:
    /// passing e_i through each matching f picks up the pairing of the
    /// suffix weight with the i-th coroot.
    WordCombo raise(int i, const Word& w) const {
        WordCombo out;
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] != i) continue;
            int coeff = lambda_.coords[i];
            for (std::size_t s = t + 1; s < w.size(); ++s) coeff -= rs_.cartan[w[s]][i];
            if (coeff == 0) continue;
            Word shorter;
            shorter.reserve(w.size() - 1);
            for (std::size_t s = 0; s < w.size(); ++s)
                if (s != t) shorter.push_back(w[s]);
            auto [it, inserted] = out.try_emplace(std::move(shorter), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
        return out;
    }

    /// Contravariant form <w1, w2> with <v0,v0> = 1 and f_i, e_i adjoint.
    Rational pairing(const Word& w1, const Word& w2) {
        if (w1.size() != w2.size()) return 0;
        if (w1.empty()) return 1;
        auto key = w1 <= w2 ? std::make_pair(w1, w2) : std::make_pair(w2, w1);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Word head(w1.begin() + 1, w1.end());
        Rational value = 0;
        for (const auto& [word, coeff] : raise(w1.front(), w2)) value += coeff * pairing(head, word);
        memo_.emplace(std::move(key), value);
        return value;
    }

    Rational pairing_combo(const Word& w, const WordCombo& combo) {
        Rational value = 0;
        for (const auto& [word, coeff] : combo) value += coeff * pairing(w, word);
        return value;
    }

private:
    const RootSystemData& rs_;
    Weight lambda_;
    std::map<std::pair<Word, Word>, Rational> memo_;
};

} // namespace detail

/**
 * Builds V(lambda) for a dominant weight. Words are generated breadth-first
 * by weight level from the already-accepted basis of the previous level,
 * visited in lexicographic order; a word joins the basis iff it strictly
 * increases the Gram rank of its weight space, stopping at the Freudenthal
 * multiplicity. Generator matrices come from Gram-matrix linear systems.
 */
inline RepModule build_module(const RootSystemData& rs, const Weight& lambda,
                              std::size_t max_dim = 64) {
    if (static_cast<int>(lambda.coords.size()) != rs.rank) throw Error("weight rank mismatch");
    if (!lambda.dominant()) throw Error("build_module: weight is not dominant");
    const unsigned long long dim = weyl_dim(rs, lambda);
    if (dim > max_dim)
        throw DimensionCapError("module dimension " + std::to_string(dim) +
                                " exceeds cap " + std::to_string(max_dim));

    const WeightSystem ws = freudenthal_weight_system(rs, lambda);
    detail::ShapovalovTable shapovalov(rs, lambda);

    std::vector<Weight> simple_root_weights;
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> e(rs.rank, 0);
        e[i] = 1;
        simple_root_weights.push_back(rs.root_to_weight(e));
    }

    RepModule rep;
    rep.rs = rs;
    rep.highest_weight = lambda;
    rep.dim = dim;

    struct WeightSpace {
        std::vector<std::size_t> members;                // global basis indices
        std::vector<std::vector<Rational>> gram;         // pairings of accepted words
    };
    std::map<Weight, WeightSpace> spaces;
    std::map<detail::Word, std::size_t> word_index;

    std::vector<std::vector<std::pair<detail::Word, Weight>>> accepted_by_level;
    accepted_by_level.push_back({{detail::Word{}, lambda}});
    rep.basis_words.push_back({});
    rep.basis_weights.push_back(lambda);
    word_index[{}] = 0;
    spaces[lambda].members.push_back(0);
    spaces[lambda].gram = {{Rational(1)}};

    for (std::size_t level = 1; level < ws.by_level.size(); ++level) {
        std::map<Weight, long long> remaining;
        for (const auto& w : ws.by_level[level]) remaining[w] = ws.mult.at(w);

        std::vector<std::pair<detail::Word, Weight>> candidates;
        for (const auto& [parent, parent_weight] : accepted_by_level[level - 1])
            for (int i = 0; i < rs.rank; ++i) {
                detail::Word w;
                w.reserve(parent.size() + 1);
                w.push_back(i);
                w.insert(w.end(), parent.begin(), parent.end());
                candidates.emplace_back(std::move(w), parent_weight - simple_root_weights[i]);
            }
        std::sort(candidates.begin(), candidates.end());

        std::vector<std::pair<detail::Word, Weight>> accepted;
        for (auto& [word, mu] : candidates) {
            auto rem = remaining.find(mu);
            if (rem == remaining.end() || rem->second == 0) continue;
            auto& space = spaces[mu];
            const std::size_t k = space.members.size();
            std::vector<Rational> cross(k);
            for (std::size_t l = 0; l < k; ++l)
                cross[l] = shapovalov.pairing(rep.basis_words[space.members[l]], word);
            Rational self = shapovalov.pairing(word, word);
            // Schur complement against the (nonsingular) accepted Gram
            Rational sigma = self;
            if (k > 0) {
                RMatrix g(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) g.set(a, b, space.gram[a][b]);
                auto x = solve(g, RMatrix::column(cross));
                if (!x) throw InvariantError("singular weight-space Gram matrix");
                for (std::size_t l = 0; l < k; ++l) sigma -= cross[l] * x->get(l, 0);
            }
            if (sigma == 0) continue;
            const std::size_t idx = rep.basis_words.size();
            rep.basis_words.push_back(word);
            rep.basis_weights.push_back(mu);
            word_index[word] = idx;
            space.members.push_back(idx);
            for (std::size_t l = 0; l < k; ++l) space.gram[l].push_back(cross[l]);
            std::vector<Rational> new_row = cross;
            new_row.push_back(self);
            space.gram.push_back(std::move(new_row));
            accepted.emplace_back(word, mu);
            --rem->second;
        }
        for (const auto& [w, m] : remaining)
            if (m != 0) throw InvariantError("weight space not saturated by lowering words");
        accepted_by_level.push_back(std::move(accepted));
    }

    if (rep.basis_words.size() != dim) throw InvariantError("basis size mismatch");
    for (const auto& [w, space] : spaces) {
        RMatrix g(space.members.size(), space.members.size());
        for (std::size_t a = 0; a < space.members.size(); ++a)
            for (std::size_t b = 0; b < space.members.size(); ++b) g.set(a, b, space.gram[a][b]);
        rep.contravariant_grams[w] = std::move(g);
    }

    // Expands a combination of words of weight mu over the accepted basis
    // of that weight space by solving the Gram system.
    auto expand = [&](const Weight& mu, const detail::WordCombo& combo) {
        std::vector<std::pair<std::size_t, Rational>> out;
        auto it = spaces.find(mu);
        if (it == spaces.end() || combo.empty()) return out;
        const auto& space = it->second;
        const std::size_t k = space.members.size();
        RMatrix g(k, k);
        RMatrix rhs(k, 1);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) g.set(a, b, space.gram[a][b]);
            rhs.set(a, 0, shapovalov.pairing_combo(rep.basis_words[space.members[a]], combo));
        }
        auto x = solve(g, rhs);
        if (!x) throw InvariantError("Gram expansion failed");
        for (std::size_t a = 0; a < k; ++a)
            if (x->get(a, 0) != 0) out.emplace_back(space.members[a], x->get(a, 0));
        return out;
    };

    for (int i = 0; i < rs.rank; ++i) {
        RMatrix e(dim, dim), f(dim, dim), h(dim, dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const auto& word = rep.basis_words[k];
            const Weight& mu = rep.basis_weights[k];
            if (mu.coords[i] != 0) h.set(k, k, mu.coords[i]);

            detail::Word lowered;
            lowered.reserve(word.size() + 1);
            lowered.push_back(i);
            lowered.insert(lowered.end(), word.begin(), word.end());
            if (auto it = word_index.find(lowered); it != word_index.end()) {
                f.set(it->second, k, 1);
            } else {
                for (const auto& [row, val] : expand(mu - simple_root_weights[i], {{lowered, 1}}))
                    f.set(row, k, val);
            }

            for (const auto& [row, val] : expand(mu + simple_root_weights[i], shapovalov.raise(i, word)))
                e.set(row, k, val);
        }
        rep.E.push_back(std::move(e));
        rep.F.push_back(std::move(f));
        rep.H.push_back(std::move(h));
    }
    return rep;
}

} // namespace liequad
