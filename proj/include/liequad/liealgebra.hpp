#pragma once

#include <optional>
#include <vector>

#include "liequad/hwmodule.hpp"

namespace liequad {

/**
 * The image rho(g) of the Lie algebra inside End(V), with its Killing
 * form, Killing-dual basis, and the induced form on weight space.
 *
 * The basis starts with the images of H[0..rank), then E, then F, then
 * the brackets discovered by the closure sweep, so cartan_indices is
 * always 0..rank-1. The Killing form is the trace form of the adjoint
 * action computed inside rho(g) itself.
 */
struct MatrixLieAlgebra {
    RepModule rep;
    std::vector<RMatrix> basis;          // x_a, dim x dim matrices
    std::vector<std::size_t> cartan_indices;
    std::vector<RMatrix> ad_basis;       // ad x_a as d x d matrices
    RMatrix killing;                     // K(x_a, x_b)
    RMatrix killing_inv;
    std::vector<RMatrix> dual_basis;     // x^a with K(x_a, x^b) = delta_ab
    RMatrix cartan_form_inv;             // (K restricted to the H block)^{-1}
    RMatrix casimir;                     // sum_a rho(x_a) rho(x^a)
    RowSpan span = RowSpan(0);           // span of the flattened basis

    std::size_t dimension() const { return basis.size(); }

    bool contains(const RMatrix& m) const { return span.contains(m); }

    /// Coordinates of m over the basis, if m lies in rho(g).
    std::optional<std::vector<Rational>> expand(const RMatrix& m) const {
        return span.coordinates(m);
    }

    /// K(x, y) for arbitrary elements of rho(g).
    Rational killing_form(const RMatrix& x, const RMatrix& y) const {
        auto cx = expand(x);
        auto cy = expand(y);
        if (!cx || !cy) throw Error("killing_form: element outside rho(g)");
        Rational out = 0;
        for (std::size_t a = 0; a < cx->size(); ++a) {
            if ((*cx)[a] == 0) continue;
            for (std::size_t b = 0; b < cy->size(); ++b)
                if ((*cy)[b] != 0) out += (*cx)[a] * (*cy)[b] * killing.get(a, b);
        }
        return out;
    }
};

/**
 * Generates rho(g) as the bracket closure of the generator matrices.
 * Requires a nonzero highest weight (so that rho is faithful) and checks
 * the resulting dimension against the root-system value.
 */
inline MatrixLieAlgebra bracket_closure(const RepModule& rep) {
    if (rep.highest_weight.is_zero())
        throw Error("bracket_closure: the trivial module is not faithful");

    MatrixLieAlgebra L;
    L.rep = rep;
    L.span = RowSpan(rep.dim * rep.dim);

    auto push = [&](const RMatrix& m) {
        if (m.is_zero()) return false;
        if (!L.span.add(m)) return false;
        L.basis.push_back(m);
        return true;
    };
    for (int i = 0; i < rep.rs.rank; ++i) {
        if (!push(rep.H[i])) throw InvariantError("dependent Cartan generators");
        L.cartan_indices.push_back(static_cast<std::size_t>(i));
    }
    for (int i = 0; i < rep.rs.rank; ++i) push(rep.E[i]);
    for (int i = 0; i < rep.rs.rank; ++i) push(rep.F[i]);

    for (std::size_t j = 1; j < L.basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push(commutator(L.basis[i], L.basis[j]));

    const std::size_t d = L.basis.size();
    if (d != rep.rs.dim_g())
        throw InvariantError("bracket closure has dimension " + std::to_string(d) +
                             ", expected " + std::to_string(rep.rs.dim_g()));

    // ad matrices from exact structure constants
    for (std::size_t a = 0; a < d; ++a) {
        RMatrix ad(d, d);
        for (std::size_t b = 0; b < d; ++b) {
            auto coords = L.expand(commutator(L.basis[a], L.basis[b]));
            if (!coords) throw InvariantError("basis is not bracket-closed");
            for (std::size_t c = 0; c < d; ++c)
                if ((*coords)[c] != 0) ad.set(c, b, (*coords)[c]);
        }
        L.ad_basis.push_back(std::move(ad));
    }

    L.killing = RMatrix(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Rational k = trace_product(L.ad_basis[a], L.ad_basis[b]);
            L.killing.set(a, b, k);
            L.killing.set(b, a, k);
        }

    auto kinv = inverse(L.killing);
    if (!kinv) throw InvariantError("degenerate Killing form");
    L.killing_inv = *kinv;
    for (std::size_t b = 0; b < d; ++b) {
        RMatrix dual(rep.dim, rep.dim);
        for (std::size_t a = 0; a < d; ++a) {
            const Rational c = L.killing_inv.get(a, b);
            if (c != 0) dual = dual + L.basis[a] * c;
        }
        L.dual_basis.push_back(std::move(dual));
    }

    RMatrix cartan_block(rep.rs.rank, rep.rs.rank);
    for (int i = 0; i < rep.rs.rank; ++i)
        for (int j = 0; j < rep.rs.rank; ++j)
            cartan_block.set(i, j, L.killing.get(L.cartan_indices[i], L.cartan_indices[j]));
    auto cinv = inverse(cartan_block);
    if (!cinv) throw InvariantError("degenerate Killing form on the Cartan subalgebra");
    L.cartan_form_inv = *cinv;

    L.casimir = RMatrix(rep.dim, rep.dim);
    for (std::size_t a = 0; a < d; ++a) L.casimir = L.casimir + L.basis[a] * L.dual_basis[a];

    return L;
}

inline Rational killing_pair(const MatrixLieAlgebra& L, std::size_t a, std::size_t b) {
    if (a >= L.dimension() || b >= L.dimension()) throw Error("killing_pair: index out of range");
    return L.killing.get(a, b);
}

/// The form on weights dual to the Killing form restricted to the Cartan
/// subalgebra: mu^T (K_h)^{-1} nu with mu(h_i) read off the fundamental
/// coordinates.
inline Rational weight_form(const MatrixLieAlgebra& L, const Weight& mu, const Weight& nu) {
    const int r = L.rep.rs.rank;
    if (static_cast<int>(mu.coords.size()) != r || static_cast<int>(nu.coords.size()) != r)
        throw Error("weight_form: rank mismatch");
    Rational out = 0;
    for (int i = 0; i < r; ++i) {
        if (mu.coords[i] == 0) continue;
        for (int j = 0; j < r; ++j)
            if (nu.coords[j] != 0)
                out += Rational(mu.coords[i]) * L.cartan_form_inv.get(i, j) * nu.coords[j];
    }
    return out;
}

/// Eigenvalue of the Casimir operator on V(lambda): (lambda, lambda + 2 delta).
inline Rational casimir_eigenvalue(const MatrixLieAlgebra& L) {
    const Weight& lambda = L.rep.highest_weight;
    return weight_form(L, lambda, lambda + L.rep.rs.delta * 2);
}

} // namespace liequad
