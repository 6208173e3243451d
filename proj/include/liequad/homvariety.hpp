#pragma once

#include <vector>

#include "liequad/casimir.hpp"
#include "liequad/sampling.hpp"

namespace liequad {

/**
 * A reduced system of quadratic forms cutting out the closure of the
 * highest-weight orbit: each symmetric matrix Q encodes the quadric
 * v^T Q v = 0. The forms are the linearly independent coordinates of
 * t(v (x) v) - (2 lambda + 2 delta, 2 lambda) (v (x) v).
 */
struct QuadraticSystem {
    std::size_t dim = 0;
    std::vector<RMatrix> forms;
    Rational ambient_constant;

    bool satisfied_by(const RMatrix& v) const {
        for (const auto& q : forms)
            if ((v.transpose() * q * v).get(0, 0) != 0) return false;
        return true;
    }
};

/// A subspace of V given by independent spanning columns.
struct SubspaceData {
    std::vector<RMatrix> columns;
};

struct MembershipResult {
    bool is_member = false;
    RMatrix residual;  // length dim^2 column
};

/// (2 lambda + 2 delta, 2 lambda) in the Killing-dual weight form.
inline Rational lichtenstein_constant(const MatrixLieAlgebra& L) {
    const Weight& lambda = L.rep.highest_weight;
    return weight_form(L, lambda * 2 + L.rep.rs.delta * 2, lambda * 2);
}

/**
 * Lichtenstein's membership test: v lies on the cone over the orbit of
 * the highest weight line iff t(v (x) v) = (2 lambda + 2 delta, 2 lambda)
 * (v (x) v). Scale-invariant by construction.
 */
inline MembershipResult membership_test(const MatrixLieAlgebra& L, const RMatrix& v) {
    const std::size_t n = L.rep.dim;
    if (v.rows() != n || v.cols() != 1) throw Error("membership_test: shape mismatch");
    if (v.is_zero()) throw Error("membership_test: zero vector");
    const RMatrix vv = kron(v, v);
    MembershipResult out;
    out.residual = casimir_tensor_apply(L, vv) - vv * lichtenstein_constant(L);
    out.is_member = out.residual.is_zero();
    return out;
}

/**
 * Emits the quadratic equations of the orbit closure: every coordinate of
 * the membership residual is symmetrized into a quadratic form and a
 * linearly independent spanning subset is kept, scanning coordinates
 * (i, k), i <= k, in row-major order. The count always equals
 * dim Sym^2 V - dim V(2 lambda).
 */
inline QuadraticSystem emit_equations(const MatrixLieAlgebra& L) {
    const std::size_t n = L.rep.dim;
    QuadraticSystem sys;
    sys.dim = n;
    sys.ambient_constant = lichtenstein_constant(L);

    // The residual coordinate (i,k) of t(v v^T) - c v v^T is the bilinear
    // form sum of (row_i P)^T (row_k Q) over the operator pairs (P, Q).
    std::vector<std::pair<const RMatrix*, const RMatrix*>> pairs;
    const RMatrix id = RMatrix::identity(n);
    pairs.push_back({&L.casimir, &id});
    pairs.push_back({&id, &L.casimir});
    for (std::size_t a = 0; a < L.dimension(); ++a) {
        pairs.push_back({&L.basis[a], &L.dual_basis[a]});
        pairs.push_back({&L.dual_basis[a], &L.basis[a]});
    }

    // Sparse row cache across all operators appearing in the pairs.
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
    std::map<const RMatrix*, std::vector<SparseRow>> rows;
    auto row_of = [&](const RMatrix* m, std::size_t i) -> const SparseRow& {
        auto [it, inserted] = rows.try_emplace(m);
        if (inserted) {
            it->second.resize(n);
            for (const auto& [ij, v] : m->entries()) it->second[ij.first].emplace_back(ij.second, v);
        }
        return it->second[i];
    };

    RowSpan independent(n * n);
    const Rational constant = sys.ambient_constant;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i; k < n; ++k) {
            RMatrix bilinear(n, n);
            for (const auto& [p, q] : pairs)
                for (const auto& [pc, pv] : row_of(p, i))
                    for (const auto& [qc, qv] : row_of(q, k)) bilinear.add_to(pc, qc, pv * qv);
            bilinear.add_to(i, k, -constant);
            RMatrix form = (bilinear + bilinear.transpose()) * Rational(1, 2);
            if (form.is_zero()) continue;
            // independence over upper-triangular coefficient vectors
            std::map<std::size_t, Rational> coeffs;
            for (const auto& [ij, v] : form.entries())
                if (ij.first <= ij.second) coeffs[ij.first * n + ij.second] = v;
            if (independent.add(coeffs)) sys.forms.push_back(std::move(form));
        }
    }
    return sys;
}

/**
 * Inner ideal test per Faulkner: M is an inner ideal iff
 * pi(m a)(n) stays in M for all m, n in M and all coordinate functionals
 * a, checked exactly against a span tracker of the columns.
 */
inline bool inner_ideal_test(const MatrixLieAlgebra& L, const SubspaceData& M) {
    const std::size_t n = L.rep.dim;
    if (M.columns.empty()) throw Error("inner_ideal_test: empty subspace");
    RowSpan span(n);
    for (const auto& col : M.columns) {
        if (col.rows() != n || col.cols() != 1) throw Error("inner_ideal_test: shape mismatch");
        if (!span.add(col)) throw Error("inner_ideal_test: dependent columns");
    }
    for (const auto& m : M.columns) {
        std::vector<RMatrix> images;  // pi(m e_k^T) for each coordinate functional
        for (std::size_t k = 0; k < n; ++k) {
            RMatrix a(1, n);
            a.set(0, k, 1);
            images.push_back(pi_apply_rank_one(L, m, a));
        }
        for (const auto& target : M.columns)
            for (const auto& image : images)
                if (!span.contains(image * target)) return false;
    }
    return true;
}

/// Applies a word of exact unipotent factors to a vector; the last step in
/// the list acts first.
inline RMatrix apply_word(const MatrixLieAlgebra& L, const std::vector<WordStep>& word,
                          RMatrix v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->index < 0 || it->index >= L.rep.rs.rank)
            throw Error("apply_word: generator index out of range");
        const RMatrix& x = it->lowering ? L.rep.F[it->index] : L.rep.E[it->index];
        v = nilpotent_exp(x, it->amount) * v;
    }
    return v;
}

/// A point of the orbit of K v0, by construction.
inline RMatrix orbit_sample(const MatrixLieAlgebra& L, const std::vector<WordStep>& word) {
    RMatrix v0(L.rep.dim, 1);
    v0.set(0, 0, 1);
    return apply_word(L, word, v0);
}

/// v0 plus the lowest-weight vector: the canonical non-member whenever the
/// equation system is nonempty.
inline RMatrix designated_nonmember(const MatrixLieAlgebra& L) {
    RMatrix v(L.rep.dim, 1);
    v.set(0, 0, 1);
    v.set(L.rep.dim - 1, 0, 1);
    return v;
}

/**
 * The adjoint-representation identity: on the adjoint module there is a
 * single scalar gamma with [v, [v, u]] = gamma K(v, u) v for v on the
 * highest-root line and all u, and the same quadratic condition on a
 * general v characterizes membership. The module is transported onto
 * rho(g) through the intertwiner phi sending v0 to the highest-root
 * vector.
 */
struct AdjointIdentity {
    Rational gamma;
    std::vector<RMatrix> phi;  // image of each basis vector inside rho(g)
};

inline AdjointIdentity make_adjoint_identity(const MatrixLieAlgebra& L) {
    const RootSystemData& rs = L.rep.rs;
    if (L.rep.highest_weight != rs.root_to_weight(rs.highest_root()))
        throw Error("adjoint identity requires the adjoint module");
    const std::size_t d = L.dimension();

    // Highest-root vector of rho(g): ad-weight theta under the Cartan
    // images and killed by every raising generator.
    const Weight theta = L.rep.highest_weight;
    std::vector<std::vector<Rational>> constraint_rows;
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<std::vector<Rational>> weight_rows(d, std::vector<Rational>(d, Rational(0)));
        std::vector<std::vector<Rational>> raise_rows(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t a = 0; a < d; ++a) {
            auto wc = L.expand(commutator(L.rep.H[i], L.basis[a]));
            auto rc = L.expand(commutator(L.rep.E[i], L.basis[a]));
            if (!wc || !rc) throw InvariantError("closure expansion failed");
            for (std::size_t c = 0; c < d; ++c) {
                weight_rows[c][a] = (*wc)[c] - (c == a ? Rational(theta.coords[i]) : Rational(0));
                raise_rows[c][a] = (*rc)[c];
            }
        }
        for (auto& r : weight_rows) constraint_rows.push_back(std::move(r));
        for (auto& r : raise_rows) constraint_rows.push_back(std::move(r));
    }
    auto null_basis = kernel(RMatrix::from_rows(constraint_rows));
    if (null_basis.size() != 1) throw InvariantError("highest-root space is not one-dimensional");
    RMatrix e_max(L.rep.dim, L.rep.dim);
    for (std::size_t a = 0; a < d; ++a)
        if (null_basis[0].get(a, 0) != 0) e_max = e_max + L.basis[a] * null_basis[0].get(a, 0);

    AdjointIdentity out;
    out.phi.resize(L.rep.dim);
    RowSpan image(L.rep.dim * L.rep.dim);
    for (std::size_t k = 0; k < L.rep.dim; ++k) {
        RMatrix acc = e_max;
        const auto& word = L.rep.basis_words[k];
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = commutator(L.rep.F[*it], acc);
        image.add(acc);
        out.phi[k] = std::move(acc);
    }
    if (image.size() != L.rep.dim) throw InvariantError("adjoint transport is not an isomorphism");

    // gamma from the first u with K(e_max, u) != 0, then checked on all u.
    bool found = false;
    for (std::size_t k = 0; k < L.rep.dim; ++k) {
        const RMatrix lhs = commutator(e_max, commutator(e_max, out.phi[k]));
        const Rational pairing = L.killing_form(e_max, out.phi[k]);
        if (pairing == 0) {
            if (!lhs.is_zero()) throw Error("adjoint identity: inconsistent gamma");
            continue;
        }
        if (!found) {
            if (lhs.is_zero()) {
                out.gamma = 0;
            } else {
                const auto& [ij, val] = *lhs.entries().begin();
                const Rational denom = e_max.get(ij.first, ij.second) * pairing;
                if (denom == 0) throw Error("adjoint identity: inconsistent gamma");
                out.gamma = val / denom;
            }
            found = true;
        }
        if (lhs != e_max * (out.gamma * pairing)) throw Error("adjoint identity: inconsistent gamma");
    }
    if (!found) throw InvariantError("Killing form vanishes on the highest-root line");
    return out;
}

inline Rational adjoint_identity_coefficient(const MatrixLieAlgebra& L) {
    return make_adjoint_identity(L).gamma;
}

/// The Example's quadratic condition on an arbitrary vector of the adjoint
/// module: [v, [v, u]] = gamma K(v, u) v for every basis u of g.
inline bool adjoint_condition(const MatrixLieAlgebra& L, const AdjointIdentity& adj,
                              const RMatrix& v) {
    RMatrix vg(L.rep.dim, L.rep.dim);
    for (std::size_t k = 0; k < L.rep.dim; ++k)
        if (v.get(k, 0) != 0) vg = vg + adj.phi[k] * v.get(k, 0);
    for (std::size_t k = 0; k < L.rep.dim; ++k) {
        const RMatrix lhs = commutator(vg, commutator(vg, adj.phi[k]));
        if (lhs != vg * (adj.gamma * L.killing_form(vg, adj.phi[k]))) return false;
    }
    return true;
}

} // namespace liequad
