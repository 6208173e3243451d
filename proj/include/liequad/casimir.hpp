#pragma once

#include <vector>

#include "liequad/liealgebra.hpp"

namespace liequad {

/**
 * The equivariant projector on End(V) attached to rho(g), in its dual-basis
 * closed form: pi(A) = sum_a tr(A x^a) x_a. End(V)* is identified with
 * End(V) through the trace pairing, which makes the four-map composition
 * collapse to this formula.
 */
inline RMatrix pi_apply(const MatrixLieAlgebra& L, const RMatrix& A) {
    const std::size_t n = L.rep.dim;
    if (A.rows() != n || A.cols() != n) throw Error("pi_apply: shape mismatch");
    RMatrix out(n, n);
    for (std::size_t a = 0; a < L.dimension(); ++a) {
        const Rational c = trace_product(A, L.dual_basis[a]);
        if (c != 0) out = out + L.basis[a] * c;
    }
    return out;
}

/// pi applied to the rank-one matrix v * a without materializing it:
/// tr(v a X) = a X v.
inline RMatrix pi_apply_rank_one(const MatrixLieAlgebra& L, const RMatrix& v, const RMatrix& a) {
    const std::size_t n = L.rep.dim;
    if (v.rows() != n || v.cols() != 1 || a.rows() != 1 || a.cols() != n)
        throw Error("pi_apply_rank_one: shape mismatch");
    RMatrix out(n, n);
    for (std::size_t k = 0; k < L.dimension(); ++k) {
        const Rational c = (a * (L.dual_basis[k] * v)).get(0, 0);
        if (c != 0) out = out + L.basis[k] * c;
    }
    return out;
}

/// The projector constant and Casimir eigenvalue for one algebra.
struct ProjectorData {
    Rational c;                   // pi^2 = c pi
    Rational casimir_eigenvalue;  // (lambda, lambda + 2 delta)
};

/**
 * Determines c from the ratio pi(pi(x_1)) : pi(x_1) on the first basis
 * element, then verifies pi^2 = c pi on the whole basis of rho(g) and the
 * proportionality tr(rho x rho y) = c K(x, y) on all basis pairs.
 */
inline ProjectorData make_projector(const MatrixLieAlgebra& L) {
    const RMatrix p1 = pi_apply(L, L.basis[0]);
    const RMatrix p2 = pi_apply(L, p1);
    if (p1.is_zero()) throw InvariantError("pi vanishes on rho(g)");
    const auto& [ij, v1] = *p1.entries().begin();
    const Rational c = p2.get(ij.first, ij.second) / v1;
    if (c == 0) throw InvariantError("projector constant is zero");
    for (std::size_t a = 0; a < L.dimension(); ++a) {
        const RMatrix image = pi_apply(L, L.basis[a]);
        if (pi_apply(L, image) != image * c)
            throw InvariantError("pi^2 = c pi fails on the algebra basis");
    }
    for (std::size_t a = 0; a < L.dimension(); ++a)
        for (std::size_t b = a; b < L.dimension(); ++b)
            if (trace_product(L.basis[a], L.basis[b]) != c * L.killing.get(a, b))
                throw InvariantError("trace form is not c times the Killing form");
    return {c, casimir_eigenvalue(L)};
}

inline Rational pi_constant(const MatrixLieAlgebra& L) { return make_projector(L).c; }

namespace detail {

inline RMatrix vec_to_matrix(const RMatrix& w, std::size_t n) {
    if (w.rows() != n * n || w.cols() != 1) throw Error("tensor vector has wrong length");
    RMatrix m(n, n);
    for (const auto& [ij, v] : w.entries()) m.set(ij.first / n, ij.first % n, v);
    return m;
}

inline RMatrix matrix_to_vec(const RMatrix& m) {
    RMatrix w(m.rows() * m.cols(), 1);
    for (const auto& [ij, v] : m.entries()) w.set(ij.first * m.cols() + ij.second, 0, v);
    return w;
}

} // namespace detail

/**
 * Action on V (x) V of the Casimir operator of the tensor-square
 * representation,
 *   t = sum_a (x_a (x) 1 + 1 (x) x_a)(x^a (x) 1 + 1 (x) x^a),
 * evaluated matrix-free: with w written as the n x n matrix W,
 *   t(W) = Omega W + W Omega^T + sum_a (X_a W X^a^T + X^a W X_a^T).
 * On v0 (x) v0 this acts by (2 lambda + 2 delta, 2 lambda).
 */
inline RMatrix casimir_tensor_apply(const MatrixLieAlgebra& L, const RMatrix& w) {
    const std::size_t n = L.rep.dim;
    const RMatrix W = detail::vec_to_matrix(w, n);
    RMatrix R = L.casimir * W + W * L.casimir.transpose();
    for (std::size_t a = 0; a < L.dimension(); ++a) {
        R = R + L.basis[a] * W * L.dual_basis[a].transpose();
        R = R + L.dual_basis[a] * W * L.basis[a].transpose();
    }
    return detail::matrix_to_vec(R);
}

/// Action of the split Casimir element sum_a x_a (x) x^a, i.e. the tensor
/// avatar of pi itself. Related to casimir_tensor_apply by
///   t = 2 c_lambda + 2 * split on V (x) V.
inline RMatrix casimir_split_apply(const MatrixLieAlgebra& L, const RMatrix& w) {
    const std::size_t n = L.rep.dim;
    const RMatrix W = detail::vec_to_matrix(w, n);
    RMatrix R(n, n);
    for (std::size_t a = 0; a < L.dimension(); ++a)
        R = R + L.basis[a] * W * L.dual_basis[a].transpose();
    return detail::matrix_to_vec(R);
}

/// Dense n^2 x n^2 materializations, guarded by the size threshold.
inline RMatrix casimir_split_dense(const MatrixLieAlgebra& L, std::size_t threshold = 16) {
    const std::size_t n = L.rep.dim;
    if (n > threshold) throw DimensionCapError("dense tensor materialization above threshold");
    RMatrix T(n * n, n * n);
    for (std::size_t a = 0; a < L.dimension(); ++a)
        T = T + kron(L.basis[a], L.dual_basis[a]);
    return T;
}

inline RMatrix casimir_tensor_dense(const MatrixLieAlgebra& L, std::size_t threshold = 16) {
    const std::size_t n = L.rep.dim;
    if (n > threshold) throw DimensionCapError("dense tensor materialization above threshold");
    const RMatrix id = RMatrix::identity(n);
    RMatrix T = kron(L.casimir, id) + kron(id, L.casimir);
    for (std::size_t a = 0; a < L.dimension(); ++a) {
        T = T + kron(L.basis[a], L.dual_basis[a]);
        T = T + kron(L.dual_basis[a], L.basis[a]);
    }
    return T;
}

/// First-slot contraction of a tensor w in V (x) V against a functional a:
/// sum_i a_i w[(i,k)] over the first tensor index.
inline RMatrix contract_first(const RMatrix& w, const RMatrix& a) {
    const std::size_t n = a.cols();
    if (a.rows() != 1 || w.rows() != n * n || w.cols() != 1)
        throw Error("contract_first: shape mismatch");
    RMatrix out(n, 1);
    for (const auto& [ij, v] : w.entries()) {
        const Rational ai = a.get(0, ij.first / n);
        if (ai != 0) out.add_to(ij.first % n, 0, ai * v);
    }
    return out;
}

/**
 * Faulkner's map: the unique z in rho(g) with K(z, rho x) = a(rho(x) v)
 * for all x. Always solvable since the Killing form is nondegenerate.
 */
inline RMatrix faulkner_D(const MatrixLieAlgebra& L, const RMatrix& v, const RMatrix& a) {
    const std::size_t n = L.rep.dim;
    if (v.rows() != n || v.cols() != 1 || a.rows() != 1 || a.cols() != n)
        throw Error("faulkner_D: shape mismatch");
    const std::size_t d = L.dimension();
    RMatrix rhs(d, 1);
    for (std::size_t b = 0; b < d; ++b) rhs.set(b, 0, (a * (L.basis[b] * v)).get(0, 0));
    RMatrix out(n, n);
    for (std::size_t c = 0; c < d; ++c) {
        Rational coeff = 0;
        for (std::size_t b = 0; b < d; ++b) coeff += L.killing_inv.get(c, b) * rhs.get(b, 0);
        if (coeff != 0) out = out + L.basis[c] * coeff;
    }
    return out;
}

/// exp(s X) for nilpotent X as the finite polynomial sum.
inline RMatrix nilpotent_exp(const RMatrix& X, const Rational& s) {
    if (X.rows() != X.cols()) throw Error("nilpotent_exp: non-square matrix");
    RMatrix out = RMatrix::identity(X.rows());
    RMatrix term = RMatrix::identity(X.rows());
    for (std::size_t k = 1; k <= X.rows(); ++k) {
        term = term * X * (s / Rational(k));
        if (term.is_zero()) return out;
        out = out + term;
    }
    throw Error("nilpotent_exp: matrix is not nilpotent");
}

/// Reference implementation of the Aut(pi) membership check, straight from
/// the definition over the rank-one basis of End(V).
inline bool aut_check_definition(const MatrixLieAlgebra& L, const RMatrix& g) {
    const std::size_t n = L.rep.dim;
    if (g.rows() != n || g.cols() != n) throw Error("aut_check: shape mismatch");
    auto ginv = inverse(g);
    if (!ginv) throw Error("aut_check: singular matrix");
    for (std::size_t k = 0; k < n; ++k) {
        const RMatrix gcol = g.col(k);
        for (std::size_t l = 0; l < n; ++l) {
            RMatrix grow(1, n);
            for (std::size_t j = 0; j < n; ++j) grow.set(0, j, ginv->get(l, j));
            // g E_kl g^{-1} = (g e_k)(row l of g^{-1})
            const RMatrix lhs = pi_apply_rank_one(L, gcol, grow);
            RMatrix ekl_row(1, n);
            ekl_row.set(0, l, 1);
            RMatrix ekl_col(n, 1);
            ekl_col.set(k, 0, 1);
            const RMatrix rhs = g * pi_apply_rank_one(L, ekl_col, ekl_row) * *ginv;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/**
 * True iff conjugation by g commutes with pi on all of End(V). Below the
 * dense threshold this is decided through the equivalent condition that
 * kron(g, g) commutes with the split Casimir tensor; above it the
 * definition is checked on the rank-one basis.
 */
inline bool aut_check(const MatrixLieAlgebra& L, const RMatrix& g, std::size_t threshold = 16) {
    const std::size_t n = L.rep.dim;
    if (g.rows() != n || g.cols() != n) throw Error("aut_check: shape mismatch");
    if (!inverse(g)) throw Error("aut_check: singular matrix");
    if (n > threshold) return aut_check_definition(L, g);
    const RMatrix T = casimir_split_dense(L, threshold);
    const RMatrix gg = kron(g, g);
    return gg * T == T * gg;
}

} // namespace liequad
