#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liequad/homvariety.hpp"

namespace liequad {

struct NamedCheck {
    std::string name;
    bool pass = false;
};

struct VerifyReport {
    std::vector<NamedCheck> checks;
    std::vector<std::string> notes;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline bool is_adjoint(const MatrixLieAlgebra& L) {
    return L.rep.highest_weight == L.rep.rs.root_to_weight(L.rep.rs.highest_root());
}

namespace checks {

inline std::vector<RMatrix> generator_matrices(const RepModule& rep) {
    std::vector<RMatrix> out;
    for (int i = 0; i < rep.rs.rank; ++i) {
        out.push_back(rep.E[i]);
        out.push_back(rep.F[i]);
        out.push_back(rep.H[i]);
    }
    return out;
}

inline bool module_dimension(const RepModule& rep) {
    return rep.dim == weyl_dim(rep.rs, rep.highest_weight) && rep.basis_weights.size() == rep.dim;
}

inline bool module_weight_multiset(const RepModule& rep) {
    std::map<Weight, long long> counted;
    for (const auto& w : rep.basis_weights) counted[w]++;
    return counted == freudenthal_multiplicities(rep.rs, rep.highest_weight);
}

inline bool module_highest_vector(const RepModule& rep) {
    for (const auto& e : rep.E)
        if (!e.col(0).is_zero()) return false;
    return true;
}

inline bool module_bracket_relations(const RepModule& rep) {
    const int r = rep.rs.rank;
    for (int i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < rep.dim; ++k)
            if (rep.H[i].get(k, k) != rep.basis_weights[k].coords[i]) return false;
        for (int j = 0; j < r; ++j) {
            const RMatrix ef = commutator(rep.E[i], rep.F[j]);
            if (i == j ? ef != rep.H[i] : !ef.is_zero()) return false;
            if (commutator(rep.H[i], rep.E[j]) != rep.E[j] * Rational(rep.rs.cartan[j][i]))
                return false;
            if (commutator(rep.H[i], rep.F[j]) != rep.F[j] * Rational(-rep.rs.cartan[j][i]))
                return false;
        }
    }
    return true;
}

inline bool module_serre_relations(const RepModule& rep) {
    const int r = rep.rs.rank;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            const int n = 1 - rep.rs.cartan[j][i];
            RMatrix e = rep.E[j], f = rep.F[j];
            for (int k = 0; k < n; ++k) {
                e = commutator(rep.E[i], e);
                f = commutator(rep.F[i], f);
            }
            if (!e.is_zero() || !f.is_zero()) return false;
        }
    return true;
}

inline bool module_irreducible(const RepModule& rep) {
    RowSpan span(rep.dim);
    RMatrix v0(rep.dim, 1);
    v0.set(0, 0, 1);
    span.add(v0);
    std::vector<RMatrix> frontier = {v0};
    while (!frontier.empty()) {
        std::vector<RMatrix> next;
        for (const auto& v : frontier)
            for (const auto& f : rep.F) {
                const RMatrix fv = f * v;
                if (!fv.is_zero() && span.add(fv)) next.push_back(fv);
            }
        frontier = std::move(next);
    }
    return span.size() == rep.dim;
}

inline bool algebra_dimension(const MatrixLieAlgebra& L) {
    return L.dimension() == L.rep.rs.dim_g();
}

inline bool algebra_bracket_closed(const MatrixLieAlgebra& L) {
    for (std::size_t a = 0; a < L.dimension(); ++a)
        for (std::size_t b = a + 1; b < L.dimension(); ++b)
            if (!L.contains(commutator(L.basis[a], L.basis[b]))) return false;
    return true;
}

inline bool algebra_killing_invariance(const MatrixLieAlgebra& L) {
    if (L.killing != L.killing.transpose()) return false;
    const std::size_t d = L.dimension();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = y; z < d; ++z) {
                const Rational lhs = L.killing_form(commutator(L.basis[x], L.basis[y]), L.basis[z]);
                const Rational rhs = L.killing_form(L.basis[y], commutator(L.basis[x], L.basis[z]));
                if (lhs + rhs != 0) return false;
            }
    return true;
}

inline bool algebra_dual_basis(const MatrixLieAlgebra& L) {
    for (std::size_t a = 0; a < L.dimension(); ++a)
        for (std::size_t b = 0; b < L.dimension(); ++b)
            if (L.killing_form(L.basis[a], L.dual_basis[b]) != Rational(a == b ? 1 : 0))
                return false;
    return true;
}

inline bool algebra_casimir_scalar(const MatrixLieAlgebra& L) {
    return L.casimir == RMatrix::identity(L.rep.dim) * casimir_eigenvalue(L);
}

inline bool projector_idempotent_on_endv(const MatrixLieAlgebra& L, const Rational& c) {
    const std::size_t n = L.rep.dim;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            RMatrix ekl(n, n);
            ekl.set(k, l, 1);
            const RMatrix once = pi_apply(L, ekl);
            if (pi_apply(L, once) != once * c) return false;
        }
    return true;
}

inline bool projector_image_is_algebra(const MatrixLieAlgebra& L) {
    const std::size_t n = L.rep.dim;
    RowSpan image(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            RMatrix ekl(n, n);
            ekl.set(k, l, 1);
            image.add(pi_apply(L, ekl));
        }
    if (image.size() != L.dimension()) return false;  // rho(g) <= Im pi
    for (const auto& x : L.basis)                     // Im pi <= rho(g)
        if (!image.contains(x)) return false;
    RowSpan algebra(n * n);
    for (const auto& x : L.basis) algebra.add(x);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            RMatrix ekl(n, n);
            ekl.set(k, l, 1);
            if (!algebra.contains(pi_apply(L, ekl))) return false;
        }
    return true;
}

inline bool projector_equivariance(const MatrixLieAlgebra& L, std::uint64_t seed_base,
                                   int trials = 10) {
    const auto generators = generator_matrices(L.rep);
    for (int t = 0; t < trials; ++t) {
        const RMatrix A = sample_matrix(L.rep.dim, seed_base + t);
        for (const auto& y : generators)
            if (pi_apply(L, commutator(y, A)) != commutator(y, pi_apply(L, A))) return false;
    }
    return true;
}

inline bool projector_trace_proportionality(const MatrixLieAlgebra& L, const Rational& c) {
    for (std::size_t a = 0; a < L.dimension(); ++a)
        for (std::size_t b = a; b < L.dimension(); ++b)
            if (trace_product(L.basis[a], L.basis[b]) != c * L.killing.get(a, b)) return false;
    return true;
}

inline bool projector_faulkner(const MatrixLieAlgebra& L, std::uint64_t seed_base, int trials = 6) {
    for (int t = 0; t < trials; ++t) {
        const RMatrix v = sample_vector(L.rep.dim, seed_base + 2 * t);
        const RMatrix a = sample_vector(L.rep.dim, seed_base + 2 * t + 1).transpose();
        if (faulkner_D(L, v, a) != pi_apply(L, v * a)) return false;
    }
    return true;
}

/// Below the dense threshold this is a full operator identity; above it
/// the commutation is checked exactly on seeded sample vectors.
inline bool tensor_commutes_with_action(const MatrixLieAlgebra& L, std::uint64_t seed_base = 0,
                                        std::size_t threshold = 16) {
    const std::size_t n = L.rep.dim;
    const auto generators = generator_matrices(L.rep);
    if (n <= threshold) {
        const RMatrix t = casimir_tensor_dense(L, threshold);
        const RMatrix id = RMatrix::identity(n);
        for (const auto& y : generators)
            if (!commutator(t, kron(y, id) + kron(id, y)).is_zero()) return false;
        return true;
    }
    auto diag_action = [&](const RMatrix& y, const RMatrix& w) {
        const RMatrix W = detail::vec_to_matrix(w, n);
        return detail::matrix_to_vec(y * W + W * y.transpose());
    };
    for (int t = 0; t < 8; ++t) {
        const RMatrix w = sample_vector(n * n, seed_base + t);
        for (const auto& y : generators)
            if (casimir_tensor_apply(L, diag_action(y, w)) !=
                diag_action(y, casimir_tensor_apply(L, w)))
                return false;
    }
    return true;
}

inline bool tensor_highest_eigenvalue(const MatrixLieAlgebra& L) {
    RMatrix v0(L.rep.dim, 1);
    v0.set(0, 0, 1);
    const RMatrix w = kron(v0, v0);
    return casimir_tensor_apply(L, w) == w * lichtenstein_constant(L);
}

inline bool tensor_split_affine_relation(const MatrixLieAlgebra& L, std::uint64_t seed_base,
                                         int trials = 4) {
    const Rational c_lambda = casimir_eigenvalue(L);
    const std::size_t n = L.rep.dim;
    for (int t = 0; t < trials; ++t) {
        const RMatrix w = sample_vector(n * n, seed_base + t);
        if (casimir_tensor_apply(L, w) !=
            w * (2 * c_lambda) + casimir_split_apply(L, w) * Rational(2))
            return false;
    }
    return true;
}

inline bool tensor_convolution(const MatrixLieAlgebra& L, std::uint64_t seed_base,
                               int trials = 10) {
    const std::size_t n = L.rep.dim;
    for (int t = 0; t < trials; ++t) {
        const RMatrix u = sample_vector(n, seed_base + 3 * t);
        const RMatrix a = sample_vector(n, seed_base + 3 * t + 1).transpose();
        const RMatrix v = sample_vector(n, seed_base + 3 * t + 2);
        if (pi_apply(L, u * a) * v != contract_first(casimir_split_apply(L, kron(u, v)), a))
            return false;
    }
    return true;
}

inline bool variety_equation_count(const MatrixLieAlgebra& L, const QuadraticSystem& sys) {
    const std::size_t n = L.rep.dim;
    const unsigned long long sym = n * (n + 1) / 2;
    return sys.forms.size() == sym - weyl_dim(L.rep.rs, L.rep.highest_weight * 2);
}

inline bool variety_forms_shape(const QuadraticSystem& sys) {
    RMatrix v0(sys.dim, 1);
    v0.set(0, 0, 1);
    if (!sys.satisfied_by(v0)) return false;
    for (const auto& q : sys.forms)
        if (q != q.transpose() || q.is_zero()) return false;
    return true;
}

inline bool variety_orbit_members(const MatrixLieAlgebra& L, const QuadraticSystem& sys,
                                  std::uint64_t seed_base, int count = 25) {
    for (int t = 0; t < count; ++t) {
        const RMatrix v = orbit_sample(L, sample_word(L.rep.rs, seed_base + t));
        if (v.is_zero()) return false;
        if (!membership_test(L, v).is_member) return false;
        if (!inner_ideal_test(L, SubspaceData{{v}})) return false;
        if (!sys.satisfied_by(v)) return false;
    }
    return true;
}

/// Designated non-members must fail membership, the inner-ideal test and
/// the emitted forms. Vacuous (true) when the equation system is empty, in
/// which case the orbit closure is the whole space and non-members do not
/// exist.
inline bool variety_nonmember_rejected(const MatrixLieAlgebra& L, const QuadraticSystem& sys) {
    if (sys.forms.empty()) return true;
    const RMatrix v = designated_nonmember(L);
    if (membership_test(L, v).is_member) return false;
    if (inner_ideal_test(L, SubspaceData{{v}})) return false;
    if (sys.satisfied_by(v)) return false;
    return true;
}

inline bool variety_random_equivalence(const MatrixLieAlgebra& L, std::uint64_t seed_base,
                                       int count = 25) {
    for (int t = 0; t < count; ++t) {
        const RMatrix v = sample_vector(L.rep.dim, seed_base + t);
        if (membership_test(L, v).is_member != inner_ideal_test(L, SubspaceData{{v}}))
            return false;
    }
    return true;
}

inline bool variety_scale_invariance(const MatrixLieAlgebra& L, std::uint64_t seed_base,
                                     int count = 5) {
    static const Rational scales[] = {Rational(2), Rational(-1), Rational(5, 3), Rational(-7, 2)};
    for (int t = 0; t < count; ++t) {
        const RMatrix v = sample_vector(L.rep.dim, seed_base + t);
        const bool base = membership_test(L, v).is_member;
        for (const auto& s : scales)
            if (membership_test(L, v * s).is_member != base) return false;
    }
    return true;
}

inline bool variety_orbit_invariance(const MatrixLieAlgebra& L, std::uint64_t seed_base,
                                     int count = 5) {
    const QuadraticSystem sys = emit_equations(L);
    for (int t = 0; t < count; ++t) {
        const auto word = sample_word(L.rep.rs, seed_base + t);
        const RMatrix member = orbit_sample(L, sample_word(L.rep.rs, seed_base + 100 + t));
        if (!membership_test(L, apply_word(L, word, member)).is_member) return false;
        if (!sys.forms.empty()) {
            const RMatrix non = designated_nonmember(L);
            if (membership_test(L, apply_word(L, word, non)).is_member) return false;
        }
    }
    return true;
}

inline bool aut_one_parameter(const MatrixLieAlgebra& L) {
    if (!aut_check(L, RMatrix::identity(L.rep.dim))) return false;
    for (int i = 0; i < L.rep.rs.rank; ++i)
        for (const Rational& s : {Rational(1), Rational(-1), Rational(1, 2)}) {
            if (!aut_check(L, nilpotent_exp(L.rep.E[i], s))) return false;
            if (!aut_check(L, nilpotent_exp(L.rep.F[i], s))) return false;
        }
    return true;
}

/// Deterministically finds a seeded random invertible matrix that fails to
/// normalize rho(g), and requires aut_check to reject it.
inline bool aut_rejects_non_normalizer(const MatrixLieAlgebra& L, std::uint64_t seed) {
    const std::size_t n = L.rep.dim;
    for (std::uint64_t s = seed;; ++s) {
        const RMatrix g = sample_matrix(n, s);
        auto ginv = inverse(g);
        if (!ginv) continue;
        bool normalizes = true;
        for (const auto& x : L.basis)
            if (!L.contains(g * x * *ginv)) {
                normalizes = false;
                break;
            }
        if (normalizes) continue;
        return !aut_check(L, g);
    }
}

inline bool adjoint_example(const MatrixLieAlgebra& L, std::uint64_t seed_base, int samples = 25) {
    const AdjointIdentity adj = make_adjoint_identity(L);
    const QuadraticSystem sys = emit_equations(L);
    for (int t = 0; t < samples; ++t) {
        const RMatrix v = orbit_sample(L, sample_word(L.rep.rs, seed_base + t));
        if (!adjoint_condition(L, adj, v)) return false;
    }
    if (!sys.forms.empty()) {
        const RMatrix non = designated_nonmember(L);
        if (adjoint_condition(L, adj, non)) return false;
        if (membership_test(L, non).is_member) return false;
    }
    return true;
}

} // namespace checks

/**
 * Runs the named invariant suite for one (type, weight) pair. Every check
 * is exact; notes carry non-gating observations (the conjectured closed
 * form of the projector constant).
 */
inline VerifyReport run_invariant_suite(const RootSystemData& rs, const Weight& lambda,
                                        std::size_t max_dim = 64, std::uint64_t seed_base = 77000) {
    VerifyReport report;
    const RepModule rep = build_module(rs, lambda, max_dim);
    auto add = [&](const std::string& name, bool pass) { report.checks.push_back({name, pass}); };

    add("module.dimension", checks::module_dimension(rep));
    add("module.weight_multiset", checks::module_weight_multiset(rep));
    add("module.highest_vector", checks::module_highest_vector(rep));
    add("module.bracket_relations", checks::module_bracket_relations(rep));
    add("module.serre_relations", checks::module_serre_relations(rep));
    add("module.irreducible", checks::module_irreducible(rep));

    const MatrixLieAlgebra L = bracket_closure(rep);
    add("algebra.dimension", checks::algebra_dimension(L));
    add("algebra.bracket_closed", checks::algebra_bracket_closed(L));
    add("algebra.killing_invariance", checks::algebra_killing_invariance(L));
    add("algebra.dual_basis", checks::algebra_dual_basis(L));
    add("algebra.casimir_scalar", checks::algebra_casimir_scalar(L));

    const ProjectorData P = make_projector(L);
    add("projector.constant_nonzero", P.c != 0);
    add("projector.idempotent_on_endv", checks::projector_idempotent_on_endv(L, P.c));
    add("projector.image_is_algebra", checks::projector_image_is_algebra(L));
    add("projector.equivariance", checks::projector_equivariance(L, seed_base + 100));
    add("projector.identity_to_zero", pi_apply(L, RMatrix::identity(rep.dim)).is_zero());
    add("projector.trace_proportionality", checks::projector_trace_proportionality(L, P.c));
    add("projector.faulkner_consistency", checks::projector_faulkner(L, seed_base + 200));

    add("tensor.commutes_with_action", checks::tensor_commutes_with_action(L, seed_base + 250));
    add("tensor.highest_eigenvalue", checks::tensor_highest_eigenvalue(L));
    add("tensor.split_affine_relation", checks::tensor_split_affine_relation(L, seed_base + 300));
    add("tensor.convolution", checks::tensor_convolution(L, seed_base + 400));

    const QuadraticSystem sys = emit_equations(L);
    add("variety.equation_count", checks::variety_equation_count(L, sys));
    add("variety.forms_shape", checks::variety_forms_shape(sys));
    add("variety.orbit_members", checks::variety_orbit_members(L, sys, seed_base + 500));
    add("variety.nonmember_rejected", checks::variety_nonmember_rejected(L, sys));
    add("variety.random_equivalence", checks::variety_random_equivalence(L, seed_base + 600));
    add("variety.scale_invariance", checks::variety_scale_invariance(L, seed_base + 700));
    add("variety.orbit_invariance", checks::variety_orbit_invariance(L, seed_base + 800));

    add("aut.one_parameter", checks::aut_one_parameter(L));

    if (is_adjoint(L)) {
        bool single_gamma = true;
        Rational gamma;
        try {
            gamma = adjoint_identity_coefficient(L);
        } catch (const Error&) {
            single_gamma = false;
        }
        add("adjoint.single_gamma", single_gamma);
        if (single_gamma) {
            add("adjoint.matches_membership", checks::adjoint_example(L, seed_base + 900));
            report.notes.push_back("adjoint gamma = " + rational_str(gamma));
        }
    }

    // Conjecture-level observation, not a requirement: c = dim V * c_lambda / dim g.
    const Rational conjectured =
        Rational(rep.dim) * P.casimir_eigenvalue / Rational(L.dimension());
    report.notes.push_back(std::string("observed c = dimV*c_lambda/dimg: ") +
                           (P.c == conjectured ? "holds" : "fails") + " (c = " + rational_str(P.c) +
                           ", dimV*c_lambda/dimg = " + rational_str(conjectured) + ")");
    return report;
}

} // namespace liequad
