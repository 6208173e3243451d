#include <catch2/catch_amalgamated.hpp>

#include "liequad/hwmodule.hpp"

using namespace liequad;

namespace {

const std::vector<std::pair<std::string, Weight>> kEntries = {
    {"A1", Weight({1})},    {"A1", Weight({2})},       {"A2", Weight({1, 0})},
    {"A2", Weight({1, 1})}, {"A3", Weight({0, 1, 0})}, {"A3", Weight({1, 0, 1})},
    {"B2", Weight({1, 0})}, {"B2", Weight({0, 1})},    {"G2", Weight({1, 0})},
};

RepModule build(const std::string& type, const Weight& lambda) {
    return build_module(build_root_system(type), lambda);
}

RMatrix ad_power(const RMatrix& x, const RMatrix& y, int n) {
    RMatrix out = y;
    for (int k = 0; k < n; ++k) out = commutator(x, out);
    return out;
}

} // namespace

TEST_CASE("sl2 fundamental module by hand") {
    auto rep = build("A1", Weight({1}));
    CHECK(rep.dim == 2);
    CHECK(rep.basis_weights == std::vector<Weight>{Weight({1}), Weight({-1})});
    CHECK(rep.H[0] == RMatrix::from_rows({{1, 0}, {0, -1}}));
    CHECK(rep.E[0] == RMatrix::from_rows({{0, 1}, {0, 0}}));
    CHECK(rep.F[0] == RMatrix::from_rows({{0, 0}, {1, 0}}));
}

TEST_CASE("trivial module") {
    auto rep = build("A1", Weight({0}));
    CHECK(rep.dim == 1);
    CHECK(rep.E[0].is_zero());
    CHECK(rep.F[0].is_zero());
    CHECK(rep.H[0].is_zero());
}

TEST_CASE("sl2 adjoint module") {
    auto rep = build("A1", Weight({2}));
    CHECK(rep.dim == 3);
    CHECK(rep.H[0] == RMatrix::from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
    // F walks the word basis with unit coefficients; E carries the string
    // coefficients 2, 2 of the unnormalized basis.
    CHECK(rep.F[0] == RMatrix::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(rep.E[0] == RMatrix::from_rows({{0, 2, 0}, {0, 0, 2}, {0, 0, 0}}));
}

TEST_CASE("A3 six dimensional module") {
    auto rs = build_root_system(Series::A, 3);
    auto rep = build_module(rs, Weight({0, 1, 0}));
    CHECK(rep.dim == 6);
    std::map<Weight, long long> counted;
    for (const auto& w : rep.basis_weights) counted[w]++;
    CHECK(counted == freudenthal_multiplicities(rs, Weight({0, 1, 0})));
}

TEST_CASE("dimension cap") {
    auto rs = build_root_system(Series::A, 3);
    CHECK_THROWS_AS(build_module(rs, Weight({1, 1, 1}), 63), DimensionCapError);
    CHECK(build_module(rs, Weight({1, 1, 1}), 64).dim == 64);
    CHECK_THROWS(build_module(rs, Weight({-1, 0, 0})));
}

TEST_CASE("generator relations") {
    for (const auto& [type, lambda] : kEntries) {
        auto rs = build_root_system(type);
        auto rep = build_module(rs, lambda);
        INFO(type << " " << weight_str(lambda));

        CHECK(rep.dim == weyl_dim(rs, lambda));
        std::map<Weight, long long> counted;
        for (const auto& w : rep.basis_weights) counted[w]++;
        CHECK(counted == freudenthal_multiplicities(rs, lambda));

        // highest weight vector is killed by every raising operator
        for (int i = 0; i < rs.rank; ++i) CHECK(rep.E[i].col(0).is_zero());

        for (int i = 0; i < rs.rank; ++i) {
            // H is diagonal with the basis weights
            for (std::size_t k = 0; k < rep.dim; ++k)
                CHECK(rep.H[i].get(k, k) == rep.basis_weights[k].coords[i]);
            for (int j = 0; j < rs.rank; ++j) {
                RMatrix ef = commutator(rep.E[i], rep.F[j]);
                if (i == j)
                    CHECK(ef == rep.H[i]);
                else
                    CHECK(ef.is_zero());
                CHECK(commutator(rep.H[i], rep.E[j]) == rep.E[j] * Rational(rs.cartan[j][i]));
                CHECK(commutator(rep.H[i], rep.F[j]) == rep.F[j] * Rational(-rs.cartan[j][i]));
            }
        }
    }
}

TEST_CASE("serre relations") {
    for (const auto& [type, lambda] : kEntries) {
        auto rs = build_root_system(type);
        auto rep = build_module(rs, lambda);
        INFO(type << " " << weight_str(lambda));
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) {
                if (i == j) continue;
                const int n = 1 - rs.cartan[j][i];
                CHECK(ad_power(rep.E[i], rep.E[j], n).is_zero());
                CHECK(ad_power(rep.F[i], rep.F[j], n).is_zero());
            }
    }
}

TEST_CASE("irreducibility witness") {
    for (const auto& [type, lambda] : kEntries) {
        auto rep = build(type, lambda);
        INFO(type << " " << weight_str(lambda));
        // smallest subspace containing v0 and closed under all F_i
        RowSpan span(rep.dim);
        RMatrix v0(rep.dim, 1);
        v0.set(0, 0, 1);
        std::vector<RMatrix> frontier = {v0};
        span.add(v0);
        while (!frontier.empty()) {
            std::vector<RMatrix> next;
            for (const auto& v : frontier)
                for (const auto& f : rep.F) {
                    RMatrix fv = f * v;
                    if (!fv.is_zero() && span.add(fv)) next.push_back(fv);
                }
            frontier = std::move(next);
        }
        CHECK(span.size() == rep.dim);
    }
}

TEST_CASE("contravariant gram matrices") {
    for (const auto& [type, lambda] : kEntries) {
        auto rep = build(type, lambda);
        INFO(type << " " << weight_str(lambda));
        for (const auto& [w, g] : rep.contravariant_grams) {
            CHECK(g == g.transpose());
            // positive leading principal minors, checked through the
            // recursive pivot products of the elimination
            const std::size_t n = g.rows();
            for (std::size_t k = 1; k <= n; ++k) {
                RMatrix minor(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) minor.set(a, b, g.get(a, b));
                // det > 0 iff the product of elimination pivots is positive
                auto dense = minor.to_dense();
                Rational det = 1;
                for (std::size_t col = 0; col < k; ++col) {
                    std::size_t piv = col;
                    while (piv < k && dense[piv][col] == 0) ++piv;
                    REQUIRE(piv < k);
                    if (piv != col) {
                        std::swap(dense[piv], dense[col]);
                        det = -det;
                    }
                    det *= dense[col][col];
                    for (std::size_t r = col + 1; r < k; ++r) {
                        if (dense[r][col] == 0) continue;
                        Rational fac = dense[r][col] / dense[col][col];
                        for (std::size_t c2 = col; c2 < k; ++c2) dense[r][c2] -= fac * dense[col][c2];
                    }
                }
                CHECK(det > 0);
            }
        }
    }
}
