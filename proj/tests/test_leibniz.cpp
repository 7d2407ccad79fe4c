#include "doctest.h"

#include "courantkit/leibniz.hpp"
#include "courantkit/prng.hpp"
#include "courantkit/subspace.hpp"

using namespace courantkit;
using namespace courantkit::leibniz;

namespace {

LeibnizAlgebra dim2_square() {
    // [x,x] = y, all other brackets zero; a valid non-Lie Leibniz algebra
    Tensor b({2, 2, 2});
    b.at({0, 0, 1}) = 1;
    return {2, b};
}

LeibnizAlgebra broken_skew3() {
    // skew bracket [e1,e2]=e3, [e1,e3]=e3, [e2,e3]=e1: fails Leibniz at (0,1,2)
    Tensor b({3, 3, 3});
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        b.at({i, j, k}) = 1;
        b.at({j, i, k}) = -1;
    };
    set(0, 1, 2);
    set(0, 2, 2);
    set(1, 2, 0);
    return {3, b};
}

Cochain random_cochain(Prng& rng, std::size_t k, std::size_t g, std::size_t m) {
    Cochain c(k, g, m);
    for (auto& x : c.value.entries()) x = rng.rational();
    return c;
}

}  // namespace

TEST_SUITE("leibniz") {

TEST_CASE("check_leibniz examples") {
    CHECK(check_leibniz(LeibnizAlgebra::abelian(3)).ok());

    const auto sq = dim2_square();
    CHECK(check_leibniz(sq).ok());
    CHECK(!is_skew(sq.bracket));  // non-Lie: [x,x] = y != 0

    const auto bad = broken_skew3();
    auto rep = check_leibniz(bad);
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front().where == std::vector<std::size_t>{0, 1, 2});
    // the residual at (e1,e2,e3) is -e1
    const auto res = leibniz_residual(bad, basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2));
    CHECK(res[0] == Rational(-1));
    CHECK(res[1] == Rational(0));
    CHECK(res[2] == Rational(0));
}

TEST_CASE("check_rep: canonical gl(V) modules and a broken right action") {
    const PointFiber pf(2);
    const auto gl = gl_algebra(pf);
    REQUIRE(check_leibniz(gl).ok());

    CHECK(check_rep(gl, LeibnizRep::trivial(gl.dim, 3)).ok());
    CHECK(check_rep(gl, vector_module(pf)).ok());
    CHECK(check_rep(gl, jet_module(pf)).ok());

    // right action +A instead of -A: the third axiom breaks
    LeibnizRep badrep = vector_module(pf);
    for (auto& x : badrep.right.entries()) x = -x;
    auto rep = check_rep(gl, badrep);
    REQUIRE(!rep.ok());
    bool third = false;
    for (const auto& v : rep.violations) third |= v.what == "r_g2 l_g1 = -r_g2 r_g1";
    CHECK(third);
}

TEST_CASE("coboundary squares to zero on random cochains, both modules") {
    const PointFiber pf(2);
    const auto gl = gl_algebra(pf);
    Prng rng(2024);
    using ModuleCtor = LeibnizRep (*)(const PointFiber&);
    for (ModuleCtor rep : {ModuleCtor(&vector_module), ModuleCtor(&jet_module)}) {
        const LeibnizRep r = rep(pf);
        for (std::size_t k = 0; k <= 2; ++k)
            for (int trial = 0; trial < 5; ++trial) {
                Cochain c = random_cochain(rng, k, gl.dim, r.module_dim);
                CHECK(coboundary(gl, r, coboundary(gl, r, c)).value.is_zero());
            }
    }
}

TEST_CASE("degree-0 coboundary: abelian algebra, trivial rep") {
    const auto alg = LeibnizAlgebra::abelian(2);
    const auto rep = LeibnizRep::trivial(2, 3);
    Cochain v(0, 2, 3);
    v.value.at({0}) = 5;
    v.value.at({2}) = Rational(1, 3);
    CHECK(coboundary(alg, rep, v).value.is_zero());
}

TEST_CASE("coboundary matrix is the linearization of the formula") {
    const PointFiber pf(2);
    const auto gl = gl_algebra(pf);
    const auto rep = jet_module(pf);
    Prng rng(17);
    for (std::size_t k = 0; k <= 2; ++k) {
        const Matrix mat = coboundary_matrix(gl, rep, k);
        CHECK(mat.rows() == rep.module_dim * pow_sz(gl.dim, k + 1));
        CHECK(mat.cols() == rep.module_dim * pow_sz(gl.dim, k));
        for (int trial = 0; trial < 3; ++trial) {
            const Cochain c = random_cochain(rng, k, gl.dim, rep.module_dim);
            const Cochain dc = coboundary(gl, rep, c);
            CHECK(mat.apply(c.value.entries()) == dc.value.entries());
        }
        // composing consecutive matrices gives zero
        const Matrix next = coboundary_matrix(gl, rep, k + 1);
        CHECK((next * mat).is_zero());
    }
}

TEST_CASE("coboundary matrix dimensions and abelian k=0 case") {
    const auto alg = LeibnizAlgebra::abelian(3);
    const auto rep = LeibnizRep::trivial(3, 2);
    const Matrix m0 = coboundary_matrix(alg, rep, 0);
    CHECK(m0.rows() == 2 * 3);
    CHECK(m0.cols() == 2);
    CHECK(m0.is_zero());
}

TEST_CASE("cohomology dimensions") {
    SUBCASE("abelian algebra, trivial rep, k=1: all one-cochains are classes") {
        const auto alg = LeibnizAlgebra::abelian(2);
        const auto rep = LeibnizRep::trivial(2, 3);
        CHECK(cohomology_dim(alg, rep, 1) == 2 * 3);
        CHECK(cohomology_dim(alg, rep, 0) == 3);
    }
    SUBCASE("gl(V) with the canonical modules") {
        // Regression constants fixed by the brute-force elimination oracle
        // before the build: at n = 2 the jet-type module has
        // HL^0 = 2 (the right action vanishes), HL^1 = 0, HL^2 = 0,
        // and the vector-type module has HL^0 = HL^1 = HL^2 = 0.
        const PointFiber pf(2);
        const auto gl = gl_algebra(pf);
        const auto jet = jet_module(pf);
        CHECK(cohomology_dim(gl, jet, 0) == 2);
        CHECK(cohomology_dim(gl, jet, 1) == 0);
        CHECK(cohomology_dim(gl, jet, 2) == 0);
        const auto vec = vector_module(pf);
        CHECK(cohomology_dim(gl, vec, 0) == 0);
        CHECK(cohomology_dim(gl, vec, 1) == 0);
        CHECK(cohomology_dim(gl, vec, 2) == 0);
    }
}

TEST_CASE("hat map") {
    const PointFiber pf(2);
    const auto gl = gl_algebra(pf);
    const auto jet = jet_module(pf);
    const auto vec = vector_module(pf);
    Prng rng(31);

    SUBCASE("zero maps to zero and hat is linear in the matrix sense") {
        Cochain zero(2, gl.dim, 2);
        CHECK(hat(pf, zero).value.is_zero());
        const Matrix hm = hat_matrix(pf);
        for (int trial = 0; trial < 4; ++trial) {
            const Cochain theta = random_cochain(rng, 2, gl.dim, 2);
            CHECK(hm.apply(theta.value.entries()) == hat(pf, theta).value.entries());
        }
    }

    SUBCASE("coboundaries hat to cocycles") {
        for (int trial = 0; trial < 5; ++trial) {
            const Cochain b = random_cochain(rng, 1, gl.dim, 2);
            const Cochain theta = coboundary(gl, jet, b);
            CHECK(coboundary(gl, vec, hat(pf, theta)).value.is_zero());
        }
    }

    SUBCASE("a non-cocycle hats to a non-cocycle") {
        bool found = false;
        for (int trial = 0; trial < 50 && !found; ++trial) {
            const Cochain theta = random_cochain(rng, 2, gl.dim, 2);
            if (coboundary(gl, jet, theta).value.is_zero()) continue;
            CHECK(!coboundary(gl, vec, hat(pf, theta)).value.is_zero());
            found = true;
        }
        CHECK(found);
    }

    SUBCASE("closedness lemma at subspace level") {
        // ker(d_2 on the jet complex) maps exactly onto
        // ker(d_3 on the vector complex) intersected with image(hat).
        const Matrix d2 = coboundary_matrix(gl, jet, 2);
        const Matrix d3 = coboundary_matrix(gl, vec, 3);
        const Matrix hm = hat_matrix(pf);
        const Subspace ker2 = Subspace::kernel_of(d2);
        Matrix mapped(ker2.dim(), hm.rows());
        for (std::size_t i = 0; i < ker2.dim(); ++i) {
            const auto img = hm.apply(ker2.basis_vector(i));
            for (std::size_t j = 0; j < hm.rows(); ++j) mapped(i, j) = img[j];
        }
        const Subspace lhs = Subspace::from_rows(mapped);
        const Subspace rhs =
            Subspace::kernel_of(d3).intersect(Subspace::from_rows(hm.transpose()));
        CHECK(lhs == rhs);
        // hat is injective, so it is a bijection onto its image
        CHECK(rank_checked(hm) == hm.cols());
    }
}

}  // TEST_SUITE
