#include "doctest.h"

#include "bireflect/quadspace.hpp"
#include "bireflect/rng.hpp"

using namespace bireflect;

namespace {

Mat diag(std::initializer_list<long> d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    int i = 0;
    for (long x : d) m.at(i, i) = Rat(x), ++i;
    return m;
}

Mat hyperbolic_plane() {
    Mat h(2, 2);
    h.at(0, 1) = h.at(1, 0) = 1;
    return h;
}

Mat unit_col(int n, int i) {
    Mat v(n, 1);
    v.at(i, 0) = 1;
    return v;
}

}  // namespace

TEST_CASE("signature: stated examples") {
    CHECK(signature_of(diag({1, 1, -1})) == Signature{2, 1, 0});
    CHECK(signature_of(hyperbolic_plane()) == Signature{1, 1, 0});
    CHECK(signature_of(diag({0})) == Signature{0, 0, 1});
    CHECK(signature_of(hyperbolic_plane()).witt_index() == 1);
    CHECK(signature_of(hyperbolic_plane()).hyperbolic());
}

TEST_CASE("disc sign: stated examples") {
    CHECK(disc_sign(diag({1, 1, -1})) == -1);
    // hyperbolic space of dimension 2t has disc (-1)^t
    QuadSpace h2 = make_quadspace(hyperbolic_plane());
    CHECK(disc_sign(h2) == -1);
    Mat h4(4, 4);
    h4.at(0, 1) = h4.at(1, 0) = 1;
    h4.at(2, 3) = h4.at(3, 2) = 1;
    CHECK(disc_sign(h4) == +1);
    CHECK(disc_sign(diag({-2})) == -1);
    CHECK_THROWS_AS(disc_sign(diag({0})), InputError);
}

TEST_CASE("disc_sign equals (-1)^q on nondegenerate spaces") {
    Rng rng(808);
    for (int it = 0; it < 30; ++it) {
        int n = static_cast<int>(rng.uniform(1, 5));
        Mat g(n, n);
        for (int i = 0; i < n; ++i) {
            g.at(i, i) = rng.rat(4);
            for (int j = i + 1; j < n; ++j) g.at(i, j) = g.at(j, i) = rng.rat(4);
        }
        if (g.det() == 0) continue;
        Signature s = signature_of(g);
        CHECK(s.r == 0);
        CHECK(disc_sign(g) == (s.q % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("Sylvester invariance under congruence") {
    Rng rng(1919);
    for (int it = 0; it < 20; ++it) {
        int n = static_cast<int>(rng.uniform(1, 5));
        Mat g(n, n);
        for (int i = 0; i < n; ++i) {
            g.at(i, i) = rng.rat(4);
            for (int j = i + 1; j < n; ++j) g.at(i, j) = g.at(j, i) = rng.rat(4);
        }
        Mat t(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) t.at(i, j) = rng.rat(3);
        } while (t.det() == 0);
        CHECK(signature_of(t.transpose() * g * t) == signature_of(g));
    }
}

TEST_CASE("orthogonal complement: stated examples") {
    QuadSpace e2 = make_quadspace(diag({1, 1}));
    Subspace s = make_subspace(e2, unit_col(2, 0));
    Subspace c = orthogonal_complement(s);
    REQUIRE(c.dim() == 1);
    CHECK(c.basis.at(0, 0) == 0);
    CHECK(c.basis.at(1, 0) != 0);

    // isotropic line in the hyperbolic plane is self-orthogonal
    QuadSpace h = make_quadspace(hyperbolic_plane());
    Subspace iso = make_subspace(h, unit_col(2, 0));
    Subspace isoc = orthogonal_complement(iso);
    REQUIRE(isoc.dim() == 1);
    CHECK(isoc.basis.at(1, 0) == 0);

    // full space -> zero subspace
    Subspace full = make_subspace(h, Mat::identity(2));
    CHECK(orthogonal_complement(full).dim() == 0);
}

TEST_CASE("complement dimensions and double complement on random subspaces") {
    Rng rng(6021);
    for (int it = 0; it < 20; ++it) {
        int n = static_cast<int>(rng.uniform(2, 5));
        Mat g(n, n);
        do {
            for (int i = 0; i < n; ++i) {
                g.at(i, i) = rng.rat(3);
                for (int j = i + 1; j < n; ++j) g.at(i, j) = g.at(j, i) = rng.rat(3);
            }
        } while (g.det() == 0);
        QuadSpace V = make_quadspace(g);
        int k = static_cast<int>(rng.uniform(1, n));
        Mat b(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) b.at(i, j) = rng.rat(2);
        if (b.rank() != k) continue;
        Subspace S = make_subspace(V, b);
        Subspace C = orthogonal_complement(S);
        CHECK(S.dim() + C.dim() == n);
        Subspace CC = orthogonal_complement(C);
        // (S^perp)^perp = S as spans
        CHECK(CC.dim() == S.dim());
        CHECK(S.basis.hconcat(CC.basis).rank() == S.dim());
    }
}

TEST_CASE("restrict_form: stated examples") {
    QuadSpace h = make_quadspace(hyperbolic_plane());
    Mat v(2, 1);
    v.at(0, 0) = v.at(1, 0) = 1;  // e1 + e2
    QuadSpace r = restrict_form(make_subspace(h, v));
    REQUIRE(r.dim == 1);
    CHECK(r.gram.at(0, 0) == 2);

    // a degenerate restriction: span(e1) in the hyperbolic plane
    QuadSpace r0 = restrict_form(make_subspace(h, unit_col(2, 0)));
    CHECK(r0.gram.at(0, 0) == 0);
    CHECK(signature_of(r0) == Signature{0, 0, 1});
}

TEST_CASE("disc multiplicativity over orthogonal sums") {
    Rng rng(140);
    for (int it = 0; it < 20; ++it) {
        int a = static_cast<int>(rng.uniform(1, 3)), b = static_cast<int>(rng.uniform(1, 3));
        Mat g(a + b, a + b);
        auto fill = [&](int off, int n) {
            for (int i = 0; i < n; ++i) {
                g.at(off + i, off + i) = rng.rat(3);
                for (int j = i + 1; j < n; ++j) g.at(off + i, off + j) = g.at(off + j, off + i) = rng.rat(3);
            }
        };
        fill(0, a);
        fill(a, b);
        QuadSpace V;
        V.dim = a + b;
        V.gram = g;
        Mat ga(a, a), gb(b, b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) ga.at(i, j) = g.at(i, j);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) gb.at(i, j) = g.at(a + i, a + j);
        if (ga.det() == 0 || gb.det() == 0) continue;
        CHECK(disc_sign(g) == disc_sign(ga) * disc_sign(gb));
    }
}
