#include "bireflect/quadspace.hpp"

namespace bireflect {

QuadSpace make_quadspace(Mat gram) {
    if (!gram.is_symmetric()) throw InputError("gram matrix must be symmetric");
    QuadSpace V;
    V.dim = gram.rows();
    V.gram = std::move(gram);
    return V;
}

Subspace make_subspace(QuadSpace ambient, Mat basis) {
    if (basis.rows() != ambient.dim) throw InputError("subspace basis has wrong ambient dimension");
    if (basis.rank() != basis.cols()) throw InputError("subspace basis columns must be independent");
    return Subspace{std::move(ambient), std::move(basis)};
}

Signature signature_of(const Mat& gram) {
    if (!gram.is_symmetric()) throw InputError("signature of non-symmetric matrix");
    Mat g = gram;
    int n = g.rows();
    Signature s;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (g.at(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // all remaining diagonal entries vanish; revive one from an
            // off-diagonal entry or stop at the radical
            int a = -1, b = -1;
            for (int i = k; i < n && a < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (g.at(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a < 0) {
                s.r += n - k;
                return s;
            }
            for (int j = 0; j < n; ++j) g.at(a, j) += g.at(b, j);
            for (int i = 0; i < n; ++i) g.at(i, a) += g.at(i, b);
            piv = a;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(g.at(piv, j), g.at(k, j));
            for (int i = 0; i < n; ++i) std::swap(g.at(i, piv), g.at(i, k));
        }
        Rat d = g.at(k, k);
        if (sgn(d) > 0)
            ++s.p;
        else
            ++s.q;
        for (int i = k + 1; i < n; ++i) {
            if (g.at(i, k) == 0) continue;
            Rat f = g.at(i, k) / d;
            for (int j = 0; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
            for (int j = 0; j < n; ++j) g.at(j, i) -= f * g.at(j, k);
        }
    }
    return s;
}

Signature signature_of(const QuadSpace& V) { return signature_of(V.gram); }

Signature signature_of(const Subspace& S) { return signature_of(restrict_form(S).gram); }

int disc_sign(const Mat& gram) {
    Rat d = gram.det();
    if (d == 0) throw InputError("disc_sign of degenerate form");
    return sgn(d);
}

int disc_sign(const QuadSpace& V) { return disc_sign(V.gram); }

int disc_sign(const Subspace& S) { return disc_sign(restrict_form(S).gram); }

Rat form_value(const QuadSpace& V, const Mat& x, const Mat& y) {
    Mat v = x.transpose() * V.gram * y;
    return v.at(0, 0);
}

Subspace orthogonal_complement(const Subspace& S) {
    // x in S^perp  iff  basis^T G x = 0
    Mat constraints = S.basis.transpose() * S.ambient.gram;
    return Subspace{S.ambient, constraints.kernel_basis()};
}

QuadSpace restrict_form(const Subspace& S) {
    QuadSpace V;
    V.dim = S.basis.cols();
    V.gram = S.basis.transpose() * S.ambient.gram * S.basis;
    return V;
}

}  // namespace bireflect
