#pragma once

#include "bireflect/matrix.hpp"

namespace bireflect {

// Symmetric bilinear space (V, B) over Q. The ambient space of every
// classified element is nondegenerate; subspaces and restrictions may be
// degenerate and report a radical dimension instead of erroring.
struct QuadSpace {
    int dim = 0;
    Mat gram;  // symmetric dim x dim

    bool nondegenerate() const { return gram.det() != 0; }
};

QuadSpace make_quadspace(Mat gram);  // validates symmetry

// Column-span subspace of an ambient space.
struct Subspace {
    QuadSpace ambient;
    Mat basis;  // ambient.dim x k, independent columns

    int dim() const { return basis.cols(); }
};

Subspace make_subspace(QuadSpace ambient, Mat basis);  // validates independence

struct Signature {
    int p = 0, q = 0, r = 0;  // positive / negative / radical

    int dim() const { return p + q + r; }
    bool nondegenerate() const { return r == 0; }
    bool hyperbolic() const { return r == 0 && p == q; }
    int witt_index() const { return p < q ? p : q; }
    bool operator==(const Signature&) const = default;
};

// Exact symmetric congruence diagonalization.
Signature signature_of(const Mat& gram);
Signature signature_of(const QuadSpace& V);
Signature signature_of(const Subspace& S);

// Sign of det of the (restricted) Gram matrix, i.e. the discriminant in
// R*/R*^2; equals (-1)^q. Degenerate restriction rejected.
int disc_sign(const Mat& gram);
int disc_sign(const QuadSpace& V);
int disc_sign(const Subspace& S);

// B(x, y) in the ambient space (column vectors).
Rat form_value(const QuadSpace& V, const Mat& x, const Mat& y);

Subspace orthogonal_complement(const Subspace& S);
QuadSpace restrict_form(const Subspace& S);

}  // namespace bireflect
