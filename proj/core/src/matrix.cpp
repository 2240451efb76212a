#include "bireflect/matrix.hpp"

#include <sstream>

namespace bireflect {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_cols(const std::vector<Mat>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].rows(), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
    return m;
}

Mat Mat::col(int j) const {
    Mat v(rows_, 1);
    for (int i = 0; i < rows_; ++i) v.at(i, 0) = at(i, j);
    return v;
}

void Mat::set_col(int j, const Mat& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
    Mat m(rows_, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return m;
}

Mat Mat::hconcat(const Mat& o) const {
    Mat m(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
    Mat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Mat Mat::operator*(const Rat& s) const {
    Mat m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Mat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

Rat Mat::trace() const {
    Rat t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

namespace {

// Gaussian elimination to (optionally reduced) row echelon form.
// Returns pivot column indices.
std::vector<int> echelon(Mat& m, bool reduced) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        int lo = reduced ? 0 : r + 1;
        for (int i = lo; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rat Mat::det() const {
    if (!is_square()) throw InternalError("det of non-square matrix");
    Mat m = *this;
    Rat d(1);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(echelon(m, false).size());
}

std::optional<Mat> Mat::inverse() const {
    if (!is_square()) return std::nullopt;
    Mat aug = hconcat(identity(rows_));
    auto piv = echelon(aug, true);
    if (static_cast<int>(piv.size()) != rows_) return std::nullopt;
    Mat inv(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
    return inv;
}

Mat Mat::pow(int e) const {
    if (!is_square()) throw InternalError("pow of non-square matrix");
    Mat base = *this;
    if (e < 0) {
        auto inv = inverse();
        if (!inv) throw InternalError("pow: singular matrix");
        base = *inv;
        e = -e;
    }
    Mat acc = identity(rows_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat Mat::kernel_basis() const {
    Mat m = *this;
    auto piv = echelon(m, true);
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Mat k(cols_, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        k.at(fc, static_cast<int>(j)) = 1;
        for (size_t r = 0; r < piv.size(); ++r) k.at(piv[r], static_cast<int>(j)) = -m.at(static_cast<int>(r), fc);
    }
    return k;
}

Mat Mat::image_basis() const {
    Mat m = *this;
    auto piv = echelon(m, false);
    return cols_subset(piv);
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

std::optional<Mat> solve(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw InternalError("solve shape mismatch");
    Mat aug = A.hconcat(B);
    auto piv = echelon(aug, true);
    // inconsistent if a pivot falls in the B block
    for (int c : piv)
        if (c >= A.cols()) return std::nullopt;
    Mat X(A.cols(), B.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < B.cols(); ++j) X.at(piv[r], j) = aug.at(static_cast<int>(r), A.cols() + j);
    return X;
}

Mat poly_at(const Poly& p, const Mat& M) {
    int n = M.rows();
    Mat acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * M;
        Rat c = p.coeff(i);
        if (c != 0)
            for (int k = 0; k < n; ++k) acc.at(k, k) += c;
    }
    return acc;
}

Poly charpoly(const Mat& M) {
    if (!M.is_square()) throw InputError("charpoly of non-square matrix");
    int n = M.rows();
    // interpolate det(xI - M) at x = 0..n
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= n; ++k) {
        Mat A = Mat::identity(n) * Rat(k) - M;
        xs.emplace_back(k);
        ys.push_back(A.det());
    }
    Poly p;
    for (int i = 0; i <= n; ++i) {
        Poly li = Poly::one();
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            li = li * Poly::linear_root(xs[j]);
            denom *= xs[i] - xs[j];
        }
        p = p + li * (ys[i] / denom);
    }
    if (!p.is_monic() || p.degree() != n) throw InternalError("charpoly interpolation failed");
    return p;
}

Poly minimal_polynomial(const Mat& M) {
    if (!M.is_square()) throw InputError("minimal_polynomial of non-square matrix");
    int n = M.rows();
    if (n == 0) return Poly::one();
    Poly mu = Poly::one();
    for (int s = 0; s < n; ++s) {
        if (mu.degree() == n) break;
        if (mu.degree() > 0 && poly_at(mu, M).is_zero()) break;
        // Krylov chain of e_s: find first dependence
        Mat v(n, 1);
        v.at(s, 0) = 1;
        std::vector<Mat> chain{v};
        for (;;) {
            Mat nxt = M * chain.back();
            Mat K = Mat::from_cols(chain);
            auto c = solve(K, nxt);
            if (c) {
                // nxt = sum c_i chain_i  =>  local minpoly x^k - sum c_i x^i
                std::vector<Rat> coeffs(chain.size() + 1, Rat(0));
                for (size_t i = 0; i < chain.size(); ++i) coeffs[i] = -c->at(static_cast<int>(i), 0);
                coeffs[chain.size()] = 1;
                mu = lcm(mu, Poly(std::move(coeffs)));
                break;
            }
            chain.push_back(nxt);
        }
    }
    if (!poly_at(mu, M).is_zero()) throw InternalError("minimal polynomial does not annihilate");
    return mu.monic();
}

KernelImageRank kernel_image_rank(const Mat& M) {
    KernelImageRank out{M.kernel_basis(), M.image_basis(), 0};
    out.rank = out.image.cols();
    return out;
}

}  // namespace bireflect
