#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bireflect/poly.hpp"
#include "bireflect/rational.hpp"

namespace bireflect {

// Dense matrix over Q, row-major. All algorithms are exact pivoted
// elimination; no floating point anywhere.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n);
    static Mat from_cols(const std::vector<Mat>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Mat col(int j) const;
    void set_col(int j, const Mat& v);
    Mat cols_subset(const std::vector<int>& idx) const;
    // [A | B] side by side
    Mat hconcat(const Mat& o) const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& s) const;
    Mat operator-() const { return *this * Rat(-1); }
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Mat transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    Rat trace() const;
    Rat det() const;
    int rank() const;
    std::optional<Mat> inverse() const;
    Mat pow(int e) const;  // negative exponents use the inverse

    // Columns span ker(*this); empty (cols()==0) kernel gives a n x 0 matrix.
    Mat kernel_basis() const;
    // Columns are an exact basis of the column space.
    Mat image_basis() const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

// Solves A X = B exactly; nullopt if inconsistent.
std::optional<Mat> solve(const Mat& A, const Mat& B);

// p(M) by Horner.
Mat poly_at(const Poly& p, const Mat& M);

// det(x I - M), monic, by exact interpolation.
Poly charpoly(const Mat& M);

// Monic minimal polynomial: annihilates M, divides charpoly, minimal degree.
Poly minimal_polynomial(const Mat& M);

struct KernelImageRank {
    Mat kernel;  // columns
    Mat image;   // columns
    int rank;
};
KernelImageRank kernel_image_rank(const Mat& M);

}  // namespace bireflect
