#pragma once

#include <map>
#include <string>
#include <vector>

#include "bireflect/rational.hpp"

namespace bireflect {

// Univariate polynomial over Q, coefficients lowest degree first.
// Invariant: leading coefficient nonzero unless the zero polynomial
// (empty coefficient vector).
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { prune(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { prune(); }
    explicit Poly(const Rat& constant) : c_{constant} { prune(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly{Rat(1)}; }
    static Poly x() { return Poly{Rat(0), Rat(1)}; }
    // x - r
    static Poly linear_root(const Rat& r) { return Poly{-r, Rat(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    const Rat& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Total order for use as a map key (degree, then coefficients).
    bool operator<(const Poly& o) const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly monic() const;
    // Euclidean division: *this = q * d + r with deg r < deg d.
    void divmod(const Poly& d, Poly& q, Poly& r) const;
    Poly operator/(const Poly& d) const;  // requires exact division
    Poly operator%(const Poly& d) const;
    Poly pow(int e) const;

    std::string str(const std::string& var = "x") const;

  private:
    void prune() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic gcd, or zero if both zero
Poly lcm(const Poly& a, const Poly& b);

// f*(x) = f(0)^{-1} x^d f(1/x); requires f(0) != 0. Monic input gives monic
// output up to the stated normalization.
Poly reciprocal_poly(const Poly& f);
bool is_selfreciprocal(const Poly& f);

// Factorization over Q into irreducible monic factors with multiplicities.
// Square-free decomposition first, then rational roots, direct methods for
// degree <= 3, Kronecker interpolation beyond that.
using Factorization = std::map<Poly, int>;
Factorization factor_rational_poly(const Poly& f);

// Yun square-free decomposition of a nonzero polynomial: returns pairs
// (s_i, i) with f = lead * prod s_i^i and the s_i square-free, coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

}  // namespace bireflect
