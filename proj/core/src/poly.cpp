#include "bireflect/poly.hpp"

#include <algorithm>
#include <sstream>

namespace bireflect {

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

bool Poly::operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lead());
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
    if (d.is_zero()) throw InternalError("poly division by zero");
    std::vector<Rat> rem(c_);
    std::vector<Rat> quo;
    int dd = d.degree();
    if (degree() >= dd) quo.assign(degree() - dd + 1, Rat(0));
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / d.lead();
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

Poly Poly::operator/(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    if (!r.is_zero()) throw InternalError("inexact poly division");
    return q;
}

Poly Poly::operator%(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return r;
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::one();
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat a = coeff(i);
        if (a == 0) continue;
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        Rat mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return ((a * b) / gcd(a, b)).monic();
}

Poly reciprocal_poly(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) throw InputError("reciprocal_poly: f(0) must be nonzero");
    std::vector<Rat> r(f.coeffs().rbegin(), f.coeffs().rend());
    Poly rev{std::move(r)};
    return rev * (Rat(1) / f.coeff(0));
}

bool is_selfreciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) return false;
    return reciprocal_poly(f) == f;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw InputError("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    Poly p = f.monic();
    if (p.degree() == 0) return out;
    // Yun's algorithm (characteristic zero).
    Poly g = gcd(p, p.derivative());
    Poly w = p / g;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, g);
        Poly s = w / y;
        if (s.degree() > 0) out.emplace_back(s.monic(), i);
        w = y;
        g = g / y;
        ++i;
    }
    return out;
}

namespace {

// Integer content-normalized copy: returns primitive integer coefficients of
// f (times a positive rational unit).
std::vector<Int> primitive_integer_coeffs(const Poly& f) {
    Int den(1);
    for (const Rat& c : f.coeffs()) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Int> z;
    z.reserve(f.coeffs().size());
    Int content(0);
    for (const Rat& c : f.coeffs()) {
        Rat v = c * Rat(den);
        Int n = v.get_num();
        z.push_back(n);
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        content = g;
    }
    if (content == 0) content = 1;
    for (auto& n : z) n /= content;
    if (!z.empty() && sgn(z.back()) < 0)
        for (auto& n : z) n = -n;
    return z;
}

Poly from_int_coeffs(const std::vector<Int>& z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const auto& n : z) c.emplace_back(n);
    return Poly(std::move(c));
}

std::vector<Int> divisors_of(const Int& n) {
    Int a = abs(n);
    if (a == 0) throw InternalError("divisors of zero");
    std::vector<Int> small, large;
    Int d(1);
    while (d * d <= a) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
        ++d;
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Peel all rational roots from a monic polynomial; appends (x - r) factors.
Poly peel_rational_roots(Poly f, Factorization& out, int mult) {
    if (f.degree() < 1) return f;
    for (;;) {
        if (f.degree() < 1) break;
        std::vector<Int> z = primitive_integer_coeffs(f);
        // candidate roots p/q with p | z[0], q | z[deg]
        if (z.front() == 0) {
            out[Poly::x()] += mult;
            f = f / Poly::x();
            continue;
        }
        bool found = false;
        for (const Int& p : divisors_of(z.front())) {
            for (const Int& q : divisors_of(z.back())) {
                Int g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                for (int s : {1, -1}) {
                    Rat r(p * s, q);
                    r.canonicalize();
                    if (f.eval(r) == 0) {
                        out[Poly::linear_root(r)] += mult;
                        f = f / Poly::linear_root(r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    return f;
}

void factor_squarefree(const Poly& f, Factorization& out, int mult);

// Kronecker interpolation: find a nontrivial factor of degree <= max_deg of a
// primitive integer polynomial with no rational roots, or report irreducible.
bool kronecker_split(const Poly& f, Factorization& out, int mult) {
    int n = f.degree();
    // Evaluation points, small magnitudes first to keep divisor sets small.
    std::vector<long> pts = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5};
    for (int d = 2; d <= n / 2; ++d) {
        // choose d+1 points with the fewest divisors
        std::vector<std::pair<size_t, long>> scored;  // (#divisors, point)
        std::vector<std::pair<long, std::vector<Int>>> divs;
        for (long x : pts) {
            Rat v = f.eval(Rat(x));
            if (v == 0) throw InternalError("kronecker: unexpected rational root");
            auto dv = divisors_of(v.get_num());
            scored.emplace_back(dv.size(), x);
            divs.emplace_back(x, std::move(dv));
        }
        std::sort(scored.begin(), scored.end());
        std::vector<long> xs;
        std::vector<std::vector<Int>> cand;
        for (int i = 0; i <= d; ++i) {
            long x = scored[i].second;
            xs.push_back(x);
            for (auto& [px, dv] : divs)
                if (px == x) {
                    std::vector<Int> both;
                    for (const auto& v : dv) {
                        both.push_back(v);
                        both.push_back(-v);
                    }
                    cand.push_back(std::move(both));
                }
        }
        // Lagrange basis polynomials over the chosen points.
        std::vector<Poly> lagrange;
        for (int i = 0; i <= d; ++i) {
            Poly li = Poly::one();
            Rat denom(1);
            for (int j = 0; j <= d; ++j) {
                if (i == j) continue;
                li = li * Poly::linear_root(Rat(xs[j]));
                denom *= Rat(xs[i] - xs[j]);
            }
            lagrange.push_back(li * (Rat(1) / denom));
        }
        // Enumerate divisor tuples.
        std::vector<size_t> idx(d + 1, 0);
        for (;;) {
            Poly g;
            for (int i = 0; i <= d; ++i) g = g + lagrange[i] * Rat(cand[i][idx[i]]);
            if (g.degree() == d) {
                // integer coefficients and exact division
                bool integral = true;
                for (const Rat& c : g.coeffs())
                    if (c.get_den() != 1) {
                        integral = false;
                        break;
                    }
                if (integral) {
                    Poly q, r;
                    f.divmod(g, q, r);
                    if (r.is_zero()) {
                        factor_squarefree(g.monic(), out, mult);
                        factor_squarefree(q.monic(), out, mult);
                        return true;
                    }
                }
            }
            int pos = d;
            while (pos >= 0 && ++idx[pos] == cand[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return false;
}

void factor_squarefree(const Poly& f, Factorization& out, int mult) {
    Poly h = peel_rational_roots(f.monic(), out, mult);
    int n = h.degree();
    if (n <= 0) return;
    if (n <= 3) {
        // no rational root: quadratics and cubics are irreducible, and a
        // linear factor would have been peeled
        out[h] += mult;
        return;
    }
    Poly hz = from_int_coeffs(primitive_integer_coeffs(h));
    if (!kronecker_split(hz, out, mult)) out[h] += mult;
}

}  // namespace

Factorization factor_rational_poly(const Poly& f) {
    if (f.is_zero()) throw InputError("factor_rational_poly: zero polynomial");
    Factorization out;
    for (auto& [s, i] : squarefree_decomposition(f)) factor_squarefree(s, out, i);
    return out;
}

}  // namespace bireflect
