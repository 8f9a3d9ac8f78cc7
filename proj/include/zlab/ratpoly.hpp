#pragma once

#include "zlab/rational.hpp"

#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace zlab {

// Univariate polynomial over a scalar field K (exact rationals by default,
// double for the fast search path), coeffs[i] = coefficient of x^i. Stored
// trimmed: empty vector is the zero polynomial, otherwise the leading
// coefficient is nonzero.
template <typename K>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<K> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<K> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly constant(K c)
    {
        Poly p;
        if (c != K(0)) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static Poly monomial(size_t k, K c = K(1))
    {
        Poly p;
        if (c != K(0)) {
            p.coeffs_.assign(k + 1, K(0));
            p.coeffs_[k] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<K>& coeffs() const { return coeffs_; }

    K coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }

    // Horner evaluation; exact when K is exact.
    K operator()(const K& x) const
    {
        K acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly derivative() const
    {
        std::vector<K> d;
        for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * K(int(i)));
        return Poly(std::move(d));
    }

    // Antiderivative with zero constant term: x^i -> x^{i+1}/(i+1).
    Poly antiderivative() const
    {
        if (is_zero()) return {};
        std::vector<K> a(coeffs_.size() + 1, K(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / K(int(i) + 1);
        return Poly(std::move(a));
    }

    // Integral over [0,1]: sum c_i/(i+1).
    K integral01() const
    {
        K acc(0);
        for (size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] / K(int(i) + 1);
        return acc;
    }

    // this(inner(x)) by Horner over polynomials.
    Poly compose(const Poly& inner) const
    {
        Poly acc;
        for (size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * inner + constant(coeffs_[i]);
        return acc;
    }

    friend Poly operator+(const Poly& l, const Poly& r)
    {
        std::vector<K> c(std::max(l.coeffs_.size(), r.coeffs_.size()), K(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = l.coeff(i) + r.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& l, const Poly& r)
    {
        std::vector<K> c(std::max(l.coeffs_.size(), r.coeffs_.size()), K(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = l.coeff(i) - r.coeff(i);
        return Poly(std::move(c));
    }

    Poly operator-() const
    {
        std::vector<K> c(coeffs_);
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& l, const Poly& r)
    {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<K> c(l.coeffs_.size() + r.coeffs_.size() - 1, K(0));
        for (size_t i = 0; i < l.coeffs_.size(); ++i)
            for (size_t j = 0; j < r.coeffs_.size(); ++j)
                c[i + j] += l.coeffs_[i] * r.coeffs_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& p)
    {
        std::vector<K> c(p.coeffs_);
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& p, const K& s) { return s * p; }

    Poly& operator+=(const Poly& r) { return *this = *this + r; }
    Poly& operator-=(const Poly& r) { return *this = *this - r; }
    Poly& operator*=(const Poly& r) { return *this = *this * r; }

    bool operator==(const Poly&) const = default;

    // "[c0, c1, ...]"
    std::string to_string() const
    {
        std::ostringstream out;
        out << "[";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out << ", ";
            out << coeffs_[i];
        }
        out << "]";
        return out.str();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

using RatPoly = Poly<Rat>;

template <typename To, typename From>
Poly<To> poly_cast(const Poly<From>& p)
{
    std::vector<To> c;
    c.reserve(p.coeffs().size());
    for (const From& v : p.coeffs()) c.push_back(static_cast<To>(v));
    return Poly<To>(std::move(c));
}

// Constrained bases for the free mollifier polynomials. The constraints are
// built into the parameterization so any coefficient vector yields an
// admissible polynomial.
enum class PBasis {
    section2_p1,  // x + x(1-x) sum c_k x^k      : value 0 at 0, 1 at 1
    section2_p2,  // x * sum c_k x^k             : value 0 at 0
    section3_p,   // same shape as section2_p1
};

inline RatPoly p_basis(PBasis kind, std::span<const Rat> c)
{
    const RatPoly x = RatPoly::monomial(1);
    RatPoly inner;
    for (size_t k = 0; k < c.size(); ++k) inner += RatPoly::monomial(k, c[k]);
    switch (kind) {
    case PBasis::section2_p1:
    case PBasis::section3_p: {
        const RatPoly x1mx{Rat(0), Rat(1), Rat(-1)};  // x(1-x)
        return x + x1mx * inner;
    }
    case PBasis::section2_p2:
        return x * inner;
    }
    return {};
}

inline RatPoly p_basis(PBasis kind, std::initializer_list<Rat> c)
{
    return p_basis(kind, std::span<const Rat>(c.begin(), c.size()));
}

// Q(x) = 1 + int_0^x sum_k d_k (u(1-u))^k du. By construction Q(0) = 1, and
// Q'(x) = Q'(1-x) holds as a polynomial identity since u(1-u) is symmetric
// about u = 1/2.
inline RatPoly q_basis(std::span<const Rat> d)
{
    const RatPoly u1mu{Rat(0), Rat(1), Rat(-1)};
    RatPoly integrand, pw = RatPoly::constant(Rat(1));
    for (size_t k = 0; k < d.size(); ++k) {
        integrand += d[k] * pw;
        pw *= u1mu;
    }
    return RatPoly::constant(Rat(1)) + integrand.antiderivative();
}

inline RatPoly q_basis(std::initializer_list<Rat> d)
{
    return q_basis(std::span<const Rat>(d.begin(), d.size()));
}

} // namespace zlab
