#pragma once

#include "zlab/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace zlab {

// Bivariate polynomial in the formal shift symbols a, b over a scalar field
// K. Zero coefficients are never stored, so equal polynomials have identical
// maps (meaningful when K is exact).
template <typename K>
class BasicBiPoly {
public:
    using Key = std::pair<int, int>;  // (power of a, power of b)

    BasicBiPoly() = default;

    static BasicBiPoly constant(K c)
    {
        BasicBiPoly p;
        p.add_term(0, 0, std::move(c));
        return p;
    }

    static BasicBiPoly monomial(int i, int j, K c)
    {
        BasicBiPoly p;
        p.add_term(i, j, std::move(c));
        return p;
    }

    void add_term(int i, int j, const K& c)
    {
        if (c == K(0)) return;
        auto it = coef_.find({i, j});
        if (it == coef_.end()) {
            coef_.emplace(Key{i, j}, c);
        } else {
            it->second += c;
            if (it->second == K(0)) coef_.erase(it);
        }
    }

    bool is_zero() const { return coef_.empty(); }
    const std::map<Key, K>& terms() const { return coef_; }

    friend BasicBiPoly operator+(const BasicBiPoly& l, const BasicBiPoly& r)
    {
        BasicBiPoly out = l;
        for (const auto& [k, c] : r.coef_) out.add_term(k.first, k.second, c);
        return out;
    }

    friend BasicBiPoly operator-(const BasicBiPoly& l, const BasicBiPoly& r)
    {
        BasicBiPoly out = l;
        for (const auto& [k, c] : r.coef_) out.add_term(k.first, k.second, -c);
        return out;
    }

    BasicBiPoly operator-() const
    {
        BasicBiPoly out;
        for (const auto& [k, c] : coef_) out.coef_.emplace(k, -c);
        return out;
    }

    friend BasicBiPoly operator*(const BasicBiPoly& l, const BasicBiPoly& r)
    {
        BasicBiPoly out;
        for (const auto& [kl, cl] : l.coef_)
            for (const auto& [kr, cr] : r.coef_)
                out.add_term(kl.first + kr.first, kl.second + kr.second, cl * cr);
        return out;
    }

    friend BasicBiPoly operator*(const K& s, const BasicBiPoly& p)
    {
        BasicBiPoly out;
        if (s == K(0)) return out;
        for (const auto& [k, c] : p.coef_) out.coef_.emplace(k, s * c);
        return out;
    }

    friend BasicBiPoly operator*(const BasicBiPoly& p, const K& s) { return s * p; }

    BasicBiPoly& operator+=(const BasicBiPoly& r) { return *this = *this + r; }

    // Partial derivatives with respect to the formal symbols.
    BasicBiPoly deriv_a() const
    {
        BasicBiPoly out;
        for (const auto& [k, c] : coef_)
            if (k.first > 0) out.coef_.emplace(Key{k.first - 1, k.second}, c * K(k.first));
        return out;
    }

    BasicBiPoly deriv_b() const
    {
        BasicBiPoly out;
        for (const auto& [k, c] : coef_)
            if (k.second > 0) out.coef_.emplace(Key{k.first, k.second - 1}, c * K(k.second));
        return out;
    }

    // Substitution (a,b) -> (b,a).
    BasicBiPoly swap_args() const
    {
        BasicBiPoly out;
        for (const auto& [k, c] : coef_) out.coef_.emplace(Key{k.second, k.first}, c);
        return out;
    }

    // Substitution (a,b) -> (-a,-b): monomial a^i b^j picks up (-1)^{i+j}.
    BasicBiPoly negate_args() const
    {
        BasicBiPoly out;
        for (const auto& [k, c] : coef_)
            out.coef_.emplace(k, ((k.first + k.second) % 2) ? -c : c);
        return out;
    }

    K eval(const K& a, const K& b) const
    {
        K acc(0);
        for (const auto& [k, c] : coef_) {
            K term = c;
            for (int i = 0; i < k.first; ++i) term *= a;
            for (int j = 0; j < k.second; ++j) term *= b;
            acc += term;
        }
        return acc;
    }

    bool operator==(const BasicBiPoly&) const = default;

    std::string to_string() const
    {
        if (coef_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, c] : coef_) {
            if (!first) out << " + ";
            first = false;
            out << c;
            if (k.first) out << " a^" << k.first;
            if (k.second) out << " b^" << k.second;
        }
        return out.str();
    }

private:
    std::map<Key, K> coef_;
};

using BiPoly = BasicBiPoly<Rat>;

template <typename To, typename From>
BasicBiPoly<To> bipoly_cast(const BasicBiPoly<From>& p)
{
    BasicBiPoly<To> out;
    for (const auto& [k, c] : p.terms())
        out.add_term(k.first, k.second, static_cast<To>(c));
    return out;
}

} // namespace zlab
