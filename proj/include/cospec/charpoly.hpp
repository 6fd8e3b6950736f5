#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/bigint.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// Exact characteristic polynomial det(xI - A) of an adjacency matrix.
// coeffs[i] is the coefficient of x^i; length order+1; always monic.
// Equality of two CharPoly values of the same degree is cospectrality.
struct CharPoly {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

    // Report form: coefficients from x^n down to x^0, space separated.
    std::string to_display_string() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (!out.empty()) out.push_back(' ');
            out += coeffs[static_cast<size_t>(i)].str();
        }
        return out;
    }

    // Canonical byte serialization used as a hash/map key: degree, then each
    // coefficient from x^n down to x^0 as sign byte + magnitude length +
    // magnitude bytes (big endian).
    std::string serialize_key() const {
        std::string out;
        out.push_back(static_cast<char>(degree() & 0xff));
        for (int i = degree(); i >= 0; --i) {
            const Int& c = coeffs[static_cast<size_t>(i)];
            out.push_back(c < 0 ? '-' : (c > 0 ? '+' : '0'));
            Int mag = c < 0 ? Int(-c) : c;
            std::string bytes;
            while (mag > 0) {
                bytes.push_back(static_cast<char>(static_cast<unsigned>(mag & 0xff)));
                mag >>= 8;
            }
            out.push_back(static_cast<char>(bytes.size() & 0xff));
            out.append(bytes.rbegin(), bytes.rend());
        }
        return out;
    }
};

// Faddeev-LeVerrier over exact integers. The division at step k is by k and
// is provably exact for an integer matrix, so no rounding can occur. The
// matrix products exploit the 0/1 adjacency structure: a row of A*M is the
// sum of M's rows over the neighborhood.
inline CharPoly char_poly(const Graph& g) {
    const int n = g.order();
    CharPoly p;
    p.coeffs.assign(static_cast<size_t>(n) + 1, Int(0));
    p.coeffs[static_cast<size_t>(n)] = 1;
    if (n == 0) return p;

    // M starts as the identity; each step: AM = A*M, c_k = -tr(AM)/k,
    // M = AM + c_k * I.
    std::vector<Int> M(static_cast<size_t>(n) * n, Int(0));
    std::vector<Int> AM(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;

    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            Int* out = &AM[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) out[j] = 0;
            std::uint64_t nb = g.row(i);
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                const Int* src = &M[static_cast<size_t>(u) * n];
                for (int j = 0; j < n; ++j) out[j] += src[j];
            }
        }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[static_cast<size_t>(i) * n + i];
        Int ck = -tr / k;
        p.coeffs[static_cast<size_t>(n - k)] = ck;
        if (k < n) {
            M.swap(AM);
            for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += ck;
        }
    }
    return p;
}

namespace detail {

using Poly = std::vector<Int>;  // coefficient i of x^i; empty = zero

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void poly_add_inplace(Poly& a, const Poly& b, bool negate) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) {
        if (negate)
            a[i] -= b[i];
        else
            a[i] += b[i];
    }
}

}  // namespace detail

// Independent oracle: determinant of the polynomial matrix xI - A by
// expansion along columns with memoization on the surviving row set.
// Used only by tests; refuses n > 10.
inline CharPoly char_poly_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("char_poly_oracle: refused for n > 10");
    CharPoly p;
    if (n == 0) {
        p.coeffs = {Int(1)};
        return p;
    }

    using detail::Poly;
    // entry(i,j) of xI - A
    auto entry = [&](int i, int j) -> Poly {
        if (i == j) return Poly{Int(0), Int(1)};
        if (g.has_edge(i, j)) return Poly{Int(-1)};
        return {};
    };

    std::vector<Poly> memo(size_t{1} << n);
    std::vector<bool> done(size_t{1} << n, false);
    memo[0] = Poly{Int(1)};
    done[0] = true;

    auto self = [&](auto&& rec, std::uint32_t rows) -> const Poly& {
        if (done[rows]) return memo[rows];
        const int col = n - std::popcount(rows);
        Poly det;
        int sign = 1;
        std::uint32_t m = rows;
        while (m) {
            const int i = std::countr_zero(m);
            m &= m - 1;
            Poly e = entry(i, col);
            if (!e.empty()) {
                Poly term = detail::poly_mul(e, rec(rec, rows & ~(std::uint32_t{1} << i)));
                detail::poly_add_inplace(det, term, sign < 0);
            }
            sign = -sign;
        }
        memo[rows] = std::move(det);
        done[rows] = true;
        return memo[rows];
    };

    Poly d = self(self, (std::uint32_t{1} << n) - 1);
    p.coeffs.assign(static_cast<size_t>(n) + 1, Int(0));
    for (size_t i = 0; i < d.size() && i <= static_cast<size_t>(n); ++i) p.coeffs[i] = d[i];
    return p;
}

// Different orders compare as not cospectral.
inline bool cospectral(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) return false;
    return char_poly(g1) == char_poly(g2);
}

}  // namespace cospec
