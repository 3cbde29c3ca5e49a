#include "zgz/field.hpp"

#include <algorithm>
#include <numeric>

namespace zgz {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Multiplies two polynomials over F_p (base-p digit encoding) modulo the monic
// polynomial "mod" of degree k (encoded with its leading term).
unsigned poly_mul_mod(unsigned a, unsigned b, unsigned p, unsigned k, unsigned mod) {
    std::vector<unsigned> da, db;
    for (unsigned t = a; t; t /= p) da.push_back(t % p);
    for (unsigned t = b; t; t /= p) db.push_back(t % p);
    std::vector<unsigned> prod(da.size() + db.size(), 0);
    for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;

    // reduce modulo mod: x^k = -(low part of mod)
    std::vector<unsigned> m(k + 1, 0);
    for (unsigned t = mod, i = 0; t; t /= p, ++i) m[i] = t % p;
    for (std::size_t d = prod.size(); d-- > k;) {
        unsigned c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k; ++i) {
            unsigned sub = (c * m[i]) % p;
            prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
        }
    }
    unsigned out = 0;
    for (std::size_t i = std::min<std::size_t>(prod.size(), k); i-- > 0;) out = out * p + prod[i];
    return out;
}

bool poly_irreducible(unsigned mod, unsigned p, unsigned k) {
    // no roots is enough only for k <= 3; use trial division by all monic
    // polynomials of degree <= k/2 (q <= 256 keeps this cheap)
    unsigned q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    for (unsigned d = 1; 2 * d <= k; ++d) {
        unsigned lo = 1, hi = 1;
        for (unsigned i = 0; i < d; ++i) lo *= p;
        hi = lo * p;
        for (unsigned g = lo; g < hi; ++g) {
            // long division of mod by g over F_p
            std::vector<unsigned> rem(k + 1, 0);
            for (unsigned t = mod, i = 0; t; t /= p, ++i) rem[i] = t % p;
            std::vector<unsigned> gd(d + 1, 0);
            for (unsigned t = g, i = 0; t; t /= p, ++i) gd[i] = t % p;
            // invert leading coefficient of g mod p
            unsigned glead = gd[d], glead_inv = 1;
            for (unsigned x = 1; x < p; ++x)
                if (glead * x % p == 1) glead_inv = x;
            for (unsigned deg = k; deg + 1 > d + 1; --deg) {
                unsigned c = rem[deg];
                if (!c) continue;
                unsigned f = c * glead_inv % p;
                for (unsigned i = 0; i <= d; ++i)
                    rem[deg - d + i] = (rem[deg - d + i] + p - f * gd[i] % p) % p;
            }
            bool zero = std::all_of(rem.begin(), rem.end(), [](unsigned v) { return v == 0; });
            if (zero) return false;
        }
    }
    return true;
}

unsigned multiplicative_order(unsigned elem, unsigned p, unsigned k, unsigned mod, unsigned q) {
    unsigned acc = 1, ord = 0;
    do {
        acc = poly_mul_mod(acc, elem, p, k, mod);
        ++ord;
    } while (acc != 1 && ord <= q);
    return acc == 1 ? ord : 0;
}

}  // namespace

Field Field::make(unsigned q) {
    if (q < 2 || q > 256) throw ParamError("field: order must be in [2,256]");
    unsigned p = 0;
    for (unsigned d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned k = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) throw ParamError("field: order is not a prime power");

    Field f;
    f.q_ = q;
    f.p_ = p;
    f.deg_ = k;
    f.add_.assign(static_cast<std::size_t>(q) * q, 0);
    f.mul_.assign(static_cast<std::size_t>(q) * q, 0);
    f.neg_.assign(q, 0);
    f.inv_.assign(q, 0);

    if (k == 1) {
        f.poly_id_ = 0;
        for (unsigned a = 0; a < q; ++a) {
            f.neg_[a] = static_cast<std::uint8_t>((q - a) % q);
            for (unsigned b = 0; b < q; ++b) {
                f.add_[f.idx(a, b)] = static_cast<std::uint8_t>((a + b) % q);
                f.mul_[f.idx(a, b)] = static_cast<std::uint8_t>((a * b) % q);
            }
        }
        for (unsigned a = 1; a < q; ++a)
            for (unsigned b = 1; b < q; ++b)
                if (a * b % q == 1) f.inv_[a] = static_cast<std::uint8_t>(b);
        // smallest generator of the multiplicative group
        f.primitive_ = 1;
        for (unsigned g = 2; g < q; ++g) {
            unsigned acc = 1, ord = 0;
            do {
                acc = acc * g % q;
                ++ord;
            } while (acc != 1);
            if (ord == q - 1) {
                f.primitive_ = static_cast<std::uint8_t>(g);
                break;
            }
        }
        return f;
    }

    // extension field: pick the smallest-encoded monic primitive polynomial
    unsigned mod = 0;
    for (unsigned cand = q; cand < 2 * q; ++cand) {
        if (!poly_irreducible(cand, p, k)) continue;
        if (multiplicative_order(p, p, k, cand, q) == q - 1) {
            mod = cand;
            break;
        }
    }
    if (!mod) throw ParamError("field: no primitive polynomial found");
    f.poly_id_ = mod;
    f.primitive_ = static_cast<std::uint8_t>(p);  // x generates by construction

    for (unsigned a = 0; a < q; ++a) {
        // digit-wise negation / addition
        unsigned na = 0, mulp = 1;
        for (unsigned x = a, i = 0; i < k; ++i, x /= p) {
            na += ((p - x % p) % p) * mulp;
            mulp *= p;
        }
        f.neg_[a] = static_cast<std::uint8_t>(na);
        for (unsigned b = 0; b < q; ++b) {
            unsigned s = 0;
            mulp = 1;
            for (unsigned x = a, y = b, i = 0; i < k; ++i, x /= p, y /= p) {
                s += ((x % p + y % p) % p) * mulp;
                mulp *= p;
            }
            f.add_[f.idx(a, b)] = static_cast<std::uint8_t>(s);
        }
    }
    // exp/log tables for multiplication
    std::vector<unsigned> expt(q - 1);
    std::vector<int> logt(q, -1);
    unsigned acc = 1;
    for (unsigned e = 0; e < q - 1; ++e) {
        expt[e] = acc;
        logt[acc] = static_cast<int>(e);
        acc = poly_mul_mod(acc, p, p, k, mod);
    }
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            if (a == 0 || b == 0) {
                f.mul_[f.idx(a, b)] = 0;
            } else {
                unsigned e = (static_cast<unsigned>(logt[a]) + static_cast<unsigned>(logt[b])) %
                             (q - 1);
                f.mul_[f.idx(a, b)] = static_cast<std::uint8_t>(expt[e]);
            }
        }
    for (unsigned a = 1; a < q; ++a)
        f.inv_[a] = static_cast<std::uint8_t>(
            expt[(q - 1 - static_cast<unsigned>(logt[a])) % (q - 1)]);
    return f;
}

std::uint8_t Field::pow(std::uint8_t a, unsigned e) const {
    std::uint8_t out = 1;
    while (e) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

bool Field::self_check() const {
    const unsigned q = q_;
    for (unsigned a = 0; a < q; ++a) {
        if (add(static_cast<std::uint8_t>(a), 0) != a) return false;
        if (mul(static_cast<std::uint8_t>(a), 1) != a) return false;
        if (add(static_cast<std::uint8_t>(a), neg(static_cast<std::uint8_t>(a))) != 0) return false;
        if (a && mul(static_cast<std::uint8_t>(a), inv(static_cast<std::uint8_t>(a))) != 1)
            return false;
        for (unsigned b = 0; b < q; ++b) {
            const auto ab = static_cast<std::uint8_t>(a), bb = static_cast<std::uint8_t>(b);
            if (add(ab, bb) != add(bb, ab) || add(ab, bb) >= q) return false;
            if (mul(ab, bb) != mul(bb, ab) || mul(ab, bb) >= q) return false;
            for (unsigned c = 0; c < q; ++c) {
                const auto cb = static_cast<std::uint8_t>(c);
                if (add(add(ab, bb), cb) != add(ab, add(bb, cb))) return false;
                if (mul(mul(ab, bb), cb) != mul(ab, mul(bb, cb))) return false;
                if (mul(ab, add(bb, cb)) != add(mul(ab, bb), mul(ab, cb))) return false;
            }
        }
    }
    // primitive element order
    unsigned ord = 0, acc = 1;
    do {
        acc = mul(static_cast<std::uint8_t>(acc), primitive_);
        ++ord;
    } while (acc != 1 && ord <= q);
    return ord == q - 1;
}

FMatrix mat_identity(unsigned n) {
    FMatrix I(n, n);
    for (unsigned i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

FMatrix mat_mul(const Field& f, const FMatrix& A, const FMatrix& B) {
    if (A.cols != B.rows) throw ParamError("mat_mul: shape mismatch");
    FMatrix C(A.rows, B.cols);
    for (unsigned i = 0; i < A.rows; ++i)
        for (unsigned t = 0; t < A.cols; ++t) {
            const std::uint8_t v = A.at(i, t);
            if (!v) continue;
            for (unsigned j = 0; j < B.cols; ++j)
                C.at(i, j) = f.add(C.at(i, j), f.mul(v, B.at(t, j)));
        }
    return C;
}

std::uint8_t det(const Field& f, const FMatrix& A) {
    if (A.rows != A.cols) throw ParamError("det: non-square matrix");
    FMatrix M = A;
    const unsigned n = M.rows;
    std::uint8_t d = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = n;
        for (unsigned r = c; r < n; ++r)
            if (M.at(r, c)) {
                piv = r;
                break;
            }
        if (piv == n) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            d = f.neg(d);
        }
        const std::uint8_t pv = M.at(c, c);
        d = f.mul(d, pv);
        const std::uint8_t pinv = f.inv(pv);
        for (unsigned r = c + 1; r < n; ++r) {
            const std::uint8_t factor = f.mul(M.at(r, c), pinv);
            if (!factor) continue;
            for (unsigned j = c; j < n; ++j)
                M.at(r, j) = f.sub(M.at(r, j), f.mul(factor, M.at(c, j)));
        }
    }
    return d;
}

std::vector<std::uint8_t> solve_linear(const Field& f, const FMatrix& A,
                                       const std::vector<std::uint8_t>& b) {
    if (A.rows != A.cols) throw ParamError("solve_linear: non-square matrix");
    if (b.size() != A.rows) throw ParamError("solve_linear: rhs length mismatch");
    for (std::uint8_t v : A.a)
        if (v >= f.order()) throw ParamError("solve_linear: entry outside field");

    const unsigned n = A.rows;
    FMatrix M = A;
    std::vector<std::uint8_t> x(b);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = n;
        for (unsigned r = c; r < n; ++r)
            if (M.at(r, c)) {
                piv = r;
                break;
            }
        if (piv == n) throw SingularError("solve_linear: singular matrix");
        if (piv != c) {
            for (unsigned j = c; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            std::swap(x[piv], x[c]);
        }
        const std::uint8_t pinv = f.inv(M.at(c, c));
        for (unsigned j = c; j < n; ++j) M.at(c, j) = f.mul(M.at(c, j), pinv);
        x[c] = f.mul(x[c], pinv);
        for (unsigned r = 0; r < n; ++r) {
            if (r == c) continue;
            const std::uint8_t factor = M.at(r, c);
            if (!factor) continue;
            for (unsigned j = c; j < n; ++j)
                M.at(r, j) = f.sub(M.at(r, j), f.mul(factor, M.at(c, j)));
            x[r] = f.sub(x[r], f.mul(factor, x[c]));
        }
    }
    return x;
}

}  // namespace zgz
