#include "zgz/rowspace.hpp"

#include <algorithm>
#include <set>

#include "zgz/field.hpp"

namespace zgz {

std::uint32_t pow_u32(unsigned r, unsigned m) {
    std::uint64_t p = 1;
    for (unsigned i = 0; i < m; ++i) {
        p *= r;
        if (p > kMaxRows) throw CapError("rowspace: r^m exceeds desk-scale cap");
    }
    return static_cast<std::uint32_t>(p);
}

RVec::RVec(unsigned r_, unsigned m_, std::vector<std::uint8_t> d) : r(r_), m(m_), digits(std::move(d)) {
    if (r < 2) throw ParamError("rvec: base must be >= 2");
    if (digits.size() != m) throw ParamError("rvec: digit count != m");
    for (auto v : digits)
        if (v >= r) throw ParamError("rvec: digit out of range");
}

RVec RVec::zero(unsigned r, unsigned m) { return RVec(r, m, std::vector<std::uint8_t>(m, 0)); }

RVec RVec::unit(unsigned r, unsigned m, unsigned j) {
    if (j < 1 || j > m) throw ParamError("rvec: unit position out of range");
    std::vector<std::uint8_t> d(m, 0);
    d[j - 1] = 1;
    return RVec(r, m, std::move(d));
}

bool RVec::is_zero() const {
    return std::all_of(digits.begin(), digits.end(), [](std::uint8_t v) { return v == 0; });
}

RVec int_to_vec(std::uint32_t x, unsigned r, unsigned m) {
    const std::uint32_t p = pow_u32(r, m);
    if (x >= p) throw ParamError("int_to_vec: index out of range");
    std::vector<std::uint8_t> d(m, 0);
    for (unsigned i = m; i-- > 0;) {
        d[i] = static_cast<std::uint8_t>(x % r);
        x /= r;
    }
    return RVec(r, m, std::move(d));
}

std::uint32_t vec_to_int(const RVec& v) {
    std::uint32_t x = 0;
    for (unsigned i = 0; i < v.m; ++i) x = x * v.r + v.digits[i];
    return x;
}

namespace {
void check_compat(const RVec& a, const RVec& b) {
    if (a.r != b.r || a.m != b.m) throw ParamError("rvec: dimension mismatch");
}
}  // namespace

RVec vadd(const RVec& a, const RVec& b) {
    check_compat(a, b);
    RVec c = a;
    for (unsigned i = 0; i < a.m; ++i)
        c.digits[i] = static_cast<std::uint8_t>((a.digits[i] + b.digits[i]) % a.r);
    return c;
}

RVec vsub(const RVec& a, const RVec& b) {
    check_compat(a, b);
    RVec c = a;
    for (unsigned i = 0; i < a.m; ++i)
        c.digits[i] = static_cast<std::uint8_t>((a.digits[i] + a.r - b.digits[i]) % a.r);
    return c;
}

RVec vscale(const RVec& a, unsigned s) {
    RVec c = a;
    for (unsigned i = 0; i < a.m; ++i)
        c.digits[i] = static_cast<std::uint8_t>(a.digits[i] * s % a.r);
    return c;
}

unsigned dot(const RVec& a, const RVec& b) {
    check_compat(a, b);
    unsigned s = 0;
    for (unsigned i = 0; i < a.m; ++i) s += a.digits[i] * b.digits[i];
    return s % a.r;
}

std::uint32_t zigzag_perm(const RVec& v, unsigned l, std::uint32_t x) {
    return vec_to_int(vadd(int_to_vec(x, v.r, v.m), vscale(v, l % v.r)));
}

bool Subspace::contains(std::uint32_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subspace span(unsigned r, unsigned m, const std::vector<RVec>& vectors) {
    if (!is_prime(r)) throw ParamError("span: subspace calculus requires prime r");
    pow_u32(r, m);
    Subspace s;
    s.r = r;
    s.m = m;
    std::set<std::uint32_t> elems{0};
    for (const RVec& v : vectors) {
        if (v.r != r || v.m != m) throw ParamError("span: vector dimension mismatch");
        std::set<std::uint32_t> next;
        for (std::uint32_t e : elems)
            for (unsigned l = 0; l < r; ++l) next.insert(zigzag_perm(v, l, e));
        const bool grew = next.size() > elems.size();
        elems.swap(next);
        if (grew) s.basis.push_back(v);
    }
    s.elements.assign(elems.begin(), elems.end());
    return s;
}

std::vector<std::vector<std::uint32_t>> cosets(const Subspace& z) {
    const std::uint32_t p = pow_u32(z.r, z.m);
    std::vector<bool> seen(p, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t rep = 0; rep < p; ++rep) {
        if (seen[rep]) continue;
        const RVec rv = int_to_vec(rep, z.r, z.m);
        std::vector<std::uint32_t> c;
        c.reserve(z.elements.size());
        for (std::uint32_t e : z.elements) {
            const std::uint32_t x = vec_to_int(vadd(rv, int_to_vec(e, z.r, z.m)));
            c.push_back(x);
            seen[x] = true;
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

Subspace orth_complement(const Subspace& s) {
    const std::uint32_t p = pow_u32(s.r, s.m);
    Subspace out;
    out.r = s.r;
    out.m = s.m;
    std::vector<RVec> candidate_basis;
    Subspace grown = span(s.r, s.m, {});
    for (std::uint32_t x = 0; x < p; ++x) {
        const RVec u = int_to_vec(x, s.r, s.m);
        bool ortho = true;
        for (const RVec& b : s.basis)
            if (dot(u, b) != 0) {
                ortho = false;
                break;
            }
        if (!ortho) continue;
        out.elements.push_back(x);
        if (!grown.contains(x)) {
            candidate_basis.push_back(u);
            grown = span(s.r, s.m, candidate_basis);
        }
    }
    out.basis = std::move(candidate_basis);
    return out;
}

Subspace orth_complement(const RVec& v) {
    Subspace s;
    s.r = v.r;
    s.m = v.m;
    if (!v.is_zero()) s.basis = {v};
    return orth_complement(span(v.r, v.m, s.basis));
}

}  // namespace zgz
