#ifndef ZGZ_ROWSPACE_HPP
#define ZGZ_ROWSPACE_HPP

#include <cstdint>
#include <vector>

#include "zgz/errors.hpp"

namespace zgz {

// Desk-scale limit on r^m for row-index machinery.
inline constexpr std::uint32_t kMaxRows = 4096;

/// Vector in Z_r^m, doubling as a row index in [0, r^m-1].
/// digits[0] is the most significant base-r digit.
struct RVec {
    unsigned r = 0, m = 0;
    std::vector<std::uint8_t> digits;

    RVec() = default;
    RVec(unsigned r_, unsigned m_, std::vector<std::uint8_t> d);
    static RVec zero(unsigned r, unsigned m);
    static RVec unit(unsigned r, unsigned m, unsigned j);  // e_j, 1-based position

    bool is_zero() const;
    bool operator==(const RVec& o) const { return r == o.r && m == o.m && digits == o.digits; }
    bool operator!=(const RVec& o) const { return !(*this == o); }
};

std::uint32_t pow_u32(unsigned r, unsigned m);

RVec int_to_vec(std::uint32_t x, unsigned r, unsigned m);
std::uint32_t vec_to_int(const RVec& v);

RVec vadd(const RVec& a, const RVec& b);
RVec vsub(const RVec& a, const RVec& b);
RVec vscale(const RVec& a, unsigned s);
unsigned dot(const RVec& a, const RVec& b);

// f_v^l(x) = x + l*v over Z_r; a bijection on [0, r^m-1] for fixed (v, l).
std::uint32_t zigzag_perm(const RVec& v, unsigned l, std::uint32_t x);

/// Subspace of F_r^m (prime r), stored with both a basis and the full sorted
/// element list so membership tests are O(log) at desk scale.
struct Subspace {
    unsigned r = 0, m = 0;
    std::vector<RVec> basis;
    std::vector<std::uint32_t> elements;

    unsigned rank() const { return static_cast<unsigned>(basis.size()); }
    bool contains(std::uint32_t x) const;
};

// All subspace calculus requires prime r; zigzag_perm does not.
Subspace span(unsigned r, unsigned m, const std::vector<RVec>& vectors);
std::vector<std::vector<std::uint32_t>> cosets(const Subspace& z);
Subspace orth_complement(const Subspace& s);
Subspace orth_complement(const RVec& v);

}  // namespace zgz

#endif
