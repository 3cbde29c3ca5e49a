#ifndef ZGZ_FIELD_HPP
#define ZGZ_FIELD_HPP

#include <cstdint>
#include <vector>

#include "zgz/errors.hpp"

namespace zgz {

/// Arithmetic over GF(q), q a prime power <= 256.
///
/// Elements are integers in [0, q-1]. For extension fields GF(p^k) an element
/// encodes a polynomial over F_p in base-p digits, reduced modulo a fixed
/// primitive polynomial chosen deterministically per (p, k): the monic
/// irreducible polynomial with the smallest integer encoding whose root x
/// generates the multiplicative group. The encoding of that polynomial is
/// exposed as poly_id() so codecs can record it for bit-exact reproduction.
class Field {
public:
    static Field make(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return deg_; }
    // 0 for prime fields; p^k + sum c_i p^i for GF(p^k) modulus x^k + sum c_i x^i.
    unsigned poly_id() const { return poly_id_; }
    std::uint8_t primitive() const { return primitive_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw ParamError("field: inverse of zero");
        return inv_[a];
    }
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }
    std::uint8_t pow(std::uint8_t a, unsigned e) const;

    bool operator==(const Field& o) const { return q_ == o.q_ && poly_id_ == o.poly_id_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Exhaustive axiom check (closure, commutativity, associativity,
    // distributivity, inverses). O(q^3); intended for tests.
    bool self_check() const;

private:
    Field() = default;
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    unsigned q_ = 0, p_ = 0, deg_ = 0, poly_id_ = 0;
    std::uint8_t primitive_ = 0;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Dense matrix over a Field, row-major.
struct FMatrix {
    unsigned rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    FMatrix() = default;
    FMatrix(unsigned r, unsigned c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t& at(unsigned i, unsigned j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(unsigned i, unsigned j) const {
        return a[static_cast<std::size_t>(i) * cols + j];
    }
};

FMatrix mat_mul(const Field& f, const FMatrix& A, const FMatrix& B);
FMatrix mat_identity(unsigned n);

// Determinant via Gaussian elimination; pivot = lowest row with a nonzero
// entry, so runs are reproducible. Zero iff singular.
std::uint8_t det(const Field& f, const FMatrix& A);

// Solves Ax = b for square invertible A. Throws SingularError for singular A,
// ParamError for shape mismatches.
std::vector<std::uint8_t> solve_linear(const Field& f, const FMatrix& A,
                                       const std::vector<std::uint8_t>& b);

bool is_prime(unsigned n);

}  // namespace zgz

#endif
