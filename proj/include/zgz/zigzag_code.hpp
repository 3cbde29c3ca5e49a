#ifndef ZGZ_ZIGZAG_CODE_HPP
#define ZGZ_ZIGZAG_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zgz/field.hpp"
#include "zgz/rowspace.hpp"

namespace zgz {

inline constexpr std::uint64_t kDefaultPatternCap = 1'000'000;

// coeff[j][l][x]: the nonzero coefficient multiplying info element (x, j) in
// parity l; the element lands in parity row x + l*v_j. Parity 0 is pinned to
// all-ones (row sums).
using CoeffTable = std::vector<std::vector<std::vector<std::uint8_t>>>;

enum class CoeffProvenance : std::uint8_t { closed_form = 0, seeded = 1, explicit_table = 2 };

/// Systematic MDS array codec with r parity columns over r^m rows: parity 0
/// is the row sum and parities 1..r-1 combine one element per column along
/// the permutations x -> x + l*v_j generated by the vector set T.
struct ZigzagCode {
    unsigned r = 0, m = 0, k = 0;
    std::uint32_t p = 0;
    Field field;
    std::vector<RVec> T;
    CoeffTable coeff;
    std::optional<unsigned> zero_node;
    CoeffProvenance provenance = CoeffProvenance::explicit_table;
    std::uint64_t seed = 0;
    std::uint32_t tries = 0;

    unsigned n() const { return k + r; }
    bool is_parity(unsigned node) const { return node >= k; }

    // f_j^l(x) and its inverse.
    std::uint32_t parity_row(unsigned j, unsigned l, std::uint32_t x) const;
    std::uint32_t source_row(unsigned j, unsigned l, std::uint32_t t) const;

    // Rows of an erased column that parity l rebuilds: {x : x.v_i = r-l},
    // with the all-ones dual vector for the designated zero-generator node.
    std::vector<std::uint32_t> rebuild_rows(unsigned node, unsigned l) const;
};

struct CodeWordArray {
    std::vector<std::vector<std::uint8_t>> info;    // k columns of p entries
    std::vector<std::vector<std::uint8_t>> parity;  // r columns of p entries
};

struct MdsReport {
    bool ok = false;
    std::vector<unsigned> failing_pattern;  // erased node ids when !ok
    std::uint64_t patterns_checked = 0;
};

struct SearchResult {
    CoeffTable table;
    std::uint32_t tries = 0;
};

ZigzagCode build_general(unsigned r, unsigned m, const std::vector<RVec>& T, const Field& field,
                         const CoeffTable& coeffs);

// T = {0, e_1, ..., e_m}, k = m+1. Closed-form coefficients exist for
// r in {2,3} (fields of size 3 and 4); larger r goes through the seeded
// search overload.
ZigzagCode build_optimal(unsigned r, unsigned m, const Field& field);
ZigzagCode build_optimal(unsigned r, unsigned m, const Field& field, std::uint64_t seed,
                         std::uint32_t max_tries);

CoeffTable theorem1_coefficients(unsigned r, unsigned m, const Field& field);

CodeWordArray encode(const ZigzagCode& code, const std::vector<std::vector<std::uint8_t>>& info);

// Recovers the full array from <= r erased columns (any mix of systematic and
// parity, known positions). Uses the lowest-indexed surviving parities.
CodeWordArray decode_erasures(const ZigzagCode& code, const CodeWordArray& shards,
                              const std::vector<unsigned>& erased);

// Exhaustive: checks invertibility for every erasure pattern of size r.
MdsReport verify_mds(const ZigzagCode& code, std::uint64_t max_patterns = kDefaultPatternCap);

// Seeded per-entry random draws from the nonzero field elements, retried
// until verify_mds (and the optional extra check) passes. Deterministic for
// a given seed. Throws CapError when max_tries is exhausted.
SearchResult assign_coefficients_search(
    unsigned r, unsigned m, const std::vector<RVec>& T, const Field& field, std::uint64_t seed,
    std::uint32_t max_tries,
    const std::function<bool(const ZigzagCode&)>& extra_check = nullptr);

}  // namespace zgz

#endif
