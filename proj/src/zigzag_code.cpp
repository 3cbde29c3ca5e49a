#include "zgz/zigzag_code.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "zgz/combin.hpp"

namespace zgz {

std::uint32_t ZigzagCode::parity_row(unsigned j, unsigned l, std::uint32_t x) const {
    return zigzag_perm(T[j], l, x);
}

std::uint32_t ZigzagCode::source_row(unsigned j, unsigned l, std::uint32_t t) const {
    return vec_to_int(vsub(int_to_vec(t, r, m), vscale(T[j], l % r)));
}

std::vector<std::uint32_t> ZigzagCode::rebuild_rows(unsigned node, unsigned l) const {
    std::vector<std::uint32_t> rows;
    if (zero_node && node == *zero_node) {
        const RVec ones(r, m, std::vector<std::uint8_t>(m, 1));
        for (std::uint32_t x = 0; x < p; ++x)
            if (dot(int_to_vec(x, r, m), ones) == l % r) rows.push_back(x);
    } else {
        for (std::uint32_t x = 0; x < p; ++x)
            if (dot(int_to_vec(x, r, m), T[node]) == (r - l % r) % r) rows.push_back(x);
    }
    return rows;
}

namespace {

unsigned vec_gcd_with_r(const RVec& v) {
    unsigned g = v.r;
    for (auto d : v.digits) g = std::gcd(g, static_cast<unsigned>(d));
    return g;
}

void validate_structure(unsigned r, unsigned m, const std::vector<RVec>& T, const Field& field,
                        const CoeffTable& coeffs, std::optional<unsigned>& zero_node) {
    if (r < 2) throw ParamError("zigzag: need at least two parities");
    const std::uint32_t p = pow_u32(r, m);
    if (T.empty()) throw ParamError("zigzag: empty generator set");
    for (unsigned j = 0; j < T.size(); ++j) {
        const RVec& v = T[j];
        if (v.r != r || v.m != m) throw ParamError("zigzag: generator dimension mismatch");
        if (v.is_zero()) {
            if (zero_node) throw ParamError("zigzag: more than one zero generator");
            zero_node = j;
        } else if (vec_gcd_with_r(v) != 1) {
            throw ParamError("zigzag: generator violates the gcd condition");
        }
    }
    if (coeffs.size() != T.size()) throw ParamError("zigzag: coefficient table node count");
    for (const auto& per_parity : coeffs) {
        if (per_parity.size() != r) throw ParamError("zigzag: coefficient table parity count");
        for (unsigned l = 0; l < r; ++l) {
            if (per_parity[l].size() != p) throw ParamError("zigzag: coefficient table row count");
            for (auto c : per_parity[l]) {
                if (c == 0) throw ParamError("zigzag: zero coefficient");
                if (c >= field.order())
                    throw ParamError("zigzag: field too small for coefficient table");
            }
        }
        for (auto c : per_parity[0])
            if (c != 1) throw ParamError("zigzag: parity 0 must be the plain row sum");
    }
}

}  // namespace

ZigzagCode build_general(unsigned r, unsigned m, const std::vector<RVec>& T, const Field& field,
                         const CoeffTable& coeffs) {
    std::optional<unsigned> zero_node;
    validate_structure(r, m, T, field, coeffs, zero_node);
    ZigzagCode code;
    code.r = r;
    code.m = m;
    code.k = static_cast<unsigned>(T.size());
    code.p = pow_u32(r, m);
    code.field = field;
    code.T = T;
    code.coeff = coeffs;
    code.zero_node = zero_node;
    return code;
}

CoeffTable theorem1_coefficients(unsigned r, unsigned m, const Field& field) {
    if (r != 2 && r != 3)
        throw ParamError("zigzag: closed-form coefficients only exist for r in {2,3}");
    const unsigned want_q = (r == 2) ? 3 : 4;
    if (field.order() < want_q)
        throw ParamError("zigzag: field too small for the closed-form assignment");
    const std::uint32_t p = pow_u32(r, m);
    const std::uint8_t c = field.primitive();
    const unsigned k = m + 1;
    CoeffTable table(k, std::vector<std::vector<std::uint8_t>>(r, std::vector<std::uint8_t>(p, 1)));

    // Node 0 carries the zero generator. Its parity-l coefficient is c^l for
    // r=3 and stays 1 for r=2, matching the published reference arrays.
    if (r == 3) {
        for (unsigned l = 1; l < r; ++l) {
            const std::uint8_t cl = field.pow(c, l);
            for (std::uint32_t x = 0; x < p; ++x) table[0][l][x] = cl;
        }
    }
    for (unsigned j = 1; j < k; ++j) {
        // prefix vector e_1 + ... + e_j
        std::vector<std::uint8_t> pref(m, 0);
        for (unsigned t = 1; t <= j; ++t) pref[t - 1] = 1;
        const RVec s(r, m, pref);
        const RVec ej = RVec::unit(r, m, j);
        for (unsigned l = 1; l < r; ++l) {
            for (std::uint32_t x = 0; x < p; ++x) {
                // step the single-shift coefficient along x, x+e_j, ...
                std::uint8_t acc = 1;
                RVec y = int_to_vec(x, r, m);
                for (unsigned step = 0; step < l; ++step) {
                    acc = field.mul(acc, dot(y, s) == 0 ? c : std::uint8_t{1});
                    y = vadd(y, ej);
                }
                table[j][l][x] = acc;
            }
        }
    }
    return table;
}

namespace {
std::vector<RVec> theorem1_vectors(unsigned r, unsigned m) {
    std::vector<RVec> T;
    T.push_back(RVec::zero(r, m));
    for (unsigned j = 1; j <= m; ++j) T.push_back(RVec::unit(r, m, j));
    return T;
}
}  // namespace

ZigzagCode build_optimal(unsigned r, unsigned m, const Field& field) {
    ZigzagCode code = build_general(r, m, theorem1_vectors(r, m), field,
                                    theorem1_coefficients(r, m, field));
    code.provenance = CoeffProvenance::closed_form;
    return code;
}

ZigzagCode build_optimal(unsigned r, unsigned m, const Field& field, std::uint64_t seed,
                         std::uint32_t max_tries) {
    if (r == 2 || r == 3) return build_optimal(r, m, field);
    const auto T = theorem1_vectors(r, m);
    SearchResult res = assign_coefficients_search(r, m, T, field, seed, max_tries);
    ZigzagCode code = build_general(r, m, T, field, res.table);
    code.provenance = CoeffProvenance::seeded;
    code.seed = seed;
    code.tries = res.tries;
    return code;
}

CodeWordArray encode(const ZigzagCode& code, const std::vector<std::vector<std::uint8_t>>& info) {
    if (info.size() != code.k) throw ParamError("encode: column count mismatch");
    for (const auto& col : info) {
        if (col.size() != code.p) throw ParamError("encode: column length mismatch");
        for (auto v : col)
            if (v >= code.field.order()) throw ParamError("encode: symbol outside field");
    }
    CodeWordArray cw;
    cw.info = info;
    cw.parity.assign(code.r, std::vector<std::uint8_t>(code.p, 0));
    const Field& f = code.field;
    for (unsigned l = 0; l < code.r; ++l)
        for (unsigned j = 0; j < code.k; ++j)
            for (std::uint32_t x = 0; x < code.p; ++x) {
                const std::uint32_t t = code.parity_row(j, l, x);
                cw.parity[l][t] =
                    f.add(cw.parity[l][t], f.mul(code.coeff[j][l][x], info[j][x]));
            }
    return cw;
}

CodeWordArray decode_erasures(const ZigzagCode& code, const CodeWordArray& shards,
                              const std::vector<unsigned>& erased) {
    if (erased.size() > code.r) throw ParamError("decode: more than r erasures");
    std::vector<unsigned> es, ep;
    for (unsigned node : erased) {
        if (node >= code.n()) throw ParamError("decode: node index out of range");
        (code.is_parity(node) ? ep : es).push_back(node);
    }
    std::sort(es.begin(), es.end());
    std::sort(ep.begin(), ep.end());

    const Field& f = code.field;
    const std::uint32_t p = code.p;
    const unsigned t = static_cast<unsigned>(es.size());
    CodeWordArray out = shards;

    if (t > 0) {
        std::vector<unsigned> use_parities;
        for (unsigned l = 0; l < code.r && use_parities.size() < t; ++l)
            if (!std::binary_search(ep.begin(), ep.end(), code.k + l)) use_parities.push_back(l);
        if (use_parities.size() < t) throw ParamError("decode: not enough surviving parities");

        const unsigned dim = t * p;
        FMatrix A(dim, dim);
        std::vector<std::uint8_t> b(dim, 0);
        auto uidx = [&](unsigned epos, std::uint32_t x) { return epos * p + x; };
        for (unsigned li = 0; li < t; ++li) {
            const unsigned l = use_parities[li];
            for (std::uint32_t tau = 0; tau < p; ++tau) {
                const unsigned row = li * p + tau;
                std::uint8_t rhs = shards.parity[l][tau];
                for (unsigned j = 0; j < code.k; ++j) {
                    const std::uint32_t x = code.source_row(j, l, tau);
                    const std::uint8_t cf = code.coeff[j][l][x];
                    const auto it = std::lower_bound(es.begin(), es.end(), j);
                    if (it != es.end() && *it == j) {
                        A.at(row, uidx(static_cast<unsigned>(it - es.begin()), x)) = cf;
                    } else {
                        rhs = f.sub(rhs, f.mul(cf, shards.info[j][x]));
                    }
                }
                b[row] = rhs;
            }
        }
        const std::vector<std::uint8_t> x = solve_linear(f, A, b);
        for (unsigned epos = 0; epos < t; ++epos) {
            out.info[es[epos]].assign(x.begin() + epos * p, x.begin() + (epos + 1) * p);
        }
    }
    if (!ep.empty()) {
        const CodeWordArray full = encode(code, out.info);
        for (unsigned node : ep) out.parity[node - code.k] = full.parity[node - code.k];
    }
    return out;
}

MdsReport verify_mds(const ZigzagCode& code, std::uint64_t max_patterns) {
    MdsReport report;
    const std::uint64_t total = binomial(code.n(), code.r);
    if (total > max_patterns)
        throw CapError("verify_mds: pattern count exceeds the exhaustive cap");

    const Field& f = code.field;
    const std::uint32_t p = code.p;
    for (unsigned t = 0; t <= std::min(code.r, code.k); ++t) {
        for (const auto& es : combinations(code.k, t)) {
            for (const auto& survivors : combinations(code.r, t)) {
                ++report.patterns_checked;
                if (t == 0) continue;
                const unsigned dim = t * p;
                FMatrix A(dim, dim);
                for (unsigned li = 0; li < t; ++li) {
                    const unsigned l = survivors[li];
                    for (std::uint32_t tau = 0; tau < p; ++tau)
                        for (unsigned ji = 0; ji < t; ++ji) {
                            const unsigned j = es[ji];
                            const std::uint32_t x = code.source_row(j, l, tau);
                            A.at(li * p + tau, ji * p + x) = code.coeff[j][l][x];
                        }
                }
                if (det(f, A) == 0) {
                    report.ok = false;
                    for (unsigned j : es) report.failing_pattern.push_back(j);
                    for (unsigned l = 0; l < code.r; ++l)
                        if (std::find(survivors.begin(), survivors.end(), l) == survivors.end())
                            report.failing_pattern.push_back(code.k + l);
                    return report;
                }
            }
        }
    }
    report.ok = true;
    return report;
}

SearchResult assign_coefficients_search(unsigned r, unsigned m, const std::vector<RVec>& T,
                                        const Field& field, std::uint64_t seed,
                                        std::uint32_t max_tries,
                                        const std::function<bool(const ZigzagCode&)>& extra_check) {
    const std::uint32_t p = pow_u32(r, m);
    const unsigned q = field.order();
    std::mt19937_64 rng(seed);
    for (std::uint32_t attempt = 1; attempt <= max_tries; ++attempt) {
        CoeffTable table(T.size(),
                         std::vector<std::vector<std::uint8_t>>(r, std::vector<std::uint8_t>(p, 1)));
        for (unsigned j = 0; j < T.size(); ++j)
            for (unsigned l = 1; l < r; ++l)
                for (std::uint32_t x = 0; x < p; ++x)
                    table[j][l][x] = static_cast<std::uint8_t>(1 + rng() % (q - 1));
        ZigzagCode code = build_general(r, m, T, field, table);
        code.provenance = CoeffProvenance::seeded;
        code.seed = seed;
        code.tries = attempt;
        if (!verify_mds(code).ok) continue;
        if (extra_check && !extra_check(code)) continue;
        return SearchResult{std::move(table), attempt};
    }
    throw CapError("coefficient search exhausted max_tries; grow the field");
}

}  // namespace zgz
