#ifndef ZGZ_COMBIN_HPP
#define ZGZ_COMBIN_HPP

#include <cstdint>
#include <vector>

namespace zgz {

// C(n, t) with saturation at 2^63-1.
inline std::uint64_t binomial(unsigned n, unsigned t) {
    if (t > n) return 0;
    std::uint64_t c = 1;
    for (unsigned i = 0; i < t; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > (1ull << 62)) return 1ull << 62;
    }
    return c;
}

// All t-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned t) {
    std::vector<std::vector<unsigned>> out;
    if (t > n) return out;
    std::vector<unsigned> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        if (t == 0) break;
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && idx[static_cast<unsigned>(i)] == n - t + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++idx[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace zgz

#endif
