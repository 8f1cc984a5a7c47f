#include <riesz_forms/exterior.hpp>

#include <algorithm>

namespace riesz_forms {

std::vector<BasisForm> basis_forms(int n, int p) {
    if (p < 0 || p > n) return {};
    std::vector<BasisForm> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == p) out.emplace_back(n, mask);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace riesz_forms
