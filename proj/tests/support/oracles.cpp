#include "support/oracles.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace semipair::testing {

bool pairable_by_dp(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.members();
    int k = static_cast<int>(verts.size());
    if (k % 2 != 0) return false;
    if (k == 0) return true;
    if (k > 30) throw std::invalid_argument("pairable_by_dp: set too large");

    std::vector<std::uint32_t> close(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        VertexSet near = vertices_within_2(g, verts[static_cast<std::size_t>(i)]);
        for (int j = 0; j < k; ++j)
            if (j != i && near.contains(verts[static_cast<std::size_t>(j)]))
                close[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    }

    std::unordered_map<std::uint32_t, bool> memo;
    std::uint32_t all = (k == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);

    std::function<bool(std::uint32_t)> solve = [&](std::uint32_t mask) -> bool {
        if (mask == 0) return true;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int i = std::countr_zero(mask);
        std::uint32_t partners = close[static_cast<std::size_t>(i)] & mask &
                                 ~(std::uint32_t{1} << i);
        bool ok = false;
        while (partners != 0 && !ok) {
            int j = std::countr_zero(partners);
            partners &= partners - 1;
            ok = solve(mask & ~(std::uint32_t{1} << i) & ~(std::uint32_t{1} << j));
        }
        memo.emplace(mask, ok);
        return ok;
    };
    return solve(all);
}

int min_semi_pd_by_mask_scan(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("min_semi_pd_by_mask_scan: graph too large");

    std::vector<std::uint32_t> cover(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        cover[static_cast<std::size_t>(v)] = std::uint32_t{1} << (v - 1);
        for (int w : g.neighbors(v))
            cover[static_cast<std::size_t>(v)] |= std::uint32_t{1} << (w - 1);
    }
    std::uint32_t full = (std::uint32_t{1} << n) - 1;

    int best = n + 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int size = std::popcount(mask);
        if (size % 2 != 0 || size >= best) continue;
        std::uint32_t covered = 0;
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint32_t{1} << (v - 1))) covered |= cover[static_cast<std::size_t>(v)];
        if (covered != full) continue;
        VertexSet s(n);
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint32_t{1} << (v - 1))) s.insert(v);
        if (pairable_by_dp(g, s)) best = size;
    }
    return best <= n ? best : -1;
}

}  // namespace semipair::testing
