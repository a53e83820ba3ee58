#include "cmg/oracle.hpp"

#include <algorithm>

namespace cmg {

std::vector<std::vector<int>> action_space(int n, int m, int player) {
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
        if (v != player) pool.push_back(v);

    std::vector<std::vector<int>> out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    const int k = static_cast<int>(pool.size());
    while (true) {
        std::vector<int> action;
        for (int i : idx) action.push_back(pool[i]);
        out.push_back(std::move(action));
        int pos = m - 1;
        while (pos >= 0 && idx[pos] == k - m + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::uint64_t configuration_count(int n, int m) {
    std::uint64_t per = 1;
    {
        // C(n-1, m)
        std::uint64_t c = 1;
        for (int i = 1; i <= m; ++i) c = c * (n - m + i - 1) / i;
        per = c;
    }
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > kEnumerationCap * 16 / per) return UINT64_MAX;  // saturate
        total *= per;
    }
    return total;
}

void enumerate_configurations(int n, int m, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const Configuration&)>& visit) {
    std::vector<std::vector<std::vector<int>>> spaces(n);
    for (int i = 0; i < n; ++i) spaces[i] = action_space(n, m, i);
    const std::uint64_t per = spaces[0].size();

    // mixed-radix digits, player 0 most significant for lexicographic order
    std::vector<std::size_t> digits(n, 0);
    std::uint64_t rest = begin;
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<std::size_t>(rest % per);
        rest /= per;
    }

    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::vector<std::vector<int>> acts(n);
        for (int i = 0; i < n; ++i) acts[i] = spaces[i][digits[i]];
        visit(Configuration(n, m, std::move(acts)));

        for (int i = n - 1; i >= 0; --i) {
            if (++digits[i] < per) break;
            digits[i] = 0;
        }
    }
}

}  // namespace cmg
