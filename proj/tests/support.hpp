#pragma once

#include "lowwafom/f2.hpp"
#include "lowwafom/rng.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

inline lowwafom::Rng test_rng(std::uint64_t a, std::uint64_t b = 0) {
    return lowwafom::make_stream(20240601, lowwafom::StreamTag::test, {a, b});
}

/// Uniformly random n x m matrices, no structure.
inline lowwafom::GeneratingMatrixSet random_net(int n, int m, int s, lowwafom::Rng& rng) {
    std::vector<lowwafom::BitColumn> data(static_cast<std::size_t>(m) * s);
    for (auto& c : data) c = rng() & lowwafom::low_mask(n);
    return {n, m, s, std::move(data)};
}

/// Random matrices whose every 1-d projection is a (0,d,1)-net for d <= min(m, n).
inline lowwafom::GeneratingMatrixSet random_regular_net(int n, int m, int s, lowwafom::Rng& rng) {
    lowwafom::GeneratingMatrixSet g(n, m, s);
    for (int t = 0; t < s; ++t) {
        std::vector<lowwafom::BitColumn> cols;
        for (int c = 0; c < m; ++c) {
            lowwafom::BitColumn v;
            do {
                v = rng() & lowwafom::low_mask(n);
                cols.push_back(v);
                const bool ok = c >= n || lowwafom::is_upper_square_regular(cols, n);
                cols.pop_back();
                if (ok) break;
            } while (true);
            cols.push_back(v);
            g.set_column(t, c, v);
        }
    }
    return g;
}

}  // namespace testing_support
