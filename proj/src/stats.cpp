#include "delight/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dg {

double mean(std::span<const double> xs) {
    if (xs.empty())
        throw std::invalid_argument("mean: empty input");
    double s = 0.0;
    for (double x : xs)
        s += x;
    return s / static_cast<double>(xs.size());
}

double stderr_of_mean(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2)
        return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

double wilcoxon_signed_rank_less(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("wilcoxon: size mismatch");

    std::vector<double> abs_d;
    std::vector<int> sign;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d == 0.0)
            continue;
        abs_d.push_back(std::fabs(d));
        sign.push_back(d < 0.0 ? -1 : +1);
    }
    const std::size_t n = abs_d.size();
    if (n == 0)
        return 1.0;

    // Average ranks of |d|, doubled so tied ranks stay integral.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return abs_d[x] < abs_d[y]; });
    std::vector<long> rank2(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && abs_d[order[j + 1]] == abs_d[order[i]])
            ++j;
        // ranks i+1 .. j+1 share the average; doubled average = (i + j + 2)
        const long r2 = static_cast<long>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k)
            rank2[order[k]] = r2;
        i = j + 1;
    }

    // Evidence for a < b is a small positive-rank sum.
    long w_pos2 = 0;
    long total2 = 0;
    for (std::size_t k = 0; k < n; ++k) {
        total2 += rank2[k];
        if (sign[k] > 0)
            w_pos2 += rank2[k];
    }

    if (n <= 30) {
        // Exact: DP over the distribution of the (doubled) positive-rank sum.
        std::vector<double> ways(static_cast<std::size_t>(total2) + 1, 0.0);
        ways[0] = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            const long r2 = rank2[k];
            for (long s = total2; s >= r2; --s)
                ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - r2)];
        }
        double count = 0.0;
        for (long s = 0; s <= w_pos2; ++s)
            count += ways[static_cast<std::size_t>(s)];
        return count / std::ldexp(1.0, static_cast<int>(n));
    }

    // Normal approximation with continuity correction, on halved ranks.
    const double w = static_cast<double>(w_pos2) / 2.0;
    const double nn = static_cast<double>(n);
    const double mu = nn * (nn + 1.0) / 4.0;
    const double sd = std::sqrt(nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0);
    const double z = (w + 0.5 - mu) / sd;
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

} // namespace dg
