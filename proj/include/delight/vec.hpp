#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace dg {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline double squared_norm(std::span<const double> a) {
    return dot(a, a);
}

inline double norm(std::span<const double> a) {
    return std::sqrt(squared_norm(a));
}

// y += c * x
inline void axpy(double c, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] += c * x[i];
}

inline void scale(std::span<double> a, double c) {
    for (double& v : a)
        v *= c;
}

} // namespace dg
