#pragma once

#include <string>
#include <vector>

#include "aifs/ifs.hpp"

namespace th {

inline aifs::RationalVector v(std::initializer_list<const char *> xs) {
    aifs::RationalVector out;
    for (auto x : xs)
        out.push_back(aifs::Rational::parse(x));
    return out;
}

inline aifs::RationalVector vi(std::initializer_list<long> xs) {
    aifs::RationalVector out;
    for (auto x : xs)
        out.push_back(aifs::Rational(x));
    return out;
}

inline std::vector<aifs::RationalVector> scalars(std::initializer_list<long> xs) {
    std::vector<aifs::RationalVector> out;
    for (auto x : xs)
        out.push_back({aifs::Rational(x)});
    return out;
}

inline aifs::IntMatrix scalar(std::size_t d, long p) { return aifs::IntMatrix::scalar(d, p); }

// {0, e_1, ..., e_d}
inline std::vector<aifs::RationalVector> simplex(std::size_t d) {
    std::vector<aifs::RationalVector> out{aifs::RationalVector(d, aifs::Rational(0))};
    for (std::size_t i = 0; i < d; ++i) {
        aifs::RationalVector e(d, aifs::Rational(0));
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

inline aifs::AffineSystem cantor4() { return {aifs::IntMatrix::scalar(1, 4), scalars({0, 2})}; }

} // namespace th
