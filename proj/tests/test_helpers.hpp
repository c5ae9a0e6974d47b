#pragma once

#include <doctest.h>

#include "expp/random.hpp"
#include "expp/types.hpp"

namespace expp::testing {

inline Vector vec(std::initializer_list<double> vals) {
    Vector v(static_cast<int>(vals.size()));
    int i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}

inline Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
    Matrix M(rows, cols);
    for (int j = 0; j < cols; ++j) M.col(j) = gaussian_vector(rows, rng);
    return M;
}

}  // namespace expp::testing
