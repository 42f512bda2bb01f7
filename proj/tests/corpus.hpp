#pragma once

// Shared helpers for the test suites: exhaustive word corpora and an exact
// integer determinant.

#include <vector>

#include "lightleaves/coxeter.hpp"

namespace lightleaves::testing {

// All words over {0,...,rank-1} of length minLen..maxLen, odometer order.
inline std::vector<Word> wordsUpTo(int rank, int maxLen, int minLen = 1) {
    std::vector<Word> out;
    for (int len = minLen; len <= maxLen; ++len) {
        Word w(len, 0);
        while (true) {
            out.push_back(w);
            int j = len - 1;
            while (j >= 0 && w[j] == rank - 1) w[j--] = 0;
            if (j < 0) break;
            ++w[j];
        }
    }
    return out;
}

// Bareiss fraction-free determinant; exact over Int.
inline Int detBareiss(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace lightleaves::testing
