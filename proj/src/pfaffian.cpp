#include "projkit/pfaffian.hpp"

namespace projkit {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

int permutation_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

}  // namespace projkit
