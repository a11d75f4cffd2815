#include "degseq/combinatorics.hpp"

#include <algorithm>

namespace degseq {

long long binomial_capped(long long n, long long k, long long cap) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 result = 1;
    for (long long i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        result = result * (n - k + i) / i;
        if (result > cap)
            return cap + 1;
    }
    return (long long)result;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = (int)c.size();
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool next_multicombination(std::vector<int>& c, int n) {
    const int k = (int)c.size();
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - 1) {
            ++c[i];
            for (int j = i + 1; j < k; ++j)
                c[j] = c[i];
            return true;
        }
    }
    return false;
}

} // namespace degseq
