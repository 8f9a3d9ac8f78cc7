#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zlab {

// mu(n) for n <= y by linear sieve; each composite is struck once by its
// smallest prime factor. Index 0 is unused (0).
inline std::vector<int8_t> mobius_sieve(uint64_t y)
{
    if (y < 1) throw std::invalid_argument("mobius_sieve: y must be >= 1");
    std::vector<int8_t> mu(y + 1, 0);
    std::vector<uint32_t> primes;
    std::vector<bool> composite(y + 1, false);
    mu[1] = 1;
    for (uint64_t i = 2; i <= y; ++i) {
        if (!composite[i]) {
            primes.push_back(uint32_t(i));
            mu[i] = -1;
        }
        for (uint32_t p : primes) {
            const uint64_t ip = i * p;
            if (ip > y) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;  // square factor
                break;
            }
            mu[ip] = int8_t(-mu[i]);
        }
    }
    return mu;
}

} // namespace zlab
