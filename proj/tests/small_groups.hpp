#pragma once

// Multiplication tables of the small groups used across the test suite.

#include "hopfpi/groups.hpp"

#include <array>

namespace testutil {

inline hopfpi::FiniteGroup symmetric_group(unsigned n) {
    // elements = permutations of {0..n-1} in lexicographic order
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<unsigned>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<unsigned> c(n);
            for (unsigned i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = index_of(c);
        }
    return hopfpi::FiniteGroup(table);
}

inline hopfpi::FiniteGroup cyclic_group(unsigned n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) table[a][b] = static_cast<int>((a + b) % n);
    return hopfpi::FiniteGroup(table);
}

// dihedral group of order 2n: elements r^i s^j, index = i + n*j
inline hopfpi::FiniteGroup dihedral_group(unsigned n) {
    auto idx = [&](unsigned i, unsigned j) { return static_cast<int>(i + n * j); };
    std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j1 = 0; j1 < 2; ++j1)
            for (unsigned i2 = 0; i2 < n; ++i2)
                for (unsigned j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    unsigned i = j1 ? (i1 + n - i2 % n) % n : (i1 + i2) % n;
                    unsigned j = (j1 + j2) % 2;
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return hopfpi::FiniteGroup(table);
}

// quaternion group {1, -1, i, -i, j, -j, k, -k}
inline hopfpi::FiniteGroup quaternion_group() {
    // encode q = s*u with sign s in {0,1} (0 = +) and unit u in {1,i,j,k}={0,1,2,3}
    auto idx = [](int s, int u) { return u * 2 + s; };
    // unit multiplication table with result sign: i*j=k, j*k=i, k*i=j
    const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int usgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // fix signs: i*i = -1, i*j = k, j*i = -k, etc.
    auto sign_of = [&](int a, int b) {
        static const int table[4][4] = {
            {0, 0, 0, 0},   // 1*x
            {0, 1, 0, 1},   // i*1=i, i*i=-1, i*j=k, i*k=-j
            {0, 1, 1, 0},   // j*i=-k, j*j=-1, j*k=i
            {0, 0, 1, 1},   // k*i=j, k*j=-i, k*k=-1
        };
        (void)usgn;
        return table[a][b];
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int s1 = 0; s1 < 2; ++s1)
        for (int u1 = 0; u1 < 4; ++u1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int u2 = 0; u2 < 4; ++u2) {
                    int u = umul[u1][u2];
                    int s = (s1 + s2 + sign_of(u1, u2)) % 2;
                    table[idx(s1, u1)][idx(s2, u2)] = idx(s, u);
                }
    return hopfpi::FiniteGroup(table);
}

}  // namespace testutil
