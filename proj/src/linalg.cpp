#include "qb/linalg.hpp"

#include <utility>

namespace qb {

std::size_t rank(const RatMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;

    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<Int>> w(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j)
            w[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
    }

    Int prev_pivot = 1;
    std::size_t rk = 0;
    std::size_t pr = 0;  // current pivot row
    for (std::size_t pc = 0; pc < nc && pr < nr; ++pc) {
        std::size_t piv = pr;
        while (piv < nr && w[piv][pc] == 0) ++piv;
        if (piv == nr) continue;
        if (piv != pr) std::swap(w[piv], w[pr]);

        const Int& pivot = w[pr][pc];
        for (std::size_t i = pr + 1; i < nr; ++i) {
            for (std::size_t j = pc + 1; j < nc; ++j) {
                Int num = pivot * w[i][j] - w[i][pc] * w[pr][j];
                mpz_divexact(w[i][j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            w[i][pc] = 0;
        }
        prev_pivot = pivot;
        ++pr;
        ++rk;
    }
    return rk;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rat>> w(nr, std::vector<Rat>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) w[i][j] = m.at(i, j);

    // Gauss-Jordan to reduced row echelon form, exact.
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < nc && pr < nr; ++pc) {
        std::size_t piv = pr;
        while (piv < nr && w[piv][pc] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(w[piv], w[pr]);
        Rat inv = Rat(1) / w[pr][pc];
        for (std::size_t j = pc; j < nc; ++j) w[pr][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == pr || w[i][pc] == 0) continue;
            Rat f = w[i][pc];
            for (std::size_t j = pc; j < nc; ++j) w[i][j] -= f * w[pr][j];
        }
        pivot_col.push_back(pc);
        ++pr;
    }

    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -w[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qb
