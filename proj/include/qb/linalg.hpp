#ifndef QB_LINALG_HPP
#define QB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qb/rational.hpp"

namespace qb {

// Dense matrix over Q, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Exact rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators. Never thresholded.
std::size_t rank(const RatMatrix& m);

// Basis of the right nullspace {x : Mx = 0}, one vector per free column.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

}  // namespace qb

#endif
