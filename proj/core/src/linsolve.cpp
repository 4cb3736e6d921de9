#include "coiso/linsolve.hpp"

#include <stdexcept>

namespace coiso {

LinSolution solve_linear(const LinSystem& sys) {
    size_t ncols = sys.unknowns.size();
    size_t nrows = sys.matrix.size();
    for (const auto& row : sys.matrix)
        if (row.size() != ncols) throw std::invalid_argument("solve_linear: ragged matrix");

    // working copy augmented with rhs and original row index
    std::vector<std::vector<Rat>> a = sys.matrix;
    std::vector<Rat> b = sys.rhs;
    std::vector<size_t> origin(nrows);
    for (size_t i = 0; i < nrows; ++i) origin[i] = i;

    std::vector<std::optional<size_t>> pivot_of_col(ncols);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t p = row;
        while (p < nrows && a[p][col] == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        std::swap(origin[p], origin[row]);
        Rat inv = 1 / a[row][col];
        for (size_t j = col; j < ncols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    size_t rank = row;

    LinSolution out;
    out.rank = static_cast<int>(rank);
    out.nullity = static_cast<int>(ncols - rank);
    for (size_t i = rank; i < nrows; ++i) {
        if (b[i] != 0) {
            out.feasible = false;
            out.certificate_row = origin[i];
            return out;
        }
    }
    out.feasible = true;
    out.particular.assign(ncols, Rat(0));
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col]) out.particular[col] = b[*pivot_of_col[col]];
    }
    return out;
}

}  // namespace coiso
