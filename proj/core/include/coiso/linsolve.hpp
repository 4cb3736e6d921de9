#pragma once

#include "coiso/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coiso {

// Dense exact linear system over Q.
struct LinSystem {
    std::vector<std::string> unknowns;
    std::vector<std::vector<Rat>> matrix;  // rows x unknowns
    std::vector<Rat> rhs;

    size_t add_unknown(const std::string& tag) {
        unknowns.push_back(tag);
        return unknowns.size() - 1;
    }
    void add_row(std::vector<Rat> row, Rat b) {
        matrix.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
};

struct LinSolution {
    bool feasible = false;
    std::vector<Rat> particular;       // free unknowns set to zero
    int rank = 0;
    int nullity = 0;
    std::optional<size_t> certificate_row;  // an original row index witnessing 0 = nonzero
};

LinSolution solve_linear(const LinSystem& sys);

}  // namespace coiso
