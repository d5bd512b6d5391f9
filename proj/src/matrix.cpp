#include "mfslice/matrix.hpp"

#include <map>

namespace mfslice {

namespace {

SparseMatrix from_map(std::size_t size, const std::map<std::pair<std::size_t, std::size_t>, Rational>& acc) {
    SparseMatrix out;
    out.size = size;
    for (const auto& [pos, v] : acc)
        if (sgn(v) != 0) out.entries.push_back({pos.first, pos.second, v});
    return out;
}

void accumulate_product(std::map<std::pair<std::size_t, std::size_t>, Rational>& acc, const SparseMatrix& a,
                        const SparseMatrix& b, int sign) {
    for (const auto& x : a.entries)
        for (const auto& y : b.entries)
            if (x.col == y.row) {
                Rational v = x.value * y.value;
                if (sign < 0) v = -v;
                acc[{x.row, y.col}] += v;
            }
}

}  // namespace

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
    Rational v = 0;
    for (const auto& e : entries)
        if (e.row == row && e.col == col) v += e.value;
    return v;
}

SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b) {
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    accumulate_product(acc, a, b, 1);
    return from_map(a.size, acc);
}

SparseMatrix sparse_commutator(const SparseMatrix& a, const SparseMatrix& b) {
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    accumulate_product(acc, a, b, 1);
    accumulate_product(acc, b, a, -1);
    return from_map(a.size, acc);
}

SparseMatrix sparse_scaled(SparseMatrix m, const Rational& factor) {
    for (auto& e : m.entries) e.value *= factor;
    return m;
}

}  // namespace mfslice
