#include "qdilog/exact_rank.hpp"

#include "qdilog/qseries.hpp"

#include <utility>
#include <vector>

namespace qdilog {

int exact_rank(const Eigen::MatrixXi& m) {
    const long rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(cols)));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);

    // Bareiss: every division below is exact.
    Int prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < static_cast<size_t>(cols) && rank < static_cast<size_t>(rows); ++col) {
        size_t piv = rank;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < a.size(); ++i) {
            for (size_t j = col + 1; j < static_cast<size_t>(cols); ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace qdilog
