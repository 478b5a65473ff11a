#include "alphacalc/matrix.hpp"

namespace alphacalc {

Int determinant(IntMat a) {
    if (a.rows != a.cols) throw ValidationError("determinant of non-square matrix");
    const int n = a.rows;
    if (n == 0) return Int(1);

    // Bareiss fraction-free elimination; every division below is exact.
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return Int(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace alphacalc
