#include "alphacalc/lattice.hpp"

#include <algorithm>

namespace alphacalc {

static void check_same_basis(const std::string& a, const std::string& b) {
    if (a != b) throw BasisMismatchError(a, b);
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    check_same_basis(a.basis_id, b.basis_id);
    DivisorClass out = a;
    for (size_t i = 0; i < out.coefficients.size(); ++i)
        out.coefficients[i] += b.coefficients[i];
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    check_same_basis(a.basis_id, b.basis_id);
    DivisorClass out = a;
    for (size_t i = 0; i < out.coefficients.size(); ++i)
        out.coefficients[i] -= b.coefficients[i];
    return out;
}

DivisorClass operator*(const Int& c, const DivisorClass& a) {
    DivisorClass out = a;
    for (auto& x : out.coefficients) x *= c;
    return out;
}

bool is_zero(const DivisorClass& a) {
    return std::all_of(a.coefficients.begin(), a.coefficients.end(),
                       [](const Int& x) { return x == 0; });
}

IntersectionForm::IntersectionForm(std::string id, IntMat m)
    : basis_id(std::move(id)), matrix(std::move(m)) {
    if (matrix.rows != matrix.cols)
        throw ValidationError("intersection form must be square");
    for (int i = 0; i < matrix.rows; ++i)
        for (int j = i + 1; j < matrix.cols; ++j)
            if (matrix.at(i, j) != matrix.at(j, i))
                throw ValidationError("intersection form must be symmetric");
}

Int pairing(const IntersectionForm& form, const DivisorClass& u, const DivisorClass& v) {
    check_same_basis(u.basis_id, form.basis_id);
    check_same_basis(v.basis_id, form.basis_id);
    if (static_cast<int>(u.coefficients.size()) != form.rank() ||
        static_cast<int>(v.coefficients.size()) != form.rank())
        throw ValidationError("divisor class length does not match form rank");
    Int acc(0);
    for (int i = 0; i < form.rank(); ++i) {
        if (u.coefficients[i] == 0) continue;
        Int row(0);
        for (int j = 0; j < form.rank(); ++j)
            row += form.matrix.at(i, j) * v.coefficients[j];
        acc += u.coefficients[i] * row;
    }
    return acc;
}

namespace {

// Position of the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (t, t); {-1,-1} if that submatrix is zero.
std::pair<int, int> min_abs_pivot(const IntMat& d, int t) {
    std::pair<int, int> best{-1, -1};
    Int best_abs(0);
    for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (best.first < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMat& a) {
    const int m = a.rows, n = a.cols;
    SnfDecomposition snf{IntMat::identity(m), a, IntMat::identity(n)};
    IntMat& u = snf.u;
    IntMat& d = snf.d;
    IntMat& v = snf.v;

    auto row_sub = [&](int dst, int src, const Int& q) {  // R_dst -= q * R_src
        for (int j = 0; j < n; ++j) d.at(dst, j) -= q * d.at(src, j);
        for (int j = 0; j < m; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto col_sub = [&](int dst, int src, const Int& q) {  // C_dst -= q * C_src
        for (int i = 0; i < m; ++i) d.at(i, dst) -= q * d.at(i, src);
        for (int i = 0; i < n; ++i) v.at(i, dst) -= q * v.at(i, src);
    };
    auto row_add = [&](int dst, int src) {
        for (int j = 0; j < n; ++j) d.at(dst, j) += d.at(src, j);
        for (int j = 0; j < m; ++j) u.at(dst, j) += u.at(src, j);
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            auto [pi, pj] = min_abs_pivot(d, t);
            if (pi < 0) { t = steps; break; }  // trailing block zero: done
            if (pi != t) { d.swap_rows(t, pi); u.swap_rows(t, pi); }
            if (pj != t) { d.swap_cols(t, pj); v.swap_cols(t, pj); }

            // Reduce column t, then row t. Nonzero remainders leave a smaller
            // pivot behind; the min-abs pivot selection picks it up next pass.
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) row_sub(i, t, q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) col_sub(j, t, q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce the divisibility chain: fold a non-divisible trailing
            // entry's row into row t and reduce again.
            bool divides_all = true;
            for (int i = t + 1; i < m && divides_all; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_add(t, i);
                        divides_all = false;
                        break;
                    }
            if (!divides_all) continue;

            if (d.at(t, t) < 0) {
                for (int j = 0; j < n; ++j) d.at(t, j) = -d.at(t, j);
                for (int j = 0; j < m; ++j) u.at(t, j) = -u.at(t, j);
            }
            break;
        }
        if (t >= steps) break;
    }
    return snf;
}

int rank_of(const IntMat& a) {
    SnfDecomposition snf = smith_normal_form(a);
    int r = 0;
    for (int i = 0; i < std::min(a.rows, a.cols); ++i)
        if (snf.d.at(i, i) != 0) ++r;
    return r;
}

IntegerSolution solve_integer_system(const IntMat& a, const IntVec& b) {
    if (a.rows != static_cast<int>(b.size()))
        throw ValidationError("right-hand side length does not match matrix rows");
    const int m = a.rows, n = a.cols;
    SnfDecomposition snf = smith_normal_form(a);

    IntVec c = mul(snf.u, b);

    // With U A V = D and y = V^{-1} x, the system becomes D y = c. Rows past
    // the diagonal (or with d_i = 0) must have c_i = 0 for rational
    // solvability; diagonal rows need exact divisibility for integrality.
    for (int i = 0; i < m; ++i) {
        Int di = (i < std::min(m, n)) ? snf.d.at(i, i) : Int(0);
        if (di == 0 && c[i] != 0)
            throw InfeasibleError(InfeasibleError::Kind::RationalInfeasible,
                                  "no rational solution: row " + std::to_string(i) +
                                      " requires 0 = " + c[i].str());
    }
    IntVec y(static_cast<size_t>(n), Int(0));
    for (int i = 0; i < std::min(m, n); ++i) {
        Int di = snf.d.at(i, i);
        if (di == 0) continue;
        if (c[i] % di != 0)
            throw InfeasibleError(InfeasibleError::Kind::CongruenceObstruction,
                                  "congruence obstruction: row " + std::to_string(i) +
                                      " requires " + di.str() + " | " + c[i].str());
        y[i] = c[i] / di;
    }

    IntegerSolution sol;
    sol.particular = mul(snf.v, y);
    for (int j = 0; j < n; ++j) {
        Int dj = (j < std::min(m, n)) ? snf.d.at(j, j) : Int(0);
        if (dj == 0) sol.kernel_basis.push_back(snf.v.col(j));
    }
    return sol;
}

}  // namespace alphacalc
