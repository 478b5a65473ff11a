#include "alphacalc/simplex.hpp"

namespace alphacalc {

namespace {

// Full-tableau simplex state. Column layout: the n structural variables,
// then one slack per finite upper bound, then one artificial per equality
// row. Bland's rule (smallest eligible index everywhere) guarantees
// termination without any perturbation.
struct Tableau {
    int n_struct = 0;
    int n_total = 0;
    int n_rows = 0;
    int art_begin = 0;  // columns >= art_begin are artificials
    std::vector<QVec> rows;  // n_rows x (n_total + 1), last column = RHS
    QVec obj;                // reduced-cost row for the real objective
    QVec phase;              // reduced-cost row for phase 1
    std::vector<int> basis;  // basis[r] = column basic in row r

    void pivot(int r, int s) {
        Rat inv = Rat(1) / rows[r][s];
        for (int j = 0; j <= n_total; ++j) rows[r][j] *= inv;
        auto eliminate = [&](QVec& row) {
            if (row[s] == 0) return;
            Rat f = row[s];
            for (int j = 0; j <= n_total; ++j) row[j] -= f * rows[r][j];
        };
        for (int i = 0; i < n_rows; ++i)
            if (i != r) eliminate(rows[i]);
        eliminate(obj);
        eliminate(phase);
        basis[r] = s;
    }

    // One simplex phase on the given reduced-cost row. Returns false when the
    // problem is unbounded in the improving direction.
    bool run(QVec& cost, bool allow_artificial_entering) {
        for (;;) {
            int enter = -1;
            int limit = allow_artificial_entering ? n_total : art_begin;
            for (int j = 0; j < limit; ++j)
                if (cost[j] > 0) { enter = j; break; }
            if (enter < 0) return true;

            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < n_rows; ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rows[i][n_total] / rows[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult simplex_max(const QMat& a_eq, const QVec& b_eq, const QVec& c,
                     const std::vector<std::optional<Rat>>& upper) {
    const int n = a_eq.cols;
    if (static_cast<int>(c.size()) != n || static_cast<int>(upper.size()) != n)
        throw ValidationError("simplex input dimension mismatch");
    if (a_eq.rows != static_cast<int>(b_eq.size()))
        throw ValidationError("simplex input dimension mismatch");
    for (int j = 0; j < n; ++j)
        if (upper[j] && *upper[j] < 0) return {LpStatus::Infeasible, Rat(0), {}};

    std::vector<int> bounded;
    for (int j = 0; j < n; ++j)
        if (upper[j]) bounded.push_back(j);

    Tableau t;
    t.n_struct = n;
    t.n_rows = a_eq.rows + static_cast<int>(bounded.size());
    t.art_begin = n + static_cast<int>(bounded.size());
    t.n_total = t.art_begin + a_eq.rows;
    t.rows.assign(t.n_rows, QVec(t.n_total + 1, Rat(0)));
    t.basis.assign(t.n_rows, -1);

    // Bound rows x_j + s = u_j; their slacks form part of the initial basis.
    for (size_t k = 0; k < bounded.size(); ++k) {
        int r = static_cast<int>(k);
        t.rows[r][bounded[k]] = 1;
        t.rows[r][n + static_cast<int>(k)] = 1;
        t.rows[r][t.n_total] = *upper[bounded[k]];
        t.basis[r] = n + static_cast<int>(k);
    }
    // Equality rows, sign-normalized so each artificial starts basic at b >= 0.
    for (int i = 0; i < a_eq.rows; ++i) {
        int r = static_cast<int>(bounded.size()) + i;
        bool neg = b_eq[i] < 0;
        for (int j = 0; j < n; ++j)
            t.rows[r][j] = neg ? -a_eq.at(i, j) : a_eq.at(i, j);
        t.rows[r][t.n_total] = neg ? -b_eq[i] : b_eq[i];
        t.rows[r][t.art_begin + i] = 1;
        t.basis[r] = t.art_begin + i;
    }

    // Phase-1 cost: maximize -(sum of artificials). With artificials basic,
    // the reduced-cost row is the sum of the equality rows.
    t.phase.assign(t.n_total + 1, Rat(0));
    for (int i = 0; i < a_eq.rows; ++i) {
        int r = static_cast<int>(bounded.size()) + i;
        for (int j = 0; j <= t.n_total; ++j) t.phase[j] += t.rows[r][j];
    }
    for (int i = 0; i < a_eq.rows; ++i) t.phase[t.art_begin + i] = 0;

    // Real objective row, reduced against the initial (slack) basis; slacks
    // and artificials carry zero cost so no adjustment is needed.
    t.obj.assign(t.n_total + 1, Rat(0));
    for (int j = 0; j < n; ++j) t.obj[j] = c[j];

    if (a_eq.rows > 0) {
        t.run(t.phase, false);  // cannot be unbounded: objective <= 0
        if (t.phase[t.n_total] != 0) return {LpStatus::Infeasible, Rat(0), {}};
        // Pivot leftover artificials out of the basis where a structural or
        // slack column is available; a fully zero row is redundant and its
        // artificial stays basic at level zero.
        for (int r = 0; r < t.n_rows; ++r) {
            if (t.basis[r] < t.art_begin) continue;
            for (int j = 0; j < t.art_begin; ++j)
                if (t.rows[r][j] != 0) { t.pivot(r, j); break; }
        }
    }

    if (!t.run(t.obj, false)) return {LpStatus::Unbounded, Rat(0), {}};

    LpResult out;
    out.status = LpStatus::Optimal;
    out.x.assign(static_cast<size_t>(n), Rat(0));
    for (int r = 0; r < t.n_rows; ++r)
        if (t.basis[r] < n) out.x[t.basis[r]] = t.rows[r][t.n_total];
    out.objective = Rat(0);
    for (int j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
    return out;
}

}  // namespace alphacalc
