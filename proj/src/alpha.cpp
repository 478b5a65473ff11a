#include "alphacalc/alpha.hpp"

#include <algorithm>
#include <queue>

namespace alphacalc {

namespace {

QMat to_rational(const IntMat& a) {
    QMat out(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(i, j) = Rat(a.at(i, j));
    return out;
}

// LP relaxation of max c.x over { A x = b, lo <= x <= hi } via the shift
// y = x - lo, so the solver only sees y >= 0 with upper bounds.
LpResult boxed_lp_max(const IntMat& a, const IntVec& b, const IntVec& c,
                      const IntVec& lo, const std::vector<std::optional<Int>>& hi) {
    const int n = a.cols;
    for (int j = 0; j < n; ++j)
        if (hi[j] && *hi[j] < lo[j]) return {LpStatus::Infeasible, Rat(0), {}};

    QVec b_shift(static_cast<size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i) {
        Int acc = b[i];
        for (int j = 0; j < n; ++j) acc -= a.at(i, j) * lo[j];
        b_shift[i] = Rat(acc);
    }
    QVec obj(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) obj[j] = Rat(c[j]);
    std::vector<std::optional<Rat>> upper(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        if (hi[j]) upper[j] = Rat(*hi[j] - lo[j]);

    LpResult r = simplex_max(to_rational(a), b_shift, obj, upper);
    if (r.status != LpStatus::Optimal) return r;
    for (int j = 0; j < n; ++j) {
        r.x[j] += Rat(lo[j]);
        r.objective += Rat(c[j]) * Rat(lo[j]);
    }
    return r;
}

struct BnbOutcome {
    bool feasible = false;
    Int value;
    IntVec x;
};

// Best-bound branch-and-bound for max c.x over integer points of
// { A x = b, lo <= x <= hi }, all bounds finite. Exact rational LP bounds
// make the search exhaustive; branching picks the most fractional value.
BnbOutcome bnb_max(const IntMat& a, const IntVec& b, const IntVec& c,
                   const IntVec& lo0, const IntVec& hi0) {
    struct Node {
        Rat bound;
        long id = 0;
        IntVec lo, hi;
        QVec relax;
    };
    struct Order {
        bool operator()(const Node& p, const Node& q) const {
            if (p.bound != q.bound) return p.bound < q.bound;
            return p.id > q.id;  // FIFO among equal bounds, for determinism
        }
    };

    const int n = a.cols;
    std::priority_queue<Node, std::vector<Node>, Order> queue;
    long next_id = 0;
    BnbOutcome best;

    auto push = [&](IntVec lo, IntVec hi) {
        std::vector<std::optional<Int>> hi_opt(hi.begin(), hi.end());
        LpResult lp = boxed_lp_max(a, b, c, lo, hi_opt);
        if (lp.status != LpStatus::Optimal) return;  // box is finite: never unbounded
        queue.push(Node{lp.objective, next_id++, std::move(lo), std::move(hi),
                        std::move(lp.x)});
    };
    push(lo0, hi0);

    while (!queue.empty()) {
        Node node = queue.top();
        queue.pop();
        if (best.feasible && floor_rat(node.bound) <= best.value) continue;

        int branch = -1;
        Rat branch_score(-1);
        for (int j = 0; j < n; ++j) {
            if (is_integer(node.relax[j])) continue;
            Rat frac = node.relax[j] - Rat(floor_rat(node.relax[j]));
            Rat score = frac <= Rat(1, 2) ? frac : Rat(1) - frac;
            if (score > branch_score) {
                branch_score = score;
                branch = j;
            }
        }
        if (branch < 0) {
            // Integral vertex: candidate incumbent.
            IntVec x(static_cast<size_t>(n));
            Int value(0);
            for (int j = 0; j < n; ++j) {
                x[j] = rat_num(node.relax[j]);
                value += c[j] * x[j];
            }
            if (!best.feasible || value > best.value) {
                best.feasible = true;
                best.value = std::move(value);
                best.x = std::move(x);
            }
            continue;
        }

        IntVec lo_right = node.lo, hi_left = node.hi;
        hi_left[branch] = floor_rat(node.relax[branch]);
        lo_right[branch] = hi_left[branch] + 1;
        push(node.lo, std::move(hi_left));
        push(std::move(lo_right), node.hi);
    }
    return best;
}

IntVec unit_objective(int n, int index) {
    IntVec c(static_cast<size_t>(n), Int(0));
    c[index] = 1;
    return c;
}

// Completes the per-coordinate box: any missing upper bound is the floor of
// the coordinate's relaxation maximum. Returns nullopt when the relaxation
// is infeasible.
std::optional<IntVec> resolve_box(const IlpProblem& problem) {
    const int n = problem.a.cols;
    IntVec lo(static_cast<size_t>(n), Int(0));
    IntVec ub(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(problem.box_upper.size()) == n && problem.box_upper[j]) {
            ub[j] = *problem.box_upper[j];
            continue;
        }
        std::vector<std::optional<Int>> free_hi(static_cast<size_t>(n));
        LpResult lp = boxed_lp_max(problem.a, problem.rhs, unit_objective(n, j), lo, free_hi);
        if (lp.status == LpStatus::Infeasible) return std::nullopt;
        if (lp.status == LpStatus::Unbounded)
            throw ValidationError("feasible region unbounded in coordinate " +
                                  std::to_string(j) + "; cannot box the search");
        ub[j] = floor_rat(lp.objective);
    }
    return ub;
}

// Lexicographically smallest optimal vector: fix the objective coordinate at
// its optimum, then minimize the coordinates one by one in index order.
IntVec lex_smallest_optimal(const IntMat& a, const IntVec& b, int objective_index,
                            const Int& optimum, const IntVec& lo0, const IntVec& hi0) {
    IntVec lo = lo0, hi = hi0;
    lo[objective_index] = optimum;
    hi[objective_index] = optimum;
    for (int j = 0; j < a.cols; ++j) {
        if (lo[j] == hi[j]) continue;
        IntVec c(static_cast<size_t>(a.cols), Int(0));
        c[j] = -1;
        BnbOutcome r = bnb_max(a, b, c, lo, hi);
        if (!r.feasible)
            throw Error("internal: optimal face lost during lexicographic refinement");
        lo[j] = -r.value;
        hi[j] = lo[j];
    }
    return lo;
}

struct ConstraintData {
    IntMat a;
    IntVec rhs;
};

ConstraintData constraint_data(const SurfaceModel& model,
                               const std::vector<std::string>& curve_labels,
                               const DivisorClass& polarization, int k) {
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (curve_labels.empty()) throw ValidationError("curve list must not be empty");
    if (polarization.basis_id != model.basis_id)
        throw BasisMismatchError(polarization.basis_id, model.basis_id);

    const int rank = model.rank();
    const int m = static_cast<int>(curve_labels.size());
    IntMat a(rank, m);
    for (int j = 0; j < m; ++j) {
        const DivisorClass& c = model.curve(curve_labels[j]);
        for (int i = 0; i < rank; ++i) a.at(i, j) = c.coefficients[i];
    }
    if (rank_of(a) != rank)
        throw ValidationError(
            "curve classes do not span the lattice over the rationals; "
            "the restriction to this curve list is not valid");

    IntVec rhs(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) rhs[i] = Int(k) * polarization.coefficients[i];
    return {std::move(a), std::move(rhs)};
}

}  // namespace

std::vector<IlpProblem> build_constraints(const SurfaceModel& model,
                                          const std::vector<std::string>& curve_labels,
                                          const DivisorClass& polarization, int k) {
    ConstraintData data = constraint_data(model, curve_labels, polarization, k);
    std::vector<IlpProblem> problems;
    problems.reserve(curve_labels.size());
    for (int j = 0; j < static_cast<int>(curve_labels.size()); ++j)
        problems.push_back(IlpProblem{data.a, data.rhs, j, {}});
    return problems;
}

LpSolution lp_max(const IlpProblem& problem) {
    const int n = problem.a.cols;
    IntVec lo(static_cast<size_t>(n), Int(0));
    std::vector<std::optional<Int>> hi(static_cast<size_t>(n));
    if (static_cast<int>(problem.box_upper.size()) == n) hi = problem.box_upper;
    LpResult r = boxed_lp_max(problem.a, problem.rhs,
                              unit_objective(n, problem.objective_index), lo, hi);
    return LpSolution{r.status, r.objective, r.x};
}

IlpSolution ilp_max(const IlpProblem& problem) {
    const int n = problem.a.cols;
    std::optional<IntVec> box = resolve_box(problem);
    if (!box) return {};
    IntVec lo(static_cast<size_t>(n), Int(0));
    BnbOutcome r = bnb_max(problem.a, problem.rhs,
                           unit_objective(n, problem.objective_index), lo, *box);
    if (!r.feasible) return {};
    return IlpSolution{true, r.value, r.x};
}

namespace {

AlphaResult assemble_result(const std::vector<std::string>& curve_labels, int k,
                            const Int& m_star, int objective_index,
                            const IntVec& witness) {
    if (m_star <= 0)
        throw InfeasibleError(InfeasibleError::Kind::NoEffectiveRepresentative,
                              "only the zero divisor is equivalent to " +
                                  std::to_string(k) + "L over the given curves");
    AlphaResult out;
    out.k = k;
    out.m_star = m_star;
    out.alpha_k = Rat(Int(k), m_star);
    out.achieved_by = curve_labels[objective_index];
    for (size_t j = 0; j < curve_labels.size(); ++j)
        if (witness[j] != 0)
            out.witness.coefficients.emplace_back(curve_labels[j], Rat(witness[j]));
    return out;
}

}  // namespace

AlphaResult alpha_k(const SurfaceModel& model,
                    const std::vector<std::string>& curve_labels,
                    const DivisorClass& polarization, int k) {
    if (k < 1) throw ValidationError("k must be positive");
    ConstraintData data = constraint_data(model, curve_labels, polarization, k);
    const int n = data.a.cols;

    IlpProblem shared{data.a, data.rhs, 0, {}};
    std::optional<IntVec> box = resolve_box(shared);
    if (!box)
        throw InfeasibleError(InfeasibleError::Kind::NoEffectiveRepresentative,
                              "no effective combination of the given curves is "
                              "equivalent to " + std::to_string(k) + "L");
    IntVec lo(static_cast<size_t>(n), Int(0));

    // m_star = max over coordinates of the coordinate's integer maximum;
    // this mirrors one single-objective ILP per curve. A coordinate whose
    // relaxation bound cannot beat the running maximum is settled already
    // (ties resolve to the earlier curve).
    std::optional<Int> m_star;
    int objective_index = -1;
    for (int j = 0; j < n; ++j) {
        if (m_star && (*box)[j] <= *m_star) continue;
        BnbOutcome r = bnb_max(data.a, data.rhs, unit_objective(n, j), lo, *box);
        if (!r.feasible)
            throw InfeasibleError(InfeasibleError::Kind::NoEffectiveRepresentative,
                                  "no effective integer combination of the given "
                                  "curves is equivalent to " + std::to_string(k) + "L");
        if (!m_star || r.value > *m_star) {
            m_star = r.value;
            objective_index = j;
        }
    }
    IntVec witness =
        lex_smallest_optimal(data.a, data.rhs, objective_index, *m_star, lo, *box);
    return assemble_result(curve_labels, k, *m_star, objective_index, witness);
}

namespace {

constexpr int kOracleMaxK = 3;

// Exact bounds of the kernel coordinate t_q over { 0 <= p + K t <= ub },
// solved as an LP with the sign split t = u - v and one slack per row.
std::pair<Int, Int> kernel_coordinate_range(const IntMat& kernel, const IntVec& p,
                                            const IntVec& ub, int q) {
    const int n = static_cast<int>(p.size());
    const int r = kernel.cols;
    const int vars = 2 * r + 2 * n;
    QMat a(2 * n, vars);
    QVec b(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) {
            a.at(i, j) = Rat(-kernel.at(i, j));          // -K t + s = p
            a.at(i, r + j) = Rat(kernel.at(i, j));
            a.at(n + i, j) = Rat(kernel.at(i, j));       // K t + s' = ub - p
            a.at(n + i, r + j) = Rat(-kernel.at(i, j));
        }
        a.at(i, 2 * r + i) = 1;
        a.at(n + i, 2 * r + n + i) = 1;
        b[i] = Rat(p[i]);
        b[n + i] = Rat(ub[i] - p[i]);
    }
    std::vector<std::optional<Rat>> upper(static_cast<size_t>(vars));

    auto extremum = [&](int sign) -> Rat {
        QVec c(static_cast<size_t>(vars), Rat(0));
        c[q] = sign;
        c[r + q] = -sign;
        LpResult lp = simplex_max(a, b, c, upper);
        if (lp.status == LpStatus::Infeasible)
            throw InfeasibleError(InfeasibleError::Kind::NoEffectiveRepresentative,
                                  "the box contains no points of the solution family");
        if (lp.status == LpStatus::Unbounded)
            throw ValidationError("kernel coordinate unbounded inside a finite box");
        return sign > 0 ? lp.objective : -lp.objective;
    };
    Rat hi = extremum(+1);
    Rat lo = extremum(-1);
    return {ceil_rat(lo), floor_rat(hi)};
}

}  // namespace

AlphaResult oracle_alpha_k(const SurfaceModel& model,
                           const std::vector<std::string>& curve_labels,
                           const DivisorClass& polarization, int k) {
    if (k < 1) throw ValidationError("k must be positive");
    if (k > kOracleMaxK)
        throw ValidationError("oracle supports k <= " + std::to_string(kOracleMaxK) +
                              " (exhaustive enumeration), got " + std::to_string(k));
    ConstraintData data = constraint_data(model, curve_labels, polarization, k);
    const int n = data.a.cols;

    IlpProblem shared{data.a, data.rhs, 0, {}};
    std::optional<IntVec> box = resolve_box(shared);
    if (!box)
        throw InfeasibleError(InfeasibleError::Kind::NoEffectiveRepresentative,
                              "no effective combination of the given curves is "
                              "equivalent to " + std::to_string(k) + "L");
    const IntVec& ub = *box;

    IntegerSolution family = solve_integer_system(data.a, data.rhs);
    const int r = static_cast<int>(family.kernel_basis.size());
    IntMat kernel(n, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) kernel.at(i, j) = family.kernel_basis[j][i];

    std::vector<std::pair<Int, Int>> t_range(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j)
        t_range[j] = kernel_coordinate_range(kernel, family.particular, ub, j);

    // Remaining-contribution intervals for interval propagation: possible
    // total of coordinates >= depth d in row i.
    std::vector<IntVec> rem_min(static_cast<size_t>(r + 1), IntVec(static_cast<size_t>(n), Int(0)));
    std::vector<IntVec> rem_max = rem_min;
    for (int d = r - 1; d >= 0; --d)
        for (int i = 0; i < n; ++i) {
            Int a = kernel.at(i, d) * t_range[d].first;
            Int b = kernel.at(i, d) * t_range[d].second;
            rem_min[d][i] = rem_min[d + 1][i] + std::min(a, b);
            rem_max[d][i] = rem_max[d + 1][i] + std::max(a, b);
        }

    bool any = false;
    IntVec coord_max(static_cast<size_t>(n));
    IntVec point(static_cast<size_t>(n));
    // visit() receives each feasible nonnegative integer solution exactly once.
    auto enumerate = [&](auto&& visit) {
        IntVec base = family.particular;
        auto rec = [&](auto&& self, int d) -> void {
            if (d == r) {
                visit(base);
                return;
            }
            // Propagate the box through row i to narrow t_d:
            // 0 <= base_i + K_id t_d + rest <= ub_i for some admissible rest.
            Int lo_t = t_range[d].first, hi_t = t_range[d].second;
            for (int i = 0; i < n; ++i) {
                const Int& kid = kernel.at(i, d);
                if (kid == 0) continue;
                Int num_lo = -base[i] - rem_max[d + 1][i];
                Int num_hi = ub[i] - base[i] - rem_min[d + 1][i];
                if (kid > 0) {
                    lo_t = std::max(lo_t, ceil_div(num_lo, kid));
                    hi_t = std::min(hi_t, floor_div(num_hi, kid));
                } else {
                    lo_t = std::max(lo_t, ceil_div(num_hi, kid));
                    hi_t = std::min(hi_t, floor_div(num_lo, kid));
                }
            }
            for (Int t = lo_t; t <= hi_t; ++t) {
                for (int i = 0; i < n; ++i) base[i] += kernel.at(i, d) * t;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i)
                    ok = base[i] + rem_min[d + 1][i] <= ub[i] &&
                         base[i] + rem_max[d + 1][i] >= 0;
                if (ok) self(self, d + 1);
                for (int i = 0; i < n; ++i) base[i] -= kernel.at(i, d) * t;
            }
        };
        rec(rec, 0);
    };

    enumerate([&](const IntVec& a) {
        for (int i = 0; i < n; ++i)
            if (a[i] < 0 || a[i] > ub[i]) return;  // exactness guard
        if (!any) {
            coord_max = a;
            any = true;
        } else {
            for (int i = 0; i < n; ++i) coord_max[i] = std::max(coord_max[i], a[i]);
        }
    });
    if (!any)
        throw InfeasibleError(InfeasibleError::Kind::NoEffectiveRepresentative,
                              "no effective integer combination of the given curves "
                              "is equivalent to " + std::to_string(k) + "L");

    Int m_star = coord_max[0];
    int objective_index = 0;
    for (int i = 1; i < n; ++i)
        if (coord_max[i] > m_star) {
            m_star = coord_max[i];
            objective_index = i;
        }

    bool have_witness = false;
    IntVec witness(static_cast<size_t>(n));
    enumerate([&](const IntVec& a) {
        if (a[objective_index] != m_star) return;
        if (!have_witness || std::lexicographical_compare(a.begin(), a.end(),
                                                          witness.begin(), witness.end())) {
            witness = a;
            have_witness = true;
        }
    });
    return assemble_result(curve_labels, k, m_star, objective_index, witness);
}

CertificateCheck verify_certificate(const SurfaceModel& model,
                                    const EffectiveDivisor& divisor, int k,
                                    const DivisorClass& polarization) {
    if (polarization.basis_id != model.basis_id)
        throw BasisMismatchError(polarization.basis_id, model.basis_id);
    QVec cls = divisor_class_rational(model, divisor.coefficients);
    bool equivalent = true;
    for (int i = 0; i < model.rank(); ++i)
        if (cls[i] != Rat(Int(k) * polarization.coefficients[i])) {
            equivalent = false;
            break;
        }
    return CertificateCheck{equivalent, lct_snc(divisor)};
}

Rat closed_form(int k) {
    if (k < 1) throw ValidationError("k must be positive");
    if (k % 2 == 0) return Rat(1, 8);
    return Rat(Int(k), Int(8) * k - 1);
}

}  // namespace alphacalc
