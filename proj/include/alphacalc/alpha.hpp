#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphacalc/builder.hpp"
#include "alphacalc/lct.hpp"
#include "alphacalc/simplex.hpp"

namespace alphacalc {

/// maximize a[objective_index] over { a integer >= 0 : A a = rhs,
/// a <= box_upper componentwise where present }. Columns of A are the
/// declared invariant curve classes; rhs is k times the polarization class.
struct IlpProblem {
    IntMat a;
    IntVec rhs;
    int objective_index = 0;
    std::vector<std::optional<Int>> box_upper;
};

/// Exact optimum of the real relaxation (a >= 0, box bounds if present).
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat optimum;
    QVec vertex;  // attains the optimum exactly when status == Optimal
};

struct IlpSolution {
    bool feasible = false;
    Int optimum;
    IntVec witness;
};

/// k, the exact level-k alpha invariant, and a witness divisor achieving it:
/// alpha_k = k / m_star where m_star is the largest coefficient of any
/// effective integer combination of the invariant curves equivalent to k L.
struct AlphaResult {
    int k = 0;
    Rat alpha_k;
    Int m_star;
    EffectiveDivisor witness;
    std::string achieved_by;

    friend bool operator==(const AlphaResult&, const AlphaResult&) = default;
};

/// One problem per objective coordinate, sharing the constraint matrix.
/// Requires the curve classes to span the lattice over the rationals;
/// the reduction to this curve list is not meaningful otherwise.
std::vector<IlpProblem> build_constraints(const SurfaceModel& model,
                                          const std::vector<std::string>& curve_labels,
                                          const DivisorClass& polarization, int k);

LpSolution lp_max(const IlpProblem& problem);

/// Exact integer optimum by best-bound branch-and-bound on the rational
/// relaxation. The feasible region must be bounded; missing box bounds are
/// seeded from lp_max on each coordinate.
IlpSolution ilp_max(const IlpProblem& problem);

/// alpha_k via one ilp_max per coordinate. The witness is the
/// lexicographically smallest optimal vector; among coordinates attaining
/// m_star the first in curve-list order wins.
AlphaResult alpha_k(const SurfaceModel& model,
                    const std::vector<std::string>& curve_labels,
                    const DivisorClass& polarization, int k);

/// Independent verification oracle: enumerates every effective integer
/// combination equivalent to k L (lattice parametrization plus interval
/// propagation over the box bounds) and takes the extremum directly.
/// Refuses k outside its documented range 1..3.
AlphaResult oracle_alpha_k(const SurfaceModel& model,
                           const std::vector<std::string>& curve_labels,
                           const DivisorClass& polarization, int k);

struct CertificateCheck {
    bool equivalent = false;  // does the divisor's class equal k L exactly?
    LctValue lct;
};

CertificateCheck verify_certificate(const SurfaceModel& model,
                                    const EffectiveDivisor& divisor, int k,
                                    const DivisorClass& polarization);

/// The closed form taken by alpha_k on the bundled counterexample surface:
/// 1/8 for even k, k/(8k-1) for odd k.
Rat closed_form(int k);

}  // namespace alphacalc
