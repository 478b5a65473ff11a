#pragma once

#include <string>
#include <vector>

#include "alphacalc/matrix.hpp"

namespace alphacalc {

/// An element of a free abelian lattice, expressed in the basis identified by
/// `basis_id`. Plain copyable value; classes from different bases never mix.
struct DivisorClass {
    std::string basis_id;
    IntVec coefficients;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Int& c, const DivisorClass& a);
bool is_zero(const DivisorClass& a);

/// Symmetric integer bilinear pairing on the lattice tagged by `basis_id`.
struct IntersectionForm {
    std::string basis_id;
    IntMat matrix;

    IntersectionForm() = default;
    IntersectionForm(std::string id, IntMat m);  // validates symmetry

    int rank() const { return matrix.rows; }

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

/// u^T Q v. Throws BasisMismatchError unless u, v and the form agree.
Int pairing(const IntersectionForm& form, const DivisorClass& u, const DivisorClass& v);

/// U*A*V = D with U, V unimodular and D diagonal, nonnegative, each entry
/// dividing the next.
struct SnfDecomposition {
    IntMat u;
    IntMat d;
    IntMat v;
};

SnfDecomposition smith_normal_form(const IntMat& a);

/// Number of nonzero diagonal entries of the Smith form = rank over Q.
int rank_of(const IntMat& a);

/// Complete integer solution set of A x = b: every solution is
/// particular + (integer combination of kernel_basis).
struct IntegerSolution {
    IntVec particular;
    std::vector<IntVec> kernel_basis;
};

/// Throws InfeasibleError when no integer solution exists; the error kind
/// distinguishes rational infeasibility from a congruence obstruction.
IntegerSolution solve_integer_system(const IntMat& a, const IntVec& b);

}  // namespace alphacalc
