#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alphacalc/builder.hpp"
#include "alphacalc/lattice.hpp"

using namespace alphacalc;

namespace {

IntMat random_matrix(std::mt19937& rng, int max_rows, int max_cols, int entry_bound) {
    std::uniform_int_distribution<int> rows(1, max_rows), cols(1, max_cols);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    IntMat a(rows(rng), cols(rng));
    for (auto& x : a.data) x = entry(rng);
    return a;
}

void check_snf_certificate(const IntMat& a, const SnfDecomposition& snf) {
    REQUIRE(mul(mul(snf.u, a), snf.v) == snf.d);
    Int du = determinant(snf.u);
    Int dv = determinant(snf.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < n; ++i) CHECK(snf.d.at(i, i) >= 0);
    for (int i = 0; i < snf.d.rows; ++i)
        for (int j = 0; j < snf.d.cols; ++j)
            if (i != j) CHECK(snf.d.at(i, j) == 0);
    // divisibility chain (d_i | d_{i+1}; anything divides 0)
    for (int i = 0; i + 1 < n; ++i) {
        Int di = snf.d.at(i, i), dj = snf.d.at(i + 1, i + 1);
        if (di == 0)
            CHECK(dj == 0);
        else
            CHECK(dj % di == 0);
    }
}

}  // namespace

TEST_CASE("pairing on the counterexample surface matches the known table") {
    SurfaceBundle bundle = counterexample_surface();
    const SurfaceModel& m = bundle.model;
    CHECK(pairing(m.form, m.curve("Zt2"), m.curve("Zt2")) == -2);
    CHECK(pairing(m.form, divisor_class(bundle, "L"), m.curve("Ft")) == 4);

    DivisorClass zero{m.basis_id, IntVec(8, Int(0))};
    CHECK(pairing(m.form, zero, m.curve("E1")) == 0);
}

TEST_CASE("pairing rejects mismatched bases") {
    SurfaceModel f2 = hirzebruch(2);
    SurfaceModel f3 = hirzebruch(3);
    try {
        pairing(f2.form, f2.curve("Z2"), f3.curve("Z3"));
        FAIL("expected BasisMismatchError");
    } catch (const BasisMismatchError& e) {
        std::string msg = e.what();
        CHECK(msg.find("F2") != std::string::npos);
        CHECK(msg.find("F3") != std::string::npos);
    }
    CHECK_THROWS_AS(f2.curve("Z2") + f3.curve("Z3"), BasisMismatchError);
    CHECK_THROWS_AS(f2.curve("Z2") - f3.curve("F"), BasisMismatchError);
}

TEST_CASE("pairing is symmetric and bilinear on random vectors") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-9, 9);
    SurfaceModel m = counterexample_surface().model;
    const int n = m.rank();
    auto rand_class = [&] {
        DivisorClass c{m.basis_id, IntVec(static_cast<size_t>(n))};
        for (auto& x : c.coefficients) x = entry(rng);
        return c;
    };
    for (int iter = 0; iter < 1000; ++iter) {
        DivisorClass u = rand_class(), v = rand_class(), w = rand_class();
        CHECK(pairing(m.form, u, v) == pairing(m.form, v, u));
        CHECK(pairing(m.form, u + w, v) == pairing(m.form, u, v) + pairing(m.form, w, v));
    }
}

TEST_CASE("smith normal form of the identity is trivial") {
    IntMat id = IntMat::identity(4);
    SnfDecomposition snf = smith_normal_form(id);
    CHECK(snf.u == id);
    CHECK(snf.v == id);
    CHECK(snf.d == id);
}

TEST_CASE("smith normal form normalizes signs via a unimodular factor") {
    IntMat a(1, 1, {Int(-3)});
    SnfDecomposition snf = smith_normal_form(a);
    CHECK(snf.d.at(0, 0) == 3);
    check_snf_certificate(a, snf);
}

TEST_CASE("smith normal form of ((2,4),(6,8)) is diag(2,4)") {
    IntMat a(2, 2, {Int(2), Int(4), Int(6), Int(8)});
    SnfDecomposition snf = smith_normal_form(a);
    CHECK(snf.d.at(0, 0) == 2);
    CHECK(snf.d.at(1, 1) == 4);
    check_snf_certificate(a, snf);
}

TEST_CASE("smith normal form certificate holds on random matrices") {
    std::mt19937 rng(911);
    for (int iter = 0; iter < 1000; ++iter) {
        IntMat a = random_matrix(rng, 8, 12, 9);
        check_snf_certificate(a, smith_normal_form(a));
    }
}

TEST_CASE("solve_integer_system with identity matrix") {
    IntMat a = IntMat::identity(3);
    IntVec b{Int(4), Int(-1), Int(7)};
    IntegerSolution sol = solve_integer_system(a, b);
    CHECK(sol.particular == b);
    CHECK(sol.kernel_basis.empty());
}

TEST_CASE("solve_integer_system flags a parity obstruction") {
    IntMat a(1, 1, {Int(2)});
    try {
        solve_integer_system(a, {Int(1)});
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.kind == InfeasibleError::Kind::CongruenceObstruction);
    }
}

TEST_CASE("solve_integer_system flags rational infeasibility") {
    // x = 1 and x = 2 cannot both hold.
    IntMat a(2, 1, {Int(1), Int(1)});
    try {
        solve_integer_system(a, {Int(1), Int(2)});
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.kind == InfeasibleError::Kind::RationalInfeasible);
    }
}

TEST_CASE("solutions round-trip: A(particular + K t) = b") {
    std::mt19937 rng(1723);
    std::uniform_int_distribution<int> entry(-4, 4);
    int solved = 0;
    for (int iter = 0; iter < 400 && solved < 120; ++iter) {
        IntMat a = random_matrix(rng, 5, 6, 5);
        // Build b from a random solution so the system is feasible.
        IntVec x0(static_cast<size_t>(a.cols));
        for (auto& x : x0) x = entry(rng);
        IntVec b = mul(a, x0);
        IntegerSolution sol = solve_integer_system(a, b);
        ++solved;
        REQUIRE(mul(a, sol.particular) == b);
        IntVec x = sol.particular;
        for (const auto& kvec : sol.kernel_basis) {
            Int t = entry(rng);
            for (size_t i = 0; i < x.size(); ++i) x[i] += t * kvec[i];
        }
        CHECK(mul(a, x) == b);
        // Kernel basis must actually be in the kernel.
        for (const auto& kvec : sol.kernel_basis) {
            IntVec ak = mul(a, kvec);
            for (const auto& v : ak) CHECK(v == 0);
        }
    }
    CHECK(solved >= 120);
}

TEST_CASE("infeasibility is sound: brute force finds nothing either") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> entry(-3, 3);
    int infeasible_seen = 0;
    for (int iter = 0; iter < 600; ++iter) {
        IntMat a = random_matrix(rng, 3, 3, 3);
        IntVec b(static_cast<size_t>(a.rows));
        for (auto& v : b) v = entry(rng);
        bool infeasible = false;
        try {
            IntegerSolution sol = solve_integer_system(a, b);
            CHECK(mul(a, sol.particular) == b);
        } catch (const InfeasibleError&) {
            infeasible = true;
        }
        if (!infeasible) continue;
        ++infeasible_seen;
        const int bound = 9;
        IntVec x(static_cast<size_t>(a.cols), Int(-bound));
        bool found = false;
        for (;;) {
            if (mul(a, x) == b) { found = true; break; }
            int j = 0;
            while (j < a.cols && x[j] == bound) x[j++] = -bound;
            if (j == a.cols) break;
            ++x[j];
        }
        CHECK_FALSE(found);
    }
    CHECK(infeasible_seen > 20);
}

TEST_CASE("kernel of the counterexample constraint matrix has rank 4") {
    SurfaceBundle bundle = counterexample_surface();
    const SurfaceModel& m = bundle.model;
    const auto& labels = m.invariant_curves;
    REQUIRE(labels.size() == 12);
    IntMat a(m.rank(), 12);
    for (int j = 0; j < 12; ++j) {
        const DivisorClass& c = m.curve(labels[j]);
        for (int i = 0; i < m.rank(); ++i) a.at(i, j) = c.coefficients[i];
    }
    DivisorClass l = divisor_class(bundle, "L");
    IntegerSolution sol = solve_integer_system(a, l.coefficients);
    CHECK(sol.kernel_basis.size() == 4);
    CHECK(mul(a, sol.particular) == l.coefficients);

    // The polarization's own support gives one solution: the general-fiber
    // part folds into Et4 + Ft4.
    IntVec defining{Int(2), Int(2), Int(1), Int(1), Int(0), Int(3),
                    Int(1), Int(1), Int(0), Int(3), Int(1), Int(1)};
    CHECK(mul(a, defining) == l.coefficients);
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
    IntMat a(3, 3, {Int(2), Int(0), Int(1), Int(-1), Int(3), Int(2), Int(0), Int(5), Int(-2)});
    // 2*(3*-2 - 2*5) - 0 + 1*(-5 - 0) = 2*(-16) + (-5) = -37
    CHECK(determinant(a) == -37);
    CHECK(determinant(IntMat::identity(5)) == 1);
    IntMat singular(2, 2, {Int(1), Int(2), Int(2), Int(4)});
    CHECK(determinant(singular) == 0);
}
