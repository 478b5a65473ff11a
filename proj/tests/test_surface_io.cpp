#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "alphacalc/surface_io.hpp"

using namespace alphacalc;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kDataDir = ALPHACALC_DATA_DIR;

}  // namespace

TEST_CASE("the bundled surface file parses to the built-in construction") {
    std::string text = read_file(kDataDir + "/counterexample.surf");
    SurfaceBundle parsed = parse_surface_spec(text);
    SurfaceBundle builtin = counterexample_surface();
    CHECK(parsed == builtin);
}

TEST_CASE("the bundled surface file is the canonical serialization") {
    std::string text = read_file(kDataDir + "/counterexample.surf");
    CHECK(text == print_surface(counterexample_surface()));
}

TEST_CASE("print then parse is the identity") {
    SurfaceBundle bundle = counterexample_surface();
    std::string printed = print_surface(bundle);
    CHECK(parse_surface_spec(printed) == bundle);

    // Also for a model without report basis or divisors.
    SurfaceModel plain = hirzebruch(0);
    plain = blow_up(plain, BlowUpSpec{{{"Z0", 2}}, "E"});
    SurfaceBundle pb{plain, {}};
    CHECK(parse_surface_spec(print_surface(pb)) == pb);
}

TEST_CASE("comments and blank lines are ignored") {
    SurfaceBundle b = parse_surface_spec(
        "# leading comment\n"
        "\n"
        "base hirzebruch 2   # trailing comment\n"
        "blowup E through Z2  # blow up a point of the 2-section\n");
    CHECK(b.model.rank() == 3);
    CHECK(b.model.curve("E").coefficients == IntVec{Int(0), Int(0), Int(1)});
}

TEST_CASE("blow-up through an undeclared label is a positioned error") {
    try {
        parse_surface_spec("base hirzebruch 2\nblowup E through Nope\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 8);
        CHECK(std::string(e.what()).find("Nope") != std::string::npos);
    }
}

TEST_CASE("duplicate curve labels name the label") {
    try {
        parse_surface_spec("base hirzebruch 2\ncurve F1 = F\ncurve F1 = F\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("F1") != std::string::npos);
    }
}

TEST_CASE("unknown directives and malformed input are rejected") {
    CHECK_THROWS_AS(parse_surface_spec("frobnicate yes\n"), ParseError);
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch two\n"), ParseError);
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch 2\nbase hirzebruch 2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_surface_spec("blowup E\n"), ParseError);  // before base
    CHECK_THROWS_AS(parse_surface_spec(""), ParseError);
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch 2\ncurve X = 1/2 F\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch 2\ndivisor D = F +\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch 2\nblowup E through Z2*0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch 2\nassert\n"), ParseError);
}

TEST_CASE("divisors may use rational coefficients and any declaration point") {
    SurfaceBundle b = parse_surface_spec(
        "base hirzebruch 2\n"
        "divisor D = 9/2 Z2 - 1/2 F\n"
        "blowup E through Z2\n");
    REQUIRE(b.divisors.size() == 1);
    CHECK(b.divisors.front().terms ==
          std::vector<std::pair<std::string, Rat>>{{"Z2", Rat(9, 2)}, {"F", Rat(-1, 2)}});
    // Evaluated on the final surface: Z2 was transformed by the blow-up.
    QVec cls = divisor_class_rational(b.model, b.divisors.front().terms);
    CHECK(cls == QVec{Rat(9, 2), Rat(-1, 2), Rat(-9, 2)});
    CHECK_THROWS_AS(divisor_class(b, "D"), ValidationError);  // not integral
}

TEST_CASE("divisor referencing an unknown curve is an error") {
    CHECK_THROWS_AS(parse_surface_spec("base hirzebruch 2\ndivisor D = Q\n"),
                    ParseError);
}

TEST_CASE("report basis and invariant curve validation happens at parse time") {
    CHECK_THROWS_AS(
        parse_surface_spec("base hirzebruch 2\nreport_basis Z2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_surface_spec("base hirzebruch 2\ninvariant_curves Z2 Z2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_surface_spec("base hirzebruch 2\ninvariant_curves Nope\n"), ParseError);
}

TEST_CASE("multiplicities print and parse") {
    SurfaceModel m = hirzebruch(4);
    m = add_curve(m, "C", {{"Z4", Int(1)}, {"F", Int(2)}});
    // C.Z4 = 4 + 2 = 6 >= 2*3 = 6: a double point of C on a triple-ish
    // contact with Z4 passes the necessary condition.
    m = blow_up(m, BlowUpSpec{{{"C", 2}, {"Z4", 3}}, "E"});
    SurfaceBundle b{m, {}};
    std::string printed = print_surface(b);
    CHECK(printed.find("blowup E through C*2, Z4*3") != std::string::npos);
    CHECK(parse_surface_spec(printed) == b);
}
