#include <catch2/catch_amalgamated.hpp>

#include "reflectq/limits.hpp"
#include "reflectq/matrix_io.hpp"
#include "reflectq/scalar_io.hpp"

using namespace reflectq;

namespace {

// one-off check built outside the catalog
LimitCheck adhoc(ScalarMatrix affine, ScalarMatrix target, bool gl11 = false,
                 int pole_order = 1) {
    LimitCheck c;
    c.id = "adhoc";
    c.affine = std::move(affine);
    c.target = std::move(target);
    c.pole_order = pole_order;
    c.exponents[sym("q")] = Scalar::symbol(sym("alpha"));
    Scalar two_u = Scalar(2) * Scalar::symbol(sym("u"));
    c.exponents[sym("z")] = gl11 ? two_u : -two_u;
    return c;
}

}  // namespace

TEST_CASE("every catalogued degeneration check matches at order zero", "[limits]") {
    REQUIRE(limit_check_ids().size() == 14);
    for (const std::string& id : limit_check_ids()) {
        LimitOutcome o = run_limit_check(id);
        INFO(id << ": lhs = " << to_string(o.lhs) << ", rhs = " << to_string(o.rhs));
        REQUIRE(o.match);
        REQUIRE(o.order_checked == 0);
    }
}

TEST_CASE("the level-two checks record the collapsed quadratic correction", "[limits]") {
    for (const char* id : {"sl2-II-Bminus", "sl2-II-Bplus"}) {
        LimitOutcome o = run_limit_check(id);
        REQUIRE(o.match);
        REQUIRE(o.note == "printed alpha^2 correction vanishes at this level");
    }
}

TEST_CASE("degeneration targets keep alpha and t symbolic", "[limits]") {
    LimitOutcome bp = run_limit_check("sl2-I-Bplus");
    // -T(E~-) with both the level tracker and the twist weight visible
    REQUIRE(bp.lhs.at(1, 0) == S("alpha*t - u"));
    REQUIRE(bp.lhs.at(0, 1).is_zero());

    LimitOutcome eh = run_limit_check("appendixA-ehat-plus");
    REQUIRE(eh.lhs.at(0, 2) == S("u + alpha/2"));
    REQUIRE(eh.lhs.at(1, 3) == S("u - alpha/2"));
    REQUIRE(eh.lhs.at(0, 1) == S("v - alpha/2"));
    REQUIRE(eh.lhs.at(2, 3) == S("v + alpha/2"));

    // the group-like Cartan limit lands on half the primitive coproduct
    LimitOutcome ca = run_limit_check("appendixA-cartan");
    ScalarMatrix half = ca.rhs;
    REQUIRE(half.at(0, 0) == S("alpha"));
    REQUIRE(half.at(3, 3) == S("-alpha"));
    REQUIRE(half.at(1, 1).is_zero());
}

TEST_CASE("Lie-level limits of the Chevalley generators", "[limits]") {
    UqRep sl2 = rep_sl2_fund(sym("z"));
    YRep ysl2 = rep_y(YAlgebra::sl2, sym("u"));
    // raising and lowering operators survive the limit on both gauges
    REQUIRE(run_limit_check(adhoc(sl2.mat(Gen::xi1p), ysl2.mat(YGen::Ep))).match);
    REQUIRE(run_limit_check(adhoc(sl2.mat(Gen::xi1m), ysl2.mat(YGen::Em))).match);
    REQUIRE(run_limit_check(adhoc(sl2.mat(Gen::xi0m), ysl2.mat(YGen::Ep))).match);
    REQUIRE(run_limit_check(adhoc(sl2.mat(Gen::xi0p), ysl2.mat(YGen::Em))).match);

    UqRep gl11 = rep_gl11_fund(sym("z"));
    YRep ygl11 = rep_y(YAlgebra::gl11, sym("u"));
    REQUIRE(run_limit_check(adhoc(gl11.mat(Gen::xi1p), ygl11.mat(YGen::Ep), true)).match);
    REQUIRE(run_limit_check(adhoc(gl11.mat(Gen::xi1m), ygl11.mat(YGen::Em), true)).match);
    // the affine pair for gl(1|1) comes back with a flipped sign
    REQUIRE(run_limit_check(adhoc(gl11.mat(Gen::xi0m), -ygl11.mat(YGen::Ep), true)).match);
    REQUIRE(run_limit_check(adhoc(gl11.mat(Gen::xi0p), ygl11.mat(YGen::Em), true)).match);
}

TEST_CASE("poles at h = 0 are reported entry by entry", "[limits]") {
    ScalarMatrix singular(1, 1);
    singular.at(0, 0) = S("1/(q - 1/q)");
    LimitOutcome o = run_limit_check(adhoc(singular, ScalarMatrix(1, 1)));
    REQUIRE_FALSE(o.match);
    REQUIRE(o.note == "pole at h = 0 in entry (0,0), order -1");

    // a finite mismatch is a plain failure without a pole note
    ScalarMatrix one = ScalarMatrix::identity(1);
    LimitOutcome bad = run_limit_check(adhoc(one, ScalarMatrix(1, 1)));
    REQUIRE_FALSE(bad.match);
    REQUIRE(bad.note.empty());
}

TEST_CASE("unknown check ids are rejected with a typed error", "[limits]") {
    REQUIRE_THROWS_AS(run_limit_check("sl2-III-Bplus"), unknown_check);
    REQUIRE_THROWS_AS(make_limit_check("gl11-I-cartan"), unknown_check);
}
