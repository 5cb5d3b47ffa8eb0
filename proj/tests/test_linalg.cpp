#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reflectq/linalg.hpp"
#include "reflectq/matrix_io.hpp"

using namespace reflectq;

namespace {

const Grading gl11 = {0, 1};  // v1 even, v2 odd
const Grading sl2 = {0, 0};

ScalarMatrix diag2(const Scalar& a, const Scalar& b) {
    ScalarMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

ScalarMatrix random_matrix(std::mt19937& rng, size_t rows, size_t cols) {
    std::uniform_int_distribution<int> co(-3, 3), ex(0, 2);
    ScalarMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            LaurentPoly p;
            p.add_term({ex(rng)}, Rat(co(rng)));
            p.add_term({0, ex(rng)}, Rat(co(rng)));
            m.at(i, j) = Scalar::from_poly(p);
        }
    return m;
}

}  // namespace

TEST_CASE("graded tensor reduces to the plain Kronecker product when even") {
    ScalarMatrix i2 = ScalarMatrix::identity(2);
    REQUIRE(kron_graded(i2, 0, i2, 0, sl2, sl2) == ScalarMatrix::identity(4));

    std::mt19937 rng(31);
    ScalarMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    ScalarMatrix k = kron(a, b);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k1 = 0; k1 < 2; ++k1)
                for (size_t l = 0; l < 2; ++l)
                    REQUIRE(k.at(i * 2 + k1, j * 2 + l) == a.at(i, j) * b.at(k1, l));
}

TEST_CASE("graded coproduct matrices match the superalgebra tables") {
    Scalar q = S("q");
    // odd Chevalley raising generator and the group-like in the defining rep
    ScalarMatrix e_plus = ScalarMatrix::unit(2, 2, 0, 1);
    ScalarMatrix kq = diag2(q, q);  // k acts by q on both basis vectors

    // Delta(xi+) = xi+ (x) 1 + k (x) xi+, evaluated with the Koszul sign
    ScalarMatrix d = kron_graded(e_plus, 1, ScalarMatrix::identity(2), 0, gl11, gl11) +
                     kron_graded(kq, 0, e_plus, 1, gl11, gl11);
    ScalarMatrix want(4, 4);
    want.at(0, 1) = q;
    want.at(0, 2) = Scalar(1);
    want.at(1, 3) = Scalar(1);
    want.at(2, 3) = -q;
    REQUIRE(d == want);

    // ungraded sl2 counterpart: Delta(xi-) = xi- (x) k^-1 + 1 (x) xi-
    ScalarMatrix f = ScalarMatrix::unit(2, 2, 1, 0);
    ScalarMatrix k1 = diag2(q, q.inverse());
    ScalarMatrix ds = kron(f, diag2(q.inverse(), q)) + kron(ScalarMatrix::identity(2), f);
    ScalarMatrix want2(4, 4);
    want2.at(1, 0) = Scalar(1);
    want2.at(2, 0) = q.inverse();
    want2.at(3, 1) = q;
    want2.at(3, 2) = Scalar(1);
    REQUIRE(ds == want2);
    REQUIRE(k1.at(0, 0) == q);  // convention guard: entry (r,c) multiplies v_c
}

TEST_CASE("Koszul sign coherence on homogeneous operators") {
    ScalarMatrix i2 = ScalarMatrix::identity(2);
    ScalarMatrix e = ScalarMatrix::unit(2, 2, 0, 1);   // odd
    ScalarMatrix f = ScalarMatrix::unit(2, 2, 1, 0);   // odd
    ScalarMatrix h = diag2(S("q"), S("q^-1"));         // even

    auto tensor = [&](const ScalarMatrix& a, int pa, const ScalarMatrix& b, int pb) {
        return kron_graded(a, pa, b, pb, gl11, gl11);
    };

    // (a (x) 1)(1 (x) b) = a (x) b, both orders, up to (-1)^{pa pb}
    REQUIRE(tensor(e, 1, i2, 0) * tensor(i2, 0, f, 1) == tensor(e, 1, f, 1));
    REQUIRE(tensor(i2, 0, f, 1) * tensor(e, 1, i2, 0) == tensor(e, 1, f, 1).scaled(Scalar(-1)));
    REQUIRE(tensor(h, 0, i2, 0) * tensor(i2, 0, e, 1) == tensor(h, 0, e, 1));
    REQUIRE(tensor(i2, 0, e, 1) * tensor(h, 0, i2, 0) == tensor(h, 0, e, 1));

    // graded flip squares to the identity
    ScalarMatrix p = graded_perm(gl11, gl11);
    REQUIRE(p * p == ScalarMatrix::identity(4));
    REQUIRE(p.at(3, 3) == Scalar(-1));
}

TEST_CASE("nullspace over the fraction field") {
    REQUIRE(nullspace(ScalarMatrix::identity(2)).empty());

    ScalarMatrix m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = S("q");
    m.at(1, 0) = S("q^-1");
    m.at(1, 1) = Scalar(1);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis[0].at(0, 0) == S("q"));
    REQUIRE(basis[0].at(1, 0) == Scalar(-1));
    REQUIRE((m * basis[0]).is_zero());

    // Cartan-only singlet system: K commutes with diag(q, q^-1), so K is diagonal
    ScalarMatrix cartan = diag2(S("q"), S("q^-1"));
    auto diag_basis = nullspace(intertwiner_system(cartan, cartan));
    REQUIRE(diag_basis.size() == 2);
    for (auto& v : diag_basis) {
        REQUIRE(v.at(1, 0).is_zero());  // off-diagonal slots of vec(K)
        REQUIRE(v.at(2, 0).is_zero());
    }
}

TEST_CASE("rank plus nullity is the column count and kernel vectors annihilate") {
    std::mt19937 rng(77);
    for (int it = 0; it < 12; ++it) {
        ScalarMatrix m = random_matrix(rng, 4, 6);
        auto basis = nullspace(m);
        REQUIRE(rank(m) + basis.size() == m.cols());
        for (auto& v : basis) {
            REQUIRE((m * v).is_zero());
            // normalization: polynomial entries, first nonzero leads positive
            size_t lead = v.rows();
            for (size_t i = 0; i < v.rows(); ++i) {
                REQUIRE(v.at(i, 0).den().is_one());
                if (lead == v.rows() && !v.at(i, 0).is_zero()) lead = i;
            }
            REQUIRE(lead < v.rows());
            REQUIRE(v.at(lead, 0).num().leading_coeff() > 0);
        }
    }
}

TEST_CASE("parameter constraints reproduce the boundary-style eliminations") {
    // Singlet boundary system for the quantum affine sl2 coideal: unknown
    // K = diag-dominant 2x2, Cartan row forces diagonality, and the two
    // twisted-generator rows pin d+ q = d- / q to a common free constant.
    Scalar q = S("q"), z = S("z"), dp = S("dp"), dm = S("dm");
    ScalarMatrix cartan = diag2(S("q^-2"), S("q^2"));

    auto lower = [&](const Scalar& coeff) { return ScalarMatrix::unit(2, 2, 1, 0, coeff); };
    auto upper = [&](const Scalar& coeff) { return ScalarMatrix::unit(2, 2, 0, 1, coeff); };

    Scalar qm2 = S("q^-2");
    ScalarMatrix bplus_z = lower(qm2 * (z - q * dp));
    ScalarMatrix bplus_zbar = lower(qm2 * (z.inverse() - q * dp));
    ScalarMatrix bminus_z = upper(q * z.inverse() - dm);
    ScalarMatrix bminus_zbar = upper(q * z - dm);

    auto stack = [](std::initializer_list<ScalarMatrix> blocks) {
        size_t rows = 0, cols = 0;
        for (auto& b : blocks) {
            rows += b.rows();
            cols = b.cols();
        }
        ScalarMatrix m(rows, cols);
        size_t at = 0;
        for (auto& b : blocks) {
            for (size_t i = 0; i < b.rows(); ++i)
                for (size_t j = 0; j < b.cols(); ++j) m.at(at + i, j) = b.at(i, j);
            at += b.rows();
        }
        return m;
    };

    ScalarMatrix system = stack({intertwiner_system(cartan, cartan),
                                 intertwiner_system(bplus_zbar, bplus_z),
                                 intertwiner_system(bminus_zbar, bminus_z)});

    std::map<Symbol, Scalar> gauge{{sym("c"), q * dp}};
    auto report = param_constraints(system, {sym("dp"), sym("dm")}, 1, gauge);

    REQUIRE(report.residual.empty());
    REQUIRE(report.achieved_nullity == 1);
    REQUIRE(report.bindings.at(sym("dp")) == S("c/q"));
    REQUIRE(report.bindings.at(sym("dm")) == S("c*q"));
    REQUIRE(report.gauge_symbols == std::vector<Symbol>{sym("c")});

    // with the bindings in place the kernel is the known K-matrix
    auto kvec = nullspace(system.substitute(report.bindings));
    REQUIRE(kvec.size() == 1);
    Scalar k11 = kvec[0].at(0, 0), k22 = kvec[0].at(3, 0);
    REQUIRE(kvec[0].at(1, 0).is_zero());
    REQUIRE(kvec[0].at(2, 0).is_zero());
    REQUIRE(k22 / k11 == S("(c - z^-1)/(c - z)"));

    // inconsistency: a parameter-free contradictory row
    ScalarMatrix bad(1, 4);
    bad.at(0, 1) = Scalar(1);
    ScalarMatrix forced = stack({system, bad});
    // still fine: that row only kills an off-diagonal slot
    REQUIRE(param_constraints(forced, {sym("dp"), sym("dm")}, 1, gauge).achieved_nullity == 1);

    // underdetermined: ask for more kernel than the param-free block allows
    REQUIRE_THROWS_AS(param_constraints(system, {sym("dp"), sym("dm")}, 3, gauge),
                      underdetermined_system);
}

TEST_CASE("matrix json round-trips exactly") {
    ScalarMatrix k = diag2(Scalar(1), S("(c - z^-1)/(c - z)"));
    nlohmann::json j = matrix_to_json(k);
    REQUIRE(j["rows"] == 2);
    REQUIRE(j["entries"][1][1] == "(c - z^-1)/(c - z)");
    REQUIRE(matrix_from_json(j) == k);
    REQUIRE(matrix_from_json(nlohmann::json::parse(j.dump())) == k);
}
