#pragma once

// Degeneration checks: the trigonometric coideal constructions turn into
// their rational counterparts under q = e^{alpha h}, z = e^{-2hu} (the
// gl(1|1) tower uses z = e^{+2hu}), with the boundary constant c tied to the
// rational twist weight t through c = q^{-2t} or c = q^{2(t-1/2)}.
//
// Each catalogued check lifts a singular combination of trigonometric
// generators, divided by a power of (q - 1/q), into a truncated series in h,
// demands that every negative order vanishes identically, and compares the
// h^0 coefficient entry by entry against the rational-side matrix with alpha
// and t kept symbolic.

#include <map>
#include <string>
#include <vector>

#include "reflectq/hseries.hpp"
#include "reflectq/uqaff.hpp"
#include "reflectq/yang.hpp"

namespace reflectq {

struct unknown_check : error {
    explicit unknown_check(const std::string& what) : error(what) {}
};

struct LimitCheck {
    std::string id;
    ScalarMatrix affine;  // the full combination, poles at h = 0 and all
    int pole_order = 1;   // powers of (q - 1/q) divided out
    std::map<Symbol, Scalar> exponents;  // symbol -> gamma, bound as e^{gamma h}
    ScalarMatrix target;                 // rational-side matrix
    std::string note;
};

struct LimitOutcome {
    std::string check;
    bool match = false;
    int order_checked = 0;  // the series order compared; 0 is the limit itself
    ScalarMatrix lhs;       // h^0 coefficient of the lifted combination
    ScalarMatrix rhs;
    std::string note;
};

inline const std::vector<std::string>& limit_check_ids() {
    static const std::vector<std::string> ids = {
        "sl2-I-Bplus",       "sl2-I-Bminus",     "sl2-I-cartan",
        "sl2-II-Bminus",     "sl2-II-Bplus",     "gl11-I-Bplus",
        "gl11-I-Bminus",     "gl11-I-cartan-h",  "gl11-I-cartan-h2",
        "appendixA-xi-plus", "appendixA-xi-minus", "appendixA-cartan",
        "appendixA-ehat-plus", "appendixA-ehat-minus"};
    return ids;
}

namespace ldetail {

inline Scalar alpha() { return Scalar::symbol(sym("alpha")); }
inline Scalar qgap() { return S("q - 1/q"); }

// exponent recipes shared by the catalog
inline std::map<Symbol, Scalar> trig_exponents(bool gl11, bool with_w = false) {
    std::map<Symbol, Scalar> e;
    e[sym("q")] = alpha();
    Scalar two_u = Scalar(2) * Scalar::symbol(sym("u"));
    e[sym("z")] = gl11 ? two_u : -two_u;
    if (with_w) e[sym("w")] = Scalar(-2) * Scalar::symbol(sym("v"));
    return e;
}

// the singlet boundary constant in terms of the rational twist weight
inline Scalar c_exponent(bool gl11) {
    Scalar t = Scalar::symbol(sym("t"));
    return gl11 ? Scalar(2) * (t - S("1/2")) * alpha() : Scalar(-2) * t * alpha();
}

inline std::map<Symbol, Scalar> b1_params() {
    return {{sym("dp"), S("c/q")}, {sym("dm"), S("q*c")}};
}
inline std::map<Symbol, Scalar> b2_params() {
    return {{sym("dp"), S("1/(q^3 + q)")}, {sym("dm"), S("q^3/(q^2 + 1)")}};
}
inline std::map<Symbol, Scalar> b5_params() {
    return {{sym("dp"), S("q*c")}, {sym("dm"), S("-q*c")}};
}

}  // namespace ldetail

inline LimitCheck make_limit_check(const std::string& id) {
    using namespace ldetail;
    LimitCheck c;
    c.id = id;
    Scalar al = alpha();
    Scalar gap = qgap();

    if (id == "sl2-I-Bplus" || id == "sl2-I-Bminus" || id == "sl2-I-cartan") {
        UqRep rep = rep_sl2_fund(sym("z"));
        YRep yrep = rep_y(YAlgebra::sl2, sym("u"));
        c.exponents = trig_exponents(false);
        if (id == "sl2-I-cartan") {
            c.affine = (ScalarMatrix::identity(2) - rep.mat(Gen::k0) * rep.mat(Gen::k1i))
                           .scaled(gap.inverse());
            c.target = yrep.mat(YGen::H);
            return c;
        }
        c.exponents[sym("c")] = c_exponent(false);
        if (id == "sl2-I-Bplus") {
            c.affine = twisted_generator(TwistCase::B1, Gen::B0p, rep, b1_params())
                           .scaled(al * S("q^2") * gap.inverse());
            c.target = -twisted_y_generator(YAlgebra::sl2, YGen::Etm, yrep, al);
        } else {
            c.affine = twisted_generator(TwistCase::B1, Gen::B0m, rep, b1_params())
                           .scaled(al * gap.inverse());
            c.target = twisted_y_generator(YAlgebra::sl2, YGen::Etp, yrep, al);
        }
        return c;
    }

    if (id == "sl2-II-Bminus" || id == "sl2-II-Bplus") {
        UqRep rep = rep_sl2_fund(sym("z"));
        YRep yrep = rep_y(YAlgebra::sl2, sym("u"));
        c.exponents = trig_exponents(false);
        c.pole_order = 2;
        // the level-one combinations carry one power of alpha; this is the
        // level-two analog, so two powers keep the level bookkeeping honest
        Scalar gap2 = al * al * (gap * gap).inverse();
        ScalarMatrix correction;
        if (id == "sl2-II-Bminus") {
            // q^-2 B0- minus twice the primed Chevalley raiser k1^-1 xi1+
            ScalarMatrix primed = rep.mat(Gen::k1i) * rep.mat(Gen::xi1p);
            c.affine = (twisted_generator(TwistCase::B2, Gen::B0m, rep, b2_params())
                            .scaled(S("1/q^2")) -
                        primed.scaled(Scalar(2)))
                           .scaled(gap2);
            c.target = twisted_y_generator(YAlgebra::sl2, YGen::Ettp, yrep, al)
                           .substitute(sym("t"), Scalar(-2));
            ScalarMatrix shifted = ScalarMatrix::identity(2) + yrep.mat(YGen::H);
            correction = yrep.mat(YGen::Ep) * shifted * shifted;
        } else {
            c.affine = (twisted_generator(TwistCase::B2, Gen::B0p, rep, b2_params())
                            .scaled(S("q^2")) -
                        rep.mat(Gen::xi1m).scaled(Scalar(2)))
                           .scaled(gap2);
            c.target = twisted_y_generator(YAlgebra::sl2, YGen::Ettm, yrep, al)
                           .substitute(sym("t"), Scalar(-2));
            ScalarMatrix shifted = ScalarMatrix::identity(2) - yrep.mat(YGen::H);
            correction = yrep.mat(YGen::Em) * shifted * shifted;
        }
        // the quadratic correction printed next to the target collapses in the
        // fundamental representation, so the 1/4 and 1/8 prefactor variants
        // are indistinguishable here; the target above is the full value
        c.note = correction.is_zero() ? "printed alpha^2 correction vanishes at this level"
                                      : "printed alpha^2 correction is nonzero";
        return c;
    }

    if (id.rfind("gl11-I-", 0) == 0) {
        UqRep rep = rep_gl11_fund(sym("z"));
        YRep yrep = rep_y(YAlgebra::gl11, sym("u"));
        c.exponents = trig_exponents(true);
        if (id == "gl11-I-cartan-h") {
            c.affine = (ScalarMatrix::identity(2) - rep.mat(Gen::k0) * rep.mat(Gen::k1i))
                           .scaled(gap.inverse());
            c.target = yrep.mat(YGen::H);
            return c;
        }
        if (id == "gl11-I-cartan-h2") {
            c.affine = (rep.mat(Gen::k2) * rep.mat(Gen::k2) - ScalarMatrix::identity(2))
                           .scaled(gap.inverse());
            c.target = yrep.mat(YGen::H2);
            return c;
        }
        c.exponents[sym("c")] = c_exponent(true);
        if (id == "gl11-I-Bplus") {
            c.affine = twisted_generator(TwistCase::B5, Gen::B0p, rep, b5_params())
                           .scaled(al * gap.inverse());
            c.target = twisted_y_generator(YAlgebra::gl11, YGen::Etm, yrep, al);
            return c;
        }
        if (id == "gl11-I-Bminus") {
            c.affine = twisted_generator(TwistCase::B5, Gen::B0m, rep, b5_params())
                           .scaled(al * gap.inverse());
            c.target = twisted_y_generator(YAlgebra::gl11, YGen::Etp, yrep, al);
            return c;
        }
        throw unknown_check("unknown limit check " + id);
    }

    if (id.rfind("appendixA-", 0) == 0) {
        UqRep repz = rep_sl2_fund(sym("z"));
        YRep yu = rep_y(YAlgebra::sl2, sym("u"));
        if (id == "appendixA-xi-plus" || id == "appendixA-xi-minus") {
            c.exponents = trig_exponents(false);
            if (id == "appendixA-xi-plus") {
                c.affine = (repz.mat(Gen::xi0m) - repz.mat(Gen::xi1p)).scaled(al * gap.inverse());
                c.target = yu.mat(YGen::Ehp);
            } else {
                c.affine =
                    (repz.mat(Gen::xi0p) - repz.mat(Gen::xi1m)).scaled(-al * gap.inverse());
                c.target = yu.mat(YGen::Ehm);
            }
            return c;
        }
        // tensor-square checks on T_z (x) T_w against T_u (x) T_v
        UqRep repw = rep_sl2_fund(sym("w"));
        YRep yv = rep_y(YAlgebra::sl2, sym("v"));
        c.exponents = trig_exponents(false, true);
        auto ev = [&](Gen g) {
            return eval_coproduct(UqAlgebra::sl2, coproduct(UqAlgebra::sl2, g), repz, repw);
        };
        auto yv_ev = [&](YGen g) {
            return eval_y_coproduct(YAlgebra::sl2, y_coproduct(YAlgebra::sl2, g), yu, yv, al);
        };
        if (id == "appendixA-cartan") {
            // limit of the group-like k1 (x) k1 is half the primitive H rule
            c.affine = (ev(Gen::k1) - ScalarMatrix::identity(4)).scaled(al * gap.inverse());
            c.target = yv_ev(YGen::H).scaled(al * S("1/2"));
            return c;
        }
        if (id == "appendixA-ehat-plus") {
            c.affine = (ev(Gen::xi0m) - ev(Gen::xi1p)).scaled(al * gap.inverse());
            c.target = yv_ev(YGen::Ehp);
            return c;
        }
        if (id == "appendixA-ehat-minus") {
            c.affine = (ev(Gen::xi0p) - ev(Gen::xi1m)).scaled(-al * gap.inverse());
            c.target = yv_ev(YGen::Ehm);
            return c;
        }
    }
    throw unknown_check("unknown limit check " + id);
}

// lift the combination, require all negative orders to vanish, and compare
// the h^0 coefficient against the rational side; trunc widens the sound
// series window beyond what the check itself needs
inline LimitOutcome run_limit_check(const LimitCheck& c, int trunc = 0) {
    LimitOutcome out;
    out.check = c.id;
    out.rhs = c.target;
    out.note = c.note;
    int window = (trunc < 0 ? 0 : trunc) + 2 * c.pole_order + 1;
    std::map<Symbol, HSeries> bind;
    for (const auto& [s, gamma] : c.exponents) bind[s] = exp_linear(gamma, window);
    out.lhs = ScalarMatrix(c.affine.rows(), c.affine.cols());
    bool finite = true;
    for (size_t i = 0; i < c.affine.rows(); ++i)
        for (size_t j = 0; j < c.affine.cols(); ++j) {
            HSeries s = lift(c.affine.at(i, j), bind, window);
            for (int o = std::min(s.order(), 0); o < 0; ++o)
                if (!s.coeff(o).is_zero()) {
                    finite = false;
                    out.note = "pole at h = 0 in entry (" + std::to_string(i) + "," +
                               std::to_string(j) + "), order " + std::to_string(o);
                }
            out.lhs.at(i, j) = s.coeff(0);
        }
    out.match = finite && out.lhs == out.rhs;
    return out;
}

inline LimitOutcome run_limit_check(const std::string& id, int trunc = 0) {
    return run_limit_check(make_limit_check(id), trunc);
}

}  // namespace reflectq
