#pragma once

// Yangians Y(sl(2)) and Y(gl(1|1)): the 2-dimensional evaluation
// representations, coproducts of the level-zero and level-one generators, and
// the twisted generators of type I (degree one) and type II (degree two).

#include <map>
#include <string>
#include <vector>

#include "reflectq/errors.hpp"
#include "reflectq/matrix.hpp"
#include "reflectq/scalar.hpp"
#include "reflectq/symbols.hpp"
#include "reflectq/uqaff.hpp"  // unknown_generator, kron_grading
#include "reflectq/words.hpp"

namespace reflectq {

enum class YAlgebra { sl2, gl11 };

enum class YGen {
    Ep,
    Em,
    H,
    H2,   // gl(1|1) only
    Ehp,  // level one
    Ehm,
    Hh,
    Hh2,   // gl(1|1) only
    Etp,   // type I twisted
    Etm,
    Ettp,  // type II twisted
    Ettm,
    Htt,
    unit
};

inline std::string ygen_name(YGen g) {
    switch (g) {
        case YGen::Ep: return "E+";
        case YGen::Em: return "E-";
        case YGen::H: return "H";
        case YGen::H2: return "H2";
        case YGen::Ehp: return "E^+";
        case YGen::Ehm: return "E^-";
        case YGen::Hh: return "H^";
        case YGen::Hh2: return "H2^";
        case YGen::Etp: return "E~+";
        case YGen::Etm: return "E~-";
        case YGen::Ettp: return "E~~+";
        case YGen::Ettm: return "E~~-";
        case YGen::Htt: return "H~~";
        case YGen::unit: return "1";
    }
    return "?";
}

inline int ygen_parity(YAlgebra alg, YGen g) {
    if (alg == YAlgebra::sl2) return 0;
    switch (g) {
        case YGen::Ep:
        case YGen::Em:
        case YGen::Ehp:
        case YGen::Ehm:
        case YGen::Etp:
        case YGen::Etm:
        case YGen::Ettp:
        case YGen::Ettm: return 1;
        default: return 0;
    }
}

struct YRep {
    YAlgebra algebra = YAlgebra::sl2;
    Symbol spectral = 0;
    Grading grading;
    std::map<YGen, ScalarMatrix> mats;

    std::size_t dim() const { return grading.size(); }
    bool has(YGen g) const { return mats.count(g) != 0; }
    const ScalarMatrix& mat(YGen g) const {
        auto it = mats.find(g);
        if (it == mats.end())
            throw unknown_generator("no matrix for generator " + ygen_name(g));
        return it->second;
    }
};

// evaluation representation on C^2 (sl2) or C^{1|1} (gl11); the level-one
// generators act as the spectral parameter times their level-zero partners
inline YRep rep_y(YAlgebra alg, Symbol spectral = sym("u")) {
    YRep r;
    r.algebra = alg;
    r.spectral = spectral;
    Scalar u = Scalar::symbol(spectral);
    ScalarMatrix ep = ScalarMatrix::unit(2, 2, 0, 1);
    ScalarMatrix em = ScalarMatrix::unit(2, 2, 1, 0);
    ScalarMatrix hd(2, 2);
    hd.at(0, 0) = Scalar(1);
    hd.at(1, 1) = Scalar(-1);
    r.mats[YGen::Ep] = ep;
    r.mats[YGen::Em] = em;
    r.mats[YGen::Ehp] = ep.scaled(u);
    r.mats[YGen::Ehm] = em.scaled(u);
    r.mats[YGen::unit] = ScalarMatrix::identity(2);
    if (alg == YAlgebra::sl2) {
        r.grading = {0, 0};
        r.mats[YGen::H] = hd;
        r.mats[YGen::Hh] = hd.scaled(u);
    } else {
        r.grading = {0, 1};
        r.mats[YGen::H] = ScalarMatrix::identity(2);
        r.mats[YGen::H2] = hd;
        r.mats[YGen::Hh] = ScalarMatrix::identity(2).scaled(u);
        r.mats[YGen::Hh2] = hd.scaled(u);
    }
    return r;
}

namespace ydetail {
inline Scalar alpha() { return Scalar::symbol("alpha"); }
inline Scalar tsym() { return Scalar::symbol("t"); }
}  // namespace ydetail

// defining word of a twisted generator, with t and alpha symbolic; the type
// is read off from the generator name, the algebra fixes the variant
inline Expr<YGen> twisted_y_expression(YAlgebra alg, YGen which) {
    using ydetail::alpha;
    using ydetail::tsym;
    Scalar a = alpha(), t = tsym();
    Scalar half = Scalar(1) / Scalar(2), quarter = Scalar(1) / Scalar(4);
    auto par = [alg](YGen g) { return ygen_parity(alg, g); };
    switch (which) {
        case YGen::Etp:
            if (alg == YAlgebra::sl2)
                // E~+ = E^+ + a t E+ + (a/4)(E+ H + H E+)
                return expr_gen(YGen::Ehp) + scaled(expr_gen(YGen::Ep), a * t) +
                       scaled(expr_word<YGen>({YGen::Ep, YGen::H}) +
                                  expr_word<YGen>({YGen::H, YGen::Ep}),
                              a * quarter);
            // gl(1|1): E~+ = E^+ + a t E+ - (a/2) H E+
            return expr_gen(YGen::Ehp) + scaled(expr_gen(YGen::Ep), a * t) -
                   scaled(expr_word<YGen>({YGen::H, YGen::Ep}), a * half);
        case YGen::Etm:
            if (alg == YAlgebra::sl2)
                return expr_gen(YGen::Ehm) - scaled(expr_gen(YGen::Em), a * t) -
                       scaled(expr_word<YGen>({YGen::Em, YGen::H}) +
                                  expr_word<YGen>({YGen::H, YGen::Em}),
                              a * quarter);
            return expr_gen(YGen::Ehm) - scaled(expr_gen(YGen::Em), a * t) +
                   scaled(expr_word<YGen>({YGen::H, YGen::Em}), a * half);
        case YGen::Ettp: {
            if (alg == YAlgebra::sl2) {
                // E~~+ = (1/2)([H^, E^+] + a(t E^+ + H E^+ - E+ H^))
                Expr<YGen> e = graded_bracket(expr_gen(YGen::Hh), expr_gen(YGen::Ehp), par) +
                               scaled(expr_gen(YGen::Ehp), a * t) +
                               scaled(expr_word<YGen>({YGen::H, YGen::Ehp}), a) -
                               scaled(expr_word<YGen>({YGen::Ep, YGen::Hh}), a);
                return scaled(e, half);
            }
            // gl(1|1): E~~+ = (1/2)([H2^, E^+] + a(t E^+ + E+ H^ - E^+ H))
            Expr<YGen> e = graded_bracket(expr_gen(YGen::Hh2), expr_gen(YGen::Ehp), par) +
                           scaled(expr_gen(YGen::Ehp), a * t) +
                           scaled(expr_word<YGen>({YGen::Ep, YGen::Hh}), a) -
                           scaled(expr_word<YGen>({YGen::Ehp, YGen::H}), a);
            return scaled(e, half);
        }
        case YGen::Ettm: {
            if (alg == YAlgebra::sl2) {
                Expr<YGen> e = graded_bracket(expr_gen(YGen::Hh), expr_gen(YGen::Ehm), par) +
                               scaled(expr_gen(YGen::Ehm), -a * t) +
                               scaled(expr_word<YGen>({YGen::H, YGen::Ehm}), a) -
                               scaled(expr_word<YGen>({YGen::Em, YGen::Hh}), a);
                return scaled(e, -half);
            }
            Expr<YGen> e = graded_bracket(expr_gen(YGen::Hh2), expr_gen(YGen::Ehm), par) +
                           scaled(expr_gen(YGen::Ehm), -a * t) +
                           scaled(expr_word<YGen>({YGen::Em, YGen::Hh}), a) -
                           scaled(expr_word<YGen>({YGen::Ehm, YGen::H}), a);
            return scaled(e, -half);
        }
        case YGen::Htt:
            if (alg == YAlgebra::sl2)
                // H~~ = [E~~+, E-]
                return graded_bracket(twisted_y_expression(alg, YGen::Ettp),
                                      expr_gen(YGen::Em), par);
            // gl(1|1): H~~ = {E+, E~~-}
            return anticommutator(expr_gen(YGen::Ep),
                                  twisted_y_expression(alg, YGen::Ettm));
        default: break;
    }
    throw unknown_generator("not a twisted generator: " + ygen_name(which));
}

// evaluate a twisted generator; alpha is bound at evaluation time (the
// evaluation representations send it to 1), t stays symbolic unless bound
inline ScalarMatrix twisted_y_generator(YAlgebra alg, YGen which, const YRep& rep,
                                        const Scalar& alpha_value = Scalar(1)) {
    Expr<YGen> e = twisted_y_expression(alg, which);
    ScalarMatrix m =
        eval_expr(e, rep.dim(), [&rep](YGen g) -> const ScalarMatrix& { return rep.mat(g); });
    return m.substitute(sym("alpha"), alpha_value);
}

// extend a representation with the twisted generator matrices of one type
inline YRep with_twisted_y(YRep rep, bool type_two,
                           const Scalar& alpha_value = Scalar(1)) {
    YAlgebra alg = rep.algebra;
    if (!type_two) {
        rep.mats[YGen::Etp] = twisted_y_generator(alg, YGen::Etp, rep, alpha_value);
        rep.mats[YGen::Etm] = twisted_y_generator(alg, YGen::Etm, rep, alpha_value);
    } else {
        rep.mats[YGen::Ettp] = twisted_y_generator(alg, YGen::Ettp, rep, alpha_value);
        rep.mats[YGen::Ettm] = twisted_y_generator(alg, YGen::Ettm, rep, alpha_value);
        rep.mats[YGen::Htt] = twisted_y_generator(alg, YGen::Htt, rep, alpha_value);
    }
    return rep;
}

// coproduct table of a generator, alpha symbolic; level-two tables are
// expanded from the defining words, except the gl(1|1) H~~ whose compact
// closed form is stored directly
inline CoproductTable<YGen> y_coproduct(YAlgebra alg, YGen g);

namespace ydetail {
inline CoproductTable<YGen> primitive(YGen g) {
    return {TensorTerm<YGen>{{g}, {}, Scalar(1)}, TensorTerm<YGen>{{}, {g}, Scalar(1)}};
}

inline CoproductTable<YGen> derived_y_table(YAlgebra alg, const Expr<YGen>& e) {
    auto par = [alg](YGen g) { return ygen_parity(alg, g); };
    CoproductTable<YGen> out;
    for (const auto& t : e) {
        CoproductTable<YGen> acc = {TensorTerm<YGen>{{}, {}, t.coeff}};
        for (YGen g : t.word) acc = tensor_mul(acc, y_coproduct(alg, g), par);
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}
}  // namespace ydetail

inline CoproductTable<YGen> y_coproduct(YAlgebra alg, YGen g) {
    using T = TensorTerm<YGen>;
    using ydetail::alpha;
    using ydetail::primitive;
    Scalar a = alpha();
    Scalar half = Scalar(1) / Scalar(2);
    bool gl = alg == YAlgebra::gl11;
    switch (g) {
        case YGen::Ep:
        case YGen::Em:
        case YGen::H: return primitive(g);
        case YGen::Hh:
            // sl(2) puts the level-one tail on H^; gl(1|1) keeps H^ primitive
            // and the tail moves to H2^ below
            if (gl) return primitive(g);
            return primitive(g) - scaled(tensor_term<YGen>({YGen::Ep}, {YGen::Em}) -
                                             tensor_term<YGen>({YGen::Em}, {YGen::Ep}),
                                         a);
        case YGen::H2:
            if (gl) return primitive(g);
            break;
        case YGen::Ehp: {
            // Delta(E^+) = prim +- (a/2)(E+ (x) H - H (x) E+); the sign is
            // opposite between the two algebras
            Scalar c = gl ? -a * half : a * half;
            return primitive(g) + scaled(tensor_term<YGen>({YGen::Ep}, {YGen::H}) -
                                             tensor_term<YGen>({YGen::H}, {YGen::Ep}),
                                         c);
        }
        case YGen::Ehm: {
            Scalar c = gl ? a * half : -a * half;
            return primitive(g) + scaled(tensor_term<YGen>({YGen::Em}, {YGen::H}) -
                                             tensor_term<YGen>({YGen::H}, {YGen::Em}),
                                         c);
        }
        case YGen::Hh2:
            if (!gl) break;
            // Delta(H2^) = prim - a(E+ (x) E- + E- (x) E+)
            return primitive(g) - scaled(tensor_term<YGen>({YGen::Ep}, {YGen::Em}) +
                                             tensor_term<YGen>({YGen::Em}, {YGen::Ep}),
                                         a);
        case YGen::Etp:
            // coideal form: E~+ (x) 1 + 1 (x) E~+ +- a E+ (x) H
            return primitive(g) +
                   scaled(tensor_term<YGen>({YGen::Ep}, {YGen::H}), gl ? -a : a);
        case YGen::Etm:
            return primitive(g) +
                   scaled(tensor_term<YGen>({YGen::Em}, {YGen::H}), gl ? a : -a);
        case YGen::Ettp:
        case YGen::Ettm:
            return ydetail::derived_y_table(alg, twisted_y_expression(alg, g));
        case YGen::Htt:
            if (!gl) return ydetail::derived_y_table(alg, twisted_y_expression(alg, g));
            // gl(1|1): Delta(H~~) = prim - (a^2/4)(H^2 (x) H + H (x) H^2)
            return primitive(g) -
                   scaled(tensor_term<YGen>({YGen::H, YGen::H}, {YGen::H}) +
                              tensor_term<YGen>({YGen::H}, {YGen::H, YGen::H}),
                          a * a * Scalar(1) / Scalar(4));
        case YGen::unit: return {T{{}, {}, Scalar(1)}};
        default: break;
    }
    throw unknown_generator("no coproduct for " + ygen_name(g) + " in this algebra");
}

inline ScalarMatrix eval_y_coproduct(YAlgebra alg, const CoproductTable<YGen>& tab,
                                     const YRep& left, const YRep& right,
                                     const Scalar& alpha_value = Scalar(1)) {
    auto par = [alg](YGen g) { return ygen_parity(alg, g); };
    ScalarMatrix m = eval_table(
        tab, left.dim(), [&left](YGen g) -> const ScalarMatrix& { return left.mat(g); },
        left.grading, right.dim(),
        [&right](YGen g) -> const ScalarMatrix& { return right.mat(g); }, right.grading,
        par);
    return m.substitute(sym("alpha"), alpha_value);
}

// counit: 1 on the unit, 0 on every Lie, level-one and twisted generator
inline Scalar y_counit_word(const std::vector<YGen>& w) {
    return w.empty() ? Scalar(1) : Scalar(0);
}

inline ScalarMatrix eval_y_coproduct_counit(const CoproductTable<YGen>& tab,
                                            const YRep& left,
                                            const Scalar& alpha_value = Scalar(1)) {
    ScalarMatrix out(left.dim(), left.dim());
    for (const auto& t : tab) {
        if (!y_counit_word(t.right).is_zero())
            out = out +
                  eval_word(t.left, left.dim(),
                            [&left](YGen g) -> const ScalarMatrix& { return left.mat(g); })
                      .scaled(t.coeff);
    }
    return out.substitute(sym("alpha"), alpha_value);
}

// expand one slot of a coproduct table again and evaluate on a triple of
// representations; checks (Delta (x) id) against (id (x) Delta)
inline ScalarMatrix eval_y_coproduct3(YAlgebra alg, const CoproductTable<YGen>& tab,
                                      const YRep& r1, const YRep& r2, const YRep& r3,
                                      bool expand_left,
                                      const Scalar& alpha_value = Scalar(1)) {
    auto par = [alg](YGen g) { return ygen_parity(alg, g); };
    std::size_t n = r1.dim() * r2.dim() * r3.dim();
    ScalarMatrix out(n, n);
    Grading g12 = kron_grading(r1.grading, r2.grading);
    for (const auto& t : tab) {
        const auto& inner_word = expand_left ? t.left : t.right;
        CoproductTable<YGen> inner = {TensorTerm<YGen>{{}, {}, Scalar(1)}};
        for (YGen g : inner_word) inner = tensor_mul(inner, y_coproduct(alg, g), par);
        for (const auto& it : inner) {
            const std::vector<YGen>& w1 = expand_left ? it.left : t.left;
            const std::vector<YGen>& w2 = expand_left ? it.right : it.left;
            const std::vector<YGen>& w3 = expand_left ? t.right : it.right;
            ScalarMatrix a =
                eval_word(w1, r1.dim(), [&r1](YGen g) -> const ScalarMatrix& { return r1.mat(g); });
            ScalarMatrix b =
                eval_word(w2, r2.dim(), [&r2](YGen g) -> const ScalarMatrix& { return r2.mat(g); });
            ScalarMatrix c =
                eval_word(w3, r3.dim(), [&r3](YGen g) -> const ScalarMatrix& { return r3.mat(g); });
            int p1 = word_parity(w1, par), p2 = word_parity(w2, par), p3 = word_parity(w3, par);
            ScalarMatrix ab = kron_graded(a, p1, b, p2, r1.grading, r2.grading);
            out = out + kron_graded(ab, p1 ^ p2, c, p3, g12, r3.grading)
                            .scaled(t.coeff * it.coeff);
        }
    }
    return out.substitute(sym("alpha"), alpha_value);
}

// sign tables of the type-I involution: level-zero E's flip, Cartans are
// fixed, level-one E's are fixed, level-one Cartans flip, and alpha flips
inline int type1_sign(YGen g) {
    switch (g) {
        case YGen::Ep:
        case YGen::Em:
        case YGen::Hh:
        case YGen::Hh2: return -1;
        case YGen::H:
        case YGen::H2:
        case YGen::Ehp:
        case YGen::Ehm:
        case YGen::unit: return 1;
        default: break;
    }
    throw unknown_generator("involution sign undefined for " + ygen_name(g));
}

// apply the type-I involution to an expression over base generators
inline Expr<YGen> apply_type1_involution(const Expr<YGen>& e) {
    Expr<YGen> out;
    out.reserve(e.size());
    for (const auto& t : e) {
        int s = 1;
        for (YGen g : t.word) s *= type1_sign(g);
        Term<YGen> nt;
        nt.word = t.word;
        nt.coeff = t.coeff.substitute(sym("alpha"), -Scalar::symbol("alpha"));
        if (s < 0) nt.coeff = -nt.coeff;
        out.push_back(std::move(nt));
    }
    return out;
}

// rational R-matrix on C^2 (x) C^2; both algebras share the 2x2 middle
// block, the lowest weight entry differs
inline ScalarMatrix r_matrix_rational(YAlgebra alg, const Scalar& arg) {
    Scalar r = alg == YAlgebra::sl2 ? arg / (arg - Scalar(1)) : arg / (arg + Scalar(1));
    ScalarMatrix m(4, 4);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = r;
    m.at(1, 2) = Scalar(1) - r;
    m.at(2, 1) = Scalar(1) - r;
    m.at(2, 2) = r;
    m.at(3, 3) = alg == YAlgebra::sl2 ? Scalar(1) : Scalar(-1) + Scalar(2) * r;
    return m;
}

}  // namespace reflectq
