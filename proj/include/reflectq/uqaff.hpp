#pragma once

// Quantum affine algebras U_q(sl(2)^) and U_q(gl(1|1)^): evaluation
// representations, coproduct tables, right adjoint actions, and the twisted
// (coideal) generators B0+- for the four boundary cases.

#include <map>
#include <string>
#include <vector>

#include "reflectq/errors.hpp"
#include "reflectq/matrix.hpp"
#include "reflectq/scalar.hpp"
#include "reflectq/symbols.hpp"
#include "reflectq/words.hpp"

namespace reflectq {

enum class UqAlgebra { sl2, gl11 };

enum class Gen {
    xi0p,
    xi0m,
    xi1p,
    xi1m,
    k0,
    k0i,
    k1,
    k1i,
    k2,   // gl(1|1) only
    k2i,  // gl(1|1) only
    h2p,  // gl(1|1) only
    B0p,
    B0m,
    unit
};

// the four boundary constructions; B1/B2 live in sl(2), B5/B6 in gl(1|1)
enum class TwistCase { B1, B2, B5, B6 };

inline std::string gen_name(Gen g) {
    switch (g) {
        case Gen::xi0p: return "xi0+";
        case Gen::xi0m: return "xi0-";
        case Gen::xi1p: return "xi1+";
        case Gen::xi1m: return "xi1-";
        case Gen::k0: return "k0";
        case Gen::k0i: return "k0^-1";
        case Gen::k1: return "k1";
        case Gen::k1i: return "k1^-1";
        case Gen::k2: return "k2";
        case Gen::k2i: return "k2^-1";
        case Gen::h2p: return "h2+";
        case Gen::B0p: return "B0+";
        case Gen::B0m: return "B0-";
        case Gen::unit: return "1";
    }
    return "?";
}

struct unknown_generator : error {
    explicit unknown_generator(const std::string& what) : error(what) {}
};

// operator parity: the odd generators of gl(1|1) are the xi's and anything
// built from an odd number of them (each B0 word carries exactly one xi)
inline int gen_parity(UqAlgebra alg, Gen g) {
    if (alg == UqAlgebra::sl2) return 0;
    switch (g) {
        case Gen::xi0p:
        case Gen::xi0m:
        case Gen::xi1p:
        case Gen::xi1m:
        case Gen::B0p:
        case Gen::B0m: return 1;
        default: return 0;
    }
}

struct UqRep {
    UqAlgebra algebra = UqAlgebra::sl2;
    Symbol spectral = 0;
    Grading grading;
    std::map<Gen, ScalarMatrix> mats;

    std::size_t dim() const { return grading.size(); }
    bool has(Gen g) const { return mats.count(g) != 0; }
    const ScalarMatrix& mat(Gen g) const {
        auto it = mats.find(g);
        if (it == mats.end())
            throw unknown_generator("no matrix for generator " + gen_name(g));
        return it->second;
    }
};

namespace detail {
inline Scalar qp(long e) { return Scalar::symbol("q", e); }
// the symmetric q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
inline Scalar qint(long n) {
    Scalar s;
    for (long i = 0; i < n; ++i) s += qp(n - 1 - 2 * i);
    return s;
}
}  // namespace detail

// 2-dimensional evaluation representation of U_q(sl(2)^); the affine
// Chevalley generators carry the spectral parameter
inline UqRep rep_sl2_fund(Symbol spectral = sym("z")) {
    using detail::qp;
    UqRep r;
    r.algebra = UqAlgebra::sl2;
    r.spectral = spectral;
    r.grading = {0, 0};
    Scalar z = Scalar::symbol(spectral), zi = Scalar::symbol(spectral, -1);
    r.mats[Gen::xi1p] = ScalarMatrix::unit(2, 2, 0, 1);
    r.mats[Gen::xi1m] = ScalarMatrix::unit(2, 2, 1, 0);
    r.mats[Gen::xi0p] = ScalarMatrix::unit(2, 2, 1, 0, z);
    r.mats[Gen::xi0m] = ScalarMatrix::unit(2, 2, 0, 1, zi);
    ScalarMatrix k1(2, 2), k0(2, 2);
    k1.at(0, 0) = qp(1);
    k1.at(1, 1) = qp(-1);
    k0.at(0, 0) = qp(-1);
    k0.at(1, 1) = qp(1);
    r.mats[Gen::k1] = k1;
    r.mats[Gen::k0] = k0;
    r.mats[Gen::k1i] = k0;  // k0 = k1^-1 in this representation
    r.mats[Gen::k0i] = k1;
    r.mats[Gen::unit] = ScalarMatrix::identity(2);
    return r;
}

// spin-l evaluation representation, l = l2/2, dimension l2+1; the basis is
// ordered by descending weight, v_0 = highest.  At l2 = 1 this is exactly
// rep_sl2_fund.
inline UqRep rep_sl2_spin(int l2, Symbol spectral = sym("z")) {
    using detail::qint;
    using detail::qp;
    if (l2 < 1) throw error("spin representation needs l2 >= 1");
    std::size_t n = static_cast<std::size_t>(l2) + 1;
    UqRep r;
    r.algebra = UqAlgebra::sl2;
    r.spectral = spectral;
    r.grading = Grading(n, 0);
    Scalar z = Scalar::symbol(spectral), zi = Scalar::symbol(spectral, -1);
    ScalarMatrix xp(n, n), xm(n, n), ap(n, n), am(n, n), k1(n, n), k0(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        long m2 = l2 - 2 * static_cast<long>(j);  // twice the weight of v_j
        k1.at(j, j) = qp(m2);
        k0.at(j, j) = qp(-m2);
        if (j >= 1) {
            // raising: v_j -> [l - m] v_{j-1} with l - m = j
            xp.at(j - 1, j) = qint(static_cast<long>(j));
            ap.at(j - 1, j) = zi * qint(static_cast<long>(j));
        }
        if (j + 1 < n) {
            // lowering: v_j -> [l + m] v_{j+1} with l + m = l2 - j
            xm.at(j + 1, j) = qint(l2 - static_cast<long>(j));
            am.at(j + 1, j) = z * qint(l2 - static_cast<long>(j));
        }
    }
    r.mats[Gen::xi1p] = xp;
    r.mats[Gen::xi1m] = xm;
    r.mats[Gen::xi0p] = am;  // xi0+ acts like xi1- times z
    r.mats[Gen::xi0m] = ap;  // xi0- acts like xi1+ times 1/z
    r.mats[Gen::k1] = k1;
    r.mats[Gen::k0] = k0;
    r.mats[Gen::k1i] = k0;
    r.mats[Gen::k0i] = k1;
    r.mats[Gen::unit] = ScalarMatrix::identity(n);
    return r;
}

// 2-dimensional representation of U_q(gl(1|1)^) on C^{1|1}
inline UqRep rep_gl11_fund(Symbol spectral = sym("z")) {
    using detail::qp;
    UqRep r;
    r.algebra = UqAlgebra::gl11;
    r.spectral = spectral;
    r.grading = {0, 1};
    Scalar z = Scalar::symbol(spectral), zi = Scalar::symbol(spectral, -1);
    r.mats[Gen::xi1p] = ScalarMatrix::unit(2, 2, 0, 1);
    r.mats[Gen::xi1m] = ScalarMatrix::unit(2, 2, 1, 0);
    r.mats[Gen::xi0p] = ScalarMatrix::unit(2, 2, 1, 0, z);
    r.mats[Gen::xi0m] = ScalarMatrix::unit(2, 2, 0, 1, -zi);
    r.mats[Gen::k1] = ScalarMatrix::identity(2).scaled(qp(1));
    r.mats[Gen::k1i] = ScalarMatrix::identity(2).scaled(qp(-1));
    r.mats[Gen::k0] = ScalarMatrix::identity(2).scaled(qp(-1));
    r.mats[Gen::k0i] = ScalarMatrix::identity(2).scaled(qp(1));
    ScalarMatrix k2(2, 2), h2(2, 2);
    k2.at(0, 0) = qp(1);
    k2.at(1, 1) = qp(-1);
    r.mats[Gen::k2] = k2;
    ScalarMatrix k2i(2, 2);
    k2i.at(0, 0) = qp(-1);
    k2i.at(1, 1) = qp(1);
    r.mats[Gen::k2i] = k2i;
    Scalar c = z * qp(1) / (qp(-1) - qp(1));
    h2.at(0, 0) = c;
    h2.at(1, 1) = -c;
    r.mats[Gen::h2p] = h2;
    r.mats[Gen::unit] = ScalarMatrix::identity(2);
    return r;
}

// ---- formal expressions for the twisted generators ------------------------

namespace detail {

inline Expr<Gen> xi0p_prime() { return expr_word<Gen>({Gen::k0i, Gen::xi0p}); }
inline Expr<Gen> xi1p_prime() { return expr_word<Gen>({Gen::k1i, Gen::xi1p}); }

inline int expr_parity(UqAlgebra alg, const std::vector<Gen>& w) {
    return word_parity(w, [alg](Gen g) { return gen_parity(alg, g); });
}

// right adjoint action of xi_i^+ on a formal expression:
//   (ad xi_i^+) a = (-1)^{[xi][a]} k_i^-1 a xi_i^+ - k_i^-1 xi_i^+ a
inline Expr<Gen> ad_plus(UqAlgebra alg, int i, const Expr<Gen>& a) {
    Gen ki = i == 0 ? Gen::k0i : Gen::k1i;
    Gen xi = i == 0 ? Gen::xi0p : Gen::xi1p;
    Expr<Gen> out;
    for (const auto& t : a) {
        int s = gen_parity(alg, xi) * expr_parity(alg, t.word);
        Term<Gen> fwd;
        fwd.word.push_back(ki);
        fwd.word.insert(fwd.word.end(), t.word.begin(), t.word.end());
        fwd.word.push_back(xi);
        fwd.coeff = s ? -t.coeff : t.coeff;
        Term<Gen> bck;
        bck.word = {ki, xi};
        bck.word.insert(bck.word.end(), t.word.begin(), t.word.end());
        bck.coeff = -t.coeff;
        out.push_back(std::move(fwd));
        out.push_back(std::move(bck));
    }
    return out;
}

// right adjoint action of xi_i^-:
//   (ad xi_i^-) a = (-1)^{[xi][a]} a xi_i^- - xi_i^- k_i a k_i^-1
inline Expr<Gen> ad_minus(UqAlgebra alg, int i, const Expr<Gen>& a) {
    Gen k = i == 0 ? Gen::k0 : Gen::k1;
    Gen ki = i == 0 ? Gen::k0i : Gen::k1i;
    Gen xi = i == 0 ? Gen::xi0m : Gen::xi1m;
    Expr<Gen> out;
    for (const auto& t : a) {
        int s = gen_parity(alg, xi) * expr_parity(alg, t.word);
        Term<Gen> fwd;
        fwd.word = t.word;
        fwd.word.push_back(xi);
        fwd.coeff = s ? -t.coeff : t.coeff;
        Term<Gen> bck;
        bck.word = {xi, k};
        bck.word.insert(bck.word.end(), t.word.begin(), t.word.end());
        bck.word.push_back(ki);
        bck.coeff = -t.coeff;
        out.push_back(std::move(fwd));
        out.push_back(std::move(bck));
    }
    return out;
}

inline Scalar dpar(const char* name) { return Scalar::symbol(name); }

}  // namespace detail

inline UqAlgebra twist_algebra(TwistCase tc) {
    return (tc == TwistCase::B1 || tc == TwistCase::B2) ? UqAlgebra::sl2
                                                        : UqAlgebra::gl11;
}

// the defining word of a twisted generator, with the boundary parameters
// dp, dm left symbolic
inline Expr<Gen> twisted_expression(TwistCase tc, Gen which) {
    using namespace detail;
    Scalar dp = dpar("dp"), dm = dpar("dm");
    UqAlgebra alg = twist_algebra(tc);
    Expr<Gen> k0e = expr_gen(Gen::k0);
    switch (tc) {
        case TwistCase::B1:
        case TwistCase::B5:
            // B0+ = xi0+' k0 - dp xi1- k0,  B0- = xi0- k0 - dm xi1+' k0
            if (which == Gen::B0p)
                return xi0p_prime() * k0e - scaled(expr_word<Gen>({Gen::xi1m, Gen::k0}), dp);
            if (which == Gen::B0m)
                return expr_word<Gen>({Gen::xi0m, Gen::k0}) -
                       scaled(xi1p_prime() * k0e, dm);
            break;
        case TwistCase::B2:
            // B0- = xi0- k0 - dm ((ad xi1+ xi1+) xi0+') k0
            // B0+ = xi0+' k0 - dp ((ad xi1- xi1-) xi0-) k0
            if (which == Gen::B0m)
                return expr_word<Gen>({Gen::xi0m, Gen::k0}) -
                       scaled(ad_plus(alg, 1, ad_plus(alg, 1, xi0p_prime())) * k0e, dm);
            if (which == Gen::B0p)
                return xi0p_prime() * k0e -
                       scaled(ad_minus(alg, 1, ad_minus(alg, 1, expr_gen(Gen::xi0m))) * k0e,
                              dp);
            break;
        case TwistCase::B6:
            // B0- = xi0- - dm [h2+, xi1+']
            if (which == Gen::B0m)
                return expr_gen(Gen::xi0m) -
                       scaled(graded_bracket(expr_gen(Gen::h2p), xi1p_prime(),
                                             [alg](Gen g) { return gen_parity(alg, g); }),
                              dm);
            break;
    }
    throw unknown_generator("twist case has no generator " + gen_name(which));
}

// evaluate a twisted generator in a representation; params may bind dp/dm
inline ScalarMatrix twisted_generator(TwistCase tc, Gen which, const UqRep& rep,
                                      const std::map<Symbol, Scalar>& params = {}) {
    Expr<Gen> e = twisted_expression(tc, which);
    ScalarMatrix m =
        eval_expr(e, rep.dim(), [&rep](Gen g) -> const ScalarMatrix& { return rep.mat(g); });
    return params.empty() ? m : m.substitute(params);
}

// extend a representation with matrices for B0+- of the given case
inline UqRep with_twisted(UqRep rep, TwistCase tc,
                          const std::map<Symbol, Scalar>& params = {}) {
    if (tc != TwistCase::B6)
        rep.mats[Gen::B0p] = twisted_generator(tc, Gen::B0p, rep, params);
    rep.mats[Gen::B0m] = twisted_generator(tc, Gen::B0m, rep, params);
    return rep;
}

// ---- coproducts -----------------------------------------------------------

namespace detail {
inline CoproductTable<Gen> add_pieces(CoproductTable<Gen> tab, const Expr<Gen>& l,
                                      const Expr<Gen>& r, const Scalar& c) {
    for (const auto& tl : l)
        for (const auto& tr : r)
            tab.push_back(TensorTerm<Gen>{tl.word, tr.word, c * tl.coeff * tr.coeff});
    return tab;
}
}  // namespace detail

// coproduct of a twisted generator: the stored table is the fully expanded
// coideal form with dp/dm symbolic
inline CoproductTable<Gen> twisted_coproduct(TwistCase tc, Gen which) {
    using namespace detail;
    Scalar dp = dpar("dp"), dm = dpar("dm");
    Scalar q2 = qp(2), qm2 = qp(-2);
    UqAlgebra alg = twist_algebra(tc);
    auto par = [alg](Gen g) { return gen_parity(alg, g); };
    CoproductTable<Gen> tab;
    Expr<Gen> one = expr_unit<Gen>();
    Expr<Gen> k0e = expr_gen(Gen::k0);
    switch (tc) {
        case TwistCase::B1:
        case TwistCase::B5:
            if (which == Gen::B0p) {
                tab = add_pieces(tab, xi0p_prime() * k0e, one, Scalar(1));
                tab = add_pieces(tab, expr_word<Gen>({Gen::xi1m, Gen::k0}),
                                 expr_word<Gen>({Gen::k0, Gen::k1i}), -dp);
                tab = add_pieces(tab, k0e, expr_gen(Gen::B0p), Scalar(1));
                return tab;
            }
            if (which == Gen::B0m) {
                tab = add_pieces(tab, expr_word<Gen>({Gen::xi0m, Gen::k0}), one, Scalar(1));
                tab = add_pieces(tab, xi1p_prime() * k0e,
                                 expr_word<Gen>({Gen::k0, Gen::k1i}), -dm);
                tab = add_pieces(tab, k0e, expr_gen(Gen::B0m), Scalar(1));
                return tab;
            }
            break;
        case TwistCase::B2: {
            if (which == Gen::B0m) {
                Expr<Gen> a2 = ad_plus(alg, 1, ad_plus(alg, 1, xi0p_prime()));
                Expr<Gen> a1 = ad_plus(alg, 1, xi1p_prime());
                Expr<Gen> a1z = ad_plus(alg, 1, xi0p_prime());
                Scalar pref = dm * q2 * (q2 - qm2);
                tab = add_pieces(tab, expr_word<Gen>({Gen::xi0m, Gen::k0}), one, Scalar(1));
                tab = add_pieces(tab, a2 * k0e, expr_word<Gen>({Gen::k1i, Gen::k1i}), -dm);
                tab = add_pieces(tab, k0e, expr_gen(Gen::B0m), Scalar(1));
                tab = add_pieces(tab, expr_gen(Gen::xi0p), a1, pref);
                tab = add_pieces(tab, k0e * a1z, expr_gen(Gen::k1i) * xi1p_prime(), -pref);
                return tab;
            }
            if (which == Gen::B0p) {
                Expr<Gen> b2 = ad_minus(alg, 1, ad_minus(alg, 1, expr_gen(Gen::xi0m)));
                Expr<Gen> b1 = ad_minus(alg, 1, expr_gen(Gen::xi1m));
                Expr<Gen> b1z = ad_minus(alg, 1, expr_gen(Gen::xi0m));
                Scalar pref = dp * (q2 - qm2);
                tab = add_pieces(tab, xi0p_prime() * k0e, one, Scalar(1));
                tab = add_pieces(tab, b2 * k0e, expr_word<Gen>({Gen::k1i, Gen::k1i}), -dp);
                tab = add_pieces(tab, k0e, expr_gen(Gen::B0p), Scalar(1));
                tab = add_pieces(tab, expr_word<Gen>({Gen::xi0m, Gen::k0}), b1, -pref);
                tab = add_pieces(tab, k0e * b1z, expr_gen(Gen::k1i) * expr_gen(Gen::xi1m),
                                 pref * qm2);
                return tab;
            }
            break;
        }
        case TwistCase::B6:
            if (which == Gen::B0m) {
                Expr<Gen> br = graded_bracket(expr_gen(Gen::h2p), xi1p_prime(), par);
                Expr<Gen> ac = anticommutator(expr_gen(Gen::xi0p), expr_gen(Gen::xi1p));
                tab = add_pieces(tab, expr_gen(Gen::xi0m), expr_gen(Gen::k0i), Scalar(1));
                tab = add_pieces(tab, br, expr_gen(Gen::k1i), -dm);
                tab = add_pieces(tab, one, expr_gen(Gen::B0m), Scalar(1));
                tab = add_pieces(tab, ac, xi1p_prime(), dm * Scalar(2));
                return tab;
            }
            break;
    }
    throw unknown_generator("twist case has no coproduct for " + gen_name(which));
}

// coproduct table of a generator; for B0+- the case must be supplied (the
// two-argument overload picks the diagonal case native to the algebra)
inline CoproductTable<Gen> coproduct(UqAlgebra alg, Gen g, TwistCase tc) {
    using T = TensorTerm<Gen>;
    switch (g) {
        case Gen::xi1p:
            return {T{{Gen::xi1p}, {}, Scalar(1)}, T{{Gen::k1}, {Gen::xi1p}, Scalar(1)}};
        case Gen::xi0p:
            return {T{{Gen::xi0p}, {}, Scalar(1)}, T{{Gen::k0}, {Gen::xi0p}, Scalar(1)}};
        case Gen::xi1m:
            return {T{{Gen::xi1m}, {Gen::k1i}, Scalar(1)}, T{{}, {Gen::xi1m}, Scalar(1)}};
        case Gen::xi0m:
            return {T{{Gen::xi0m}, {Gen::k0i}, Scalar(1)}, T{{}, {Gen::xi0m}, Scalar(1)}};
        case Gen::k0: return {T{{Gen::k0}, {Gen::k0}, Scalar(1)}};
        case Gen::k0i: return {T{{Gen::k0i}, {Gen::k0i}, Scalar(1)}};
        case Gen::k1: return {T{{Gen::k1}, {Gen::k1}, Scalar(1)}};
        case Gen::k1i: return {T{{Gen::k1i}, {Gen::k1i}, Scalar(1)}};
        case Gen::k2:
            if (alg != UqAlgebra::gl11) break;
            return {T{{Gen::k2}, {Gen::k2}, Scalar(1)}};
        case Gen::k2i:
            if (alg != UqAlgebra::gl11) break;
            return {T{{Gen::k2i}, {Gen::k2i}, Scalar(1)}};
        case Gen::h2p:
            if (alg != UqAlgebra::gl11) break;
            return {T{{Gen::h2p}, {}, Scalar(1)},
                    T{{}, {Gen::h2p}, Scalar(1)},
                    T{{Gen::xi0p, Gen::k1}, {Gen::xi1p}, Scalar(2)}};
        case Gen::B0p:
        case Gen::B0m: return twisted_coproduct(tc, g);
        case Gen::unit: return {T{{}, {}, Scalar(1)}};
    }
    throw unknown_generator("no coproduct for " + gen_name(g) + " in this algebra");
}

inline CoproductTable<Gen> coproduct(UqAlgebra alg, Gen g) {
    return coproduct(alg, g, alg == UqAlgebra::sl2 ? TwistCase::B1 : TwistCase::B5);
}

// coproduct of a formal expression, expanded as a homomorphism; useful for
// checking the stored twisted tables against first principles
inline CoproductTable<Gen> derived_coproduct(UqAlgebra alg, const Expr<Gen>& e,
                                             TwistCase tc) {
    auto par = [alg](Gen g) { return gen_parity(alg, g); };
    CoproductTable<Gen> out;
    for (const auto& t : e) {
        CoproductTable<Gen> acc = {TensorTerm<Gen>{{}, {}, t.coeff}};
        for (Gen g : t.word) acc = tensor_mul(acc, coproduct(alg, g, tc), par);
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}

// counit: 1 on Cartan-type generators, 0 on Chevalley and twisted ones
inline Scalar counit(Gen g) {
    switch (g) {
        case Gen::k0:
        case Gen::k0i:
        case Gen::k1:
        case Gen::k1i:
        case Gen::k2:
        case Gen::k2i:
        case Gen::unit: return Scalar(1);
        default: return Scalar(0);
    }
}

inline Scalar counit_word(const std::vector<Gen>& w) {
    for (Gen g : w)
        if (counit(g).is_zero()) return Scalar(0);
    return Scalar(1);
}

// (T_left (x) T_right) applied to a coproduct table, with Koszul signs
inline ScalarMatrix eval_coproduct(UqAlgebra alg, const CoproductTable<Gen>& tab,
                                   const UqRep& left, const UqRep& right) {
    auto par = [alg](Gen g) { return gen_parity(alg, g); };
    return eval_table(
        tab, left.dim(), [&left](Gen g) -> const ScalarMatrix& { return left.mat(g); },
        left.grading, right.dim(),
        [&right](Gen g) -> const ScalarMatrix& { return right.mat(g); }, right.grading, par);
}

// (T (x) eps) applied to a coproduct table
inline ScalarMatrix eval_coproduct_counit(const CoproductTable<Gen>& tab,
                                          const UqRep& left) {
    ScalarMatrix out(left.dim(), left.dim());
    for (const auto& t : tab) {
        Scalar e = counit_word(t.right);
        if (e.is_zero()) continue;
        out = out +
              eval_word(t.left, left.dim(),
                        [&left](Gen g) -> const ScalarMatrix& { return left.mat(g); })
                  .scaled(t.coeff * e);
    }
    return out;
}

// (eps (x) T) applied to a coproduct table
inline ScalarMatrix eval_coproduct_counit_left(const CoproductTable<Gen>& tab,
                                               const UqRep& right) {
    ScalarMatrix out(right.dim(), right.dim());
    for (const auto& t : tab) {
        Scalar e = counit_word(t.left);
        if (e.is_zero()) continue;
        out = out +
              eval_word(t.right, right.dim(),
                        [&right](Gen g) -> const ScalarMatrix& { return right.mat(g); })
                  .scaled(t.coeff * e);
    }
    return out;
}

// grading of a tensor-product basis in kron order
inline Grading kron_grading(const Grading& g1, const Grading& g2) {
    Grading g;
    g.reserve(g1.size() * g2.size());
    for (int a : g1)
        for (int b : g2) g.push_back(a ^ b);
    return g;
}

// evaluate (Delta (x) id)Delta or (id (x) Delta)Delta of a table in three
// representations; expand_left selects which leg the inner coproduct hits
inline ScalarMatrix eval_coproduct3(UqAlgebra alg, const CoproductTable<Gen>& tab,
                                    const UqRep& r1, const UqRep& r2, const UqRep& r3,
                                    bool expand_left, TwistCase tc) {
    auto par = [alg](Gen g) { return gen_parity(alg, g); };
    std::size_t n = r1.dim() * r2.dim() * r3.dim();
    ScalarMatrix out(n, n);
    Grading g12 = kron_grading(r1.grading, r2.grading);
    for (const auto& t : tab) {
        const auto& inner_word = expand_left ? t.left : t.right;
        CoproductTable<Gen> inner = {TensorTerm<Gen>{{}, {}, Scalar(1)}};
        for (Gen g : inner_word) inner = tensor_mul(inner, coproduct(alg, g, tc), par);
        for (const auto& it : inner) {
            const std::vector<Gen>& w1 = expand_left ? it.left : t.left;
            const std::vector<Gen>& w2 = expand_left ? it.right : it.left;
            const std::vector<Gen>& w3 = expand_left ? t.right : it.right;
            ScalarMatrix a =
                eval_word(w1, r1.dim(), [&r1](Gen g) -> const ScalarMatrix& { return r1.mat(g); });
            ScalarMatrix b =
                eval_word(w2, r2.dim(), [&r2](Gen g) -> const ScalarMatrix& { return r2.mat(g); });
            ScalarMatrix c =
                eval_word(w3, r3.dim(), [&r3](Gen g) -> const ScalarMatrix& { return r3.mat(g); });
            int p1 = word_parity(w1, par), p2 = word_parity(w2, par), p3 = word_parity(w3, par);
            ScalarMatrix ab = kron_graded(a, p1, b, p2, r1.grading, r2.grading);
            out = out + kron_graded(ab, p1 ^ p2, c, p3, g12, r3.grading)
                            .scaled(t.coeff * it.coeff);
        }
    }
    return out;
}

// matrix-level right adjoint action in a representation; a_parity is the
// operator parity of a
inline ScalarMatrix adjoint_action(Gen chevalley, const ScalarMatrix& a, int a_parity,
                                   const UqRep& rep) {
    int xi_par = gen_parity(rep.algebra, chevalley);
    Scalar s((xi_par & a_parity & 1) ? -1 : 1);
    switch (chevalley) {
        case Gen::xi0p: {
            const ScalarMatrix &ki = rep.mat(Gen::k0i), &x = rep.mat(Gen::xi0p);
            return (ki * a * x).scaled(s) - ki * x * a;
        }
        case Gen::xi1p: {
            const ScalarMatrix &ki = rep.mat(Gen::k1i), &x = rep.mat(Gen::xi1p);
            return (ki * a * x).scaled(s) - ki * x * a;
        }
        case Gen::xi0m: {
            const ScalarMatrix &k = rep.mat(Gen::k0), &ki = rep.mat(Gen::k0i),
                               &x = rep.mat(Gen::xi0m);
            return (a * x).scaled(s) - x * k * a * ki;
        }
        case Gen::xi1m: {
            const ScalarMatrix &k = rep.mat(Gen::k1), &ki = rep.mat(Gen::k1i),
                               &x = rep.mat(Gen::xi1m);
            return (a * x).scaled(s) - x * k * a * ki;
        }
        default: throw unknown_generator("adjoint action needs a Chevalley generator");
    }
}

// ---- R-matrices ------------------------------------------------------------

// trigonometric R-matrix on C^2 (x) C^2; arg is the ratio of spectral
// parameters.  Both algebras share the upper-left block; they differ in the
// lowest weight entry.
inline ScalarMatrix r_matrix(UqAlgebra alg, const Scalar& arg) {
    using detail::qp;
    Scalar r = (arg - Scalar(1)) / (qp(1) * arg - qp(-1));
    ScalarMatrix m(4, 4);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = r;
    m.at(1, 2) = Scalar(1) - qp(1) * r;
    m.at(2, 1) = Scalar(1) - qp(-1) * r;
    m.at(2, 2) = r;
    m.at(3, 3) =
        alg == UqAlgebra::sl2 ? Scalar(1) : Scalar(-1) + (qp(1) + qp(-1)) * r;
    return m;
}

// entries of the extended Cartan matrix used in the defining relations
inline int cartan_entry(UqAlgebra alg, int i, int j) {
    if (alg == UqAlgebra::sl2) {
        static const int a[2][2] = {{2, -2}, {-2, 2}};
        return a[i][j];
    }
    static const int a[3][3] = {{0, 0, -2}, {0, 0, 2}, {-2, 2, 0}};
    return a[i][j];
}

}  // namespace reflectq
