#pragma once

// Batch front end: maps subcommands onto the catalogued derivations and
// verifications and renders the results as text or JSON. Everything here is
// plumbing; the mathematics lives in boundary.hpp and limits.hpp.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reflectq/boundary.hpp"
#include "reflectq/limits.hpp"
#include "reflectq/matrix_io.hpp"

namespace reflectq::cli {

using Json = nlohmann::ordered_json;

inline const char* artifact_version() { return "0.1.0"; }

// bad user input; carries the catalog the key was checked against
struct bad_input : error {
    explicit bad_input(const std::string& what, std::vector<std::string> valid = {})
        : error(what), valid_keys(std::move(valid)) {}
    std::vector<std::string> valid_keys;
};

// ---- key parsing -------------------------------------------------------------

inline const std::vector<std::string>& algebra_keys() {
    static const std::vector<std::string> keys = {"uq-sl2", "uq-gl11", "y-sl2", "y-gl11"};
    return keys;
}

// a case key optionally suffixed with the boundary kind; the bare key means
// the boundary the construction was built for
struct CaseSelector {
    std::string case_key;
    BoundaryKind kind = BoundaryKind::singlet;
    std::string label;  // as requested, used in check ids
};

inline std::vector<std::string> case_selector_keys() {
    std::vector<std::string> keys;
    for (const auto& k : boundary_case_keys()) {
        keys.push_back(k);
        keys.push_back(k + "-singlet");
        keys.push_back(k + "-vector");
    }
    return keys;
}

inline std::optional<CaseSelector> try_case_selector(const std::string& arg) {
    for (const auto& key : boundary_case_keys()) {
        if (arg == key) return CaseSelector{key, matched_kind(key), arg};
        if (arg == key + "-singlet") return CaseSelector{key, BoundaryKind::singlet, arg};
        if (arg == key + "-vector") return CaseSelector{key, BoundaryKind::vector, arg};
    }
    return std::nullopt;
}

inline CaseSelector case_selector(const std::string& arg) {
    if (auto sel = try_case_selector(arg)) return *sel;
    throw bad_input("unknown case key " + arg, case_selector_keys());
}

inline std::map<Symbol, Scalar> parse_bindings(const std::vector<std::string>& defs) {
    std::map<Symbol, Scalar> out;
    for (const auto& def : defs) {
        auto eq = def.find('=');
        if (eq == std::string::npos || eq == 0)
            throw bad_input("--set expects <symbol>=<scalar>, got \"" + def + "\"");
        try {
            out[sym(def.substr(0, eq))] = S(def.substr(eq + 1));
        } catch (const parse_error& e) {
            throw bad_input(std::string(e.what()) + " in --set " + def);
        }
    }
    return out;
}

// ---- result payloads ---------------------------------------------------------

struct CheckResult {
    Json payload;  // always carries a "check" id
    bool ok = false;
};

inline Json matrix_json(const ScalarMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json solve_json(const std::string& check, const SolveReport& rep) {
    Json j;
    j["check"] = check;
    j["nullity"] = rep.nullity;
    j["k_matrix"] = matrix_json(rep.k);
    Json b = Json::object();
    for (const auto& [s, v] : rep.bindings) b[sym_name(s)] = to_string(v);
    j["bindings"] = std::move(b);
    j["residual_zero"] = rep.residual_zero;
    Json fs = Json::array();
    for (Symbol s : rep.free_symbols) fs.push_back(sym_name(s));
    j["free_symbols"] = std::move(fs);
    if (!rep.residual.empty()) {
        Json r = Json::array();
        for (const auto& c : rep.residual) r.push_back(to_string(c));
        j["residual"] = std::move(r);
    }
    return j;
}

// ---- one runner per subcommand -------------------------------------------------

inline CheckResult ybe_result(const std::string& algebra) {
    if (std::find(algebra_keys().begin(), algebra_keys().end(), algebra) == algebra_keys().end())
        throw bad_input("unknown algebra key " + algebra, algebra_keys());
    bool ok = ybe_residual(algebra_r(algebra), algebra_family(algebra), algebra_grading(algebra))
                  .is_zero();
    Json j;
    j["check"] = "ybe-" + algebra;
    j["residual_zero"] = ok;
    return {std::move(j), ok};
}

// selectors with a printed closed-form K: each case against its own boundary,
// plus the unique vector solutions of the two type-I singlet constructions
inline std::vector<std::string> re_keys() {
    std::vector<std::string> keys;
    for (const auto& k : boundary_case_keys()) {
        keys.push_back(k);
        keys.push_back(k + (matched_kind(k) == BoundaryKind::singlet ? "-singlet" : "-vector"));
    }
    keys.push_back("uq-sl2-B1-vector");
    keys.push_back("y-sl2-I-vector");
    return keys;
}

inline CheckResult re_result(const CaseSelector& sel) {
    const std::string alg = case_algebra(sel.case_key);
    MatrixFn k;
    size_t boundary_dim = 1;
    if (sel.kind == matched_kind(sel.case_key)) {
        if (sel.kind == BoundaryKind::singlet) {
            k = [alg](const Scalar& x) { return singlet_k(alg, x); };
        } else {
            k = [alg](const Scalar& x) { return vector_k(alg, x); };
            boundary_dim = 2;
        }
    } else if (sel.kind == BoundaryKind::vector &&
               (sel.case_key == "uq-sl2-B1" || sel.case_key == "y-sl2-I")) {
        k = [key = sel.case_key](const Scalar& x) { return vector_k_unique(key, x); };
        boundary_dim = 2;
    } else {
        throw bad_input("no catalogued closed-form reflection matrix for " + sel.label,
                        re_keys());
    }
    bool ok = re_residual(algebra_r(alg), k, boundary_dim, algebra_family(alg),
                          algebra_grading(alg))
                  .is_zero();
    Json j;
    j["check"] = "re-" + sel.label;
    j["residual_zero"] = ok;
    return {std::move(j), ok};
}

inline std::vector<std::string> unitarity_keys() {
    std::vector<std::string> keys;
    for (const auto& k : boundary_case_keys())
        if (matched_kind(k) == BoundaryKind::singlet) {
            keys.push_back(k);
            keys.push_back(k + "-singlet");
        }
    return keys;
}

// reflected-argument unitarity of the singlet matrices, with the free
// off-diagonal weights pinned to zero where the case carries them
inline CheckResult unitarity_result(const CaseSelector& sel) {
    if (matched_kind(sel.case_key) != BoundaryKind::singlet ||
        sel.kind != BoundaryKind::singlet)
        throw bad_input("unitarity is catalogued for the singlet matrices only, not " +
                            sel.label,
                        unitarity_keys());
    const std::string alg = case_algebra(sel.case_key);
    MatrixFn k = [alg](const Scalar& x) {
        return singlet_k(alg, x).substitute({{sym("a"), Scalar(0)}, {sym("b"), Scalar(0)}});
    };
    bool ok = unitarity_residual(k, algebra_family(alg)).is_zero();
    Json j;
    j["check"] = "unitarity-" + sel.label;
    j["residual_zero"] = ok;
    return {std::move(j), ok};
}

inline CheckResult derive_result(const CaseSelector& sel, const std::map<Symbol, Scalar>& pins,
                                 int spin_l2) {
    SolveReport rep = pins.empty()
                          ? derive_k(sel.case_key, sel.kind, spin_l2)
                          : solve_k(make_boundary_problem(sel.case_key, sel.kind, spin_l2), pins);
    std::string check = "derive-k-" + sel.label;
    if (spin_l2 != 1) check += "-spin" + std::to_string(spin_l2);
    bool ok = rep.nullity > 0 && rep.residual_zero;
    return {solve_json(check, rep), ok};
}

inline CheckResult params_result(const CaseSelector& sel) {
    SolveReport rep = solve_params(make_boundary_problem(sel.case_key, sel.kind));
    bool ok = rep.nullity > 0 && rep.residual_zero && rep.residual.empty();
    return {solve_json("solve-params-" + sel.label, rep), ok};
}

inline CheckResult fuse_result(const CaseSelector& sel) {
    if (sel.case_key != "uq-sl2-B1" || sel.kind != BoundaryKind::singlet)
        throw bad_input("fusion is catalogued for the trigonometric sl(2) singlet seed only",
                        {"uq-sl2-B1", "uq-sl2-B1-singlet"});
    FusionReport fr = fuse_report();
    bool ok = (fr.perm_matches || fr.r_zero_matches) && fr.re_residual_zero;
    Json j;
    j["check"] = "fuse-uq-sl2-B1";
    j["perm_matches"] = fr.perm_matches;
    j["r_zero_matches"] = fr.r_zero_matches;
    j["winner"] = fr.winner;
    j["re_residual_zero"] = fr.re_residual_zero;
    return {std::move(j), ok};
}

inline CheckResult limit_result(const std::string& id, int trunc) {
    const auto& ids = limit_check_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw bad_input("unknown limit check id " + id, ids);
    LimitOutcome o = run_limit_check(id, trunc);
    Json j;
    j["check"] = o.check;
    j["match"] = o.match;
    j["order_checked"] = o.order_checked;
    if (!o.note.empty()) j["note"] = o.note;
    return {std::move(j), o.match};
}

// every catalogued check, sorted by check id so two runs render identically
inline std::vector<CheckResult> suite_results(int trunc) {
    std::vector<CheckResult> out;
    for (const auto& alg : algebra_keys()) out.push_back(ybe_result(alg));
    for (const auto& key : boundary_case_keys()) out.push_back(re_result(*try_case_selector(key)));
    out.push_back(re_result(*try_case_selector("uq-sl2-B1-vector")));
    out.push_back(re_result(*try_case_selector("y-sl2-I-vector")));
    for (const auto& key : boundary_case_keys())
        if (matched_kind(key) == BoundaryKind::singlet)
            out.push_back(unitarity_result(*try_case_selector(key)));
    for (const auto& key : boundary_case_keys()) {
        out.push_back(derive_result(*try_case_selector(key), {}, 1));
        std::string other =
            key + (matched_kind(key) == BoundaryKind::singlet ? "-vector" : "-singlet");
        out.push_back(derive_result(*try_case_selector(other), {}, 1));
        out.push_back(params_result(*try_case_selector(key)));
    }
    out.push_back(derive_result(*try_case_selector("uq-sl2-B1"), {}, 2));
    out.push_back(fuse_result(*try_case_selector("uq-sl2-B1")));
    for (const auto& id : limit_check_ids()) out.push_back(limit_result(id, trunc));
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        return a.payload.at("check").get_ref<const std::string&>() <
               b.payload.at("check").get_ref<const std::string&>();
    });
    return out;
}

// ---- rendering -----------------------------------------------------------------

inline std::string render_json(const std::vector<CheckResult>& results) {
    Json env;
    env["artifact"] = "reflectq";
    env["version"] = artifact_version();
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(r.payload);
    env["results"] = std::move(arr);
    return env.dump(2) + "\n";
}

inline std::string render_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.payload.at("check").get_ref<const std::string&>() << ": "
           << (r.ok ? "ok" : "FAIL") << "\n";
        for (const auto& [key, value] : r.payload.items()) {
            if (key == "check") continue;
            if (key == "k_matrix") {
                os << "  k_matrix:\n";
                for (const auto& row : value) {
                    os << "    [";
                    for (size_t i = 0; i < row.size(); ++i)
                        os << (i ? ", " : "") << row[i].get_ref<const std::string&>();
                    os << "]\n";
                }
            } else if (value.is_object() || value.is_array()) {
                if (value.empty()) continue;
                os << "  " << key << ":";
                bool first = true;
                if (value.is_object()) {
                    for (const auto& [name, expr] : value.items()) {
                        os << (first ? " " : ", ") << name << " = "
                           << expr.get_ref<const std::string&>();
                        first = false;
                    }
                } else {
                    for (const auto& item : value) {
                        os << (first ? " " : ", ") << item.get_ref<const std::string&>();
                        first = false;
                    }
                }
                os << "\n";
            } else if (value.is_string()) {
                os << "  " << key << ": " << value.get_ref<const std::string&>() << "\n";
            } else {
                os << "  " << key << ": " << value.dump() << "\n";
            }
        }
    }
    return os.str();
}

// ---- driver ----------------------------------------------------------------------

inline int write_report(const std::vector<CheckResult>& results, const std::string& format,
                        const std::string& out_path, std::ostream& out) {
    std::string rendered = format == "json" ? render_json(results) : render_text(results);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw error("cannot open " + out_path + " for writing");
        f << rendered;
    } else {
        out << rendered;
    }
    for (const auto& r : results)
        if (!r.ok) return 1;
    return 0;
}

// args excludes the program name; exit codes: 0 all checks pass,
// 1 a verification failed, 2 bad input, 3 internal error
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact reflection matrices for quantum integrable boundaries", "reflectq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("reflectq ") + artifact_version());

    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    std::string out_path;
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    std::string key;
    std::vector<std::string> pins;
    int spin_l2 = 1;
    int trunc = 0;

    auto* ybe = app.add_subcommand("verify-ybe", "Yang-Baxter residual of one R-matrix family");
    ybe->add_option("algebra", key, "uq-sl2, uq-gl11, y-sl2 or y-gl11")->required();

    auto* derive = app.add_subcommand(
        "derive-k", "solve the boundary intertwining problem for a catalogued case");
    derive->add_option("case", key, "case key, optionally -singlet or -vector")->required();
    derive->add_option("--set", pins, "pin a parameter, e.g. --set dp=1/2 (repeatable)");
    derive->add_option("--spin", spin_l2, "doubled bulk spin 2l; 1 is the fundamental")
        ->check(CLI::PositiveNumber);

    auto* params = app.add_subcommand(
        "solve-params", "find the parameter bindings that make a case reflective");
    params->add_option("case", key, "case key, optionally -singlet or -vector")->required();

    auto* re = app.add_subcommand("verify-re",
                                  "reflection-equation residual of a printed K-matrix");
    re->add_option("case", key, "case key, optionally -singlet or -vector")->required();

    auto* unit = app.add_subcommand("verify-unitarity",
                                    "reflected-argument unitarity of a singlet K-matrix");
    unit->add_option("case", key, "singlet case key")->required();

    auto* fus = app.add_subcommand("fuse",
                                   "lift a singlet seed to the vector boundary by fusion");
    fus->add_option("case", key, "uq-sl2-B1")->required();

    auto* lim = app.add_subcommand("limit-check",
                                   "rational degeneration of one affine combination");
    lim->add_option("check-id", key, "degeneration check id")->required();
    lim->add_option("--trunc", trunc, "extra series orders carried through the expansion")
        ->check(CLI::NonNegativeNumber);

    auto* suite = app.add_subcommand("suite", "every catalogued check, sorted by check id");
    suite->add_option("--trunc", trunc, "extra series orders for the degeneration checks")
        ->check(CLI::NonNegativeNumber);

    for (auto* sub : {ybe, derive, params, re, unit, fus, lim, suite}) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::vector<CheckResult> results;
        if (*ybe) results.push_back(ybe_result(key));
        if (*derive) results.push_back(derive_result(case_selector(key), parse_bindings(pins),
                                                     spin_l2));
        if (*params) results.push_back(params_result(case_selector(key)));
        if (*re) results.push_back(re_result(case_selector(key)));
        if (*unit) results.push_back(unitarity_result(case_selector(key)));
        if (*fus) results.push_back(fuse_result(case_selector(key)));
        if (*lim) results.push_back(limit_result(key, trunc));
        if (*suite) results = suite_results(trunc);
        return write_report(results, format, out_path, out);
    } catch (const bad_input& e) {
        err << "error: " << e.what() << "\n";
        if (!e.valid_keys.empty()) {
            err << "valid keys:\n";
            for (const auto& k : e.valid_keys) err << "  " << k << "\n";
        }
        return 2;
    } catch (const unknown_case& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const unknown_check& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace reflectq::cli
