#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfg/clifford.hpp"
#include "kfg/dirac.hpp"
#include "kfg/parse.hpp"
#include "kfg/process.hpp"
#include "kfg/spinor.hpp"
#include "kfg/tensor.hpp"
#include "kfg/verify.hpp"

using nlohmann::json;

namespace {

struct Output {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json witnesses = json::array();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(bool as_json, const std::string& text) const {
        if (as_json) {
            json out;
            out["command"] = command;
            out["inputs"] = inputs;
            out["results"] = results;
            out["witnesses"] = witnesses;
            out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << text;
        }
    }
};

json mat_json(const kfg::Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

std::string mat_text(const kfg::Mat& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += "  ";
            out += m.at(r, c).str();
        }
        out += "\n";
    }
    return out;
}

std::vector<int> parse_steps(const std::string& steps) {
    std::vector<int> eps;
    for (size_t i = 0; i < steps.size(); ++i) {
        char ch = steps[i];
        if (ch == ',' || ch == ' ') continue;
        if (ch == '+')
            eps.push_back(0);
        else if (ch == '-')
            eps.push_back(1);
        else
            throw kfg::error(std::string("bad step character '") + ch + "' in steps");
    }
    return eps;
}

int run(int argc, char** argv) {
    CLI::App app{"Twisted group algebra toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an element expression");
    std::string eval_sig = "--";
    std::string eval_expr;
    eval_cmd->add_option("--signature", eval_sig, "signature, e.g. \"+-+\" or \"1,-1,2\"");
    eval_cmd->add_option("expr", eval_expr, "expression, e.g. \"e1*e2 - e2*e1\"")->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "full blade multiplication table");
    std::string table_sig = "--";
    table_cmd->add_option("--signature", table_sig, "signature");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string verify_sig;
    std::vector<std::string> suites;
    bool verify_all = false;
    std::uint64_t seed = 0;
    verify_cmd->add_option("--signature", verify_sig, "restrict to one signature");
    verify_cmd->add_option("--suite", suites, "suite name (repeatable)");
    verify_cmd->add_flag("--all", verify_all, "run the full battery");
    verify_cmd->add_option("--seed", seed, "seed for randomized suites");
    verify_cmd->add_flag("--list", "list suite names");

    // process
    auto* proc_cmd = app.add_subcommand("process", "iterate the doubling process");
    std::string steps;
    std::string show;
    bool proc_verify = false;
    proc_cmd->add_option("--steps", steps, "step signs, e.g. \"+,-,+\"")->required();
    proc_cmd->add_option("--show", show, "cochain | assoc | braiding | grading");
    proc_cmd->add_flag("--verify", proc_verify, "check the closed forms against direct evaluation");

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "matrix-algebra label over Q(i)");
    std::string cls_sig;
    cls_cmd->add_option("--signature", cls_sig, "signature")->required();

    // spinor
    auto* sp_cmd = app.add_subcommand("spinor", "spinor representation matrices");
    std::string sp_sig;
    std::string sp_model = "twisted";
    std::string sp_check;
    bool sp_emit = false;
    std::string sp_odd;
    sp_cmd->add_option("--signature", sp_sig, "signature")->required();
    sp_cmd->add_option("--model", sp_model, "twisted | exterior");
    sp_cmd->add_option("--check", sp_check, "relations | faithful | compare");
    sp_cmd->add_flag("--emit", sp_emit, "print the generator matrices");
    sp_cmd->add_option("--odd", sp_odd, "append the odd generator with square +1 or -1");

    // dirac
    auto* di_cmd = app.add_subcommand("dirac", "quaternionic Dirac operator demo");
    bool check_square = false;
    int max_degree = 3;
    std::string apply_expr;
    di_cmd->add_flag("--check-square", check_square, "verify D^2 = -Laplacian");
    di_cmd->add_option("--max-degree", max_degree, "polynomial degree bound");
    di_cmd->add_option("--apply", apply_expr, "apply D to a spinor expression");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;

    if (*eval_cmd) {
        out.command = "eval";
        out.inputs = {{"signature", eval_sig}, {"expr", eval_expr}};
        auto alg = kfg::make_clifford(eval_sig);
        auto v = kfg::parse_multivector(eval_expr, alg);
        out.results["value"] = v.str();
        out.emit(as_json, v.str() + "\n");
        return 0;
    }

    if (*table_cmd) {
        out.command = "table";
        out.inputs = {{"signature", table_sig}};
        auto alg = kfg::make_clifford(table_sig);
        json rows = json::array();
        std::string text;
        for (kfg::Mask x = 0; x < alg->dim(); ++x) {
            json row = json::array();
            for (kfg::Mask y = 0; y < alg->dim(); ++y) {
                auto p = kfg::Multivector::blade(alg, x) * kfg::Multivector::blade(alg, y);
                row.push_back(p.str());
                text += kfg::blade_str(x) + " * " + kfg::blade_str(y) + " = " + p.str() + "\n";
            }
            rows.push_back(row);
        }
        out.results["table"] = rows;
        out.emit(as_json, text);
        return 0;
    }

    if (*verify_cmd) {
        out.command = "verify";
        if (verify_cmd->count("--list")) {
            std::string text;
            json names = json::array();
            for (const auto& n : kfg::verify::suite_names()) {
                names.push_back(n);
                text += n + "\n";
            }
            out.results["suites"] = names;
            out.emit(as_json, text);
            return 0;
        }
        std::optional<kfg::Signature> sig;
        if (!verify_sig.empty()) sig = kfg::Signature::parse(verify_sig);
        out.inputs = {{"signature", verify_sig}, {"seed", seed}};
        std::vector<kfg::verify::Result> results;
        if (verify_all) {
            results = kfg::verify::run_all(seed);
        } else if (!suites.empty()) {
            for (const auto& s : suites) results.push_back(kfg::verify::run_suite(s, sig, seed));
        } else {
            throw kfg::error("verify needs --suite or --all");
        }
        bool all_pass = true;
        std::string text;
        json jr = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            jr.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!r.pass) out.witnesses.push_back({{"suite", r.name}, {"detail", r.detail}});
            text += (r.pass ? "PASS " : "FAIL ") + r.name +
                    (r.detail.empty() ? "" : " - " + r.detail) + "\n";
        }
        out.results["suites"] = jr;
        out.results["all_pass"] = all_pass;
        out.emit(as_json, text);
        return all_pass ? 0 : 1;
    }

    if (*proc_cmd) {
        out.command = "process";
        out.inputs = {{"steps", steps}};
        auto eps = parse_steps(steps);
        // Build the chain step by step so every spec keeps its parent.
        kfg::GradedSpec spec = kfg::iterate_from_field({});
        for (int e : eps)
            spec = kfg::process_once(spec, kfg::Scalar(e ? -1 : 1));
        int n = spec.n();
        std::string text = "n = " + std::to_string(n) + ", dim = " +
                           std::to_string(spec.dim()) + "\n";
        out.results["n"] = n;
        bool ok = true;
        if (show == "cochain" || show.empty()) {
            json rows = json::array();
            for (kfg::Mask x = 0; x < spec.dim(); ++x) {
                json row = json::array();
                std::string line;
                for (kfg::Mask y = 0; y < spec.dim(); ++y) {
                    std::string v = spec.F(x, y).str();
                    row.push_back(v);
                    line += (y ? " " : "") + v;
                }
                rows.push_back(row);
                text += line + "\n";
            }
            out.results["cochain"] = rows;
        } else if (show == "braiding") {
            json rows = json::array();
            for (kfg::Mask x = 0; x < spec.dim(); ++x) {
                json row = json::array();
                std::string line;
                for (kfg::Mask y = 0; y < spec.dim(); ++y) {
                    std::string v = kfg::braiding(spec.F, x, y).str();
                    row.push_back(v);
                    line += (y ? " " : "") + v;
                }
                rows.push_back(row);
                text += line + "\n";
            }
            out.results["braiding"] = rows;
        } else if (show == "assoc") {
            int nontrivial = 0;
            json triples = json::array();
            for (kfg::Mask x = 0; x < spec.dim(); ++x)
                for (kfg::Mask y = 0; y < spec.dim(); ++y)
                    for (kfg::Mask z = 0; z < spec.dim(); ++z) {
                        auto v = kfg::coboundary3(spec.F, x, y, z);
                        if (!v.is_one()) {
                            ++nontrivial;
                            if (triples.size() < 20)
                                triples.push_back({{"x", x}, {"y", y}, {"z", z}, {"dF", v.str()}});
                        }
                    }
            out.results["nontrivial_associators"] = nontrivial;
            out.results["examples"] = triples;
            text += "nontrivial associators: " + std::to_string(nontrivial) + "\n";
        } else if (show == "grading") {
            json vals = json::array();
            std::string line;
            for (kfg::Mask x = 0; x < spec.dim(); ++x) {
                vals.push_back(spec.s[size_t(x)].str());
                line += (x ? " " : "") + spec.s[size_t(x)].str();
            }
            out.results["grading"] = vals;
            text += line + "\n";
        } else if (!show.empty()) {
            throw kfg::error("unknown --show mode: " + show);
        }
        if (proc_verify && n > 0) {
            bool cf = true;
            for (kfg::Mask x = 0; x < spec.dim() && cf; ++x)
                for (kfg::Mask y = 0; y < spec.dim() && cf; ++y) {
                    if (!(kfg::closed_braiding(spec, x, y) == kfg::braiding(spec.F, x, y)))
                        cf = false;
                    for (kfg::Mask z = 0; z < spec.dim() && cf; ++z)
                        if (!(kfg::closed_associator(spec, x, y, z) ==
                              kfg::coboundary3(spec.F, x, y, z)))
                            cf = false;
                }
            out.results["closed_forms"] = cf;
            text += std::string("closed forms: ") + (cf ? "PASS" : "FAIL") + "\n";
            ok = ok && cf;
        }
        out.emit(as_json, text);
        return ok ? 0 : 1;
    }

    if (*cls_cmd) {
        out.command = "classify";
        out.inputs = {{"signature", cls_sig}};
        auto alg = kfg::make_clifford(cls_sig);
        auto rep = kfg::classify(*alg);
        out.results["label"] = rep.label.str();
        out.results["center_dim"] = rep.center_dim;
        if (rep.mu) out.results["mu"] = rep.mu->str();
        json checks = json::array();
        std::string text = "label: " + rep.label.str() + "\n";
        text += "center_dim: " + std::to_string(rep.center_dim) + "\n";
        if (rep.mu) text += "mu: " + rep.mu->str() + "\n";
        for (const auto& ch : rep.checks) {
            checks.push_back(ch);
            text += "  " + ch + "\n";
        }
        out.results["checks"] = checks;
        out.emit(as_json, text);
        return rep.label.kind == kfg::AlgebraLabel::Kind::Unclassified ? 1 : 0;
    }

    if (*sp_cmd) {
        out.command = "spinor";
        out.inputs = {{"signature", sp_sig}, {"model", sp_model}};
        auto alg = kfg::make_clifford(sp_sig);
        int n = alg->n();
        std::vector<kfg::Mat> gens;
        if (sp_model == "twisted") {
            gens = kfg::generator_matrices(alg);
        } else if (sp_model == "exterior") {
            for (int a = 1; a <= 2 * n; ++a)
                gens.push_back(kfg::exterior_model_matrix(a, alg));
        } else {
            throw kfg::error("unknown --model: " + sp_model);
        }
        std::optional<kfg::Scalar> odd_q;
        if (!sp_odd.empty()) {
            odd_q = kfg::Scalar::parse(sp_odd);
            gens.push_back(kfg::odd_extend(gens, alg, *odd_q));
        }
        std::string text;
        bool ok = true;
        if (sp_emit || sp_check.empty()) {
            json jg = json::array();
            for (size_t i = 0; i < gens.size(); ++i) {
                jg.push_back(mat_json(gens[i]));
                text += "generator " + std::to_string(i + 1) + ":\n" + mat_text(gens[i]) + "\n";
            }
            out.results["generators"] = jg;
        }
        if (sp_check == "relations") {
            auto rep = kfg::spinor_rep(alg, odd_q);
            std::string why;
            ok = rep.relations_hold(&why);
            out.results["relations"] = ok;
            if (!ok) out.witnesses.push_back(why);
            text += std::string("relations: ") + (ok ? "PASS" : "FAIL " + why) + "\n";
        } else if (sp_check == "faithful") {
            ok = kfg::full_rep_faithfulness(alg);
            out.results["faithful"] = ok;
            text += std::string("faithful: ") + (ok ? "PASS" : "FAIL") + "\n";
        } else if (sp_check == "compare") {
            auto twisted = kfg::generator_matrices(alg);
            ok = true;
            for (int a = 1; a <= 2 * n; ++a)
                ok = ok && kfg::exterior_model_matrix(a, alg) == twisted[size_t(a - 1)];
            out.results["models_agree"] = ok;
            text += std::string("models agree: ") + (ok ? "PASS" : "FAIL") + "\n";
        } else if (!sp_check.empty()) {
            throw kfg::error("unknown --check: " + sp_check);
        }
        out.emit(as_json, text);
        return ok ? 0 : 1;
    }

    if (*di_cmd) {
        out.command = "dirac";
        out.inputs = {{"max_degree", max_degree}};
        std::string text;
        bool ok = true;
        if (!apply_expr.empty()) {
            out.inputs["apply"] = apply_expr;
            auto psi = kfg::parse_spinor(apply_expr);
            auto img = kfg::dirac_apply(psi);
            out.results["applied"] = img.str();
            bool agree = img == kfg::dirac_component_form(psi) &&
                         img == kfg::dirac_curl_form(psi);
            out.results["forms_agree"] = agree;
            ok = ok && agree;
            text += img.str() + "\n";
        }
        if (check_square || apply_expr.empty()) {
            bool sq = true;
            for (unsigned a = 0; a <= unsigned(max_degree) && sq; ++a)
                for (unsigned b = 0; a + b <= unsigned(max_degree) && sq; ++b)
                    for (unsigned cdeg = 0; a + b + cdeg <= unsigned(max_degree) && sq; ++cdeg)
                        for (unsigned d = 0; a + b + cdeg + d <= unsigned(max_degree) && sq; ++d)
                            for (int comp = 0; comp < 4 && sq; ++comp) {
                                kfg::PolySpinor psi = kfg::PolySpinor::component(
                                    comp, kfg::Poly::term(kfg::Monomial{{a, b, cdeg, d}},
                                                          kfg::Scalar::one()));
                                sq = kfg::dirac_apply(kfg::dirac_apply(psi)) ==
                                     -kfg::Scalar::one() * kfg::laplacian(psi);
                            }
            out.results["square_is_minus_laplacian"] = sq;
            text += std::string("D^2 = -Laplacian: ") + (sq ? "PASS" : "FAIL") + "\n";
            ok = ok && sq;
        }
        out.emit(as_json, text);
        return ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kfg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
