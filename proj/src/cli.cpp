#include "dyb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "dyb/json_io.hpp"
#include "dyb/kernels.hpp"

namespace dyb::cli {

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != '[' && c != ']' && c != ' ') t += c;
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t comma = t.find(',', pos);
        if (comma == std::string::npos) comma = t.size();
        out.push_back(std::stoll(t.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

// Check-style failures exit with 1 and carry a witness; anything else is a
// usage/IO error and exits with 2.
struct Failed {
    CheckResult result;
};

CheckResult to_check_result(const Error& e) {
    if (auto* p = dynamic_cast<const NotLatin*>(&e))
        return {"latin_square", false, {p->axis == NotLatin::Axis::Row ? 0 : 1, p->index, p->value}};
    if (auto* p = dynamic_cast<const NotBijective*>(&e)) return {"bijective_rows", false, {p->row}};
    if (auto* p = dynamic_cast<const SymmetryFails*>(&e))
        return {"sset_symmetry", false, {p->x, p->y, p->z}};
    if (auto* p = dynamic_cast<const PrerequisiteFailed*>(&e)) return {p->check, false, {}};
    if (dynamic_cast<const NotAGroup*>(&e)) return {"group", false, {}};
    return {"", false, {}};
}

struct Ctx {
    Json report;
    int exit_code = 0;
    std::ostream* err = nullptr;

    void finish_report(const std::string& command, const Report& rep) {
        report["command"] = command;
        Json body = report_to_json(rep);
        report["pass"] = body["pass"];
        report["results"] = body["results"];
        if (!rep.pass()) exit_code = 1;
        for (auto& part : rep.parts) {
            *err << command << ": " << part.check << (part.pass ? " PASS" : " FAIL");
            if (!part.pass) {
                *err << " witness [";
                for (std::size_t i = 0; i < part.witness.size(); ++i)
                    *err << (i ? "," : "") << part.witness[i];
                *err << "]";
            }
            *err << '\n';
        }
    }
};

FiniteSSet load_sset_input(const std::string& sset_path, const std::string& affine) {
    if (!affine.empty()) {
        auto v = parse_int_list(affine);
        if (v.size() != 3) throw Error("--affine expects n,k,r");
        return FiniteSSet::affine(v[0], static_cast<int>(v[1]), v[2]);
    }
    if (sset_path.empty()) throw Error("need --sset FILE or --affine n,k,r");
    return sset_from_json(load_json_file(sset_path));
}

TernaryOp load_ternary_input(const std::string& path) {
    return ternary_from_json(load_json_file(path));
}

DynamicalMap load_sigma_input(const std::string& sigma_path, const std::string& quasigroup_path) {
    std::optional<Quasigroup> q;
    if (!quasigroup_path.empty()) q = quasigroup_from_json(load_json_file(quasigroup_path));
    return sigma_from_json(load_json_file(sigma_path), std::move(q));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"builds and exhaustively verifies dynamical Yang-Baxter maps from s-sets"};
    app.name("dybtool");

    int parallel = 1;
    if (const char* env = std::getenv("DYBTOOL_THREADS")) parallel = std::atoi(env);
    std::string backend = "auto";
    app.add_option("--parallel", parallel, "worker threads for the scans (0 = all cores)");
    app.add_option("--backend", backend, "kernel backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    // verify
    auto* verify = app.add_subcommand("verify", "validate an input file");
    std::string verify_file;
    auto* verify_qg = verify->add_subcommand("quasigroup", "Latin square with both divisions");
    verify_qg->add_option("file", verify_file, "quasigroup JSON")->required();
    auto* verify_ss = verify->add_subcommand("sset", "family of bijections with the s-set symmetry");
    verify_ss->add_option("file", verify_file, "s-set JSON")->required();
    verify->require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct derived objects");
    std::string b_sset, b_affine, b_word, b_quasigroup, b_pi = "identity", b_out;
    auto* build_eta = build->add_subcommand("eta", "ternary operation of a word on an s-set");
    auto* build_sg = build->add_subcommand("sigma", "dynamical map from eta and a quasigroup");
    for (auto* sub : {build_eta, build_sg}) {
        sub->add_option("--sset", b_sset, "s-set JSON file");
        sub->add_option("--affine", b_affine, "affine s-set n,k,r");
        sub->add_option("--word", b_word, "exponent sequence, e.g. 2,1")->required();
        sub->add_option("-o,--out", b_out, "output file")->required();
    }
    build_sg->add_option("--quasigroup", b_quasigroup, "quasigroup JSON file")->required();
    build_sg->add_option("--pi", b_pi, "bijection JSON file or 'identity'");
    build->require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "run an exhaustive verification");
    std::string c_eta, c_mu, c_sigma, c_quasigroup;
    auto* check_hps_cmd = check->add_subcommand("hps", "pre-system axioms for eta");
    auto* check_disp = check->add_subcommand("displacement", "displacement identity for eta");
    auto* check_mu_cmd = check->add_subcommand("mu", "four-variable identities for mu");
    auto* check_solv = check->add_subcommand("solvability", "unique solvability in each argument");
    auto* check_dybe_cmd = check->add_subcommand("dybe", "dynamical braid relation for sigma");
    auto* check_qdybe_cmd =
        check->add_subcommand("qdybe", "quantum dynamical Yang-Baxter equation for the R-form");
    auto* check_bij = check->add_subcommand("bijective", "each sigma(lambda) permutes Q x Q");
    auto* check_morph = check->add_subcommand("morphism", "grading compatibility of sigma");
    auto* check_fund =
        check->add_subcommand("fundamental-l", "braid relation of the fundamental object");
    for (auto* sub : {check_hps_cmd, check_disp}) sub->add_option("--eta", c_eta)->required();
    for (auto* sub : {check_mu_cmd, check_solv}) {
        sub->add_option("--mu", c_mu, "ternary operation JSON");
        sub->add_option("--eta", c_eta, "derive mu from this eta");
    }
    for (auto* sub : {check_dybe_cmd, check_qdybe_cmd, check_bij, check_morph, check_fund}) {
        sub->add_option("--sigma", c_sigma)->required();
        sub->add_option("--quasigroup", c_quasigroup, "override the embedded quasigroup");
    }
    check->require_subcommand(1);

    // search
    auto* search = app.add_subcommand("search", "parameter searches");
    std::string s_word;
    long long s_modulus = 0, s_limit = -1;
    int s_cyclotomic = 0, s_max_len = 0, s_max_exp = 0;
    auto* search_roots_cmd = search->add_subcommand("roots", "roots of a word's polynomial mod n");
    search_roots_cmd->add_option("--word", s_word)->required();
    search_roots_cmd->add_option("--modulus", s_modulus)->required();
    auto* search_words_cmd =
        search->add_subcommand("words", "words whose polynomial a cyclotomic divides");
    search_words_cmd->add_option("--cyclotomic", s_cyclotomic)->required();
    search_words_cmd->add_option("--max-len", s_max_len)->required();
    search_words_cmd->add_option("--max-exp", s_max_exp)->required();
    search_words_cmd->add_option("--limit", s_limit, "stop after this many results");
    search->require_subcommand(1);

    // emit
    auto* emit = app.add_subcommand("emit", "serialize derived algebraic data");
    std::string e_sigma, e_quasigroup, e_out;
    auto* emit_pres = emit->add_subcommand("presentation", "generators and relations");
    emit_pres->add_option("--sigma", e_sigma)->required();
    emit_pres->add_option("--quasigroup", e_quasigroup, "override the embedded quasigroup");
    emit_pres->add_option("-o,--out", e_out, "output file")->required();
    emit->require_subcommand(1);

    app.require_subcommand(1);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    Ctx ctx;
    ctx.err = &err;
    try {
        kernels::set_threads(parallel);
        kernels::set_backend(backend == "scalar"   ? kernels::Backend::Scalar
                             : backend == "avx2"   ? kernels::Backend::Avx2
                                                   : kernels::Backend::Auto);

        if (verify_qg->parsed()) {
            ctx.report["command"] = "verify quasigroup";
            try {
                Quasigroup q = quasigroup_from_json(load_json_file(verify_file));
                ctx.report["n"] = q.order();
                ctx.finish_report("verify quasigroup", Report{{{"latin_square", true, {}}}});
            } catch (const Error& e) {
                CheckResult r = to_check_result(e);
                if (r.check.empty()) throw;
                throw Failed{r};
            }
        } else if (verify_ss->parsed()) {
            ctx.report["command"] = "verify sset";
            try {
                FiniteSSet s = sset_from_json(load_json_file(verify_file));
                ctx.report["n"] = s.size();
                ctx.finish_report("verify sset", Report{{{"bijective_rows", true, {}},
                                                         {"sset_symmetry", true, {}}}});
            } catch (const Error& e) {
                CheckResult r = to_check_result(e);
                if (r.check.empty()) throw;
                throw Failed{r};
            }
        } else if (build_eta->parsed() || build_sg->parsed()) {
            ctx.report["command"] = build_eta->parsed() ? "build eta" : "build sigma";
            FiniteSSet s = load_sset_input(b_sset, b_affine);
            Word w(parse_int_list(b_word));
            TernaryOp eta = eta_table(s, w);
            if (build_eta->parsed()) {
                save_json_file(b_out, ternary_to_json(eta));
                ctx.report["pass"] = true;
                ctx.report["out"] = b_out;
                if (eta.affine()) {
                    auto& a = *eta.affine();
                    ctx.report["affine"] = Json::array({a.alpha, a.beta, a.gamma});
                }
                err << "build eta: wrote " << b_out << '\n';
            } else {
                Quasigroup q = quasigroup_from_json(load_json_file(b_quasigroup));
                Bijection pi = b_pi == "identity"
                                   ? Bijection::identity(q.order())
                                   : bijection_from_json(load_json_file(b_pi));
                DynamicalMap sigma = build_sigma(eta, q, pi);
                save_json_file(b_out, sigma_to_json(sigma));
                ctx.report["pass"] = true;
                ctx.report["out"] = b_out;
                err << "build sigma: wrote " << b_out << '\n';
            }
        } else if (check_hps_cmd->parsed()) {
            ctx.finish_report("check hps", check_hps(load_ternary_input(c_eta)));
        } else if (check_disp->parsed()) {
            ctx.finish_report("check displacement", check_displacement(load_ternary_input(c_eta)));
        } else if (check_mu_cmd->parsed() || check_solv->parsed()) {
            TernaryOp mu = !c_mu.empty() ? load_ternary_input(c_mu)
                           : !c_eta.empty()
                               ? mu_from_eta(load_ternary_input(c_eta))
                               : throw Error("need --mu FILE or --eta FILE");
            if (check_mu_cmd->parsed())
                ctx.finish_report("check mu", check_mu_identities(mu));
            else
                ctx.finish_report("check solvability", check_unique_solvability(mu));
        } else if (check_dybe_cmd->parsed()) {
            ctx.finish_report("check dybe", check_dybe(load_sigma_input(c_sigma, c_quasigroup)));
        } else if (check_qdybe_cmd->parsed()) {
            DynamicalMap r = to_R_form(load_sigma_input(c_sigma, c_quasigroup));
            ctx.finish_report("check qdybe", check_qdybe(r));
        } else if (check_bij->parsed()) {
            ctx.finish_report("check bijective",
                              check_bijective(load_sigma_input(c_sigma, c_quasigroup)));
        } else if (check_morph->parsed()) {
            ctx.finish_report("check morphism",
                              check_sigma_morphism(load_sigma_input(c_sigma, c_quasigroup)));
        } else if (check_fund->parsed()) {
            ctx.finish_report("check fundamental-l",
                              check_fundamental_L(load_sigma_input(c_sigma, c_quasigroup)));
        } else if (search_roots_cmd->parsed()) {
            Word w(parse_int_list(s_word));
            auto roots = search_roots(w, Modulus(s_modulus));
            ctx.report["command"] = "search roots";
            ctx.report["pass"] = true;
            ctx.report["phi"] = phi_of_word(w).str();
            ctx.report["roots"] = roots;
            err << "search roots: " << roots.size() << " root(s)\n";
        } else if (search_words_cmd->parsed()) {
            auto words = search_words(s_cyclotomic, s_max_len, s_max_exp, s_limit);
            ctx.report["command"] = "search words";
            ctx.report["pass"] = true;
            Json jw = Json::array();
            for (auto& w : words) {
                jw.push_back(word_to_json(w));
                err << word_to_json(w).dump() << '\n';
            }
            ctx.report["words"] = std::move(jw);
        } else if (emit_pres->parsed()) {
            DynamicalMap sigma = load_sigma_input(e_sigma, e_quasigroup);
            Presentation p = emit_presentation(sigma.quasigroup(), sigma);
            save_json_file(e_out, presentation_to_json(p));
            ctx.report["command"] = "emit presentation";
            ctx.report["pass"] = true;
            ctx.report["out"] = e_out;
            ctx.report["generators"] = p.generators.size();
            ctx.report["relations"] = p.relations.size();
            err << "emit presentation: wrote " << e_out << '\n';
        }
    } catch (const Failed& f) {
        std::string cmd = ctx.report.contains("command")
                              ? ctx.report["command"].get<std::string>()
                              : "run";
        ctx.finish_report(cmd, Report{{f.result}});
        ctx.exit_code = 1;
    } catch (const PrerequisiteFailed& e) {
        std::string cmd = ctx.report.contains("command")
                              ? ctx.report["command"].get<std::string>()
                              : "run";
        ctx.finish_report(cmd, Report{{to_check_result(e)}});
        ctx.exit_code = 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        ctx.report["error"] = e.what();
        out << ctx.report.dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        // malformed numbers, JSON type mismatches and the like
        err << "error: " << e.what() << '\n';
        ctx.report["error"] = e.what();
        out << ctx.report.dump(2) << '\n';
        return 2;
    }

    out << ctx.report.dump(2) << '\n';
    return ctx.exit_code;
}

}  // namespace dyb::cli
