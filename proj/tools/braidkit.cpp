#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "braidkit/claims.hpp"
#include "braidkit/error.hpp"
#include "braidkit/ops.hpp"
#include "braidkit/zlinalg.hpp"

using json = nlohmann::json;

namespace {

struct PresentationFlags {
    std::string surface;
    std::optional<int> genus, strands, boundaries;
    std::string file;
    bool kill_braid = false;

    void attach(CLI::App* app) {
        app->add_option("--surface", surface,
                        "closed-orientable | boundary-orientable | nonorientable | artin | class2-quotient");
        app->add_option("--genus", genus);
        app->add_option("--strands", strands);
        app->add_option("--boundaries", boundaries, "boundary components (only 1 is modeled)");
        app->add_option("--presentation", file, "JSON presentation file for custom groups");
        app->add_flag("--kill-braid", kill_braid, "add every braid generator as a relator");
    }

    bool given() const { return !surface.empty() || !file.empty(); }

    json args() const {
        json a = json::object();
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw braidkit::InvalidInput("cannot read presentation file '" + file + "'");
            try {
                a["presentation"] = json::parse(in);
            } catch (const json::parse_error& e) {
                throw braidkit::InvalidInput("presentation file: " + std::string(e.what()));
            }
        } else {
            if (surface.empty()) throw braidkit::InvalidInput("need --surface or --presentation");
            a["surface"] = surface;
            if (genus) a["genus"] = *genus;
            if (strands) a["strands"] = *strands;
            if (boundaries) a["boundaries"] = *boundaries;
        }
        if (kill_braid) a["kill_braid"] = true;
        return a;
    }
};

json parse_json_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw braidkit::InvalidInput(std::string(what) + ": " + e.what());
    }
}

void print_value(const json& v, int indent, std::ostream& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            out << std::string(static_cast<std::size_t>(indent), ' ') << it.key() << ':';
            if (it.value().is_object() && !it.value().empty()) {
                out << '\n';
                print_value(it.value(), indent + 2, out);
            } else {
                out << ' ' << it.value().dump() << '\n';
            }
        }
    } else {
        out << std::string(static_cast<std::size_t>(indent), ' ') << v.dump() << '\n';
    }
}

void emit(const json& result, bool as_json, bool abelian = false) {
    if (as_json) {
        std::cout << result.dump() << '\n';
    } else if (abelian) {
        std::cout << braidkit::to_string(braidkit::abelian_from_json(result)) << '\n';
    } else {
        print_value(result, 0, std::cout);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidkit: surface braid group presentations, lower central series and permutation representations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

    PresentationFlags pf;
    auto* present = app.add_subcommand("present", "print a presentation");
    auto* abelianize = app.add_subcommand("abelianize", "abelianization G / Gamma_2");
    auto* lcs = app.add_subcommand("lcs", "lower central series layer Gamma_i / Gamma_{i+1}");
    auto* homsearch = app.add_subcommand("homsearch", "count homomorphisms into S_m");
    auto* verify = app.add_subcommand("verify-hom", "check an explicit assignment of generator images");
    for (auto* s : {present, abelianize, lcs, homsearch, verify}) {
        pf.attach(s);
        s->add_flag("--json", as_json);
    }

    int layer = 2;
    lcs->add_option("--layer", layer, "i >= 1 (up to 3)")->required();

    auto* epi = app.add_subcommand("epi", "surjection test between finitely generated abelian groups");
    std::string from_text, to_text;
    epi->add_option("--from", from_text, "JSON group: {free_rank, torsion} or a family with optional layer")
        ->required();
    epi->add_option("--to", to_text, "JSON group, same forms")->required();
    epi->add_flag("--json", as_json);

    int target_sym = 0, threads = 1, representatives = 5;
    std::string filter = "any";
    homsearch->add_option("--target-sym", target_sym, "m for S_m (m <= 8)")->required();
    homsearch->add_option("--filter", filter, "comma list: any, transitive, primitive, imprimitive, surjective, "
                                              "abelian, nonabelian, cyclic");
    homsearch->add_option("--threads", threads);
    homsearch->add_option("--representatives", representatives);

    std::string assignment, assignment_file;
    bool classify = false;
    verify->add_option("--assignment", assignment, "exo1 | theta3 | theta21 | exo2:<n> | remark1 | inline JSON");
    verify->add_option("--assignment-file", assignment_file, "JSON {degree, images: {generator: cycles}}");
    verify->add_flag("--classify", classify, "also report image order, transitivity and primitivity");

    auto* perm = app.add_subcommand("perm", "permutation utilities");
    std::string action;
    int degree = 0;
    std::vector<std::string> perms;
    perm->add_option("action", action, "compose | inverse | cycle_type | order | orbits | primitivity | closure | "
                                       "centralizer")
        ->required();
    perm->add_option("--degree", degree)->required();
    perm->add_option("--perm", perms, "1-based cycle notation; repeatable");
    perm->add_flag("--json", as_json);

    auto* smallgrp = app.add_subcommand("smallgrp", "named finite groups and their subgroups");
    std::string group, quotient_by;
    std::optional<int> n_param, sub_order, sub_min_order, element_order;
    bool dihedral_only = false;
    smallgrp->add_option("--group", group, "dicyclic | z3_semidirect_z4 | symmetric | dihedral | cyclic")->required();
    smallgrp->add_option("--n", n_param);
    smallgrp->add_option("--quotient-by", quotient_by, "center | involutions");
    smallgrp->add_option("--subgroup-order", sub_order);
    smallgrp->add_option("--subgroup-min-order", sub_min_order);
    smallgrp->add_flag("--dihedral", dihedral_only, "only dihedral subgroups");
    smallgrp->add_option("--element-order", element_order, "count elements of this order");
    smallgrp->add_flag("--json", as_json);

    auto* klein = app.add_subcommand("klein-scan", "search x y x y = y^-1 x y x in the Klein bottle group");
    int radius = 10;
    klein->add_option("--radius", radius);
    klein->add_flag("--json", as_json);

    auto* claims = app.add_subcommand("claims", "regression corpus");
    claims->require_subcommand(1);
    auto* claims_run = claims->add_subcommand("run", "execute a YAML corpus");
    std::string corpus;
    int claim_threads = 1;
    claims_run->add_option("corpus", corpus)->required();
    claims_run->add_option("--threads", claim_threads);
    claims_run->add_flag("--json", as_json);

    auto* op = app.add_subcommand("op", "run a named operation on JSON arguments");
    std::string op_name, op_args = "{}";
    op->add_option("name", op_name)->required();
    op->add_option("--args", op_args);
    op->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (*present) {
            emit(braidkit::run_op("present", pf.args()), as_json);
        } else if (*abelianize) {
            emit(braidkit::run_op("abelianization", pf.args()), as_json, true);
        } else if (*lcs) {
            json a = pf.args();
            a["layer"] = layer;
            emit(braidkit::run_op("lcs_layer", a), as_json, true);
        } else if (*epi) {
            json a = {{"from", parse_json_arg(from_text, "--from")}, {"to", parse_json_arg(to_text, "--to")}};
            const json r = braidkit::run_op("admits_epimorphism", a);
            emit(r, as_json);
        } else if (*homsearch) {
            json a = pf.args();
            a["target_sym"] = target_sym;
            a["filter"] = filter;
            a["threads"] = threads;
            a["representatives"] = representatives;
            emit(braidkit::run_op("homsearch", a), as_json);
        } else if (*verify) {
            if (assignment.empty() == assignment_file.empty())
                throw braidkit::InvalidInput("give exactly one of --assignment, --assignment-file");
            json a = pf.given() ? pf.args() : json::object();
            if (!assignment.empty() && assignment.front() == '{') {
                if (!pf.given()) throw braidkit::InvalidInput("an inline assignment needs a presentation");
                a["assignment"] = parse_json_arg(assignment, "--assignment");
            } else if (!assignment.empty()) {
                a["assignment"] = assignment;
            } else {
                if (!pf.given()) throw braidkit::InvalidInput("--assignment-file needs a presentation");
                std::ifstream in(assignment_file);
                if (!in) throw braidkit::InvalidInput("cannot read '" + assignment_file + "'");
                std::stringstream ss;
                ss << in.rdbuf();
                a["assignment"] = parse_json_arg(ss.str(), "--assignment-file");
            }
            const json r = braidkit::run_op("verify_hom", a);
            if (r["ok"].get<bool>() && classify) {
                emit(braidkit::run_op("classify_hom", a), as_json);
                return 0;
            }
            emit(r, as_json);
            return r["ok"].get<bool>() ? 0 : 1;
        } else if (*perm) {
            json a = {{"degree", degree}, {"perms", perms}};
            if (action == "centralizer") {
                if (perms.size() != 1) throw braidkit::InvalidInput("centralizer takes exactly one --perm");
                emit(braidkit::run_op("centralizer_order", {{"degree", degree}, {"perm", perms[0]}}), as_json);
            } else {
                a["action"] = action;
                emit(braidkit::run_op("perm", a), as_json);
            }
        } else if (*smallgrp) {
            json a = {{"group", group}};
            if (n_param) a["n"] = *n_param;
            if (!quotient_by.empty()) a["quotient_by"] = quotient_by;
            if (sub_order || sub_min_order || dihedral_only) {
                json f = {{"dihedral", dihedral_only}};
                if (sub_order) f["order"] = *sub_order;
                if (sub_min_order) f["min_order"] = *sub_min_order;
                a["subgroups"] = f;
            }
            if (element_order) a["element_order"] = *element_order;
            emit(braidkit::run_op("smallgrp", a), as_json);
        } else if (*klein) {
            emit(braidkit::run_op("klein_scan", {{"radius", radius}}), as_json);
        } else if (*claims_run) {
            const auto report = braidkit::run_corpus(corpus, claim_threads);
            if (as_json)
                std::cout << braidkit::to_json(report).dump(2) << '\n';
            else
                std::cout << braidkit::to_table(report);
            return report.ok() ? 0 : 1;
        } else if (*op) {
            emit(braidkit::run_op(op_name, parse_json_arg(op_args, "--args")), as_json);
        }
    } catch (const braidkit::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const braidkit::Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const braidkit::BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
