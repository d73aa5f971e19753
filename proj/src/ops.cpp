#include "braidkit/ops.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "braidkit/error.hpp"
#include "braidkit/homsearch.hpp"
#include "braidkit/nilq.hpp"
#include "braidkit/permgrp.hpp"
#include "braidkit/smallgrp.hpp"
#include "braidkit/zlinalg.hpp"

namespace braidkit {

namespace {

using json = nlohmann::json;

int int_arg(const json& args, const char* key) {
    if (!args.contains(key)) throw InvalidInput(std::string("missing argument '") + key + "'");
    if (!args[key].is_number_integer()) throw InvalidInput(std::string("argument '") + key + "' must be an integer");
    return args[key].get<int>();
}

int int_arg(const json& args, const char* key, int fallback) { return args.contains(key) ? int_arg(args, key) : fallback; }

std::string str_arg(const json& args, const char* key, const std::string& fallback = {}) {
    if (!args.contains(key)) {
        if (fallback.empty()) throw InvalidInput(std::string("missing argument '") + key + "'");
        return fallback;
    }
    if (!args[key].is_string()) throw InvalidInput(std::string("argument '") + key + "' must be a string");
    return args[key].get<std::string>();
}

FgAbelianGroup group_from_args(const json& j) {
    if (!j.is_object()) throw InvalidInput("group argument must be an object");
    if (j.contains("free_rank") || j.contains("torsion")) return abelian_from_json(j);
    const Presentation p = presentation_from_args(j);
    if (j.contains("layer")) return lcs_layer(p, int_arg(j, "layer"));
    return abelianization(p);
}

std::vector<Permutation> perms_arg(const json& args, int degree) {
    std::vector<Permutation> out;
    if (!args.contains("perms")) return out;
    if (!args["perms"].is_array()) throw InvalidInput("'perms' must be a list of cycle strings");
    for (const auto& s : args["perms"]) {
        if (!s.is_string()) throw InvalidInput("'perms' entries must be cycle strings");
        out.push_back(Permutation::parse(s.get<std::string>(), degree));
    }
    return out;
}

json one_based(const std::vector<int>& pts) {
    json a = json::array();
    for (int x : pts) a.push_back(x + 1);
    return a;
}

// Named assignments and the presentation each is stated on.
struct NamedAssignment {
    GeneratorAssignment quotient;   // over a1, b1, ..., s
    int genus = 1;
    int strands = 3;
};

NamedAssignment named_assignment(const std::string& name) {
    if (name == "exo1") return {exo1_assignment(), 1, 4};
    if (name == "theta3") return {theta3_assignment(), 3, 4};
    if (name == "theta21") return {theta21_assignment(), 2, 3};
    if (name == "remark1") return {remark1_assignment(), 1, 1155};
    if (name.rfind("exo2:", 0) == 0) {
        const int n = std::stoi(name.substr(5));
        return {exo2_assignment(n), 1, n};
    }
    throw InvalidInput("unknown assignment '" + name + "' (exo1, theta3, theta21, exo2:<n>, remark1)");
}

struct BoundHom {
    Presentation presentation;
    GeneratorAssignment assignment;
};

BoundHom hom_from_args(const json& args) {
    if (!args.contains("assignment")) throw InvalidInput("missing argument 'assignment'");
    const json& a = args["assignment"];
    if (a.is_string()) {
        NamedAssignment named = named_assignment(a.get<std::string>());
        if (!args.contains("surface") && !args.contains("presentation"))
            return {class2_quotient_presentation(named.genus, named.strands), named.quotient};
        Presentation p = presentation_from_args(args);
        if (p.family && p.family->surface == "closed-orientable") {
            if (p.family->genus != named.genus)
                throw InvalidInput("assignment is for genus " + std::to_string(named.genus));
            return {p, through_projection(named.quotient, p.family->genus, p.family->strands)};
        }
        return {p, named.quotient};
    }
    Presentation p = presentation_from_args(args);
    return {p, assignment_from_json(a, p)};
}

json sigma_order(const BoundHom& h) {
    const auto braid = h.presentation.braid_generator_indices();
    if (braid.empty()) return nullptr;
    return mpz_to_json(h.assignment.images[static_cast<std::size_t>(braid.front())].order());
}

json op_present(const json& args) {
    const Presentation p = presentation_from_args(args);
    json j = to_json(p);
    j["generator_count"] = p.generator_count();
    j["relator_count"] = p.relators.size();
    return j;
}

json op_abelianization(const json& args) { return to_json(abelianization(presentation_from_args(args))); }

json op_lcs_layer(const json& args) { return to_json(lcs_layer(presentation_from_args(args), int_arg(args, "layer"))); }

json op_lcs_layers(const json& args) {
    const auto q = nilpotent_quotient(presentation_from_args(args), int_arg(args, "class"));
    json layers = json::array();
    for (const auto& l : q.layers) layers.push_back(to_json(l));
    return {{"layers", layers}};
}

json op_admits_epimorphism(const json& args) {
    if (!args.contains("from") || !args.contains("to")) throw InvalidInput("need 'from' and 'to'");
    const FgAbelianGroup a = group_from_args(args["from"]), b = group_from_args(args["to"]);
    return {{"admits", admits_epimorphism(a, b)}, {"from", to_json(a)}, {"to", to_json(b)}};
}

json op_min_generators(const json& args) {
    return {{"bound", min_generators_lower_bound(presentation_from_args(args))}};
}

json op_free_layer_rank(const json& args) {
    return {{"rank", free_layer_rank(int_arg(args, "n"), int_arg(args, "weight"))}};
}

json op_homsearch(const json& args) {
    const Presentation p = presentation_from_args(args);
    SearchOptions opt;
    opt.filter = HomFilter::parse(str_arg(args, "filter", "any"));
    opt.max_representatives = static_cast<std::size_t>(int_arg(args, "representatives", 5));
    opt.threads = int_arg(args, "threads", 1);
    const Census c = enumerate_homs(p, int_arg(args, "target_sym"), opt);
    json j = to_json(c, p);
    j["filter"] = opt.filter.to_string();
    return j;
}

json op_hom_constraints(const json& args) {
    const Presentation p = presentation_from_args(args);
    const auto braid = p.braid_generator_indices();
    std::uint64_t count = 0, equal = 0, class_le2 = 0;
    for_each_hom(p, int_arg(args, "target_sym"), HomFilter{}, [&](const GeneratorAssignment& a) {
        ++count;
        bool same = true;
        for (int i : braid) same = same && a.images[static_cast<std::size_t>(i)] == a.images[static_cast<std::size_t>(braid.front())];
        equal += same;
        const auto inv = finite_group_invariants(closure(a.images, a.degree));
        class_le2 += inv.lcs_orders.size() <= 3 && inv.lcs_orders.back() == 1;
        return true;
    });
    return {{"count", count},
            {"all_sigma_equal", equal == count},
            {"sigma_equal_count", equal},
            {"all_class_at_most_2", class_le2 == count}};
}

json op_verify_hom(const json& args) {
    const BoundHom h = hom_from_args(args);
    const Verification v = verify_hom(h.presentation, h.assignment);
    return {{"ok", v.ok},
            {"failing_relator", v.failing_relator},
            {"degree", h.assignment.degree},
            {"sigma_order", sigma_order(h)}};
}

json op_classify_hom(const json& args) {
    const BoundHom h = hom_from_args(args);
    json j = to_json(classify_hom(h.presentation, h.assignment, bound_from_env(kDefaultClosureBound)));
    j["degree"] = h.assignment.degree;
    j["sigma_order"] = sigma_order(h);
    json sizes = json::array();
    if (j["transitive"].get<bool>())
        for (const auto& b : blocks_containing_first_point(h.assignment.images, h.assignment.degree))
            sizes.push_back(b.size());
    j["block_sizes"] = sizes;
    return j;
}

json op_perm(const json& args) {
    const int m = int_arg(args, "degree");
    const auto perms = perms_arg(args, m);
    const std::string action = str_arg(args, "action");
    if (action == "compose") {
        Permutation r(m);
        for (const auto& p : perms) r = r * p;
        return {{"result", r.to_string()}, {"order", mpz_to_json(r.order())}};
    }
    if (action == "inverse" || action == "cycle_type" || action == "order") {
        if (perms.size() != 1) throw InvalidInput("'" + action + "' takes exactly one permutation");
        const CycleType t = cycle_type(perms[0]);
        json counts = json::object();
        for (std::size_t k = 1; k < t.counts.size(); ++k)
            if (t.counts[k]) counts[std::to_string(k)] = t.counts[k];
        return {{"inverse", perms[0].inverse().to_string()},
                {"cycle_type", counts},
                {"cycle_type_text", t.to_string()},
                {"order", mpz_to_json(perms[0].order())}};
    }
    if (action == "orbits") {
        json orbs = json::array();
        const auto o = orbits(perms, m);
        for (const auto& orb : o) orbs.push_back(one_based(orb));
        return {{"orbits", orbs}, {"transitive", o.size() <= 1}};
    }
    if (action == "primitivity") {
        const auto pr = is_primitive(perms, m);
        json blocks = json::array();
        if (is_transitive(perms, m))
            for (const auto& b : blocks_containing_first_point(perms, m)) blocks.push_back(one_based(b));
        return {{"primitive", pr.primitive},
                {"witness", pr.witness ? one_based(*pr.witness) : json(nullptr)},
                {"blocks_containing_1", blocks}};
    }
    if (action == "closure") {
        const auto elems = closure(perms, m, bound_from_env(kDefaultClosureBound));
        const auto inv = finite_group_invariants(elems);
        json lcs = json::array();
        for (auto x : inv.lcs_orders) lcs.push_back(x);
        return {{"order", elems.size()}, {"abelianization", to_json(inv.abelianization)}, {"lcs_orders", lcs}};
    }
    throw InvalidInput("unknown perm action '" + action + "' (compose, inverse, cycle_type, order, orbits, "
                       "primitivity, closure)");
}

json op_centralizer_order(const json& args) {
    CycleType t;
    if (args.contains("cycle_type")) {
        const json& ct = args["cycle_type"];
        if (!ct.is_object()) throw InvalidInput("'cycle_type' maps cycle length to multiplicity");
        std::size_t top = 0;
        for (auto it = ct.begin(); it != ct.end(); ++it) top = std::max(top, static_cast<std::size_t>(std::stoul(it.key())));
        t.counts.assign(top + 1, 0);
        for (auto it = ct.begin(); it != ct.end(); ++it) {
            const auto k = static_cast<std::size_t>(std::stoul(it.key()));
            if (k == 0 || !it.value().is_number_integer() || it.value().get<int>() < 0)
                throw InvalidInput("bad cycle type entry '" + it.key() + "'");
            t.counts[k] = it.value().get<int>();
        }
    } else {
        const int m = int_arg(args, "degree");
        t = cycle_type(Permutation::parse(str_arg(args, "perm"), m));
    }
    return {{"order", mpz_to_json(centralizer_order(t))}, {"degree", t.degree()}};
}

FiniteGroup named_group(const json& args) {
    const std::string name = str_arg(args, "group");
    if (name == "dicyclic") return dicyclic(int_arg(args, "n"));
    if (name == "z3_semidirect_z4") return z3_semidirect_z4();
    if (name == "symmetric") return symmetric_group(int_arg(args, "n"));
    if (name == "dihedral") return dihedral_group(int_arg(args, "n"));
    if (name == "cyclic") return cyclic_group(int_arg(args, "n"));
    throw InvalidInput("unknown group '" + name + "' (dicyclic, z3_semidirect_z4, symmetric, dihedral, cyclic)");
}

json op_smallgrp(const json& args) {
    FiniteGroup g = named_group(args);
    if (args.contains("quotient_by")) {
        const std::string by = str_arg(args, "quotient_by");
        std::vector<Permutation> normal;
        if (by == "center") {
            for (const auto& z : g.elements) {
                bool central = true;
                for (const auto& s : g.generators) central = central && z * s == s * z;
                if (central) normal.push_back(z);
            }
        } else if (by == "involutions") {
            for (const auto& z : g.elements)
                if (z.order() == 2) normal.push_back(z);
        } else {
            throw InvalidInput("quotient_by must be 'center' or 'involutions'");
        }
        g = quotient(g, normal);
    }
    const auto inv = finite_group_invariants(g.elements);
    json lcs = json::array();
    for (auto x : inv.lcs_orders) lcs.push_back(x);
    json out = {{"order", g.order()},
                {"center_order", center_order(g)},
                {"involutions", count_elements_of_order(g, 2)},
                {"is_dihedral", is_dihedral(g)},
                {"abelianization", to_json(inv.abelianization)},
                {"lcs_orders", lcs}};
    {
        const ElementTable t(g.elements);
        std::vector<std::size_t> gens, comms;
        for (const auto& s : g.generators) gens.push_back(*t.index_of(s));
        for (std::size_t a : gens)
            for (std::size_t b : gens) comms.push_back(t.comm(a, b));
        const auto derived = t.normal_closure(comms, gens);
        out["derived_subgroup"] = {{"order", std::count(derived.begin(), derived.end(), true)},
                                   {"abelianization", to_json(abelianization_of(t, derived))}};
    }
    if (args.contains("subgroups")) {
        const json& f = args["subgroups"];
        SubgroupFilter filter;
        if (f.contains("order")) filter.order = static_cast<std::size_t>(int_arg(f, "order"));
        if (f.contains("min_order")) filter.min_order = static_cast<std::size_t>(int_arg(f, "min_order"));
        filter.dihedral = f.value("dihedral", false);
        const auto subs = subgroup_scan(g, filter);
        json orders = json::array();
        for (const auto& s : subs) orders.push_back(s.order());
        out["subgroup_count"] = subs.size();
        out["subgroup_orders"] = orders;
    }
    if (args.contains("element_order")) out["elements_of_given_order"] = count_elements_of_order(g, static_cast<std::size_t>(int_arg(args, "element_order")));
    return out;
}

json op_klein_scan(const json& args) {
    const KleinScan s = klein_relation_scan(int_arg(args, "radius"));
    return {{"radius", s.radius},
            {"pairs_checked", s.pairs_checked},
            {"solutions", s.solutions},
            {"nontrivial_solutions", s.nontrivial.size()}};
}

const std::map<std::string, std::function<json(const json&)>>& registry() {
    static const std::map<std::string, std::function<json(const json&)>> ops = {
        {"present", op_present},
        {"abelianization", op_abelianization},
        {"lcs_layer", op_lcs_layer},
        {"lcs_layers", op_lcs_layers},
        {"admits_epimorphism", op_admits_epimorphism},
        {"min_generators_lower_bound", op_min_generators},
        {"free_layer_rank", op_free_layer_rank},
        {"homsearch", op_homsearch},
        {"hom_constraints", op_hom_constraints},
        {"verify_hom", op_verify_hom},
        {"classify_hom", op_classify_hom},
        {"perm", op_perm},
        {"centralizer_order", op_centralizer_order},
        {"smallgrp", op_smallgrp},
        {"klein_scan", op_klein_scan},
    };
    return ops;
}

} // namespace

const std::vector<std::string>& op_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : registry()) out.push_back(k);
        return out;
    }();
    return names;
}

Presentation presentation_from_args(const json& args) {
    if (!args.is_object()) throw InvalidInput("arguments must be an object");
    Presentation p;
    if (args.contains("presentation")) {
        p = presentation_from_json(args["presentation"]);
    } else {
        const std::string surface = str_arg(args, "surface");
        if (surface == "class2-group")
            p = class2_quotient_group(int_arg(args, "genus"), int_arg(args, "sigma_order"));
        else
            p = build_family(surface, int_arg(args, "genus", 0), int_arg(args, "strands"), int_arg(args, "boundaries", 1));
    }
    std::vector<Word> extra;
    if (args.value("kill_braid", false))
        for (int g : p.braid_generator_indices()) extra.push_back(Word::generator(g + 1, p.generator_count()));
    if (args.contains("extra_relators"))
        for (const auto& w : args["extra_relators"]) extra.push_back(word_from_json(w, p.generator_count()));
    return extra.empty() ? p : add_relators(p, extra);
}

json run_op(const std::string& op, const json& args) {
    const auto& ops = registry();
    auto it = ops.find(op);
    if (it == ops.end()) throw InvalidInput("unknown operation '" + op + "'");
    return it->second(args.is_null() ? json::object() : args);
}

} // namespace braidkit
