// paract: command-line frontend for the partial group action library.
// Reads JSON instance files, prints machine-readable JSON on stdout and
// diagnostics on stderr. Exit codes: 0 success, 1 domain error, 2
// malformed input.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paract/fixtures.hpp"
#include "paract/json_io.hpp"

using namespace paract;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMalformed = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::bad_input, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

PartialAction load_partial_action(const std::string& path) {
    InstanceFile f = parse_instance(read_json_file(path));
    if (f.kind == "partial_action")
        return parse_partial_action(f.payload);
    if (f.kind == "global_action")
        return as_partial_action(parse_global_action(f.payload));
    throw error(errc::bad_input, path + " does not hold an action");
}

FiniteGroup load_group(const std::string& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("kind")) {
        InstanceFile f = parse_instance(j);
        if (f.kind == "group")
            return parse_group(f.payload.contains("mul") ? f.payload : f.payload.at("group"));
        if (f.kind == "partial_action")
            return parse_partial_action(f.payload).group;
        return parse_global_action(f.payload).group;
    }
    return parse_group(j);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dot_escape_pair(int g, int x) {
    return "\"" + std::to_string(g) + "," + std::to_string(x) + "\"";
}

int cmd_validate(const std::vector<std::string>& files, int jobs) {
    std::vector<std::future<json>> results;
    auto run_one = [](std::string path) {
        PartialAction pa = load_partial_action(path);
        json j = report_to_json(validate_partial_action(pa));
        j["file"] = path;
        return j;
    };
    if (jobs > 1) {
        for (const auto& f : files)
            results.push_back(std::async(std::launch::async, run_one, f));
    } else {
        for (const auto& f : files)
            results.push_back(std::async(std::launch::deferred, run_one, f));
    }
    json out = json::array();
    bool all_valid = true;
    for (auto& r : results) {
        json j = r.get();
        all_valid = all_valid && j.at("valid").get<bool>();
        out.push_back(std::move(j));
    }
    emit(files.size() == 1 ? out[0] : out);
    return all_valid ? kExitOk : kExitDomain;
}

int cmd_orbits(const std::string& file, const std::string& subgroup) {
    PartialAction pa = load_partial_action(file);
    std::vector<int> h =
        subgroup.empty() ? pa.group.elements() : sorted_set(parse_element_list(subgroup));
    OrbitQuotient q = orbit_quotient(pa, h);
    emit(quotient_to_json(q));
    return kExitOk;
}

int cmd_section(const std::string& file) {
    PartialAction pa = load_partial_action(file);
    Section s = section_finite(pa); // throws NotFree for non-free input
    json out = section_to_json(s);
    json reps = json::array();
    for (int c = 0; c < s.from.count(); ++c)
        reps.push_back(json{{"orbit", s.from.classes[c]}, {"representative", s.chosen_point(c)}});
    out["representatives"] = std::move(reps);
    out["verified"] = verify_section(pa, s);
    emit(out);
    return kExitOk;
}

int cmd_globalize(const std::string& file, bool check_hat, bool dot) {
    PartialAction pa = load_partial_action(file);
    EnvelopingSpace env = envelope(pa);
    if (dot) {
        std::cout << "digraph mu {\n";
        for (int g = 1; g < env.mu.group.order; ++g)
            for (int c = 0; c < env.size(); ++c) {
                auto [h, x] = env.classes[c][0];
                auto [h2, x2] = env.classes[env.mu.perm[g][c]][0];
                std::cout << "  " << dot_escape_pair(h, x) << " -> " << dot_escape_pair(h2, x2)
                          << " [label=\"" << g << "\"];\n";
            }
        std::cout << "}\n";
        return kExitOk;
    }
    json out = envelope_to_json(env);
    if (check_hat)
        out["hat_orbits_match"] = envelope_matches_hat_orbits(pa, env);
    emit(out);
    return kExitOk;
}

int cmd_tower_section(const std::string& file, const std::string& chain_spec) {
    PartialAction pa = load_partial_action(file);
    NormalChain chain;
    chain.group = pa.group;
    if (chain_spec.empty()) {
        chain = build_chain(pa.group);
    } else {
        chain.chain = parse_chain(chain_spec);
        validate_chain(pa.group, chain.chain);
    }
    auto steps = tower_section_trace(pa, chain);
    json levels = json::array();
    for (const auto& step : steps)
        levels.push_back(json{{"subgroup", step.subgroup}, {"section", section_to_json(step.section)}});
    json out{{"chain", chain.chain},
             {"levels", std::move(levels)},
             {"section", section_to_json(steps.back().section)},
             {"verified", verify_section(pa, steps.back().section)}};
    emit(out);
    return kExitOk;
}

int cmd_br(const std::string& file) {
    FiniteGroup g = load_group(file);
    if (g.order > 6)
        throw error(errc::bad_input, "full monoid verification is capped at |G| <= 6");
    BRReport r = br_verify_inverse_monoid(g);
    json out = br_report_to_json(r);
    out["formula_count"] = br_count_formula(g.order);
    emit(out);
    return r.pass() ? kExitOk : kExitDomain;
}

int cmd_groupoid(const std::string& file, bool dot) {
    PartialAction pa = load_partial_action(file);
    ActionGroupoid gpd = groupoid_build(pa);
    if (dot) {
        std::cout << "digraph action_groupoid {\n";
        for (size_t i = 0; i < gpd.arrows.size(); ++i)
            std::cout << "  " << gpd.source((int)i) << " -> " << gpd.target((int)i)
                      << " [label=\"" << gpd.arrows[i].first << "\"];\n";
        std::cout << "}\n";
        return kExitOk;
    }
    GroupoidReport r = groupoid_verify(gpd);
    json arrows = json::array();
    for (auto [g, x] : gpd.arrows)
        arrows.push_back(json::array({g, x}));
    json out = groupoid_report_to_json(r);
    out["arrows"] = std::move(arrows);
    emit(out);
    return r.pass() ? kExitOk : kExitDomain;
}

int cmd_gen(const std::string& name, const std::string& group_spec, const std::string& subset,
            int size, unsigned seed) {
    FiniteGroup g = parse_group(json(group_spec));
    if (name == "bernoulli") {
        json payload = partial_action_to_json(bernoulli_fixture(g).pa);
        emit(instance_to_json("partial_action", payload, "bernoulli"));
    } else if (name == "subgroup-restriction") {
        if (subset.empty())
            throw error(errc::bad_input, "subgroup-restriction needs --set");
        json payload =
            partial_action_to_json(subgroup_restriction_fixture(g, parse_element_list(subset)).pa);
        emit(instance_to_json("partial_action", payload, "subgroup-restriction"));
    } else if (name == "trivial") {
        json payload = partial_action_to_json(trivial_fixture(g, size));
        emit(instance_to_json("partial_action", payload, "trivial"));
    } else if (name == "random-free" || name == "random-any") {
        std::mt19937 rng(seed);
        PartialAction pa;
        GlobalAction u = random_global_action(g, rng, name == "random-free");
        std::vector<int> s;
        while (s.empty())
            for (int x = 0; x < u.space_size; ++x)
                if (rng() & 1)
                    s.push_back(x);
        pa = induce_from_global(u, s).pa;
        emit(instance_to_json("partial_action", partial_action_to_json(pa), name));
    } else {
        throw error(errc::bad_input, "unknown fixture '" + name + "'");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial group actions: orbits, sections, globalization, towers"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string subgroup, chain_spec, fixture_name, group_spec = "cyclic:2", subset;
    int jobs = 1, size = 4;
    unsigned seed = 0;
    bool check_hat = false, dot = false;

    auto* validate = app.add_subcommand("validate", "check both partial-action axiomatizations");
    validate->add_option("files", files)->required()->expected(-1);
    validate->add_option("--jobs", jobs, "validate files in parallel");

    auto* orbits = app.add_subcommand("orbits", "print the orbit partition");
    orbits->add_option("file", files)->required();
    orbits->add_option("--subgroup", subgroup, "restrict to a subgroup, e.g. 0,2");

    auto* section = app.add_subcommand("section", "section of the orbit quotient map");
    section->add_option("file", files)->required();

    auto* globalize = app.add_subcommand("globalize", "enveloping space and action");
    globalize->add_option("file", files)->required();
    globalize->add_flag("--check-hat", check_hat, "cross-validate against hat-action orbits");
    globalize->add_flag("--dot", dot, "emit the action graph in DOT format");

    auto* tower = app.add_subcommand("tower-section", "section by descent along a normal chain");
    tower->add_option("file", files)->required();
    tower->add_option("--chain", chain_spec, "override chain, e.g. \"0,1,2,3;0,2;0\"");

    auto* br = app.add_subcommand("br", "Birget-Rhodes expansion of a group");
    br->add_option("file", files)->required();

    auto* groupoid = app.add_subcommand("groupoid", "action groupoid of a partial action");
    groupoid->add_option("file", files)->required();
    groupoid->add_flag("--dot", dot, "emit the arrow graph in DOT format");

    auto* gen = app.add_subcommand("gen", "generate a fixture instance");
    gen->add_option("name", fixture_name,
                    "bernoulli | subgroup-restriction | trivial | random-free | random-any")
        ->required();
    gen->add_option("--group", group_spec, "group name, e.g. cyclic:4, s3, dihedral:3");
    gen->add_option("--set", subset, "subset for subgroup-restriction, e.g. 0,2");
    gen->add_option("--size", size, "space size for the trivial fixture");
    gen->add_option("--seed", seed, "seed for random fixtures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate)
            return cmd_validate(files, jobs);
        if (*orbits)
            return cmd_orbits(files[0], subgroup);
        if (*section)
            return cmd_section(files[0]);
        if (*globalize)
            return cmd_globalize(files[0], check_hat, dot);
        if (*tower)
            return cmd_tower_section(files[0], chain_spec);
        if (*br)
            return cmd_br(files[0]);
        if (*groupoid)
            return cmd_groupoid(files[0], dot);
        if (*gen)
            return cmd_gen(fixture_name, group_spec, subset, size, seed);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == errc::bad_input ? kExitMalformed : kExitDomain;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitOk;
}
