// msc: minimum subgraph-complementation solver CLI.
//
// Exit codes: 0 solution emitted (possibly empty), 2 no solution exists,
// 1 usage/parse/unsupported-pair/resource error, 3 internal verification
// failure (a bug). JSON goes to stdout; summaries and errors to stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "msc/io.hpp"
#include "msc/oracle.hpp"
#include "msc/solve_chordal.hpp"
#include "msc/solve_connectivity.hpp"
#include "msc/solve_degeneracy.hpp"
#include "msc/solve_kl.hpp"

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw msc::InvalidInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

msc::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "edgelist") return msc::parse_edge_list(text);
    if (format == "graph6") return msc::parse_graph6(text);
    throw msc::InvalidInput("unknown format: " + format);
}

json set_to_json(const msc::VertexSet& s) { return json(s.ids()); }

json certificate_to_json(const msc::Certificate& cert) {
    using namespace msc;
    json out;
    out["class"] = class_name(cert.target.tag);
    if (cert.target.tag == ClassTag::degeneracy) out["k"] = cert.target.k;
    if (std::holds_alternative<Bipartition>(cert.data)) {
        const auto& bp = std::get<Bipartition>(cert.data);
        out["A"] = set_to_json(bp.a);
        out["B"] = set_to_json(bp.b);
    } else if (std::holds_alternative<CliquePair>(cert.data)) {
        const auto& cp = std::get<CliquePair>(cert.data);
        out["C1"] = set_to_json(cp.c1);
        out["C2"] = set_to_json(cp.c2);
    } else if (std::holds_alternative<SplitPartition>(cert.data)) {
        const auto& sp = std::get<SplitPartition>(cert.data);
        out["K"] = set_to_json(sp.k);
        out["I"] = set_to_json(sp.i);
    } else if (std::holds_alternative<EliminationOrder>(cert.data)) {
        out["peo"] = json(std::get<EliminationOrder>(cert.data).order);
    } else if (std::holds_alternative<DegeneracyWitness>(cert.data)) {
        out["peel_order"] = json(std::get<DegeneracyWitness>(cert.data).peel_order);
    } else if (std::holds_alternative<ComponentList>(cert.data)) {
        json comps = json::array();
        for (const auto& c : std::get<ComponentList>(cert.data).comps) comps.push_back(set_to_json(c));
        out["components"] = comps;
    }
    return out;
}

json weight_to_json(const std::optional<msc::ExactWeight>& w) {
    if (!w) return nullptr;
    if (w->is_integral()) return json(w->num / w->scale);
    return json(w->to_string());
}

int emit_solution(const std::string& target, const std::string& source, const msc::Solution& sol) {
    json out;
    out["target"] = target;
    out["source"] = source;
    out["solution"] = set_to_json(sol.set);
    out["size"] = sol.size;
    out["weight"] = weight_to_json(sol.weight);
    out["status"] = msc::status_name(sol.status);
    out["verified"] = sol.status != msc::SolveStatus::none;
    std::cout << out.dump() << "\n";
    std::cerr << "target=" << target << " source=" << source << " size=" << sol.size
              << " status=" << msc::status_name(sol.status) << "\n";
    return sol.status == msc::SolveStatus::none ? 2 : 0;
}

struct Route {
    std::string source;
    msc::Solution solution;
};

// Picks the solver for a (detected-or-forced source, target) pair.
Route route_solve(const msc::Graph& g, msc::ClassTarget target, const std::string& source,
                  const msc::WeightMap& weights, const msc::MscOptions& opts) {
    using namespace msc;
    auto is_bip = [&] { return bipartition(g).has_value(); };
    auto is_cobip = [&] { return cobipartition(g).has_value(); };
    auto is_split_g = [&] { return split_partition(g).has_value(); };
    auto is_forest = [&] { return degeneracy(g).k <= 1; };
    auto is_bireg2c = [&] {
        auto k = biregular_degree(g);
        return k && *k >= 2 && is_two_connected(g);
    };

    switch (target.tag) {
        case ClassTag::two_connected:
            return {"any", msc_to_2connected(g, opts)};
        case ClassTag::disconnected:
            return {"any", msc_to_disconnected(g, weights, opts)};
        case ClassTag::chordal:
            if (source == "auto" || source == "biregular") {
                if (!is_bireg2c())
                    throw PreconditionError(
                        "unsupported source/target pair: target 'chordal' requires a 2-connected "
                        "biregular input");
                return {"biregular", msc_biregular_to_chordal(g)};
            }
            throw InvalidInput("target 'chordal' supports --source biregular only");
        case ClassTag::degeneracy:
            if (source == "auto" || source == "forest") {
                if (!is_forest())
                    throw PreconditionError(
                        "unsupported source/target pair: target 'degeneracy' requires a forest");
                return {"forest", msc_forest_to_Dk(g, target.k, opts)};
            }
            throw InvalidInput("target 'degeneracy' supports --source forest only");
        case ClassTag::co_bipartite:
            if (source == "bipartite" || (source == "auto" && is_bip()))
                return {"bipartite", msc_bip_to_cobip(g)};
            if (source == "split" || (source == "auto" && is_split_g()))
                return {"split", msc_split_to_cobip(g)};
            throw PreconditionError(
                "unsupported source/target pair: target 'co-bipartite' requires a bipartite or "
                "split input");
        case ClassTag::bipartite:
            if (source == "co-bipartite" || (source == "auto" && is_cobip()))
                return {"co-bipartite", msc_cobip_to_bip(g)};
            if (source == "split" || (source == "auto" && is_split_g()))
                return {"split", msc_split_to_bip(g)};
            throw PreconditionError(
                "unsupported source/target pair: target 'bipartite' requires a co-bipartite or "
                "split input");
        case ClassTag::split:
            if (source == "bipartite" || (source == "auto" && is_bip()))
                return {"bipartite", msc_bip_to_split(g)};
            if (source == "co-bipartite" || (source == "auto" && is_cobip()))
                return {"co-bipartite", msc_cobip_to_split(g)};
            throw PreconditionError(
                "unsupported source/target pair: target 'split' requires a bipartite or "
                "co-bipartite input");
        default:
            throw InvalidInput("unsupported solve target");
    }
}

msc::ClassTarget parse_target(const std::string& name, int k) {
    auto tag = msc::parse_class_name(name);
    if (!tag) throw msc::InvalidInput("unknown target class: " + name);
    msc::ClassTarget t{*tag, 0};
    if (*tag == msc::ClassTag::degeneracy) {
        if (k < 0) throw msc::InvalidInput("--target degeneracy requires --k");
        t.k = k;
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum subgraph-complementation toolkit"};
    app.require_subcommand(1);

    std::string input, format = "edgelist", target_name, source = "auto", weights_path,
                class_name_arg, set_arg, family_arg, out_path;
    int k = -1, gen_n = 0, cap = -1;
    double gen_p = 0.5;
    uint64_t seed = 0;
    bool full_complement = false;

    auto* solve = app.add_subcommand("solve", "solve MSC for a target class");
    solve->add_option("--target", target_name, "target class")->required();
    solve->add_option("--k", k, "degeneracy parameter");
    solve->add_option("--input", input, "graph file")->required();
    solve->add_option("--format", format, "edgelist|graph6");
    solve->add_option("--weights", weights_path, "weight file (disconnected target)");
    solve->add_option("--source", source, "auto|bipartite|co-bipartite|split|biregular|forest");

    auto* check = app.add_subcommand("check", "class membership with certificate");
    check->add_option("--class", class_name_arg, "class name")->required();
    check->add_option("--k", k, "degeneracy parameter");
    check->add_option("--input", input, "graph file")->required();
    check->add_option("--format", format, "edgelist|graph6");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solver");
    oracle->add_option("--target", target_name, "target class")->required();
    oracle->add_option("--k", k, "degeneracy parameter");
    oracle->add_option("--input", input, "graph file")->required();
    oracle->add_option("--format", format, "edgelist|graph6");
    oracle->add_option("--weights", weights_path, "weight file (disconnected target)");
    oracle->add_option("--cap", cap, "max vertex count for the subset scan");

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family_arg, "graph family")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--k", k, "biregular degree");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* comp = app.add_subcommand("complement", "apply a subgraph complementation");
    comp->add_option("--input", input, "graph file")->required();
    comp->add_option("--format", format, "edgelist|graph6");
    comp->add_option("--set", set_arg, "comma-separated vertex ids");
    comp->add_flag("--full", full_complement, "complement the whole graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        msc::MscOptions opts;
        if (solve->parsed()) {
            msc::Graph g = load_graph(input, format);
            msc::ClassTarget target = parse_target(target_name, k);
            msc::WeightMap w = weights_path.empty()
                                   ? msc::WeightMap::unit(g.vertex_count())
                                   : msc::parse_weights(read_file(weights_path), g.vertex_count());
            if (!weights_path.empty() && target.tag != msc::ClassTag::disconnected)
                throw msc::InvalidInput("--weights applies to the disconnected target only");
            Route r = route_solve(g, target, source, w, opts);
            return emit_solution(msc::class_name(target.tag), r.source, r.solution);
        }
        if (check->parsed()) {
            msc::Graph g = load_graph(input, format);
            msc::ClassTarget t = parse_target(class_name_arg, k);
            auto cert = msc::classify(g, t);
            json out;
            out["class"] = msc::class_name(t.tag);
            if (t.tag == msc::ClassTag::degeneracy) out["k"] = t.k;
            out["member"] = cert.has_value();
            out["certificate"] = cert ? certificate_to_json(*cert) : json(nullptr);
            std::cout << out.dump() << "\n";
            return cert ? 0 : 1;
        }
        if (oracle->parsed()) {
            msc::Graph g = load_graph(input, format);
            msc::ClassTarget target = parse_target(target_name, k);
            if (cap > 0) {
                opts.oracle_cap = cap;
                opts.weighted_oracle_cap = cap;
            }
            msc::Solution sol;
            if (target.tag == msc::ClassTag::disconnected && !weights_path.empty()) {
                auto w = msc::parse_weights(read_file(weights_path), g.vertex_count());
                sol = msc::brute_force_weighted_disconnect(g, w, opts);
            } else {
                sol = msc::brute_force_msc(g, target, opts);
            }
            return emit_solution(msc::class_name(target.tag), "any", sol);
        }
        if (gen->parsed()) {
            msc::GeneratorSpec spec;
            auto fam = msc::parse_family(family_arg);
            if (!fam) throw msc::InvalidInput("unknown family: " + family_arg);
            spec.family = *fam;
            spec.n = gen_n;
            spec.k = k < 0 ? 0 : k;
            spec.p = gen_p;
            spec.seed = seed;
            std::string text = msc::write_edge_list(msc::generate(spec));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream outf(out_path, std::ios::binary);
                if (!outf) throw msc::InvalidInput("cannot write file: " + out_path);
                outf << text;
            }
            return 0;
        }
        if (comp->parsed()) {
            msc::Graph g = load_graph(input, format);
            msc::Graph result;
            if (full_complement) {
                result = g.complement();
            } else {
                std::vector<int> ids;
                std::stringstream ss(set_arg);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) ids.push_back(std::stoi(tok));
                result = g.subgraph_complement(msc::VertexSet(ids));
            }
            std::cout << msc::write_edge_list(result);
            return 0;
        }
    } catch (const msc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
