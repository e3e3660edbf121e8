#include "ttr/cli.hpp"

#include "ttr/bcg.hpp"
#include "ttr/closed_forms.hpp"
#include "ttr/gadget.hpp"
#include "ttr/partition.hpp"
#include "ttr/sweep.hpp"
#include "ttr/tree.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ttr {

namespace {

using nlohmann::json;

json witness_json(const OrderedPartition& p) {
    json parts = json::array();
    for (const auto& part : p.parts) parts.push_back(part);
    return parts;
}

std::string witness_text(const OrderedPartition& p) {
    std::ostringstream os;
    for (int i = 0; i < p.size(); ++i) {
        os << "  V_" << (i + 1) << " = {";
        for (size_t j = 0; j < p.parts[i].size(); ++j) os << (j ? " " : "") << p.parts[i][j];
        os << "}\n";
    }
    return os.str();
}

Graph load_graph(const CliConfig& cfg, std::ostream& err) {
    if (cfg.family && !cfg.input_path.empty())
        throw std::invalid_argument("give either --family or --input, not both");
    if (cfg.family) return generate(*cfg.family);
    if (!cfg.input_path.empty()) {
        auto parsed = read_edge_list_file(cfg.input_path);
        if (parsed.duplicate_edges > 0)
            err << "warning: collapsed " << parsed.duplicate_edges << " duplicate edge(s) in '"
                << cfg.input_path << "'\n";
        return parsed.graph;
    }
    throw std::invalid_argument("no input: use --family name:params or --input file");
}

void emit(const CliConfig& cfg, std::ostream& out, const json& j, const std::string& text) {
    if (cfg.json)
        out << j.dump() << "\n";
    else
        out << text;
}

int run_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(cfg, err);
    SolveReport rep =
        cfg.solve_tr ? transitivity_exact(g, cfg.cap) : tournament_transitivity_exact(g, cfg.cap);
    json j{{"schema", 1},
           {"command", "solve"},
           {"n", g.n()},
           {"m", g.m()},
           {cfg.solve_tr ? "tr" : "ttr", rep.value},
           {"method", to_string(rep.method)},
           {"bounds", {rep.lower, rep.upper}},
           {"nodes_explored", rep.nodes_explored},
           {"witness", witness_json(rep.witness)}};
    std::ostringstream text;
    text << (cfg.solve_tr ? "Tr" : "TTr") << " = " << rep.value << " (method " << to_string(rep.method)
         << ", bounds [" << rep.lower << ", " << rep.upper << "], nodes " << rep.nodes_explored
         << ")\n"
         << witness_text(rep.witness);
    emit(cfg, out, j, text.str());
    return 0;
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty() || cfg.partition_path.empty())
        throw std::invalid_argument("verify needs --input graph and --partition file");
    Graph g = read_edge_list_file(cfg.input_path).graph;
    OrderedPartition p = read_partition_file(cfg.partition_path);
    VerificationReport rep = cfg.tournament ? is_tournament_transitive(g, p) : is_transitive(g, p);
    json j{{"schema", 1},
           {"command", "verify"},
           {"mode", cfg.tournament ? "tournament" : "transitive"},
           {"k", p.size()},
           {"ok", rep.ok}};
    std::ostringstream text;
    if (rep.ok) {
        text << "ok: partition of size " << p.size() << " is "
             << (cfg.tournament ? "tournament transitive" : "transitive") << "\n";
    } else {
        const auto& v = *rep.first_violation;
        j["violation"] = {{"i", v.i},
                          {"j", v.j},
                          {"kind", v.kind == ViolationKind::MissingDomination
                                       ? "missing-domination"
                                       : "forbidden-back-domination"},
                          {"witness", v.witness}};
        text << "violation: " << describe(v) << "\n";
    }
    emit(cfg, out, j, text.str());
    return rep.ok ? 0 : 2;
}

int run_tree(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(cfg, err);
    if (!is_tree(g)) throw std::invalid_argument("tree: input is not a tree");
    auto rep = tournament_transitivity_tree(g);
    int tr = rep.upper;
    json j{{"schema", 1},
           {"command", "tree"},
           {"n", g.n()},
           {"tr", tr},
           {"ttr", rep.value},
           {"method", to_string(rep.method)},
           {"pairs_examined", rep.nodes_explored},
           {"witness", witness_json(rep.witness)}};
    std::ostringstream text;
    text << "Tr = " << tr << ", TTr = " << rep.value << " (pairs examined " << rep.nodes_explored
         << ")\n"
         << witness_text(rep.witness);
    emit(cfg, out, j, text.str());
    return 0;
}

int run_bcg(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(cfg, err);
    auto det = ttr_bcg(g, cfg.cap);
    json j{{"schema", 1}, {"command", "bcg"}, {"n", g.n()}, {"reason", to_string(det.reason)}};
    std::ostringstream text;
    if (g.min_degree() >= 1) {
        auto cls = classify_bcg(g);
        j["kind"] = to_string(cls.kind);
        j["t"] = cls.t;
        j["side_swapped"] = cls.side_swapped;
        text << "kind " << to_string(cls.kind) << ", t = " << cls.t << "\n";
    }
    if (det.exact) {
        j["ttr"] = det.value;
        if (det.witness) j["witness"] = witness_json(*det.witness);
        text << "TTr = " << det.value << " (" << to_string(det.reason) << ")\n";
        if (det.witness) text << witness_text(*det.witness);
    } else {
        j["interval"] = {det.lo, det.hi};
        text << "TTr in [" << det.lo << ", " << det.hi << "] (" << to_string(det.reason) << ")\n";
    }
    if (!det.condition_witnesses.empty()) j["condition_witnesses"] = det.condition_witnesses;
    emit(cfg, out, j, text.str());
    return 0;
}

int run_formula(const CliConfig& cfg, std::ostream& out) {
    std::optional<GraphFamily> fam = cfg.family;
    if (!fam && !cfg.input_path.empty())
        fam = recognize_family(read_edge_list_file(cfg.input_path).graph);
    if (!fam) throw std::invalid_argument("formula: no family given and none recognized");
    json j{{"schema", 1}, {"command", "formula"}, {"family", fam->to_string()}};
    std::ostringstream text;
    int ttr = ttr_formula(*fam);
    j["ttr"] = ttr;
    text << fam->to_string() << ": TTr = " << ttr;
    try {
        int tr = tr_formula(*fam);
        j["tr"] = tr;
        text << ", Tr = " << tr;
    } catch (const std::invalid_argument&) {
        j["tr"] = nullptr;
    }
    text << "\n";
    emit(cfg, out, j, text.str());
    return 0;
}

int run_gadget(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph base = load_graph(cfg, err);
    auto gi = build_reduction(base);
    std::string graph_text = write_edge_list(gi.gadget);
    std::optional<OrderedPartition> certificate;
    std::optional<int> tr;
    if (base.n() <= cfg.cap) {
        auto rep = transitivity_exact(base, cfg.cap);
        tr = rep.value;
        certificate = lift_partition(gi, rep.witness);
    }
    if (!cfg.out_graph.empty()) {
        std::ofstream f(cfg.out_graph);
        if (!f) throw std::runtime_error("cannot write '" + cfg.out_graph + "'");
        f << graph_text;
    }
    if (!cfg.out_partition.empty()) {
        if (!certificate)
            throw std::invalid_argument("gadget: base exceeds the oracle cap, no certificate");
        std::ofstream f(cfg.out_partition);
        if (!f) throw std::runtime_error("cannot write '" + cfg.out_partition + "'");
        f << write_partition(*certificate);
    }
    json j{{"schema", 1},
           {"command", "gadget"},
           {"base_n", base.n()},
           {"base_m", base.m()},
           {"delta", gi.delta},
           {"n", gi.gadget.n()},
           {"m", gi.gadget.m()},
           {"hubs", {gi.hubs[0], gi.hubs[1], gi.hubs[2]}},
           {"copy_offsets", gi.copy_offsets},
           {"edges_in_copies", gi.edges_in_copies()},
           {"hub_to_copy_edges", gi.hub_to_copy_edges()},
           {"hub_hub_edges", GadgetInstance::hub_hub_edges()}};
    std::ostringstream text;
    text << "gadget: " << gi.gadget.n() << " vertices, " << gi.gadget.m() << " edges (copies "
         << gi.edges_in_copies() << " + hub links " << gi.hub_to_copy_edges() << " + hub path 2)\n";
    if (tr) {
        j["base_tr"] = *tr;
        j["certificate_size"] = *tr + 2;
        j["certificate"] = witness_json(*certificate);
        text << "certificate: tournament transitive partition of size " << (*tr + 2) << "\n";
    }
    if (cfg.out_graph.empty() && !cfg.json) text << graph_text;
    emit(cfg, out, j, text.str());
    return 0;
}

int run_gen(const CliConfig& cfg, std::ostream& out) {
    if (!cfg.family) throw std::invalid_argument("gen needs --family");
    Graph g = generate(*cfg.family);
    std::string text = write_edge_list(g);
    json j{{"schema", 1}, {"command", "gen"}, {"family", cfg.family->to_string()}, {"edge_list", text}};
    emit(cfg, out, j, text);
    return 0;
}

int run_bounds(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(cfg, err);
    auto [lo, hi] = bounds_ttr(g);
    json j{{"schema", 1}, {"command", "bounds"}, {"lower", lo}, {"upper", hi}};
    std::ostringstream text;
    text << "TTr bounds: [" << lo << ", " << hi << "]\n";
    emit(cfg, out, j, text.str());
    return 0;
}

int run_sweep(const CliConfig& cfg, std::ostream& out) {
    auto results = sweep::run_all(cfg.seed, cfg.cap);
    bool all_ok = true;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        // timings stay out of the JSON so identical inputs give identical bytes
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << " — " << r.detail
             << " [" << std::fixed << std::setprecision(1) << r.seconds << "s]\n";
    }
    json j{{"schema", 1}, {"command", "sweep"}, {"seed", cfg.seed}, {"all_pass", all_ok},
           {"criteria", arr}};
    emit(cfg, out, j, text.str());
    return all_ok ? 0 : 2;
}

} // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case CliConfig::Command::Solve: return run_solve(cfg, out, err);
        case CliConfig::Command::Verify: return run_verify(cfg, out);
        case CliConfig::Command::Tree: return run_tree(cfg, out, err);
        case CliConfig::Command::Bcg: return run_bcg(cfg, out, err);
        case CliConfig::Command::Formula: return run_formula(cfg, out);
        case CliConfig::Command::Gadget: return run_gadget(cfg, out, err);
        case CliConfig::Command::Gen: return run_gen(cfg, out);
        case CliConfig::Command::Bounds: return run_bounds(cfg, out, err);
        case CliConfig::Command::Sweep: return run_sweep(cfg, out);
        }
        err << "error: unknown command\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ttr
