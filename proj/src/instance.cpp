#include "kaug/instance.hpp"

#include "kaug/errors.hpp"

#include <fstream>
#include <sstream>

namespace kaug {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int parse_node(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw Error("bad node id: " + s);
    return v;
}

}  // namespace

Instance read_instance(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty instance");
    while (!line.empty() && line[0] == '#')
        if (!std::getline(in, line)) throw Error("missing header");
    if (tokens(line) != std::vector<std::string>{"kaug", "1"})
        throw Error("bad header, expected 'kaug 1'");

    int n = -1, k = -1;
    if (!std::getline(in, line)) throw Error("missing 'n ... k ...' line");
    {
        auto ts = tokens(line);
        if (ts.size() != 4 || ts[0] != "n" || ts[2] != "k") throw Error("bad size line: " + line);
        n = parse_node(ts[1]);
        k = parse_node(ts[3]);
    }
    if (n < 1) throw Error("instance needs n >= 1");
    if (k < 1) throw Error("instance needs k >= 1");

    Instance inst{Graph(n), k, {}, "", 0};
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto ts = tokens(line);
        if (ts[0] == "e") {
            if (ts.size() != 3) throw Error("bad edge line: " + line);
            int u = parse_node(ts[1]), v = parse_node(ts[2]);
            if (u >= n || v >= n) throw Error("edge endpoint out of range: " + line);
            if (!inst.graph.add_edge(u, v)) throw Error("duplicate edge: " + line);
        } else if (ts[0] == "c") {
            if (ts.size() != 4) throw Error("bad cost line: " + line);
            int u = parse_node(ts[1]), v = parse_node(ts[2]);
            if (u >= n || v >= n) throw Error("cost endpoint out of range: " + line);
            Edge e(u, v);
            if (inst.graph.has_edge(u, v)) throw Error("cost given for an existing edge: " + line);
            if (inst.costs.purchasable(e)) throw Error("duplicate cost line: " + line);
            inst.costs.set(e, parse_frac(ts[3]));
        } else {
            throw Error("unknown instance line: " + line);
        }
    }
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    if (!inst.name.empty() || inst.seed != 0)
        out << "# name " << (inst.name.empty() ? "-" : inst.name) << " seed " << inst.seed << "\n";
    out << "kaug 1\n";
    out << "n " << inst.graph.node_count() << " k " << inst.k << "\n";
    for (const Edge& e : inst.graph.edges()) out << "e " << e.u << " " << e.v << "\n";
    for (const auto& [e, c] : inst.costs.entries())
        out << "c " << e.u << " " << e.v << " " << frac_str(c) << "\n";
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    write_instance(out, inst);
}

void write_solution(std::ostream& out, const Solution& sol) {
    for (const Edge& e : sol.edges) out << "f " << e.u << " " << e.v << "\n";
    out << "cost " << frac_str(sol.cost) << "\n";
    out << "connected " << sol.k << " " << (sol.connected ? "true" : "false") << "\n";
}

Solution read_solution(std::istream& in) {
    Solution sol{{}, Rational(0), 0, false};
    bool saw_cost = false, saw_conn = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto ts = tokens(line);
        if (ts[0] == "f" && ts.size() == 3) {
            sol.edges.emplace_back(parse_node(ts[1]), parse_node(ts[2]));
        } else if (ts[0] == "cost" && ts.size() == 2) {
            sol.cost = parse_frac(ts[1]);
            saw_cost = true;
        } else if (ts[0] == "connected" && ts.size() == 3) {
            sol.k = parse_node(ts[1]);
            if (ts[2] != "true" && ts[2] != "false") throw Error("bad connected line: " + line);
            sol.connected = ts[2] == "true";
            saw_conn = true;
        } else {
            throw Error("unknown solution line: " + line);
        }
    }
    if (!saw_cost || !saw_conn) throw Error("incomplete solution file");
    return sol;
}

}  // namespace kaug
