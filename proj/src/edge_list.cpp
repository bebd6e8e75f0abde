#include "indmatch/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace indmatch {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') {
            return true;
        }
        if (!isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    long long n = -1;
    long long m = -1;
    int header_line = 0;
    EdgeList edges;
    std::vector<int> edge_lines;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) {
            continue;
        }
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0) {
                throw ParseError(lineno, "expected header \"n m\"");
            }
            std::string rest;
            if (fields >> rest) {
                throw ParseError(lineno, "trailing tokens after header");
            }
            header_line = lineno;
            continue;
        }
        long long u, v;
        if (!(fields >> u >> v)) {
            throw ParseError(lineno, "expected edge \"u v\"");
        }
        std::string rest;
        if (fields >> rest) {
            throw ParseError(lineno, "trailing tokens after edge");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(lineno, "vertex id out of range [0, " +
                                         std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(lineno, "self-loop");
        }
        if (static_cast<long long>(edges.size()) >= m) {
            throw ParseError(lineno, "more than " + std::to_string(m) +
                                         " edges declared in header");
        }
        edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)}.normalized());
        edge_lines.push_back(lineno);
    }
    if (n < 0) {
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header \"n m\"");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno == 0 ? header_line : lineno,
                         "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    }
    std::vector<std::pair<Edge, int>> sorted;
    sorted.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        sorted.emplace_back(edges[i], edge_lines[i]);
    }
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i - 1].first) {
            throw ParseError(sorted[i].second, "duplicate edge");
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << write_edge_list(g);
}

}  // namespace indmatch
