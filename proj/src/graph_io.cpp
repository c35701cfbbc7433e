#include "kemeny/graph_io.hpp"

#include "kemeny/errors.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace kemeny {
namespace {

// Strips comments and surrounding blanks; returns the remaining tokens.
std::vector<std::string> content_tokens(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    return tokens;
}

long parse_nonnegative(const std::string& tok, int line_no) {
    std::size_t used = 0;
    long value = -1;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || value < 0) {
        throw FormatError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                          tok + "'");
    }
    return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string raw;
    int line_no = 0;
    long n = -1;
    long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = content_tokens(raw);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw FormatError("line " + std::to_string(line_no) + ": expected two integers");
        }
        const long a = parse_nonnegative(tokens[0], line_no);
        const long b = parse_nonnegative(tokens[1], line_no);
        if (n < 0) {
            if (a < 1) throw FormatError("header: vertex count must be at least 1");
            n = a;
            m = b;
            continue;
        }
        if (static_cast<long>(edges.size()) == m) {
            throw FormatError("line " + std::to_string(line_no) + ": more edges than the header's " +
                              std::to_string(m));
        }
        if (a >= n || b >= n) {
            throw FormatError("line " + std::to_string(line_no) + ": vertex out of range 0.." +
                              std::to_string(n - 1));
        }
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (n < 0) throw FormatError("missing 'n m' header");
    if (static_cast<long>(edges.size()) != m) {
        throw FormatError("header promises " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file '" + path.string() + "'");
    return read_graph(in);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write graph file '" + path.string() + "'");
    write_graph(out, g);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace kemeny
