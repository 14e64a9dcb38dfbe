#include "ramsey/graph_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> fields;
    for (std::string f; ss >> f;) fields.push_back(f);
    return fields;
}

long long parse_int(const std::string& field, std::size_t line_no) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(field, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + field + "'");
    }
    if (used != field.size()) throw ParseError(line_no, "expected an integer, got '" + field + "'");
    return value;
}

enum class Columns { Detect, Plain, Colored };

struct Parsed {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<EdgeColor> colors;
    bool colored = false;
};

Parsed parse_edge_list(std::istream& in, Columns columns) {
    Parsed out;
    std::string line;
    std::size_t line_no = 0;
    long long declared_m = -1;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (declared_m < 0) {
            if (fields.size() != 2) throw ParseError(line_no, "header must be 'n m'");
            const auto n = parse_int(fields[0], line_no);
            declared_m = parse_int(fields[1], line_no);
            if (n < 0 || n > std::numeric_limits<int>::max())
                throw ParseError(line_no, "vertex count out of range");
            if (declared_m < 0) throw ParseError(line_no, "negative edge count");
            out.n = static_cast<int>(n);
            continue;
        }

        if (columns == Columns::Detect) columns = fields.size() == 3 ? Columns::Colored : Columns::Plain;
        const std::size_t want = columns == Columns::Colored ? 3 : 2;
        if (fields.size() != want)
            throw ParseError(line_no, "expected " + std::to_string(want) + " fields, got " +
                                          std::to_string(fields.size()));
        if (static_cast<long long>(out.edges.size()) == declared_m)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(declared_m));

        const auto u = parse_int(fields[0], line_no);
        const auto v = parse_int(fields[1], line_no);
        if (u < 0 || v < 0 || u >= out.n || v >= out.n)
            throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(out.n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(line_no, "endpoints must satisfy u < v");
        if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second)
            throw ParseError(line_no, "duplicate edge " + fields[0] + " " + fields[1]);
        out.edges.push_back({static_cast<int>(u), static_cast<int>(v)});

        if (columns == Columns::Colored) {
            if (fields[2] == "B") out.colors.push_back(EdgeColor::Blue);
            else if (fields[2] == "R") out.colors.push_back(EdgeColor::Red);
            else throw ParseError(line_no, "color must be B or R, got '" + fields[2] + "'");
        }
    }
    if (declared_m < 0) throw ParseError(line_no, "missing 'n m' header");
    if (static_cast<long long>(out.edges.size()) != declared_m)
        throw ParseError(line_no, "declared " + std::to_string(declared_m) + " edges, found " +
                                      std::to_string(out.edges.size()));
    out.colored = columns == Columns::Colored;
    return out;
}

// The colored constructor wants colors in canonical edge order.
ColoredGraph build_colored(Parsed&& p) {
    Graph g(p.n, p.edges);
    std::vector<EdgeColor> colors(g.num_edges());
    for (std::size_t i = 0; i < p.edges.size(); ++i) colors[*g.edge_id(p.edges[i].u, p.edges[i].v)] = p.colors[i];
    return ColoredGraph(std::move(g), std::move(colors));
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path.string());
    return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    auto p = parse_edge_list(in, Columns::Plain);
    return Graph(p.n, std::move(p.edges));
}

ColoredGraph parse_colored_graph(std::istream& in) {
    return build_colored(parse_edge_list(in, Columns::Colored));
}

std::variant<Graph, ColoredGraph> parse_any_graph(std::istream& in) {
    auto p = parse_edge_list(in, Columns::Detect);
    if (p.colored) return build_colored(std::move(p));
    return Graph(p.n, std::move(p.edges));
}

void format_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void format_colored_graph(std::ostream& out, const ColoredGraph& cg) {
    const auto& g = cg.graph();
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << color_code(cg.color(i)) << '\n';
}

Graph read_graph(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return parse_graph(in);
}

ColoredGraph read_colored_graph(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return parse_colored_graph(in);
}

std::variant<Graph, ColoredGraph> read_any_graph(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return parse_any_graph(in);
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    format_graph(out, g);
}

void write_colored_graph(const ColoredGraph& cg, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    format_colored_graph(out, cg);
}

}  // namespace ramsey
