#include "epg/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace epg {

namespace {

// Significant lines with their 1-based line numbers; comments and blanks dropped.
std::vector<std::pair<std::size_t, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.emplace_back(number, line.substr(first, last - first + 1));
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss{line};
    std::string field;
    while (ss >> field)
        fields.push_back(field);
    return fields;
}

long parse_int(const std::string& token, std::size_t line_number) {
    try {
        std::size_t pos = 0;
        const long value = std::stol(token, &pos);
        if (pos != token.size())
            throw std::invalid_argument{token};
        return value;
    } catch (const std::exception&) {
        throw ParseError{line_number, "expected an integer, got \"" + token + "\""};
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw InvalidInput{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::string expand_bitstring(const std::string& token, std::size_t line_number) {
    std::string out;
    std::size_t i = 0;
    while (i < token.size()) {
        const char bit = token[i];
        if (bit != '0' && bit != '1')
            throw ParseError{line_number, "bad character '" + std::string(1, bit) + "' in bitstring"};
        ++i;
        std::size_t count = 1;
        if (i < token.size() && token[i] == '^') {
            ++i;
            // single digit, or a braced multi-digit count as in 10^{12}
            if (i < token.size() && token[i] == '{') {
                ++i;
                std::size_t digits = 0;
                count = 0;
                while (i < token.size() && token[i] >= '0' && token[i] <= '9') {
                    count = count * 10 + static_cast<std::size_t>(token[i] - '0');
                    ++i;
                    ++digits;
                }
                if (digits == 0 || i == token.size() || token[i] != '}')
                    throw ParseError{line_number, "malformed repetition count; expected ^{<digits>}"};
                ++i;
            } else if (i < token.size() && token[i] >= '0' && token[i] <= '9') {
                count = static_cast<std::size_t>(token[i] - '0');
                ++i;
            } else {
                throw ParseError{line_number, "'^' must be followed by a repetition count"};
            }
            if (count > 1'000'000)
                throw ParseError{line_number, "repetition count too large"};
        }
        out.append(count, bit);
    }
    return out;
}

EdgePeriodicGraph parse_epg(std::istream& in) {
    const auto lines = significant_lines(in);
    if (lines.empty())
        throw ParseError{1, "expected header \"epg <n> <m>\""};
    const auto header = split_fields(lines[0].second);
    if (header.size() != 3 || header[0] != "epg")
        throw ParseError{lines[0].first, "expected header \"epg <n> <m>\""};
    const long n = parse_int(header[1], lines[0].first);
    const long m = parse_int(header[2], lines[0].first);
    if (lines.size() != static_cast<std::size_t>(m) + 1)
        throw ParseError{lines.back().first,
                         "expected " + std::to_string(m) + " edge lines, got " + std::to_string(lines.size() - 1)};
    std::vector<Edge> edges;
    std::vector<BinaryLabel> labels;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i].second);
        if (fields.size() != 3)
            throw ParseError{lines[i].first, "expected \"u v <bitstring>\""};
        const long u = parse_int(fields[0], lines[i].first);
        const long v = parse_int(fields[1], lines[i].first);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        try {
            labels.emplace_back(expand_bitstring(fields[2], lines[i].first));
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError{lines[i].first, e.what()};
        }
    }
    // Re-sort labels to match StaticGraph's sorted edge order.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<Edge> sorted_edges;
    std::vector<BinaryLabel> sorted_labels;
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_labels.push_back(labels[i]);
    }
    try {
        return EdgePeriodicGraph{StaticGraph{static_cast<int>(n), std::move(sorted_edges)},
                                 std::move(sorted_labels)};
    } catch (const InvalidInput& e) {
        throw ParseError{lines[0].first, e.what()};
    }
}

EdgePeriodicGraph parse_epg_text(const std::string& text) {
    std::istringstream in{text};
    return parse_epg(in);
}

EdgePeriodicGraph load_epg(const std::string& path) { return parse_epg_text(read_file(path)); }

std::string print_epg(const EdgePeriodicGraph& g) {
    std::ostringstream out;
    out << "epg " << g.graph().vertex_count() << ' ' << g.graph().edge_count() << '\n';
    const auto& edges = g.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << edges[i].u << ' ' << edges[i].v << ' ' << g.label(i).str() << '\n';
    return out.str();
}

StaticGraph parse_graph(std::istream& in) {
    const auto lines = significant_lines(in);
    if (lines.empty())
        throw ParseError{1, "expected header \"graph <n> <m>\""};
    const auto header = split_fields(lines[0].second);
    if (header.size() != 3 || header[0] != "graph")
        throw ParseError{lines[0].first, "expected header \"graph <n> <m>\""};
    const long n = parse_int(header[1], lines[0].first);
    const long m = parse_int(header[2], lines[0].first);
    if (lines.size() != static_cast<std::size_t>(m) + 1)
        throw ParseError{lines.back().first,
                         "expected " + std::to_string(m) + " edge lines, got " + std::to_string(lines.size() - 1)};
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i].second);
        if (fields.size() != 2)
            throw ParseError{lines[i].first, "expected \"u v\""};
        edges.emplace_back(static_cast<VertexId>(parse_int(fields[0], lines[i].first)),
                           static_cast<VertexId>(parse_int(fields[1], lines[i].first)));
    }
    try {
        return StaticGraph{static_cast<int>(n), std::move(edges)};
    } catch (const InvalidInput& e) {
        throw ParseError{lines[0].first, e.what()};
    }
}

StaticGraph parse_graph_text(const std::string& text) {
    std::istringstream in{text};
    return parse_graph(in);
}

StaticGraph load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

std::string print_graph(const StaticGraph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

MulticoloredPcaInstance parse_mcpca_text(const std::string& text) {
    std::istringstream in{text};
    const auto lines = significant_lines(in);
    MulticoloredPcaInstance x;
    x.groups.emplace_back();
    for (const auto& [number, line] : lines) {
        if (line == "%") {
            x.groups.emplace_back();
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 1)
            throw ParseError{number, "expected one bitstring per line"};
        try {
            x.groups.back().emplace_back(expand_bitstring(fields[0], number));
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError{number, e.what()};
        }
    }
    for (std::size_t i = 0; i < x.groups.size(); ++i)
        if (x.groups[i].empty() && x.groups.size() > 1)
            throw ParseError{1, "group " + std::to_string(i + 1) + " is empty"};
    return x;
}

MulticoloredPcaInstance load_mcpca(const std::string& path) { return parse_mcpca_text(read_file(path)); }

PcaInstance parse_pca_text(const std::string& text) {
    const auto mc = parse_mcpca_text(text);
    if (mc.groups.size() != 1)
        throw ParseError{1, "expected a plain PCA file without % group separators"};
    return PcaInstance{mc.groups[0]};
}

PcaInstance load_pca(const std::string& path) { return parse_pca_text(read_file(path)); }

std::string print_pca(const PcaInstance& x) {
    std::ostringstream out;
    for (const auto& s : x.strings)
        out << s.str() << '\n';
    return out.str();
}

std::string print_mcpca(const MulticoloredPcaInstance& x) {
    std::ostringstream out;
    for (std::size_t i = 0; i < x.groups.size(); ++i) {
        if (i > 0)
            out << "%\n";
        for (const auto& s : x.groups[i])
            out << s.str() << '\n';
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
        if (!out)
            throw InvalidInput{"cannot write " + tmp};
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InvalidInput{"cannot rename " + tmp + " to " + path};
}

std::string digest(const std::string& payload) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string{buf};
}

} // namespace epg
