#include <berge/io.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

namespace berge {

namespace {

bool is_index(const std::string & token)
{
    return !token.empty() && token.size() < 10 && std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> split(const std::string & line)
{
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(t);
    return tokens;
}

} // namespace

LinearHypergraph parse_hg(std::istream & in)
{
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.emplace_back(number, split(line));
    }
    if (lines.empty())
        throw Error(ErrorCode::ParseError, "missing header line 'n m'");

    const auto & [header_line, header] = lines.front();
    if (header.size() != 2 || !is_index(header[0]) || !is_index(header[1]))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(header_line) + ": expected header 'n m'");
    const int n = std::stoi(header[0]);
    const auto m = static_cast<std::size_t>(std::stoul(header[1]));
    if (lines.size() - 1 != m)
        throw Error(ErrorCode::ParseError, "header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) + " were given");

    bool labelled = false;
    for (std::size_t i = 1; i < lines.size(); ++i)
        for (const auto & t : lines[i].second)
            labelled = labelled || !is_index(t);

    std::map<std::string, VertexId> labels;
    std::vector<std::vector<VertexId>> raw;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & [number, tokens] = lines[i];
        std::vector<VertexId> edge;
        for (const auto & t : tokens) {
            if (!labelled) {
                edge.push_back(std::stoi(t));
                continue;
            }
            auto [it, inserted] = labels.emplace(t, static_cast<VertexId>(labels.size()));
            if (inserted && it->second >= n)
                throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(number) + ": more than " + std::to_string(n) + " distinct labels");
            edge.push_back(it->second);
        }
        raw.push_back(std::move(edge));
    }
    return LinearHypergraph::validate(n, raw);
}

LinearHypergraph parse_hg(const std::string & text)
{
    std::istringstream in(text);
    return parse_hg(in);
}

LinearHypergraph read_hg_file(const std::filesystem::path & path)
{
    if (path == "-")
        return parse_hg(std::cin);
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    return parse_hg(in);
}

void write_hg(std::ostream & out, const LinearHypergraph & h)
{
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto & e : h.edges()) {
        for (int i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

std::string to_hg(const LinearHypergraph & h)
{
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

} // namespace berge
