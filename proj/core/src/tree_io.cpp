#include "treeinv/tree_io.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace treeinv {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
    if (ec != std::errc() || ptr != token.end()) {
        throw ParseError("expected an integer for " + std::string(what) +
                         ", got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
    bool have_header = false;
    int n = 0;
    std::vector<Edge> edges;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'n <count>'");
            }
            n = parse_int(tokens[1], "vertex count");
            have_header = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'u v'");
        }
        edges.push_back({parse_int(tokens[0], "edge endpoint"),
                         parse_int(tokens[1], "edge endpoint")});
    }
    if (!have_header) {
        throw ParseError("missing 'n <count>' header");
    }
    return Tree::from_edges(n, std::move(edges));
}

std::string to_edge_list(const Tree& tree) {
    std::string out = "n " + std::to_string(tree.vertex_count()) + "\n";
    for (const Edge& e : tree.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

Tree parse_graph6(std::string_view record) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (record.substr(0, kHeader.size()) == kHeader) {
        record = record.substr(kHeader.size());
    }
    while (!record.empty() && is_space(record.back())) record.remove_suffix(1);
    while (!record.empty() && is_space(record.front())) record.remove_prefix(1);
    if (record.empty()) {
        throw ParseError("empty graph6 record");
    }
    const unsigned char first = static_cast<unsigned char>(record[0]);
    if (first == 126) {
        throw ParseError("long-form graph6 (n > 62) is not supported");
    }
    if (first < 63 || first > 125) {
        throw ParseError("invalid graph6 size byte");
    }
    const int n = first - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (record.size() != expected) {
        throw ParseError("graph6 record has " + std::to_string(record.size()) +
                         " bytes, expected " + std::to_string(expected) +
                         " for n=" + std::to_string(n));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    int group = 0;  // current 6-bit group, refreshed every 6 bits
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) {
                const unsigned char c = static_cast<unsigned char>(record[1 + k / 6]);
                if (c < 63 || c > 126) {
                    throw ParseError("invalid graph6 data byte");
                }
                group = c - 63;
            }
            if ((group >> (5 - k % 6)) & 1) {
                edges.push_back({i, j});
            }
        }
    }
    // trailing padding must be zero bits
    for (; k % 6 != 0; ++k) {
        if ((group >> (5 - k % 6)) & 1) {
            throw ParseError("nonzero padding in graph6 record");
        }
    }
    return Tree::from_edges(n, std::move(edges));
}

std::string to_graph6(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n > 62) {
        throw TooLargeError("graph6 short form covers n <= 62, got n=" +
                            std::to_string(n));
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (tree.adjacent(i, j)) {
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
            }
        }
    }
    return out;
}

}  // namespace treeinv
