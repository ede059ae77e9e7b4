#include <charconv>
#include <cctype>
#include <sstream>

#include "spreadlab/error.hpp"
#include "spreadlab/graph.hpp"

namespace spreadlab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int graph6_value(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw parse_error("graph6: truncated input", pos);
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of range 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // Trailing newline / whitespace is tolerated; anything else is not.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    std::size_t pos = 0;
    if (text.starts_with(">>")) {
        if (!text.starts_with(kGraph6Header)) throw parse_error("graph6: malformed header", 0);
        pos = kGraph6Header.size();
    }
    if (pos >= text.size()) throw parse_error("graph6: empty input", pos);

    std::int64_t n = 0;
    if (text[pos] != '~') {
        n = graph6_value(text, pos++);
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | graph6_value(text, pos++);
    } else {
        ++pos;
        for (int k = 0; k < 3; ++k) n = (n << 6) | graph6_value(text, pos++);
    }
    if (n > (1 << 20)) throw parse_error("graph6: vertex count too large", pos);

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < bytes) throw parse_error("graph6: truncated bit stream", text.size());
    if (text.size() - pos > bytes) throw parse_error("graph6: trailing bytes", pos + bytes);

    std::vector<Edge> edges;
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            const int value = graph6_value(text, at);
            if (value & (1 << (5 - k % 6))) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_label = -1;
    std::size_t line_start = 0;
    bool first_content_line = true;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.emplace_back(line.substr(i, j - i), line_start + i);
            i = j;
        }
        auto to_int = [](std::string_view tok, std::size_t offset) {
            long long value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw parse_error("edge list: expected an integer, got '" + std::string(tok) + "'", offset);
            if (value < 0) throw parse_error("edge list: negative vertex label", offset);
            if (value > (1 << 24)) throw parse_error("edge list: vertex label too large", offset);
            return static_cast<int>(value);
        };

        if (!tokens.empty()) {
            if (first_content_line && tokens[0].first == "n") {
                if (tokens.size() != 2) throw parse_error("edge list: expected 'n <count>'", tokens[0].second);
                declared_n = to_int(tokens[1].first, tokens[1].second);
            } else {
                if (tokens.size() % 2 != 0)
                    throw parse_error("edge list: odd number of labels on line", tokens.back().second);
                for (std::size_t t = 0; t < tokens.size(); t += 2) {
                    int u = to_int(tokens[t].first, tokens[t].second);
                    int v = to_int(tokens[t + 1].first, tokens[t + 1].second);
                    if (u == v) throw parse_error("edge list: loop at vertex " + std::to_string(u), tokens[t].second);
                    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
                        throw parse_error("edge list: label >= declared n", tokens[u >= declared_n ? t : t + 1].second);
                    edges.emplace_back(u, v);
                    max_label = std::max({max_label, u, v});
                }
            }
            first_content_line = false;
        }
        line_start = line_end + 1;
    }
    const int n = declared_n >= 0 ? declared_n : max_label + 1;
    if (n <= 0) throw parse_error("edge list: empty graph", 0);
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

FamilyDescriptor parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw invalid_argument("family descriptor must look like name:args, got '" + std::string(text) + "'");
    const std::string_view name = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);

    std::vector<int> values;
    while (!args.empty()) {
        const auto comma = args.find(',');
        const auto tok = args.substr(0, comma);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw invalid_argument("bad family argument '" + std::string(tok) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        args.remove_prefix(comma + 1);
    }

    auto need = [&](std::size_t count) {
        if (values.size() != count)
            throw invalid_argument("family '" + std::string(name) + "' takes " + std::to_string(count) +
                                   " argument(s)");
    };
    FamilyDescriptor d{};
    if (name == "complete") d.family = Family::complete, need(1);
    else if (name == "path") d.family = Family::path, need(1);
    else if (name == "star") d.family = Family::star, need(1);
    else if (name == "cycle") d.family = Family::cycle, need(1);
    else if (name == "complete_bipartite" || name == "kab") d.family = Family::complete_bipartite, need(2);
    else if (name == "kite") d.family = Family::kite, need(2);
    else throw invalid_argument("unknown family '" + std::string(name) + "'");
    d.p1 = values[0];
    if (values.size() > 1) d.p2 = values[1];
    return d;
}

std::string to_string(const FamilyDescriptor& d) {
    switch (d.family) {
        case Family::complete: return "complete:" + std::to_string(d.p1);
        case Family::path: return "path:" + std::to_string(d.p1);
        case Family::star: return "star:" + std::to_string(d.p1);
        case Family::cycle: return "cycle:" + std::to_string(d.p1);
        case Family::complete_bipartite:
            return "complete_bipartite:" + std::to_string(d.p1) + "," + std::to_string(d.p2);
        case Family::kite: return "kite:" + std::to_string(d.p1) + "," + std::to_string(d.p2);
    }
    return "?";
}

}  // namespace spreadlab
