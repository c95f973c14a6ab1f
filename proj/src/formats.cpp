#include "orichrom/formats.hpp"

#include "orichrom/error.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace orichrom {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

void strip_header(std::string_view &s, std::string_view header)
{
    if (s.starts_with(header))
        s.remove_prefix(header.size());
}

void write_size(std::string &out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
        return;
    }
    const int groups = n <= 258047 ? 3 : 6;
    out.append(groups == 3 ? "~" : "~~");
    for (int g = groups - 1; g >= 0; --g)
        out.push_back(static_cast<char>(((n >> (6 * g)) & 63) + 63));
}

std::uint64_t read_size(std::string_view s, std::size_t &pos)
{
    auto byte = [&](std::size_t i) -> std::uint64_t {
        if (i >= s.size())
            throw FormatError("truncated size field");
        const auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw FormatError("invalid character in size field");
        return c - 63;
    };
    if (byte(pos) != 63) {
        return byte(pos++);
    }
    int groups = 3;
    ++pos;
    if (pos < s.size() && s[pos] == '~') {
        groups = 6;
        ++pos;
    }
    std::uint64_t n = 0;
    for (int g = 0; g < groups; ++g)
        n = (n << 6) | byte(pos++);
    return n;
}

class BitWriter {
  public:
    void push(bool bit)
    {
        current_ = static_cast<unsigned char>((current_ << 1) | (bit ? 1 : 0));
        if (++filled_ == 6)
            flush();
    }
    std::string finish()
    {
        if (filled_ > 0) {
            current_ = static_cast<unsigned char>(current_ << (6 - filled_));
            flush();
        }
        return std::move(out_);
    }

  private:
    void flush()
    {
        out_.push_back(static_cast<char>(current_ + 63));
        current_ = 0;
        filled_ = 0;
    }
    std::string out_;
    unsigned char current_ = 0;
    int filled_ = 0;
};

/// Decodes exactly `bits` bits from `data`, requiring zero padding.
std::vector<bool> read_bits(std::string_view data, std::uint64_t bits)
{
    const auto bytes = (bits + 5) / 6;
    if (data.size() != bytes)
        throw FormatError("expected " + std::to_string(bytes) + " data bytes, got " +
                          std::to_string(data.size()));
    std::vector<bool> out;
    out.reserve(bytes * 6);
    for (char ch : data) {
        const auto c = static_cast<unsigned char>(ch);
        if (c < 63 || c > 126)
            throw FormatError("invalid character in data");
        for (int b = 5; b >= 0; --b)
            out.push_back(((c - 63) >> b) & 1);
    }
    for (auto i = bits; i < out.size(); ++i)
        if (out[i])
            throw FormatError("non-zero padding bits");
    out.resize(bits);
    return out;
}

constexpr std::uint64_t max_parsed_order = 1 << 16;

std::string dot_escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

template <class Graph>
std::string dot_text(const Graph &g, std::span<const std::string> labels, bool directed)
{
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.order()))
        throw InvalidArgument("one DOT label per vertex expected");
    std::ostringstream out;
    out << (directed ? "digraph" : "graph") << " G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!labels.empty())
            out << " [label=\"" << dot_escape(labels[v]) << "\"]";
        out << ";\n";
    }
    if constexpr (std::is_same_v<Graph, OrientedGraph>) {
        for (const auto &a : g.arcs())
            out << "  " << a.tail << " -> " << a.head << ";\n";
    } else {
        for (const auto &e : g.edges())
            out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<int> parse_ints(std::string_view text, char separator, std::string_view spec)
{
    std::vector<int> values;
    while (true) {
        const auto cut = text.find(separator);
        const auto piece = text.substr(0, cut);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
            throw InvalidArgument("bad number in graph spec '" + std::string(spec) + "'");
        values.push_back(value);
        if (cut == std::string_view::npos)
            return values;
        text.remove_prefix(cut + 1);
    }
}

} // namespace

UndirectedGraph parse_graph6(std::string_view text)
{
    auto s = trim(text);
    strip_header(s, ">>graph6<<");
    if (s.empty())
        throw FormatError("empty graph6 string");
    if (s.front() == ':' || s.front() == ';' || s.front() == '&')
        throw FormatError("not a graph6 string");
    std::size_t pos = 0;
    const auto n = read_size(s, pos);
    if (n > max_parsed_order)
        throw FormatError("graph6 order too large");
    const auto bits = read_bits(s.substr(pos), n * (n - (n > 0 ? 1 : 0)) / 2);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
        for (Vertex i = 0; i < j; ++i)
            if (bits[k++])
                edges.push_back({i, j});
    return UndirectedGraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const UndirectedGraph &g)
{
    std::string out;
    write_size(out, static_cast<std::uint64_t>(g.order()));
    BitWriter bits;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i)
            bits.push(g.adjacent(i, j));
    return out + bits.finish();
}

OrientedGraph parse_digraph6(std::string_view text)
{
    auto s = trim(text);
    strip_header(s, ">>digraph6<<");
    if (s.empty() || s.front() != '&')
        throw FormatError("digraph6 strings start with '&'");
    std::size_t pos = 1;
    const auto n = read_size(s, pos);
    if (n > max_parsed_order)
        throw FormatError("digraph6 order too large");
    const auto bits = read_bits(s.substr(pos), n * n);
    std::vector<Arc> arcs;
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
            if (!bits[i * n + j])
                continue;
            if (i == j)
                throw FormatError("digraph6 loop at vertex " + std::to_string(i));
            if (bits[j * n + i])
                throw AntisymmetryError("digraph6 contains both (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") and its reverse");
            arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    return OrientedGraph(static_cast<int>(n), std::move(arcs));
}

std::string write_digraph6(const OrientedGraph &d)
{
    std::string out = "&";
    write_size(out, static_cast<std::uint64_t>(d.order()));
    BitWriter bits;
    for (Vertex i = 0; i < d.order(); ++i)
        for (Vertex j = 0; j < d.order(); ++j)
            bits.push(d.has_arc(i, j));
    return out + bits.finish();
}

std::string write_dot(const UndirectedGraph &g, std::span<const std::string> labels)
{
    return dot_text(g, labels, false);
}

std::string write_dot(const OrientedGraph &d, std::span<const std::string> labels)
{
    return dot_text(d, labels, true);
}

AnyGraph parse_graph_spec(std::string_view spec)
{
    const auto s = trim(spec);
    const auto colon = s.find(':');
    if (colon != std::string_view::npos && colon > 0 &&
        std::isalpha(static_cast<unsigned char>(s.front()))) {
        const auto name = s.substr(0, colon);
        const auto args = s.substr(colon + 1);
        if (name == "circulant") {
            const auto comma = args.find(',');
            if (comma == std::string_view::npos)
                throw InvalidArgument("circulant spec is circulant:N,a-b-c");
            const int n = parse_ints(args.substr(0, comma), ',', s).at(0);
            const auto residues = parse_ints(args.substr(comma + 1), '-', s);
            return circulant_tournament(n, residues);
        }
        const auto v = parse_ints(args, ',', s);
        auto arity = [&](std::size_t count) {
            if (v.size() != count)
                throw InvalidArgument("wrong number of parameters in '" + std::string(s) + "'");
        };
        if (name == "path") {
            arity(1);
            return path(v[0]);
        }
        if (name == "cycle") {
            arity(1);
            return cycle(v[0]);
        }
        if (name == "complete") {
            arity(1);
            return complete(v[0]);
        }
        if (name == "bipartite") {
            arity(2);
            return complete_bipartite(v[0], v[1]);
        }
        if (name == "dpath") {
            arity(1);
            return directed_path(v[0]);
        }
        if (name == "dcycle") {
            arity(1);
            return directed_cycle(v[0]);
        }
        throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
    }
    if (s.starts_with("&") || s.starts_with(">>digraph6<<"))
        return parse_digraph6(s);
    return parse_graph6(s);
}

nlohmann::ordered_json to_json(const UndirectedGraph &g)
{
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto &e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"order", g.order()}, {"edges", edges}, {"graph6", write_graph6(g)}};
}

nlohmann::ordered_json to_json(const OrientedGraph &d)
{
    nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
    for (const auto &a : d.arcs())
        arcs.push_back({a.tail, a.head});
    return {{"order", d.order()}, {"arcs", arcs}, {"digraph6", write_digraph6(d)}};
}

nlohmann::ordered_json Report::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = "orichrom-report";
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["inputs"] = inputs;
    j["values"] = values;
    j["caps"] = caps;
    if (witness)
        j["witness"] = *witness;
    if (elapsed_ms)
        j["elapsed_ms"] = *elapsed_ms;
    return j;
}

} // namespace orichrom
