#include "semipair/io.hpp"

#include "semipair/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

namespace semipair {
namespace {

struct LineReader {
    std::string_view text;
    std::size_t offset = 0;
    int line_no = 0;

    // next non-comment, non-blank line
    bool next(std::string& out) {
        while (offset < text.size()) {
            std::size_t end = text.find('\n', offset);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(offset, end - offset);
            offset = end + 1;
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.remove_suffix(1);
            while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
            if (line.empty() || line.front() == '#') continue;
            out.assign(line);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    }
};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) fields.push_back(tok);
    return fields;
}

int parse_int(const std::string& tok, LineReader& reader) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        reader.fail("expected an integer, got '" + tok + "'");
    return value;
}

double parse_double(const std::string& tok, LineReader& reader) {
    try {
        std::size_t used = 0;
        double value = std::stod(tok, &used);
        if (used != tok.size()) reader.fail("expected a number, got '" + tok + "'");
        return value;
    } catch (const std::exception&) {
        reader.fail("expected a number, got '" + tok + "'");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
    LineReader reader{text};
    std::string line;
    if (!reader.next(line)) throw std::invalid_argument("edge list: empty input");
    auto header = split_fields(line);
    if (header.size() != 2) reader.fail("expected header 'n m'");
    int n = parse_int(header[0], reader);
    int m = parse_int(header[1], reader);
    if (n < 1) reader.fail("vertex count must be >= 1");
    if (m < 0) reader.fail("edge count must be >= 0");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        if (!reader.next(line))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(e));
        auto fields = split_fields(line);
        if (fields.size() != 2) reader.fail("expected 'u v'");
        int u = parse_int(fields[0], reader);
        int v = parse_int(fields[1], reader);
        if (u < 1 || u > n || v < 1 || v > n)
            reader.fail("vertex id out of range in edge (" + fields[0] + "," + fields[1] + ")");
        if (u == v) reader.fail("self-loop (" + fields[0] + "," + fields[1] + ")");
        edges.emplace_back(u, v);
    }
    if (reader.next(line)) reader.fail("trailing content after the declared edges");
    return Graph::build(n, edges);
}

std::string emit_edgelist(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    std::sort(edges.begin(), edges.end());
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

IntervalModel parse_intervals(std::string_view text) {
    LineReader reader{text};
    std::string line;
    if (!reader.next(line)) throw std::invalid_argument("interval file: empty input");
    auto header = split_fields(line);
    if (header.size() != 1) reader.fail("expected header 'n'");
    int n = parse_int(header[0], reader);
    if (n < 1) reader.fail("interval count must be >= 1");

    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!reader.next(line))
            throw std::invalid_argument("interval file: expected " + std::to_string(n) +
                                        " intervals, got " + std::to_string(i));
        auto fields = split_fields(line);
        if (fields.size() != 2) reader.fail("expected 'a b'");
        intervals.push_back({parse_double(fields[0], reader), parse_double(fields[1], reader)});
    }
    if (reader.next(line)) reader.fail("trailing content after the declared intervals");
    return IntervalModel::from(std::move(intervals));
}

std::string emit_intervals(const IntervalModel& model) {
    std::vector<Interval> sorted = model.intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    std::string out = std::to_string(model.size()) + "\n";
    for (const auto& iv : sorted)
        out += format_double(iv.left) + " " + format_double(iv.right) + "\n";
    return out;
}

SemipairedSolution parse_solution(std::string_view text) {
    LineReader reader{text};
    std::string line;
    if (!reader.next(line)) throw std::invalid_argument("solution file: empty input");
    auto header = split_fields(line);
    if (header.size() != 1) reader.fail("expected header 'k' (number of pairs)");
    int k = parse_int(header[0], reader);
    if (k < 0) reader.fail("pair count must be >= 0");

    SemipairedSolution sol;
    for (int i = 0; i < k; ++i) {
        if (!reader.next(line))
            throw std::invalid_argument("solution file: expected " + std::to_string(k) +
                                        " pairs, got " + std::to_string(i));
        auto fields = split_fields(line);
        if (fields.size() != 2) reader.fail("expected 'u v'");
        sol.add_pair(parse_int(fields[0], reader), parse_int(fields[1], reader));
    }
    if (reader.next(line)) reader.fail("trailing content after the declared pairs");
    return sol;
}

std::string emit_solution(const SemipairedSolution& sol) {
    std::string out = std::to_string(sol.pairs.size()) + "\n";
    for (const auto& [u, v] : sol.pairs)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<std::string> parse_labels(std::string_view text) {
    LineReader reader{text};
    std::string line;
    std::vector<std::pair<int, std::string>> entries;
    int max_id = 0;
    while (reader.next(line)) {
        auto fields = split_fields(line);
        if (fields.size() != 2) reader.fail("expected '<id> <name>'");
        int id = parse_int(fields[0], reader);
        if (id < 1) reader.fail("label id must be >= 1");
        entries.emplace_back(id, fields[1]);
        max_id = std::max(max_id, id);
    }
    std::vector<std::string> labels(static_cast<std::size_t>(max_id) + 1, "");
    for (auto& [id, name] : entries) {
        if (!labels[static_cast<std::size_t>(id)].empty())
            throw std::invalid_argument("labels: duplicate id " + std::to_string(id));
        labels[static_cast<std::size_t>(id)] = std::move(name);
    }
    for (int id = 1; id <= max_id; ++id)
        if (labels[static_cast<std::size_t>(id)].empty())
            throw std::invalid_argument("labels: missing id " + std::to_string(id));
    return labels;
}

std::string emit_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t id = 1; id < labels.size(); ++id)
        out += std::to_string(id) + " " + labels[id] + "\n";
    return out;
}

namespace {

// deterministic bounded draw from a mt19937_64 stream
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr int kConnectivityRetries = 1000;

Graph generate_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph generate_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen: cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return Graph::build(n, edges);
}

Graph generate_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
    return Graph::build(n, edges);
}

Graph generate_gnp(int n, double p, std::mt19937_64& rng) {
    if (p < 0 || p > 1) throw std::invalid_argument("gen: gnp probability outside [0,1]");
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (draw_unit(rng) < p) edges.emplace_back(u, v);
        Graph g = Graph::build(n, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("gen: gnp connectivity retries exhausted");
}

Graph generate_random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= n; ++i) {
        int parent = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(i - 1))) + 1;
        edges.emplace_back(parent, i);
    }
    return Graph::build(n, edges);
}

// endpoints 1..2n assigned left to right; at each value either a new interval
// opens or a uniformly random open one closes. The per-instance close bias
// steers density from near-complete to path-like.
IntervalModel generate_random_interval(int n, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        double close_bias = 0.25 + 0.7 * draw_unit(rng);
        std::vector<Interval> intervals(static_cast<std::size_t>(n));
        std::vector<int> open;
        int next_interval = 0;
        for (int value = 1; value <= 2 * n; ++value) {
            int remaining = 2 * n - value + 1;
            // keeping one interval open until all have opened makes every new
            // interval overlap an open one, so the graph comes out connected
            bool do_close;
            if (open.empty() || (open.size() < 2 && next_interval < n)) do_close = false;
            else if (next_interval == n || static_cast<int>(open.size()) == remaining)
                do_close = true;
            else do_close = draw_unit(rng) < close_bias;

            if (do_close) {
                std::size_t pick = draw_below(rng, open.size());
                intervals[static_cast<std::size_t>(open[pick])].right = value;
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
            } else {
                intervals[static_cast<std::size_t>(next_interval)].left = value;
                open.push_back(next_interval);
                ++next_interval;
            }
        }
        IntervalModel model = IntervalModel::from(std::move(intervals));
        if (n == 1 || is_connected(interval_graph_from_model(model))) return model;
    }
    throw std::runtime_error("gen: random-interval connectivity retries exhausted");
}

}  // namespace

GenSpec GenSpec::parse(std::string_view family_token, int n, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.seed = seed;
    if (n < 1) throw std::invalid_argument("gen: n must be >= 1");

    auto colon = family_token.find(':');
    std::string_view head = family_token.substr(0, colon);
    std::string_view rest =
        colon == std::string_view::npos ? std::string_view{} : family_token.substr(colon + 1);

    if (head == "path") spec.family = Family::path;
    else if (head == "cycle") spec.family = Family::cycle;
    else if (head == "star") spec.family = Family::star;
    else if (head == "random-tree") spec.family = Family::random_tree;
    else if (head == "random-interval") spec.family = Family::random_interval;
    else if (head == "gnp") {
        spec.family = Family::gnp;
        if (rest.empty()) throw std::invalid_argument("gen: gnp needs a probability, e.g. gnp:0.3");
        try {
            spec.edge_probability = std::stod(std::string(rest));
        } catch (const std::exception&) {
            throw std::invalid_argument("gen: bad gnp probability '" + std::string(rest) + "'");
        }
    } else if (head == "gp4") {
        spec.family = Family::gp4;
        if (rest.empty()) throw std::invalid_argument("gen: gp4 needs an inner family, e.g. gp4:path");
        spec.inner = std::string(rest);
    } else {
        throw std::invalid_argument("gen: unknown family '" + std::string(family_token) + "'");
    }
    return spec;
}

std::variant<Graph, IntervalModel> generate(const GenSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    switch (spec.family) {
        case GenSpec::Family::path: return generate_path(spec.n);
        case GenSpec::Family::cycle: return generate_cycle(spec.n);
        case GenSpec::Family::star: return generate_star(spec.n);
        case GenSpec::Family::gnp: return generate_gnp(spec.n, spec.edge_probability, rng);
        case GenSpec::Family::random_tree: return generate_random_tree(spec.n, rng);
        case GenSpec::Family::random_interval: return generate_random_interval(spec.n, rng);
        case GenSpec::Family::gp4: {
            GenSpec inner = GenSpec::parse(spec.inner, spec.n, spec.seed);
            return gp4_from(generate_graph(inner)).gadget;
        }
    }
    throw std::logic_error("gen: unhandled family");
}

Graph generate_graph(const GenSpec& spec) {
    auto out = generate(spec);
    if (auto* g = std::get_if<Graph>(&out)) return std::move(*g);
    throw std::invalid_argument("gen: family produces an interval model, not a graph");
}

}  // namespace semipair
