#include "wfs/core.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wfs/rng.hpp"

namespace wfs {

int Instance::total_required() const {
    return std::accumulate(f.begin(), f.end(), 0);
}

std::vector<int> Evaluation::binding_symbols() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < product.size(); ++i)
        if (product[i] == objective) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int circular_distance(int t, int tp, int t_len) {
    if (t_len < 1) throw std::invalid_argument("circular_distance: length must be positive");
    if (t < 1 || t > t_len || tp < 1 || tp > t_len)
        throw std::invalid_argument("circular_distance: position out of range [1," +
                                    std::to_string(t_len) + "]");
    return t > tp ? t - tp : t_len + t - tp;
}

std::vector<std::string> validate(const Instance& inst, const Sequence& seq) {
    std::vector<std::string> violations;
    const int t_len = seq.length();
    if (t_len > inst.t_max)
        violations.push_back("sequence length " + std::to_string(t_len) +
                             " exceeds maximum length " + std::to_string(inst.t_max));
    std::vector<int> count(static_cast<std::size_t>(inst.n), 0);
    for (int pos = 1; pos <= t_len; ++pos) {
        const int sym = seq.at(pos);
        if (sym < 1 || sym > inst.n)
            violations.push_back("position " + std::to_string(pos) + ": symbol " +
                                 std::to_string(sym) + " out of range [1," +
                                 std::to_string(inst.n) + "]");
        else
            ++count[static_cast<std::size_t>(sym - 1)];
    }
    for (int i = 0; i < inst.n; ++i) {
        const int c = count[static_cast<std::size_t>(i)];
        if (c < inst.f[static_cast<std::size_t>(i)])
            violations.push_back("symbol " + std::to_string(i + 1) + " occurs " +
                                 std::to_string(c) + " times, requires at least " +
                                 std::to_string(inst.f[static_cast<std::size_t>(i)]));
    }
    return violations;
}

Evaluation evaluate(const Instance& inst, const Sequence& seq) {
    const auto violations = validate(inst, seq);
    if (!violations.empty())
        throw std::invalid_argument("infeasible sequence: " + violations.front());

    const int t_len = seq.length();
    std::vector<std::vector<int>> positions(static_cast<std::size_t>(inst.n));
    for (int pos = 1; pos <= t_len; ++pos)
        positions[static_cast<std::size_t>(seq.at(pos) - 1)].push_back(pos);

    Evaluation ev;
    ev.max_gap.resize(static_cast<std::size_t>(inst.n), 0);
    ev.product.resize(static_cast<std::size_t>(inst.n), 0);
    for (int i = 0; i < inst.n; ++i) {
        const auto& occ = positions[static_cast<std::size_t>(i)];
        // Wrap gap t_len + first - last also covers the single-occurrence
        // case, where it equals t_len.
        int gap = t_len + occ.front() - occ.back();
        for (std::size_t k = 1; k < occ.size(); ++k)
            gap = std::max(gap, occ[k] - occ[k - 1]);
        ev.max_gap[static_cast<std::size_t>(i)] = gap;
        ev.product[static_cast<std::size_t>(i)] =
            inst.w[static_cast<std::size_t>(i)] * static_cast<std::int64_t>(gap);
        ev.objective = std::max(ev.objective, ev.product[static_cast<std::size_t>(i)]);
    }
    return ev;
}

Sequence trivial_solution(const Instance& inst) {
    Sequence seq;
    seq.symbols.reserve(static_cast<std::size_t>(inst.total_required()));
    for (int i = 0; i < inst.n; ++i)
        for (int k = 0; k < inst.f[static_cast<std::size_t>(i)]; ++k)
            seq.symbols.push_back(i + 1);
    return seq;
}

Sequence rotate(const Sequence& seq, int r) {
    const int t_len = seq.length();
    if (t_len == 0) return seq;
    int shift = r % t_len;
    if (shift < 0) shift += t_len;
    Sequence out;
    out.symbols.resize(static_cast<std::size_t>(t_len));
    for (int idx = 0; idx < t_len; ++idx)
        out.symbols[static_cast<std::size_t>(idx)] =
            seq.symbols[static_cast<std::size_t>((idx + shift) % t_len)];
    return out;
}

namespace {

// Content lines of the stream with comments stripped and blanks dropped.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::int64_t> parse_int_line(const std::string& line, const std::string& what) {
    std::istringstream is(line);
    std::vector<std::int64_t> values;
    std::string token;
    while (is >> token) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("invalid " + what + " token '" + token + "'");
        }
    }
    return values;
}

} // namespace

Instance parse_instance(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.size() < 3)
        throw ParseError("instance needs a header line, a weight line and a frequency line");
    if (lines.size() > 3)
        throw ParseError("unexpected extra content after the frequency line");

    const auto header = parse_int_line(lines[0], "header");
    if (header.size() != 2)
        throw ParseError("malformed header: expected 'n T', got " +
                         std::to_string(header.size()) + " values");
    if (header[0] < 1) throw ParseError("symbol count must be positive");
    if (header[0] > 100000) throw ParseError("symbol count out of supported range");
    if (header[1] < 1) throw ParseError("maximum length must be positive");
    if (header[1] > 100000000) throw ParseError("maximum length out of supported range");

    Instance inst;
    inst.n = static_cast<int>(header[0]);
    inst.t_max = static_cast<int>(header[1]);

    const auto weights = parse_int_line(lines[1], "weight");
    if (static_cast<int>(weights.size()) != inst.n)
        throw ParseError("expected " + std::to_string(inst.n) + " weights, got " +
                         std::to_string(weights.size()));
    for (const auto v : weights) {
        if (v < 1) throw ParseError("weight " + std::to_string(v) + " must be positive");
        // Keeps every weight-distance product comfortably inside 64 bits.
        if (v > 1000000000)
            throw ParseError("weight " + std::to_string(v) + " out of supported range");
    }
    inst.w = weights;

    const auto freqs = parse_int_line(lines[2], "frequency");
    if (static_cast<int>(freqs.size()) != inst.n)
        throw ParseError("expected " + std::to_string(inst.n) + " frequencies, got " +
                         std::to_string(freqs.size()));
    std::int64_t total = 0;
    for (const auto v : freqs) {
        if (v < 1) throw ParseError("frequency " + std::to_string(v) + " must be positive");
        total += v;
    }
    if (total > inst.t_max)
        throw ParseError("maximum length " + std::to_string(inst.t_max) +
                         " is less than the " + std::to_string(total) +
                         " required occurrences");
    inst.f.reserve(freqs.size());
    for (const auto v : freqs) inst.f.push_back(static_cast<int>(v));
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    return parse_instance(in);
}

std::string format_instance(const Instance& inst) {
    std::ostringstream os;
    os << inst.n << ' ' << inst.t_max << '\n';
    for (int i = 0; i < inst.n; ++i)
        os << inst.w[static_cast<std::size_t>(i)] << (i + 1 < inst.n ? ' ' : '\n');
    for (int i = 0; i < inst.n; ++i)
        os << inst.f[static_cast<std::size_t>(i)] << (i + 1 < inst.n ? ' ' : '\n');
    return os.str();
}

Sequence parse_sequence(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("sequence needs a length line");

    const auto header = parse_int_line(lines[0], "sequence length");
    if (header.size() != 1)
        throw ParseError("malformed sequence header: expected a single length value");
    if (header[0] < 1 || header[0] > 100000000)
        throw ParseError("sequence length out of supported range");
    const auto t_len = static_cast<std::size_t>(header[0]);

    std::vector<std::int64_t> symbols;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto vals = parse_int_line(lines[li], "symbol");
        symbols.insert(symbols.end(), vals.begin(), vals.end());
    }
    if (symbols.size() != t_len)
        throw ParseError("expected " + std::to_string(t_len) + " symbols, got " +
                         std::to_string(symbols.size()));

    Sequence seq;
    seq.symbols.reserve(t_len);
    for (const auto v : symbols) {
        if (v < 1 || v > 100000)
            throw ParseError("symbol index " + std::to_string(v) + " out of supported range");
        seq.symbols.push_back(static_cast<int>(v));
    }
    return seq;
}

Sequence parse_sequence(const std::string& text) {
    std::istringstream is(text);
    return parse_sequence(is);
}

Sequence load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sequence file '" + path + "'");
    return parse_sequence(in);
}

std::string format_sequence(const Sequence& seq) {
    std::ostringstream os;
    os << seq.length() << '\n';
    for (int pos = 1; pos <= seq.length(); ++pos)
        os << seq.at(pos) << (pos < seq.length() ? ' ' : '\n');
    return os.str();
}

std::vector<int> canonical_symbol_order(const Instance& inst) {
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&inst](int a, int b) {
        const auto ia = static_cast<std::size_t>(a - 1);
        const auto ib = static_cast<std::size_t>(b - 1);
        if (inst.w[ia] != inst.w[ib]) return inst.w[ia] > inst.w[ib];
        if (inst.f[ia] != inst.f[ib]) return inst.f[ia] > inst.f[ib];
        return a < b;
    });
    return order;
}

Instance generate_instance(int n, int t_max, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_instance: n must be positive");
    if (t_max < n)
        throw std::invalid_argument("generate_instance: T must be at least n");
    Instance inst;
    inst.n = n;
    inst.t_max = t_max;
    SplitMix64 gen(seed);
    inst.w.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        inst.w.push_back(1 + static_cast<std::int64_t>(
                                 next_below(gen, static_cast<std::uint64_t>(2 * n))));
    inst.f.assign(static_cast<std::size_t>(n), 1);
    return inst;
}

} // namespace wfs
