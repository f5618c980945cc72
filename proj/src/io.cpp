#include "grasstri/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "grasstri/error.hpp"

namespace grasstri::io {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
    const std::string s(token);
    if (s.empty()) throw ParseError("empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || std::isnan(v))
        throw ParseError("not a number: '" + s + "'");
    return v;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_index(std::string_view token) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw ParseError("not a nonnegative integer: '" + std::string(token) + "'");
    return v;
}

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace

void write_cloud(std::ostream& out, const PointCloud& cloud) {
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud[i];
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out << ' ';
            out << format_double(p[c]);
        }
        out << '\n';
    }
}

PointCloud read_cloud(std::istream& in) {
    PointCloud cloud;
    std::string line;
    std::vector<double> point;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        point.clear();
        for (auto tok : split_ws(line)) point.push_back(parse_double(tok));
        if (!cloud.empty() && point.size() != cloud.dimension())
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(cloud.dimension()) + " coordinates, found " +
                             std::to_string(point.size()));
        cloud.push_back(point);
    }
    return cloud;
}

void write_filtration(std::ostream& out, const Filtration& filtration) {
    out << filtration.dim_max() << ' ' << filtration.vertex_count() << '\n';
    for (std::size_t i = 0; i < filtration.size(); ++i) {
        const auto s = filtration[i];
        out << format_double(s.value);
        for (auto v : s.vertices) out << ' ' << v;
        out << '\n';
    }
}

Filtration read_filtration(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    int dim_max = 0;
    std::size_t vertex_count = 0;
    Filtration f;
    bool canonical = true;
    std::vector<Vertex> verts;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const auto toks = split_ws(line);
        if (!have_header) {
            if (toks.size() != 2) throw ParseError("filtration header must be `dim_max vertex_count`");
            dim_max = static_cast<int>(parse_index(toks[0]));
            vertex_count = parse_index(toks[1]);
            f = Filtration(vertex_count, dim_max);
            have_header = true;
            continue;
        }
        if (toks.size() < 2)
            throw ParseError("line " + std::to_string(lineno) + ": simplex needs a value and vertices");
        const double value = parse_double(toks[0]);
        verts.clear();
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const auto v = parse_index(toks[i]);
            if (v >= vertex_count)
                throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
            if (!verts.empty() && v <= verts.back())
                throw ParseError("line " + std::to_string(lineno) + ": vertices must increase");
            verts.push_back(static_cast<Vertex>(v));
        }
        if (static_cast<int>(verts.size()) - 1 > dim_max)
            throw ParseError("line " + std::to_string(lineno) + ": simplex exceeds dim_max");
        if (!(value >= 0.0))
            throw ParseError("line " + std::to_string(lineno) + ": negative filtration value");
        if (!f.empty() && canonical_less(SimplexView{verts, value}, f[f.size() - 1])) canonical = false;
        f.push_back(verts, value);
    }
    if (!have_header) throw ParseError("empty filtration file");
    if (!canonical) f.canonicalize();
    return f;
}

void write_landmarks(std::ostream& out, const std::vector<std::uint32_t>& indices) {
    for (auto i : indices) out << i << '\n';
}

std::vector<std::uint32_t> read_landmarks(std::istream& in) {
    std::vector<std::uint32_t> out;
    std::string line;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        const auto toks = split_ws(line);
        if (toks.size() != 1) throw ParseError("landmark file expects one index per line");
        out.push_back(static_cast<std::uint32_t>(parse_index(toks[0])));
    }
    return out;
}

void write_barcode_csv(std::ostream& out, const Barcode& barcode) {
    out << "degree,birth,death\n";
    for (std::size_t d = 0; d < barcode.size(); ++d)
        for (const auto& iv : barcode[d])
            out << d << ',' << format_double(iv.birth) << ',' << format_double(iv.death) << '\n';
}

Barcode read_barcode_csv(std::istream& in) {
    Barcode bc;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank_or_comment(line)) continue;
        if (!header) {
            if (line != "degree,birth,death") throw ParseError("barcode CSV must start with `degree,birth,death`");
            header = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (fields.size() != 3) throw ParseError("line " + std::to_string(lineno) + ": expected 3 fields");
        const auto deg = parse_index(fields[0]);
        const double birth = parse_double(fields[1]);
        const double death = parse_double(fields[2]);
        if (death < birth) throw ParseError("line " + std::to_string(lineno) + ": death before birth");
        if (bc.degrees.size() <= deg) bc.degrees.resize(deg + 1);
        bc.degrees[deg].push_back({birth, death});
    }
    if (!header) throw ParseError("empty barcode file");
    return bc;
}

void write_report(std::ostream& out, const WindowReport& report) {
    out << "target: " << report.target.to_string() << '\n';
    out << "top_dim: " << report.top_dim << '\n';
    out << "critical_values: " << report.critical_values.size() << '\n';
    out << "windows: " << report.windows.size() << '\n';
    for (const auto& w : report.windows)
        out << "window: [" << format_double(w.lower) << ", " << format_double(w.upper) << ")\n";
}

WindowReport read_report(std::istream& in) {
    WindowReport r;
    std::string line;
    std::size_t declared = 0;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("report line without key: '" + line + "'");
        const std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        while (!value.empty() && value.front() == ' ') value.erase(value.begin());
        if (key == "target") {
            r.target = BettiProfile::parse(value);
        } else if (key == "top_dim") {
            r.top_dim = static_cast<int>(parse_index(value));
        } else if (key == "critical_values") {
            parse_index(value);  // only the count is serialized
        } else if (key == "windows") {
            declared = parse_index(value);
        } else if (key == "window") {
            if (value.size() < 5 || value.front() != '[' || value.back() != ')')
                throw ParseError("window must look like `[a, b)`");
            const auto comma = value.find(',');
            if (comma == std::string::npos) throw ParseError("window must look like `[a, b)`");
            std::string a = value.substr(1, comma - 1);
            std::string b = value.substr(comma + 1, value.size() - comma - 2);
            while (!b.empty() && b.front() == ' ') b.erase(b.begin());
            r.windows.push_back({parse_double(a), parse_double(b)});
        } else {
            throw ParseError("unknown report key '" + key + "'");
        }
    }
    if (declared != r.windows.size()) throw ParseError("window count does not match `windows:`");
    return r;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << contents;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace grasstri::io
