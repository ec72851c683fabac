#include "simplexcolor/io.hpp"

#include "simplexcolor/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace simplexcolor {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const json& field(const json& j, const char* name)
{
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

std::size_t as_index(const json& j, const std::string& where)
{
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::size_t>();
    throw ParseError(where + ": expected a non-negative integer");
}

Rational as_rational(const json& j, const std::string& where)
{
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
        if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
        if (j.is_number_float()) return rational_from_double(j.get<double>());
    } catch (const InputError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a number or a \"p/q\" string");
}

// Exact decimal text for rationals whose denominator is 2^a 5^b.
std::optional<std::string> decimal_text(const Rational& q)
{
    mpz_class den = q.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;
    const unsigned places = std::max(twos, fives);
    if (places == 0) return q.get_num().get_str();

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    mpz_class scaled = q.get_num() * scale / q.get_den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return (negative ? "-" : "") + digits;
}

struct Token {
    std::string text;
    std::size_t line;
};

std::vector<Token> off_tokens(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else {
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
            tokens.push_back({std::string(text.substr(start, i - start)), line});
        }
    }
    return tokens;
}

Complex read_off(std::string_view text)
{
    const auto tokens = off_tokens(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const Token& {
        if (pos >= tokens.size())
            throw ParseError(std::string("OFF: unexpected end of file, expected ") + what,
                             tokens.empty() ? 1 : tokens.back().line);
        return tokens[pos++];
    };
    auto count = [&](const char* what) {
        const Token& t = next(what);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(t.text, &used);
            if (used != t.text.size() || v < 0) throw std::invalid_argument(t.text);
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ParseError("OFF: expected " + std::string(what) + ", got '" + t.text + "'", t.line);
        }
    };

    const Token& header = next("OFF header");
    if (header.text != "OFF") throw ParseError("OFF: missing 'OFF' header", header.line);
    const std::size_t vertex_count = count("vertex count");
    const std::size_t face_count = count("face count");
    count("edge count");

    std::vector<Point> vertices;
    vertices.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        Point p;
        std::size_t line = 0;
        for (int k = 0; k < 3; ++k) {
            const Token& t = next("vertex coordinate");
            line = t.line;
            try {
                p.push_back(parse_rational(t.text));
            } catch (const InputError& e) {
                throw ParseError(std::string("OFF: ") + e.what(), t.line);
            }
        }
        if (sgn(p[2]) != 0)
            throw ParseError("OFF: vertex " + std::to_string(v) +
                                 " has nonzero z; only planar (d=2) triangle meshes are supported",
                             line);
        p.pop_back();
        vertices.push_back(std::move(p));
    }

    std::vector<Simplex> simplices;
    simplices.reserve(face_count);
    for (std::size_t f = 0; f < face_count; ++f) {
        const std::size_t line = pos < tokens.size() ? tokens[pos].line : 0;
        const std::size_t arity = count("face vertex count");
        if (arity != 3)
            throw ParseError("OFF: face " + std::to_string(f) + " has " + std::to_string(arity) +
                                 " vertices; only triangles are accepted",
                             line);
        std::vector<VertexId> ids;
        for (int k = 0; k < 3; ++k) {
            const std::size_t id = count("vertex index");
            if (id >= vertex_count)
                throw ParseError("OFF: face " + std::to_string(f) + " refers to missing vertex " +
                                     std::to_string(id),
                                 line);
            ids.push_back(static_cast<VertexId>(id));
        }
        // Optional per-face color values run to the end of the line.
        while (pos < tokens.size() && tokens[pos].line == line) ++pos;
        try {
            simplices.emplace_back(std::move(ids));
        } catch (const InputError& e) {
            throw ParseError(std::string("OFF: ") + e.what(), line);
        }
    }
    return Complex(2, std::move(vertices), std::move(simplices));
}

std::string write_off(const Complex& c)
{
    if (c.dimension() != 2)
        throw UnsupportedDimensionError("OFF export supports d=2 triangle complexes only");
    std::ostringstream out;
    out << "OFF\n" << c.vertices().size() << ' ' << c.size() << " 0\n";
    for (std::size_t v = 0; v < c.vertices().size(); ++v) {
        for (const auto& x : c.vertex(static_cast<VertexId>(v))) {
            auto text = decimal_text(x);
            if (!text)
                throw InputError("coordinate " + to_string(x) + " of vertex " + std::to_string(v) +
                                 " has no exact decimal form; save as JSON instead");
            out << *text << ' ';
        }
        out << "0\n";
    }
    for (const auto& s : c.simplices()) out << "3 " << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
    return out.str();
}

}  // namespace

FileFormat format_for_path(const std::filesystem::path& path)
{
    return path.extension() == ".off" ? FileFormat::off : FileFormat::json;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = line_and_column(text, offset);
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }
}

json complex_to_json(const Complex& c)
{
    json vertices = json::array();
    for (const auto& p : c.vertices()) {
        json coords = json::array();
        for (const auto& x : p) coords.push_back(to_string(x));
        vertices.push_back(std::move(coords));
    }
    json simplices = json::array();
    for (const auto& s : c.simplices()) simplices.push_back(s.ids());
    return json{{"dimension", c.dimension()}, {"vertices", std::move(vertices)},
                {"simplices", std::move(simplices)}};
}

Complex complex_from_json(const json& j)
{
    const std::size_t dimension = as_index(field(j, "dimension"), "dimension");
    const json& jv = field(j, "vertices");
    const json& js = field(j, "simplices");
    if (!jv.is_array()) throw ParseError("'vertices' must be an array");
    if (!js.is_array()) throw ParseError("'simplices' must be an array");

    std::vector<Point> vertices;
    vertices.reserve(jv.size());
    for (std::size_t v = 0; v < jv.size(); ++v) {
        const std::string where = "vertices[" + std::to_string(v) + "]";
        if (!jv[v].is_array()) throw ParseError(where + ": expected an array of coordinates");
        if (jv[v].size() != dimension)
            throw ParseError(where + ": has " + std::to_string(jv[v].size()) +
                             " coordinates, dimension is " + std::to_string(dimension));
        Point p;
        p.reserve(dimension);
        for (std::size_t k = 0; k < jv[v].size(); ++k)
            p.push_back(as_rational(jv[v][k], where + "[" + std::to_string(k) + "]"));
        vertices.push_back(std::move(p));
    }

    std::vector<Simplex> simplices;
    simplices.reserve(js.size());
    for (std::size_t s = 0; s < js.size(); ++s) {
        const std::string where = "simplices[" + std::to_string(s) + "]";
        if (!js[s].is_array()) throw ParseError(where + ": expected an array of vertex ids");
        std::vector<VertexId> ids;
        for (std::size_t k = 0; k < js[s].size(); ++k) {
            const std::size_t id = as_index(js[s][k], where + "[" + std::to_string(k) + "]");
            if (id > std::numeric_limits<VertexId>::max()) throw ParseError(where + ": vertex id too large");
            ids.push_back(static_cast<VertexId>(id));
        }
        try {
            simplices.emplace_back(std::move(ids));
        } catch (const InputError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    try {
        return Complex(dimension, std::move(vertices), std::move(simplices));
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

std::string write_complex(const Complex& c, FileFormat format)
{
    if (format == FileFormat::off) return write_off(c);
    return complex_to_json(c).dump() + "\n";
}

Complex read_complex(std::string_view text, FileFormat format)
{
    if (format == FileFormat::off) return read_off(text);
    return complex_from_json(parse_json(text));
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write failed for '" + path.string() + "'");
}

Complex load_complex(const std::filesystem::path& path, FileFormat format)
{
    return read_complex(read_file(path), format);
}

Complex load_complex(const std::filesystem::path& path) { return load_complex(path, format_for_path(path)); }

void save_complex(const Complex& c, const std::filesystem::path& path, FileFormat format)
{
    write_file(path, write_complex(c, format));
}

void save_complex(const Complex& c, const std::filesystem::path& path)
{
    save_complex(c, path, format_for_path(path));
}

json coloring_to_json(const Coloring& col) { return json{{"colors", col.colors}}; }

Coloring coloring_from_json(const json& j)
{
    const json& jc = field(j, "colors");
    if (!jc.is_array()) throw ParseError("'colors' must be an array");
    Coloring col;
    col.colors.reserve(jc.size());
    for (std::size_t i = 0; i < jc.size(); ++i) {
        if (!jc[i].is_number_integer())
            throw ParseError("colors[" + std::to_string(i) + "]: expected an integer");
        col.colors.push_back(jc[i].get<int>());
    }
    return col;
}

json certificate_to_json(const PeelCertificate& cert)
{
    json steps = json::array();
    for (const auto& step : cert.steps) steps.push_back(json::array({step.simplex, step.facet.ids()}));
    return json{{"method", to_string(cert.method)}, {"steps", std::move(steps)}};
}

PeelCertificate certificate_from_json(const json& j)
{
    PeelCertificate cert;
    const json& method = field(j, "method");
    if (!method.is_string()) throw ParseError("'method' must be a string");
    try {
        cert.method = parse_peel_method(method.get<std::string>());
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
    const json& steps = field(j, "steps");
    if (!steps.is_array()) throw ParseError("'steps' must be an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string where = "steps[" + std::to_string(i) + "]";
        const json& s = steps[i];
        if (!s.is_array() || s.size() != 2 || !s[1].is_array())
            throw ParseError(where + ": expected [simplex, [facet ids]]");
        std::vector<VertexId> ids;
        for (std::size_t k = 0; k < s[1].size(); ++k)
            ids.push_back(static_cast<VertexId>(as_index(s[1][k], where + "[1][" + std::to_string(k) + "]")));
        try {
            cert.steps.push_back({as_index(s[0], where + "[0]"), Facet(std::move(ids))});
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return cert;
}

}  // namespace simplexcolor
