#include "simplexcolor/generators.hpp"

#include "simplexcolor/delaunay.hpp"
#include "simplexcolor/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace simplexcolor {
namespace {

struct KindName {
    GeneratorKind kind;
    const char* name;
};

constexpr KindName kind_names[] = {
    {GeneratorKind::fan, "fan"},
    {GeneratorKind::closed_fan, "closed-fan"},
    {GeneratorKind::tri_tiling, "tri-tiling"},
    {GeneratorKind::delaunay2d, "delaunay2d"},
    {GeneratorKind::freudenthal, "freudenthal"},
    {GeneratorKind::path, "path"},
    {GeneratorKind::boundary_abstract, "boundary-abstract"},
};

constexpr std::size_t max_dimension = 16;

void require_dimension(const GeneratorSpec& spec, std::size_t exact)
{
    if (spec.dimension != exact)
        throw InputError(to_string(spec.kind) + " is only defined for d=" + std::to_string(exact));
}

void require_size(const GeneratorSpec& spec, std::size_t lo, std::size_t hi)
{
    if (spec.size < lo || spec.size > hi)
        throw InputError(to_string(spec.kind) + ": size " + std::to_string(spec.size) +
                         " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

Point integer_point(std::initializer_list<long> coords)
{
    Point p;
    for (long x : coords) p.emplace_back(x);
    return p;
}

// Stellar subdivision of the simplex conv(0, (d+1)e_1, ..., (d+1)e_d) from
// the interior point (1, ..., 1); the first k of its d+1 simplices.
Complex make_fan(const GeneratorSpec& spec)
{
    const std::size_t d = spec.dimension;
    require_size(spec, 1, d + 1);
    std::vector<Point> vertices;
    vertices.emplace_back(d, Rational(1));
    vertices.emplace_back(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        Point p(d, Rational(0));
        p[i] = static_cast<long>(d + 1);
        vertices.push_back(std::move(p));
    }
    std::vector<Simplex> simplices;
    for (std::size_t skip = 0; skip < spec.size; ++skip) {
        std::vector<VertexId> ids{0};
        for (std::size_t j = 0; j <= d; ++j)
            if (j != skip) ids.push_back(static_cast<VertexId>(j + 1));
        simplices.emplace_back(std::move(ids));
    }
    return Complex(d, std::move(vertices), std::move(simplices));
}

Complex make_closed_fan(const GeneratorSpec& spec)
{
    require_dimension(spec, 2);
    require_size(spec, 3, 100'000);
    const std::size_t n = spec.size;
    constexpr double radius = 1 << 20;
    const double pi = std::acos(-1.0);
    std::vector<Point> vertices{integer_point({0, 0})};
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
        vertices.push_back(integer_point({std::lround(radius * std::cos(angle)),
                                          std::lround(radius * std::sin(angle))}));
    }
    std::vector<Simplex> simplices;
    for (std::size_t i = 0; i < n; ++i)
        simplices.emplace_back(std::vector<VertexId>{0, static_cast<VertexId>(1 + i),
                                                     static_cast<VertexId>(1 + (i + 1) % n)});
    return Complex(2, std::move(vertices), std::move(simplices));
}

// Lattice triangle of side m in the coordinates (i + j/2, j).
Complex make_tri_tiling(const GeneratorSpec& spec)
{
    require_dimension(spec, 2);
    require_size(spec, 1, 1000);
    const long m = static_cast<long>(spec.size);
    std::vector<Point> vertices;
    std::vector<std::vector<VertexId>> index(static_cast<std::size_t>(m + 1));
    for (long j = 0; j <= m; ++j) {
        for (long i = 0; i + j <= m; ++i) {
            index[static_cast<std::size_t>(i)].push_back(static_cast<VertexId>(vertices.size()));
            vertices.push_back(Point{make_rational(2 * i + j, 2), Rational(j)});
        }
    }
    auto id = [&](long i, long j) { return index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    std::vector<Simplex> simplices;
    for (long j = 0; j < m; ++j) {
        for (long i = 0; i + j < m; ++i) {
            simplices.emplace_back(std::vector<VertexId>{id(i, j), id(i + 1, j), id(i, j + 1)});
            if (i + j + 1 < m)
                simplices.emplace_back(std::vector<VertexId>{id(i + 1, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    }
    return Complex(2, std::move(vertices), std::move(simplices));
}

// Points on a 2^20 grid drawn from mt19937_64 by bit masking, so the stream
// is identical across standard libraries.
Complex make_delaunay(const GeneratorSpec& spec)
{
    require_dimension(spec, 2);
    require_size(spec, 3, 1'000'000);
    constexpr int bits = 20;
    constexpr std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    std::mt19937_64 rng(spec.seed);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::vector<delaunay::GridPoint> grid;
    grid.reserve(spec.size);
    while (grid.size() < spec.size) {
        const std::uint64_t word = rng();
        const auto x = static_cast<std::int64_t>(word & mask);
        const auto y = static_cast<std::int64_t>((word >> 32) & mask);
        if (seen.emplace(x, y).second) grid.push_back({x, y});
    }
    const auto triangles = delaunay::triangulate(grid);

    const mpz_class scale = mpz_class(1) << bits;
    std::vector<Point> vertices;
    vertices.reserve(grid.size());
    for (const auto& g : grid) {
        Rational x(g.x, scale), y(g.y, scale);
        x.canonicalize();
        y.canonicalize();
        vertices.push_back(Point{x, y});
    }
    std::vector<Simplex> simplices;
    simplices.reserve(triangles.size());
    for (const auto& t : triangles) simplices.emplace_back(std::vector<VertexId>{t[0], t[1], t[2]});
    return Complex(2, std::move(vertices), std::move(simplices));
}

std::size_t checked_count(std::size_t d, std::size_t m)
{
    std::size_t count = 1;
    for (std::size_t k = 2; k <= d; ++k) {
        count *= k;
        if (count > max_generated_simplices) return count;
    }
    for (std::size_t k = 0; k < d; ++k) {
        count *= m;
        if (count > max_generated_simplices) return count;
    }
    return count;
}

// Kuhn/Freudenthal triangulation of [0, m]^d: one simplex per (cell,
// permutation), walking from the cell's low corner along the axes in
// permutation order.
Complex make_freudenthal(const GeneratorSpec& spec)
{
    const std::size_t d = spec.dimension;
    const std::size_t m = spec.size;
    if (m < 1) throw InputError("freudenthal: need at least one cell per axis");
    if (checked_count(d, m) > max_generated_simplices)
        throw InputError("freudenthal: m^d * d! exceeds " + std::to_string(max_generated_simplices));

    std::vector<std::size_t> stride(d);
    std::size_t vertex_count = 1;
    for (std::size_t k = 0; k < d; ++k) {
        stride[k] = vertex_count;
        vertex_count *= m + 1;
    }
    std::vector<Point> vertices;
    vertices.reserve(vertex_count);
    for (std::size_t id = 0; id < vertex_count; ++id) {
        Point p(d);
        std::size_t rest = id;
        for (std::size_t k = 0; k < d; ++k) {
            p[k] = static_cast<unsigned long>(rest % (m + 1));
            rest /= m + 1;
        }
        vertices.push_back(std::move(p));
    }

    std::size_t cell_count = 1;
    for (std::size_t k = 0; k < d; ++k) cell_count *= m;
    std::vector<Simplex> simplices;
    std::vector<std::size_t> perm(d);
    for (std::size_t cell = 0; cell < cell_count; ++cell) {
        std::size_t base = 0, rest = cell;
        for (std::size_t k = 0; k < d; ++k) {
            base += (rest % m) * stride[k];
            rest /= m;
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<VertexId> ids{static_cast<VertexId>(base)};
            std::size_t cur = base;
            for (std::size_t axis : perm) {
                cur += stride[axis];
                ids.push_back(static_cast<VertexId>(cur));
            }
            simplices.emplace_back(std::move(ids));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return Complex(d, std::move(vertices), std::move(simplices));
}

// Staircase v_{j+1} = v_j + e_{j mod d}; simplex j is {v_j, ..., v_{j+d}}.
// Each is a Kuhn simplex of the unit grid, so the chain is interior-disjoint.
Complex make_path(const GeneratorSpec& spec)
{
    const std::size_t d = spec.dimension;
    require_size(spec, 1, max_generated_simplices);
    std::vector<Point> vertices;
    Point cur(d, Rational(0));
    for (std::size_t j = 0; j < spec.size + d; ++j) {
        vertices.push_back(cur);
        cur[j % d] += 1;
    }
    std::vector<Simplex> simplices;
    for (std::size_t j = 0; j < spec.size; ++j) {
        std::vector<VertexId> ids(d + 1);
        std::iota(ids.begin(), ids.end(), static_cast<VertexId>(j));
        simplices.emplace_back(std::move(ids));
    }
    return Complex(d, std::move(vertices), std::move(simplices));
}

// All d+2 facets of a (d+1)-simplex, placed as the simplex conv(0, e_i) and
// an interior point. Every facet is glued twice and the dual is K_{d+2}.
Complex make_boundary_abstract(const GeneratorSpec& spec)
{
    const std::size_t d = spec.dimension;
    std::vector<Point> vertices;
    vertices.emplace_back(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        Point p(d, Rational(0));
        p[i] = 1;
        vertices.push_back(std::move(p));
    }
    vertices.emplace_back(d, make_rational(1, static_cast<long>(d + 2)));
    std::vector<Simplex> simplices;
    for (std::size_t skip = d + 2; skip-- > 0;) {
        std::vector<VertexId> ids;
        for (std::size_t j = 0; j < d + 2; ++j)
            if (j != skip) ids.push_back(static_cast<VertexId>(j));
        simplices.emplace_back(std::move(ids));
    }
    return Complex(d, std::move(vertices), std::move(simplices));
}

}  // namespace

std::string to_string(GeneratorKind kind)
{
    for (const auto& k : kind_names)
        if (k.kind == kind) return k.name;
    return "unknown";
}

GeneratorKind parse_generator_kind(const std::string& text)
{
    for (const auto& k : kind_names)
        if (text == k.name) return k.kind;
    throw InputError("unknown generator kind '" + text + "'");
}

std::vector<GeneratorKind> all_generator_kinds()
{
    std::vector<GeneratorKind> out;
    for (const auto& k : kind_names) out.push_back(k.kind);
    return out;
}

Complex generate(const GeneratorSpec& spec)
{
    if (spec.dimension < 1 || spec.dimension > max_dimension)
        throw InputError("dimension must be in 1.." + std::to_string(max_dimension));
    switch (spec.kind) {
    case GeneratorKind::fan: return make_fan(spec);
    case GeneratorKind::closed_fan: return make_closed_fan(spec);
    case GeneratorKind::tri_tiling: return make_tri_tiling(spec);
    case GeneratorKind::delaunay2d: return make_delaunay(spec);
    case GeneratorKind::freudenthal: return make_freudenthal(spec);
    case GeneratorKind::path: return make_path(spec);
    case GeneratorKind::boundary_abstract: return make_boundary_abstract(spec);
    }
    throw InputError("unknown generator kind");
}

}  // namespace simplexcolor
