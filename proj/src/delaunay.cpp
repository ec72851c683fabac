#include "simplexcolor/delaunay.hpp"

#include "simplexcolor/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

namespace simplexcolor::delaunay {
namespace {

using Wide = __int128;

constexpr std::int32_t ghost = -1;

int sign_of(Wide v) { return (v > 0) - (v < 0); }

struct Triangle {
    std::array<std::int32_t, 3> v;  // counterclockwise; at most one entry is `ghost`
    std::array<std::int32_t, 3> nbr{-1, -1, -1};  // nbr[i] is across the edge opposite v[i]
    bool alive = true;

    int ghost_slot() const
    {
        for (int i = 0; i < 3; ++i)
            if (v[i] == ghost) return i;
        return -1;
    }
};

// Hilbert curve index on a 2^order grid, for spatially coherent insertion.
std::uint64_t hilbert_index(std::uint64_t x, std::uint64_t y, int order)
{
    std::uint64_t d = 0;
    for (std::uint64_t s = std::uint64_t{1} << (order - 1); s > 0; s >>= 1) {
        const std::uint64_t rx = (x & s) ? 1 : 0;
        const std::uint64_t ry = (y & s) ? 1 : 0;
        d += s * s * ((3 * rx) ^ ry);
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - (x & (s - 1));
                y = s - 1 - (y & (s - 1));
            }
            std::swap(x, y);
        }
    }
    return d;
}

class Triangulator {
public:
    explicit Triangulator(const std::vector<GridPoint>& points) : pts_(points) {}

    std::vector<std::array<std::uint32_t, 3>> run()
    {
        const auto order = insertion_order();
        // Seed with the first non-collinear triple in insertion order.
        std::size_t third = 2;
        while (third < order.size() && orient(at(order[0]), at(order[1]), at(order[third])) == 0) ++third;
        if (third == order.size()) throw InputError("Delaunay: all points are collinear");
        seed(order[0], order[1], order[third]);
        for (std::size_t k = 2; k < order.size(); ++k)
            if (k != third) insert(order[k]);

        std::vector<std::array<std::uint32_t, 3>> out;
        for (const auto& t : tris_) {
            if (!t.alive || t.ghost_slot() >= 0) continue;
            out.push_back({static_cast<std::uint32_t>(t.v[0]), static_cast<std::uint32_t>(t.v[1]),
                           static_cast<std::uint32_t>(t.v[2])});
        }
        return out;
    }

private:
    const GridPoint& at(std::int32_t i) const { return pts_[static_cast<std::size_t>(i)]; }

    std::vector<std::int32_t> insertion_order() const
    {
        std::int64_t lo_x = pts_[0].x, lo_y = pts_[0].y, hi = 0;
        for (const auto& p : pts_) {
            lo_x = std::min(lo_x, p.x);
            lo_y = std::min(lo_y, p.y);
        }
        for (const auto& p : pts_) hi = std::max({hi, p.x - lo_x, p.y - lo_y});
        int bits = 1;
        while ((std::int64_t{1} << bits) <= hi) ++bits;

        std::vector<std::pair<std::uint64_t, std::int32_t>> keyed;
        keyed.reserve(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i)
            keyed.emplace_back(hilbert_index(static_cast<std::uint64_t>(pts_[i].x - lo_x),
                                             static_cast<std::uint64_t>(pts_[i].y - lo_y), bits),
                               static_cast<std::int32_t>(i));
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::int32_t> order;
        for (const auto& [key, i] : keyed) order.push_back(i);
        return order;
    }

    void seed(std::int32_t a, std::int32_t b, std::int32_t c)
    {
        if (orient(at(a), at(b), at(c)) < 0) std::swap(b, c);
        tris_.push_back({{a, b, c}});
        // Ghost across edge (a, b) is (b, a, ghost), and so on around.
        tris_.push_back({{b, a, ghost}});
        tris_.push_back({{c, b, ghost}});
        tris_.push_back({{a, c, ghost}});
        tris_[0].nbr = {2, 3, 1};
        link_ghost(1, 0, 2, 3);
        link_ghost(2, 0, 3, 1);
        link_ghost(3, 0, 1, 2);
        last_ = 0;
    }

    // For ghost (x, y, G): across (x,y) is the real triangle, across (y,G)
    // the ghost starting at y, across (G,x) the ghost ending at x.
    void link_ghost(std::int32_t g, std::int32_t real, std::int32_t ending_at_x, std::int32_t starting_at_y)
    {
        tris_[static_cast<std::size_t>(g)].nbr = {starting_at_y, ending_at_x, real};
    }

    bool conflicts(const Triangle& t, const GridPoint& p) const
    {
        const int g = t.ghost_slot();
        if (g < 0) return incircle(at(t.v[0]), at(t.v[1]), at(t.v[2]), p) > 0;
        const GridPoint& x = at(t.v[static_cast<std::size_t>((g + 1) % 3)]);
        const GridPoint& y = at(t.v[static_cast<std::size_t>((g + 2) % 3)]);
        const int o = orient(x, y, p);
        if (o != 0) return o > 0;
        // On the hull line: only points strictly inside the hull edge.
        const Wide dot = Wide(p.x - x.x) * (y.x - x.x) + Wide(p.y - x.y) * (y.y - x.y);
        const Wide len = Wide(y.x - x.x) * (y.x - x.x) + Wide(y.y - x.y) * (y.y - x.y);
        return dot > 0 && dot < len;
    }

    std::int32_t locate(const GridPoint& p)
    {
        std::int32_t cur = last_;
        if (!tris_[static_cast<std::size_t>(cur)].alive) cur = first_alive();
        for (std::size_t steps = 0; steps < 4 * tris_.size() + 16; ++steps) {
            const Triangle& t = tris_[static_cast<std::size_t>(cur)];
            const int g = t.ghost_slot();
            if (g >= 0) {
                if (conflicts(t, p)) return cur;
                cur = t.nbr[static_cast<std::size_t>(g)];
                continue;
            }
            std::int32_t next = -1;
            for (int i = 0; i < 3; ++i) {
                const int j = (i + 1 + static_cast<int>(steps % 3)) % 3;  // vary start edge
                if (orient(at(t.v[static_cast<std::size_t>((j + 1) % 3)]),
                           at(t.v[static_cast<std::size_t>((j + 2) % 3)]), p) < 0) {
                    next = t.nbr[static_cast<std::size_t>(j)];
                    break;
                }
            }
            if (next < 0) return cur;
            cur = next;
        }
        // Walk did not settle; fall back to a scan.
        for (std::size_t i = 0; i < tris_.size(); ++i)
            if (tris_[i].alive && conflicts(tris_[i], p)) return static_cast<std::int32_t>(i);
        throw InputError("Delaunay: point location failed");
    }

    std::int32_t first_alive() const
    {
        for (std::size_t i = 0; i < tris_.size(); ++i)
            if (tris_[i].alive) return static_cast<std::int32_t>(i);
        return 0;
    }

    void insert(std::int32_t pi)
    {
        const GridPoint& p = at(pi);
        const std::int32_t start = locate(p);

        std::vector<std::int32_t> cavity{start};
        std::set<std::int32_t> in_cavity{start};
        for (std::size_t k = 0; k < cavity.size(); ++k) {
            const Triangle& t = tris_[static_cast<std::size_t>(cavity[k])];
            for (std::int32_t n : t.nbr) {
                if (in_cavity.count(n)) continue;
                if (conflicts(tris_[static_cast<std::size_t>(n)], p)) {
                    in_cavity.insert(n);
                    cavity.push_back(n);
                }
            }
        }

        struct BoundaryEdge {
            std::int32_t from, to, outside;
        };
        std::vector<BoundaryEdge> boundary;
        for (std::int32_t ti : cavity) {
            Triangle& t = tris_[static_cast<std::size_t>(ti)];
            for (int i = 0; i < 3; ++i) {
                const std::int32_t n = t.nbr[static_cast<std::size_t>(i)];
                if (in_cavity.count(n)) continue;
                boundary.push_back({t.v[static_cast<std::size_t>((i + 1) % 3)],
                                    t.v[static_cast<std::size_t>((i + 2) % 3)], n});
            }
            t.alive = false;
        }

        std::unordered_map<std::int32_t, std::int32_t> starting_at, ending_at;
        std::vector<std::int32_t> created;
        for (const auto& e : boundary) {
            const auto idx = static_cast<std::int32_t>(tris_.size());
            Triangle t{{e.from, e.to, pi}};
            t.nbr[2] = e.outside;
            tris_.push_back(t);
            Triangle& out = tris_[static_cast<std::size_t>(e.outside)];
            for (int i = 0; i < 3; ++i) {
                const std::int32_t a = out.v[static_cast<std::size_t>((i + 1) % 3)];
                const std::int32_t b = out.v[static_cast<std::size_t>((i + 2) % 3)];
                if (a == e.to && b == e.from) out.nbr[static_cast<std::size_t>(i)] = idx;
            }
            starting_at[e.from] = idx;
            ending_at[e.to] = idx;
            created.push_back(idx);
        }
        for (std::int32_t idx : created) {
            Triangle& t = tris_[static_cast<std::size_t>(idx)];
            t.nbr[0] = starting_at.at(t.v[1]);  // across (to, p)
            t.nbr[1] = ending_at.at(t.v[0]);    // across (p, from)
            if (t.ghost_slot() < 0) last_ = idx;
        }
        // Ghost triangles keep their ghost entry in any slot; ghost_slot() finds it.
    }

    const std::vector<GridPoint>& pts_;
    std::vector<Triangle> tris_;
    std::int32_t last_ = 0;
};

}  // namespace

int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c)
{
    const Wide det = Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
    return sign_of(det);
}

int incircle(const GridPoint& a, const GridPoint& b, const GridPoint& c, const GridPoint& d)
{
    const Wide adx = a.x - d.x, ady = a.y - d.y;
    const Wide bdx = b.x - d.x, bdy = b.y - d.y;
    const Wide cdx = c.x - d.x, cdy = c.y - d.y;
    const Wide alift = adx * adx + ady * ady;
    const Wide blift = bdx * bdx + bdy * bdy;
    const Wide clift = cdx * cdx + cdy * cdy;
    const Wide det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                     clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

std::vector<std::array<std::uint32_t, 3>> triangulate(const std::vector<GridPoint>& points)
{
    if (points.size() < 3) throw InputError("Delaunay: need at least 3 points");
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& p : points) {
        if (p.x > max_coordinate || p.x < -max_coordinate || p.y > max_coordinate || p.y < -max_coordinate)
            throw InputError("Delaunay: coordinate out of exact range");
        if (!seen.emplace(p.x, p.y).second) throw InputError("Delaunay: repeated point");
    }
    return Triangulator(points).run();
}

}  // namespace simplexcolor::delaunay
