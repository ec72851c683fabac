#include "simplexcolor/geometry.hpp"

#include "simplexcolor/error.hpp"
#include "simplexcolor/linalg.hpp"

#include <algorithm>
#include <string>

namespace simplexcolor {
namespace {

std::vector<const Point*> pointers(std::span<const Point> points)
{
    std::vector<const Point*> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(&p);
    return out;
}

void require_dimension(const Point& p, std::size_t dim)
{
    if (p.size() != dim)
        throw InputError("point has dimension " + std::to_string(p.size()) + ", expected " +
                         std::to_string(dim));
}

linalg::Vector difference(const Point& a, const Point& b)
{
    linalg::Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

int orientation(std::span<const Point> points, std::size_t dim)
{
    const auto ptrs = pointers(points);
    return orientation(std::span<const Point* const>(ptrs), dim);
}

int orientation(std::span<const Point* const> points, std::size_t dim)
{
    if (points.size() != dim + 1)
        throw InputError("orientation needs " + std::to_string(dim + 1) + " points, got " +
                         std::to_string(points.size()));
    for (const Point* p : points) require_dimension(*p, dim);

    linalg::Matrix m;
    m.reserve(dim);
    for (std::size_t i = 1; i <= dim; ++i) m.push_back(difference(*points[i], *points[0]));
    return linalg::determinant_sign(std::move(m));
}

int side_of(const Hyperplane& h, const Point& p)
{
    require_dimension(p, h.normal.size());
    return sgn(linalg::dot(h.normal, p) - h.offset);
}

std::optional<Hyperplane> hyperplane_through(std::span<const Point* const> points)
{
    if (points.empty()) throw InputError("hyperplane_through needs at least one point");
    const std::size_t dim = points.front()->size();
    if (points.size() != dim)
        throw InputError("hyperplane_through needs exactly " + std::to_string(dim) + " points");
    for (const Point* p : points) require_dimension(*p, dim);

    linalg::Matrix rows;
    for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(difference(*points[i], *points[0]));
    auto kernel = linalg::nullspace(std::move(rows), dim);
    if (kernel.size() != 1) return std::nullopt;

    Hyperplane h{std::move(kernel.front()), 0};
    h.offset = linalg::dot(h.normal, *points[0]);
    return h;
}

std::optional<Hyperplane> supporting_hyperplane(std::span<const Point> face,
                                                std::span<const Point> cloud)
{
    const auto f = pointers(face);
    const auto c = pointers(cloud);
    return supporting_hyperplane(std::span<const Point* const>(f), std::span<const Point* const>(c));
}

std::optional<Hyperplane> supporting_hyperplane(std::span<const Point* const> face,
                                                std::span<const Point* const> cloud)
{
    if (cloud.empty()) throw InputError("supporting_hyperplane: empty cloud");
    if (face.empty()) throw InputError("supporting_hyperplane: empty face");
    const std::size_t dim = face.front()->size();
    for (const Point* p : face) require_dimension(*p, dim);
    for (const Point* p : cloud) require_dimension(*p, dim);

    const Point& anchor = *face.front();
    linalg::Matrix along_face;
    for (std::size_t i = 1; i < face.size(); ++i) along_face.push_back(difference(*face[i], anchor));

    // Normals orthogonal to the face, as combinations of this basis.
    const linalg::Matrix basis = linalg::nullspace(std::move(along_face), dim);
    if (basis.empty()) return std::nullopt;

    linalg::Matrix rows;
    rows.reserve(cloud.size());
    for (const Point* u : cloud) {
        const auto offset = difference(*u, anchor);
        linalg::Vector row(basis.size());
        bool zero = true;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            row[b] = linalg::dot(offset, basis[b]);
            zero = zero && sgn(row[b]) == 0;
        }
        if (!zero) rows.push_back(std::move(row));
    }

    const auto y = linalg::nonzero_in_cone(rows, basis.size());
    if (!y) return std::nullopt;

    linalg::Vector normal(dim);
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t i = 0; i < dim; ++i) normal[i] += (*y)[b] * basis[b][i];
    linalg::make_primitive(normal);

    Hyperplane h{std::move(normal), 0};
    h.offset = linalg::dot(h.normal, anchor);
    return h;
}

std::size_t extreme_point(std::span<const Point> cloud)
{
    const auto c = pointers(cloud);
    return extreme_point(std::span<const Point* const>(c));
}

std::size_t extreme_point(std::span<const Point* const> cloud)
{
    if (cloud.empty()) throw InputError("extreme_point: empty cloud");
    std::size_t best = 0;
    for (std::size_t i = 1; i < cloud.size(); ++i)
        if (*cloud[i] < *cloud[best]) best = i;
    return best;
}

bool interiors_intersect(std::span<const Point* const> a, std::span<const Point* const> b)
{
    if (a.empty() || b.empty()) throw InputError("interiors_intersect: empty simplex");
    const std::size_t dim = a.front()->size();

    // Cheap exits first: a facet plane of either simplex with the other one
    // entirely on its outer closed side separates them.
    auto facet_separates = [dim](std::span<const Point* const> s, std::span<const Point* const> other) {
        if (s.size() != dim + 1) return false;
        std::vector<const Point*> pts(s.begin(), s.end());
        for (std::size_t k = 0; k <= dim; ++k) {
            const int inner = orientation(std::span<const Point* const>(pts), dim);
            if (inner == 0) return false;
            const Point* own = pts[k];
            bool outside = true;
            for (const Point* q : other) {
                pts[k] = q;
                if (orientation(std::span<const Point* const>(pts), dim) * inner > 0) {
                    outside = false;
                    break;
                }
            }
            pts[k] = own;
            if (outside) return true;
        }
        return false;
    };
    if (facet_separates(a, b) || facet_separates(b, a)) return false;

    // Unknowns (normal, offset): normal . p <= offset on a, normal . q >= offset on b.
    linalg::Matrix rows;
    rows.reserve(a.size() + b.size());
    for (const Point* p : a) {
        require_dimension(*p, dim);
        linalg::Vector row(*p);
        row.emplace_back(-1);
        rows.push_back(std::move(row));
    }
    for (const Point* q : b) {
        require_dimension(*q, dim);
        linalg::Vector row(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) row[i] = -(*q)[i];
        row[dim] = 1;
        rows.push_back(std::move(row));
    }
    return !linalg::nonzero_in_cone(rows, dim + 1).has_value();
}

}  // namespace simplexcolor
