#include "simplexcolor/linalg.hpp"

#include <cassert>
#include <utility>

namespace simplexcolor::linalg {
namespace {

// Reduced row echelon form in place. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Tableau for: find x >= 0 with
//   sum_j rows[i][j] (yp_j - ym_j) + s_i = 0     (i < n)
//   t * (yp_k - ym_k) + a = 1
// minimising the artificial a. Columns: yp (dim), ym (dim), s (n), a, rhs.
class PhaseOne {
public:
    PhaseOne(const Matrix& rows, std::size_t dim, std::size_t k, int t)
        : n_(rows.size()), dim_(dim), cols_(2 * dim + n_ + 1)
    {
        table_.assign(n_ + 1, Vector(cols_ + 1));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                table_[i][j] = rows[i][j];
                table_[i][dim_ + j] = -rows[i][j];
            }
            table_[i][2 * dim_ + i] = 1;
        }
        Vector& last = table_[n_];
        last[k] = t;
        last[dim_ + k] = -t;
        last[artificial()] = 1;
        last[cols_] = 1;

        basis_.resize(n_ + 1);
        for (std::size_t i = 0; i < n_; ++i) basis_[i] = 2 * dim_ + i;
        basis_[n_] = artificial();

        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j <= cols_; ++j)
            if (j != artificial()) cost_[j] = -last[j];
    }

    std::optional<Vector> solve()
    {
        for (;;) {
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < artificial(); ++j) {
                if (sgn(cost_[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == cols_) break;

            std::size_t leaving = table_.size();
            Rational best;
            for (std::size_t r = 0; r < table_.size(); ++r) {
                if (sgn(table_[r][entering]) <= 0) continue;
                Rational ratio = table_[r][cols_] / table_[r][entering];
                if (leaving == table_.size() || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            // Phase one is bounded below by zero, so a ratio row always exists.
            assert(leaving != table_.size());
            pivot(leaving, entering);
        }
        if (sgn(cost_[cols_]) != 0) return std::nullopt;

        Vector y(dim_);
        for (std::size_t r = 0; r < table_.size(); ++r) {
            const std::size_t b = basis_[r];
            if (b < dim_) y[b] += table_[r][cols_];
            else if (b < 2 * dim_) y[b - dim_] -= table_[r][cols_];
        }
        return y;
    }

private:
    std::size_t artificial() const { return 2 * dim_ + n_; }

    void pivot(std::size_t row, std::size_t col)
    {
        Vector& p = table_[row];
        const Rational inv = 1 / p[col];
        for (auto& x : p) x *= inv;
        auto eliminate = [&](Vector& target) {
            if (sgn(target[col]) == 0) return;
            const Rational factor = target[col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(p[j]) != 0) target[j] -= factor * p[j];
        };
        for (std::size_t r = 0; r < table_.size(); ++r)
            if (r != row) eliminate(table_[r]);
        eliminate(cost_);
        basis_[row] = col;
    }

    std::size_t n_;
    std::size_t dim_;
    std::size_t cols_;
    Matrix table_;
    Vector cost_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Rational dot(const Vector& a, const Vector& b)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

void make_primitive(Vector& v)
{
    mpz_class den_lcm = 1;
    for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& x : v) {
        mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) return;
    for (auto& x : v) {
        x = Rational(x.get_num() * (den_lcm / x.get_den()) / num_gcd);
    }
}

int determinant_sign(Matrix m)
{
    const std::size_t n = m.size();
    int s = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            s = -s;
        }
        if (sgn(m[col][col]) < 0) s = -s;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            const Rational factor = m[r][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    return s;
}

std::size_t rank(Matrix m, std::size_t cols) { return rref(m, cols).size(); }

Matrix nullspace(Matrix m, std::size_t cols)
{
    const auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> nonzero_in_cone(const Matrix& rows, std::size_t dim)
{
    if (dim == 0) return std::nullopt;

    Matrix nonzero;
    for (const auto& r : rows) {
        for (const auto& x : r) {
            if (sgn(x) != 0) {
                nonzero.push_back(r);
                break;
            }
        }
    }
    // A lineality direction satisfies every row with equality.
    if (auto kernel = nullspace(nonzero, dim); !kernel.empty()) return kernel.front();

    // The cone is pointed: it is nontrivial iff some coordinate can be fixed to +-1.
    for (std::size_t k = 0; k < dim; ++k) {
        for (int t : {1, -1}) {
            if (auto y = PhaseOne(nonzero, dim, k, t).solve()) {
                make_primitive(*y);
                return y;
            }
        }
    }
    return std::nullopt;
}

}  // namespace simplexcolor::linalg
