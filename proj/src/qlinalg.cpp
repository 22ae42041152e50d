#include "symsemi/qlinalg.hpp"

#include "symsemi/errors.hpp"

#include <algorithm>
#include <limits>
#include <list>

namespace symsemi::qlinalg {

namespace {

using Row = SparseMat::Row;

/// r <- r - f * p on sorted sparse rows.
void axpy(Row& r, const Rational& f, const Row& p) {
    Row out;
    out.reserve(r.size() + p.size());
    std::size_t a = 0, b = 0;
    while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].col < p[b].col)) {
            out.push_back(std::move(r[a++]));
        } else if (a == r.size() || p[b].col < r[a].col) {
            out.push_back({p[b].col, -(f * p[b].val)});
            ++b;
        } else {
            Rational v = r[a].val - f * p[b].val;
            if (!v.is_zero()) out.push_back({r[a].col, std::move(v)});
            ++a;
            ++b;
        }
    }
    r = std::move(out);
}

const Rational* find_in_row(const Row& r, std::size_t col) {
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.col < c; });
    return (it != r.end() && it->col == col) ? &it->val : nullptr;
}

struct Echelon {
    std::vector<Row> pivot_rows;
    std::vector<std::size_t> pivots;
};

/// Forward elimination; pivot rows are normalized to leading coefficient 1.
Echelon forward(const SparseMat& m) {
    std::list<Row> remaining;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        if (!r.empty()) remaining.emplace_back(r.begin(), r.end());
    }
    Echelon ech;
    while (!remaining.empty()) {
        std::size_t lead = std::numeric_limits<std::size_t>::max();
        auto pivot_it = remaining.end();
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            if (it->front().col < lead) {
                lead = it->front().col;
                pivot_it = it;
            }
        }
        Row pivot = std::move(*pivot_it);
        remaining.erase(pivot_it);
        const Rational inv = pivot.front().val.inverse();
        for (auto& e : pivot) e.val *= inv;
        for (auto it = remaining.begin(); it != remaining.end();) {
            if (it->front().col == lead) {
                const Rational f = it->front().val;
                axpy(*it, f, pivot);
                if (it->empty()) {
                    it = remaining.erase(it);
                    continue;
                }
            }
            ++it;
        }
        ech.pivots.push_back(lead);
        ech.pivot_rows.push_back(std::move(pivot));
    }
    return ech;
}

using Dense = std::vector<std::vector<Rational>>;

Dense dense_block(const SparseMat& m, const std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    std::vector<std::size_t> local(m.cols(), std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < n; ++k) local[idx[k]] = k;
    Dense d(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (const auto& e : m.row(idx[a]))
            if (local[e.col] < n) d[a][local[e.col]] = e.val;
    return d;
}

/// det(x I - H) after reduction of H to upper Hessenberg form by similarity.
Poly hessenberg_charpoly(Dense h) {
    const std::size_t n = h.size();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && h[i][j].is_zero()) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            std::swap(h[i], h[j + 1]);
            for (auto& row : h) std::swap(row[i], row[j + 1]);
        }
        const Rational piv = h[j + 1][j];
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h[r][j].is_zero()) continue;
            const Rational f = h[r][j] / piv;
            for (std::size_t c = j; c < n; ++c)
                if (!h[j + 1][c].is_zero()) h[r][c] -= f * h[j + 1][c];
            for (std::size_t rr = 0; rr < n; ++rr)
                if (!h[rr][r].is_zero()) h[rr][j + 1] += f * h[rr][r];
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = Poly{Rational(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly cur = poly_mul(Poly{-h[k - 1][k - 1], Rational(1)}, p[k - 1]);
        Rational prod(1);
        for (std::size_t m = 1; m < k; ++m) {
            prod *= h[k - m][k - m - 1];
            if (prod.is_zero()) break;
            const Rational coef = h[k - m - 1][k - 1] * prod;
            if (coef.is_zero()) continue;
            const Poly& q = p[k - m - 1];
            for (std::size_t t = 0; t < q.size(); ++t) cur[t] -= coef * q[t];
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

/// Strongly connected components of i -> j for each nonzero (i, j).
std::vector<std::vector<std::size_t>> strong_components(const SparseMat& m) {
    const std::size_t n = m.rows();
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unset), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            auto edges = m.row(f.v);
            if (f.next < edges.size()) {
                const std::size_t w = edges[f.next++].col;
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

} // namespace

RrefResult rref(const SparseMat& m) {
    Echelon ech = forward(m);
    const std::size_t r = ech.pivots.size();
    for (std::size_t k = r; k-- > 0;) {
        for (std::size_t j = 0; j < k; ++j) {
            const Rational* v = find_in_row(ech.pivot_rows[j], ech.pivots[k]);
            if (v) {
                const Rational f = *v;
                axpy(ech.pivot_rows[j], f, ech.pivot_rows[k]);
            }
        }
    }
    RrefResult out;
    out.reduced = SparseMat(m.rows(), m.cols());
    for (std::size_t k = 0; k < r; ++k) out.reduced.set_row(k, std::move(ech.pivot_rows[k]));
    out.rank = r;
    out.pivots = std::move(ech.pivots);
    return out;
}

std::size_t rank(const SparseMat& m) { return forward(m).pivots.size(); }

SparseMat kernel_basis(const SparseMat& m) {
    const RrefResult rr = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : rr.pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    SparseMat basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis.set(f, k, Rational(1));
        for (std::size_t i = 0; i < rr.rank; ++i) {
            const Rational v = rr.reduced.at(i, f);
            if (!v.is_zero()) basis.set(rr.pivots[i], k, -v);
        }
    }
    return basis;
}

SkewParity skew_kernel_parity(const SparseMat& m) {
    if (!m.square()) throw NotSkewSymmetric("matrix is " + m.shape_str());
    if (!(m.transpose() == -m)) throw NotSkewSymmetric("m^t != -m");
    SkewParity out;
    out.ker_dim = m.cols() - rank(m);
    out.parity = static_cast<int>(out.ker_dim % 2);
    return out;
}

Rational determinant(const SparseMat& m) {
    if (!m.square()) throw ShapeMismatch("determinant of " + m.shape_str());
    Dense a = m.to_dense();
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const Rational inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const Rational f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(const SparseMat& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw ShapeMismatch("solve: rhs length mismatch");
    SparseMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row r(m.row(i).begin(), m.row(i).end());
        if (!b[i].is_zero()) r.push_back({m.cols(), b[i]});
        aug.set_row(i, std::move(r));
    }
    const RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced.at(i, m.cols());
    return x;
}

SparseMat inverse(const SparseMat& m) {
    if (!m.square()) throw ShapeMismatch("inverse of " + m.shape_str());
    const std::size_t n = m.rows();
    SparseMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        Row r(m.row(i).begin(), m.row(i).end());
        r.push_back({n + i, Rational(1)});
        aug.set_row(i, std::move(r));
    }
    const RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw Singular("matrix is not invertible");
    SparseMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Row r;
        for (const auto& e : rr.reduced.row(i))
            if (e.col >= n) r.push_back({e.col - n, e.val});
        inv.set_row(i, std::move(r));
    }
    return inv;
}

bool is_positive_semidefinite(const SparseMat& m) {
    if (!m.square() || !(m == m.transpose())) throw ShapeMismatch("positive semidefinite test needs a symmetric matrix");
    std::vector<Row> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& ri = rows[i];
        const Rational* d = find_in_row(ri, i);
        if (!d) {
            if (!ri.empty()) return false;
            continue;
        }
        if (d->sign() < 0) return false;
        const Rational inv = d->inverse();
        for (const auto& e : ri)
            if (e.col > i) axpy(rows[e.col], e.val * inv, ri);
    }
    return true;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Poly> charpoly_factors(const SparseMat& m) {
    if (!m.square()) throw ShapeMismatch("charpoly of " + m.shape_str());
    std::vector<Poly> out;
    for (const auto& comp : strong_components(m)) out.push_back(hessenberg_charpoly(dense_block(m, comp)));
    return out;
}

Poly charpoly(const SparseMat& m) {
    Poly p{Rational(1)};
    for (const auto& f : charpoly_factors(m)) p = poly_mul(p, f);
    return p;
}

} // namespace symsemi::qlinalg
