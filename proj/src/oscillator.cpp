#include "symsemi/oscillator.hpp"

#include "symsemi/cliffordlab.hpp"
#include "symsemi/errors.hpp"
#include "symsemi/qlinalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

namespace symsemi {

namespace {

constexpr double kRelTol = 1e-9;
constexpr double kRootTol = 1e-12;

template <class T>
using Dense = std::vector<std::vector<T>>;

bool close(double a, double b) { return std::fabs(a - b) <= kRelTol * std::max({1.0, std::fabs(a), std::fabs(b)}); }

template <class T>
T abs_val(const T& x) {
    return x < T(0) ? T(0) - x : x;
}

template <class T>
Dense<T> dense_inverse(Dense<T> a) {
    const std::size_t n = a.size();
    Dense<T> inv(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs_val(a[r][c]) > abs_val(a[p][c])) p = r;
        if (is_zero(a[p][c])) throw Singular("matrix is not invertible");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const T s = T(1) / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(a[r][c])) continue;
            const T f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Eigen::MatrixXd to_eigen(const SparseMatD& m) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i)) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e.col)) = e.val;
    return out;
}

// Operator data in one scalar type.
template <class T>
struct OpData {
    int m = 0;
    Dense<T> A, S;
    T t;
    SparseMatrix<T> Lpp;
    std::vector<SparseMatrix<T>> c, ch; // transposed: row I lists the image of e^I
};

template <class T>
std::vector<SparseMatrix<T>> clifford_images(int m, CliffordKind kind) {
    std::vector<SparseMatrix<T>> out;
    for (int j = 0; j < m; ++j) {
        std::vector<T> e(m, T(0));
        e[j] = T(1);
        out.push_back(clifford<T>(m, e, kind).matrix.transpose());
    }
    return out;
}

template <class T>
SparseMatrix<T> build_Lpp(int m, const Dense<T>& A, const T& trace_s) {
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> l = SparseMatrix<T>::identity(n) * trace_s;
    std::vector<SparseMatrix<T>> c, ch;
    for (int j = 0; j < m; ++j) {
        std::vector<T> e(m, T(0));
        e[j] = T(1);
        c.push_back(clifford<T>(m, e, CliffordKind::c).matrix);
        ch.push_back(clifford<T>(m, e, CliffordKind::chat).matrix);
    }
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            if (!is_zero(A[k][j])) l = l + (c[j] * ch[k]) * A[k][j];
    return l;
}

OpData<Rational> exact_data(const ModelOperator& op) {
    if (op.mode != Mode::exact) throw ShapeMismatch("operator was built in float mode");
    OpData<Rational> d;
    d.m = op.m;
    d.A = op.A.to_dense();
    d.S = op.S.to_dense();
    d.t = op.T;
    d.Lpp = op.Lpp;
    d.c = clifford_images<Rational>(op.m, CliffordKind::c);
    d.ch = clifford_images<Rational>(op.m, CliffordKind::chat);
    return d;
}

OpData<double> float_data(const ModelOperator& op) {
    OpData<double> d;
    d.m = op.m;
    d.A.assign(op.m, std::vector<double>(op.m));
    for (int i = 0; i < op.m; ++i)
        for (int j = 0; j < op.m; ++j) d.A[i][j] = op.A.at(i, j).to_double();
    d.S = op.S_float;
    d.t = op.T.to_double();
    d.Lpp = op.Lpp_float;
    d.c = clifford_images<double>(op.m, CliffordKind::c);
    d.ch = clifford_images<double>(op.m, CliffordKind::chat);
    return d;
}

std::size_t find_mono(const Sector& sec, const std::vector<int>& a) {
    auto it = sec.index.find(a);
    if (it == sec.index.end()) {
        int deg = 0;
        for (int x : a) deg += x;
        throw TruncationTooSmall("image has polynomial degree " + std::to_string(deg) + " above the cap " +
                                 std::to_string(sec.cap));
    }
    return it->second;
}

template <class T>
SparseMatrix<T> L_impl(const OpData<T>& d, const Sector& sec) {
    const std::size_t nf = sec.forms();
    const SparseMatrix<T> lt = d.Lpp.transpose();
    SparseMatrix<T> out(sec.size(), sec.size());
    for (std::size_t a = 0; a < sec.monomials.size(); ++a) {
        const auto& al = sec.monomials[a];
        for (std::size_t I = 0; I < nf; ++I) {
            const std::size_t col = sec.at(a, I);
            for (int i = 0; i < d.m; ++i) {
                if (al[i] >= 2) {
                    auto b = al;
                    b[i] -= 2;
                    out.add_to(sec.at(find_mono(sec, b), I), col, T(-al[i] * (al[i] - 1)));
                }
                if (al[i] >= 1) {
                    for (int j = 0; j < d.m; ++j) {
                        if (is_zero(d.S[i][j])) continue;
                        auto b = al;
                        b[i] -= 1;
                        b[j] += 1;
                        out.add_to(sec.at(find_mono(sec, b), I), col, T(2) * d.t * d.S[i][j] * T(al[i]));
                    }
                }
            }
            for (const auto& e : lt.row(I)) out.add_to(sec.at(a, e.col), col, d.t * e.val);
        }
    }
    return out;
}

template <class T>
SparseMatrix<T> D_impl(const OpData<T>& d, const Sector& in, const Sector& out_sec) {
    const std::size_t nf = in.forms();
    SparseMatrix<T> out(out_sec.size(), in.size());
    for (std::size_t a = 0; a < in.monomials.size(); ++a) {
        const auto& al = in.monomials[a];
        for (std::size_t I = 0; I < nf; ++I) {
            const std::size_t col = in.at(a, I);
            auto put = [&](const std::vector<int>& mono, const SparseMatrix<T>& op, const T& coef) {
                if (is_zero(coef)) return;
                const std::size_t r = find_mono(out_sec, mono);
                for (const auto& e : op.row(I)) out.add_to(out_sec.at(r, e.col), col, coef * e.val);
            };
            for (int j = 0; j < d.m; ++j) {
                if (al[j] >= 1) {
                    auto b = al;
                    b[j] -= 1;
                    put(b, d.c[j], T(al[j]));
                }
                for (int k = 0; k < d.m; ++k) {
                    auto b = al;
                    b[k] += 1;
                    put(b, d.c[j], T(0) - d.t * d.S[j][k]);
                    put(b, d.ch[j], d.t * d.A[j][k]);
                }
            }
        }
    }
    return out;
}

template <class T>
SparseMatrix<T> gram_impl(const OpData<T>& d, const Sector& sec) {
    Dense<T> two_ts = d.S;
    for (auto& r : two_ts)
        for (auto& x : r) x *= T(2) * d.t;
    const Dense<T> sigma = dense_inverse(two_ts);
    std::map<std::vector<int>, T> memo;
    auto moment = [&](auto&& self, const std::vector<int>& g) -> T {
        int deg = 0;
        for (int x : g) deg += x;
        if (deg == 0) return T(1);
        if (deg % 2 == 1) return T(0);
        auto it = memo.find(g);
        if (it != memo.end()) return it->second;
        std::size_t i = 0;
        while (g[i] == 0) ++i;
        auto rest = g;
        rest[i] -= 1;
        T acc(0);
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0 || is_zero(sigma[i][j])) continue;
            auto r2 = rest;
            r2[j] -= 1;
            acc += sigma[i][j] * T(rest[j]) * self(self, r2);
        }
        memo.emplace(g, acc);
        return acc;
    };
    SparseMatrix<T> out(sec.size(), sec.size());
    for (std::size_t a = 0; a < sec.monomials.size(); ++a)
        for (std::size_t b = 0; b < sec.monomials.size(); ++b) {
            std::vector<int> g(d.m);
            for (int i = 0; i < d.m; ++i) g[i] = sec.monomials[a][i] + sec.monomials[b][i];
            const T mom = moment(moment, g);
            if (is_zero(mom)) continue;
            for (std::size_t I = 0; I < sec.forms(); ++I) out.set(sec.at(a, I), sec.at(b, I), mom);
        }
    return out;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
    return s;
}

template <class T>
T gdot(const SparseMatrix<T>& g, const std::vector<T>& a, const std::vector<T>& b) {
    return dot(a, g.apply(b));
}

// (1/2)(w0* - w0) on the form factor of a sector vector.
template <class T>
std::vector<T> apply_half_omega(const Sector& sec, const std::vector<T>& v) {
    const SparseMatrix<T> w = ((ext::omega0_contract<T>(sec.m) - ext::omega0_wedge<T>(sec.m)) * (T(1) / T(2))).transpose();
    std::vector<T> out(v.size(), T(0));
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (is_zero(v[r])) continue;
        const std::size_t mono = r / sec.forms(), I = r % sec.forms();
        for (const auto& e : w.row(I)) out[sec.at(mono, e.col)] += e.val * v[r];
    }
    return out;
}

int parity_of(const Sector& sec, const std::vector<std::size_t>& support) {
    std::set<int> par;
    for (auto r : support) par.insert(ext::form_degree(r % sec.forms()) % 2);
    return par.size() == 1 ? *par.begin() : -1;
}

struct FloatEig {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors; // G-orthonormal columns
    double zero_tol = 0.0;
};

FloatEig float_eig(const SparseMatD& m, const SparseMatD& g) {
    const Eigen::MatrixXd M = to_eigen(m);
    const Eigen::MatrixXd G = to_eigen(g);
    const Eigen::MatrixXd GM = G * M;
    const Eigen::MatrixXd sym = 0.5 * (GM + GM.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, G);
    FloatEig out{es.eigenvalues(), es.eigenvectors(), 0.0};
    out.zero_tol = kRelTol * std::max(1.0, out.values.cwiseAbs().maxCoeff());
    return out;
}

std::vector<std::size_t> support_of(const Eigen::VectorXd& v) {
    std::vector<std::size_t> s;
    const double mx = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::fabs(v(i)) > kRelTol * mx) s.push_back(static_cast<std::size_t>(i));
    return s;
}

std::vector<Rational> exact_dense_vector(const SparseMat& column_matrix, std::size_t col) {
    return column_matrix.column(col);
}

void validate_T(const std::vector<Rational>& Ts, std::size_t min_distinct) {
    std::set<Rational> distinct(Ts.begin(), Ts.end());
    for (const auto& t : Ts)
        if (t.sign() <= 0) throw ShapeMismatch("T values must be positive, got " + t.str());
    if (distinct.size() < min_distinct)
        throw ShapeMismatch("need at least " + std::to_string(min_distinct) + " distinct T values");
}

} // namespace

Sector make_sector(int m, int cap) {
    if (m < 1) throw BadDimension("sector dimension must be positive");
    if (cap < 0) throw TruncationTooSmall("polynomial degree cap must be nonnegative");
    Sector s;
    s.m = m;
    s.cap = cap;
    for (int deg = 0; deg <= cap; ++deg) {
        std::vector<int> cur(m, 0);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == m - 1) {
                cur[i] = left;
                s.monomials.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) {
                cur[i] = e;
                self(self, i + 1, left - e);
            }
        };
        rec(rec, 0, deg);
    }
    for (std::size_t i = 0; i < s.monomials.size(); ++i) s.index.emplace(s.monomials[i], i);
    return s;
}

SparseMat rational_spd_sqrt(const SparseMat& m) {
    if (!m.square()) throw ShapeMismatch("square root of a non-square matrix");
    if (!(m == m.transpose())) throw NoRationalRoot("matrix is not symmetric");
    const std::size_t n = m.rows();
    SparseMat s(n, n);

    bool diagonal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : m.row(i))
            if (e.col != i) diagonal = false;
    if (diagonal) {
        for (std::size_t i = 0; i < n; ++i) {
            Rational r;
            if (m.at(i, i).sign() <= 0 || !exact_sqrt(m.at(i, i), r))
                throw NoRationalRoot("diagonal entry " + m.at(i, i).str() + " has no positive rational root");
            s.set(i, i, r);
        }
        return s;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(to_double(m)));
    if (es.eigenvalues().minCoeff() <= 0) throw NoRationalRoot("matrix is not positive definite");
    const Eigen::MatrixXd sf =
        es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Rational r = rationalize(sf(i, j), 1000000);
            s.set(i, j, r);
            s.set(j, i, r);
        }
    if (!(s * s == m)) throw NoRationalRoot("no rational symmetric square root found");
    for (std::size_t k = 1; k <= n; ++k) {
        SparseMat lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.set(i, j, s.at(i, j));
        if (qlinalg::determinant(lead).sign() <= 0) throw NoRationalRoot("rational root is not positive definite");
    }
    return s;
}

ModelOperator model_L(const SparseMat& A, const Rational& T, Mode mode) {
    if (!A.square()) throw ShapeMismatch("A must be square, got " + A.shape_str());
    const int m = static_cast<int>(A.rows());
    if (m == 0 || m % 4 != 0 || m > 8) throw BadDimension("A must be 4n x 4n with 4n <= 8, got " + A.shape_str());
    if (T.sign() <= 0) throw ShapeMismatch("T must be positive");
    ModelOperator op;
    op.mode = mode;
    op.m = m;
    op.A = A;
    op.T = T;
    op.det_A = qlinalg::determinant(A);
    if (op.det_A.is_zero()) throw Singular("det A = 0");
    const SparseMat ata = A.transpose() * A;

    if (mode == Mode::exact) {
        op.S = rational_spd_sqrt(ata);
        for (int i = 0; i < m; ++i) op.trace_S += op.S.at(i, i);
        op.trace_S_float = op.trace_S.to_double();
        op.S_float.assign(m, std::vector<double>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) op.S_float[i][j] = op.S.at(i, j).to_double();
        op.Lpp = build_Lpp<Rational>(m, A.to_dense(), op.trace_S);
        op.Lpp_float = to_double(op.Lpp);
        return op;
    }

    const Eigen::MatrixXd ataf = to_eigen(to_double(ata));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ataf);
    const Eigen::MatrixXd sf =
        es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    op.s_residual = (sf * sf - ataf).norm() / ataf.norm();
    if (op.s_residual > kRootTol)
        throw NoRationalRoot("floating square root residual " + std::to_string(op.s_residual) + " above 1e-12");
    op.S_float.assign(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) op.S_float[i][j] = 0.5 * (sf(i, j) + sf(j, i));
    op.trace_S_float = sf.trace();
    Dense<double> ad(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) ad[i][j] = A.at(i, j).to_double();
    op.Lpp_float = build_Lpp<double>(m, ad, op.trace_S_float);
    return op;
}

SparseMat conjugated_L(const ModelOperator& op, const Sector& sec) { return L_impl(exact_data(op), sec); }

SparseMat conjugated_D(const ModelOperator& op, const Sector& in, const Sector& out) {
    return D_impl(exact_data(op), in, out);
}

SparseMat gaussian_gram(const ModelOperator& op, const Sector& sec) { return gram_impl(exact_data(op), sec); }

KernelResult kernel_and_parity(const ModelOperator& op, int cap) {
    const Sector sec = make_sector(op.m, cap);
    KernelResult r;
    r.det_sign = op.det_A.sign();
    if (op.mode == Mode::exact) {
        const SparseMat k = qlinalg::kernel_basis(L_impl(exact_data(op), sec));
        r.ker_dim = k.cols();
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < k.rows(); ++i)
            if (!k.row(i).empty()) support.push_back(i);
        r.parity = parity_of(sec, support);
        return r;
    }
    const OpData<double> d = float_data(op);
    const FloatEig e = float_eig(L_impl(d, sec), gram_impl(d, sec));
    std::vector<std::size_t> support;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        if (std::fabs(e.values(i)) > e.zero_tol) continue;
        ++r.ker_dim;
        const auto s = support_of(e.vectors.col(i));
        support.insert(support.end(), s.begin(), s.end());
    }
    r.parity = parity_of(sec, support);
    return r;
}

SpectrumResult spectrum_scaling(const SparseMat& A, const std::vector<Rational>& Ts, int cap, Mode mode) {
    if (cap < 2) throw TruncationTooSmall("spectrum needs polynomial degree cap >= 2, got " + std::to_string(cap));
    validate_T(Ts, 3);
    const Sector sec = make_sector(static_cast<int>(A.rows()), cap);
    SpectrumResult res;
    bool same = true, self_adjoint = true, zero_ok = true, positive = true;
    // half polynomial degree of each sector index: P = diag(r^half) conjugates L_T / T into L_T0 / T0 for r = T / T0
    std::vector<int> half(sec.size());
    for (std::size_t i = 0; i < sec.monomials.size(); ++i) {
        int deg = 0;
        for (int a : sec.monomials[i]) deg += a;
        for (std::size_t mask = 0; mask < sec.forms(); ++mask) half[sec.at(i, mask)] = deg / 2;
    }
    SparseMat ref;
    for (const auto& t : Ts) {
        const ModelOperator op = model_L(A, t, mode);
        const OpData<double> fd = float_data(op);
        const SparseMatD mf = L_impl(fd, sec);
        const SparseMatD gf = gram_impl(fd, sec);
        const FloatEig e = float_eig(mf, gf);
        SpectrumRow row{t, {}};
        for (Eigen::Index i = 0; i < e.values.size(); ++i) row.eigen_over_T.push_back(e.values(i) / t.to_double());

        if (mode == Mode::exact) {
            const OpData<Rational> d = exact_data(op);
            const SparseMat m = L_impl(d, sec);
            if (t == Ts.front()) {
                // G positive definite makes L diagonalizable with real spectrum, so the zero
                // multiplicity is dim ker and G L >= 0 means every other eigenvalue is positive
                const SparseMat g = gram_impl(d, sec);
                const SparseMat gm = g * m;
                self_adjoint = gm == gm.transpose();
                const std::size_t ker = sec.size() - qlinalg::rank(m);
                zero_ok = self_adjoint && qlinalg::rank(g) == sec.size() && qlinalg::is_positive_semidefinite(g);
                positive = self_adjoint && qlinalg::is_positive_semidefinite(gm);
                res.zero_multiplicity = ker;
                ref = m * t.inverse();
            } else {
                const Rational r = t / Ts.front();
                std::vector<Rational> rpow{Rational(1)};
                SparseMat conj(m.rows(), m.cols());
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (const auto& en : m.row(i)) {
                        const int k = half[en.col] - half[i];
                        Rational f(1);
                        for (int j = 0; j < std::abs(k); ++j) f *= r;
                        conj.set(i, en.col, k >= 0 ? en.val * f / t : en.val / (f * t));
                    }
                same = same && conj == ref;
            }
        } else {
            const SparseMatD gm = gf * mf;
            const double asym = max_abs_diff(gm, gm.transpose());
            double scale = 0.0;
            for (std::size_t i = 0; i < gm.rows(); ++i)
                for (const auto& en : gm.row(i)) scale = std::max(scale, std::fabs(en.val));
            self_adjoint = self_adjoint && asym <= kRelTol * std::max(1.0, scale);
            if (!res.rows.empty()) {
                const auto& ref = res.rows.front().eigen_over_T;
                for (std::size_t i = 0; i < ref.size(); ++i) same = same && close(ref[i], row.eigen_over_T[i]);
            }
            std::size_t z = 0;
            for (Eigen::Index i = 0; i < e.values.size(); ++i) {
                if (std::fabs(e.values(i)) <= e.zero_tol) ++z;
                else if (e.values(i) < 0) positive = false;
            }
            if (t == Ts.front()) res.zero_multiplicity = z;
            zero_ok = zero_ok && z == res.zero_multiplicity;
        }
        res.rows.push_back(std::move(row));
    }
    const auto& ev = res.rows.front().eigen_over_T;
    const double tol = kRelTol * std::max(1.0, std::fabs(ev.back()));
    res.smallest_nonzero = 0.0;
    for (double x : ev)
        if (std::fabs(x) > tol) {
            res.smallest_nonzero = x;
            break;
        }
    res.verdict.add("spectrum_over_T_independent_of_T", same,
                    mode == Mode::exact ? "L_T / T rationally similar to L_T0 / T0" : "relative 1e-9");
    res.verdict.add("self_adjoint_in_gaussian_product", self_adjoint, "G L symmetric");
    res.verdict.add("zero_multiplicity_equals_kernel", zero_ok,
                    "zero eigenvalue multiplicity " + std::to_string(res.zero_multiplicity));
    res.verdict.add("nonzero_eigenvalues_positive", positive && res.smallest_nonzero > 0,
                    "smallest nonzero eigenvalue / T = " + std::to_string(res.smallest_nonzero));
    return res;
}

EtaResult eta_scaling(const SparseMat& A, const std::vector<Rational>& Ts, Mode mode, int cap) {
    if (cap < 1) throw TruncationTooSmall("eta needs polynomial degree cap >= 1, got " + std::to_string(cap));
    validate_T(Ts, 1);
    const int m = static_cast<int>(A.rows());
    const Sector sec = make_sector(m, cap);
    const Sector big = make_sector(m, cap + 1);
    const std::size_t n = sec.size();
    EtaResult res;
    bool orth = true, reproduces = true, solvable = true, kernel_ok = true, constant = true;

    for (const auto& t : Ts) {
        const ModelOperator op = model_L(A, t, mode);
        EtaRow row{t, 0.0, {}};
        if (mode == Mode::exact) {
            const OpData<Rational> d = exact_data(op);
            const SparseMat M = L_impl(d, sec);
            const SparseMat G = gram_impl(d, sec);
            const SparseMat K = qlinalg::kernel_basis(M);
            if (K.cols() != 1) {
                kernel_ok = false;
                continue;
            }
            const std::vector<Rational> rho = exact_dense_vector(K, 0);
            const std::vector<Rational> src = apply_half_omega(sec, rho);
            orth = orth && (Rational(2) * gdot(G, src, rho)).is_zero();
            const SparseMat D = D_impl(d, sec, big);
            std::vector<Rational> b = D.apply(src);
            for (std::size_t i = n; i < b.size(); ++i)
                if (!b[i].is_zero()) throw TruncationTooSmall("D of the source leaves the sector");
            b.resize(n);
            std::vector<Rational> eta(n);
            if (std::all_of(b.begin(), b.end(), [](const Rational& x) { return x.is_zero(); })) {
                res.eta_zero = true;
            } else {
                auto sol = qlinalg::solve(M, b);
                if (!sol) {
                    solvable = false;
                    continue;
                }
                eta = *sol;
                const Rational coef = gdot(G, eta, rho) / gdot(G, rho, rho);
                for (std::size_t i = 0; i < n; ++i) eta[i] -= coef * rho[i];
                std::vector<Rational> deta = D.apply(eta);
                std::vector<Rational> want = src;
                want.resize(deta.size());
                reproduces = reproduces && deta == want;
            }
            const Rational c1sq = t * gdot(G, eta, eta) / gdot(G, rho, rho);
            row.C1_squared = c1sq;
            row.C1 = std::sqrt(c1sq.to_double());
            if (res.rows.empty()) {
                res.eta = eta;
                res.rho = rho;
            } else {
                constant = constant && res.rows.front().C1_squared && *res.rows.front().C1_squared == c1sq;
            }
        } else {
            const OpData<double> d = float_data(op);
            const SparseMatD Mf = L_impl(d, sec);
            const SparseMatD Gf = gram_impl(d, sec);
            const FloatEig e = float_eig(Mf, Gf);
            const Eigen::MatrixXd G = to_eigen(Gf);
            std::vector<Eigen::Index> zero;
            for (Eigen::Index i = 0; i < e.values.size(); ++i)
                if (std::fabs(e.values(i)) <= e.zero_tol) zero.push_back(i);
            if (zero.size() != 1) {
                kernel_ok = false;
                continue;
            }
            const Eigen::VectorXd rho = e.vectors.col(zero.front());
            std::vector<double> rho_v(rho.data(), rho.data() + rho.size());
            const std::vector<double> src = apply_half_omega(sec, rho_v);
            const Eigen::VectorXd src_e = Eigen::Map<const Eigen::VectorXd>(src.data(), static_cast<Eigen::Index>(src.size()));
            orth = orth && std::fabs(2.0 * src_e.dot(G * rho)) <= kRelTol * std::max(1.0, src_e.norm());
            const SparseMatD D = D_impl(d, sec, big);
            std::vector<double> b = D.apply(src);
            b.resize(n);
            const Eigen::VectorXd be = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(n));
            Eigen::VectorXd eta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
            if (be.norm() <= kRelTol) {
                res.eta_zero = true;
            } else {
                for (Eigen::Index i = 0; i < e.values.size(); ++i) {
                    if (i == zero.front()) continue;
                    eta += (e.vectors.col(i).dot(G * be) / e.values(i)) * e.vectors.col(i);
                }
                std::vector<double> ev(eta.data(), eta.data() + eta.size());
                std::vector<double> deta = D.apply(ev);
                double err = 0.0, scale = 1.0;
                for (std::size_t i = 0; i < deta.size(); ++i) {
                    const double w = i < src.size() ? src[i] : 0.0;
                    err = std::max(err, std::fabs(deta[i] - w));
                    scale = std::max(scale, std::fabs(w));
                }
                reproduces = reproduces && err <= kRelTol * scale;
            }
            row.C1 = std::sqrt(t.to_double() * eta.dot(G * eta) / rho.dot(G * rho));
            if (!res.rows.empty()) constant = constant && close(res.rows.front().C1, row.C1);
        }
        res.rows.push_back(std::move(row));
    }
    if (!res.rows.empty()) {
        res.C1 = res.rows.front().C1;
        res.C1_squared = res.rows.front().C1_squared;
    }
    res.verdict.add("kernel_is_one_dimensional", kernel_ok);
    res.verdict.add("eta_solvable", solvable, "L eta = D(1/2(w0* - w0) rho) on the complement of rho");
    res.verdict.add("orthogonality", orth, "<(w0* - w0) rho, rho> = 0");
    res.verdict.add("D_eta_reproduces_source", reproduces, "D eta = 1/2(w0* - w0) rho");
    res.verdict.add("C1_independent_of_T", constant && res.rows.size() == Ts.size(),
                    res.eta_zero ? "eta = 0, C1 = 0" : "");
    return res;
}

SparseMat random_rational_root_matrix(int m, int det_sign, std::mt19937_64& rng) {
    // small sparse entries keep exact arithmetic on the truncated operator cheap
    std::uniform_int_distribution<int> unit(-1, 1), coin(0, 2);
    SparseMat k(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (coin(rng) != 0) continue;
            const Rational v(unit(rng) >= 0 ? 1 : -1, 1 + coin(rng) % 2);
            k.set(i, j, v);
            k.set(j, i, -v);
        }
    const SparseMat id = SparseMat::identity(m);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SparseMat sp(m, m);
    for (int i = 0; i < m; ++i) sp.set(i, perm[i], unit(rng) >= 0 ? 1 : -1);
    SparseMat q = sp * (id - k) * qlinalg::inverse(id + k);
    if (qlinalg::determinant(q).sign() != (det_sign < 0 ? -1 : 1)) {
        SparseMat flip = id;
        flip.set(0, 0, -1);
        q = flip * q;
    }
    SparseMat b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b.set(i, j, unit(rng) * (coin(rng) == 0 ? 1 : 0));
    const SparseMat p = b.transpose() * b + id;
    return q * p;
}

} // namespace symsemi
