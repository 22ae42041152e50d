#include "symsemi/cliffordlab.hpp"

#include "symsemi/errors.hpp"

#include <cmath>

namespace symsemi {

namespace {

constexpr double kTol = 1e-12;

void check_range(int m, Mode mode) {
    if (m < 1 || m > max_ext_dim(mode))
        throw BadDimension("m = " + std::to_string(m) + " outside 1.." + std::to_string(max_ext_dim(mode)) +
                           " for " + mode_name(mode) + " mode");
}

void check_four(int m) {
    if (m % 4 != 0) throw BadDimension("m = " + std::to_string(m) + " is not a multiple of 4");
}

template <class T>
Mode mode_of() {
    return std::is_same_v<T, double> ? Mode::floating : Mode::exact;
}

// Number of elements of `mask` below bit i.
int below(std::size_t mask, int i) { return ext::form_degree(mask & ((std::size_t{1} << i) - 1)); }

template <class T>
SparseMatrix<T> diag_by_degree(int m, auto sign_of_degree) {
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> d(n, n);
    for (std::size_t s = 0; s < n; ++s) d.set(s, s, T(sign_of_degree(ext::form_degree(s))));
    return d;
}

struct Compare {
    bool equal;
    std::optional<double> residual;
};

Compare compare(const SparseMatrix<Rational>& a, const SparseMatrix<Rational>& b) { return {a == b, {}}; }

Compare compare(const SparseMatrix<double>& a, const SparseMatrix<double>& b) {
    const double r = max_abs_diff(a, b);
    return {r <= kTol, r};
}

template <class T>
void add_check(Verdict& v, std::string name, const SparseMatrix<T>& a, const SparseMatrix<T>& b, std::string detail = {}) {
    const Compare c = compare(a, b);
    v.add(std::move(name), c.equal, std::move(detail), c.residual);
}

template <class T>
SparseMatrix<T> anticommutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    return a * b + b * a;
}

template <class T>
std::vector<T> unit_vector(int m, int i) {
    std::vector<T> v(m, T(0));
    v[i] = T(1);
    return v;
}

template <class T>
Verdict car_impl(int m) {
    Verdict v;
    const std::size_t n = std::size_t{1} << m;
    const auto id = SparseMatrix<T>::identity(n);
    const auto zero = SparseMatrix<T>(n, n);
    std::vector<SparseMatrix<T>> c, ch;
    for (int i = 0; i < m; ++i) {
        c.push_back(clifford<T>(m, unit_vector<T>(m, i), CliffordKind::c).matrix);
        ch.push_back(clifford<T>(m, unit_vector<T>(m, i), CliffordKind::chat).matrix);
    }
    bool ok_hat = true, ok_c = true, ok_mixed = true;
    std::optional<double> worst;
    auto track = [&](const Compare& r, bool& ok) {
        ok = ok && r.equal;
        if (r.residual) worst = std::max(worst.value_or(0.0), *r.residual);
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            track(compare(anticommutator(ch[i], ch[j]), i == j ? id * T(2) : zero), ok_hat);
            track(compare(anticommutator(c[i], c[j]), i == j ? id * T(-2) : zero), ok_c);
            track(compare(c[i] * ch[j] + ch[j] * c[i], zero), ok_mixed);
        }
    v.add("car_chat", ok_hat, "chat(e_i)chat(e_j) + chat(e_j)chat(e_i) = 2 delta_ij", worst);
    v.add("car_c", ok_c, "c(e_i)c(e_j) + c(e_j)c(e_i) = -2 delta_ij", worst);
    v.add("car_mixed", ok_mixed, "c(e_i)chat(e_j) + chat(e_j)c(e_i) = 0", worst);
    return v;
}

template <class T>
Verdict star_lemma_impl(int m) {
    Verdict v;
    const auto dvol = dvol_action<T>(m).matrix;
    const auto star = hodge_star<T>(m).matrix;
    const std::size_t n = std::size_t{1} << m;
    for (int k = 0; k <= m; ++k) {
        // restrict both sides to input degree k
        SparseMatrix<T> p(n, n);
        for (std::size_t s = 0; s < n; ++s)
            if (ext::form_degree(s) == k) p.set(s, s, T(1));
        const int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
        add_check(v, "lemma_star_degree_" + std::to_string(k), dvol * p, star * p * T(sign),
                  "chat(dvol) = " + std::string(sign > 0 ? "+" : "-") + "* on " + std::to_string(k) + "-forms");
    }
    return v;
}

template <class T>
Verdict omega_lemma_impl(int m) {
    Verdict v;
    const auto dvol = dvol_action<T>(m).matrix;
    const auto w = ext::omega0_wedge<T>(m);
    const auto ws = ext::omega0_contract<T>(m);
    add_check(v, "lemma_omega", dvol * ws, -(w * dvol), "chat(dvol) w0* = -w0 chat(dvol)");
    add_check(v, "omega_adjoint", ws, w.transpose(), "w0* = (w0 wedge)^t");
    const auto half = (ws - w) * (T(1) / T(2));
    add_check(v, "omega_skew", half.transpose(), -half, "1/2(w0* - w0) is skew");
    const std::size_t n = std::size_t{1} << m;
    std::vector<T> vac(n, T(0));
    vac[0] = T(1);
    std::vector<T> expect = w.apply(vac);
    for (auto& x : expect) x *= (T(-1) / T(2));
    SparseMatrix<T> got_m(n, 1), exp_m(n, 1);
    const auto got = half.apply(vac);
    for (std::size_t i = 0; i < n; ++i) {
        got_m.set(i, 0, got[i]);
        exp_m.set(i, 0, expect[i]);
    }
    add_check(v, "omega_vacuum", got_m, exp_m, "1/2(w0* - w0) 1 = -1/2 w0");
    return v;
}

template <class T>
Verdict star_identities_impl(int m) {
    Verdict v;
    const std::size_t n = std::size_t{1} << m;
    const auto star = hodge_star<T>(m).matrix;
    const auto dvol = dvol_action<T>(m).matrix;
    add_check(v, "star_isometry", star.transpose() * star, SparseMatrix<T>::identity(n), "*^t * = 1");
    add_check(v, "star_square", star * star, diag_by_degree<T>(m, [m](int k) { return (k * (m - k)) % 2 == 0 ? 1 : -1; }),
              "** = (-1)^{k(m-k)}");
    add_check(v, "dvol_symmetric", dvol.transpose(), dvol, "chat(dvol)^t = chat(dvol)");
    bool commute = true;
    std::optional<double> worst;
    for (int j = 0; j < m; ++j) {
        const auto cj = clifford<T>(m, unit_vector<T>(m, j), CliffordKind::c).matrix;
        const Compare r = compare(dvol * cj, cj * dvol);
        commute = commute && r.equal;
        if (r.residual) worst = std::max(worst.value_or(0.0), *r.residual);
    }
    v.add("dvol_commutes_c", commute, "chat(dvol) c(e_j) = c(e_j) chat(dvol)", worst);

    const auto half = (ext::omega0_contract<T>(m) - ext::omega0_wedge<T>(m)) * (T(1) / T(2));
    SparseMatrix<T> block(2 * n, 2 * n);
    block.place(half, 0, 0);
    block.place(half, n, n, T(-1));
    add_check(v, "zero_order_block_skew", block.transpose(), -block, "diag(1/2(w0* - w0), 1/2(w0 - w0*)) is skew");
    return v;
}

template <class T>
Verdict complex_structure_impl(int m, const std::vector<T>& vec) {
    Verdict v;
    const std::size_t n = std::size_t{1} << m;
    const auto ch = clifford<T>(m, vec, CliffordKind::chat).matrix;
    SparseMatrix<T> j(2 * n, 2 * n);
    j.place(ch, 0, n, T(-1));
    j.place(ch, n, 0);
    add_check(v, "complex_structure", j * j, SparseMatrix<T>::identity(2 * n) * T(-1),
              "([[0,1],[1,0]] diag(chat(v), -chat(v)))^2 = -1");
    return v;
}

} // namespace

namespace ext {

template <class T>
SparseMatrix<T> wedge(int m, int i) {
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> w(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (s & (std::size_t{1} << i)) continue;
        w.set(s | (std::size_t{1} << i), s, T(below(s, i) % 2 == 0 ? 1 : -1));
    }
    return w;
}

template <class T>
SparseMatrix<T> contract(int m, int i) {
    return wedge<T>(m, i).transpose();
}

template <class T>
SparseMatrix<T> omega0_wedge(int m) {
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> w(n, n);
    for (int k = 0; k + 1 < m; k += 2) w = w + wedge<T>(m, k) * wedge<T>(m, k + 1);
    return w;
}

template <class T>
SparseMatrix<T> omega0_contract(int m) {
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> w(n, n);
    for (int k = 0; k + 1 < m; k += 2) w = w + contract<T>(m, k + 1) * contract<T>(m, k);
    return w;
}

template SparseMatrix<Rational> wedge<Rational>(int, int);
template SparseMatrix<double> wedge<double>(int, int);
template SparseMatrix<Rational> contract<Rational>(int, int);
template SparseMatrix<double> contract<double>(int, int);
template SparseMatrix<Rational> omega0_wedge<Rational>(int);
template SparseMatrix<double> omega0_wedge<double>(int);
template SparseMatrix<Rational> omega0_contract<Rational>(int);
template SparseMatrix<double> omega0_contract<double>(int);

} // namespace ext

template <class T>
ExtOp<T> clifford(int m, const std::vector<T>& v, CliffordKind kind) {
    check_range(m, mode_of<T>());
    if (static_cast<int>(v.size()) != m)
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " for m = " + std::to_string(m));
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> out(n, n);
    const T sc = kind == CliffordKind::chat ? T(1) : T(-1);
    for (int i = 0; i < m; ++i) {
        if (is_zero(v[i])) continue;
        out = out + ext::wedge<T>(m, i) * v[i] + ext::contract<T>(m, i) * (sc * v[i]);
    }
    return {m, std::move(out)};
}

template <class T>
ExtOp<T> hodge_star(int m) {
    check_range(m, mode_of<T>());
    check_four(m);
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> star(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t comp = (n - 1) & ~s;
        // inversions of the concatenation (S, S^c): pairs s_a > t_b
        int inv = 0;
        for (int i = 0; i < m; ++i)
            if (s & (std::size_t{1} << i)) inv += ext::form_degree(comp & ((std::size_t{1} << i) - 1));
        star.set(comp, s, T(inv % 2 == 0 ? 1 : -1));
    }
    return {m, std::move(star)};
}

template <class T>
ExtOp<T> dvol_action(int m) {
    check_range(m, mode_of<T>());
    check_four(m);
    const std::size_t n = std::size_t{1} << m;
    SparseMatrix<T> acc = SparseMatrix<T>::identity(n);
    for (int i = 0; i < m; ++i) acc = acc * clifford<T>(m, unit_vector<T>(m, i), CliffordKind::chat).matrix;
    return {m, std::move(acc)};
}

template ExtOp<Rational> clifford<Rational>(int, const std::vector<Rational>&, CliffordKind);
template ExtOp<double> clifford<double>(int, const std::vector<double>&, CliffordKind);
template ExtOp<Rational> hodge_star<Rational>(int);
template ExtOp<double> hodge_star<double>(int);
template ExtOp<Rational> dvol_action<Rational>(int);
template ExtOp<double> dvol_action<double>(int);

Verdict verify_car(int m, Mode mode) {
    check_range(m, mode);
    return mode == Mode::exact ? car_impl<Rational>(m) : car_impl<double>(m);
}

Verdict verify_lemma_star(int m, Mode mode) {
    check_range(m, mode);
    check_four(m);
    return mode == Mode::exact ? star_lemma_impl<Rational>(m) : star_lemma_impl<double>(m);
}

Verdict verify_lemma_omega(int m, Mode mode) {
    check_range(m, mode);
    check_four(m);
    return mode == Mode::exact ? omega_lemma_impl<Rational>(m) : omega_lemma_impl<double>(m);
}

Verdict verify_star_identities(int m, Mode mode) {
    check_range(m, mode);
    check_four(m);
    return mode == Mode::exact ? star_identities_impl<Rational>(m) : star_identities_impl<double>(m);
}

Verdict verify_complex_structure(int m, const std::vector<Rational>& v, Mode mode) {
    check_range(m, mode);
    if (static_cast<int>(v.size()) != m)
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " for m = " + std::to_string(m));
    Rational norm2;
    for (const auto& x : v) norm2 += x * x;
    if (mode == Mode::exact) {
        if (!(norm2 == Rational(1))) throw NotUnit("v^t v = " + norm2.str());
        return complex_structure_impl<Rational>(m, v);
    }
    std::vector<double> vd;
    double nd = 0;
    for (const auto& x : v) {
        vd.push_back(x.to_double());
        nd += vd.back() * vd.back();
    }
    if (std::fabs(nd - 1.0) > kTol) throw NotUnit("v^t v = " + std::to_string(nd));
    return complex_structure_impl<double>(m, vd);
}

std::vector<Rational> stereographic_unit(const std::vector<Rational>& u) {
    Rational s;
    for (const auto& x : u) s += x * x;
    const Rational den = s + Rational(1);
    std::vector<Rational> v;
    for (const auto& x : u) v.push_back(Rational(2) * x / den);
    v.push_back((s - Rational(1)) / den);
    return v;
}

} // namespace symsemi
