#include "symsemi/models.hpp"

#include "symsemi/errors.hpp"
#include "symsemi/qlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace symsemi {

void Element::add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    if (terms.empty()) degree = o.degree;
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

Element operator*(const Rational& s, Element a) {
    if (s.is_zero()) {
        a.terms.clear();
        return a;
    }
    for (auto& [m, c] : a.terms) c *= s;
    return a;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> index_list(const Monomial& m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) out.push_back(static_cast<int>(i));
    return out;
}

} // namespace

CDGAModel::CDGAModel(std::vector<Generator> gens, std::vector<Element> differential, int manifold_dim)
    : gens_(std::move(gens)), diff_(std::move(differential)), manifold_dim_(manifold_dim) {
    const std::size_t n = gens_.size();
    std::set<std::string> names;
    bool all_odd = true;
    int odd_total = 0;
    for (const auto& g : gens_) {
        if (g.degree < 1) throw ShapeMismatch("generator '" + g.name + "' must have degree >= 1");
        if (!names.insert(g.name).second) throw ShapeMismatch("duplicate generator '" + g.name + "'");
        if (g.degree % 2 == 0) all_odd = false;
        else odd_total += g.degree;
    }
    if (manifold_dim_ < 0) throw ShapeMismatch("manifold_dim must be nonnegative");
    top_ = all_odd ? odd_total : manifold_dim_;

    if (diff_.size() > n) throw ShapeMismatch("more differentials than generators");
    diff_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (diff_[i].is_zero()) {
            diff_[i].degree = gens_[i].degree + 1;
            continue;
        }
        if (diff_[i].degree != gens_[i].degree + 1)
            throw ShapeMismatch("d(" + gens_[i].name + ") must have degree " + std::to_string(gens_[i].degree + 1));
        for (const auto& [m, c] : diff_[i].terms) {
            if (m.size() != n) throw ShapeMismatch("monomial length mismatch in d(" + gens_[i].name + ")");
            if (degree(m) != diff_[i].degree)
                throw ShapeMismatch("inhomogeneous d(" + gens_[i].name + ")");
        }
    }

    // Enumerate monomials of total degree <= top.
    basis_.assign(static_cast<std::size_t>(top_) + 1, {});
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
        if (i == n) {
            basis_[deg].push_back(cur);
            return;
        }
        const int step = gens_[i].degree;
        const int max_exp = (step % 2 == 1) ? 1 : (top_ - deg) / step;
        for (int e = 0; e <= max_exp && deg + e * step <= top_; ++e) {
            cur[i] = e;
            self(self, i + 1, deg + e * step);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    for (auto& b : basis_) {
        std::sort(b.begin(), b.end(), [](const Monomial& x, const Monomial& y) { return index_list(x) < index_list(y); });
        for (std::size_t k = 0; k < b.size(); ++k) index_.emplace(b[k], k);
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Element dd = CDGAModel::differential(diff_[i]);
        if (!dd.is_zero())
            throw NotAComplex("d^2(" + gens_[i].name + ") = " + to_string(dd) + " != 0");
    }
}

std::size_t CDGAModel::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw UnknownName("no generator named '" + name + "'");
}

const std::vector<Monomial>& CDGAModel::basis(int k) const {
    static const std::vector<Monomial> empty;
    if (k < 0 || k > top_) return empty;
    return basis_[k];
}

std::size_t CDGAModel::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw ShapeMismatch("monomial " + to_string(m) + " is not a basis element");
    return it->second;
}

int CDGAModel::degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

Element CDGAModel::generator(std::size_t i) const {
    Element e;
    e.degree = gens_.at(i).degree;
    Monomial m(gens_.size(), 0);
    m[i] = 1;
    if (e.degree <= top_) e.add(m, Rational(1));
    return e;
}

Element CDGAModel::word(const std::vector<std::string>& names) const {
    Element acc;
    acc.add(unit(), Rational(1));
    for (const auto& nm : names) acc = multiply(acc, generator(generator_index(nm)));
    return acc;
}

std::pair<int, Monomial> CDGAModel::multiply(const Monomial& a, const Monomial& b) const {
    const std::size_t n = gens_.size();
    int inversions = 0;
    int odd_in_a_above = 0; // odd generators of a with index > i, scanning i downward
    for (std::size_t ii = n; ii-- > 0;) {
        const bool odd = gens_[ii].degree % 2 == 1;
        if (odd && a[ii] > 0 && b[ii] > 0) return {0, {}};
        if (odd && b[ii] > 0) inversions += odd_in_a_above;
        if (odd && a[ii] > 0) ++odd_in_a_above;
    }
    Monomial out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
    if (degree(out) > top_) return {0, {}};
    return {inversions % 2 == 0 ? 1 : -1, std::move(out)};
}

Element CDGAModel::multiply(const Element& a, const Element& b) const {
    Element out;
    out.degree = a.degree + b.degree;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            auto [s, m] = multiply(ma, mb);
            if (s != 0) out.add(m, s > 0 ? ca * cb : -(ca * cb));
        }
    return out;
}

Element CDGAModel::power(const Element& a, int n) const {
    Element acc;
    acc.add(unit(), Rational(1));
    for (int i = 0; i < n; ++i) acc = multiply(acc, a);
    return acc;
}

Element CDGAModel::differential(const Monomial& m) const {
    Element out;
    out.degree = degree(m) + 1;
    if (out.degree > top_) return out;
    const auto word = index_list(m);
    const std::size_t n = gens_.size();
    Monomial prefix(n, 0);
    int prefix_deg = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
        const int g = word[p];
        Monomial suffix(n, 0);
        for (std::size_t q = p + 1; q < word.size(); ++q) ++suffix[word[q]];
        if (!diff_[g].is_zero()) {
            Element pre;
            pre.degree = prefix_deg;
            pre.add(prefix, Rational(prefix_deg % 2 == 0 ? 1 : -1));
            Element suf;
            suf.degree = degree(suffix);
            suf.add(suffix, Rational(1));
            out += multiply(multiply(pre, diff_[g]), suf);
        }
        ++prefix[g];
        prefix_deg += gens_[g].degree;
    }
    out.degree = degree(m) + 1;
    return out;
}

Element CDGAModel::differential(const Element& e) const {
    Element out;
    out.degree = e.degree + 1;
    for (const auto& [m, c] : e.terms) out += c * differential(m);
    out.degree = e.degree + 1;
    return out;
}

std::vector<Rational> CDGAModel::coordinates(const Element& e) const {
    std::vector<Rational> v(basis(e.degree).size());
    for (const auto& [m, c] : e.terms) v[basis_index(m)] = c;
    return v;
}

GradedComplex CDGAModel::complex() const {
    std::vector<std::size_t> dims;
    for (int k = 0; k <= top_; ++k) dims.push_back(basis_[k].size());
    std::vector<SparseMat> d;
    for (int k = 0; k < top_; ++k) {
        SparseMat m(dims[k + 1], dims[k]);
        for (std::size_t i = 0; i < basis_[k].size(); ++i) {
            const Element img = differential(basis_[k][i]);
            for (const auto& [mono, c] : img.terms) m.set(basis_index(mono), i, c);
        }
        d.push_back(std::move(m));
    }
    return GradedComplex(std::move(dims), std::move(d));
}

OmegaMap CDGAModel::multiplication_matrix(const Element& w) const {
    const GradedComplex c = complex();
    if (w.is_zero()) return OmegaMap::zero(c);
    if (w.degree != 2) throw ShapeMismatch("omega must have degree 2, got " + std::to_string(w.degree));
    const Element dw = differential(w);
    if (!dw.is_zero()) throw NotClosed("d(omega) = " + to_string(dw));
    std::vector<SparseMat> maps;
    for (int k = 0; k <= top_; ++k) {
        SparseMat m(c.dim(k + 2), c.dim(k));
        for (std::size_t i = 0; i < basis_[k].size(); ++i) {
            Element x;
            x.degree = k;
            x.add(basis_[k][i], Rational(1));
            const Element img = multiply(w, x);
            for (const auto& [mono, coef] : img.terms) m.set(basis_index(mono), i, coef);
        }
        maps.push_back(std::move(m));
    }
    return OmegaMap(c, std::move(maps));
}

std::string CDGAModel::to_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens_[i].name;
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string CDGAModel::to_string(const Element& e) const {
    if (e.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(e.terms.begin(), e.terms.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return index_list(x.first) < index_list(y.first); });
    std::string s;
    for (const auto& [m, c] : terms) {
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        const std::string ms = to_string(m);
        if (a == Rational(1)) s += ms;
        else s += a.str() + (ms == "1" ? "" : "*" + ms);
    }
    return s;
}

// ---------------------------------------------------------------------------

void StructureConstants::set(int k, int i, int j, const Rational& v) {
    if (k < 0 || i < 0 || j < 0 || k >= n_ || i >= n_ || j >= n_)
        throw ShapeMismatch("structure constant index out of range");
    if (i == j) {
        if (!v.is_zero()) throw ShapeMismatch("c^k_{ii} must vanish");
        return;
    }
    c_[(k * n_ + i) * n_ + j] = v;
    c_[(k * n_ + j) * n_ + i] = -v;
}

CDGAModel ce_complex(const StructureConstants& structure) {
    const int n = structure.n();
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"e" + std::to_string(i + 1), 1});
    std::vector<Element> diff(n);
    for (int k = 0; k < n; ++k) {
        diff[k].degree = 2;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rational& c = structure.at(k, i, j);
                if (c.is_zero()) continue;
                Monomial m(n, 0);
                m[i] = m[j] = 1;
                diff[k].add(m, -c);
            }
    }
    try {
        return CDGAModel(std::move(gens), std::move(diff), n);
    } catch (const NotAComplex& e) {
        throw JacobiViolation(e.message());
    }
}

FormalModel formal_model(const std::vector<std::size_t>& betti, const std::vector<SparseMat>& lefschetz) {
    if (betti.empty()) throw ShapeMismatch("formal model needs at least degree 0");
    std::vector<SparseMat> d;
    for (std::size_t k = 0; k + 1 < betti.size(); ++k) d.emplace_back(betti[k + 1], betti[k]);
    GradedComplex c(betti, std::move(d));
    OmegaMap w(c, lefschetz);
    return {std::move(c), std::move(w)};
}

SymplecticModel make_model(std::string name, CDGAModel cdga, const Element& w) {
    SymplecticModel m;
    m.name = std::move(name);
    m.manifold_dim = cdga.manifold_dim();
    m.complex = cdga.complex();
    m.omega = cdga.multiplication_matrix(w);
    m.omega_text = cdga.to_string(w);
    m.omega_element = w;
    m.cdga = std::move(cdga);
    return m;
}

SymplecticModel make_model(std::string name, GradedComplex c, OmegaMap w, int manifold_dim) {
    SymplecticModel m;
    m.name = std::move(name);
    m.manifold_dim = manifold_dim;
    m.complex = std::move(c);
    m.omega = std::move(w);
    m.omega_text = "omega map";
    return m;
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
    SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t r = 0; r < b.rows(); ++r) {
            SparseMat::Row row;
            for (const auto& ea : a.row(i))
                for (const auto& eb : b.row(r)) row.push_back({ea.col * b.cols() + eb.col, ea.val * eb.val});
            out.set_row(i * b.rows() + r, std::move(row));
        }
    return out;
}

CDGAModel tensor_product(const CDGAModel& a, const CDGAModel& b) {
    const std::size_t na = a.generators().size();
    const std::size_t nb = b.generators().size();
    std::vector<Generator> gens = a.generators();
    std::set<std::string> taken;
    for (const auto& g : gens) taken.insert(g.name);
    for (auto g : b.generators()) {
        while (taken.count(g.name)) g.name += "'";
        taken.insert(g.name);
        gens.push_back(g);
    }
    std::vector<Element> diff;
    for (const auto& e : a.differentials()) {
        Element x;
        x.degree = e.degree;
        for (const auto& [m, c] : e.terms) {
            Monomial mm(m);
            mm.resize(na + nb, 0);
            x.add(mm, c);
        }
        diff.push_back(std::move(x));
    }
    for (const auto& e : b.differentials()) {
        Element x;
        x.degree = e.degree;
        for (const auto& [m, c] : e.terms) {
            Monomial mm(na, 0);
            mm.insert(mm.end(), m.begin(), m.end());
            x.add(mm, c);
        }
        diff.push_back(std::move(x));
    }
    return CDGAModel(std::move(gens), std::move(diff), a.manifold_dim() + b.manifold_dim());
}

Element embed_left(const CDGAModel& a, const CDGAModel& product, const Element& e) {
    (void)a;
    Element x;
    x.degree = e.degree;
    for (const auto& [m, c] : e.terms) {
        Monomial mm(m);
        mm.resize(product.generators().size(), 0);
        x.add(mm, c);
    }
    return x;
}

Element embed_right(const CDGAModel& a, const CDGAModel& b, const CDGAModel& product, const Element& e) {
    (void)b;
    (void)product;
    Element x;
    x.degree = e.degree;
    for (const auto& [m, c] : e.terms) {
        Monomial mm(a.generators().size(), 0);
        mm.insert(mm.end(), m.begin(), m.end());
        x.add(mm, c);
    }
    return x;
}

FormalModel tensor_product(const GradedComplex& a, const OmegaMap& wa, const GradedComplex& b, const OmegaMap& wb) {
    const int top = a.top_degree() + b.top_degree();
    // offset[k][i]: position of the block A^i (x) B^{k-i} inside degree k
    std::vector<std::vector<std::size_t>> offset(top + 1);
    std::vector<std::size_t> dims(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        offset[k].assign(k + 1, 0);
        for (int i = 0; i <= k; ++i) {
            offset[k][i] = dims[k];
            dims[k] += a.dim(i) * b.dim(k - i);
        }
    }
    auto id = [](std::size_t n) { return SparseMat::identity(n); };
    std::vector<SparseMat> d;
    for (int k = 0; k < top; ++k) {
        SparseMat m(dims[k + 1], dims[k]);
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            if (a.dim(i) * b.dim(j) == 0) continue;
            if (i + 1 <= a.top_degree())
                m.place(kron(a.d(i), id(b.dim(j))), offset[k + 1][i + 1], offset[k][i]);
            if (j + 1 <= b.top_degree())
                m.place(kron(id(a.dim(i)), b.d(j)), offset[k + 1][i], offset[k][i], Rational(i % 2 == 0 ? 1 : -1));
        }
        d.push_back(std::move(m));
    }
    GradedComplex c(dims, std::move(d));
    std::vector<SparseMat> maps;
    for (int k = 0; k <= top; ++k) {
        SparseMat m(k + 2 <= top ? dims[k + 2] : 0, dims[k]);
        if (k + 2 <= top) {
            for (int i = 0; i <= k; ++i) {
                const int j = k - i;
                if (a.dim(i) * b.dim(j) == 0) continue;
                if (i + 2 <= a.top_degree())
                    m.place(kron(wa.at(i), id(b.dim(j))), offset[k + 2][i + 2], offset[k][i]);
                if (j + 2 <= b.top_degree())
                    m.place(kron(id(a.dim(i)), wb.at(j)), offset[k + 2][i], offset[k][i]);
            }
        }
        maps.push_back(std::move(m));
    }
    OmegaMap w(c, std::move(maps));
    return {std::move(c), std::move(w)};
}

SymplecticModel tensor_product(const SymplecticModel& a, const SymplecticModel& b) {
    const std::string name = a.name + "x" + b.name;
    if (a.cdga && b.cdga && a.omega_element && b.omega_element) {
        CDGAModel p = tensor_product(*a.cdga, *b.cdga);
        Element w = embed_left(*a.cdga, p, *a.omega_element);
        Element wb = embed_right(*a.cdga, *b.cdga, p, *b.omega_element);
        w += wb;
        w.degree = 2;
        return make_model(name, std::move(p), w);
    }
    FormalModel f = tensor_product(a.complex, a.omega, b.complex, b.omega);
    SymplecticModel m = make_model(name, std::move(f.complex), std::move(f.omega), a.manifold_dim + b.manifold_dim);
    m.omega_text = "(" + a.omega_text + ") x 1 + 1 x (" + b.omega_text + ")";
    return m;
}

SymplecticModel point_model() {
    CDGAModel pt({}, {}, 0);
    Element zero;
    zero.degree = 2;
    SymplecticModel m = make_model("point", std::move(pt), zero);
    return m;
}

// ---------------------------------------------------------------------------

SymplecticVerdict check_symplectic(const CDGAModel& m, const Element& w) {
    SymplecticVerdict v;
    const Element dw = m.differential(w);
    v.closed = dw.is_zero();
    if (!v.closed) v.d_omega = m.to_string(dw);
    if (m.manifold_dim() % 2 == 0 && (w.is_zero() || w.degree == 2)) {
        const Element top = m.power(w, m.manifold_dim() / 2);
        v.nondegenerate = !top.is_zero() && top.degree == m.manifold_dim();
        v.top_power = m.to_string(top);
    }
    return v;
}

namespace {

std::string vector_text(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

} // namespace

SymplecticVerdict check_symplectic(const GradedComplex& c, const OmegaMap& w, int manifold_dim) {
    SymplecticVerdict v;
    if (c.dim(0) == 0 || manifold_dim % 2 != 0) return v;
    std::vector<Rational> unit(c.dim(0));
    unit[0] = Rational(1);
    const std::vector<Rational> omega = w.at(0).apply(unit);
    const std::vector<Rational> dw = c.d(2).apply(omega);
    v.closed = std::all_of(dw.begin(), dw.end(), [](const Rational& x) { return x.is_zero(); });
    if (!v.closed) v.d_omega = vector_text(dw);
    const std::vector<Rational> top = w.power(0, manifold_dim / 2).apply(unit);
    v.nondegenerate = std::any_of(top.begin(), top.end(), [](const Rational& x) { return !x.is_zero(); });
    v.top_power = vector_text(top);
    return v;
}

SymplecticVerdict check_symplectic(const SymplecticModel& m) {
    if (m.cdga && m.omega_element) return check_symplectic(*m.cdga, *m.omega_element);
    return check_symplectic(m.complex, m.omega, m.manifold_dim);
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"cp2", "s2xs2", "t2", "t4", "kodaira_thurston"};
    return names;
}

namespace {

SparseMat one_by_one() { return SparseMat::identity(1); }

SymplecticModel formal_s2() {
    FormalModel f = formal_model({1, 0, 1}, {one_by_one()});
    SymplecticModel m = make_model("s2", std::move(f.complex), std::move(f.omega), 2);
    m.omega_text = "v (generator of H^2)";
    return m;
}

Element two_form(const CDGAModel& m, std::initializer_list<std::tuple<int, const char*, const char*>> terms) {
    Element w;
    w.degree = 2;
    for (const auto& [c, a, b] : terms) w += Rational(c) * m.word({a, b});
    w.degree = 2;
    return w;
}

} // namespace

SymplecticModel builtin(const std::string& name) {
    if (name == "cp2") {
        FormalModel f = formal_model({1, 0, 1, 0, 1}, {one_by_one(), SparseMat(0, 0), one_by_one()});
        SymplecticModel m = make_model("cp2", std::move(f.complex), std::move(f.omega), 4);
        m.omega_text = "h (Fubini-Study class generating H^2)";
        m.convention = "formal model: H^0, H^2, H^4 one-dimensional; omega maps 1 -> h -> h^2";
        return m;
    }
    if (name == "s2xs2") {
        SymplecticModel m = tensor_product(formal_s2(), formal_s2());
        m.name = "s2xs2";
        m.omega_text = "v1 + v2";
        m.convention = "tensor square of the formal S^2 model";
        return m;
    }
    if (name == "t2" || name == "t4") {
        const int n = name == "t2" ? 2 : 4;
        CDGAModel ce = ce_complex(StructureConstants(n));
        const Element w = n == 2 ? two_form(ce, {{1, "e1", "e2"}})
                                 : two_form(ce, {{1, "e1", "e2"}, {1, "e3", "e4"}});
        SymplecticModel m = make_model(name, std::move(ce), w);
        m.convention = "abelian Chevalley-Eilenberg model";
        return m;
    }
    if (name == "kodaira_thurston") {
        StructureConstants c(4);
        c.set(3, 1, 2, Rational(1)); // d e4 = -e2 e3
        CDGAModel ce = ce_complex(c);
        const Element w = two_form(ce, {{1, "e1", "e2"}, {1, "e3", "e4"}});
        SymplecticModel m = make_model(name, std::move(ce), w);
        m.convention = "d e4 = -e2 e3, other generators closed; omega = e1 e2 + e3 e4; "
                       "e1 is dual to the free circle direction x1";
        return m;
    }
    throw UnknownName("unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> random_combination(const SparseMat& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<Rational> v(basis.rows());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        const int c = coef(rng);
        if (c == 0) continue;
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            const Rational x = basis.at(i, j);
            if (!x.is_zero()) v[i] += Rational(c) * x;
        }
    }
    return v;
}

} // namespace

CDGAModel random_nilpotent_ce(int n, std::mt19937_64& rng) {
    std::vector<Element> diff(n);
    for (auto& e : diff) e.degree = 2;
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"e" + std::to_string(i + 1), 1});
    for (int k = 2; k < n; ++k) {
        std::vector<Generator> partial_gens(gens.begin(), gens.begin() + k);
        std::vector<Element> partial_diff;
        for (int i = 0; i < k; ++i) {
            Element e;
            e.degree = 2;
            for (const auto& [m, c] : diff[i].terms) e.add(Monomial(m.begin(), m.begin() + k), c);
            partial_diff.push_back(std::move(e));
        }
        const CDGAModel partial(std::move(partial_gens), std::move(partial_diff), k);
        const SparseMat closed = qlinalg::kernel_basis(partial.complex().d(2));
        const std::vector<Rational> v = random_combination(closed, rng);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            Monomial m = partial.basis(2)[i];
            m.resize(n, 0);
            diff[k].add(m, v[i]);
        }
    }
    StructureConstants sc(n);
    for (int k = 0; k < n; ++k)
        for (const auto& [m, c] : diff[k].terms) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (m[i]) idx.push_back(i);
            sc.set(k, idx[0], idx[1], -c);
        }
    return ce_complex(sc);
}

Element random_closed_two_form(const CDGAModel& m, std::mt19937_64& rng) {
    Element w;
    w.degree = 2;
    if (m.top_degree() < 2) return w;
    const SparseMat closed = qlinalg::kernel_basis(m.complex().d(2));
    const std::vector<Rational> v = random_combination(closed, rng);
    for (std::size_t i = 0; i < v.size(); ++i) w.add(m.basis(2)[i], v[i]);
    return w;
}

} // namespace symsemi
