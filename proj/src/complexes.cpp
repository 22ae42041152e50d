#include "symsemi/complexes.hpp"

#include "symsemi/errors.hpp"
#include "symsemi/qlinalg.hpp"

#include <string>

namespace symsemi {

namespace {

std::string deg_str(int k) { return "degree " + std::to_string(k); }

} // namespace

GradedComplex::GradedComplex(std::vector<std::size_t> dims, std::vector<SparseMat> d)
    : dims_(std::move(dims)), d_(std::move(d)) {
    const int top = top_degree();
    if (dims_.empty()) throw ShapeMismatch("complex needs at least degree 0");
    if (d_.size() == dims_.size()) {
        if (d_.back().rows() != 0 || d_.back().cols() != dims_.back())
            throw ShapeMismatch("top differential must be 0 x " + std::to_string(dims_.back()));
        d_.pop_back();
    }
    if (d_.size() != dims_.size() - 1)
        throw ShapeMismatch("expected " + std::to_string(dims_.size() - 1) + " differentials, got " +
                            std::to_string(d_.size()));
    for (int k = 0; k < top; ++k) {
        const auto& m = d_[k];
        if (m.rows() != dims_[k + 1] || m.cols() != dims_[k])
            throw ShapeMismatch("d at " + deg_str(k) + " is " + m.shape_str() + ", expected " +
                                std::to_string(dims_[k + 1]) + "x" + std::to_string(dims_[k]));
    }
    for (int k = 0; k + 1 < top; ++k)
        if (!(d_[k + 1] * d_[k]).is_zero_matrix()) throw NotAComplex("d^2 != 0 at " + deg_str(k));
}

std::size_t GradedComplex::dim(int k) const {
    if (k < 0 || k > top_degree()) return 0;
    return dims_[k];
}

std::size_t GradedComplex::total_dim() const {
    std::size_t n = 0;
    for (auto v : dims_) n += v;
    return n;
}

SparseMat GradedComplex::d(int k) const {
    if (k >= 0 && k < top_degree()) return d_[k];
    return SparseMat(dim(k + 1), dim(k));
}

OmegaMap::OmegaMap(const GradedComplex& c, std::vector<SparseMat> maps) : dims_(c.dims()), maps_(std::move(maps)) {
    const int top = c.top_degree();
    if (maps_.size() > static_cast<std::size_t>(top + 1))
        throw ShapeMismatch("omega has more degrees than the complex");
    while (maps_.size() < static_cast<std::size_t>(top + 1)) {
        const int k = static_cast<int>(maps_.size());
        maps_.emplace_back(c.dim(k + 2), c.dim(k));
    }
    for (int k = 0; k <= top; ++k) {
        const auto& m = maps_[k];
        if (m.rows() != c.dim(k + 2) || m.cols() != c.dim(k))
            throw ShapeMismatch("omega at " + deg_str(k) + " is " + m.shape_str() + ", expected " +
                                std::to_string(c.dim(k + 2)) + "x" + std::to_string(c.dim(k)));
    }
    for (int k = 0; k <= top; ++k) {
        const SparseMat lhs = c.d(k + 2) * at(k);
        const SparseMat rhs = at(k + 1) * c.d(k);
        if (!(lhs == rhs)) throw ChainMapViolation("d L != L d at " + deg_str(k));
    }
}

OmegaMap OmegaMap::zero(const GradedComplex& c) { return OmegaMap(c, {}); }

SparseMat OmegaMap::at(int k) const {
    auto dim = [&](int j) -> std::size_t {
        return (j < 0 || j >= static_cast<int>(dims_.size())) ? 0 : dims_[j];
    };
    if (k >= 0 && k < static_cast<int>(maps_.size())) return maps_[k];
    return SparseMat(dim(k + 2), dim(k));
}

SparseMat OmegaMap::power(int k, int s) const {
    auto dim = [&](int j) -> std::size_t {
        return (j < 0 || j >= static_cast<int>(dims_.size())) ? 0 : dims_[j];
    };
    SparseMat acc = SparseMat::identity(dim(k));
    for (int t = 0; t < s; ++t) acc = at(k + 2 * t) * acc;
    return acc;
}

GradedComplex cone(const GradedComplex& c, const OmegaMap& w, int p) {
    if (p < 0) throw ShapeMismatch("p must be nonnegative");
    const int shift = 2 * p + 1;
    const int top = c.top_degree() + shift;
    std::vector<std::size_t> dims(top + 1);
    for (int k = 0; k <= top; ++k) dims[k] = c.dim(k) + c.dim(k - shift);

    std::vector<SparseMat> d;
    for (int k = 0; k < top; ++k) {
        SparseMat m(dims[k + 1], dims[k]);
        const std::size_t a_out = c.dim(k + 1);
        const std::size_t a_in = c.dim(k);
        m.place(c.d(k), 0, 0);
        m.place(w.power(k - shift, p + 1), 0, a_in);
        m.place(c.d(k - shift), a_out, a_in, Rational(-1));
        d.push_back(std::move(m));
    }
    return GradedComplex(std::move(dims), std::move(d));
}

BettiVector betti(const GradedComplex& c) {
    const int top = c.top_degree();
    std::vector<long> ranks(top + 1);
    for (int k = 0; k <= top; ++k) ranks[k] = static_cast<long>(qlinalg::rank(c.d(k)));
    BettiVector b;
    for (int k = 0; k <= top; ++k)
        b.values.push_back(static_cast<long>(c.dim(k)) - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
    return b;
}

long euler_characteristic(const BettiVector& b) {
    long chi = 0;
    for (std::size_t k = 0; k < b.values.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * b.values[k];
    return chi;
}

int semi_characteristic(const BettiVector& b) {
    long s = 0;
    for (std::size_t k = 0; k < b.values.size(); k += 2) s += b.values[k];
    return static_cast<int>(s % 2);
}

bool is_palindromic(const BettiVector& b) {
    const auto& v = b.values;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != v[v.size() - 1 - k]) return false;
    return true;
}

std::vector<SparseMat> cone_adjoint(const GradedComplex& c, const OmegaMap& w, int p) {
    const int shift = 2 * p + 1;
    const int top = c.top_degree() + shift;
    std::vector<SparseMat> out;
    for (int k = 0; k < top; ++k) {
        const std::size_t rows = c.dim(k) + c.dim(k - shift);
        const std::size_t cols = c.dim(k + 1) + c.dim(k + 1 - shift);
        SparseMat m(rows, cols);
        const std::size_t a_out = c.dim(k);
        const std::size_t a_in = c.dim(k + 1);
        m.place(c.d(k).transpose(), 0, 0);
        m.place(w.power(k - shift, p + 1).transpose(), a_out, 0);
        m.place(c.d(k - shift).transpose(), a_out, a_in, Rational(-1));
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<long> harmonic_dimensions(const GradedComplex& c, const OmegaMap& w, int p) {
    const GradedComplex cc = cone(c, w, p);
    const auto adj = cone_adjoint(c, w, p);
    const int top = cc.top_degree();
    std::vector<long> out;
    for (int k = 0; k <= top; ++k) {
        SparseMat lap(cc.dim(k), cc.dim(k));
        if (k < top) lap = lap + adj[k] * cc.d(k);
        if (k > 0) lap = lap + cc.d(k - 1) * adj[k - 1];
        out.push_back(static_cast<long>(cc.dim(k) - qlinalg::rank(lap)));
    }
    return out;
}

} // namespace symsemi
