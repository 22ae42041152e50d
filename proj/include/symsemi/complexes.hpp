#pragma once

#include "symsemi/sparse.hpp"

#include <cstddef>
#include <vector>

namespace symsemi {

/// Finite cochain complex C^0 -> C^1 -> ... -> C^top over Q.
/// d(k) maps degree k to degree k+1; d(top) maps to the zero space.
class GradedComplex {
public:
    GradedComplex() = default;

    /// `d` holds d_0..d_{top-1} (d_top may be supplied as a 0-row matrix).
    /// Throws ShapeMismatch on inconsistent shapes and NotAComplex if d^2 != 0.
    GradedComplex(std::vector<std::size_t> dims, std::vector<SparseMat> d);

    [[nodiscard]] int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    [[nodiscard]] std::size_t dim(int k) const;
    [[nodiscard]] std::size_t total_dim() const;

    /// Differential out of degree k; a correctly shaped zero matrix outside 0..top.
    [[nodiscard]] SparseMat d(int k) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<SparseMat> d_;
};

/// Multiplication by a closed degree-2 class: L_k from degree k to k+2.
class OmegaMap {
public:
    OmegaMap() = default;

    /// Validates shapes against `c` and the chain-map identity
    /// d_{k+2} L_k = L_{k+1} d_k; throws ShapeMismatch / ChainMapViolation.
    OmegaMap(const GradedComplex& c, std::vector<SparseMat> maps);

    /// The zero map on `c`.
    static OmegaMap zero(const GradedComplex& c);

    [[nodiscard]] SparseMat at(int k) const;

    /// L^s on degree k (degree k -> k + 2s); identity when s = 0.
    [[nodiscard]] SparseMat power(int k, int s) const;

    [[nodiscard]] const std::vector<SparseMat>& maps() const { return maps_; }

private:
    std::vector<std::size_t> dims_;
    std::vector<SparseMat> maps_;
};

/// Per-degree Betti numbers b_0 .. b_top.
struct BettiVector {
    std::vector<long> values;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Mapping cone of L^{p+1}: degree k is C^k (+) C^{k-2p-1} with differential
/// [[d, L^{p+1}], [0, -d]].
GradedComplex cone(const GradedComplex& c, const OmegaMap& w, int p = 0);

BettiVector betti(const GradedComplex& c);

long euler_characteristic(const BettiVector& b);

/// Sum of the even-index Betti numbers mod 2.
int semi_characteristic(const BettiVector& b);

/// True when b_k = b_{top-k} for all k.
bool is_palindromic(const BettiVector& b);

/// Adjoint of the cone differential assembled blockwise as
/// [[d^t, 0], [(L^{p+1})^t, -d^t]]; entry k maps cone degree k+1 to k.
std::vector<SparseMat> cone_adjoint(const GradedComplex& c, const OmegaMap& w, int p = 0);

/// dim ker of the cone Laplacian del del^* + del^* del in every degree.
std::vector<long> harmonic_dimensions(const GradedComplex& c, const OmegaMap& w, int p = 0);

} // namespace symsemi
