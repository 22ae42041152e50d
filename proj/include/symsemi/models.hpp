#pragma once

#include "symsemi/complexes.hpp"
#include "symsemi/rational.hpp"
#include "symsemi/sparse.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symsemi {

struct Generator {
    std::string name;
    int degree = 1;
};

/// Exponent vector over the generators of a model (odd exponents are 0 or 1).
using Monomial = std::vector<int>;

/// Homogeneous rational combination of monomials.
struct Element {
    int degree = 0;
    std::map<Monomial, Rational> terms; ///< no zero coefficients

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    void add(const Monomial& m, const Rational& c);

    Element& operator+=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator*(const Rational& s, Element a);
    friend bool operator==(const Element&, const Element&) = default;
};

/// Free graded-commutative algebra on finitely many generators with a
/// differential satisfying the Leibniz rule with Koszul signs. Elements of
/// total degree above top_degree() are treated as zero.
class CDGAModel {
public:
    /// `differential[i]` is d of generator i (an Element of degree deg_i + 1,
    /// or an empty Element for d = 0). Throws NotAComplex if d^2 != 0 on a
    /// generator and ShapeMismatch on degree errors.
    CDGAModel(std::vector<Generator> gens, std::vector<Element> differential, int manifold_dim);

    [[nodiscard]] const std::vector<Generator>& generators() const { return gens_; }
    [[nodiscard]] const std::vector<Element>& differentials() const { return diff_; }
    [[nodiscard]] int manifold_dim() const { return manifold_dim_; }
    [[nodiscard]] int top_degree() const { return top_; }
    [[nodiscard]] std::size_t generator_index(const std::string& name) const;

    /// Monomials of total degree k in lexicographic order of generator indices.
    [[nodiscard]] const std::vector<Monomial>& basis(int k) const;
    [[nodiscard]] std::size_t basis_index(const Monomial& m) const;
    [[nodiscard]] int degree(const Monomial& m) const;

    [[nodiscard]] Monomial unit() const { return Monomial(gens_.size(), 0); }
    [[nodiscard]] Element generator(std::size_t i) const;
    /// Product of generators in the listed order (e.g. {"e2","e1"} = -e1 e2).
    [[nodiscard]] Element word(const std::vector<std::string>& names) const;

    /// Signed product of monomials; sign 0 when the product vanishes.
    [[nodiscard]] std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;
    [[nodiscard]] Element multiply(const Element& a, const Element& b) const;
    [[nodiscard]] Element power(const Element& a, int n) const;

    [[nodiscard]] Element differential(const Monomial& m) const;
    [[nodiscard]] Element differential(const Element& e) const;

    [[nodiscard]] GradedComplex complex() const;

    /// Left multiplication by a closed degree-2 element; throws NotClosed
    /// (with d w in the message) if d w != 0.
    [[nodiscard]] OmegaMap multiplication_matrix(const Element& w) const;

    [[nodiscard]] std::string to_string(const Monomial& m) const;
    [[nodiscard]] std::string to_string(const Element& e) const;

    /// Coordinates of a homogeneous element in basis(e.degree).
    [[nodiscard]] std::vector<Rational> coordinates(const Element& e) const;

private:
    std::vector<Generator> gens_;
    std::vector<Element> diff_;
    int manifold_dim_ = 0;
    int top_ = 0;
    std::vector<std::vector<Monomial>> basis_;
    std::map<Monomial, std::size_t> index_;
};

/// Structure constants c^k_{ij} of an n-dimensional Lie algebra (0-based, antisymmetric in i, j).
class StructureConstants {
public:
    explicit StructureConstants(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n) {}

    /// Sets c^k_{ij} = v and c^k_{ji} = -v.
    void set(int k, int i, int j, const Rational& v);
    [[nodiscard]] const Rational& at(int k, int i, int j) const { return c_[(k * n_ + i) * n_ + j]; }
    [[nodiscard]] int n() const { return n_; }

private:
    int n_;
    std::vector<Rational> c_;
};

/// Chevalley-Eilenberg model: generators e1..en of degree 1 with
/// d e^k = -sum_{i<j} c^k_{ij} e^i e^j. Throws JacobiViolation if d^2 != 0.
CDGAModel ce_complex(const StructureConstants& structure);

/// Complex with zero differential and the given cohomology-level Lefschetz maps.
struct FormalModel {
    GradedComplex complex;
    OmegaMap omega;
};
FormalModel formal_model(const std::vector<std::size_t>& betti, const std::vector<SparseMat>& lefschetz);

/// Everything the cone pipeline needs about one symplectic model.
struct SymplecticModel {
    std::string name;
    int manifold_dim = 0;
    GradedComplex complex;
    OmegaMap omega;
    std::optional<CDGAModel> cdga;
    std::optional<Element> omega_element;
    std::string omega_text;
    std::string convention; ///< documented sign convention, if any
};

/// Model from a CDGA and a closed 2-form (throws NotClosed otherwise).
SymplecticModel make_model(std::string name, CDGAModel cdga, const Element& w);
/// Model from a complex + omega map (matrix files, formal models).
SymplecticModel make_model(std::string name, GradedComplex c, OmegaMap w, int manifold_dim);

/// Graded tensor product with d(x y) = dx y + (-1)^{|x|} x dy and
/// omega = omega_a (x) 1 + 1 (x) omega_b.
CDGAModel tensor_product(const CDGAModel& a, const CDGAModel& b);
Element embed_left(const CDGAModel& a, const CDGAModel& product, const Element& e);
Element embed_right(const CDGAModel& a, const CDGAModel& b, const CDGAModel& product, const Element& e);
FormalModel tensor_product(const GradedComplex& a, const OmegaMap& wa, const GradedComplex& b, const OmegaMap& wb);
SymplecticModel tensor_product(const SymplecticModel& a, const SymplecticModel& b);

/// The single-point model (Q in degree 0, omega = 0).
SymplecticModel point_model();

struct SymplecticVerdict {
    bool closed = false;
    bool nondegenerate = false;
    std::string d_omega;   ///< textual d(omega) (empty when closed)
    std::string top_power; ///< textual omega^n
    [[nodiscard]] bool pass() const { return closed && nondegenerate; }
};

/// d w = 0 and w^n != 0 for manifold_dim = 2n.
SymplecticVerdict check_symplectic(const CDGAModel& m, const Element& w);
/// Same checks on a complex with omega map, taking basis vector 0 of degree 0 as the unit.
SymplecticVerdict check_symplectic(const GradedComplex& c, const OmegaMap& w, int manifold_dim);
SymplecticVerdict check_symplectic(const SymplecticModel& m);

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();

/// cp2, s2xs2, t2, t4, kodaira_thurston. Throws UnknownName.
SymplecticModel builtin(const std::string& name);

/// Random nilpotent Chevalley-Eilenberg model: each d e^k is a random closed
/// 2-form in e^1..e^{k-1}, so the Jacobi identity holds by construction.
CDGAModel random_nilpotent_ce(int n, std::mt19937_64& rng);

/// Random combination of a basis of closed degree-2 elements (may be zero).
Element random_closed_two_form(const CDGAModel& m, std::mt19937_64& rng);

/// Kronecker product a (x) b.
SparseMat kron(const SparseMat& a, const SparseMat& b);

} // namespace symsemi
