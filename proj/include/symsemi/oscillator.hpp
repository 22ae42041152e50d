#pragma once

#include "symsemi/mode.hpp"
#include "symsemi/rational.hpp"
#include "symsemi/sparse.hpp"
#include "symsemi/verdict.hpp"

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace symsemi {

/// Polynomial-coefficient forms on R^m: monomials x^alpha of degree <= cap
/// (ordered by degree, then lexicographically) times the 2^m form basis.
/// Basis index = monomial_index * 2^m + form mask.
struct Sector {
    int m = 0;
    int cap = 0;
    std::vector<std::vector<int>> monomials;
    std::map<std::vector<int>, std::size_t> index;

    [[nodiscard]] std::size_t forms() const { return std::size_t{1} << m; }
    [[nodiscard]] std::size_t size() const { return monomials.size() * forms(); }
    [[nodiscard]] std::size_t at(std::size_t mono, std::size_t mask) const { return mono * forms() + mask; }
};

Sector make_sector(int m, int cap);

/// The model operator L = L' + T L'' at a nondegenerate zero with linearization A.
/// S = sqrt(A^t A); L'' = tr S + sum_{j,k} A_{kj} c(e_j) chat(e_k).
struct ModelOperator {
    Mode mode = Mode::exact;
    int m = 0;
    SparseMat A;
    Rational T;
    Rational det_A;
    SparseMat S;                               ///< exact mode only
    std::vector<std::vector<double>> S_float;  ///< both modes
    double s_residual = 0.0;                   ///< relative |S^2 - A^t A| (float mode)
    Rational trace_S;                          ///< exact mode only
    double trace_S_float = 0.0;
    SparseMat Lpp;                             ///< exact mode only
    SparseMatD Lpp_float;
};

/// Throws ShapeMismatch (non-square), BadDimension (m not 4n or above 8),
/// Singular (det A = 0), NoRationalRoot (exact mode without rational S).
ModelOperator model_L(const SparseMat& A, const Rational& T, Mode mode);

/// Rational symmetric positive definite square root of a rational SPD matrix; throws NoRationalRoot.
SparseMat rational_spd_sqrt(const SparseMat& m);

/// Gaussian conjugate e^{phi} L e^{-phi}, phi = T/2 x^t S x, on a sector:
/// -Laplacian + 2T (Sx).grad + T L''.
SparseMat conjugated_L(const ModelOperator& op, const Sector& sec);
/// Conjugated d + d^* + T chat(Ax): sum_j c_j (d_j - T (Sx)_j) + T sum_k (Ax)_k chat_k,
/// from sector `in` to sector `out`; throws TruncationTooSmall if the image leaves `out`.
SparseMat conjugated_D(const ModelOperator& op, const Sector& in, const Sector& out);
/// Gram matrix of the weighted product int p q e^{-T x^t S x}, normalized so <1,1> = 1.
SparseMat gaussian_gram(const ModelOperator& op, const Sector& sec);

struct KernelResult {
    std::size_t ker_dim = 0;
    int parity = -1; ///< form-degree parity of the kernel (0 even, 1 odd, -1 mixed)
    int det_sign = 0;
    [[nodiscard]] bool pass() const { return ker_dim == 1 && parity == (det_sign < 0 ? 1 : 0); }
};

KernelResult kernel_and_parity(const ModelOperator& op, int cap = 1);

struct SpectrumRow {
    Rational T;
    std::vector<double> eigen_over_T; ///< ascending
};

struct SpectrumResult {
    std::vector<SpectrumRow> rows;
    std::size_t zero_multiplicity = 0;
    double smallest_nonzero = 0.0;
    Verdict verdict;
};

/// Spectrum of L / T on the sector of degree cap, for every T. Throws
/// TruncationTooSmall when cap < 2 and ShapeMismatch for fewer than 3 distinct T.
SpectrumResult spectrum_scaling(const SparseMat& A, const std::vector<Rational>& Ts, int cap, Mode mode);

struct EtaRow {
    Rational T;
    double C1 = 0.0;
    std::optional<Rational> C1_squared; ///< exact mode
};

struct EtaResult {
    std::vector<EtaRow> rows;
    double C1 = 0.0;
    std::optional<Rational> C1_squared;
    bool eta_zero = false;
    std::vector<Rational> eta;   ///< exact mode, first T, on make_sector(m, cap)
    std::vector<Rational> rho;   ///< exact mode, first T
    Verdict verdict;
};

/// eta = L^{-1} D (1/2(w0* - w0) rho) on the complement of rho and
/// C1 = |eta| sqrt(T) / |rho| for each T. Throws TruncationTooSmall when cap < 1.
EtaResult eta_scaling(const SparseMat& A, const std::vector<Rational>& Ts, Mode mode, int cap = 1);

/// Random invertible A = Q P with Q rational orthogonal (det sign as requested)
/// and P rational symmetric positive definite, so sqrt(A^t A) = P is rational.
SparseMat random_rational_root_matrix(int m, int det_sign, std::mt19937_64& rng);

} // namespace symsemi
