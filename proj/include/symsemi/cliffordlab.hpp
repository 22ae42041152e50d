#pragma once

#include "symsemi/mode.hpp"
#include "symsemi/rational.hpp"
#include "symsemi/sparse.hpp"
#include "symsemi/verdict.hpp"

#include <vector>

namespace symsemi {

/// Operator on the exterior algebra of R^m. Basis vector `mask` is e^S for
/// S = {i : bit i of mask set}, in increasing mask order.
template <class T>
struct ExtOp {
    int m = 0;
    SparseMatrix<T> matrix;
};

enum class CliffordKind { c, chat };

namespace ext {

[[nodiscard]] inline int form_degree(std::size_t mask) { return __builtin_popcountll(mask); }

/// e^i wedge (0-based i).
template <class T> SparseMatrix<T> wedge(int m, int i);
/// Contraction with e_i; the transpose of wedge(m, i).
template <class T> SparseMatrix<T> contract(int m, int i);

/// The standard form w0 = e^1 e^2 + e^3 e^4 + ... (pairs (x_k, y_k)) acting by wedge.
template <class T> SparseMatrix<T> omega0_wedge(int m);
/// w0* = sum_k contract(y_k) contract(x_k).
template <class T> SparseMatrix<T> omega0_contract(int m);

} // namespace ext

/// c(v) = v^* wedge - v contract, chat(v) = v^* wedge + v contract.
/// Throws DimensionMismatch when v.size() != m and BadDimension outside 1..8 (exact) / 1..12 (float).
template <class T> ExtOp<T> clifford(int m, const std::vector<T>& v, CliffordKind kind);

/// Hodge star for the standard orientation: *e^S = sign(S, S^c) e^{S^c}. Requires m = 4n.
template <class T> ExtOp<T> hodge_star(int m);

/// chat(e_1) chat(e_2) ... chat(e_m). Requires m = 4n.
template <class T> ExtOp<T> dvol_action(int m);

/// Checks run in the requested mode: exact equality, or |residual| <= 1e-12 in float mode.
Verdict verify_car(int m, Mode mode);
/// chat(dvol) alpha = (-1)^{k(k+1)/2} * alpha per form degree k.
Verdict verify_lemma_star(int m, Mode mode);
/// chat(dvol) w0* = -w0 chat(dvol), w0* = (w0)^t, and 1/2(w0* - w0) is skew.
Verdict verify_lemma_omega(int m, Mode mode);
/// *^t * = 1, ** = (-1)^{k(m-k)}, chat(dvol) symmetric and commuting with every c(e_j),
/// and the zero-order block diag(1/2(w0* - w0), 1/2(w0 - w0*)) skew.
Verdict verify_star_identities(int m, Mode mode);
/// ([[0,1],[1,0]] diag(chat(v), -chat(v)))^2 = -1. Throws NotUnit unless v^t v = 1.
Verdict verify_complex_structure(int m, const std::vector<Rational>& v, Mode mode);

/// Rational point on the unit sphere S^{m-1} from inverse stereographic projection of u in Q^{m-1}.
std::vector<Rational> stereographic_unit(const std::vector<Rational>& u);

} // namespace symsemi
