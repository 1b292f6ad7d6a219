#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "deltasched/schedperm.hpp"

namespace deltasched {

// A monomial in commuting x- and y-variables and anticommuting theta
// variables, indexed by car label. Theta factors are kept ascending; the sign
// absorbs reorderings (theta_i theta_j = -theta_j theta_i). The sign never
// affects identity as a basis element, only ring arithmetic.
struct SuperMonomial {
    std::map<int, int> xexp;  // variable index -> positive exponent
    std::map<int, int> yexp;
    std::vector<int> theta;  // ascending, distinct
    int sign = 1;

    // Comparison and equality ignore the sign: two monomials with the same
    // variables are the same basis element.
    bool operator==(const SuperMonomial& o) const {
        return xexp == o.xexp && yexp == o.yexp && theta == o.theta;
    }
    bool operator<(const SuperMonomial& o) const {
        return std::tie(xexp, yexp, theta) < std::tie(o.xexp, o.yexp, o.theta);
    }

    // "x1^2*y2*t3" with 't' denoting theta; "1" when empty. The sign is
    // rendered only when negative.
    std::string str() const;
};

// Sorts a theta index list ascending, returning the parity sign, or 0 if an
// index repeats (the monomial vanishes).
int normalize_theta(std::vector<int>& theta);

// Y_tau: product over descent positions i of y_{tau_1} ... y_{tau_i}. Total
// y-degree is maj(tau).
SuperMonomial y_monomial(const MarkedWord& tau);

// Theta factors of the marked positions of tau_star(Pi), left to right, then
// canonicalized; degree n - |Pi|.
SuperMonomial theta_monomial(const OrderedSetPartition& p);

// All prod w_Pi(c) monomials of Y * Theta * prod_c (1 + x_c + ... +
// x_c^(w_Pi(c)-1)), in lexicographic order of the x-exponent choices.
std::vector<SuperMonomial> basis_block(const OrderedSetPartition& p);

// Factored rendering of the block, e.g. "t3*y2*(1 + x1)*(1 + x3)"; theta part
// first, then y factors, then x factors.
std::string basis_block_str(const OrderedSetPartition& p);

// Disjoint union of basis_block over all ordered set partitions of {1..n}.
void for_each_basis_monomial(int n, const std::function<void(const SuperMonomial&)>& fn);

std::vector<SuperMonomial> basis(int n);

// (x-degree, y-degree, theta-degree).
std::tuple<int, int, int> tri_degree(const SuperMonomial& m);

// The unique Pi with m in basis_block(Pi). Recovers tau from the y-exponents,
// the marks from the theta set, and validates the x-exponents against the
// schedule numbers; throws std::invalid_argument if m lies in no block.
OrderedSetPartition reconstruct_osp(const SuperMonomial& m, int n);

}  // namespace deltasched
