#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "deltasched/parking.hpp"
#include "deltasched/poly.hpp"

namespace deltasched {

// A lattice cell identified by its lower-left point.
struct Cell {
    int x = 0;
    int y = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

// One cell per diagonal-inversion pair (phi) and one per pair of marked cars
// (psi), tagged with the (left car, right car) pair that produced it.
struct CellImages {
    std::vector<std::tuple<int, int, Cell>> phi;
    std::vector<std::tuple<int, int, Cell>> psi;
};

// The injections from inversion pairs and marked-car pairs into cells above
// the path: |phi| = dinv + |marks|, |psi| = C(|marks|, 2), images disjoint.
CellImages phi_psi_cells(const MarkedParkingFunction& pf);

// Recovers the (left car, right car) pair from a phi-image cell; used to
// check injectivity. psi variant handles the backtracking case.
std::pair<int, int> phi_reconstruct(const MarkedParkingFunction& pf, const Cell& cell);
std::pair<int, int> psi_reconstruct(const MarkedParkingFunction& pf, const Cell& cell);

bool cell_above_path(const LatticePath& p, const Cell& cell);

// a + b + C(c+1,2) <= C(n,2).
bool check_inequality(int n, int a, int b, int c);

// The extremal witness: area a, c marks, and dinv meeting the degree bound
// with equality. The path has the largest diagonals full, the labels read
// n n-1 ... 2 1, and the rightmost c valley cars of the top two diagonals are
// marked. Throws std::invalid_argument when (a, c) is infeasible for n.
MarkedParkingFunction construct_mpf(int n, int a, int c);

// A witness with area a, dinv b and c marks for any triple satisfying the
// inequality: descends dinv inside the schedule class of construct_mpf(n,a,c).
// Throws when the inequality fails.
MarkedParkingFunction construct_mpf_abc(int n, int a, int b, int c);

// A lattice path from (0,0) to (n,n) over steps N, E, D (diagonal), weakly
// above the main diagonal, with no diagonal step above the highest North step.
struct SchroderPath {
    std::string steps;  // over {'N','E','D'}

    int size() const;        // n
    int diag_steps() const;  // number of D steps
    bool valid() const;      // includes the no-D-above-highest-N condition

    bool operator==(const SchroderPath&) const = default;
    auto operator<=>(const SchroderPath&) const = default;
};

SchroderPath parse_schroder(const std::string& s);

// All members of the restricted family with n-d North steps and d diagonal
// steps, exactly once, in lexicographic step order (D < E < N).
void for_each_schroder(int n, int d, const std::function<void(const SchroderPath&)>& fn);

std::vector<SchroderPath> all_schroder(int n, int d);

// area of the Dyck path obtained by expanding each D into NE; dinv counts
// attacking pairs of North steps (same diagonal, or the strictly-left one
// exactly one diagonal higher), where an N starting at (u,v) has diagonal v-u.
std::pair<int, int> schroder_stats(const SchroderPath& p);

// Sum of t^area q^dinv over the family with k diagonal steps.
PolyQTZ schroder_poly(int n, int k);

// Cell injections for Schroder paths: phi tagged by attacking N-step index
// pairs, psi by D-step index pairs (indices into the step string).
struct SchroderCellImages {
    std::vector<std::tuple<int, int, Cell>> phi;
    std::vector<std::tuple<int, int, Cell>> psi;
};

SchroderCellImages schroder_cells(const SchroderPath& p);

bool schroder_cell_above(const SchroderPath& p, const Cell& cell);

}  // namespace deltasched
