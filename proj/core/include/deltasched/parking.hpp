#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "deltasched/lattice.hpp"
#include "deltasched/schedperm.hpp"

namespace deltasched {

// A valley-marked parking function: Dyck path + distinct positive car labels
// (cars[i-1] adjacent to the i-th North step, increasing up each column) +
// a set of marked valley rows. A plain parking function has marks empty.
struct MarkedParkingFunction {
    LatticePath path;
    std::vector<int> cars;   // by row, 1-based rows -> cars[row-1]
    std::vector<int> marks;  // marked rows, sorted ascending

    int size() const { return static_cast<int>(cars.size()); }
    bool marked_row(int row) const;
    int row_of(int car) const;  // throws if absent

    // Structural validity: path valid, labels distinct positive and
    // column-increasing, every marked row a valley.
    bool valid() const;

    bool operator==(const MarkedParkingFunction&) const = default;
    auto operator<=>(const MarkedParkingFunction&) const = default;
};

// Row `row` is a valley iff row >= 2, its North step is preceded by an East
// step (cols strictly increase), and the car under that East step is either
// absent or smaller than the car in `row`.
bool is_valley(const MarkedParkingFunction& pf, int row);

// All valley rows of pf, ascending.
std::vector<int> valley_rows(const MarkedParkingFunction& pf);

// Cars read from highest to lowest diagonal, right to left within each
// diagonal. Marks do not affect the word.
std::vector<int> word(const MarkedParkingFunction& pf);

// Inverse descent set of the word: { i : i+1 occurs left of i }. Only defined
// when the labels are exactly {1..n}; throws std::invalid_argument otherwise.
std::set<int> ides(const MarkedParkingFunction& pf);

// Marked dinv: over row pairs i<j, primary pairs (same diagonal, smaller car
// left, left row unmarked) plus secondary pairs (row i one diagonal above and
// left with the bigger car, row i unmarked), minus the number of marks.
int dinv(const MarkedParkingFunction& pf);

// The type of a marked parking function: cars of each diagonal in increasing
// order, highest diagonal first, marks carried over by car value.
MarkedWord mpf_type(const MarkedParkingFunction& pf);

// Yields every plain parking function (marks empty) on the given distinct
// positive labels exactly once. Order: paths lexicographic, labelings
// lexicographic by car sequence.
void for_each_parking(const std::vector<int>& labels,
                      const std::function<void(const MarkedParkingFunction&)>& fn);

// Labelings of one fixed path only; used to split enumeration across workers.
void for_each_parking_on_path(const LatticePath& path, const std::vector<int>& labels,
                              const std::function<void(const MarkedParkingFunction&)>& fn);

// Yields every valley-marked parking function on the labels, i.e. every mark
// subset of every plain parking function; restricted to |marks| = k when k is
// given.
void for_each_marked_parking(const std::vector<int>& labels, std::optional<int> k,
                             const std::function<void(const MarkedParkingFunction&)>& fn);

std::vector<MarkedParkingFunction> all_parking(const std::vector<int>& labels);
std::vector<MarkedParkingFunction> all_marked_parking(const std::vector<int>& labels,
                                                      std::optional<int> k = std::nullopt);

}  // namespace deltasched
