#pragma once

#include <functional>
#include <string>
#include <vector>

namespace deltasched {

// A Dyck path of size n, stored as the column of each North step.
// cols[i-1] = number of East steps before the i-th North step, rows counted
// 1..n from the bottom. Validity: cols[i-1] <= i-1 and cols weakly increasing.
//
// The cell of row i spans (cols[i-1], i-1)..(cols[i-1]+1, i), so the diagonal
// index of row i is (i-1) - cols[i-1].
struct LatticePath {
    std::vector<int> cols;

    LatticePath() = default;
    explicit LatticePath(std::vector<int> c) : cols(std::move(c)) {}

    int size() const { return static_cast<int>(cols.size()); }
    bool valid() const;

    // Number of full cells between the path and the main diagonal.
    int area() const;

    // Diagonal index of the given row (1-based). Throws on bad row.
    int diagonal(int row) const;

    // Step-letter serialization from (0,0), e.g. "NNEENE...".
    std::string to_ne_string() const;

    bool operator==(const LatticePath&) const = default;
    auto operator<=>(const LatticePath&) const = default;
};

// Parses an N/E step string. Throws std::invalid_argument naming the first
// offending step index (1-based) if the string is not a valid Dyck path.
LatticePath parse_ne_string(const std::string& s);

// Yields every Dyck path of size n exactly once, in lexicographic order of
// cols. All paths are value objects; the callback must not retain references.
void for_each_dyck(int n, const std::function<void(const LatticePath&)>& fn);

// Convenience: materialized enumeration.
std::vector<LatticePath> all_dyck(int n);

}  // namespace deltasched
