#include "deltasched/parking.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltasched {

bool MarkedParkingFunction::marked_row(int row) const {
    return std::binary_search(marks.begin(), marks.end(), row);
}

int MarkedParkingFunction::row_of(int car) const {
    for (int i = 0; i < size(); ++i)
        if (cars[i] == car) return i + 1;
    throw std::invalid_argument("car not present: " + std::to_string(car));
}

bool MarkedParkingFunction::valid() const {
    if (static_cast<int>(path.cols.size()) != size()) return false;
    if (!path.valid()) return false;
    std::vector<int> sorted = cars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!sorted.empty() && sorted.front() <= 0) return false;
    for (int i = 2; i <= size(); ++i)
        if (path.cols[i - 1] == path.cols[i - 2] && cars[i - 2] >= cars[i - 1]) return false;
    if (!std::is_sorted(marks.begin(), marks.end())) return false;
    for (int r : marks)
        if (r < 1 || r > size() || !is_valley(*this, r)) return false;
    return true;
}

bool is_valley(const MarkedParkingFunction& pf, int row) {
    if (row < 1 || row > pf.size()) throw std::out_of_range("is_valley: row out of range");
    if (row == 1) return false;
    int x = pf.path.cols[row - 1], xp = pf.path.cols[row - 2];
    if (x <= xp) return false;
    return xp < x - 1 || pf.cars[row - 2] < pf.cars[row - 1];
}

std::vector<int> valley_rows(const MarkedParkingFunction& pf) {
    std::vector<int> out;
    for (int r = 2; r <= pf.size(); ++r)
        if (is_valley(pf, r)) out.push_back(r);
    return out;
}

namespace {

// Rows sorted for reading: diagonal descending, then row descending (within a
// diagonal, a larger row sits further right).
std::vector<int> reading_rows(const MarkedParkingFunction& pf) {
    std::vector<int> rows(pf.size());
    for (int i = 0; i < pf.size(); ++i) rows[i] = i + 1;
    std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
        int da = pf.path.diagonal(a), db = pf.path.diagonal(b);
        if (da != db) return da > db;
        return a > b;
    });
    return rows;
}

}  // namespace

std::vector<int> word(const MarkedParkingFunction& pf) {
    std::vector<int> w;
    w.reserve(pf.size());
    for (int r : reading_rows(pf)) w.push_back(pf.cars[r - 1]);
    return w;
}

std::set<int> ides(const MarkedParkingFunction& pf) {
    int n = pf.size();
    std::vector<int> sorted = pf.cars;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1)
            throw std::invalid_argument("ides requires labels {1..n}");
    std::vector<int> w = word(pf);
    std::vector<int> pos(n + 2, 0);
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    std::set<int> out;
    for (int i = 1; i < n; ++i)
        if (pos[i + 1] < pos[i]) out.insert(i);
    return out;
}

int dinv(const MarkedParkingFunction& pf) {
    int n = pf.size(), count = 0;
    for (int i = 1; i <= n; ++i) {
        if (pf.marked_row(i)) continue;  // row i is the left car of every pair below
        int di = pf.path.diagonal(i);
        for (int j = i + 1; j <= n; ++j) {
            int dj = pf.path.diagonal(j);
            if (di == dj && pf.cars[i - 1] < pf.cars[j - 1]) ++count;
            if (di == dj + 1 && pf.cars[i - 1] > pf.cars[j - 1]) ++count;
        }
    }
    return count - static_cast<int>(pf.marks.size());
}

MarkedWord mpf_type(const MarkedParkingFunction& pf) {
    int maxd = 0;
    for (int r = 1; r <= pf.size(); ++r) maxd = std::max(maxd, pf.path.diagonal(r));
    MarkedWord w;
    for (int d = maxd; d >= 0; --d) {
        std::vector<std::pair<int, char>> cars_here;
        for (int r = 1; r <= pf.size(); ++r)
            if (pf.path.diagonal(r) == d)
                cars_here.emplace_back(pf.cars[r - 1], pf.marked_row(r) ? 1 : 0);
        std::sort(cars_here.begin(), cars_here.end());
        for (auto& [c, m] : cars_here) {
            w.word.push_back(c);
            w.marked.push_back(m);
        }
    }
    return w;
}

namespace {

// Column groups of a path: maximal runs of equal cols values, as row ranges.
std::vector<std::pair<int, int>> column_groups(const LatticePath& p) {
    std::vector<std::pair<int, int>> groups;
    for (int i = 1; i <= p.size(); ++i) {
        if (i == 1 || p.cols[i - 1] != p.cols[i - 2])
            groups.emplace_back(i, i);
        else
            groups.back().second = i;
    }
    return groups;
}

// Distribute `labels` among the column groups; within each group labels are
// forced ascending, so we choose an unordered subset per group.
void labelings_rec(const LatticePath& path, const std::vector<std::pair<int, int>>& groups,
                   std::size_t gi, std::vector<int>& avail, std::vector<int>& cars,
                   const std::function<void(const MarkedParkingFunction&)>& fn) {
    if (gi == groups.size()) {
        MarkedParkingFunction pf{path, cars, {}};
        fn(pf);
        return;
    }
    auto [lo, hi] = groups[gi];
    int need = hi - lo + 1;
    int have = static_cast<int>(avail.size());
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    while (true) {
        std::vector<int> rest;
        rest.reserve(have - need);
        {
            std::size_t k = 0;
            for (int i = 0; i < have; ++i) {
                if (k < idx.size() && idx[k] == i) {
                    cars[lo - 1 + static_cast<int>(k)] = avail[i];
                    ++k;
                } else {
                    rest.push_back(avail[i]);
                }
            }
        }
        std::vector<int> saved = std::move(avail);
        avail = std::move(rest);
        labelings_rec(path, groups, gi + 1, avail, cars, fn);
        avail = std::move(saved);

        // next combination of indices
        int i = need - 1;
        while (i >= 0 && idx[i] == have - need + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

void for_each_parking_on_path(const LatticePath& path, const std::vector<int>& labels,
                              const std::function<void(const MarkedParkingFunction&)>& fn) {
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("labels must be distinct");
    if (static_cast<int>(sorted.size()) != path.size())
        throw std::invalid_argument("label count must match path size");
    auto groups = column_groups(path);
    std::vector<int> cars(path.size());
    labelings_rec(path, groups, 0, sorted, cars, fn);
}

void for_each_parking(const std::vector<int>& labels,
                      const std::function<void(const MarkedParkingFunction&)>& fn) {
    if (labels.empty()) throw std::invalid_argument("labels must be nonempty");
    for_each_dyck(static_cast<int>(labels.size()), [&](const LatticePath& p) {
        for_each_parking_on_path(p, labels, fn);
    });
}

void for_each_marked_parking(const std::vector<int>& labels, std::optional<int> k,
                             const std::function<void(const MarkedParkingFunction&)>& fn) {
    for_each_parking(labels, [&](const MarkedParkingFunction& pf) {
        std::vector<int> valleys = valley_rows(pf);
        int v = static_cast<int>(valleys.size());
        if (k && *k > v) return;
        for (unsigned mask = 0; mask < (1u << v); ++mask) {
            if (k && __builtin_popcount(mask) != *k) continue;
            MarkedParkingFunction m = pf;
            m.marks.clear();
            for (int b = 0; b < v; ++b)
                if (mask & (1u << b)) m.marks.push_back(valleys[b]);
            fn(m);
        }
    });
}

std::vector<MarkedParkingFunction> all_parking(const std::vector<int>& labels) {
    std::vector<MarkedParkingFunction> out;
    for_each_parking(labels, [&](const MarkedParkingFunction& pf) { out.push_back(pf); });
    return out;
}

std::vector<MarkedParkingFunction> all_marked_parking(const std::vector<int>& labels,
                                                      std::optional<int> k) {
    std::vector<MarkedParkingFunction> out;
    for_each_marked_parking(labels, k, [&](const MarkedParkingFunction& pf) { out.push_back(pf); });
    return out;
}

}  // namespace deltasched
