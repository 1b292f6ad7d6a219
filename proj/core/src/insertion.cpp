#include "deltasched/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltasched {

namespace {

bool has_car(const MarkedParkingFunction& pf, int c) {
    return std::find(pf.cars.begin(), pf.cars.end(), c) != pf.cars.end();
}

// Inserts a new row at index `at_row` (1-based) with the given column; all
// rows at or above shift up and right once, which keeps their diagonals.
MarkedParkingFunction insert_row(const MarkedParkingFunction& pf, int at_row, int col, int car,
                                 bool mark) {
    MarkedParkingFunction out;
    int n = pf.size();
    out.path.cols.reserve(n + 1);
    out.cars.reserve(n + 1);
    for (int r = 1; r < at_row; ++r) {
        out.path.cols.push_back(pf.path.cols[r - 1]);
        out.cars.push_back(pf.cars[r - 1]);
    }
    out.path.cols.push_back(col);
    out.cars.push_back(car);
    for (int r = at_row; r <= n; ++r) {
        out.path.cols.push_back(pf.path.cols[r - 1] + 1);
        out.cars.push_back(pf.cars[r - 1]);
    }
    for (int r : pf.marks) out.marks.push_back(r < at_row ? r : r + 1);
    if (mark) out.marks.push_back(at_row);
    std::sort(out.marks.begin(), out.marks.end());
    return out;
}

int highest_diagonal(const MarkedParkingFunction& pf) {
    int d = -1;
    for (int r = 1; r <= pf.size(); ++r) d = std::max(d, pf.path.diagonal(r));
    return d;
}

}  // namespace

std::vector<MarkedParkingFunction> insert_plain(const MarkedParkingFunction& pf, int c, int k) {
    if (c <= 0 || k < 0) throw std::invalid_argument("insert_plain: bad car or diagonal");
    if (has_car(pf, c)) throw std::invalid_argument("insert_plain: car already present");
    for (int r = 1; r <= pf.size(); ++r) {
        int d = pf.path.diagonal(r);
        if (d == k + 1) throw std::invalid_argument("insert_plain: (k+1)-diagonal not empty");
        if (d == k && pf.cars[r - 1] < c)
            throw std::invalid_argument("insert_plain: k-diagonal holds a smaller car");
    }
    // (column, at_row, col_of_new_car)
    std::vector<std::pair<int, std::pair<int, int>>> sites;
    if (k == 0) sites.push_back({0, {1, 0}});
    for (int r = 1; r <= pf.size(); ++r) {
        int d = pf.path.diagonal(r), x = pf.path.cols[r - 1];
        if (d == k - 1 && pf.cars[r - 1] < c) sites.push_back({x, {r + 1, x}});
        if (d == k && pf.cars[r - 1] > c) sites.push_back({x + 1, {r + 1, x + 1}});
    }
    std::sort(sites.begin(), sites.end());
    std::vector<MarkedParkingFunction> out;
    out.reserve(sites.size());
    for (auto& [colkey, s] : sites) out.push_back(insert_row(pf, s.first, s.second, c, false));
    return out;
}

std::vector<MarkedParkingFunction> insert_marked(const MarkedParkingFunction& pf, int c, int k) {
    if (c <= 0 || k < 0) throw std::invalid_argument("insert_marked: bad car or diagonal");
    if (has_car(pf, c)) throw std::invalid_argument("insert_marked: car already present");
    for (int r = 1; r <= pf.size(); ++r)
        if (pf.path.diagonal(r) == k && pf.marked_row(r) && pf.cars[r - 1] < c)
            throw std::invalid_argument("insert_marked: k-diagonal holds a smaller marked car");

    // Anchors ordered by column, then row (a k-diagonal car below a stacked
    // (k+1)-diagonal car comes first).
    std::vector<std::pair<std::pair<int, int>, int>> anchors;  // ((col,row), row)
    for (int r = 1; r <= pf.size(); ++r) {
        if (pf.marked_row(r)) continue;
        int d = pf.path.diagonal(r), x = pf.path.cols[r - 1];
        bool s_anchor = (d == k && pf.cars[r - 1] < c);
        bool b_anchor = (d == k + 1 && pf.cars[r - 1] > c);
        if (s_anchor || b_anchor) anchors.push_back({{x, r}, r});
    }
    std::sort(anchors.begin(), anchors.end());

    std::vector<MarkedParkingFunction> out;
    out.reserve(anchors.size());
    int n = pf.size();
    for (auto& [key, anchor_row] : anchors) {
        // Walk the path to the right of the anchor's North step, looking for
        // the first unmarked car bigger than c in the (k+1)-diagonal or the
        // first East step landing on the line y = x + k.
        int u = pf.path.cols[anchor_row - 1];  // position after the anchor's N step
        int v = anchor_row;
        int row = anchor_row;
        bool placed = false;
        while (!placed && (row < n || u < n)) {
            bool next_is_north = row < n && pf.path.cols[row] == u;
            if (next_is_north) {
                ++row;
                ++v;
                if (pf.path.diagonal(row) == k + 1 && !pf.marked_row(row) && pf.cars[row - 1] > c) {
                    out.push_back(insert_row(pf, row, pf.path.cols[row - 1] + 1, c, true));
                    placed = true;
                }
            } else {
                ++u;
                if (v - u == k) {
                    out.push_back(insert_row(pf, v + 1, u, c, true));
                    placed = true;
                }
            }
        }
        if (!placed) throw std::logic_error("insert_marked: anchor scan found no site");
    }
    return out;
}

MarkedParkingFunction remove_car(const MarkedParkingFunction& pf, int c) {
    int r = pf.row_of(c);
    if (!pf.marked_row(r) && pf.path.diagonal(r) != highest_diagonal(pf))
        throw std::invalid_argument("remove_car: unmarked car not in the highest diagonal");
    MarkedParkingFunction out;
    int n = pf.size();
    for (int i = 1; i <= n; ++i) {
        if (i == r) continue;
        out.path.cols.push_back(i < r ? pf.path.cols[i - 1] : pf.path.cols[i - 1] - 1);
        out.cars.push_back(pf.cars[i - 1]);
    }
    for (int m : pf.marks) {
        if (m == r) continue;
        out.marks.push_back(m < r ? m : m - 1);
    }
    return out;
}

InversionStep invert(const MarkedParkingFunction& pf) {
    if (pf.size() == 0) throw std::invalid_argument("invert: empty parking function");
    InversionStep step;
    if (!pf.marks.empty()) {
        int best_row = 0;
        for (int r : pf.marks) {
            if (best_row == 0 || pf.path.diagonal(r) > pf.path.diagonal(best_row) ||
                (pf.path.diagonal(r) == pf.path.diagonal(best_row) &&
                 pf.cars[r - 1] > pf.cars[best_row - 1]))
                best_row = r;
        }
        step.car = pf.cars[best_row - 1];
        step.k = pf.path.diagonal(best_row);
        step.marked = true;
    } else {
        int k = highest_diagonal(pf);
        int best = 0;
        for (int r = 1; r <= pf.size(); ++r)
            if (pf.path.diagonal(r) == k && (best == 0 || pf.cars[r - 1] < best))
                best = pf.cars[r - 1];
        step.car = best;
        step.k = k;
        step.marked = false;
    }
    step.parent = remove_car(pf, step.car);
    return step;
}

namespace {

struct InsertionPlan {
    struct Step {
        int car = 0;
        int k = 0;
        bool marked = false;
    };
    int root = 0;
    std::vector<Step> steps;
    bool rootable = false;
};

InsertionPlan make_plan(const MarkedWord& w) {
    InsertionPlan plan;
    int n = w.size();
    if (n == 0) return plan;
    // Run index (from the front) of each position.
    std::vector<int> run_of(n, 0);
    int nruns = 1;
    for (int i = 1; i < n; ++i) {
        if (w.word[i - 1] > w.word[i]) ++nruns;
        run_of[i] = nruns - 1;
    }
    int root_pos = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (!w.marked[i]) {
            root_pos = i;
            break;
        }
    }
    if (root_pos < 0) return plan;  // all letters marked: no root, not insertable
    plan.rootable = true;
    plan.root = w.word[root_pos];
    for (int i = n - 1; i >= 0; --i)
        if (!w.marked[i] && i != root_pos)
            plan.steps.push_back({w.word[i], nruns - 1 - run_of[i], false});
    for (int i = n - 1; i >= 0; --i)
        if (w.marked[i]) plan.steps.push_back({w.word[i], nruns - 1 - run_of[i], true});
    return plan;
}

// Children of one node at one plan step; empty when the step cannot apply.
std::vector<MarkedParkingFunction> step_children(const MarkedParkingFunction& pf,
                                                 const InsertionPlan::Step& st) {
    try {
        return st.marked ? insert_marked(pf, st.car, st.k) : insert_plain(pf, st.car, st.k);
    } catch (const std::invalid_argument&) {
        return {};  // violated stage precondition: dead branch
    }
}

void dfs_leaves(const MarkedParkingFunction& pf, const InsertionPlan& plan, std::size_t depth,
                const std::function<void(const MarkedParkingFunction&)>& sink) {
    if (depth == plan.steps.size()) {
        sink(pf);
        return;
    }
    for (const auto& child : step_children(pf, plan.steps[depth]))
        dfs_leaves(child, plan, depth + 1, sink);
}

MarkedParkingFunction root_mpf(int car) {
    return MarkedParkingFunction{LatticePath({0}), {car}, {}};
}

}  // namespace

void for_each_tree_leaf(const MarkedWord& w,
                        const std::function<void(const MarkedParkingFunction&)>& sink) {
    InsertionPlan plan = make_plan(w);
    if (!plan.rootable) return;
    dfs_leaves(root_mpf(plan.root), plan, 0, sink);
}

std::vector<MarkedParkingFunction> tree_leaves(const MarkedWord& w) {
    std::vector<MarkedParkingFunction> out;
    for_each_tree_leaf(w, [&](const MarkedParkingFunction& pf) { out.push_back(pf); });
    return out;
}

std::vector<TreeLevel> tree_trace(const MarkedWord& w) {
    std::vector<TreeLevel> levels;
    InsertionPlan plan = make_plan(w);
    if (!plan.rootable) return levels;
    levels.push_back({plan.root, 0, false, {1}});
    std::vector<MarkedParkingFunction> frontier{root_mpf(plan.root)};
    for (const auto& st : plan.steps) {
        TreeLevel lvl{st.car, st.k, st.marked, {}};
        std::vector<MarkedParkingFunction> next;
        for (const auto& pf : frontier) {
            auto children = step_children(pf, st);
            lvl.branching.push_back(static_cast<int>(children.size()));
            for (auto& c : children) next.push_back(std::move(c));
        }
        levels.push_back(std::move(lvl));
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return levels;
}

MarkedParkingFunction tree_leaf_with_dinv_offset(const MarkedWord& w, int dinv_offset) {
    InsertionPlan plan = make_plan(w);
    if (!plan.rootable) throw std::invalid_argument("tree_leaf_with_dinv_offset: no root");
    MarkedParkingFunction cur = root_mpf(plan.root);
    int remaining = dinv_offset;
    for (const auto& st : plan.steps) {
        auto children = step_children(cur, st);
        if (children.empty())
            throw std::invalid_argument("tree_leaf_with_dinv_offset: word not insertable");
        int deg = static_cast<int>(children.size());
        int take = std::min(remaining, deg - 1);
        // Plain children run right-to-left in dinv (leftmost adds deg-1);
        // marked children run left-to-right (leftmost adds 0).
        cur = st.marked ? children[take] : children[deg - 1 - take];
        remaining -= take;
    }
    if (remaining != 0)
        throw std::invalid_argument("tree_leaf_with_dinv_offset: offset beyond attainable range");
    return cur;
}

}  // namespace deltasched
