#include "deltasched/schedperm.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltasched {

MarkedWord::MarkedWord(std::vector<int> w, const std::vector<int>& marked_values)
    : word(std::move(w)), marked(word.size(), 0) {
    for (int v : marked_values) {
        bool found = false;
        for (int i = 0; i < size(); ++i) {
            if (word[i] == v) {
                marked[i] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("marked value not present in word");
    }
}

bool MarkedWord::is_marked_value(int value) const {
    for (int i = 0; i < size(); ++i)
        if (word[i] == value) return marked[i] != 0;
    return false;
}

std::vector<int> MarkedWord::marked_values() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (marked[i]) out.push_back(word[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string MarkedWord::str() const {
    bool single = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v <= 9; });
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (!single && i > 0) s += ' ';
        if (marked[i]) s += '*';
        s += std::to_string(word[i]);
    }
    return s;
}

MarkedWord parse_marked_word(const std::string& s) {
    MarkedWord w;
    bool spaced = s.find(' ') != std::string::npos;
    bool next_marked = false;
    std::string num;
    auto flush = [&]() {
        if (num.empty()) return;
        w.word.push_back(std::stoi(num));
        w.marked.push_back(next_marked ? 1 : 0);
        next_marked = false;
        num.clear();
    };
    for (char c : s) {
        if (c == '*') {
            flush();
            next_marked = true;
        } else if (c == ' ') {
            flush();
        } else if (c >= '0' && c <= '9') {
            if (!spaced) flush();
            num += c;
        } else {
            throw std::invalid_argument("invalid character in marked word");
        }
    }
    flush();
    if (next_marked) throw std::invalid_argument("dangling '*' in marked word");
    return w;
}

int OrderedSetPartition::element_count() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

bool OrderedSetPartition::valid() const {
    std::vector<int> seen;
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        if (!std::is_sorted(b.begin(), b.end())) return false;
        for (int v : b) {
            if (v <= 0) return false;
            seen.push_back(v);
        }
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::string OrderedSetPartition::str() const {
    bool single = true;
    for (const auto& b : blocks)
        for (int v : b)
            if (v > 9) single = false;
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) s += '|';
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (!single && j > 0) s += ',';
            s += std::to_string(blocks[i][j]);
        }
    }
    return s;
}

OrderedSetPartition parse_osp(const std::string& s) {
    OrderedSetPartition p;
    bool comma = s.find(',') != std::string::npos;
    std::vector<int> block;
    std::string num;
    auto flush_num = [&]() {
        if (!num.empty()) {
            block.push_back(std::stoi(num));
            num.clear();
        }
    };
    auto flush_block = [&]() {
        flush_num();
        if (block.empty()) throw std::invalid_argument("empty block in ordered set partition");
        std::sort(block.begin(), block.end());
        p.blocks.push_back(block);
        block.clear();
    };
    for (char c : s) {
        if (c == '|') {
            flush_block();
        } else if (c == ',') {
            flush_num();
        } else if (c >= '0' && c <= '9') {
            if (!comma) flush_num();
            num += c;
        } else if (c != ' ') {
            throw std::invalid_argument("invalid character in ordered set partition");
        }
    }
    flush_block();
    if (!p.valid()) throw std::invalid_argument("invalid ordered set partition: " + s);
    return p;
}

std::vector<std::vector<int>> runs(const MarkedWord& w) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < w.size(); ++i) {
        if (i == 0 || w.word[i - 1] > w.word[i]) out.emplace_back();
        out.back().push_back(w.word[i]);
    }
    return out;
}

int maj(const MarkedWord& w) {
    int m = 0;
    for (int i = 1; i < w.size(); ++i)
        if (w.word[i - 1] > w.word[i]) m += i;
    return m;
}

MarkedWord tau(const OrderedSetPartition& p) {
    if (!p.valid()) throw std::invalid_argument("tau: invalid ordered set partition");
    std::vector<int> suffix;
    for (auto it = p.blocks.rbegin(); it != p.blocks.rend(); ++it) {
        const auto& b = *it;
        if (suffix.empty()) {
            suffix = b;  // blocks stored ascending
            continue;
        }
        int r = suffix.front();
        std::vector<int> prefix;
        for (int v : b)
            if (v > r) prefix.push_back(v);
        for (int v : b)
            if (v < r) prefix.push_back(v);
        prefix.insert(prefix.end(), suffix.begin(), suffix.end());
        suffix = std::move(prefix);
    }
    return MarkedWord(std::move(suffix));
}

MarkedWord tau_star(const OrderedSetPartition& p) {
    MarkedWord w = tau(p);
    // Mark every letter that is not the first letter of its block's segment.
    int pos = 0;
    std::vector<char> mk(w.size(), 1);
    // Segments appear in block order with the same lengths.
    for (const auto& b : p.blocks) {
        mk[pos] = 0;
        pos += static_cast<int>(b.size());
    }
    w.marked = std::move(mk);
    return w;
}

OrderedSetPartition osp_from_marked_word(const MarkedWord& w) {
    if (w.size() == 0) throw std::invalid_argument("osp_from_marked_word: empty word");
    if (w.marked[0])
        throw std::invalid_argument("osp_from_marked_word: first letter marked, no valid partition");
    OrderedSetPartition p;
    for (int i = 0; i < w.size(); ++i) {
        if (!w.marked[i]) p.blocks.emplace_back();
        p.blocks.back().push_back(w.word[i]);
    }
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    return p;
}

bool is_insertable(const MarkedWord& w) {
    if (w.size() == 0) return false;
    if (w.marked[0]) return false;
    MarkedWord unmarked_only;
    for (int i = 0; i < w.size(); ++i) {
        if (!w.marked[i]) {
            unmarked_only.word.push_back(w.word[i]);
            unmarked_only.marked.push_back(0);
        }
    }
    return runs(unmarked_only).size() == runs(w).size();
}

namespace {

// Shared core for both schedule-number flavors: runs of the word with a 0
// appended as its own final run (0 is unmarked).
struct RunView {
    std::vector<std::vector<int>> run_values;
    std::vector<std::vector<char>> run_marked;

    explicit RunView(const MarkedWord& w) {
        for (int i = 0; i < w.size(); ++i) {
            if (i == 0 || w.word[i - 1] > w.word[i]) {
                run_values.emplace_back();
                run_marked.emplace_back();
            }
            run_values.back().push_back(w.word[i]);
            run_marked.back().push_back(w.marked[i]);
        }
        run_values.push_back({0});
        run_marked.push_back({0});
    }

    int count_unmarked(int run, const std::function<bool(int)>& pred) const {
        int c = 0;
        for (std::size_t j = 0; j < run_values[run].size(); ++j)
            if (!run_marked[run][j] && pred(run_values[run][j])) ++c;
        return c;
    }
};

}  // namespace

std::map<int, int> schedule_numbers_plain(const MarkedWord& w) {
    for (char m : w.marked)
        if (m) throw std::invalid_argument("schedule_numbers_plain: word has marks");
    RunView rv(w);
    std::map<int, int> out;
    int nruns = static_cast<int>(rv.run_values.size());
    for (int r = 0; r + 1 < nruns; ++r) {
        for (int c : rv.run_values[r]) {
            int same = rv.count_unmarked(r, [&](int v) { return v > c; });
            int next = rv.count_unmarked(r + 1, [&](int v) { return v < c; });
            out[c] = same + next;
        }
    }
    return out;
}

std::map<int, int> schedule_numbers(const OrderedSetPartition& p) {
    MarkedWord w = tau_star(p);
    RunView rv(w);
    std::map<int, int> out;
    int nruns = static_cast<int>(rv.run_values.size());
    for (int r = 0; r + 1 < nruns; ++r) {
        for (std::size_t j = 0; j < rv.run_values[r].size(); ++j) {
            int c = rv.run_values[r][j];
            if (!rv.run_marked[r][j]) {
                int same = rv.count_unmarked(r, [&](int v) { return v > c; });
                int next = rv.count_unmarked(r + 1, [&](int v) { return v < c; });
                out[c] = same + next;
            } else {
                int same = rv.count_unmarked(r, [&](int v) { return v != 0 && v < c; });
                int prev = r > 0 ? rv.count_unmarked(r - 1, [&](int v) { return v > c; }) : 0;
                out[c] = same + prev;
            }
        }
    }
    return out;
}

int minimaj(const OrderedSetPartition& p) { return maj(tau(p)); }

namespace {

void osp_rec(int n, int next, std::optional<int> blocks, OrderedSetPartition& cur,
             const std::function<void(const OrderedSetPartition&)>& fn) {
    if (next > n) {
        if (!blocks || cur.block_count() == *blocks) fn(cur);
        return;
    }
    // Insert element `next` into an existing block or append new ones; blocks
    // are distinguished by position, so this yields each OSP exactly once.
    for (auto& b : cur.blocks) {
        b.push_back(next);
        osp_rec(n, next + 1, blocks, cur, fn);
        b.pop_back();
    }
    // As a new singleton block at each insertion position.
    for (int pos = 0; pos <= cur.block_count(); ++pos) {
        cur.blocks.insert(cur.blocks.begin() + pos, {next});
        osp_rec(n, next + 1, blocks, cur, fn);
        cur.blocks.erase(cur.blocks.begin() + pos);
    }
}

}  // namespace

void for_each_osp(int n, std::optional<int> blocks,
                  const std::function<void(const OrderedSetPartition&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_osp: n must be positive");
    OrderedSetPartition cur;
    osp_rec(n, 1, blocks, cur, fn);
}

std::vector<OrderedSetPartition> all_osp(int n, std::optional<int> blocks) {
    std::vector<OrderedSetPartition> out;
    for_each_osp(n, blocks, [&](const OrderedSetPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace deltasched
