#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltasched {

// A permutation word (distinct positive values) with a subset of its letters
// marked. Values are distinct, so marks are stored per position but can be
// queried by value.
struct MarkedWord {
    std::vector<int> word;
    std::vector<char> marked;  // parallel to word

    MarkedWord() = default;
    explicit MarkedWord(std::vector<int> w) : word(std::move(w)), marked(word.size(), 0) {}
    MarkedWord(std::vector<int> w, const std::vector<int>& marked_values);

    int size() const { return static_cast<int>(word.size()); }
    bool is_marked_value(int value) const;
    std::vector<int> marked_values() const;  // ascending

    // Render with '*' prefixing marked letters; letters are concatenated when
    // all values are single digits, space-separated otherwise.
    std::string str() const;

    bool operator==(const MarkedWord&) const = default;
    auto operator<=>(const MarkedWord&) const = default;
};

// Parses "8*13*67245" (single-digit letters) or "*12 3 4" (space-separated).
MarkedWord parse_marked_word(const std::string& s);

// An ordered set partition: disjoint nonempty blocks, each stored ascending.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int element_count() const;
    bool valid() const;

    // "235|1679|48"; elements comma-separated within blocks when any value
    // exceeds 9.
    std::string str() const;

    bool operator==(const OrderedSetPartition&) const = default;
    auto operator<=>(const OrderedSetPartition&) const = default;
};

OrderedSetPartition parse_osp(const std::string& s);

// Maximal increasing contiguous segments of the underlying word; marks are
// ignored for segmentation.
std::vector<std::vector<int>> runs(const MarkedWord& w);

// Sum of descent positions (1-based) of the underlying word.
int maj(const MarkedWord& w);

// The word tau(Pi): last block ascending; each earlier block contributes its
// elements greater than the first letter of the suffix built so far in
// increasing order, then its smaller elements in increasing order.
MarkedWord tau(const OrderedSetPartition& p);

// tau(Pi) with every letter that is not the first of its block marked.
MarkedWord tau_star(const OrderedSetPartition& p);

// Breaks the word before each unmarked letter. Throws std::invalid_argument
// if the first letter is marked (no ordered set partition exists).
OrderedSetPartition osp_from_marked_word(const MarkedWord& w);

// First letter unmarked and deleting the marked letters preserves the number
// of runs.
bool is_insertable(const MarkedWord& w);

// Schedule numbers of an unmarked word, with a 0 appended as its own final
// run: w(c) = #{cars > c in c's run} + #{cars < c in the following run}.
// Throws if any letter is marked.
std::map<int, int> schedule_numbers_plain(const MarkedWord& w);

// Schedule numbers of an ordered set partition, computed on tau_star(Pi) with
// a 0 appended. Unmarked c counts unmarked cars larger than c in its run plus
// unmarked cars smaller than c in the next run; marked c counts unmarked cars
// smaller than c in its run plus unmarked cars larger than c in the previous
// run. The 0 counts only for unmarked cars of the last run.
std::map<int, int> schedule_numbers(const OrderedSetPartition& p);

// maj(tau(Pi)).
int minimaj(const OrderedSetPartition& p);

// Yields every ordered set partition of {1..n} exactly once; restricted to
// the given block count when set. Order: by insertion construction, blocks
// deterministic.
void for_each_osp(int n, std::optional<int> blocks,
                  const std::function<void(const OrderedSetPartition&)>& fn);

std::vector<OrderedSetPartition> all_osp(int n, std::optional<int> blocks = std::nullopt);

}  // namespace deltasched
