#pragma once

#include <functional>
#include <vector>

#include "deltasched/parking.hpp"
#include "deltasched/schedperm.hpp"

namespace deltasched {

// Inserts an unmarked car c into the k-diagonal of pf, one output per site:
// above each smaller car of the (k-1)-diagonal, above-and-right of each
// bigger car of the k-diagonal, and in the lower-left corner when k = 0.
// Children are ordered left to right by insertion column; the i-th child has
// dinv(parent) + (#children - 1 - i).
//
// Preconditions (throws std::invalid_argument): c absent, the (k+1)-diagonal
// empty, and the k-diagonal holding no car smaller than c.
std::vector<MarkedParkingFunction> insert_plain(const MarkedParkingFunction& pf, int c, int k);

// Inserts a marked car c into the k-diagonal. One output per anchor (unmarked
// smaller car in the k-diagonal or unmarked bigger car in the (k+1)-diagonal):
// scanning right of the anchor, c lands directly under the first unmarked car
// bigger than c in the (k+1)-diagonal, or just right of the first East step
// returning to height k. Children are ordered by anchor (column, then row);
// the i-th child has dinv(parent) + i. An empty result is valid and signals
// non-insertability at this stage.
//
// Precondition (throws): c absent and no marked car smaller than c in the
// k-diagonal.
std::vector<MarkedParkingFunction> insert_marked(const MarkedParkingFunction& pf, int c, int k);

// Deletes car c and shifts all higher rows down and to the left once.
// Precondition (throws): c marked, or c unmarked in the highest nonempty
// diagonal.
MarkedParkingFunction remove_car(const MarkedParkingFunction& pf, int c);

struct InversionStep {
    MarkedParkingFunction parent;
    int car = 0;
    int k = 0;
    bool marked = false;
};

// The unique inversion step: if marks exist, k is the highest diagonal with a
// marked car and c the largest marked car there; otherwise k is the highest
// nonempty diagonal and c its smallest car. pf is always a member of the
// corresponding insert list of the parent.
InversionStep invert(const MarkedParkingFunction& pf);

struct TreeLevel {
    int car = 0;
    int k = 0;
    bool marked = false;
    std::vector<int> branching;  // child count per node, in visit order
};

// Builds the insertion tree of a marked word: root is the rightmost unmarked
// letter, then the remaining unmarked letters right to left by plain
// insertion, then the marked letters right to left by marked insertion. Each
// car is inserted into the k-diagonal where its run is the (k+1)-st from the
// last of the word. Leaves stream in depth-first order. The stream is empty
// exactly when the word is not insertable.
void for_each_tree_leaf(const MarkedWord& w,
                        const std::function<void(const MarkedParkingFunction&)>& sink);

std::vector<MarkedParkingFunction> tree_leaves(const MarkedWord& w);

// Level-by-level construction, recording per-level branching degrees.
std::vector<TreeLevel> tree_trace(const MarkedWord& w);

// Walks one root-to-leaf path picking, at every level, the child whose dinv
// offset consumes as much of `dinv_offset` as possible. Returns the leaf with
// dinv equal to the tree minimum plus dinv_offset. Throws if the word is not
// insertable or the offset exceeds the attainable range.
MarkedParkingFunction tree_leaf_with_dinv_offset(const MarkedWord& w, int dinv_offset);

}  // namespace deltasched
