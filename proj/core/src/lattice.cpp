#include "deltasched/lattice.hpp"

#include <stdexcept>

namespace deltasched {

bool LatticePath::valid() const {
    for (int i = 1; i <= size(); ++i) {
        if (cols[i - 1] < 0 || cols[i - 1] > i - 1) return false;
        if (i >= 2 && cols[i - 1] < cols[i - 2]) return false;
    }
    return true;
}

int LatticePath::area() const {
    int a = 0;
    for (int i = 1; i <= size(); ++i) a += (i - 1) - cols[i - 1];
    return a;
}

int LatticePath::diagonal(int row) const {
    if (row < 1 || row > size()) throw std::out_of_range("LatticePath::diagonal: row out of range");
    return (row - 1) - cols[row - 1];
}

std::string LatticePath::to_ne_string() const {
    std::string s;
    s.reserve(2 * cols.size());
    int east = 0;
    for (int i = 1; i <= size(); ++i) {
        while (east < cols[i - 1]) {
            s += 'E';
            ++east;
        }
        s += 'N';
    }
    while (east < size()) {
        s += 'E';
        ++east;
    }
    return s;
}

LatticePath parse_ne_string(const std::string& s) {
    std::vector<int> cols;
    int north = 0, east = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == 'N' || c == 'n') {
            ++north;
            cols.push_back(east);
        } else if (c == 'E' || c == 'e') {
            ++east;
            if (east > north)
                throw std::invalid_argument("path dips below the diagonal at step " + std::to_string(i + 1));
        } else {
            throw std::invalid_argument("invalid step letter at step " + std::to_string(i + 1));
        }
    }
    if (north != east)
        throw std::invalid_argument("unbalanced path: " + std::to_string(north) + " N vs " +
                                    std::to_string(east) + " E steps");
    return LatticePath(std::move(cols));
}

namespace {

void dyck_rec(int n, std::vector<int>& cols, const std::function<void(const LatticePath&)>& fn) {
    int i = static_cast<int>(cols.size()) + 1;
    if (i > n) {
        LatticePath p(cols);
        fn(p);
        return;
    }
    int lo = cols.empty() ? 0 : cols.back();
    for (int x = lo; x <= i - 1; ++x) {
        cols.push_back(x);
        dyck_rec(n, cols, fn);
        cols.pop_back();
    }
}

}  // namespace

void for_each_dyck(int n, const std::function<void(const LatticePath&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_dyck: n must be positive");
    std::vector<int> cols;
    cols.reserve(n);
    dyck_rec(n, cols, fn);
}

std::vector<LatticePath> all_dyck(int n) {
    std::vector<LatticePath> out;
    for_each_dyck(n, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

}  // namespace deltasched
