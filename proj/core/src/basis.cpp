#include "deltasched/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltasched {

std::string SuperMonomial::str() const {
    std::vector<std::string> factors;
    auto emit = [&](const char* name, const std::map<int, int>& exps) {
        for (const auto& [i, e] : exps) {
            std::string f = std::string(name) + std::to_string(i);
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        }
    };
    emit("x", xexp);
    emit("y", yexp);
    for (int i : theta) factors.push_back("t" + std::to_string(i));
    std::string s = sign < 0 ? "-" : "";
    if (factors.empty()) return s + "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += "*";
        s += factors[i];
    }
    return s;
}

int normalize_theta(std::vector<int>& theta) {
    int sign = 1;
    // Insertion sort, counting swaps; fine at these sizes.
    for (std::size_t i = 1; i < theta.size(); ++i) {
        for (std::size_t j = i; j > 0 && theta[j - 1] > theta[j]; --j) {
            std::swap(theta[j - 1], theta[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (theta[i - 1] == theta[i]) return 0;
    return sign;
}

SuperMonomial y_monomial(const MarkedWord& tau) {
    SuperMonomial m;
    for (int i = 1; i < tau.size(); ++i) {
        if (tau.word[i - 1] > tau.word[i])
            for (int j = 0; j < i; ++j) ++m.yexp[tau.word[j]];
    }
    return m;
}

SuperMonomial theta_monomial(const OrderedSetPartition& p) {
    MarkedWord w = tau_star(p);
    SuperMonomial m;
    for (int i = 0; i < w.size(); ++i)
        if (w.marked[i]) m.theta.push_back(w.word[i]);
    int s = normalize_theta(m.theta);
    if (s == 0) throw std::logic_error("theta_monomial: repeated index");
    m.sign = s;
    return m;
}

std::vector<SuperMonomial> basis_block(const OrderedSetPartition& p) {
    SuperMonomial base = y_monomial(tau(p));
    SuperMonomial th = theta_monomial(p);
    base.theta = th.theta;
    base.sign = th.sign;
    std::map<int, int> sched = schedule_numbers(p);
    std::vector<std::pair<int, int>> ranges(sched.begin(), sched.end());  // (car, w)
    std::vector<SuperMonomial> out;
    std::vector<int> choice(ranges.size(), 0);
    while (true) {
        SuperMonomial m = base;
        for (std::size_t i = 0; i < ranges.size(); ++i)
            if (choice[i] > 0) m.xexp[ranges[i].first] = choice[i];
        out.push_back(std::move(m));
        std::size_t i = ranges.size();
        while (i > 0) {
            --i;
            if (choice[i] + 1 < ranges[i].second) {
                ++choice[i];
                std::fill(choice.begin() + i + 1, choice.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (ranges.empty()) return out;
    }
}

std::string basis_block_str(const OrderedSetPartition& p) {
    std::vector<std::string> factors;
    for (int i : theta_monomial(p).theta) factors.push_back("t" + std::to_string(i));
    SuperMonomial y = y_monomial(tau(p));
    for (const auto& [i, e] : y.yexp) {
        std::string f = "y" + std::to_string(i);
        if (e > 1) f += "^" + std::to_string(e);
        factors.push_back(f);
    }
    for (const auto& [car, w] : schedule_numbers(p)) {
        if (w <= 1) continue;
        std::string f = "(1";
        for (int e = 1; e < w; ++e) {
            f += " + x" + std::to_string(car);
            if (e > 1) f += "^" + std::to_string(e);
        }
        f += ")";
        factors.push_back(f);
    }
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += "*";
        s += factors[i];
    }
    return s;
}

void for_each_basis_monomial(int n, const std::function<void(const SuperMonomial&)>& fn) {
    for_each_osp(n, std::nullopt, [&](const OrderedSetPartition& p) {
        for (const auto& m : basis_block(p)) fn(m);
    });
}

std::vector<SuperMonomial> basis(int n) {
    std::vector<SuperMonomial> out;
    for_each_basis_monomial(n, [&](const SuperMonomial& m) { out.push_back(m); });
    return out;
}

std::tuple<int, int, int> tri_degree(const SuperMonomial& m) {
    int a = 0, b = 0;
    for (const auto& [i, e] : m.xexp) a += e;
    for (const auto& [i, e] : m.yexp) b += e;
    return {a, b, static_cast<int>(m.theta.size())};
}

OrderedSetPartition reconstruct_osp(const SuperMonomial& m, int n) {
    // Cars with equal y-exponent form one run of tau; runs are ordered by
    // descending y-exponent, which runs |D|, |D|-1, ..., 0 over the runs.
    std::map<int, std::vector<int>, std::greater<int>> by_exp;
    for (int v = 1; v <= n; ++v) {
        auto it = m.yexp.find(v);
        by_exp[it == m.yexp.end() ? 0 : it->second].push_back(v);
    }
    int expect = static_cast<int>(by_exp.size()) - 1;
    std::vector<int> tau_word;
    for (const auto& [e, vals] : by_exp) {
        if (e != expect--)
            throw std::invalid_argument("reconstruct_osp: y-exponents match no descent structure");
        for (int v : vals) tau_word.push_back(v);
    }
    MarkedWord w(tau_word, m.theta);
    if (w.size() == 0 || w.marked[0])
        throw std::invalid_argument("reconstruct_osp: monomial lies in no block");
    OrderedSetPartition p = osp_from_marked_word(w);
    if (tau_star(p) != w || y_monomial(tau(p)).yexp != m.yexp)
        throw std::invalid_argument("reconstruct_osp: monomial lies in no block");
    std::map<int, int> sched = schedule_numbers(p);
    for (const auto& [i, e] : m.xexp)
        if (e >= sched.at(i))
            throw std::invalid_argument("reconstruct_osp: x-exponent exceeds schedule range");
    return p;
}

}  // namespace deltasched
