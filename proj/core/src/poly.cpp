#include "deltasched/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace deltasched {

PolyQTZ PolyQTZ::constant(BigInt c) {
    PolyQTZ p;
    p.add_term({0, 0, 0}, c);
    return p;
}

PolyQTZ PolyQTZ::monomial(Exp e, BigInt c) {
    PolyQTZ p;
    p.add_term(e, c);
    return p;
}

BigInt PolyQTZ::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void PolyQTZ::add_term(const Exp& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyQTZ& PolyQTZ::operator+=(const PolyQTZ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyQTZ& PolyQTZ::operator-=(const PolyQTZ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyQTZ PolyQTZ::operator+(const PolyQTZ& o) const {
    PolyQTZ r = *this;
    r += o;
    return r;
}

PolyQTZ PolyQTZ::operator-(const PolyQTZ& o) const {
    PolyQTZ r = *this;
    r -= o;
    return r;
}

PolyQTZ PolyQTZ::operator*(const PolyQTZ& o) const {
    PolyQTZ r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1.q + e2.q, e1.t + e2.t, e1.z + e2.z}, c1 * c2);
    return r;
}

PolyQTZ PolyQTZ::z_slice(int z) const {
    PolyQTZ r;
    for (const auto& [e, c] : terms_)
        if (e.z == z) r.add_term({e.q, e.t, 0}, c);
    return r;
}

namespace {

BigInt big_pow(const BigInt& b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

BigInt PolyQTZ::eval(const BigInt& q, const BigInt& t, const BigInt& z) const {
    BigInt r = 0;
    for (const auto& [e, c] : terms_) r += c * big_pow(q, e.q) * big_pow(t, e.t) * big_pow(z, e.z);
    return r;
}

std::string PolyQTZ::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || (e.q == 0 && e.t == 0 && e.z == 0)) factors.push_back(a.str());
        auto var = [&](const char* name, int exp) {
            if (exp == 1)
                factors.push_back(name);
            else if (exp > 1)
                factors.push_back(std::string(name) + "^" + std::to_string(exp));
        };
        var("q", e.q);
        var("t", e.t);
        var("z", e.z);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) s += "*";
            s += factors[i];
        }
    }
    return s;
}

std::string PolyQTZ::json() const {
    std::string s = "{\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += ",";
        first = false;
        s += "{\"q\":" + std::to_string(e.q) + ",\"t\":" + std::to_string(e.t) +
             ",\"z\":" + std::to_string(e.z) + ",\"coeff\":\"" + c.str() + "\"}";
    }
    s += "]}";
    return s;
}

PolyQTZ q_analog(int m) {
    if (m < 0) throw std::invalid_argument("q_analog: negative argument");
    PolyQTZ p;
    for (int i = 0; i < m; ++i) p.add_term({i, 0, 0}, 1);
    return p;
}

PolyQTZ schedule_weight(const OrderedSetPartition& p) {
    int n = p.element_count();
    PolyQTZ w = PolyQTZ::monomial({0, minimaj(p), n - p.block_count()});
    for (const auto& [car, deg] : schedule_numbers(p)) {
        (void)car;
        w = w * q_analog(deg);
    }
    return w;
}

void add_stat_weight(PolyQTZ& acc, const MarkedParkingFunction& pf) {
    int d = dinv(pf);
    if (d < 0)
        throw std::runtime_error("negative dinv for path " + pf.path.to_ne_string() +
                                 ", which should be impossible");
    acc.add_term({d, pf.path.area(), static_cast<int>(pf.marks.size())}, 1);
}

PolyQTZ brute_sum(const std::vector<MarkedParkingFunction>& pfs) {
    PolyQTZ acc;
    for (const auto& pf : pfs) add_stat_weight(acc, pf);
    return acc;
}

PolyQTZ hilbert_dr(int n) {
    if (n < 1) throw std::invalid_argument("hilbert_dr: n must be positive");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    PolyQTZ acc;
    do {
        MarkedWord w{perm};
        PolyQTZ term = PolyQTZ::monomial({0, maj(w), 0});
        for (const auto& [car, deg] : schedule_numbers_plain(w)) {
            (void)car;
            term = term * q_analog(deg);
        }
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

PolyQTZ hilbert_sdr(int n) {
    if (n < 1) throw std::invalid_argument("hilbert_sdr: n must be positive");
    PolyQTZ acc;
    for_each_osp(n, std::nullopt,
                 [&](const OrderedSetPartition& p) { acc += schedule_weight(p); });
    return acc;
}

}  // namespace deltasched
