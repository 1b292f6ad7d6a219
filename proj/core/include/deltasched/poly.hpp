#pragma once

#include <map>
#include <string>
#include <vector>

#include "deltasched/bigint.hpp"
#include "deltasched/parking.hpp"
#include "deltasched/schedperm.hpp"

namespace deltasched {

// Exponent triple of a q,t,z-monomial.
struct Exp {
    int q = 0;
    int t = 0;
    int z = 0;

    bool operator==(const Exp&) const = default;
};

// Canonical term order: (z, t, q) ascending; used for serialization.
struct ExpLess {
    bool operator()(const Exp& a, const Exp& b) const {
        if (a.z != b.z) return a.z < b.z;
        if (a.t != b.t) return a.t < b.t;
        return a.q < b.q;
    }
};

// Sparse polynomial in q, t, z with exact integer coefficients. Zero
// coefficients are never stored.
class PolyQTZ {
public:
    PolyQTZ() = default;
    static PolyQTZ constant(BigInt c);
    static PolyQTZ monomial(Exp e, BigInt c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, BigInt, ExpLess>& terms() const { return terms_; }
    BigInt coeff(const Exp& e) const;

    void add_term(const Exp& e, const BigInt& c);

    PolyQTZ& operator+=(const PolyQTZ& o);
    PolyQTZ& operator-=(const PolyQTZ& o);
    PolyQTZ operator+(const PolyQTZ& o) const;
    PolyQTZ operator-(const PolyQTZ& o) const;
    PolyQTZ operator*(const PolyQTZ& o) const;
    bool operator==(const PolyQTZ&) const = default;

    // Restriction to terms with the given z-degree, with z stripped.
    PolyQTZ z_slice(int z) const;

    BigInt eval(const BigInt& q, const BigInt& t, const BigInt& z) const;

    // "1 + q + t + z", terms in canonical order, '*' separated factors,
    // '^' exponents; "0" for the zero polynomial.
    std::string str() const;

    // {"terms":[{"q":..,"t":..,"z":..,"coeff":"<decimal>"}]} in canonical order.
    std::string json() const;

private:
    std::map<Exp, BigInt, ExpLess> terms_;
};

// [m]_q = 1 + q + ... + q^(m-1); zero polynomial for m = 0.
PolyQTZ q_analog(int m);

// z^(n-|Pi|) * t^maj(tau(Pi)) * prod_c [w_Pi(c)]_q.
PolyQTZ schedule_weight(const OrderedSetPartition& p);

// Adds q^dinv t^area z^|marks|. Throws std::runtime_error with the offending
// record if dinv is negative (cannot happen for valid input).
void add_stat_weight(PolyQTZ& acc, const MarkedParkingFunction& pf);

PolyQTZ brute_sum(const std::vector<MarkedParkingFunction>& pfs);

// Hilbert series of the bigraded coinvariant module: sum over permutations of
// t^maj(tau) * prod [w_tau(c)]_q. z-free; equals the z^0 slice of hilbert_sdr.
PolyQTZ hilbert_dr(int n);

// Conjectural trigraded Hilbert series: sum of schedule_weight over all
// ordered set partitions of {1..n}.
PolyQTZ hilbert_sdr(int n);

}  // namespace deltasched
