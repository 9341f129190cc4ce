#include "totreal/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace totreal {

DiophInstance make_instance(int m, long long chi) {
    if (m < 1) throw std::invalid_argument("make_instance: m must be >= 1");
    return DiophInstance{m, chi};
}

bool operator==(const DiophSolution& a, const DiophSolution& b) {
    return a.d == b.d && a.q == b.q;
}

bool solution_less(const DiophSolution& a, const DiophSolution& b) {
    if (a.d != b.d) return a.d < b.d;
    return std::lexicographical_compare(a.q.begin(), a.q.end(), b.q.begin(), b.q.end());
}

void split_d(long long d, long long& s, long long& r) {
    // greatest s with 3s <= d + 1
    long long n = d + 1;
    s = n >= 0 ? n / 3 : -((-n + 2) / 3);
    r = d - 3 * s;
}

DiophSolution make_solution(long long d, std::vector<long long> q) {
    DiophSolution sol;
    sol.d = d;
    sol.q = std::move(q);
    split_d(d, sol.s, sol.r);
    sol.ell = 0;
    for (long long v : sol.q) sol.ell += (v - sol.s) * (v - sol.s);
    return sol;
}

bool is_solution(const DiophInstance& inst, long long d, const std::vector<long long>& q) {
    if (static_cast<int>(q.size()) != inst.m) return false;
    long long sum = 0, sq = 0;
    for (long long v : q) {
        sum += v;
        sq += v * v;
    }
    return sum == 3 * d && sq == d * d + inst.chi;
}

bool is_solution(const DiophInstance& inst, const DiophSolution& sol) {
    return is_solution(inst, sol.d, sol.q);
}

DiophSolution canonicalize(const DiophSolution& sol) {
    std::vector<long long> q = sol.q;
    std::sort(q.begin(), q.end(), std::greater<long long>());
    std::vector<long long> neg(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) neg[i] = -q[q.size() - 1 - i];
    // compare (d, q) against its negation (-d, sorted(-q)) lexicographically
    bool flip = false;
    if (sol.d < -sol.d) flip = true;
    else if (sol.d == -sol.d && std::lexicographical_compare(q.begin(), q.end(), neg.begin(), neg.end()))
        flip = true;
    if (flip) return make_solution(-sol.d, std::move(neg));
    return make_solution(sol.d, std::move(q));
}

std::vector<DiophSolution> trivial_modifications(const DiophSolution& sol, int target_m) {
    long long nonzero = std::count_if(sol.q.begin(), sol.q.end(), [](long long v) { return v != 0; });
    if (nonzero > target_m)
        throw std::invalid_argument("trivial_modifications: target length cannot hold the nonzero entries");
    std::vector<long long> base;
    for (long long v : sol.q)
        if (v != 0) base.push_back(v);
    base.resize(static_cast<std::size_t>(target_m), 0);
    std::sort(base.begin(), base.end());

    std::set<std::pair<long long, std::vector<long long>>> seen;
    std::vector<DiophSolution> orbit;
    for (int sign : {+1, -1}) {
        std::vector<long long> q(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) q[i] = sign * base[i];
        std::sort(q.begin(), q.end());
        do {
            if (seen.emplace(sign * sol.d, q).second)
                orbit.push_back(make_solution(sign * sol.d, q));
        } while (std::next_permutation(q.begin(), q.end()));
    }
    std::sort(orbit.begin(), orbit.end(), solution_less);
    return orbit;
}

namespace {

long long isqrt_floor(long long n) {
    if (n < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Enumerate integer tuples p_1 >= ... >= p_k with sum S and square sum L,
// appending p + shift*1 to sink via the callback.
void descend(int k, long long S, long long L, long long ub, std::vector<long long>& p,
             const std::function<void(const std::vector<long long>&)>& emit) {
    if (k == 0) {
        if (S == 0 && L == 0) emit(p);
        return;
    }
    long long root = isqrt_floor(L);
    long long hi = std::min(ub, root);
    long long lo = -root;
    for (long long v = hi; v >= lo; --v) {
        // remaining entries are all <= v, so S - v <= (k-1) v must stay satisfiable
        if (S - v > (k - 1) * v) break;  // v too small from here down
        long long l2 = L - v * v;
        if (l2 < 0) continue;
        long long s2 = S - v;
        // Cauchy-Schwarz on the remaining k-1 entries
        if (k > 1 && s2 * s2 > (k - 1) * l2) continue;
        if (k == 1 && (s2 != 0 || l2 != 0)) continue;
        p.push_back(v);
        descend(k - 1, s2, l2, v, p, emit);
        p.pop_back();
    }
}

}  // namespace

std::vector<DiophSolution> solve_for_d(const DiophInstance& inst, long long d) {
    std::vector<DiophSolution> out;
    // Schwarz bound: (9 - m) d^2 <= m chi is necessary when m <= 9.
    if (inst.m <= 9 && (9 - inst.m) * d * d > inst.m * inst.chi) return out;
    long long s, r;
    split_d(d, s, r);
    long long ell = (inst.m - 9) * s * s + r * r + inst.chi;
    if (ell < 0) return out;
    long long target_sum = 3 * d - static_cast<long long>(inst.m) * s;
    std::vector<long long> p;
    descend(inst.m, target_sum, ell, isqrt_floor(ell), p,
            [&](const std::vector<long long>& tup) {
                std::vector<long long> q(tup.size());
                for (std::size_t i = 0; i < tup.size(); ++i) q[i] = tup[i] + s;
                out.push_back(make_solution(d, std::move(q)));
            });
    std::sort(out.begin(), out.end(), solution_less);
    return out;
}

std::vector<DiophSolution> solve_all(const DiophInstance& inst, long long d_min, long long d_max) {
    if (d_min > d_max) throw std::invalid_argument("solve_all: empty d range");
    std::vector<DiophSolution> out;
    for (long long d = d_min; d <= d_max; ++d) {
        auto part = solve_for_d(inst, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

DiophSolution ppsss_formula(long long d) {
    long long s, r;
    split_d(d, s, r);
    std::vector<long long> q;
    if (r == 0) {
        q = {s + 1, s, s, s, s, s, s, s, s - 1};
    } else if (r == 1) {
        q = {s + 1, s + 1, s + 1, s, s, s, s, s, s};
    } else {  // r == -1
        q = {s, s, s, s, s, s, s - 1, s - 1, s - 1};
    }
    return make_solution(d, std::move(q));
}

FamilyInstance xmpls_family(SolutionFamily family, long long p1, long long p2) {
    switch (family) {
        case SolutionFamily::ZeroTuple: {
            if (p1 < 1) throw std::invalid_argument("xmpls_family: need m >= 1");
            auto m = static_cast<int>(p1);
            return {make_instance(m, 0),
                    make_solution(0, std::vector<long long>(static_cast<std::size_t>(m), 0))};
        }
        case SolutionFamily::AllOnes: {
            if (p1 < 1) throw std::invalid_argument("xmpls_family: need d >= 1");
            long long d = p1;
            auto m = static_cast<int>(3 * d);
            return {make_instance(m, (3 - d) * d),
                    make_solution(d, std::vector<long long>(static_cast<std::size_t>(m), 1))};
        }
        case SolutionFamily::SphereChain: {
            if (p1 < 0) throw std::invalid_argument("xmpls_family: need d >= 0");
            long long d = p1;
            auto m = static_cast<int>(2 * d + 2);
            std::vector<long long> q(static_cast<std::size_t>(m), 1);
            q[0] = d - 1;
            return {make_instance(m, 2), make_solution(d, std::move(q))};
        }
        case SolutionFamily::TenPointA: {
            if (p1 < 2 || (p2 != 0 && p2 != 1))
                throw std::invalid_argument("xmpls_family: need c >= 2 and e in {0,1}");
            long long c = p1, e = p2;
            std::vector<long long> q{c, c, c, c + e, c + e, c + e, c + e, c + e, c + e, 3};
            return {make_instance(10, 8 - 2 * e - 6 * c),
                    make_solution(3 * c + 1 + 2 * e, std::move(q))};
        }
        case SolutionFamily::TenPointB: {
            if (p1 < 1) throw std::invalid_argument("xmpls_family: need c >= 1");
            long long c = p1;
            std::vector<long long> q{c + 2, c, c + 1, c + 1, c + 1, c + 1, c + 1, c + 1, c + 1, 3};
            return {make_instance(10, 4 - 6 * c), make_solution(3 * c + 4, std::move(q))};
        }
    }
    throw std::invalid_argument("xmpls_family: unknown family");
}

}  // namespace totreal
