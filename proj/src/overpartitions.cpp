#include "qpart/overpartitions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace qpart {

namespace {

void check_weight(int n) {
    if (n < 0) throw PreconditionError("weight must be >= 0, got " + std::to_string(n));
}

void check_ka(int k, int a) {
    if (!(k >= a && a >= 1))
        throw PreconditionError("family parameters must satisfy k >= a >= 1, got k=" +
                                std::to_string(k) + " a=" + std::to_string(a));
}

/* Underlying partitions of n (weakly decreasing), largest-first order. */
void partitions_rec(int remaining, int value_cap, std::vector<int>& stack,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(stack);
        return;
    }
    for (int v = std::min(value_cap, remaining); v >= 1; --v) {
        stack.push_back(v);
        partitions_rec(remaining - v, v, stack, out);
        stack.pop_back();
    }
}

} // namespace

int Overpartition::weight() const {
    int w = 0;
    for (const auto& p : parts) w += p.value;
    return w;
}

bool is_canonical(const Overpartition& p) {
    int prev_value = 0;
    bool first = true;
    for (const auto& part : p.parts) {
        if (part.value < 1) return false;
        if (!first && part.value > prev_value) return false;
        /* Inside a block of equal values only the first copy may be
         * overlined; this also caps overlines at one per value. */
        if (!first && part.value == prev_value && part.overlined) return false;
        prev_value = part.value;
        first = false;
    }
    return true;
}

bool is_valid_D(const Overpartition& p, int k, int a) {
    check_ka(k, a);
    if (!is_canonical(p))
        throw PreconditionError("overpartition not in canonical form");
    int plain_ones = 0;
    for (const auto& part : p.parts)
        if (part.value == 1 && !part.overlined) ++plain_ones;
    if (plain_ones > a - 1) return false;
    const int s = static_cast<int>(p.parts.size());
    for (int j = 0; j + k - 1 < s; ++j) {
        const int gap = p.parts[j].value - p.parts[j + k - 1].value;
        if (gap < (p.parts[j].overlined ? 1 : 2)) return false;
    }
    return true;
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
    check_weight(n);
    std::vector<std::vector<int>> bases;
    std::vector<int> stack;
    partitions_rec(n, n, stack, bases);

    std::vector<Overpartition> out;
    for (const auto& base : bases) {
        std::vector<int> distinct;
        for (int v : base)
            if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
        const int d = static_cast<int>(distinct.size());
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            Overpartition op;
            op.parts.reserve(base.size());
            int prev = 0;
            for (int v : base) {
                bool over = false;
                if (v != prev) {
                    const int idx = static_cast<int>(
                        std::lower_bound(distinct.begin(), distinct.end(), v,
                                         std::greater<int>()) -
                        distinct.begin());
                    over = (mask >> idx) & 1u;
                }
                op.parts.push_back({v, over});
                prev = v;
            }
            out.push_back(std::move(op));
        }
    }
    return out;
}

std::vector<Overpartition> enumerate_D(int k, int a, int n) {
    check_ka(k, a);
    std::vector<Overpartition> out;
    for (auto& p : enumerate_overpartitions(n))
        if (is_valid_D(p, k, a)) out.push_back(std::move(p));
    return out;
}

Integer count_D(int k, int a, int n) {
    return Integer(static_cast<long>(enumerate_D(k, a, n).size()));
}

std::vector<Integer> count_C_table(int k, int i, int n_max) {
    check_ka(k, i);
    check_weight(n_max);
    const int modulus = 2 * k;
    const int r1 = i % modulus;
    const int r2 = (modulus - i) % modulus;

    std::vector<Integer> dp(n_max + 1);
    dp[0] = 1;
    for (int v = 1; v <= n_max; ++v) {
        const int res = v % modulus;
        const bool plain_ok = res != 0 && res != r1 && res != r2;
        if (plain_ok) {
            // unbounded non-overlined multiplicity
            for (int w = v; w <= n_max; ++w) dp[w] += dp[w - v];
        }
        const bool over_ok = (i < k) || (v % k != 0);
        if (over_ok) {
            // at most one overlined copy
            for (int w = n_max; w >= v; --w) dp[w] += dp[w - v];
        }
    }
    return dp;
}

Integer count_C(int k, int i, int n) {
    return count_C_table(k, i, n)[n];
}

std::string to_string(const Overpartition& p, bool ascii) {
    if (p.parts.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i > 0) out += ',';
        const std::string digits = std::to_string(p.parts[i].value);
        if (!p.parts[i].overlined) {
            out += digits;
        } else if (ascii) {
            out += digits;
            out += '~';
        } else {
            for (char d : digits) {
                out += d;
                out += "\xCC\x85"; // U+0305 combining overline
            }
        }
    }
    return out;
}

} // namespace qpart
