#include "qpart/partitions.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace qpart {

namespace {

constexpr int kNoPart = std::numeric_limits<int>::max();

void check_weight(int n) {
    if (n < 0) throw PreconditionError("weight must be >= 0, got " + std::to_string(n));
}

void check_min_part(int min_part) {
    if (min_part < 1)
        throw PreconditionError("minimum part must be >= 1, got " + std::to_string(min_part));
}

/* Largest m with min_part + (min_part+1) + ... + (min_part+m-1) <= n. */
int max_parts(int n, int min_part) {
    int m = 0;
    long long sum = 0;
    while (sum + (min_part + m) <= n) {
        sum += min_part + m;
        ++m;
    }
    return m;
}

void enumerate_rec(int remaining, int value_cap, int last_black, int last_red,
                   std::vector<ColoredPart>& stack, int min_part,
                   std::vector<ColoredPartition>& out) {
    if (remaining == 0) {
        out.push_back(ColoredPartition{stack});
        return;
    }
    for (int v = std::min(value_cap, remaining); v >= min_part; --v) {
        for (Color c : {Color::Black, Color::Red}) {
            const int last_same = (c == Color::Black) ? last_black : last_red;
            if (last_same != kNoPart && last_same - v < 2) continue;
            stack.push_back({v, c});
            enumerate_rec(remaining - v, v - 1,
                          c == Color::Black ? v : last_black,
                          c == Color::Red ? v : last_red, stack, min_part, out);
            stack.pop_back();
        }
    }
}

/* Run-structure DP. Processes candidate values v = hi, hi-1, ..., min_part;
 * the layer for v holds, per (remaining weight r, whether v+1 was taken),
 * the count vector indexed by number of parts of ways to finish using
 * values >= v. Taking v when v+1 was not taken starts a new run whose
 * smallest element is v, worth a factor of two (or `one_run_weight` when
 * v == 1, which the no-red-1 family pins to one). */
std::vector<std::vector<Integer>> run_dp(int n, int min_part, int one_run_weight) {
    const int m_cap = max_parts(n, min_part);
    // layer[r][prev] -> vector over m
    auto make_layer = [&] {
        return std::vector<std::vector<std::vector<Integer>>>(
            n + 1, std::vector<std::vector<Integer>>(
                       2, std::vector<Integer>(m_cap + 1)));
    };
    auto next = make_layer();
    for (int prev = 0; prev < 2; ++prev) next[0][prev][0] = 1; // r == 0: empty completion

    for (int v = n; v >= min_part; --v) {
        auto cur = make_layer();
        for (int r = 0; r <= n; ++r) {
            for (int prev = 0; prev < 2; ++prev) {
                auto& acc = cur[r][prev];
                acc = next[r][0]; // skip v
                if (v <= r) {
                    const int weight = prev ? 1 : (v == 1 ? one_run_weight : 2);
                    const auto& taken = next[r - v][1];
                    for (int m = 0; m < m_cap; ++m) {
                        if (taken[m] == 0) continue;
                        acc[m + 1] += weight * taken[m];
                    }
                }
            }
        }
        next = std::move(cur);
    }
    // answers for every weight r: next[r][0]
    std::vector<std::vector<Integer>> table(n + 1);
    for (int r = 0; r <= n; ++r) table[r] = std::move(next[r][0]);
    return table;
}

} // namespace

int ColoredPartition::weight() const {
    int w = 0;
    for (const auto& p : parts) w += p.value;
    return w;
}

bool is_valid_2crr(const ColoredPartition& p) {
    int last_black = kNoPart;
    int last_red = kNoPart;
    int prev_value = kNoPart;
    for (const auto& part : p.parts) {
        if (part.value < 1)
            throw PreconditionError("part values must be positive");
        if (prev_value != kNoPart && part.value > prev_value)
            throw PreconditionError("parts must be sorted by decreasing value");
        if (part.value == prev_value) return false; // value repeated (possibly across colors)
        int& last_same = (part.color == Color::Black) ? last_black : last_red;
        if (last_same != kNoPart && last_same - part.value < 2) return false;
        last_same = part.value;
        prev_value = part.value;
    }
    return true;
}

std::vector<ColoredPartition> enumerate_2crr(int n, int min_part) {
    check_weight(n);
    check_min_part(min_part);
    std::vector<ColoredPartition> out;
    std::vector<ColoredPart> stack;
    enumerate_rec(n, n, kNoPart, kNoPart, stack, min_part, out);
    return out;
}

Integer count_2crr(int n, int min_part) {
    check_weight(n);
    check_min_part(min_part);
    const auto by_parts = run_dp(n, min_part, 2)[n];
    Integer total = 0;
    for (const auto& c : by_parts) total += c;
    return total;
}

Integer refined_count_2crr(int num_parts, int n, int min_part) {
    check_weight(n);
    check_min_part(min_part);
    if (num_parts < 0)
        throw PreconditionError("part count must be >= 0, got " + std::to_string(num_parts));
    const auto by_parts = run_dp(n, min_part, 2)[n];
    if (num_parts >= static_cast<int>(by_parts.size())) return 0;
    return by_parts[num_parts];
}

Integer count_2crr_no_red1(int n) {
    check_weight(n);
    const auto by_parts = run_dp(n, 1, 1)[n];
    Integer total = 0;
    for (const auto& c : by_parts) total += c;
    return total;
}

std::vector<Integer> count_2crr_table(int n_max, int min_part) {
    check_weight(n_max);
    check_min_part(min_part);
    const auto table = run_dp(n_max, min_part, 2);
    std::vector<Integer> out(n_max + 1);
    for (int r = 0; r <= n_max; ++r)
        for (const auto& c : table[r]) out[r] += c;
    return out;
}

std::vector<Integer> count_2crr_no_red1_table(int n_max) {
    check_weight(n_max);
    const auto table = run_dp(n_max, 1, 1);
    std::vector<Integer> out(n_max + 1);
    for (int r = 0; r <= n_max; ++r)
        for (const auto& c : table[r]) out[r] += c;
    return out;
}

XQSeries build_xq_table(int min_part, int x_order, int q_order) {
    XQSeries table(x_order, q_order);
    for (int n = 0; n <= q_order; ++n) {
        for (const auto& p : enumerate_2crr(n, min_part)) {
            const int m = static_cast<int>(p.parts.size());
            if (m <= x_order) table.set_coeff(m, n, table.coeff(m, n) + 1);
        }
    }
    return table;
}

std::string to_string(const ColoredPartition& p) {
    if (p.parts.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.parts[i].value);
        if (p.parts[i].color == Color::Red) out += '\'';
    }
    return out;
}

} // namespace qpart
