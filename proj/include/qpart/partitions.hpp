#pragma once

#include <string>
#include <vector>

#include "qpart/qseries.hpp"
#include "qpart/xqseries.hpp"

namespace qpart {

enum class Color { Black, Red };

struct ColoredPart {
    int value;
    Color color;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/* A partition into parts carrying one of two colors, displayed with
 * values strictly decreasing. Validity for the 2-colored
 * Rogers-Ramanujan family is a separate predicate. */
struct ColoredPartition {
    std::vector<ColoredPart> parts;

    int weight() const;

    friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
};

/* True iff the partition is 2-colored Rogers-Ramanujan: within each color
 * class consecutive values differ by at least two, and no value appears
 * in both colors. Input must be sorted by weakly decreasing value
 * (PreconditionError otherwise); a repeated value makes the partition
 * invalid, not ill-formed. */
bool is_valid_2crr(const ColoredPartition& p);

/* All valid 2-colored Rogers-Ramanujan partitions of weight n with every
 * value >= min_part, in lexicographic order on the (value, color)
 * sequences: larger leading values first, Black before Red at equal
 * structure. */
std::vector<ColoredPartition> enumerate_2crr(int n, int min_part = 1);

/* Counts of valid partitions. The counters run a run-structure dynamic
 * program: a set S of distinct values admits exactly $2^{\#runs(S)}$
 * valid colorings, one free color choice per maximal run of consecutive
 * values (colors alternate inside a run). */
Integer count_2crr(int n, int min_part = 1);

/* Same count refined by the number of parts. */
Integer refined_count_2crr(int num_parts, int n, int min_part);

/* Counts the family that forbids a red 1: the run containing the value 1
 * loses its free color choice. */
Integer count_2crr_no_red1(int n);

/* Whole count tables 0..n_max in one dynamic-programming pass. */
std::vector<Integer> count_2crr_table(int n_max, int min_part = 1);
std::vector<Integer> count_2crr_no_red1_table(int n_max);

/* Exhaustively enumerated coefficient table for $R_j(x) = \sum r_j(m,n)
 * x^m q^n$: entry [m][n] counts the valid partitions of n into m parts
 * with every value >= min_part. Desk-scale by construction; serves as the
 * independent oracle for functional-equation checks. */
XQSeries build_xq_table(int min_part, int x_order, int q_order);

/* Serialization: parts comma-separated, decreasing; red parts carry a
 * trailing apostrophe, e.g. "5,2',1". The empty partition prints as "-". */
std::string to_string(const ColoredPartition& p);

} // namespace qpart
