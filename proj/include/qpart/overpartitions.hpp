#pragma once

#include <string>
#include <vector>

#include "qpart/qseries.hpp"

namespace qpart {

struct OverPart {
    int value;
    bool overlined;

    friend bool operator==(const OverPart&, const OverPart&) = default;
};

/* An overpartition: weakly decreasing part values, each value overlined
 * at most once, with the overlined copy placed first among equal values.
 * Family membership (the D and C predicates below) is checked separately. */
struct Overpartition {
    std::vector<OverPart> parts;

    int weight() const;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
};

/* True iff p is in canonical form: weakly decreasing values, at most one
 * overlined copy per value, overlined copy leftmost in its block. */
bool is_canonical(const Overpartition& p);

/* Membership in the gap family: with parts $d_1 \geq \dots \geq d_s$,
 * requires $d_j - d_{j+k-1} \geq 1$ when $d_j$ is overlined and $\geq 2$
 * otherwise (whenever $j+k-1 \leq s$), and at most $a-1$ non-overlined
 * ones. Requires $k \geq a \geq 1$ and canonical p (PreconditionError
 * otherwise). */
bool is_valid_D(const Overpartition& p, int k, int a);

/* All overpartitions of n in canonical form, deterministic order. */
std::vector<Overpartition> enumerate_overpartitions(int n);

/* The members of the gap family among the overpartitions of n. */
std::vector<Overpartition> enumerate_D(int k, int a, int n);

/* Exhaustive count of the gap family; desk-scale. */
Integer count_D(int k, int a, int n);

/* Residue-class count: overpartitions of n whose non-overlined parts
 * avoid the residues $0, \pm i$ modulo $2k$. For i = k this collapses to
 * "no part divisible by k", a restriction that applies to overlined parts
 * as well; for i < k overlined parts are unrestricted. Computed by
 * dynamic programming over part values. */
Integer count_C(int k, int i, int n);

std::vector<Integer> count_C_table(int k, int i, int n_max);

/* Serialization: parts comma-separated, decreasing. An overlined part
 * prints with a trailing '~' in ASCII mode and with combining overlines
 * in Unicode mode. The empty overpartition prints as "-". */
std::string to_string(const Overpartition& p, bool ascii = false);

} // namespace qpart
