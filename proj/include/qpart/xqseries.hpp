#pragma once

#include <vector>

#include "qpart/qseries.hpp"

namespace qpart {

/* Bivariate truncated series $\sum c[m][n]\, x^m q^n$ with x tracking the
 * number of parts and q the weight. Dimensions are fixed at construction:
 * $0 \leq m \leq M$, $0 \leq n \leq N$. */
class XQSeries {
public:
    XQSeries(int x_order, int q_order);

    static XQSeries one(int x_order, int q_order);

    int x_order() const noexcept { return x_order_; }
    int q_order() const noexcept { return q_order_; }

    const Integer& coeff(int m, int n) const;
    void set_coeff(int m, int n, Integer value);

    /* Substitutes $x \to xq$: the new $[m][n]$ entry is the old
     * $[m][n-m]$. Dimensions are preserved. */
    XQSeries xq_shift() const;

    /* Multiplies by the monomial $xq$: the new $[m][n]$ entry is the old
     * $[m-1][n-1]$; the top row and column fall off the truncation. */
    XQSeries xq_mul_xq() const;

    XQSeries& operator+=(const XQSeries& rhs);
    XQSeries& operator-=(const XQSeries& rhs);
    friend XQSeries operator+(XQSeries lhs, const XQSeries& rhs) { return lhs += rhs; }
    friend XQSeries operator-(XQSeries lhs, const XQSeries& rhs) { return lhs -= rhs; }

    friend bool operator==(const XQSeries&, const XQSeries&) = default;

private:
    void check_same_dims(const XQSeries& rhs) const;
    size_t index(int m, int n) const { return static_cast<size_t>(m) * (q_order_ + 1) + n; }

    int x_order_;
    int q_order_;
    std::vector<Integer> coeffs_; // row-major, (M+1) x (N+1)
};

} // namespace qpart
