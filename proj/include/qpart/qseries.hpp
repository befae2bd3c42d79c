#pragma once

#include <gmpxx.h>

#include <vector>

#include "qpart/errors.hpp"

namespace qpart {

/* All coefficients and counts are exact arbitrary-precision integers. */
using Integer = mpz_class;

/* The argument $\pm q^a$ of a Pochhammer symbol. $-1$ is represented as
 * sign -1, exponent 0. */
struct Monomial {
    int sign;     // +1 or -1
    int exponent; // >= 0

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/* Truncated formal power series in $q$ over the integers. A series of
 * order $N$ stores the coefficients of $q^0, \dots, q^N$; every operation
 * is exact modulo $q^{N+1}$. Values are immutable in normal use and safe
 * to share across threads once built. */
class QSeries {
public:
    /* The zero series of the given order. */
    explicit QSeries(int order);

    static QSeries one(int order);

    /* Builds a series from low-order coefficients, padding with zeros up
     * to the order. A sequence longer than order+1 entries raises
     * LengthError. */
    static QSeries from_coeffs(std::vector<Integer> coeffs, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const Integer& coeff(int n) const;
    void set_coeff(int n, Integer value);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    /* Ring operations. Operands must have equal order (OrderMismatchError
     * otherwise); the product is the Cauchy product truncated at the
     * common order. */
    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
    friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
    QSeries operator-() const;
    friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);

    /* Multiplicative inverse modulo $q^{N+1}$. The constant term must be
     * +1 or -1 (NotInvertibleError otherwise); division elsewhere in this
     * library is always multiplication by an inverse. */
    QSeries inverse() const;

    /* The series multiplied by $q^k$, $k \geq 0$, truncated at the same
     * order. */
    QSeries shifted_up(int k) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

/* Finite Pochhammer symbol $(s\,q^a; q^b)_n = \prod_{i=0}^{n-1}
 * (1 - s\,q^{a+bi})$ truncated at the given order. Total for every valid
 * Monomial; the argument $+q^0$ simply yields the zero series for
 * $n \geq 1$. */
QSeries poch_finite(Monomial arg, int base_exp, int n, int order);

/* Infinite Pochhammer symbol $(s\,q^a; q^b)_\infty$. Only factors whose
 * exponent is <= order contribute; every omitted factor is
 * $1 + O(q^{N+1})$. Requires a >= 1, or a = 0 with sign -1 (the factor 2);
 * the argument $+q^0$ raises DegenerateArgumentError. */
QSeries poch_inf(Monomial arg, int base_exp, int order);

/* Product of infinite Pochhammer symbols over a common base,
 * $(a_1, \dots, a_k; q^b)_\infty$. The empty list is the constant 1. */
QSeries poch_multi(const std::vector<Monomial>& args, int base_exp, int order);

/* Bilateral theta sum $\sum_{n=-\infty}^{\infty} s^n q^{c n^2}$ truncated
 * at the given order: every integer n with $c n^2 \leq N$ contributes. */
QSeries theta_sum(int sign_coeff, int quad_coeff, int order);

} // namespace qpart
