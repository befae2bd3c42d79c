#include "qpart/qseries.hpp"

#include <string>
#include <utility>

namespace qpart {

namespace {

void check_order(int order) {
    if (order < 0)
        throw PreconditionError("truncation order must be >= 0, got " + std::to_string(order));
}

void check_monomial(const Monomial& arg) {
    if (arg.sign != 1 && arg.sign != -1)
        throw PreconditionError("Monomial sign must be +1 or -1, got " + std::to_string(arg.sign));
    if (arg.exponent < 0)
        throw PreconditionError("Monomial exponent must be >= 0, got " + std::to_string(arg.exponent));
}

void check_base(int base_exp) {
    if (base_exp < 1)
        throw PreconditionError("Pochhammer base exponent must be >= 1, got " + std::to_string(base_exp));
}

/* In-place multiplication by the factor $1 - s\,q^e$, $e \geq 1$.
 * Processing high to low keeps it a single pass. */
void mul_factor(std::vector<Integer>& c, int sign, int e) {
    const int n = static_cast<int>(c.size()) - 1;
    if (sign > 0) {
        for (int i = n; i >= e; --i) c[i] -= c[i - e];
    } else {
        for (int i = n; i >= e; --i) c[i] += c[i - e];
    }
}

} // namespace

QSeries::QSeries(int order) {
    check_order(order);
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::from_coeffs(std::vector<Integer> coeffs, int order) {
    check_order(order);
    if (static_cast<int>(coeffs.size()) > order + 1)
        throw LengthError("coefficient sequence of length " + std::to_string(coeffs.size()) +
                          " exceeds order " + std::to_string(order));
    QSeries s(order);
    for (size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = std::move(coeffs[i]);
    return s;
}

const Integer& QSeries::coeff(int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " out of range for order " + std::to_string(order()));
    return coeffs_[static_cast<size_t>(n)];
}

void QSeries::set_coeff(int n, Integer value) {
    if (n < 0 || n > order())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " out of range for order " + std::to_string(order()));
    coeffs_[static_cast<size_t>(n)] = std::move(value);
}

bool QSeries::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    if (order() != rhs.order())
        throw OrderMismatchError("series orders differ: " + std::to_string(order()) + " vs " +
                                 std::to_string(rhs.order()));
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    if (order() != rhs.order())
        throw OrderMismatchError("series orders differ: " + std::to_string(order()) + " vs " +
                                 std::to_string(rhs.order()));
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries out(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
    if (lhs.order() != rhs.order())
        throw OrderMismatchError("series orders differ: " + std::to_string(lhs.order()) + " vs " +
                                 std::to_string(rhs.order()));
    const int n = lhs.order();
    QSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

QSeries QSeries::inverse() const {
    const Integer& a0 = coeffs_[0];
    if (a0 != 1 && a0 != -1)
        throw NotInvertibleError("constant term must be +1 or -1 to invert");
    const int n = order();
    QSeries out(n);
    /* If $1/\sum a_k q^k = \sum b_k q^k$ with $a_0 = \pm 1$, then
     * $b_0 = a_0$ and $b_m = -a_0 \sum_{k=1}^{m} a_k b_{m-k}$. */
    out.coeffs_[0] = a0;
    for (int m = 1; m <= n; ++m) {
        Integer acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (coeffs_[k] != 0) acc += coeffs_[k] * out.coeffs_[m - k];
        }
        out.coeffs_[m] = (a0 == 1) ? Integer(-acc) : acc;
    }
    return out;
}

QSeries QSeries::shifted_up(int k) const {
    if (k < 0) throw PreconditionError("shift must be >= 0, got " + std::to_string(k));
    const int n = order();
    QSeries out(n);
    for (int i = 0; i + k <= n; ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
}

QSeries poch_finite(Monomial arg, int base_exp, int n, int order) {
    check_monomial(arg);
    check_base(base_exp);
    check_order(order);
    if (n < 0) throw PreconditionError("Pochhammer subscript must be >= 0, got " + std::to_string(n));

    std::vector<Integer> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (int i = 0; i < n; ++i) {
        const int e = arg.exponent + base_exp * i;
        if (e > order) break;
        if (e == 0) {
            /* Factor $1 - s$: zero for $+q^0$, two for $-q^0$. */
            const Integer scale = 1 - arg.sign;
            for (auto& x : c) x *= scale;
        } else {
            mul_factor(c, arg.sign, e);
        }
    }
    return QSeries::from_coeffs(std::move(c), order);
}

QSeries poch_inf(Monomial arg, int base_exp, int order) {
    check_monomial(arg);
    check_base(base_exp);
    check_order(order);
    if (arg.exponent == 0 && arg.sign == 1)
        throw DegenerateArgumentError("(q^0; q^b) infinite product is identically zero");

    std::vector<Integer> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (int e = arg.exponent; e <= order; e += base_exp) {
        if (e == 0) {
            for (auto& x : c) x *= 2; // $(1 - (-1)q^0) = 2$
        } else {
            mul_factor(c, arg.sign, e);
        }
    }
    return QSeries::from_coeffs(std::move(c), order);
}

QSeries poch_multi(const std::vector<Monomial>& args, int base_exp, int order) {
    QSeries out = QSeries::one(order);
    for (const auto& arg : args) out = out * poch_inf(arg, base_exp, order);
    return out;
}

QSeries theta_sum(int sign_coeff, int quad_coeff, int order) {
    check_order(order);
    if (sign_coeff != 1 && sign_coeff != -1)
        throw PreconditionError("theta sign must be +1 or -1, got " + std::to_string(sign_coeff));
    if (quad_coeff < 1)
        throw PreconditionError("theta quadratic coefficient must be >= 1, got " +
                                std::to_string(quad_coeff));

    QSeries out(order);
    /* Terms n and -n share the exponent $c n^2$ and the sign $s^n$. */
    for (int n = 0; quad_coeff * n * n <= order; ++n) {
        const int e = quad_coeff * n * n;
        int v = (sign_coeff == -1 && n % 2 == 1) ? -1 : 1;
        if (n > 0) v *= 2;
        out.set_coeff(e, out.coeff(e) + v);
    }
    return out;
}

} // namespace qpart
