#include "qpart/xqseries.hpp"

#include <string>
#include <utility>

namespace qpart {

XQSeries::XQSeries(int x_order, int q_order) : x_order_(x_order), q_order_(q_order) {
    if (x_order < 0 || q_order < 0)
        throw PreconditionError("XQSeries orders must be >= 0");
    coeffs_.resize(static_cast<size_t>(x_order + 1) * (q_order + 1));
}

XQSeries XQSeries::one(int x_order, int q_order) {
    XQSeries s(x_order, q_order);
    s.coeffs_[0] = 1;
    return s;
}

const Integer& XQSeries::coeff(int m, int n) const {
    if (m < 0 || m > x_order_ || n < 0 || n > q_order_)
        throw std::out_of_range("XQSeries index (" + std::to_string(m) + ", " + std::to_string(n) +
                                ") out of range");
    return coeffs_[index(m, n)];
}

void XQSeries::set_coeff(int m, int n, Integer value) {
    if (m < 0 || m > x_order_ || n < 0 || n > q_order_)
        throw std::out_of_range("XQSeries index (" + std::to_string(m) + ", " + std::to_string(n) +
                                ") out of range");
    coeffs_[index(m, n)] = std::move(value);
}

XQSeries XQSeries::xq_shift() const {
    XQSeries out(x_order_, q_order_);
    for (int m = 0; m <= x_order_; ++m)
        for (int n = m; n <= q_order_; ++n) out.coeffs_[index(m, n)] = coeffs_[index(m, n - m)];
    return out;
}

XQSeries XQSeries::xq_mul_xq() const {
    XQSeries out(x_order_, q_order_);
    for (int m = 1; m <= x_order_; ++m)
        for (int n = 1; n <= q_order_; ++n) out.coeffs_[index(m, n)] = coeffs_[index(m - 1, n - 1)];
    return out;
}

void XQSeries::check_same_dims(const XQSeries& rhs) const {
    if (x_order_ != rhs.x_order_ || q_order_ != rhs.q_order_)
        throw OrderMismatchError("XQSeries dimensions differ: (" + std::to_string(x_order_) + ", " +
                                 std::to_string(q_order_) + ") vs (" + std::to_string(rhs.x_order_) +
                                 ", " + std::to_string(rhs.q_order_) + ")");
}

XQSeries& XQSeries::operator+=(const XQSeries& rhs) {
    check_same_dims(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

XQSeries& XQSeries::operator-=(const XQSeries& rhs) {
    check_same_dims(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

} // namespace qpart
