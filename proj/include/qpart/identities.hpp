#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/qseries.hpp"
#include "qpart/xqseries.hpp"

namespace qpart {

// Position of a coefficient: n is the q exponent; m is the x exponent for
// bivariate checks and -1 otherwise.
struct MismatchIndex {
    int n = 0;
    int m = -1;

    friend bool operator==(const MismatchIndex&, const MismatchIndex&) = default;
};

struct Mismatch {
    MismatchIndex index;
    Integer lhs;
    Integer rhs;
};

// Outcome of one verification.  pass holds iff first_mismatch is empty.
// nonzero_checked records whether at least one compared coefficient beyond
// q^0 was nonzero; a pass with nonzero_checked = false means the truncation
// window was vacuous and callers should surface a warning.
struct VerificationReport {
    std::string identity;
    int order = 0;
    int x_order = -1; // M for bivariate checks, -1 otherwise
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    bool nonzero_checked = false;
    long long elapsed_ms = 0;
};

// Series builders.  Each returns the named side truncated at the given
// order, with exact integer coefficients throughout.

// $(-q)_\infty (q^2,q^2,q^4;q^4)_\infty / (q)_\infty$
QSeries product_side_thm13(int order);

// $(-q)_\infty (q^1,q^3,q^4;q^4)_\infty / (q)_\infty$
QSeries product_side_thm32(int order);

// $\sum_{n\ge 0} (-1)^n [ q^{n(2n+1)}(-1;q)_n(-q^{n+1};q)_\infty
//   - q^{(n+1)(2n+2)}(-1;q)_{n+1}(-q^{n+2};q)_\infty ]
//   / [ (q)_n (q^{n+1};q)_\infty ]$
QSeries sum_side_R1(int order);

// Same shape with exponents $n(2n+2)$ and $(n+1)(2n+1)$.
QSeries sum_side_R2(int order);

// $2\frac{(-q)_\infty}{(q)_\infty}\sum_{n\ge 0}(-1)^n q^{n(2n+1)}
//   (\frac{1}{1+q^n}-\frac{q^{3n+2}}{1+q^{n+1}})$, with the n = 0 term
// cancelled against the leading 2 before expansion so no halves appear.
QSeries simplified_sum_R1(int order);

// Same with weight exponent $n(2n+2)$ and inner shift $q^{n+1}$.
QSeries simplified_sum_R2(int order);

// $\frac{(-q)_\infty}{(q)_\infty}\sum_{n=-\infty}^{\infty}(-1)^n q^{2n^2}$
QSeries theta_form_R1(int order);

// Verifications.  Each returns a filled report; none of them throw on a
// mere coefficient mismatch, only on precondition violations.

// Four-way check at the given order: sum, simplified and theta forms all
// against the product, then the product against enumerated counts on the
// low range of n.
VerificationReport verify_thm13(int order);

// Three-way check: product coefficients against the no-red-1 counts and
// against the overpartition family with k = 2, a = 1.
VerificationReport verify_thm32(int order);

// Both displayed sums against their simplified forms, and the second sum
// against counts of partitions with parts >= 2.  One report per sum.
std::vector<VerificationReport> verify_sum_sides(int order);

// Checks R_2(x) = R_1(xq), the series identity
// R_1(x) - R_2(x) = xq R_1(xq) + xq R_2(xq), and the coefficient recurrence
// r_1(m,n) - r_2(m,n) = r_1(m-1,n-m) + r_2(m-1,n-m) on tables built by
// enumeration, restricted to m <= M, n <= N - M where truncation cannot
// corrupt entries.
VerificationReport verify_functional_equations(int m_order, int order);

// Same checks on caller-supplied tables (must have equal dimensions);
// used by negative-control tests with deliberately corrupted tables.
VerificationReport verify_functional_equations_on(const XQSeries& r1, const XQSeries& r2);

// Compares $\sum_n sign^n q^{n^2 + k_shift\, n}$ against
// $\prod_{n\ge 0}(1-q^{2n+2})(1+sign\,q^{2n+1+k_shift})(1+sign\,q^{2n+1-k_shift})$.
// k_shift outside {0, 1} would put negative exponents in range and raises
// UnsupportedSpecializationError.  sign = -1 with k_shift = 1 makes both
// sides vanish identically; the report passes with nonzero_checked = false.
VerificationReport verify_jtp(int sign, int k_shift, int order);

// Pointwise comparison of the residue-condition counts against the
// gap-condition counts for n <= n_max.  Requires k >= i >= 1.
VerificationReport verify_CD_equality(int k, int i, int n_max);

// Report rendering.
std::string report_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

} // namespace qpart
