#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "qpart/bijection.hpp"
#include "qpart/errors.hpp"
#include "qpart/identities.hpp"
#include "qpart/overpartitions.hpp"
#include "qpart/partitions.hpp"

namespace {

constexpr int kEnumerationCap = 30; // families computed by exhaustive enumeration
constexpr int kFunceqOrderCap = 40; // bivariate tables are enumerated as well

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return 2;
}

// Hard cap on truncation orders; QPART_MAX_ORDER overrides the default.
bool read_max_order(long long& cap) {
    cap = 1000;
    const char* s = std::getenv("QPART_MAX_ORDER");
    if (s == nullptr || *s == '\0') return true;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (errno != 0 || end == s || *end != '\0' || v < 0) return false;
    cap = v;
    return true;
}

void emit_count_rows(const std::vector<qpart::Integer>& counts, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,count\n";
        for (std::size_t n = 0; n < counts.size(); ++n) {
            std::cout << n << ',' << counts[n].get_str() << '\n';
        }
    } else if (format == "json") {
        for (std::size_t n = 0; n < counts.size(); ++n) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["count"] = counts[n].get_str();
            std::cout << j.dump() << '\n';
        }
    } else {
        for (std::size_t n = 0; n < counts.size(); ++n) {
            std::cout << n << ' ' << counts[n].get_str() << '\n';
        }
    }
}

int emit_reports(const std::vector<qpart::VerificationReport>& reports, const std::string& format) {
    if (format == "csv") std::cout << qpart::report_csv_header() << '\n';
    bool all_pass = true;
    for (const auto& rep : reports) {
        if (format == "csv") {
            std::cout << qpart::report_csv_row(rep) << '\n';
        } else if (format == "json") {
            std::cout << qpart::report_json(rep) << '\n';
        } else {
            std::cout << qpart::report_text(rep) << '\n';
        }
        if (rep.pass && !rep.nonzero_checked) {
            std::cerr << "warning: vacuous window for " << rep.identity
                      << " (no nonzero coefficient beyond q^0 was compared)\n";
        }
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
}

int run_count(const std::string& family, int n_max, int k, int a, int i, long long cap,
              const std::string& format) {
    if (n_max < 0) return usage_error("--n-max must be >= 0");
    if (n_max > cap) return usage_error("--n-max exceeds the QPART_MAX_ORDER cap");
    std::vector<qpart::Integer> counts;
    if (family == "R") {
        counts = qpart::count_2crr_table(n_max, 1);
    } else if (family == "R2") {
        counts = qpart::count_2crr_table(n_max, 2);
    } else if (family == "R3") {
        counts = qpart::count_2crr_no_red1_table(n_max);
    } else if (family == "D") {
        if (k < 1 || a < 1) return usage_error("--family D requires --k and --a (with k >= a >= 1)");
        if (k < a) return usage_error("--family D requires k >= a");
        if (n_max > kEnumerationCap) return usage_error("--family D is enumerated; --n-max is capped at 30");
        counts.reserve(n_max + 1);
        for (int n = 0; n <= n_max; ++n) counts.push_back(qpart::count_D(k, a, n));
    } else if (family == "C") {
        if (k < 1 || i < 1) return usage_error("--family C requires --k and --i (with k >= i >= 1)");
        if (k < i) return usage_error("--family C requires k >= i");
        counts = qpart::count_C_table(k, i, n_max);
    } else {
        return usage_error("unknown family: " + family);
    }
    emit_count_rows(counts, format);
    return 0;
}

int run_verify(const std::string& identity, int order, int m_order, int k, int i, int n_max,
               bool corrupt, long long cap, const std::string& format) {
    if (corrupt && identity != "funceq") {
        return usage_error("--corrupt only applies to --identity funceq");
    }
    std::vector<qpart::VerificationReport> reports;
    if (identity == "funceq") {
        int n = (order >= 0) ? order : 30;
        if (n > kFunceqOrderCap) return usage_error("funceq tables are enumerated; --order is capped at 40");
        if (n < 1 || m_order < 1) return usage_error("funceq needs --m >= 1 and --order >= 1");
        qpart::XQSeries r1 = qpart::build_xq_table(1, m_order, n);
        qpart::XQSeries r2 = qpart::build_xq_table(2, m_order, n);
        if (corrupt) {
            // Deliberately break one entry inside the comparison window to
            // exercise the failure path end to end.
            r1.set_coeff(1, 1, r1.coeff(1, 1) + 1);
        }
        reports.push_back(qpart::verify_functional_equations_on(r1, r2));
    } else if (identity == "jtp") {
        int n = (order >= 0) ? order : 200;
        if (n > cap) return usage_error("--order exceeds the QPART_MAX_ORDER cap");
        for (int sign : {+1, -1}) {
            for (int shift : {0, 1}) {
                reports.push_back(qpart::verify_jtp(sign, shift, n));
            }
        }
    } else if (identity == "cd-equal") {
        if (n_max > kEnumerationCap) return usage_error("cd-equal is enumerated; --n-max is capped at 30");
        if (n_max < 0) return usage_error("--n-max must be >= 0");
        if (k > 0 && i > 0) {
            reports.push_back(qpart::verify_CD_equality(k, i, n_max));
        } else if (k == 0 && i == 0) {
            const std::pair<int, int> standard[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}};
            for (auto [kk, ii] : standard) {
                reports.push_back(qpart::verify_CD_equality(kk, ii, n_max));
            }
        } else {
            return usage_error("cd-equal needs both --k and --i, or neither for the standard set");
        }
    } else {
        int n = (order >= 0) ? order : 100;
        if (n > cap) return usage_error("--order exceeds the QPART_MAX_ORDER cap");
        if (n < 0) return usage_error("--order must be >= 0");
        if (identity == "thm13") {
            reports.push_back(qpart::verify_thm13(n));
        } else if (identity == "thm32") {
            reports.push_back(qpart::verify_thm32(n));
        } else if (identity == "sumsides") {
            reports = qpart::verify_sum_sides(n);
        } else {
            return usage_error("unknown identity: " + identity);
        }
    }
    return emit_reports(reports, format);
}

int run_bijection(int n, bool ascii, const std::string& format) {
    if (n < 0) return usage_error("--n must be >= 0");
    if (n > kEnumerationCap) return usage_error("bijection listing is enumerated; --n is capped at 30");
    auto colored = qpart::enumerate_2crr(n, 1);
    if (format == "csv") std::cout << "colored,image\n";
    for (const auto& p : colored) {
        qpart::Overpartition image = qpart::colored_to_over(p);
        std::string lhs = qpart::to_string(p);
        std::string rhs = qpart::to_string(image, ascii);
        if (format == "csv") {
            std::cout << '"' << lhs << "\",\"" << rhs << "\"\n";
        } else if (format == "json") {
            nlohmann::ordered_json j;
            j["colored"] = lhs;
            j["image"] = rhs;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << lhs << '\t' << rhs << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-colored Rogers-Ramanujan partition tables, identity checks, overpartition bijection"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "csv", "json"};

    auto* count = app.add_subcommand("count", "print a table of counts, one row per weight");
    std::string family;
    int n_max = 10;
    int count_k = 0, count_a = 0, count_i = 0;
    std::string count_format = "text";
    count->add_option("--family", family, "family tag: R, R2, R3, D, C")
        ->required()
        ->check(CLI::IsMember({"R", "R2", "R3", "D", "C"}));
    count->add_option("--n-max", n_max, "largest weight to tabulate (default 10)");
    count->add_option("--k", count_k, "gap parameter for D and C");
    count->add_option("--a", count_a, "plain-ones bound parameter for D");
    count->add_option("--i", count_i, "residue parameter for C");
    count->add_option("--format", count_format, "output format (default text)")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "verify an identity coefficient by coefficient");
    std::string identity;
    int order = -1;
    int m_order = 8;
    int verify_k = 0, verify_i = 0;
    int verify_n_max = 18;
    bool corrupt = false;
    std::string verify_format = "text";
    verify->add_option("--identity", identity, "identity tag")
        ->required()
        ->check(CLI::IsMember({"thm13", "thm32", "funceq", "jtp", "cd-equal", "sumsides"}));
    verify->add_option("--order", order, "truncation order (defaults: funceq 30, jtp 200, others 100)");
    verify->add_option("--m", m_order, "x-order for funceq (default 8)");
    verify->add_option("--k", verify_k, "family parameter for cd-equal");
    verify->add_option("--i", verify_i, "family parameter for cd-equal");
    verify->add_option("--n-max", verify_n_max, "largest weight for cd-equal (default 18)");
    verify->add_flag("--corrupt", corrupt, "corrupt one table entry first (funceq only; forces a fail)");
    verify->add_option("--format", verify_format, "output format (default text)")->check(CLI::IsMember(formats));

    auto* bijection = app.add_subcommand("bijection", "list colored partitions with their overpartition images");
    int bij_n = 0;
    bool ascii = false;
    std::string bij_format = "text";
    bijection->add_option("--n", bij_n, "weight to enumerate")->required();
    bijection->add_flag("--ascii", ascii, "render overlines as a trailing ~ instead of combining marks");
    bijection->add_option("--format", bij_format, "output format (default text)")->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    long long cap = 0;
    if (!read_max_order(cap)) {
        return usage_error("QPART_MAX_ORDER must be a nonnegative integer");
    }

    try {
        if (count->parsed()) {
            return run_count(family, n_max, count_k, count_a, count_i, cap, count_format);
        }
        if (verify->parsed()) {
            return run_verify(identity, order, m_order, verify_k, verify_i, verify_n_max, corrupt,
                              cap, verify_format);
        }
        return run_bijection(bij_n, ascii, bij_format);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
