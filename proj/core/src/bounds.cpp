#include "minimalnets/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace minimalnets {

namespace {

// Closed form, also valid (and zero) at n = 0, 1.
std::int64_t f3_raw(int n) {
    const std::int64_t k = n / 6;
    switch (n % 6) {
        case 0:
            return 6 * k * k + 6 * k;
        case 1:
            return 6 * k * k + 8 * k;
        case 2:
            return 6 * k * k + 10 * k + 2;
        case 3:
            return 6 * k * k + 12 * k + 4;
        case 4:
            return 6 * k * k + 14 * k + 6;
        default:
            return 6 * k * k + 16 * k + 8;
    }
}

}  // namespace

std::int64_t f3(int n) {
    if (n < 2) throw std::out_of_range("f3 needs n >= 2, got " + std::to_string(n));
    return f3_raw(n);
}

Rational f3_upper(int n) {
    if (n < 2) throw std::out_of_range("upper bound needs n >= 2, got " + std::to_string(n));
    const std::int64_t m = n;
    return Rational(m * m, 6) + Rational(m);
}

std::int64_t floor_of(const Rational& r) {
    auto q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

std::int64_t f4(int n) {
    if (n < 0) throw std::out_of_range("f4 needs n >= 0");
    if (n % 2 != 0) return 0;
    const std::int64_t h = n / 2;
    return h * (h - 1) / 2 + n;
}

std::int64_t forest_count(int n, int k) {
    if (k < 1 || 2 * k > n) {
        throw std::out_of_range("forest needs 1 <= k <= n/2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    return 2 * static_cast<std::int64_t>(n) - 2 * k;
}

CertificateReport verify_recursion(int nmax) {
    if (nmax < 2) throw std::out_of_range("verify_recursion needs nmax >= 2");
    CertificateReport report;
    for (int n = 2; n <= nmax; ++n) {
        RecursionRow row;
        row.n = n;
        row.f3 = f3(n);
        row.upper = f3_upper(n);
        row.floor_equal = row.f3 == floor_of(row.upper);
        row.trivial = 2 * n - 2;
        if (n >= 6) row.padded = f3_raw(n - 6) + 2 * n;
        if (n >= 10) {
            std::int64_t best = 0;
            for (int k = 6; k <= n - 4; ++k) best = std::max(best, f3_raw(k) + f3_raw(n - k + 2));
            row.split = best;
        }

        const std::int64_t values[3] = {row.trivial, row.padded.value_or(-1), row.split.value_or(-1)};
        const std::int64_t best = *std::max_element(values, values + 3);
        row.witness = 0;
        for (int b = 0; b < 3 && row.witness == 0; ++b) {
            if (values[b] == row.f3) row.witness = b + 1;
        }
        if (row.witness == 0) row.witness = static_cast<int>(std::find(values, values + 3, best) - values) + 1;

        auto fail = [&](const std::string& what) {
            report.ok = false;
            report.failures.push_back("n=" + std::to_string(n) + ": " + what + " (f3=" + std::to_string(row.f3) +
                                      ", branches " + std::to_string(values[0]) + "/" + std::to_string(values[1]) +
                                      "/" + std::to_string(values[2]) + ")");
        };
        if (row.f3 > best) fail("f3 exceeds every branch");
        if (row.f3 > floor_of(row.upper)) fail("f3 exceeds the quadratic bound");
        // Below n = 6 the padded branch does not exist; the tree branch carries equality.
        if (row.floor_equal && n >= 6 && row.witness != 2) fail("equality not attained by the padded branch");
        if (row.upper == Rational(row.f3) && row.witness != 2) fail("exact equality not attained by the padded branch");
        report.rows.push_back(row);
    }
    return report;
}

std::vector<BoundRow> bound_table(int degree, int nmax) {
    if (degree != 3 && degree != 4) throw std::invalid_argument("degree must be 3 or 4");
    std::vector<BoundRow> rows;
    if (degree == 3) {
        for (const auto& r : verify_recursion(std::max(nmax, 2)).rows) {
            if (r.n <= nmax) rows.push_back({r.n, r.f3, r.upper, r.witness});
        }
        return rows;
    }
    for (int n = 2; n <= nmax; ++n) rows.push_back({n, f4(n), Rational(0), 0});
    return rows;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace minimalnets
