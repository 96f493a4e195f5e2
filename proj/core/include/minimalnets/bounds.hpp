#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace minimalnets {

using Rational = boost::rational<std::int64_t>;

// Largest vertex count of a 3-regular minimal graph on n >= 2 attaching points.
std::int64_t f3(int n);

// n^2/6 + n.
Rational f3_upper(int n);

std::int64_t floor_of(const Rational& r);

// Same for degree 4; zero for odd n.
std::int64_t f4(int n);

// Vertex count of a minimal forest with k components on n attaching points.
std::int64_t forest_count(int n, int k);

struct RecursionRow {
    int n = 0;
    std::int64_t f3 = 0;
    Rational upper;
    bool floor_equal = false;  // f3(n) == floor(upper)
    std::int64_t trivial = 0;  // branch 1: 2n - 2
    std::optional<std::int64_t> padded;   // branch 2: f3(n-6) + 2n, n >= 6
    std::optional<std::int64_t> split;    // branch 3: max_k f3(k) + f3(n-k+2), n >= 10
    int witness = 0;                      // 1, 2 or 3
};

struct CertificateReport {
    bool ok = true;
    std::vector<RecursionRow> rows;
    std::vector<std::string> failures;
};

// Checks f3 against the three recursive inequalities for every n <= nmax.
CertificateReport verify_recursion(int nmax);

struct BoundRow {
    int n = 0;
    std::int64_t value = 0;
    Rational upper;  // degree 3 only; zero otherwise
    int witness = 0; // degree 3 only
};

std::vector<BoundRow> bound_table(int degree, int nmax);

std::string to_string(const Rational& r);

}  // namespace minimalnets
