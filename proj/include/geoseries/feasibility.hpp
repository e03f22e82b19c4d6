#pragma once

// Which layer ratios admit a layered-triangle picture?
//
// A picture needs the colored-layer series to be geometric in its own first
// term (the square constraint), a whole number of small triangles per layer
// (2/r integral), and 1 <= a < n. With r = 1/m these force n = 2m - 1 and
// a = (m - 1)^2, and a < n only holds for m = 2 and m = 3.

#include "geoseries/construction.hpp"
#include "geoseries/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geoseries {

struct FeasibilityReport {
    std::int64_t candidate_m = 0;
    Rational r;
    bool passes_integrality = false;
    std::optional<std::int64_t> derived_n;
    std::optional<std::int64_t> derived_a;
    bool passes_square_constraint = false;
    bool passes_bound = false;
    bool a_in_range = false;
    bool feasible = false;

    /// Names of the constraints that failed, in a fixed order.
    std::vector<std::string> failed_constraints() const;
};

/// (1-r)^2 / (1-(1-r)^2) == a/n, tested exactly. Needs only a well-shaped p.
bool check_square_constraint(const LayeredParams& p);

/// r > 1 - 1/sqrt(2), decided as 2(q-p)^2 < q^2 for r = p/q.
/// Throws std::invalid_argument unless 0 < r < 1.
bool check_bound(const Rational& r);

/// (n, a, r) = (2m-1, (m-1)^2, 1/m). Does not promise a < n.
/// Throws std::invalid_argument for m < 2 or m too large for 64-bit a.
LayeredParams derive_config(std::int64_t m);

/// Full diagnostic for the candidate r = 1/m.
FeasibilityReport assess_candidate(std::int64_t m);

/// One report per m in [2, max_m], ordered by m.
std::vector<FeasibilityReport> enumerate_feasible(std::int64_t max_m);

/// Largest m accepted by derive_config.
inline constexpr std::int64_t max_candidate_m = 3'000'000'000;

} // namespace geoseries
