#include "geoseries/feasibility.hpp"

#include <stdexcept>

namespace geoseries {

std::vector<std::string> FeasibilityReport::failed_constraints() const
{
    std::vector<std::string> failed;
    if (!passes_integrality)
        failed.emplace_back("integrality");
    if (!passes_square_constraint)
        failed.emplace_back("square");
    if (!passes_bound)
        failed.emplace_back("bound");
    if (!a_in_range)
        failed.emplace_back("a<n");
    return failed;
}

bool check_square_constraint(const LayeredParams& p)
{
    require_well_shaped(p);
    // With r = u/v: (1-r)^2 / (1-(1-r)^2) = (v-u)^2 / (u(2v-u)); compare to a/n
    // by cross-multiplication.
    const BigInt& u = p.r.num();
    const BigInt& v = p.r.den();
    const BigInt gap = v - u;
    return gap * gap * p.n == BigInt(p.a) * u * (2 * v - u);
}

bool check_bound(const Rational& r)
{
    if (r.sign() <= 0 || r >= Rational(1))
        throw std::invalid_argument("bound check needs 0 < r < 1, got " + r.str());
    BigInt gap = r.den() - r.num();
    return 2 * gap * gap < r.den() * r.den();
}

LayeredParams derive_config(std::int64_t m)
{
    if (m < 2)
        throw std::invalid_argument("candidate m=" + std::to_string(m) + " must be >= 2 (m = 1 means r = 1)");
    if (m > max_candidate_m)
        throw std::invalid_argument("candidate m=" + std::to_string(m) + " exceeds " + std::to_string(max_candidate_m));
    return LayeredParams{2 * m - 1, (m - 1) * (m - 1), Rational(BigInt(1), BigInt(m))};
}

FeasibilityReport assess_candidate(std::int64_t m)
{
    if (m < 2 || m > max_candidate_m)
        derive_config(m); // throws with the diagnostic

    FeasibilityReport report;
    report.candidate_m = m;
    report.r = Rational(BigInt(1), BigInt(m));

    // Triangles per layer = layer area / small-triangle area = 2/r - 1, and
    // a = 1/r^2 + 1 - 2/r = (1-r)^2 / r^2. With r = u/v both are integer
    // quotients.
    const BigInt& u = report.r.num();
    const BigInt& v = report.r.den();
    report.passes_integrality = (2 * v) % u == 0;
    if (!report.passes_integrality)
        return report;
    const BigInt n = 2 * v / u - 1;
    const BigInt gap = v - u;
    const BigInt a_num = gap * gap;
    const BigInt a_den = u * u;
    report.derived_n = n.convert_to<std::int64_t>();
    if (a_num % a_den == 0)
        report.derived_a = BigInt(a_num / a_den).convert_to<std::int64_t>();

    if (report.derived_a) {
        LayeredParams p{*report.derived_n, *report.derived_a, report.r};
        report.passes_square_constraint = check_square_constraint(p);
        report.a_in_range = *report.derived_a >= 1 && *report.derived_a < *report.derived_n;
    }
    report.passes_bound = check_bound(report.r);
    report.feasible = report.passes_integrality && report.passes_square_constraint && report.passes_bound &&
                      report.a_in_range;
    return report;
}

std::vector<FeasibilityReport> enumerate_feasible(std::int64_t max_m)
{
    if (max_m < 2)
        throw std::invalid_argument("max_m must be >= 2");
    if (max_m > max_candidate_m)
        throw std::invalid_argument("max_m exceeds " + std::to_string(max_candidate_m));
    std::vector<FeasibilityReport> reports;
    reports.reserve(static_cast<std::size_t>(max_m - 1));
    for (std::int64_t m = 2; m <= max_m; ++m)
        reports.push_back(assess_candidate(m));
    return reports;
}

} // namespace geoseries
