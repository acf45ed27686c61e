#include "znorm/theory.hpp"

#include <cmath>
#include <string>

#include "znorm/errors.hpp"

namespace znorm {

namespace {

constexpr double kBoundTolerance = 1e-9;

void require_order(const PopulationCumulants& pop, int order) {
    if (pop.finite_moment_order < order) {
        throw MomentOrderTooLow("moment of order " + std::to_string(order) +
                                " does not exist for this distribution");
    }
}

}  // namespace

double rho2(const PopulationCumulants& pop, std::int64_t n) {
    require_order(pop, 4);
    if (n < 2) {
        throw InvalidN("rho2 requires n >= 2");
    }
    const auto nd = static_cast<double>(n);
    return pop.gamma / std::sqrt(pop.kappa + 3.0 - (nd - 3.0) / (nd - 1.0));
}

double rho2_limit(const PopulationCumulants& pop) {
    require_order(pop, 4);
    if (pop.kappa <= -2.0) {
        throw OutOfDomain("rho2 limit requires kappa > -2");
    }
    return pop.gamma / std::sqrt(pop.kappa + 2.0);
}

double rho3(const PopulationCumulants& pop, std::int64_t n) {
    require_order(pop, 6);
    if (n < 3) {
        throw InvalidN("rho3 requires n >= 3");
    }
    const auto nd = static_cast<double>(n);
    const double radicand = pop.lambda +
                            9.0 * nd / (nd - 1.0) * (pop.kappa + pop.gamma * pop.gamma) +
                            6.0 * nd * nd / ((nd - 1.0) * (nd - 2.0));
    return pop.kappa / std::sqrt(radicand);
}

double rho3_limit(const PopulationCumulants& pop) {
    require_order(pop, 6);
    return pop.kappa / std::sqrt(pop.lambda + 9.0 * (pop.kappa + pop.gamma * pop.gamma) + 6.0);
}

CumulantBounds check_cumulant_bounds(const PopulationCumulants& pop) {
    require_order(pop, 4);
    CumulantBounds b;
    b.slack_i = pop.kappa + 2.0 - pop.gamma * pop.gamma;
    b.holds_i = b.slack_i >= -kBoundTolerance;
    if (pop.finite_moment_order >= 6) {
        b.slack_ii = pop.lambda + 9.0 * (pop.kappa + pop.gamma * pop.gamma) + 6.0 -
                     pop.kappa * pop.kappa;
        b.holds_ii = b.slack_ii >= -kBoundTolerance;
        b.ii_checked = true;
    }
    return b;
}

}  // namespace znorm
