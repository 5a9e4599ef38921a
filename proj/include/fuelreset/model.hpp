#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace fuelreset {

inline constexpr int kHoursPerDay = 24;

// 24 clock-hour values (prices, shares, weights, ...), index = hour of day.
using HourlyValues = std::array<double, kHoursPerDay>;

// Two-station pricing primitives: marginal cost c, transport cost tau, and
// the optional reservation price v of price-insensitive consumers. v is only
// consulted by the interiority diagnostic, never by the pricing formulas.
struct ModelParams {
    double c = 0.0;    // currency per liter
    double tau = 0.0;  // currency per liter
    std::optional<double> v;

    void validate() const;  // throws std::invalid_argument
};

// Hourly share of price-sensitive consumers, each in (0, 1].
struct LambdaProfile {
    HourlyValues values{};
    void validate() const;
};

// Hourly demand weights: strictly positive, sum to 1.
struct WeightProfile {
    HourlyValues values{};
    void validate() const;
    // Scales raw nonnegative values to sum 1. Throws if any value is <= 0.
    static WeightProfile normalized(const HourlyValues& raw);
};

inline WeightProfile uniform_weights() {
    WeightProfile w;
    w.values.fill(1.0 / kHoursPerDay);
    return w;
}

// Maximal run of consecutive within-cycle hours sharing one equilibrium price.
struct Block {
    int start_k = 0;  // within-cycle index, inclusive
    int end_k = 0;    // within-cycle index, inclusive
    double weight_sum = 0.0;
    double lambda_bar = 0.0;
    double price = 0.0;

    int length() const { return end_k - start_k + 1; }
};

// Ordered blocks covering within-cycle indices 0..23; prices strictly
// decreasing across adjacent blocks.
struct BlockPartition {
    int reset_hour = 0;
    std::vector<Block> blocks;
};

// Constrained symmetric equilibrium path for one reset hour. prices_clock is
// indexed by clock hour; read in within-cycle order it is weakly decreasing.
struct EquilibriumPath {
    int reset_hour = 0;
    HourlyValues prices_clock{};
    BlockPartition partition;
};

struct InteriorityReport {
    bool has_cap = false;
    double cap = 0.0;  // meaningful only when has_cap
    double max_price = 0.0;
    int max_clock_hour = 0;
    bool interior = true;  // max_price <= cap, or no cap configured
};

// Within-cycle index convention: hour k after reset r is clock hour (r+k)%24.
inline int clock_hour_of(int reset_hour, int k) {
    return (reset_hour + k) % kHoursPerDay;
}

HourlyValues rotate_to_cycle(const HourlyValues& clock_values, int reset_hour);

// Symmetric equilibrium price for one unrestricted hour: c + tau/lambda.
double unrestricted_price(const ModelParams& params, double lambda);

// All 24 unrestricted hourly prices, clock order.
HourlyValues unrestricted_path(const ModelParams& params, const LambdaProfile& lambdas);

// Common price of a block forced to share one price:
// c + tau / (weighted mean of lambda over the block).
double block_price(const ModelParams& params, std::span<const double> lambdas,
                   std::span<const double> weights);

// Weighted pool-adjacent-violators on arbitrary-length sequences: merges
// adjacent blocks until the weighted block means are weakly increasing.
// Blocks whose means tie within kPoolMergeTol are merged too, so terminal
// means are strictly increasing.
inline constexpr double kPoolMergeTol = 1e-12;

struct FitBlock {
    int start = 0;
    int end = 0;  // inclusive
    double weight_sum = 0.0;
    double weighted_value_sum = 0.0;

    double mean() const { return weighted_value_sum / weight_sum; }
};

std::vector<FitBlock> pool_adjacent_violators(std::span<const double> values,
                                              std::span<const double> weights);

// Constrained equilibrium path for a reset hour: rotate lambdas/weights into
// within-cycle order, pool adjacent violators on lambda (observation weights
// w), and price each terminal block.
EquilibriumPath solve_constrained_path(const ModelParams& params,
                                       const LambdaProfile& lambdas_clock,
                                       const WeightProfile& weights_clock,
                                       int reset_hour);

// Sum_t w_t * p_t over clock hours (rotation-invariant pairing).
double weighted_average_price(const HourlyValues& prices_clock, const WeightProfile& weights);
double weighted_average_price(const EquilibriumPath& path, const WeightProfile& weights);

// Lowest weighted average price any reset hour can induce: c + tau / sum(w*lambda).
double flat_lower_bound(const ModelParams& params, const LambdaProfile& lambdas,
                        const WeightProfile& weights);

// Reports whether the path stays below the reservation price. A binding cap
// is reported, never clamped.
InteriorityReport check_interiority(const EquilibriumPath& path, const ModelParams& params);

}  // namespace fuelreset
