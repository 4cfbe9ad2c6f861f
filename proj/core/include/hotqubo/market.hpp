#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hotqubo/numerics.hpp"

namespace hotqubo {

/// Estimated market data for n assets: prices as of the investment date,
/// the per-period return history, and the sample moments derived from it.
/// sigma is always the regularized covariance (it passes the Cholesky
/// certificate).
struct AssetUniverse {
    std::vector<std::string> tickers;
    Vector prices;                  // strictly positive, one per ticker
    std::vector<Vector> returns;    // T rows of n per-period simple returns
    Vector mu;                      // sample mean return
    SymMatrix sigma;                // regularized sample covariance

    std::size_t size() const { return tickers.size(); }
    std::size_t periods() const { return returns.size(); }
};

/// Investor parameters. risk_free is a per-period rate matching the return
/// sampling frequency; no annualization is applied anywhere in the library.
struct Calibration {
    double budget = 250000.0;
    double risk_free = 0.0;
    double gamma = 3.0;
    double kappa_scale = 50.0;  // kappa_tilde = kappa_scale * gamma / budget

    void validate() const;  // throws ConfigError
};

/// The problem data expressed in integer units of each asset instead of
/// wealth fractions.
struct ScaledProblem {
    Vector mu_tilde_f;      // (mu - r_f 1) elementwise-times prices
    SymMatrix sigma_tilde;  // diag(p) Sigma diag(p)
    double gamma_tilde;     // gamma / budget
    double kappa_tilde;     // kappa_scale * gamma / budget
};

struct PortfolioWeights {
    Vector weights;            // x_i p_i / budget
    double risk_free_weight;   // 1 - sum of weights
};

/// Parses the two CSV inputs (returns: wide format with a leading period
/// column; prices: ticker,price) and estimates mu and sigma. The ticker
/// sets of the two files must match; universe order follows the returns
/// header. sigma is the sample covariance (divisor T-1) passed through
/// regularize().
AssetUniverse load_universe(std::istream& returns_csv, std::istream& prices_csv);

/// Rebuilds a universe from raw parts, re-estimating the moments.
AssetUniverse make_universe(std::vector<std::string> tickers, Vector prices,
                            std::vector<Vector> returns);

/// Keeps the first n tickers of u and re-estimates moments on the sliced
/// return history.
AssetUniverse take_first(const AssetUniverse& u, std::size_t n);

/// Shrinks toward avgvar*I, where avgvar is the mean diagonal entry, with
/// the smallest delta in {0, 1e-6, 1e-4, 1e-2, 0.1} that yields a positive
/// definite result. Degenerate inputs that fail the whole ladder fall back
/// to 1e-8 * I.
SymMatrix regularize(const SymMatrix& sigma_raw);

/// Converts the weight-space problem data into integer-unit space.
ScaledProblem scale_to_units(const AssetUniverse& u, const Calibration& cal);

/// Near-equal-weight starting book: x0_i = floor((budget/n) / price_i).
std::vector<long long> initial_portfolio(const AssetUniverse& u, const Calibration& cal);

/// Weights w_i = x_i p_i / budget; the unused remainder is the risk-free
/// weight.
PortfolioWeights weights_from_units(const std::vector<long long>& units,
                                    const AssetUniverse& u, const Calibration& cal);

}  // namespace hotqubo
