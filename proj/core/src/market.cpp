#include "hotqubo/market.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace hotqubo {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
    const std::string s = trim(raw);
    if (s.empty()) {
        throw MalformedCell("empty cell at row " + std::to_string(row) +
                            ", column " + std::to_string(col));
    }
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size() || !std::isfinite(v)) {
        throw MalformedCell("cannot parse '" + s + "' at row " +
                            std::to_string(row) + ", column " +
                            std::to_string(col));
    }
    return v;
}

// Reads non-empty lines, tolerating a UTF-8 BOM and CRLF endings.
std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
            line.erase(0, 3);
        }
        first = false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

struct Moments {
    Vector mu;
    SymMatrix sigma_raw;
};

Moments estimate_moments(const std::vector<Vector>& returns, std::size_t n) {
    const std::size_t t = returns.size();
    Moments m;
    m.mu.assign(n, 0.0);
    for (const auto& row : returns) {
        for (std::size_t j = 0; j < n; ++j) m.mu[j] += row[j];
    }
    for (std::size_t j = 0; j < n; ++j) m.mu[j] /= static_cast<double>(t);

    m.sigma_raw = SymMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < t; ++k) {
                s += (returns[k][i] - m.mu[i]) * (returns[k][j] - m.mu[j]);
            }
            m.sigma_raw.set(i, j, s / static_cast<double>(t - 1));
        }
    }
    return m;
}

}  // namespace

void Calibration::validate() const {
    if (!(budget > 0.0)) throw ConfigError("budget must be positive");
    if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
    if (!(kappa_scale >= 0.0)) throw ConfigError("kappa-scale must be non-negative");
    if (!std::isfinite(risk_free)) throw ConfigError("risk-free rate must be finite");
}

AssetUniverse make_universe(std::vector<std::string> tickers, Vector prices,
                            std::vector<Vector> returns) {
    const std::size_t n = tickers.size();
    if (prices.size() != n) {
        throw DimensionMismatch("make_universe: prices/tickers length mismatch");
    }
    if (returns.size() < 2) {
        throw TooFewPeriods("need at least 2 return periods, got " +
                            std::to_string(returns.size()));
    }
    for (const auto& row : returns) {
        if (row.size() != n) {
            throw DimensionMismatch("make_universe: return row width mismatch");
        }
        check_finite(row, "returns");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(prices[i] > 0.0) || !std::isfinite(prices[i])) {
            throw NonPositivePrice("price for " + tickers[i] + " is not positive");
        }
    }

    AssetUniverse u;
    u.tickers = std::move(tickers);
    u.prices = std::move(prices);
    u.returns = std::move(returns);
    Moments m = estimate_moments(u.returns, n);
    u.mu = std::move(m.mu);
    u.sigma = regularize(m.sigma_raw);
    return u;
}

AssetUniverse load_universe(std::istream& returns_csv, std::istream& prices_csv) {
    const auto rlines = read_lines(returns_csv);
    if (rlines.empty()) throw MalformedCell("returns table has no header row");
    const auto header = split_csv_line(rlines[0]);
    if (header.size() < 2) {
        throw MalformedCell("returns header needs a period column and at least one ticker");
    }
    std::vector<std::string> tickers(header.begin() + 1, header.end());
    for (auto& t : tickers) t = trim(t);
    const std::size_t n = tickers.size();
    {
        std::set<std::string> uniq(tickers.begin(), tickers.end());
        if (uniq.size() != n) {
            throw TickerMismatch("duplicate ticker in returns header");
        }
    }

    std::vector<Vector> returns;
    for (std::size_t r = 1; r < rlines.size(); ++r) {
        const auto cells = split_csv_line(rlines[r]);
        if (cells.size() != n + 1) {
            throw MalformedCell("row " + std::to_string(r) + " has " +
                                std::to_string(cells.size()) + " cells, expected " +
                                std::to_string(n + 1));
        }
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = parse_cell(cells[j + 1], r, j + 1);
        returns.push_back(std::move(row));
    }
    if (returns.size() < 2) {
        throw TooFewPeriods("need at least 2 return periods, got " +
                            std::to_string(returns.size()));
    }

    const auto plines = read_lines(prices_csv);
    if (plines.empty()) throw MalformedCell("price table has no header row");
    std::map<std::string, double> price_by_ticker;
    for (std::size_t r = 1; r < plines.size(); ++r) {
        const auto cells = split_csv_line(plines[r]);
        if (cells.size() != 2) {
            throw MalformedCell("price row " + std::to_string(r) +
                                " must be 'ticker,price'");
        }
        const std::string tk = trim(cells[0]);
        if (!price_by_ticker.emplace(tk, parse_cell(cells[1], r, 1)).second) {
            throw TickerMismatch("duplicate ticker '" + tk + "' in price table");
        }
    }

    if (price_by_ticker.size() != n) {
        throw TickerMismatch("returns list " + std::to_string(n) +
                             " tickers but prices list " +
                             std::to_string(price_by_ticker.size()));
    }
    Vector prices(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto it = price_by_ticker.find(tickers[j]);
        if (it == price_by_ticker.end()) {
            throw TickerMismatch("no price for ticker '" + tickers[j] + "'");
        }
        prices[j] = it->second;
    }

    return make_universe(std::move(tickers), std::move(prices), std::move(returns));
}

AssetUniverse take_first(const AssetUniverse& u, std::size_t n) {
    if (n == 0 || n > u.size()) {
        throw SizeExceedsUniverse("requested " + std::to_string(n) +
                                  " assets from a universe of " +
                                  std::to_string(u.size()));
    }
    std::vector<std::string> tickers(u.tickers.begin(), u.tickers.begin() + n);
    Vector prices(u.prices.begin(), u.prices.begin() + n);
    std::vector<Vector> returns;
    returns.reserve(u.returns.size());
    for (const auto& row : u.returns) {
        returns.emplace_back(row.begin(), row.begin() + n);
    }
    return make_universe(std::move(tickers), std::move(prices), std::move(returns));
}

SymMatrix regularize(const SymMatrix& sigma_raw) {
    const std::size_t n = sigma_raw.dim();
    double avgvar = 0.0;
    for (std::size_t i = 0; i < n; ++i) avgvar += sigma_raw(i, i);
    if (n > 0) avgvar /= static_cast<double>(n);

    static constexpr double kLadder[] = {0.0, 1e-6, 1e-4, 1e-2, 0.1};
    for (double delta : kLadder) {
        SymMatrix shrunk(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double v = (1.0 - delta) * sigma_raw(i, j);
                if (i == j) v += delta * avgvar;
                shrunk.set(i, j, v);
            }
        }
        try {
            cholesky(shrunk);
            return shrunk;
        } catch (const NotPositiveDefinite&) {
            continue;
        }
    }

    // Whole ladder failed: degenerate input (e.g. all-zero diagonal).
    SymMatrix fallback = SymMatrix::identity(n).scaled(1e-8);
    try {
        cholesky(fallback);
    } catch (const NotPositiveDefinite&) {
        throw RegularizationFailed("input cannot be regularized");
    }
    return fallback;
}

ScaledProblem scale_to_units(const AssetUniverse& u, const Calibration& cal) {
    cal.validate();
    const std::size_t n = u.size();
    ScaledProblem s;
    s.mu_tilde_f.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.mu_tilde_f[i] = (u.mu[i] - cal.risk_free) * u.prices[i];
    }
    s.sigma_tilde = SymMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            s.sigma_tilde.set(i, j, u.prices[i] * u.sigma(i, j) * u.prices[j]);
        }
    }
    s.gamma_tilde = cal.gamma / cal.budget;
    s.kappa_tilde = cal.kappa_scale * cal.gamma / cal.budget;
    return s;
}

std::vector<long long> initial_portfolio(const AssetUniverse& u, const Calibration& cal) {
    cal.validate();
    const double per_asset = cal.budget / static_cast<double>(u.size());
    std::vector<long long> x0(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        x0[i] = static_cast<long long>(std::floor(per_asset / u.prices[i]));
    }
    return x0;
}

PortfolioWeights weights_from_units(const std::vector<long long>& units,
                                    const AssetUniverse& u, const Calibration& cal) {
    cal.validate();
    if (units.size() != u.size()) {
        throw DimensionMismatch("weights_from_units: unit vector length " +
                                std::to_string(units.size()) + ", universe size " +
                                std::to_string(u.size()));
    }
    PortfolioWeights w;
    w.weights.resize(units.size());
    double total = 0.0;
    for (std::size_t i = 0; i < units.size(); ++i) {
        w.weights[i] = static_cast<double>(units[i]) * u.prices[i] / cal.budget;
        total += w.weights[i];
    }
    w.risk_free_weight = 1.0 - total;
    return w;
}

}  // namespace hotqubo
