#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "portes/acf.hpp"
#include "portes/innovations.hpp"
#include "portes/statistics.hpp"
#include "portes/var_model.hpp"

namespace portes {

enum class PvalueMode { Asymptotic, MonteCarlo };

struct TestRow {
    std::size_t lag = 0;
    double statistic = 0.0;
    std::optional<double> df;      ///< asymptotic mode only
    std::optional<double> pvalue;  ///< empty = NA (non-positive df)
};

struct TestReport {
    std::string method;
    PvalueMode mode = PvalueMode::MonteCarlo;
    std::optional<std::size_t> nrep;
    std::optional<std::uint64_t> seed;
    std::vector<TestRow> rows;
};

const char* method_name(Method m);

/// Monte Carlo engine configuration. Seed and replicate index fully
/// determine each replicate's random stream, so reports are bit-identical
/// for any worker count.
struct McConfig {
    std::size_t nrep = 1000;
    std::uint64_t seed = 123;
    int ncores = 1;
    InnovKind innov_dist = InnovKind::Gaussian;
    int dft = 5;  ///< t degrees of freedom when innov_dist == StudentT
    StatRequest stat;

    void validate() const;
};

/// Monte Carlo p-value: (#{simulated_i >= observed} + 1) / (nrep + 1).
/// Ties count as exceedances.
double mc_pvalue(double observed, const std::vector<double>& simulated);

/// Fit/simulate hooks for the goodness-of-fit loop. Implementations must be
/// safe to call concurrently: fit is deterministic, simulate draws only from
/// the stream it is handed, and simulate(fit(z)) has the same n x k shape
/// as z.
class ModelAdapter {
public:
    struct Model {
        virtual ~Model() = default;
        virtual const SeriesMatrix& residuals() const = 0;
    };

    virtual ~ModelAdapter() = default;
    virtual std::unique_ptr<const Model> fit(const SeriesMatrix& z) const = 0;
    virtual SeriesMatrix simulate(const Model& model, Rng& rng) const = 0;
};

/// Built-in adapter: least-squares VAR(p) with the innovation family chosen
/// at construction (Gaussian or t scaled to the fitted residual covariance,
/// stable fitted per column, or bootstrap of the fitted residual rows).
class VarAdapter final : public ModelAdapter {
public:
    explicit VarAdapter(std::size_t p, bool constant = true, bool trend = false,
                        InnovKind innov = InnovKind::Gaussian, int dft = 5);

    std::unique_ptr<const Model> fit(const SeriesMatrix& z) const override;
    SeriesMatrix simulate(const Model& model, Rng& rng) const override;

private:
    std::size_t p_;
    bool constant_;
    bool trend_;
    InnovKind innov_;
    int dft_;
};

/// Monte Carlo randomness test: treat z as residuals, compare its statistic
/// against nrep statistics of innovation panels matched to z (covariance,
/// stable parameters, or bootstrap resampling, per cfg.innov_dist).
TestReport mc_randomness_test(const SeriesMatrix& z, const McConfig& cfg);

/// Monte Carlo goodness-of-fit: fit, then nrep rounds of
/// simulate-from-the-fit and refit; p-values from the replicate statistics.
/// A replicate whose refit fails is retried on a fresh sub-stream up to 10
/// times before AdapterFitFailure is raised.
TestReport mc_goodness_of_fit(const ModelAdapter& adapter, const SeriesMatrix& z,
                              const McConfig& cfg);

/// Asymptotic chi-square test on a residual panel. `order` is the fitted
/// order total p + q + ps + qs used for the degrees of freedom; rows with
/// non-positive df carry an NA p-value.
TestReport asymptotic_test(const SeriesMatrix& e, const StatRequest& req, double order);

namespace detail {

/// Serial reference for the replicate loop; the parallel path must match it
/// bit for bit.
void run_replicates_serial(std::size_t nrep, const std::function<void(std::size_t)>& body);

/// OpenMP replicate loop over up to ncores workers (ncores <= 1 runs the
/// serial reference). Exceptions from workers are captured and rethrown.
void run_replicates(std::size_t nrep, int ncores, const std::function<void(std::size_t)>& body);

}  // namespace detail

}  // namespace portes
