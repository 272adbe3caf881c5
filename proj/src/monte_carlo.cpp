#include "portes/monte_carlo.hpp"

#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "portes/chisq.hpp"
#include "portes/errors.hpp"
#include "portes/stable.hpp"

namespace portes {

const char* method_name(Method m) {
    switch (m) {
        case Method::BoxPierce: return "BoxPierce";
        case Method::LjungBox: return "LjungBox";
        case Method::Hosking: return "Hosking";
        case Method::LiMcLeod: return "LiMcLeod";
        case Method::MahdiMcLeod: return "MahdiMcLeod";
        case Method::DurbinWatson: return "DurbinWatson";
        case Method::Custom: return "Custom";
    }
    return "Unknown";
}

void McConfig::validate() const {
    if (nrep < 1) throw DomainError("nrep must be >= 1");
    if (ncores < 1) throw DomainError("ncores must be >= 1");
    if (innov_dist == InnovKind::StudentT && dft < 1)
        throw DomainError("t innovations require a positive integer dft");
}

double mc_pvalue(double observed, const std::vector<double>& simulated) {
    if (simulated.empty()) throw DomainError("mc_pvalue: no simulated statistics");
    std::size_t count = 0;
    for (double s : simulated)
        if (s >= observed) ++count;
    return static_cast<double>(count + 1) / static_cast<double>(simulated.size() + 1);
}

namespace detail {

void run_replicates_serial(std::size_t nrep, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < nrep; ++i) body(i);
}

void run_replicates(std::size_t nrep, int ncores,
                    const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
    if (ncores > 1) {
        std::exception_ptr failure = nullptr;
        const auto count = static_cast<long long>(nrep);
#pragma omp parallel for num_threads(ncores) schedule(static)
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(portes_mc_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#else
    (void)ncores;
#endif
    run_replicates_serial(nrep, body);
}

}  // namespace detail

namespace {

Matrix sample_covariance(const SeriesMatrix& z) {
    const std::size_t n = z.n();
    const std::size_t k = z.k();
    if (n < 2) throw DomainError("sample covariance needs n >= 2");
    std::vector<double> mean(k, 0.0);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < k; ++i) mean[i] += z(t, i);
    for (double& m : mean) m /= static_cast<double>(n);
    Matrix s(k, k);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                s(i, j) += (z(t, i) - mean[i]) * (z(t, j) - mean[j]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s(i, j) /= static_cast<double>(n - 1);
    return s;
}

InnovationSource source_matched_to(const SeriesMatrix& z, const McConfig& cfg) {
    switch (cfg.innov_dist) {
        case InnovKind::Gaussian:
            return InnovationSource::gaussian(sample_covariance(z));
        case InnovKind::StudentT:
            return InnovationSource::student_t(cfg.dft, sample_covariance(z));
        case InnovKind::Stable:
            return InnovationSource::stable(fitstable(z));
        case InnovKind::Bootstrap:
            return InnovationSource::bootstrap(z);
    }
    throw DomainError("unknown innovation distribution");
}

TestReport finish_report(const McConfig& cfg, const std::vector<double>& observed,
                         const std::vector<std::vector<double>>& sims) {
    TestReport rep;
    rep.method = method_name(cfg.stat.method);
    rep.mode = PvalueMode::MonteCarlo;
    rep.nrep = cfg.nrep;
    rep.seed = cfg.seed;
    const std::size_t nlags = cfg.stat.lags.size();
    std::vector<double> column(cfg.nrep);
    for (std::size_t j = 0; j < nlags; ++j) {
        for (std::size_t i = 0; i < cfg.nrep; ++i) column[i] = sims[i][j];
        rep.rows.push_back(TestRow{cfg.stat.lags[j], observed[j], std::nullopt,
                                   mc_pvalue(observed[j], column)});
    }
    return rep;
}

}  // namespace

TestReport mc_randomness_test(const SeriesMatrix& z, const McConfig& cfg) {
    cfg.validate();
    const std::vector<double> observed = statistics_at_lags(z, cfg.stat);
    const InnovationSource src = source_matched_to(z, cfg);

    std::vector<std::vector<double>> sims(cfg.nrep);
    detail::run_replicates(cfg.nrep, cfg.ncores, [&](std::size_t i) {
        Rng rng = Rng::replicate_stream(cfg.seed, i);
        const SeriesMatrix panel = src.draw(z.n(), rng);
        sims[i] = statistics_at_lags(panel, cfg.stat);
    });
    return finish_report(cfg, observed, sims);
}

TestReport mc_goodness_of_fit(const ModelAdapter& adapter, const SeriesMatrix& z,
                              const McConfig& cfg) {
    cfg.validate();
    const auto base = adapter.fit(z);
    const std::vector<double> observed = statistics_at_lags(base->residuals(), cfg.stat);

    std::vector<std::vector<double>> sims(cfg.nrep);
    detail::run_replicates(cfg.nrep, cfg.ncores, [&](std::size_t i) {
        for (std::uint64_t attempt = 0;; ++attempt) {
            try {
                Rng rng = Rng::replicate_stream(cfg.seed, i, attempt);
                const SeriesMatrix sim = adapter.simulate(*base, rng);
                const auto refit = adapter.fit(sim);
                sims[i] = statistics_at_lags(refit->residuals(), cfg.stat);
                return;
            } catch (const Error&) {
                if (attempt >= 9)
                    throw AdapterFitFailure("replicate " + std::to_string(i) +
                                            ": refit failed 10 times");
            }
        }
    });
    return finish_report(cfg, observed, sims);
}

TestReport asymptotic_test(const SeriesMatrix& e, const StatRequest& req, double order) {
    const std::vector<double> stats = statistics_at_lags(e, req);
    TestReport rep;
    rep.method = method_name(req.method);
    rep.mode = PvalueMode::Asymptotic;
    const DfSpec spec{e.k(), order, req.method};
    for (std::size_t j = 0; j < req.lags.size(); ++j) {
        const double df = degrees_of_freedom(spec, req.lags[j]);
        rep.rows.push_back(TestRow{req.lags[j], stats[j], df,
                                   chisq_upper_tail(stats[j], df)});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// VarAdapter

namespace {

struct VarModelState final : ModelAdapter::Model {
    FittedVar fitted;
    std::size_t n_input = 0;

    const SeriesMatrix& residuals() const override { return fitted.residuals; }
};

}  // namespace

VarAdapter::VarAdapter(std::size_t p, bool constant, bool trend, InnovKind innov, int dft)
    : p_(p), constant_(constant), trend_(trend), innov_(innov), dft_(dft) {}

std::unique_ptr<const ModelAdapter::Model> VarAdapter::fit(const SeriesMatrix& z) const {
    auto state = std::make_unique<VarModelState>();
    state->fitted = fit_var(z, p_, constant_, trend_);
    state->n_input = z.n();
    return state;
}

SeriesMatrix VarAdapter::simulate(const Model& model, Rng& rng) const {
    const auto& state = dynamic_cast<const VarModelState&>(model);
    const FittedVar& f = state.fitted;
    InnovationSource src = [&] {
        switch (innov_) {
            case InnovKind::Gaussian:
                return InnovationSource::gaussian(f.sigma);
            case InnovKind::StudentT:
                return InnovationSource::student_t(dft_, f.sigma);
            case InnovKind::Stable:
                return InnovationSource::stable(fitstable(f.residuals));
            case InnovKind::Bootstrap:
                return InnovationSource::bootstrap(f.residuals);
        }
        throw DomainError("unknown innovation distribution");
    }();
    return simulate_fitted(f, src, state.n_input, rng);
}

}  // namespace portes
