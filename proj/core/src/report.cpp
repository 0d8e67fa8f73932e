#include "toepblock/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "toepblock/version.hpp"

namespace toepblock {

namespace {

using ordered_json = nlohmann::ordered_json;

// nlohmann serializes non-finite doubles as null, which is what the schema
// wants for undefined z-scores; this helper just documents the intent.
ordered_json number_or_null(double value) {
    if (std::isnan(value)) return nullptr;
    return value;
}

ordered_json to_json(const std::vector<double>& values) {
    ordered_json arr = ordered_json::array();
    for (double v : values) arr.push_back(number_or_null(v));
    return arr;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["model"] = model_name(cfg.model);
    j["regime"] = regime_name(cfg.regime);
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["replicates"] = cfg.replicates;
    j["dist"] = distribution_name(cfg.input.dist);
    j["seed"] = cfg.input.seed;
    j["h_max"] = cfg.h_max;
    j["bins"] = cfg.bins;
    j["jobs"] = cfg.jobs;
    j["keep_eigenvalues"] = cfg.keep_eigenvalues;
    j["budget"] = ordered_json{{"max_nodes", cfg.budget.max_nodes}, {"jobs", cfg.budget.jobs}};
    return j;
}

ordered_json empirical_json(const EmpiricalMoments& emp) {
    ordered_json j;
    j["replicates"] = emp.replicates;
    j["h_max"] = emp.h_max;
    j["beta_hat"] = to_json(emp.beta_hat);
    j["std_error"] = to_json(emp.std_error);
    return j;
}

ordered_json histogram_json(const std::vector<HistogramBin>& bins) {
    ordered_json arr = ordered_json::array();
    for (const HistogramBin& bin : bins) {
        arr.push_back(ordered_json{
            {"bin_left", bin.left}, {"bin_right", bin.right}, {"density", bin.density}});
    }
    return arr;
}

ordered_json timing_json(const std::vector<StageTiming>& timing) {
    ordered_json arr = ordered_json::array();
    for (const StageTiming& t : timing)
        arr.push_back(ordered_json{{"stage", t.stage}, {"seconds", t.seconds}});
    return arr;
}

ordered_json decomposition_json(const DecompositionReport& report) {
    ordered_json j;
    j["word"] = report.word.letters();
    j["n"] = report.n;
    j["k"] = report.k;
    j["model"] = model_name(report.model);
    j["composite_count"] = report.composite_count;
    j["fiber_sum"] = report.fiber_sum;
    j["entry_sum"] = report.entry_sum;
    j["sandwich"] = ordered_json{{"lower", report.sandwich.lower},
                                 {"value", report.sandwich.value},
                                 {"upper", report.sandwich.upper}};
    j["pass"] = report.pass;
    return j;
}

std::string fmt_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected json or csv)");
}

std::string report_json(const SimReport& report) {
    ordered_json j;
    j["schema"] = "toepblock/sim-report/1";
    j["version"] = artifact_version();
    j["config"] = config_json(report.config);
    j["empirical"] = empirical_json(report.empirical);
    if (report.has_theory) {
        j["theoretical"] =
            ordered_json{{"beta", to_json(report.theoretical)}, {"z_scores", to_json(report.z_scores)}};
    } else {
        j["theoretical"] = nullptr;
    }
    j["histogram"] = histogram_json(report.hist);
    j["timing"] = timing_json(report.timing);
    j["scale"] = report.scale;
    j["note"] = report.note;
    return dump(j);
}

std::string report_json(const ConvergenceReport& report) {
    ordered_json j;
    j["schema"] = "toepblock/convergence-report/1";
    j["version"] = artifact_version();
    j["model"] = model_name(report.model);
    j["regime"] = regime_name(report.regime);
    j["t_max"] = report.t_max;
    j["limit"] = to_json(report.limit_even);
    ordered_json points = ordered_json::array();
    for (const ConvergencePoint& point : report.points) {
        ordered_json p;
        p["size"] = point.size;
        p["theory"] = to_json(point.theory_even);
        p["gap"] = to_json(point.gap);
        p["empirical"] = point.has_empirical ? empirical_json(point.empirical) : ordered_json(nullptr);
        points.push_back(p);
    }
    j["points"] = points;
    j["timing"] = timing_json(report.timing);
    j["note"] = report.note;
    return dump(j);
}

std::string report_json(const VerifyReport& report) {
    ordered_json j;
    j["schema"] = "toepblock/verify-report/1";
    j["version"] = artifact_version();
    j["suite"] = report.suite;
    j["pass"] = report.pass;
    ordered_json checks = ordered_json::array();
    for (const VerifyCheck& check : report.checks) {
        checks.push_back(
            ordered_json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    j["checks"] = checks;
    ordered_json decomps = ordered_json::array();
    for (const DecompositionReport& rep : report.decompositions)
        decomps.push_back(decomposition_json(rep));
    j["decompositions"] = decomps;
    return dump(j);
}

std::string report_json(const DecompositionReport& report) {
    return dump(decomposition_json(report));
}

std::string report_json(const TheoreticalMoments& moments) {
    ordered_json j;
    j["schema"] = "toepblock/moments/1";
    j["version"] = artifact_version();
    j["model"] = model_name(moments.model);
    j["regime"] = regime_name(moments.regime);
    j["size"] = moments.size;
    j["t_max"] = moments.t_max();
    j["beta_2t"] = to_json(moments.beta2t);
    return dump(j);
}

std::string report_json(const PFit& fit, LinkKind kind, const Word& w) {
    ordered_json j;
    j["schema"] = "toepblock/pfit/1";
    j["version"] = artifact_version();
    j["link"] = link_name(kind);
    j["word"] = w.letters();
    j["p_hat"] = fit.p_hat;
    j["residual"] = fit.residual;
    j["grid"] = fit.grid;
    j["normalized"] = to_json(fit.normalized);
    return dump(j);
}

std::string count_json(const CountResult& result) {
    ordered_json j;
    j["word"] = result.word.letters();
    j["link"] = link_name(result.link);
    j["n"] = result.n;
    if (result.sign.has_value()) {
        j["sign"] = result.sign->entries;
    } else {
        j["sign"] = nullptr;
    }
    j["count"] = std::to_string(result.count);
    j["normalized"] = result.normalized;
    return dump(j);
}

std::string moments_csv(const SimReport& report) {
    std::string out = "h,empirical,std_error,theoretical,z_score\n";
    for (int h = 1; h <= report.empirical.h_max; ++h) {
        out += std::to_string(h);
        out += ",";
        out += fmt_double(report.empirical.beta_hat[h - 1]);
        out += ",";
        out += fmt_double(report.empirical.std_error[h - 1]);
        out += ",";
        if (report.has_theory) {
            out += fmt_double(report.theoretical[h - 1]);
            out += ",";
            double z = report.z_scores[h - 1];
            if (!std::isnan(z)) out += fmt_double(z);
        } else {
            out += ",";
        }
        out += "\n";
    }
    return out;
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
    std::string out = "bin_left,bin_right,density\n";
    for (const HistogramBin& bin : bins) {
        out += fmt_double(bin.left);
        out += ",";
        out += fmt_double(bin.right);
        out += ",";
        out += fmt_double(bin.density);
        out += "\n";
    }
    return out;
}

std::string eigenvalue_csv(const std::vector<Spectrum>& spectra) {
    std::string out = "replicate,index,eigenvalue\n";
    for (std::size_t r = 0; r < spectra.size(); ++r) {
        const Spectrum& s = spectra[r];
        double scale = s.scale > 0 ? s.scale : 1.0;
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
            out += std::to_string(r);
            out += ",";
            out += std::to_string(i);
            out += ",";
            out += fmt_double(s.eigenvalues[i] / scale);
            out += "\n";
        }
    }
    return out;
}

std::string convergence_csv(const ConvergenceReport& report) {
    std::string out = "size,h,theory,limit,gap,empirical,std_error\n";
    for (const ConvergencePoint& point : report.points) {
        for (int t = 1; t <= report.t_max; ++t) {
            out += std::to_string(point.size);
            out += ",";
            out += std::to_string(2 * t);
            out += ",";
            out += fmt_double(point.theory_even[t - 1]);
            out += ",";
            out += fmt_double(report.limit_even[t - 1]);
            out += ",";
            out += fmt_double(point.gap[t - 1]);
            out += ",";
            if (point.has_empirical) {
                out += fmt_double(point.empirical.beta_hat[2 * t - 1]);
                out += ",";
                out += fmt_double(point.empirical.std_error[2 * t - 1]);
            } else {
                out += ",";
            }
            out += "\n";
        }
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

void emit_report(const SimReport& report, ReportFormat format, const std::string& path) {
    write_text_file(path,
                    format == ReportFormat::Json ? report_json(report) : moments_csv(report));
}

void emit_report(const ConvergenceReport& report, ReportFormat format, const std::string& path) {
    write_text_file(path, format == ReportFormat::Json ? report_json(report)
                                                       : convergence_csv(report));
}

}  // namespace toepblock
