#include "modrad/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace modrad {
namespace report {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_complex(Complex value) {
    const double re = value.real();
    const double im = value.imag();
    std::string out = format_double(re);
    if (im >= 0.0 || std::isnan(im)) {
        out += "+";
        out += format_double(im);
    } else {
        out += "-";
        out += format_double(-im);
    }
    out += "i";
    return out;
}

std::string escape_json(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

void append_trial_config(std::ostringstream& os, const checks::TrialConfig& cfg) {
    os << "{\"shape\":{\"n\":" << cfg.shape.n << ",\"m\":" << cfg.shape.m << "}"
       << ",\"trials\":" << cfg.trials << ",\"master_seed\":" << cfg.master_seed
       << ",\"radius_cfg\":{\"grid_points\":" << cfg.radius_cfg.grid_points
       << ",\"refine_tol\":" << format_double(cfg.radius_cfg.refine_tol)
       << ",\"max_refine_iters\":" << cfg.radius_cfg.max_refine_iters << "}"
       << ",\"tol\":" << format_double(cfg.tol) << ",\"scale_samples\":[";
    for (std::size_t i = 0; i < cfg.scale_samples.size(); ++i) {
        if (i > 0) os << ",";
        os << "\"" << format_complex(cfg.scale_samples[i]) << "\"";
    }
    os << "]}";
}

void append_outcome(std::ostringstream& os, const checks::CheckOutcome& outcome) {
    os << "{\"name\":\"" << escape_json(outcome.name) << "\",\"trials\":" << outcome.trials
       << ",\"violations\":" << outcome.violations
       << ",\"worst_margin\":" << format_double(outcome.worst_margin) << ",\"witness_seed\":";
    if (outcome.witness_seed) {
        os << *outcome.witness_seed;
    } else {
        os << "null";
    }
    os << "}";
}

}  // namespace

std::string to_json(const checks::SuiteReport& report) {
    std::ostringstream os;
    os << "{\"version\":\"" << escape_json(report.version) << "\",\"config\":[";
    for (std::size_t i = 0; i < report.configs.size(); ++i) {
        if (i > 0) os << ",";
        append_trial_config(os, report.configs[i]);
    }
    os << "],\"outcomes\":[";
    for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
        if (i > 0) os << ",";
        append_outcome(os, report.outcomes[i]);
    }
    os << "],\"passed\":" << (report.passed ? "true" : "false") << "}";
    return os.str();
}

void write_json(const checks::SuiteReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    out << to_json(report) << "\n";
    if (!out) {
        throw Error("failed to write output file: " + path);
    }
}

}  // namespace report
}  // namespace modrad
