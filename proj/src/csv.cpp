#include "compflex/csv.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace compflex {

const char* const kCsvHeader =
    "rho_m,scheme,interference_model,power_mode,alpha,mean_sum_rate_bps,"
    "mean_ee_bits_per_joule,eta,p_bs_w,p_ms_w,p_sum_w,trials,seed";

const char* scheme_name(Scheme s) {
    return s == Scheme::CoMPflex ? "compflex" : "baseline";
}

const char* model_name(InterferenceVariant m) {
    switch (m) {
    case InterferenceVariant::Mirrored: return "mirrored";
    case InterferenceVariant::WorstCase: return "worst-case";
    case InterferenceVariant::StationaryFirstTier: return "stationary";
    }
    return "?";
}

const char* power_mode_name(PowerMode m) {
    return m == PowerMode::Adjusted ? "adjusted" : "constant";
}

Scheme scheme_from_name(std::string_view name) {
    if (name == "compflex") return Scheme::CoMPflex;
    if (name == "baseline") return Scheme::Baseline;
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

InterferenceVariant model_from_name(std::string_view name) {
    if (name == "mirrored") return InterferenceVariant::Mirrored;
    if (name == "worst-case") return InterferenceVariant::WorstCase;
    if (name == "stationary") return InterferenceVariant::StationaryFirstTier;
    throw std::invalid_argument("unknown interference model: " + std::string(name));
}

PowerMode power_mode_from_name(std::string_view name) {
    if (name == "adjusted") return PowerMode::Adjusted;
    if (name == "constant") return PowerMode::Constant;
    throw std::invalid_argument("unknown power mode: " + std::string(name));
}

namespace {

// Locale-independent: %g never emits a locale decimal point for the "C"
// numeric formatting used by snprintf with a fresh process locale.
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string to_csv(const std::vector<SweepRecord>& records) {
    std::string out = kCsvHeader;
    out.push_back('\n');
    char tail[64];
    for (const SweepRecord& r : records) {
        out += fmt(r.rho);
        out.push_back(',');
        out += scheme_name(r.scheme);
        out.push_back(',');
        out += model_name(r.model);
        out.push_back(',');
        out += power_mode_name(r.power_mode);
        out.push_back(',');
        out += fmt(r.alpha);
        out.push_back(',');
        out += fmt(r.mean_sum_rate);
        out.push_back(',');
        out += fmt(r.mean_ee);
        out.push_back(',');
        out += fmt(r.eta);
        out.push_back(',');
        out += fmt(r.p_bs);
        out.push_back(',');
        out += fmt(r.p_ms);
        out.push_back(',');
        out += fmt(r.p_sum);
        std::snprintf(tail, sizeof(tail), ",%d,%" PRIu64 "\n", r.trials, r.seed);
        out += tail;
    }
    return out;
}

std::vector<SweepRecord> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::invalid_argument("bad or missing CSV header");

    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 13)
            throw std::invalid_argument("bad CSV row: " + line);
        SweepRecord r;
        r.rho = std::strtod(f[0].c_str(), nullptr);
        r.scheme = scheme_from_name(f[1]);
        r.model = model_from_name(f[2]);
        r.power_mode = power_mode_from_name(f[3]);
        r.alpha = std::strtod(f[4].c_str(), nullptr);
        r.mean_sum_rate = std::strtod(f[5].c_str(), nullptr);
        r.mean_ee = std::strtod(f[6].c_str(), nullptr);
        r.eta = std::strtod(f[7].c_str(), nullptr);
        r.p_bs = std::strtod(f[8].c_str(), nullptr);
        r.p_ms = std::strtod(f[9].c_str(), nullptr);
        r.p_sum = std::strtod(f[10].c_str(), nullptr);
        r.trials = std::atoi(f[11].c_str());
        r.seed = std::strtoull(f[12].c_str(), nullptr, 10);
        records.push_back(r);
    }
    return records;
}

} // namespace compflex
