#include "vpipe/report.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace vpipe {

std::string to_string(RunMode mode) {
    switch (mode) {
        case RunMode::kAsync: return "async";
        case RunMode::kSync: return "sync";
        case RunMode::kPipelined: return "pipelined";
    }
    return "sync";
}

RunMode run_mode_from_string(const std::string& s) {
    if (s == "async") return RunMode::kAsync;
    if (s == "sync") return RunMode::kSync;
    if (s == "pipelined") return RunMode::kPipelined;
    throw ConfigError("unknown run mode: " + s);
}

namespace {

double median(std::vector<double> v) {
    if (v.empty()) return 0;
    size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    return v[mid];
}

nlohmann::ordered_json stage_json(const StageTimes& t) {
    return {{"read_ms", t.read_ms},           {"preprocess_ms", t.preprocess_ms},
            {"infer_ms", t.infer_ms},         {"postprocess_ms", t.postprocess_ms},
            {"overlay_ms", t.overlay_ms},     {"write_ms", t.write_ms}};
}

}  // namespace

void RunReport::finalize() {
    frames = records.size();
    auto collect = [&](auto member) {
        std::vector<double> v;
        v.reserve(records.size());
        for (const auto& r : records) v.push_back(r.stages.*member);
        return v;
    };
    auto mean = [](const std::vector<double>& v) {
        if (v.empty()) return 0.0;
        double s = 0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    };

    const std::pair<double StageTimes::*, double StageTimes::*> noop{};
    (void)noop;
    double StageTimes::*members[6] = {&StageTimes::read_ms,        &StageTimes::preprocess_ms,
                                      &StageTimes::infer_ms,       &StageTimes::postprocess_ms,
                                      &StageTimes::overlay_ms,     &StageTimes::write_ms};
    double StageTimes::*member : members[0];
    (void)member;
    for (auto m : members) {
        auto v = collect(m);
        stage_means_ms.*m = mean(v);
        stage_medians_ms.*m = median(v);
    }

    std::vector<double> totals;
    totals.reserve(records.size());
    for (const auto& r : records) totals.push_back(r.total_ms);
    mean_total_ms = mean(totals);
    fps = elapsed_ms > 0 ? static_cast<double>(frames) * 1000.0 / elapsed_ms : 0.0;
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = to_string(mode);
    j["fps"] = fps;
    j["dropped_frames"] = dropped_frames;
    j["frames"] = frames;
    j["elapsed_ms"] = elapsed_ms;
    j["mean_total_ms"] = mean_total_ms;
    j["stage_means_ms"] = stage_json(stage_means_ms);
    j["stage_medians_ms"] = stage_json(stage_medians_ms);
    if (mode == RunMode::kPipelined) {
        j["max_in_flight"] = max_in_flight;
        j["queue_depth"] = queue_depth;
    }
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        recs.push_back({static_cast<double>(r.frame_index), r.stages.read_ms,
                        r.stages.preprocess_ms, r.stages.infer_ms, r.stages.postprocess_ms,
                        r.stages.overlay_ms, r.stages.write_ms, r.total_ms});
    }
    j["records"] = std::move(recs);
    return j.dump(2) + "\n";
}

void RunReport::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw FormatError("cannot write report to " + path.string());
    out << to_json();
}

}  // namespace vpipe
