#pragma once

// CSV serialization and atomic file output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>

#include "lackwalk/experiments.hpp"

namespace lackwalk::io {

/// 17 significant digits; round-trips every double.
inline std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

inline std::string trace_csv(std::span<const double> values)
{
    std::string out = "step,probability\n";
    for (std::size_t t = 0; t < values.size(); ++t) {
        out += std::to_string(t) + ',' + format_double(values[t]) + '\n';
    }
    return out;
}

/// 1D sweeps carry an extra N*a column.
inline std::string sweep_csv(std::span<const SweepRow> rows, int dimension)
{
    std::string out = dimension == 1 ? "a,Na,t_peak,p_peak,status\n" : "a,t_peak,p_peak,status\n";
    for (const auto& row : rows) {
        out += format_double(row.loop_weight) + ',';
        if (dimension == 1) out += format_double(row.scaled_weight) + ',';
        out += std::to_string(row.t_peak) + ',' + format_double(row.p_peak) + ',' +
               to_string(row.status) + '\n';
    }
    return out;
}

inline std::string scaling_csv(std::span<const ScalingRow> rows)
{
    std::string out = "N,M,t_peak,p_peak,status\n";
    for (const auto& row : rows) {
        out += std::to_string(row.vertex_count) + ',' + std::to_string(row.marked_count) + ',' +
               std::to_string(row.t_peak) + ',' + format_double(row.p_peak) + ',' +
               to_string(row.status) + '\n';
    }
    return out;
}

/// Writes to a sibling temporary file and renames it into place.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        os << content;
        if (!os.flush()) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace lackwalk::io
