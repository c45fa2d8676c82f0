#include "bicrit/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "bicrit/config.hpp"
#include "bicrit/errors.hpp"
#include "bicrit/real.hpp"

namespace bicrit {

void atomic_write(const std::string& path, const std::string& data) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_real(const Real& x) {
    unsigned digits = Real::default_precision();
    return x.str(digits, std::ios_base::scientific);
}

std::string format_real(double x) { return format_double(x); }

std::string PgmImage::serialize() const {
    std::string out = "P5\n";
    for (size_t pos = 0, next = 0; pos < comment.size(); pos = next + 1) {
        next = comment.find('\n', pos);
        if (next == std::string::npos) next = comment.size();
        out += "# " + comment.substr(pos, next - pos) + "\n";
    }
    out += std::to_string(size) + " " + std::to_string(size) + "\n65535\n";
    out.reserve(out.size() + pixels.size() * 2);
    for (std::uint16_t v : pixels) {
        out.push_back(static_cast<char>(v >> 8));
        out.push_back(static_cast<char>(v & 0xff));
    }
    return out;
}

std::string RunConfig::to_json() const {
    nlohmann::json j;
    j["version"] = BICRIT_VERSION;
    j["precision_bits"] = precision_bits;
    j["depth"] = depth;
    j["angle_samples"] = angle_samples;
    j["x_samples_per_unit"] = x_samples_per_unit;
    j["tol"] = tol;
    j["c_seed"] = c_seed;
    j["divergence_threshold"] = divergence_threshold;
    j["herman_m_limit"] = herman_m_limit;
    j["herman_convention"] = herman_convention;
    j["out_format"] = out_format;
    j["seed"] = seed;
    j["threads"] = threads;
    return j.dump();
}

RunConfig RunConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RunConfig c;
    c.precision_bits = j.value("precision_bits", c.precision_bits);
    c.depth = j.value("depth", c.depth);
    c.angle_samples = j.value("angle_samples", c.angle_samples);
    c.x_samples_per_unit = j.value("x_samples_per_unit", c.x_samples_per_unit);
    c.tol = j.value("tol", c.tol);
    c.c_seed = j.value("c_seed", c.c_seed);
    c.divergence_threshold = j.value("divergence_threshold", c.divergence_threshold);
    c.herman_m_limit = j.value("herman_m_limit", c.herman_m_limit);
    c.herman_convention = j.value("herman_convention", c.herman_convention);
    c.out_format = j.value("out_format", c.out_format);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    return c;
}

}  // namespace bicrit
