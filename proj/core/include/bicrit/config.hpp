#ifndef BICRIT_CONFIG_HPP
#define BICRIT_CONFIG_HPP

#include <cstdint>
#include <string>

namespace bicrit {

#define BICRIT_VERSION "0.1.0"

// Run-wide knobs; every output artifact embeds the serialized block so a
// run can be reproduced byte-for-byte.
struct RunConfig {
    unsigned precision_bits = 256;
    int depth = 12;
    int angle_samples = 4096;
    int x_samples_per_unit = 512;
    double tol = 1e-9;
    double c_seed = 2.0;
    double divergence_threshold = 50.0;
    int herman_m_limit = 24;
    std::string herman_convention = "proof-inverse";  // or "definition-forward"
    std::string out_format = "csv";                   // csv | json | pgm
    std::uint64_t seed = 20260811;
    int threads = 0;  // 0 = hardware concurrency

    std::string to_json() const;
    static RunConfig from_json(const std::string& text);
};

}  // namespace bicrit

#endif
