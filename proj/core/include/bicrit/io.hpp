#ifndef BICRIT_IO_HPP
#define BICRIT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bicrit {

// temp file + rename in the target directory
void atomic_write(const std::string& path, const std::string& data);

// shortest round-trip decimal for doubles (std::to_chars)
std::string format_double(double x);

// 16-bit big-endian P5 raster. The rule is radial: a pixel is inside when
// its polar radius is <= the outer radius at the nearest sampled angle
// (inner-gap pixels render mid-gray when the gap is present).
struct PgmImage {
    int size = 0;
    std::vector<std::uint16_t> pixels;  // row-major
    std::string comment;
    std::string serialize() const;
};

}  // namespace bicrit

#endif
