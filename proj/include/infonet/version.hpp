#ifndef INFONET_VERSION_HPP
#define INFONET_VERSION_HPP

namespace infonet {

inline constexpr const char* kName = "infonet";
inline constexpr const char* kVersion = "0.1.0";

// Version of the machine-readable report layout.
inline constexpr int kSchemaVersion = 1;

// The one random number generator used anywhere in the project. Sampling is
// reproducible from a seed on every platform: uniforms are built from the
// top 53 bits of each 64-bit engine output, exponentials by inverse CDF.
inline constexpr const char* kRngDescription =
    "mt19937_64; uniforms from top 53 bits; exponentials by inverse CDF";

}  // namespace infonet

#endif  // INFONET_VERSION_HPP
