#pragma once

#include <cstdint>
#include <string>

#include "tangleh/resolve.hpp"

namespace tangleh {

// Free components carry no labels; moves address them through these
// pseudo-labels, consuming one declared free component per use. A real label
// wins if a diagram happens to use the same string.
inline constexpr const char* kFreeArc = "@arc";
inline constexpr const char* kFreeCircle = "@circle";

// Twists a kink into the strand. handedness is '+' or '-': the kink circle
// pops in the 0-smoothing for '+' and in the 1-smoothing for '-' (under the
// default pairing). Throws UnknownStrand if the label is absent.
Tangle apply_r1(const Tangle& d, const std::string& strand, char handedness);

// Slides strand1 over strand2, inserting a +/- crossing pair with fresh
// labels. The caller asserts the strands are planar-parallel; strand1 ==
// strand2 performs the self-slide (a finger push along one strand).
Tangle apply_r2(const Tangle& d, const std::string& strand1, const std::string& strand2);

// Deterministic-in-seed planar diagram with n crossings and exactly `arcs`
// open strands, built Morse-style (cups, adjacent braid crossings, caps).
// Throws InfeasibleParameters for negative counts or n beyond the cap.
Tangle random_tangle(uint64_t seed, int n, int arcs, int max_n = kMaxCrossingsDefault);

}  // namespace tangleh
