#pragma once

#include <mpfr.h>

namespace vknots {

/// Engine limits and numeric defaults. All overridable from the CLI.
struct EngineLimits {
    int max_crossings = 16;  // bracket state sum is 2^crossings
    int max_strands = 6;
    int max_word = 40;
};

struct NumericConfig {
    mpfr_prec_t precision = 128;
    long tolerance_log2 = -32;  // integer-rounding tolerance 2^tolerance_log2
};

}  // namespace vknots
