#ifndef ZETAFORGE_CONTEXT_HPP
#define ZETAFORGE_CONTEXT_HPP

#include <cmath>
#include <cstdint>

#include "zetaforge/errors.hpp"

namespace zetaforge {

// Working precision in decimal digits plus guard digits carried internally.
// Immutable; thread through every numeric operation.
class PrecisionContext {
public:
    static constexpr int min_digits = 15;

    PrecisionContext(int digits, int guard = 10) : digits_(digits), guard_(guard) {
        if (digits < min_digits)
            throw ConfigError("PrecisionContext: digits must be >= 15, got " + std::to_string(digits));
        if (guard < 0)
            throw ConfigError("PrecisionContext: guard must be >= 0");
    }

    int digits() const { return digits_; }
    int guard() const { return guard_; }

    // Binary precision used for internal computation (digits + guard decimal digits).
    long bits() const { return bits_for(digits_ + guard_); }

    // Binary precision that holds exactly `digits` decimal digits of output.
    long output_bits() const { return bits_for(digits_); }

    // Context with extra internal digits (for cancellation-heavy sums).
    PrecisionContext elevated(int extra_digits) const {
        return PrecisionContext(digits_ + extra_digits, guard_);
    }

    static long bits_for(int decimal_digits) {
        // log2(10) = 3.3219...; a few spare bits for rounding slop
        return static_cast<long>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
    }

private:
    int digits_;
    int guard_;
};

inline PrecisionContext make_context(int digits) { return PrecisionContext(digits); }

} // namespace zetaforge

#endif
