#include "linembed/rng.hpp"

#include <stdexcept>

namespace linembed {

static_assert(sizeof(unsigned long) == 8, "mpz_class conversions assume 64-bit unsigned long");

Integer Lcg64::below(const Integer& bound)
{
    if (bound <= 0) throw std::invalid_argument("random bound must be positive");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    if (bits <= 64) return Integer(static_cast<unsigned long>(below(static_cast<std::uint64_t>(bound.get_ui()))));
    if (bits == 65 && mpz_scan1(bound.get_mpz_t(), 0) == 64) return Integer(static_cast<unsigned long>(next()));

    Integer acc = 0;
    const std::size_t words = (bits + 63) / 64 + 1;
    for (std::size_t w = 0; w < words; ++w) {
        acc <<= 64;
        acc += static_cast<unsigned long>(next());
    }
    return acc % bound;
}

} // namespace linembed
