#include "closcomb/random.hpp"

#include <stdexcept>
#include <vector>

namespace closcomb {

mpz_class RandomSource::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("RandomSource::below needs bound >= 1");
    if (bound == 1) return 0;

    mpz_class top = bound - 1;
    std::size_t kbits = mpz_sizeinbase(top.get_mpz_t(), 2);
    std::size_t words = (kbits + 63) / 64;
    std::uint64_t top_mask = kbits % 64 == 0 ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << (kbits % 64)) - 1);

    std::vector<std::uint64_t> buf(words);
    mpz_class val;
    while (true) {
        for (std::size_t i = 0; i < words; ++i) buf[i] = eng_();
        buf[0] &= top_mask; // buf[0] is the most significant word
        mpz_import(val.get_mpz_t(), words, 1 /*msw first*/, sizeof(std::uint64_t),
                   0 /*native endian*/, 0, buf.data());
        if (val < bound) return val;
    }
}

} // namespace closcomb
