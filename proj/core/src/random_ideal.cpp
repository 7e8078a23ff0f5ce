#include "vres/random_ideal.hpp"

namespace vres {

MonomialIdeal random_b_saturated_ideal(const Fan& f, std::mt19937_64& rng,
                                       std::size_t max_tries) {
    MonomialIdeal B = f.irrelevant_ideal();
    std::uniform_int_distribution<std::size_t> ngens(3, 10);
    std::uniform_int_distribution<std::uint32_t> expo(0, 4);
    for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Monomial> gens;
        std::size_t n = ngens(rng);
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<std::uint32_t> e(f.nrays());
            for (auto& v : e) v = expo(rng);
            gens.emplace_back(std::move(e));
        }
        MonomialIdeal I = saturate_by_ideal(MonomialIdeal::make(f.nrays(), std::move(gens)), B);
        if (I.is_zero() || I.is_unit()) continue;
        if (I.generators().size() > 12) continue;
        return I;
    }
    throw arithmetic_error("random ideal: no usable sample after retries");
}

}  // namespace vres
