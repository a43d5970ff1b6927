#include "tetherplan/generator.hpp"

#include "tetherplan/errors.hpp"

namespace tetherplan {

namespace {

// splitmix64: tiny, well-known, and identical on every platform, unlike the
// standard distributions.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::int64_t rat_floor(const Rat& r) {
    mpq_class q = r.to_mpq();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw InvalidConfig("duration bound out of range");
    return f.get_si();
}

std::int64_t rat_ceil(const Rat& r) {
    mpq_class q = r.to_mpq();
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw InvalidConfig("duration bound out of range");
    return f.get_si();
}

}  // namespace

Instance gen_instance(const GenConfig& config) {
    if (config.n_segments == 0)
        throw InvalidConfig("generator needs at least one segment");
    if (config.alpha.sign() <= 0)
        throw InvalidConfig("generator alpha must be > 0");
    if (config.vertical_budget.sign() <= 0)
        throw InvalidConfig("generator budget must be > 0");
    std::int64_t dlo = rat_ceil(config.duration_range.first);
    std::int64_t dhi = rat_floor(config.duration_range.second);
    if (dlo < 1) dlo = 1;
    if (dhi < dlo)
        throw InvalidConfig("duration range holds no positive integer");

    SplitMix rng{config.seed ^ 0x5bf03635d3c60a01ULL};
    int sign = (rng.next() & 1) ? 1 : -1;

    Instance inst;
    inst.alpha = config.alpha;
    inst.vertical_budget = config.vertical_budget;
    inst.turns.reserve(config.n_segments + 1);
    Rat t(0), h(0);
    inst.turns.push_back({t, h});
    for (std::size_t i = 0; i < config.n_segments; ++i) {
        Rat d(rng.uniform(dlo, dhi));
        t += d;
        h += Rat(sign) * config.alpha * d;
        inst.turns.push_back({t, h});
        sign = -sign;
    }
    inst.validate();
    return inst;
}

}  // namespace tetherplan
