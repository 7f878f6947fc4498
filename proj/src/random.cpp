#include "fsem/random.hpp"

#include <stdexcept>

namespace fsem {

long Rng::uniform_int(long lo, long hi)
{
    if (hi < lo) {
        throw std::invalid_argument("Rng::uniform_int: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = 0;
    do {
        v = engine_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

Real Rng::small_rational(long num_max, long den)
{
    return Real(mpq_class(uniform_int(-num_max, num_max), den));
}

GaussPolyFn random_gauss_poly(Rng& rng, const GaussPolyOptions& opt)
{
    if (opt.decays.empty() || opt.max_terms < 1 || opt.max_degree < 0) {
        throw std::invalid_argument("random_gauss_poly: invalid options");
    }
    while (true) {
        const long terms = rng.uniform_int(1, opt.max_terms);
        std::vector<GaussPolyTerm> out;
        std::vector<Real> first_decay;
        for (long k = 0; k < terms; ++k) {
            std::vector<Real> decay(opt.n);
            if (k > 0 && rng.bernoulli(opt.shared_decay)) {
                decay = first_decay;
            } else {
                for (auto& a : decay) {
                    a = opt.decays[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(opt.decays.size()) - 1))];
                }
            }
            if (k == 0) {
                first_decay = decay;
            }
            SparsePoly p(opt.n);
            const long deg = rng.uniform_int(0, opt.max_degree);
            MultiIndex cap(std::vector<unsigned>(opt.n, static_cast<unsigned>(deg)));
            for (const auto& alpha : mi_below(cap)) {
                if (alpha.order() > static_cast<unsigned>(deg)) {
                    continue;
                }
                p.add_term(alpha, Complex(rng.small_rational(opt.coeff_num_max, opt.coeff_den)));
            }
            out.push_back({p, decay});
        }
        GaussPolyFn f(opt.n, std::move(out));
        if (!f.is_zero()) {
            return f;
        }
    }
}

namespace {

mpq_class random_entry(Rng& rng, const SeqOptions& opt)
{
    mpq_class v(rng.uniform_int(-opt.num_max, opt.num_max), opt.den);
    const long e = rng.uniform_int(opt.min_exp2, opt.max_exp2);
    mpz_class two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    v *= e < 0 ? mpq_class(1, two_e) : mpq_class(two_e);
    v.canonicalize();
    return v;
}

}  // namespace

SeqElement random_seq(Rng& rng, const SeqOptions& opt, bool allow_tail)
{
    while (true) {
        const auto L = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(opt.max_length)));
        std::vector<mpq_class> p(L);
        for (auto& t : p) {
            t = rng.bernoulli(opt.zero_prob) ? mpq_class(0) : random_entry(rng, opt);
        }
        mpq_class tail = 0;
        if (allow_tail && rng.bernoulli(opt.tail_prob)) {
            tail = random_entry(rng, opt);
        }
        SeqElement x(std::move(p), tail);
        if (!x.is_zero()) {
            return x;
        }
    }
}

Element random_element(const Space& X, Rng& rng)
{
    switch (X.kind()) {
    case SpaceKind::schwartz: {
        GaussPolyOptions opt;
        opt.n = X.dim();
        if (opt.n > 1) {
            opt.max_degree = 2;
        }
        return random_gauss_poly(rng, opt);
    }
    case SpaceKind::sigma_rho:
        return random_seq(rng, SeqOptions{}, false);
    case SpaceKind::s:
        return random_seq(rng, SeqOptions{}, true);
    }
    return SeqElement();
}

}  // namespace fsem
