#include "qwa/random.hpp"

namespace qwa {

long Rng::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

CycInt Rng::cyc_int(int p, long max_abs) {
    std::vector<Integer> c(p - 1);
    for (auto& v : c) v = uniform(-max_abs, max_abs);
    return CycInt::from_coeffs(p, std::move(c));
}

std::vector<Integer> Rng::raw_vector(std::size_t length, long max_abs) {
    std::vector<Integer> v(length);
    for (auto& c : v) c = uniform(-max_abs, max_abs);
    return v;
}

Polynomial Rng::polynomial(int p, int max_degree, long max_abs) {
    std::vector<CycInt> c;
    const int deg = static_cast<int>(uniform(0, max_degree));
    for (int k = 0; k <= deg; ++k) c.push_back(cyc_int(p, max_abs));
    return Polynomial(p, std::move(c));
}

QWeylElement Rng::weyl_element(int p, int max_terms, int max_degree, long max_abs) {
    QWeylElement r(p);
    const int n = static_cast<int>(uniform(1, max_terms));
    for (int t = 0; t < n; ++t) {
        const int i = static_cast<int>(uniform(0, max_degree));
        const int j = static_cast<int>(uniform(0, max_degree));
        r.add_term(i, j, cyc_int(p, max_abs));
    }
    return r;
}

QWeylElement Rng::central_element(int p, int max_terms, int max_multiple, long max_abs) {
    QWeylElement r(p);
    const int n = static_cast<int>(uniform(1, max_terms));
    for (int t = 0; t < n; ++t) {
        const int a = static_cast<int>(uniform(0, max_multiple));
        const int b = static_cast<int>(uniform(0, max_multiple));
        r.add_term(p * a, p * b, cyc_int(p, max_abs));
    }
    return r;
}

} // namespace qwa
