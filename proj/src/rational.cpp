#include "cartanforge/rational.hpp"

#include <cstdlib>

namespace cartanforge {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational RationalSampler::next() { return small(bound_, bound_); }

Rational RationalSampler::small(long n, long d) {
    std::uniform_int_distribution<long> num(-n, n);
    std::uniform_int_distribution<long> den(1, d);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
}

std::uint64_t default_seed(std::uint64_t fallback) {
    if (const char* env = std::getenv("CARTANFORGE_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return fallback;
}

}  // namespace cartanforge
