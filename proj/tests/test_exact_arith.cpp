#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "theta/cyclotomic.hpp"
#include "theta/qseries.hpp"

using namespace theta;

namespace {

// Independent oracle: expand prod (1-q^n)^24 term by term, one sparse
// factor at a time.  Deliberately naive; must stay independent of the
// pentagonal-expansion implementation.
std::vector<Int> naive_delta(long n_max) {
    const size_t len = static_cast<size_t>(n_max);
    std::vector<Int> acc(len, Int(0));
    acc[0] = 1;
    for (long n = 1; n < n_max; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            std::vector<Int> next(len, Int(0));
            for (size_t i = 0; i < len; ++i) {
                if (acc[i] == 0) continue;
                next[i] += acc[i];
                if (i + static_cast<size_t>(n) < len)
                    next[i + static_cast<size_t>(n)] -= acc[i];
            }
            acc.swap(next);
        }
    }
    return acc;  // tau(k) = acc[k-1]
}

// Random element of Q(zeta_n) for an order n dividing the given bound;
// keeping a triple inside divisors of one N <= 24 keeps every lcm <= 24.
Cyclotomic rand_cyclotomic(std::mt19937_64& rng, unsigned long common_order) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d <= common_order; ++d)
        if (common_order % d == 0) divs.push_back(d);
    std::uniform_int_distribution<size_t> pick(0, divs.size() - 1);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    unsigned long n = divs[pick(rng)];
    std::vector<Rational> raw(n);
    for (auto& c : raw) c = make_rational(Int(num(rng)), Int(den(rng)));
    return Cyclotomic(n, raw);
}

Cyclotomic rand_cyclotomic(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> ord(1, 24);
    return rand_cyclotomic(rng, ord(rng));
}

}  // namespace

TEST_CASE("zeta_4 squared is -1") {
    CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
}

TEST_CASE("primitive cube roots sum to -1") {
    CHECK(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2) == Cyclotomic(-1));
}

TEST_CASE("golden-ratio product of fifth-root sums") {
    // (z5 + z5^4)(z5^2 + z5^3) = z5^3 + z5^4 + z5 + z5^2 = -1.
    Cyclotomic a = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
    Cyclotomic b = Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3);
    CHECK(a * b == Cyclotomic(-1));
}

TEST_CASE("cross-order arithmetic embeds into the lcm order") {
    // z6 = -z3^2, so z6^2 = z3.
    Cyclotomic z6 = Cyclotomic::zeta(6);
    CHECK(z6 * z6 == Cyclotomic::zeta(3));
    CHECK(z6 + Cyclotomic::zeta(6, 5) == Cyclotomic(1));  // z6 + conj(z6) = 1
    CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
}

TEST_CASE("roots of unity satisfy x * conj(x) = 1") {
    for (unsigned long n = 1; n <= 24; ++n)
        for (unsigned long k = 0; k < n; ++k) {
            Cyclotomic x = Cyclotomic::zeta(n, static_cast<long>(k));
            CHECK(x * x.conj() == Cyclotomic(1));
            CHECK((-x) * (-x).conj() == Cyclotomic(1));
        }
}

TEST_CASE("conjugation is an involution") {
    std::mt19937_64 rng(7001);
    for (int i = 0; i < 200; ++i) {
        Cyclotomic x = rand_cyclotomic(rng);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("field inverse round-trips") {
    std::mt19937_64 rng(7002);
    int done = 0;
    while (done < 100) {
        Cyclotomic x = rand_cyclotomic(rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Cyclotomic(1));
        ++done;
    }
}

TEST_CASE("cyclotomic arithmetic is commutative and associative") {
    std::mt19937_64 rng(7003);
    std::uniform_int_distribution<unsigned long> ord(1, 24);
    for (int i = 0; i < 1000; ++i) {
        unsigned long n = ord(rng);
        Cyclotomic a = rand_cyclotomic(rng, n);
        Cyclotomic b = rand_cyclotomic(rng, n);
        Cyclotomic c = rand_cyclotomic(rng, n);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("tau leading coefficients") {
    QSeries one = delta_coefficients(1);
    REQUIRE(one.n_max() == 1);
    CHECK(one.a(1) == 1);

    QSeries two = delta_coefficients(2);
    CHECK(two.a(1) == 1);
    CHECK(two.a(2) == -24);
}

TEST_CASE("tau values at small primes against the naive oracle") {
    QSeries s = delta_coefficients(10);
    std::vector<Int> oracle = naive_delta(10);
    for (long n = 1; n <= 10; ++n) CHECK(s.a(n) == oracle[static_cast<size_t>(n - 1)]);
    CHECK(s.a(3) == 252);
    CHECK(s.a(5) == 4830);
    CHECK(s.a(7) == -16744);
}

TEST_CASE("tau series matches the naive oracle up to 200") {
    const long N = 200;
    QSeries s = delta_coefficients(N);
    std::vector<Int> oracle = naive_delta(N);
    REQUIRE(s.n_max() == N);
    for (long n = 1; n <= N; ++n) CHECK(s.a(n) == oracle[static_cast<size_t>(n - 1)]);
}

TEST_CASE("ramanujan bound") {
    CHECK(ramanujan_bound_check(2, Int(-24)));
    CHECK(ramanujan_bound_check(97, Int(0)));
    QSeries s = delta_coefficients(100);
    for (unsigned long p : primes_upto(99))
        CHECK(ramanujan_bound_check(p, s.a(static_cast<long>(p))));
    // A value just past the bound must fail: 4*2^11 = 8192 = 90.5^2...
    CHECK_FALSE(ramanujan_bound_check(2, Int(91)));
    CHECK(ramanujan_bound_check(2, Int(90)));
}
