#include "mstar/scalar.hpp"

#include <catch2/catch.hpp>

#include <random>

using mstar::Scalar;

namespace {

Scalar random_scalar(std::mt19937_64& eng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return Scalar(mpq_class(num(eng), den(eng)), mpq_class(num(eng), den(eng)));
}

} // namespace

TEST_CASE("scalar basics") {
    CHECK(Scalar().is_zero());
    CHECK(Scalar(1).is_one());
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(-2, 4) == Scalar::rational(-1, 2));
    CHECK((Scalar::rational(1, 2) + Scalar::rational(1, 2)).is_one());
    CHECK(Scalar::rational(1, 3).re().get_den() == 3);
}

TEST_CASE("scalar denominators stay positive and reduced") {
    mpq_class q(3, -6);
    q.canonicalize();
    Scalar s{q};
    CHECK(s == Scalar::rational(-1, 2));
    CHECK(s.re().get_den() > 0);
}

TEST_CASE("scalar ring axioms on random samples") {
    std::mt19937_64 eng(5);
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(eng);
        Scalar b = random_scalar(eng);
        Scalar c = random_scalar(eng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + Scalar() == a);
        CHECK(a * Scalar(1) == a);
    }
}

TEST_CASE("canonical zero is unique") {
    Scalar z = Scalar::rational(1, 2) - Scalar::rational(2, 4);
    CHECK(z.is_zero());
    CHECK(z == Scalar());
    CHECK(z.str() == "0");
}
