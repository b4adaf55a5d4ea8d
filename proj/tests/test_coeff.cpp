#include <doctest.h>

#include <random>

#include "thetasphere/coeff.hpp"

using namespace thetasphere;

namespace {

Coefficient random_coeff(std::mt19937_64& rng) {
    Coefficient c;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        int k = static_cast<int>(rng() % 7) - 3;
        Rational re(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
        Rational im(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
        c = c + Coefficient::from_value(GaussianRational{re, im}, k);
    }
    return c;
}

} // namespace

TEST_CASE("ring arithmetic on mu-monomials") {
    CHECK(Coefficient::mu(1) * Coefficient::mu(-1) == Coefficient::one());
    CHECK(Coefficient::mu(1) * Coefficient::mu(1) == Coefficient::mu(2)); // lambda
    Coefficient a = Coefficient::one() + Coefficient::imaginary_unit() * Coefficient::mu(1);
    Coefficient b = Coefficient::one() - Coefficient::imaginary_unit() * Coefficient::mu(1);
    CHECK(a + b == Coefficient::rational(2));
}

TEST_CASE("involution") {
    CHECK(Coefficient::mu(1).involution() == Coefficient::mu(-1));
    Coefficient imu2 = Coefficient::imaginary_unit() * Coefficient::mu(2);
    CHECK(imu2.involution() == -(Coefficient::imaginary_unit() * Coefficient::mu(-2)));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Coefficient a = random_coeff(rng);
        CHECK(a.involution().involution() == a);
    }
}

TEST_CASE("involution is an anti-automorphism (ring is commutative)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Coefficient a = random_coeff(rng), b = random_coeff(rng);
        CHECK((a * b).involution() == a.involution() * b.involution());
        CHECK((a * b).involution() == b.involution() * a.involution());
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Coefficient a = random_coeff(rng), b = random_coeff(rng), c = random_coeff(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("evaluate at concrete theta") {
    Theta zero{0};
    Theta half{Rational(1, 2)};
    auto v = Coefficient::mu(1).evaluate(zero);
    CHECK(std::abs(v - std::complex<double>(1, 0)) < 1e-12);
    // exp(i pi/2) = i
    auto w = Coefficient::mu(1).evaluate(half);
    CHECK(std::abs(w - std::complex<double>(0, 1)) < 1e-12);
    // lambda = mu^2 -> exp(i pi) = -1
    auto l = Coefficient::mu(2).evaluate(half);
    CHECK(std::abs(l - std::complex<double>(-1, 0)) < 1e-12);
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937_64 rng(17);
    Theta theta{Rational(3, 7)};
    for (int i = 0; i < 50; ++i) {
        Coefficient a = random_coeff(rng), b = random_coeff(rng);
        auto lhs = (a * b).evaluate(theta);
        auto rhs = a.evaluate(theta) * b.evaluate(theta);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        auto ls = (a + b).evaluate(theta);
        CHECK(std::abs(ls - (a.evaluate(theta) + b.evaluate(theta))) < 1e-12);
    }
}

TEST_CASE("zero iff empty term map") {
    Coefficient z = Coefficient::mu(2) - Coefficient::mu(2);
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK_FALSE(Coefficient::mu(2).is_zero());
}

TEST_CASE("canonical text rendering") {
    CHECK(Coefficient::zero().to_string() == "0");
    CHECK(Coefficient::one().to_string() == "1");
    CHECK(Coefficient::rational(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(Coefficient::imaginary_unit().to_string() == "i");
    CHECK(Coefficient::mu(1).to_string() == "mu");
    CHECK(Coefficient::mu(-1).to_string() == "mu^-1");
    CHECK((-Coefficient::mu(2)).to_string() == "-mu^2");
    CHECK((Coefficient::one() + Coefficient::mu(2)).to_string() == "1 + mu^2");
    CHECK((Coefficient::one() - Coefficient::mu(2)).to_string() == "1 - mu^2");
    Coefficient mixed = Coefficient::from_value(GaussianRational{Rational(1, 2), Rational(-1)});
    CHECK(mixed.to_string() == "(1/2-i)");
    CHECK((Coefficient::imaginary_unit() * Coefficient::rational(2) * Coefficient::mu(3))
              .to_string() == "2*i*mu^3");
    CHECK(Coefficient::rational(Rational(3, 4)).inverse().to_string() == "4/3");
}

TEST_CASE("inverse of units") {
    CHECK(Coefficient::mu(3).inverse() == Coefficient::mu(-3));
    Coefficient c = Coefficient::from_value(GaussianRational{Rational(1), Rational(1)}, 2);
    CHECK(c * c.inverse() == Coefficient::one());
    CHECK_THROWS_AS((Coefficient::one() + Coefficient::mu(1)).inverse(), Error);
}
