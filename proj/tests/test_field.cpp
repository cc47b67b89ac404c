#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modrep/field.hpp"

#include <random>
#include <stdexcept>

using namespace modrep;

TEST_CASE("canonical nonresidue") {
    CHECK(make_field(7).delta() == 3); // squares mod 7 are {1,2,4}
    CHECK(make_field(3).delta() == 2);
    CHECK(make_field(5).delta() == 2);
    CHECK(make_field(11).delta() == 2);
    CHECK(make_field(13).delta() == 2);
}

TEST_CASE("rejects bad characteristic") {
    CHECK_THROWS_AS(make_field(4), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(9), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(-5), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
    FieldCtx F7 = make_field(7);
    // (sqrt 3)^2 = 3
    CHECK(F7.mul(Scalar{0, 1}, Scalar{0, 1}) == Scalar{3, 0});

    FieldCtx F5 = make_field(5);
    CHECK(F5.inv(Scalar{2, 0}) == Scalar{3, 0});
    CHECK(F5.add(Scalar{4, 1}, Scalar{1, 4}) == Scalar{0, 0});
    CHECK_THROWS_AS(F5.inv(Scalar{0, 0}), std::domain_error);
}

TEST_CASE("canonical square roots") {
    FieldCtx F7 = make_field(7);
    CHECK(F7.sqrt_base(2) == Scalar{3, 0}); // 3^2 = 2, min(3,4) = 3
    Scalar r5 = F7.sqrt_base(5);            // 5 is a nonresidue mod 7
    CHECK(r5.a == 0);
    CHECK(F7.mul(r5, r5) == Scalar{5, 0});
    CHECK(F7.sqrt_base(0) == Scalar{0, 0});

    FieldCtx F5 = make_field(5);
    CHECK(F5.sqrt_minus_one() == Scalar{2, 0}); // 2^2 = 4 = -1
    Scalar w7 = make_field(7).sqrt_minus_one(); // -1 is a nonresidue mod 7
    CHECK(w7.a == 0);
    CHECK(make_field(7).mul(w7, w7) == Scalar{6, 0});
}

TEST_CASE("sqrt_base squares back, exhaustively") {
    for (int p : {3, 5, 7, 11, 13}) {
        FieldCtx F = make_field(p);
        for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(p); ++a) {
            Scalar r = F.sqrt_base(a);
            CHECK(F.mul(r, r) == Scalar{a, 0});
        }
        Scalar w = F.sqrt_minus_one();
        CHECK(F.pow(w, 4) == F.one());
    }
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    for (int p : {5, 7}) {
        FieldCtx F = make_field(p);
        for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(p); ++a)
            for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(p); ++b) {
                Scalar x{a, b};
                Scalar fr = F.pow(x, static_cast<unsigned long long>(p));
                CHECK(fr == F.frobenius(x));
                CHECK((fr == x) == (b == 0));
            }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20240915);
    for (int p : {3, 5, 7, 13}) {
        FieldCtx F = make_field(p);
        auto rnd = [&]() {
            return Scalar{static_cast<std::uint32_t>(rng() % p),
                          static_cast<std::uint32_t>(rng() % p)};
        };
        for (int t = 0; t < 200; ++t) {
            Scalar x = rnd(), y = rnd(), z = rnd();
            CHECK(F.mul(x, F.mul(y, z)) == F.mul(F.mul(x, y), z));
            CHECK(F.add(x, F.add(y, z)) == F.add(F.add(x, y), z));
            CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
            CHECK(F.mul(x, y) == F.mul(y, x));
            CHECK(F.add(x, F.neg(x)) == F.zero());
            if (!F.is_zero(x)) CHECK(F.mul(x, F.inv(x)) == F.one());
        }
    }
}
