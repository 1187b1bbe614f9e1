#include "doctest.h"

#include "weh/rat.hpp"

using namespace weh;

TEST_CASE("rationals are canonical") {
    Rat r = rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK_THROWS_AS(rat(1, 0), domain_error);
}

TEST_CASE("conjugate product collapses the radical") {
    // (a + sqrt(3)) * (a - sqrt(3)) with a rational: norm a^2 - 3
    ExtScalar x(rat(5), rat(1), 3);
    ExtScalar y = x.conj();
    ExtScalar p = x * y;
    CHECK(p.is_rational());
    CHECK(p.rational_part() == 22); // 25 - 3
    CHECK(p == ExtScalar(rat(22)));
}

TEST_CASE("radical arithmetic reduces via sqrt(d)^2 = d") {
    ExtScalar s2 = ExtScalar::sqrt_of(2);
    ExtScalar v = s2 * s2;
    CHECK(v == ExtScalar(rat(2)));
    ExtScalar u = (ExtScalar(rat(1)) + s2) * (ExtScalar(rat(1)) + s2);
    CHECK(u.rational_part() == 3);
    CHECK(u.radical_part() == 2);
}

TEST_CASE("mixing radicands is rejected") {
    ExtScalar a(rat(1), rat(1), 2);
    ExtScalar b(rat(1), rat(1), 3);
    CHECK_THROWS_AS(a + b, usage_error);
}

TEST_CASE("division in the extension field") {
    ExtScalar a(rat(1), rat(1), 2);  // 1 + sqrt2
    ExtScalar b(rat(3), rat(-1), 2); // 3 - sqrt2
    ExtScalar q = a / b;
    CHECK(q * b == a);
}
