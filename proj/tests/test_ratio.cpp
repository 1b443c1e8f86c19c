#include <catch2/catch_amalgamated.hpp>

#include <sticks/ratio.hpp>

#include <random>
#include <string>

using sticks::BigInt;
using sticks::Ratio;

TEST_CASE("ratios normalize to lowest terms with positive denominator") {
    REQUIRE(Ratio(2, 4) == Ratio(1, 2));
    REQUIRE(Ratio(-3, -6) == Ratio(1, 2));
    REQUIRE(Ratio(3, -6) == Ratio(-1, 2));
    REQUIRE(Ratio(0, 7).numerator() == 0);
    REQUIRE(Ratio(0, 7).denominator() == 1);
    REQUIRE(Ratio(10, 5).str() == "2/1");
    REQUIRE_THROWS_AS(Ratio(1, 0), std::domain_error);
}

TEST_CASE("ratio arithmetic is exact") {
    REQUIRE(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
    REQUIRE(Ratio(1, 2) - Ratio(1, 3) == Ratio(1, 6));
    REQUIRE(Ratio(2, 3) * Ratio(3, 4) == Ratio(1, 2));
    REQUIRE(Ratio(1, 3) / Ratio(1, 6) == Ratio(2));
    REQUIRE(Ratio(1, 3).reciprocal() == Ratio(3));
    REQUIRE(Ratio(1, 3) < Ratio(1, 2));
    REQUIRE(Ratio(1, 2) <= Ratio(2, 4));
    REQUIRE_THROWS_AS(Ratio(1, 2) / Ratio(0), std::domain_error);
    REQUIRE_THROWS_AS(Ratio(0).reciprocal(), std::domain_error);
}

TEST_CASE("normalization holds for random inputs") {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 500; ++i) {
        long long n = dist(rng);
        long long d = dist(rng);
        if (d == 0) d = 7;
        Ratio r{BigInt(n), BigInt(d)};
        REQUIRE(r.denominator() > 0);
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                              r.denominator());
        REQUIRE(g == 1);
    }
}

TEST_CASE("decimal rendering keeps significant digits") {
    REQUIRE(Ratio(1, 30).decimal(12) == "0.0333333333333");
    REQUIRE(Ratio(1, 2).decimal(12) == "0.500000000000");
    REQUIRE(Ratio(1).decimal(12) == "1.00000000000");
    REQUIRE(Ratio(1, 6).decimal(12) == "0.166666666667");
    REQUIRE(Ratio(0).decimal(12) == "0");
    REQUIRE(Ratio(-1, 30).decimal(3) == "-0.0333");
    REQUIRE(Ratio(123456).decimal(4) == "123500");
    REQUIRE_THROWS_AS(Ratio(1, 2).decimal(0), std::domain_error);
}

TEST_CASE("decimal rendering rounds half to even") {
    REQUIRE(Ratio(1, 8).decimal(1) == "0.1");   // 0.125 -> down
    REQUIRE(Ratio(3, 20).decimal(1) == "0.2");  // 0.15: tie to even 2
    REQUIRE(Ratio(1, 4).decimal(1) == "0.2");   // 0.25: tie stays at even 2
    REQUIRE(Ratio(7, 20).decimal(1) == "0.4");  // 0.35: tie to even 4
    REQUIRE(Ratio(999, 1000).decimal(2) == "1.0");  // carry across the point
}

namespace {

// Parse "0.0333..." (or "-0.2", "123500") back into an exact ratio.
Ratio parse_decimal(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    auto dot = t.find('.');
    int places = 0;
    std::string digits = t;
    if (dot != std::string::npos) {
        places = static_cast<int>(t.size() - dot - 1);
        digits = t.substr(0, dot) + t.substr(dot + 1);
    }
    // avoid cpp_int's octal reading of leading zeros
    const auto first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    Ratio r{BigInt(digits), sticks::pow10(places)};
    return neg ? -r : r;
}

}  // namespace

TEST_CASE("decimal strings round-trip to within half an ulp of the last place") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> num_dist(1, 999);
    std::uniform_int_distribution<long long> den_dist(1000, 99999999);
    for (int i = 0; i < 300; ++i) {
        long long n = num_dist(rng);
        long long d = den_dist(rng);
        if (n > d) std::swap(n, d);
        Ratio r{BigInt(n), BigInt(d)};
        const std::string s = r.decimal(12);
        auto dot = s.find('.');
        REQUIRE(dot != std::string::npos);
        const int places = static_cast<int>(s.size() - dot - 1);
        Ratio parsed = parse_decimal(s);
        Ratio diff = parsed - r;
        if (diff < Ratio(0)) diff = -diff;
        // rounding error is at most half of the last rendered place
        REQUIRE(diff * Ratio(2) * Ratio(sticks::pow10(places)) <= Ratio(1));
    }
}

TEST_CASE("conversion to double") {
    REQUIRE(Ratio(1, 2).to_double() == 0.5);
    REQUIRE(Ratio(0).to_double() == 0.0);
    REQUIRE(Ratio(1, 3).to_double() == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
    // far below 1/double-max but still positive and representable
    BigInt huge = sticks::pow10(250);
    REQUIRE(Ratio(1, huge).to_double() > 0.0);
    REQUIRE(Ratio(1, huge).to_double() < 1e-240);
}
