#include "contx/contx.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace contx;

namespace {

Sequence random_sequence(std::mt19937_64& rng, std::int64_t max_len, Elem max_elem,
                         std::int64_t min_len = 0) {
    std::uniform_int_distribution<std::int64_t> len(min_len, max_len);
    std::uniform_int_distribution<Elem> elem(1, max_elem);
    std::vector<Elem> v(static_cast<std::size_t>(len(rng)));
    for (auto& e : v) e = elem(rng);
    return Sequence(std::move(v));
}

} // namespace

TEST_CASE("continuant examples") {
    CHECK(continuant(Sequence{}) == 1);
    CHECK(continuant(Sequence{2, 4, 5, 1, 1}) == 103);
    CHECK(continuant(Sequence{2, 5, 4, 1, 1}) == 103);
    CHECK(continuant(Sequence{1, 1, 1, 1, 1}) == 8); // F_6
    CHECK_THROWS_AS(continuant(Sequence{0, 3}), domain_error);
}

TEST_CASE("continuant pair examples") {
    auto p = continuant_pair(Sequence{2, 4, 5, 1});
    CHECK(p.full == 56);
    CHECK(p.truncated == 47);
    auto single = continuant_pair(Sequence{3});
    CHECK(single.full == 3);
    CHECK(single.truncated == 1);
    auto empty = continuant_pair(Sequence{});
    CHECK(empty.full == 1);
    CHECK(empty.truncated == 0);
}

TEST_CASE("split identity examples") {
    CHECK(split_identity_check(Sequence{2, 4}, Sequence{5, 1, 1}) == 103);
    CHECK(split_identity_check(Sequence{}, Sequence{3}) == 3);
    CHECK(split_identity_check(Sequence{1, 1}, Sequence{1, 1, 1}) == 8);
}

TEST_CASE("cf value examples") {
    Rational r = cf_value(Sequence{2, 4}, 0);
    CHECK(r.numerator() == 4);
    CHECK(r.denominator() == 9);
    CHECK(cf_value(Sequence{}, 0) == Rational(0));
    CHECK(cf_value(Sequence{}, 3) == Rational(3));
}

TEST_CASE("sequence parsing and access") {
    CHECK(Sequence::parse("2,4,5,1,1") == Sequence{2, 4, 5, 1, 1});
    CHECK(Sequence::parse("") == Sequence{});
    CHECK_THROWS_AS(Sequence::parse("1,,2"), domain_error);
    CHECK_THROWS_AS(Sequence::parse("1,x"), domain_error);
    CHECK_THROWS_AS(Sequence::parse("1,0"), domain_error);
    Sequence s{3, 1, 4};
    CHECK(s.at1(1) == 3);
    CHECK(s.at1(3) == 4);
    CHECK_THROWS_AS(s.at1(0), domain_error);
    CHECK_THROWS_AS(s.at1(4), domain_error);
    CHECK(s.sub1(2, 1).empty());
    CHECK_THROWS_AS(s.sub1(0, 2), domain_error);
    CHECK(s.str() == "(3,1,4)");
}

TEST_CASE("rational infinity ordering") {
    Rational inf = Rational::infinity();
    CHECK(Rational(BigInt(1000000), BigInt(1)) < inf);
    CHECK(inf == Rational::infinity());
    CHECK_THROWS_AS((void)(inf + Rational(1)), domain_error);
}

TEST_CASE("unit extraction normal form") {
    // Orbit of (5): {(5),(1,4),(4,1),(1,3,1)}; the lexicographic least is
    // (1,3,1). All members carry continuant 5.
    auto orbit = trivial_orbit(Sequence{5});
    CHECK(orbit.size() == 4);
    for (const auto& s : orbit) CHECK(continuant(s) == 5);
    CHECK(unit_normal_form(Sequence{5}) == Sequence{1, 3, 1});
    CHECK(unit_normal_form(Sequence{1, 4}) == Sequence{1, 3, 1});

    // (2,2) ~ (1,1,2) ~ (2,1,1), all continuant 5 but a different class
    // than (5).
    Sequence nf22 = unit_normal_form(Sequence{2, 2});
    CHECK(nf22 == Sequence{1, 1, 1, 1});
    CHECK(unit_normal_form(Sequence{1, 1, 2}) == nf22);
    CHECK(unit_normal_form(Sequence{2, 1, 1}) == nf22);
    CHECK(nf22 != unit_normal_form(Sequence{5}));

    // The worked identification (2,4,5,1,1) ~ (1,1,4,5,1,1) ~ (2,5,4,1,1).
    CHECK(trivially_equal(Sequence{2, 4, 5, 1, 1}, Sequence{1, 1, 4, 5, 1, 1}));
    CHECK(trivially_equal(Sequence{2, 4, 5, 1, 1}, Sequence{2, 5, 4, 1, 1}));

    CHECK_THROWS_AS(unit_normal_form(Sequence{}), domain_error);
}

TEST_CASE("large continuants stay exact") {
    // <1^300> is the 301st Fibonacci number (value computed independently).
    CHECK(to_decimal(continuant(Sequence::repeated(1, 300))) ==
          "359579325206583560961765665172189099052367214309267232255589801");
    // a 200-element block of nines: symmetry and coprimality still exact
    Sequence big = Sequence::repeated(9, 200);
    auto p = continuant_pair(big);
    CHECK(p.full == continuant(big.reversed()));
    CHECK(boost::multiprecision::gcd(p.full, p.truncated) == 1);
    CHECK(split_identity_check(big.sub1(1, 77), big.sub1(78, 200)) == p.full);
}

TEST_CASE("recurrence consistency property") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 400; ++iter) {
        Sequence s = random_sequence(rng, 12, 10, 2);
        BigInt direct = continuant(s);
        Sequence head = s.drop_last();
        CHECK(direct == s.at1(s.size()) * continuant(head) + continuant(head.drop_last()));
    }
}

TEST_CASE("symmetry and unit extraction properties") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        Sequence s = random_sequence(rng, 10, 8, 1);
        CHECK(continuant(s) == continuant(s.reversed()));
        // <a_1+1, rest> == <1, a_1, rest>
        std::vector<Elem> bumped = s.elems();
        bumped[0] += 1;
        std::vector<Elem> extracted = {1};
        extracted.insert(extracted.end(), s.elems().begin(), s.elems().end());
        CHECK(continuant(Sequence(bumped)) == continuant(Sequence(extracted)));
    }
}

TEST_CASE("split identity over all splits") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        Sequence s = random_sequence(rng, 9, 6);
        BigInt whole = continuant(s);
        for (std::int64_t cut = 0; cut <= s.size(); ++cut) {
            CHECK(whole == split_identity_check(s.sub1(1, cut), s.sub1(cut + 1, s.size())));
        }
    }
}

TEST_CASE("consecutive continuants are coprime") {
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 300; ++iter) {
        Sequence s = random_sequence(rng, 10, 9, 1);
        auto p = continuant_pair(s);
        CHECK(boost::multiprecision::gcd(p.full, p.truncated) == 1);
        CHECK(p.full >= p.truncated);
        CHECK(p.truncated >= (s.size() >= 2 ? 1 : 0));
    }
}

TEST_CASE("cf identity against continuant ratio") {
    std::mt19937_64 rng(321);
    for (int iter = 0; iter < 200; ++iter) {
        Sequence s = random_sequence(rng, 8, 6, 1);
        std::uniform_int_distribution<Elem> lead(1, 6);
        Elem a0 = lead(rng);
        Rational cf = cf_value(s, a0);
        Sequence with_lead = Sequence{a0}.concat(s);
        CHECK(cf == Rational(continuant(with_lead), continuant(s)));
    }
}

TEST_CASE("normal form is orbit-invariant and preserves the continuant") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        Sequence s = random_sequence(rng, 6, 5, 1);
        Sequence nf = unit_normal_form(s);
        CHECK(continuant(nf) == continuant(s));
        for (const auto& member : trivial_orbit(s)) {
            CHECK(unit_normal_form(member) == nf);
        }
    }
}
