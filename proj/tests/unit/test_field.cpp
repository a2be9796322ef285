#include "sumnet/field.hpp"

#include <random>
#include <set>

#include "doctest.h"

using namespace sumnet;

namespace {

// independent root-check oracle for quadratics/cubics over GF(p)
bool has_root_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0, xe = 1;
        for (std::uint32_t c : poly) {
            acc = (acc + c * xe) % p;
            xe = (xe * x) % p;
        }
        if (acc == 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("prime fields and modulus selection") {
    const auto f2 = Fq::make(2, 1);
    CHECK(f2->order() == 2);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});  // x

    const auto f3 = Fq::make(3, 1);
    CHECK(f3->order() == 3);

    // oracle: the only monic irreducible quadratic over GF(2), by root checking
    std::vector<std::vector<std::uint32_t>> irreducible_quadratics;
    for (std::uint32_t c0 = 0; c0 < 2; ++c0)
        for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
            const std::vector<std::uint32_t> cand{c0, c1, 1};
            if (!has_root_mod_p(cand, 2)) irreducible_quadratics.push_back(cand);
        }
    REQUIRE(irreducible_quadratics.size() == 1);
    CHECK(irreducible_quadratics[0] == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1
    CHECK(Fq::make(2, 2)->modulus() == irreducible_quadratics[0]);

    CHECK_THROWS_AS(Fq::make(4, 1), NotPrime);
    CHECK_THROWS_AS(Fq::make(1, 1), NotPrime);
    CHECK_THROWS_AS(Fq::make(2, 0), InvalidParameter);
}

TEST_CASE("modulus selection is deterministic, low-degree coefficients compared first") {
    using P = std::vector<std::uint32_t>;
    // hand-derived: among monic irreducibles, the coefficient tuple
    // (c0, c1, ...) that is lexicographically smallest wins
    CHECK(Fq::make(2, 3)->modulus() == P{1, 0, 1, 1});  // x^3+x^2+1 beats x^3+x+1: (1,0,1) < (1,1,0)
    CHECK(Fq::make(3, 2)->modulus() == P{1, 0, 1});     // x^2+1 (x^2, x^2+x, x^2+2x all factor)
    CHECK(Fq::make(2, 4)->modulus() == P{1, 0, 0, 1, 1});  // x^4+x^3+1; x^4+1 = (x+1)^4
    CHECK(Fq::make(3, 3)->modulus() == P{1, 0, 2, 1});  // x^3+1 and x^3+x^2+1 have roots 2 and 1
    CHECK(Fq::make(5, 2)->modulus() == P{1, 1, 1});     // x^2+1 has the root 2 over GF(5)
}

TEST_CASE("modulus is irreducible for the extension fields in active use") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const auto f = Fq::make(p, k);
        const auto& mod = f->modulus();
        REQUIRE(mod.size() == k + 1);
        CHECK(mod[k] == 1);  // monic
        if (k == 2 || k == 3) CHECK(!has_root_mod_p(mod, p));
        CHECK(poly_irreducible(mod, p));
    }
}

TEST_CASE("element inverses") {
    const auto f3 = Fq::make(3);
    CHECK(f3->inv(2) == 2);  // 2*2 = 4 = 1 mod 3

    // oracle: scan all nonzero elements of GF(5) for the product 1
    const auto f5 = Fq::make(5);
    FqElem expected = 0;
    for (FqElem b = 1; b < 5; ++b)
        if (f5->mul(2, b) == f5->one()) expected = b;
    CHECK(expected == 3);
    CHECK(f5->inv(2) == 3);

    // GF(4): w * (w+1) = w^2 + w = 1 with w^2 = w + 1
    const auto f4 = Fq::make(2, 2);
    const FqElem w = f4->element({0, 1});
    const FqElem w1 = f4->element({1, 1});
    CHECK(f4->mul(w, w1) == f4->one());

    CHECK_THROWS_AS(f4->inv(0), DivisionByZero);
}

TEST_CASE("canonical element order") {
    CHECK(Fq::make(2)->elements() == std::vector<FqElem>{0, 1});
    CHECK(Fq::make(3)->elements() == std::vector<FqElem>{0, 1, 2});
    const auto f4 = Fq::make(2, 2);
    const auto elems = f4->elements();
    REQUIRE(elems.size() == 4);
    CHECK(f4->coeffs(elems[0]) == std::vector<std::uint32_t>{0, 0});
    CHECK(f4->coeffs(elems[1]) == std::vector<std::uint32_t>{1, 0});
    CHECK(f4->coeffs(elems[2]) == std::vector<std::uint32_t>{0, 1});  // w
    CHECK(f4->coeffs(elems[3]) == std::vector<std::uint32_t>{1, 1});  // w+1
}

TEST_CASE("field axioms exhaustively for small orders, randomized above") {
    for (const std::string spec : {"2", "3", "2^2", "5", "7", "2^3", "3^2", "11", "13", "2^4"}) {
        const auto f = Fq::parse(spec);
        const Fq& F = *f;
        const auto elems = F.elements();
        CAPTURE(spec);
        for (FqElem a : elems) {
            CHECK(F.add(a, F.zero()) == a);
            CHECK(F.mul(a, F.one()) == a);
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
        if (F.order() <= 16) {
            for (FqElem a : elems)
                for (FqElem b : elems) {
                    CHECK(F.add(a, b) == F.add(b, a));
                    CHECK(F.mul(a, b) == F.mul(b, a));
                    for (FqElem c : elems) {
                        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    }
                }
        }
    }
    // randomized triples for the larger orders
    for (const std::string spec : {"5^2", "3^3", "7^2", "2^6"}) {
        const auto f = Fq::parse(spec);
        const Fq& F = *f;
        CAPTURE(spec);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<FqElem> pick(0, F.order() - 1);
        for (int i = 0; i < 1000; ++i) {
            const FqElem a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("characteristic and Frobenius") {
    for (const std::string spec : {"2", "3", "2^2", "5", "2^3", "3^2", "2^4"}) {
        const auto f = Fq::parse(spec);
        const Fq& F = *f;
        CAPTURE(spec);
        FqElem acc = F.zero();
        for (std::uint32_t i = 1; i < F.characteristic(); ++i) {
            acc = F.add(acc, F.one());
            CHECK(acc != F.zero());
        }
        CHECK(F.add(acc, F.one()) == F.zero());
        for (std::int64_t c = 0; c <= 40; ++c) CHECK(F.char_divides(c) == (c % F.characteristic() == 0));
        if (F.order() <= 16)
            for (FqElem a : F.elements())
                for (FqElem b : F.elements())
                    CHECK(F.pow(F.add(a, b), F.characteristic()) ==
                          F.add(F.pow(a, F.characteristic()), F.pow(b, F.characteristic())));
    }
}

TEST_CASE("table-backed and computed inverses agree") {
    for (const std::string spec : {"3", "2^2", "2^4", "5", "7"}) {
        const auto f = Fq::parse(spec);
        for (FqElem a : f->elements())
            if (a != 0) CHECK(f->inv(a) == f->pow(a, f->order() - 2));
    }
}

TEST_CASE("orders beyond the lookup-table range") {
    // q > 256 exercises the direct polynomial arithmetic path
    for (const std::string spec : {"17^2", "2^9", "3^6"}) {
        const auto f = Fq::parse(spec);
        const Fq& F = *f;
        CAPTURE(spec);
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<FqElem> pick(0, F.order() - 1);
        for (int i = 0; i < 500; ++i) {
            const FqElem a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.inv(a) == F.pow(a, F.order() - 2));
            }
        }
        FqElem acc = F.zero();
        for (std::uint32_t i = 0; i < F.characteristic(); ++i) acc = F.add(acc, F.one());
        CHECK(acc == F.zero());
    }
}

TEST_CASE("nonzero elements form a multiplicative group") {
    for (const std::string spec : {"2^2", "3^2", "2^4"}) {
        const auto f = Fq::parse(spec);
        const auto elems = f->elements();
        std::set<FqElem> nonzero(elems.begin() + 1, elems.end());
        CAPTURE(spec);
        for (FqElem a : nonzero) {
            std::set<FqElem> row;
            for (FqElem b : nonzero) row.insert(f->mul(a, b));
            CHECK(row == nonzero);  // permutation, hence closure + cancellation
        }
    }
}

TEST_CASE("integer embedding via repeated addition of one") {
    const auto f5 = Fq::make(5);
    CHECK(f5->from_int(2) == 2);
    CHECK(f5->from_int(7) == 2);
    CHECK(f5->from_int(-1) == 4);
    const auto f4 = Fq::make(2, 2);
    CHECK(f4->from_int(3) == f4->one());  // 3 = 1 mod 2 inside the prime subfield
    CHECK(f4->from_int(6) == f4->zero());
}

TEST_CASE("spec strings, parsing and rendering") {
    CHECK(Fq::make(3)->spec_string() == "3");
    CHECK(Fq::make(2, 2)->spec_string() == "2^2");
    CHECK(*Fq::parse("2^2") == *Fq::make(2, 2));
    CHECK(*Fq::parse(" 5 ") == *Fq::make(5));
    CHECK_THROWS_AS(Fq::parse("abc"), ParseError);
    CHECK_THROWS_AS(Fq::parse("2^"), ParseError);
    CHECK_THROWS_AS(Fq::parse(""), ParseError);
    CHECK_THROWS_AS(Fq::parse("4"), NotPrime);

    const auto f4 = Fq::make(2, 2);
    CHECK(f4->render(f4->element({1, 1})) == "[1,1]");
    CHECK(Fq::make(5)->render(3) == "[3]");
}
