#include <gtest/gtest.h>

#include <set>

#include "frobgram/field_tables.hpp"
#include "frobgram/finite_field.hpp"
#include "frobgram/prime_poly.hpp"

using namespace frobgram;

namespace {

FieldElement el(const FieldPtr& f, std::uint64_t index) { return FieldElement::from_index(f, index); }

std::vector<std::pair<std::uint32_t, unsigned>> small_fields(unsigned max_q) {
    std::vector<std::pair<std::uint32_t, unsigned>> out;
    for (std::uint32_t p = 2; p <= max_q; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (unsigned k = 1; q <= max_q; ++k, q *= p) out.emplace_back(p, k);
    }
    return out;
}

}  // namespace

TEST(ConstructField, PrimeFieldHasLinearModulus) {
    const auto f = construct_field(3, 1);
    EXPECT_EQ(f->modulus, (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(f->q, 3);
}

TEST(ConstructField, F4UsesTheOnlyIrreducibleQuadratic) {
    const auto f = construct_field(2, 2);
    EXPECT_EQ(f->modulus, (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(f->q, 4);
}

TEST(ConstructField, RejectsCompositeAndZeroDegree) {
    try {
        construct_field(4, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrime);
    }
    try {
        construct_field(3, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidDegree);
    }
}

// Sieve oracle: the smallest monic degree-k polynomial that is not a product of two
// monic polynomials of positive degree. Order: coefficient of t^0 most significant.
TEST(ConstructField, ModulusIsSmallestIrreducibleBySieve) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                                         {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3},
                                                                         {7, 2}}) {
        const auto monic = [&](unsigned d) {
            std::vector<PrimePoly> out;
            std::uint64_t total = 1;
            for (unsigned i = 0; i < d; ++i) total *= p;
            for (std::uint64_t n = 0; n < total; ++n) {
                PrimePoly f(d + 1);
                std::uint64_t r = n;
                for (unsigned i = 0; i < d; ++i, r /= p) f[i] = static_cast<std::uint32_t>(r % p);
                f[d] = 1;
                out.push_back(f);
            }
            return out;
        };
        std::set<PrimePoly> reducible;
        for (unsigned d = 1; d < k; ++d)
            for (const auto& a : monic(d))
                for (const auto& b : monic(k - d)) reducible.insert(prime_poly::mul(a, b, p));
        const auto candidates = monic(k);
        const auto key = [](const PrimePoly& f) { return std::vector<std::uint32_t>(f.begin(), f.end()); };
        std::optional<PrimePoly> best;
        for (const auto& f : candidates)
            if (!reducible.count(f) && (!best || key(f) < key(*best))) best = f;
        ASSERT_TRUE(best);
        EXPECT_EQ(construct_field(p, k)->modulus, *best) << "p=" << p << " k=" << k;
    }
}

TEST(Arithmetic, WorkedExamples) {
    const auto f3 = construct_field(3, 1), f5 = construct_field(5, 1), f4 = construct_field(2, 2);
    EXPECT_EQ(arithmetic(el(f3, 1), el(f3, 2), ArithOp::add), el(f3, 0));
    EXPECT_EQ(arithmetic(el(f5, 2), el(f5, 3), ArithOp::mul), el(f5, 1));
    // t * t = t + 1 in F_2[t]/(t^2 + t + 1); index of t is 2, of t + 1 is 3.
    EXPECT_EQ(arithmetic(el(f4, 2), el(f4, 2), ArithOp::mul), el(f4, 3));
    EXPECT_EQ(arithmetic(el(f5, 1), el(f5, 3), ArithOp::sub), el(f5, 3));
}

TEST(Arithmetic, MixedFieldsRejected) {
    const auto f3 = construct_field(3, 1), f9 = construct_field(3, 2);
    try {
        (void)(el(f3, 1) + el(f9, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FieldMismatch);
    }
}

TEST(Invert, WorkedExamples) {
    const auto f5 = construct_field(5, 1), f3 = construct_field(3, 1);
    EXPECT_EQ(invert(el(f5, 2)), el(f5, 3));
    EXPECT_EQ(invert(el(f3, 1)), el(f3, 1));
    try {
        invert(el(f3, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DivisionByZero);
    }
}

TEST(Power, WorkedExamples) {
    const auto f5 = construct_field(5, 1), f3 = construct_field(3, 1);
    EXPECT_EQ(power(el(f5, 2), 4), el(f5, 1));
    EXPECT_EQ(power(el(f3, 2), 2), el(f3, 1));
    EXPECT_EQ(power(el(f3, 0), 0), el(f3, 1));
    EXPECT_EQ(power(el(f3, 0), 5), el(f3, 0));
}

TEST(Enumerate, WorkedExamples) {
    EXPECT_EQ(enumerate_elements(construct_field(2, 2)).size(), 4u);
    const auto f9 = enumerate_elements(construct_field(3, 2));
    ASSERT_EQ(f9.size(), 9u);
    EXPECT_TRUE(f9.front().is_zero());
    const auto f3 = construct_field(3, 1);
    EXPECT_EQ(enumerate_elements(f3), (std::vector<FieldElement>{el(f3, 0), el(f3, 1), el(f3, 2)}));
}

TEST(Enumerate, Deterministic) {
    const auto a = enumerate_elements(construct_field(5, 2));
    const auto b = enumerate_elements(construct_field(5, 2));
    EXPECT_EQ(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].index(), i);
}

TEST(ExtensionOf, WorkedExamples) {
    EXPECT_EQ(extension_of(construct_field(3, 1), 2)->q, 9);
    EXPECT_EQ(extension_of(construct_field(2, 2), 3)->q, 64);
    const auto f5 = construct_field(5, 1);
    EXPECT_EQ(*extension_of(f5, 1), *f5);
}

TEST(IsSquare, WorkedExamples) {
    const auto f3 = construct_field(3, 1), f9 = construct_field(3, 2), f7 = construct_field(7, 1);
    EXPECT_FALSE(is_square(el(f3, 2)));
    EXPECT_TRUE(is_square(el(f3, 1)));
    EXPECT_TRUE(is_square(el(f7, 1)));
    EXPECT_TRUE(is_square(FieldElement::constant(f9, 2)));
    try {
        is_square(el(f3, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroInput);
    }
    try {
        is_square(el(construct_field(2, 2), 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EvenCharacteristic);
    }
}

// Exhaustive group axioms for every field with q <= 81, via tables built from FieldElement ops.
TEST(FieldProperties, GroupAxiomsUpTo81) {
    for (auto [p, k] : small_fields(81)) {
        const auto field = construct_field(p, k);
        const auto elems = enumerate_elements(field);
        const std::size_t q = elems.size();
        ASSERT_EQ(Integer(q), field->q);
        std::vector<std::uint32_t> add(q * q), mul(q * q);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
                add[a * q + b] = static_cast<std::uint32_t>((elems[a] + elems[b]).index());
                mul[a * q + b] = static_cast<std::uint32_t>((elems[a] * elems[b]).index());
            }
        for (std::size_t a = 0; a < q; ++a) {
            EXPECT_EQ(add[a * q + 0], a);
            EXPECT_EQ(mul[a * q + 1], a);
            std::set<std::uint32_t> row_add(add.begin() + a * q, add.begin() + (a + 1) * q);
            EXPECT_EQ(row_add.size(), q);  // additive inverse exists (Latin row)
            if (a != 0) {
                std::set<std::uint32_t> row_mul;
                for (std::size_t b = 1; b < q; ++b) row_mul.insert(mul[a * q + b]);
                EXPECT_EQ(row_mul.size(), q - 1);
                EXPECT_EQ(row_mul.count(0), 0u);
            }
            for (std::size_t b = 0; b < q; ++b) {
                EXPECT_EQ(add[a * q + b], add[b * q + a]);
                EXPECT_EQ(mul[a * q + b], mul[b * q + a]);
            }
        }
        bool assoc = true;
        for (std::size_t a = 0; a < q && assoc; ++a)
            for (std::size_t b = 0; b < q && assoc; ++b)
                for (std::size_t c = 0; c < q && assoc; ++c) {
                    assoc = add[add[a * q + b] * q + c] == add[a * q + add[b * q + c]] &&
                            mul[mul[a * q + b] * q + c] == mul[a * q + mul[b * q + c]] &&
                            mul[a * q + add[b * q + c]] == add[mul[a * q + b] * q + mul[a * q + c]];
                }
        EXPECT_TRUE(assoc) << "q=" << q;
    }
}

TEST(FieldProperties, FrobeniusFixesEveryElement) {
    for (auto [p, k] : small_fields(81)) {
        const auto field = construct_field(p, k);
        for (const auto& a : enumerate_elements(field)) {
            EXPECT_EQ(power(a, field->q), a);
            if (!a.is_zero()) {
                EXPECT_EQ(a * invert(a), FieldElement::one(field));
            }
        }
    }
}

TEST(FieldProperties, IsSquareMatchesExhaustiveSquaring) {
    for (auto [p, k] : small_fields(81)) {
        if (p == 2) continue;
        const auto field = construct_field(p, k);
        const auto elems = enumerate_elements(field);
        std::set<std::uint64_t> squares;
        for (const auto& y : elems) squares.insert((y * y).index());
        for (const auto& a : elems)
            if (!a.is_zero()) {
                EXPECT_EQ(is_square(a), squares.count(a.index()) == 1) << "q=" << elems.size();
            }
    }
}

// The log-table fast path must reproduce polynomial arithmetic exactly.
TEST(FieldTables, AgreeWithPolynomialArithmetic) {
    for (auto [p, k] : small_fields(81)) {
        const auto field = construct_field(p, k);
        const auto tables = FieldTables::get(field);
        const auto elems = enumerate_elements(field);
        for (const auto& a : elems) {
            const auto ia = static_cast<std::uint32_t>(a.index());
            EXPECT_EQ(tables->neg(ia), (-a).index());
            if (!a.is_zero()) {
                EXPECT_EQ(tables->inv(ia), invert(a).index());
                if (p != 2) {
                    EXPECT_EQ(tables->is_square(ia), is_square(a));
                }
            }
            for (const auto& b : elems) {
                const auto ib = static_cast<std::uint32_t>(b.index());
                ASSERT_EQ(tables->add(ia, ib), (a + b).index());
                ASSERT_EQ(tables->mul(ia, ib), (a * b).index());
                ASSERT_EQ(tables->sub(ia, ib), (a - b).index());
            }
        }
    }
}

TEST(PrimePoly, SquarefreeAndGcd) {
    // x^2 (x + 1) over F_3 is not squarefree; x^3 + x is.
    EXPECT_FALSE(prime_poly::is_squarefree({0, 0, 1, 1}, 3));
    EXPECT_TRUE(prime_poly::is_squarefree({0, 1, 0, 1}, 3));
    EXPECT_EQ(prime_poly::gcd({0, 1, 0, 1}, {0, 1}, 3), (PrimePoly{0, 1}));
    EXPECT_EQ(prime_poly::degree({}), -1);
}
