#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <random>

#include "pgap/error.hpp"
#include "pgap/finite_field.hpp"
#include "pgap/suites.hpp"

using namespace pgap;

namespace {

// Schoolbook polynomial arithmetic mod (p, modulus); independent of the tables.
struct NaiveField {
  std::uint32_t p, k;
  std::vector<std::uint32_t> mod;

  std::vector<std::uint32_t> unpack(Elem a) const {
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i, a /= p) c[i] = a % p;
    return c;
  }
  Elem pack(const std::vector<std::uint32_t>& c) const {
    Elem v = 0;
    for (std::uint32_t i = k; i-- > 0;) v = v * p + c[i];
    return v;
  }
  Elem add(Elem a, Elem b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  Elem mul(Elem a, Elem b) const {
    auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
    }
    std::vector<std::uint32_t> out(k);
    for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }
};

}  // namespace

TEST_CASE("make_field_spec examples") {
  CHECK(make_field_spec(2, 4).order() == 16);
  CHECK(make_field_spec(3, 3).order() == 27);
  // x^2 + 1 has no root mod 7 (-1 is a non-residue), so it is accepted.
  const FieldSpec s = make_field_spec(7, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(s.order() == 49);
  // x^2 + 1 = (x + 2)(x + 3) over GF(5).
  CHECK_THROWS_AS(make_field_spec(5, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);
  CHECK_THROWS_AS(make_field_spec(4, 1), Error);
  CHECK_THROWS_AS(make_field_spec(2, 3, std::vector<std::uint32_t>{1, 0, 0, 1}), Error);
}

TEST_CASE("default modulus is the smallest irreducible") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {7, 2}}) {
    const auto m = default_modulus(p, k);
    REQUIRE(m.size() == k + 1);
    CHECK(m[k] == 1);
    CHECK(is_irreducible(p, m));
    // Every monic polynomial that sorts earlier (low degree coefficients first) is reducible.
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint32_t> cand(k + 1, 0);
      std::uint64_t rest = idx;
      for (std::uint32_t i = 0; i < k; ++i, rest /= p) cand[i] = static_cast<std::uint32_t>(rest % p);
      cand[k] = 1;
      if (std::lexicographical_compare(cand.begin(), cand.end(), m.begin(), m.end())) CHECK_FALSE(is_irreducible(p, cand));
    }
  }
}

TEST_CASE("arith examples") {
  const FieldPtr f7 = Field::create(7, 1);
  CHECK(arith(FieldElement(f7, 3), FieldElement(f7, 5), ArithOp::mul).value() == 1);
  const FieldPtr f16 = Field::create(2, 4);
  for (Elem a = 1; a < 16; ++a) {
    CHECK(f16->pow(a, 15) == 1);
    CHECK(f16->mul(a, f16->inv(a)) == 1);
  }
  CHECK_THROWS_AS(f16->inv(0), Error);
  CHECK_THROWS_AS(arith(FieldElement(f16, 1), FieldElement(f16, 0), ArithOp::div), Error);
  CHECK_THROWS_AS(FieldElement(f16, 1) + FieldElement(f7, 1), Error);
}

TEST_CASE("table arithmetic agrees with schoolbook polynomial arithmetic") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 3}, {7, 2}, {2, 7}, {5, 3}}) {
    const FieldPtr f = Field::create(p, k);
    const NaiveField nf{p, k, f->spec().modulus};
    const Elem q = f->order();
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        REQUIRE(f->add(a, b) == nf.add(a, b));
        REQUIRE(f->mul(a, b) == nf.mul(a, b));
      }
  }
}

TEST_CASE("log/Zech arithmetic for large fields agrees with schoolbook arithmetic") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 12}, {3, 6}, {7, 4}}) {
    const FieldPtr f = Field::create(p, k);
    const NaiveField nf{p, k, f->spec().modulus};
    std::mt19937_64 rng(p * 100 + k);
    for (int t = 0; t < 20000; ++t) {
      const Elem a = static_cast<Elem>(rng() % f->order()), b = static_cast<Elem>(rng() % f->order());
      REQUIRE(f->add(a, b) == nf.add(a, b));
      REQUIRE(f->mul(a, b) == nf.mul(a, b));
      REQUIRE(f->sub(f->add(a, b), b) == a);
      if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("field axioms and Frobenius for q <= 128") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 3}, {2, 4}, {3, 3}, {7, 2}, {2, 7}, {5, 3}, {11, 2}}) {
    const FieldPtr f = Field::create(p, k);
    CAPTURE(f->spec().describe());
    for (const auto& c : field_axiom_checks(*f, 7)) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    // Frobenius fixes exactly the prime subfield.
    std::set<Elem> fixed;
    for (Elem a = 0; a < f->order(); ++a)
      if (f->frobenius(a) == a) fixed.insert(a);
    CHECK(fixed.size() == p);
    for (Elem a = 0; a < p; ++a) CHECK(fixed.count(a) == 1);
  }
}

TEST_CASE("embeddings are injective ring homomorphisms") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}}) {
    const FieldPtr base = Field::create(p, k);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const FieldPtr ext = extension_field(*base, m);
      const Embedding emb(base, ext);
      CHECK(emb(0) == 0);
      CHECK(emb(1) == 1);
      std::set<Elem> image;
      for (Elem a = 0; a < base->order(); ++a) {
        image.insert(emb(a));
        for (Elem b = 0; b < base->order(); ++b) {
          REQUIRE(emb(base->mul(a, b)) == ext->mul(emb(a), emb(b)));
          REQUIRE(emb(base->add(a, b)) == ext->add(emb(a), emb(b)));
        }
      }
      CHECK(image.size() == base->order());
    }
  }
  // GF(2) lands in the prime subfield of GF(16).
  const FieldPtr f2 = Field::create(2, 1), f16 = Field::create(2, 4);
  CHECK(embed(FieldElement(f2, 1), f16).value() == 1);
  CHECK(embed(FieldElement(f2, 0), f16).value() == 0);
}

TEST_CASE("corrupted modulus is diagnosed") {
  const auto bad = Field::create_unchecked({2, 3, {1, 0, 0, 1}});
  CHECK_FALSE(bad->is_field());
  const auto checks = field_axiom_checks(*bad, 1);
  CHECK_FALSE(all_passed(checks));
}
