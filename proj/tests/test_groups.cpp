#include <doctest.h>

#include <numeric>
#include <random>

#include "cactus/groups.hpp"

using namespace cactus;

namespace {

// Brute-force composition of the interval reversal, written out independently.
std::vector<int> reverse_interval(std::vector<int> v, int p, int q) {
    std::reverse(v.begin() + (p - 1), v.begin() + q);
    return v;
}

std::map<CactusGenerator, FiniteMap<int>> s_hat_images(int n) {
    std::map<CactusGenerator, FiniteMap<int>> images;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            const Permutation s = s_hat(p, q, n);
            images.emplace(CactusGenerator{p, q}, [s](const int& i) { return s(i); });
        }
    return images;
}

std::vector<int> points(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

TEST_CASE("s_hat reverses an interval") {
    CHECK(s_hat(1, 3, 3).images() == std::vector<int>{3, 2, 1});
    CHECK(s_hat(2, 3, 3).images() == std::vector<int>{1, 3, 2});
    CHECK(s_hat(2, 4, 5).images() == reverse_interval({1, 2, 3, 4, 5}, 2, 4));
    CHECK(s_hat(2, 4, 5).images() == std::vector<int>{1, 4, 3, 2, 5});
    CHECK_THROWS_AS(s_hat(3, 3, 4), GroupError);
    CHECK_THROWS_AS(s_hat(0, 2, 4), GroupError);
    CHECK_THROWS_AS(s_hat(2, 5, 4), GroupError);
    for (int n = 2; n <= 6; ++n)
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) CHECK((s_hat(p, q, n) * s_hat(p, q, n)).is_identity());
}

TEST_CASE("cactus relation instances") {
    const auto r2 = cactus_relation_instances(2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].lhs.to_string() == "s(1,2).s(1,2)");
    CHECK(r2[0].rhs.to_string() == "e");

    auto contains = [](const std::vector<CactusRelation>& rels, const std::string& l, const std::string& r) {
        return std::any_of(rels.begin(), rels.end(),
                           [&](const CactusRelation& x) { return x.lhs.to_string() == l && x.rhs.to_string() == r; });
    };
    CHECK(contains(cactus_relation_instances(3), "s(1,3).s(1,2)", "s(2,3).s(1,3)"));
    CHECK(contains(cactus_relation_instances(4), "s(1,2).s(3,4)", "s(3,4).s(1,2)"));
    CHECK_THROWS_AS(cactus_relation_instances(1), GroupError);
}

TEST_CASE("projection to the symmetric group") {
    CHECK(project_to_symmetric(CactusWord::parse("s(1,3).s(1,3)", 3)).is_identity());
    CHECK(project_to_symmetric(BraidWord::parse("g1.g2.g1", 3)).images() == std::vector<int>{3, 2, 1});
    CHECK(project_to_symmetric(CactusWord::parse("s(1,3)", 3)).images() == std::vector<int>{3, 2, 1});
    CHECK(project_to_symmetric(CactusWord(4, {})).is_identity());
    CHECK(project_to_symmetric(BraidWord::parse("G2", 3)) == project_to_symmetric(BraidWord::parse("g2", 3)));
}

TEST_CASE("projection is a homomorphism on random words") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto random_word = [&] {
            std::vector<CactusGenerator> letters;
            for (int k = static_cast<int>(rng() % 6); k > 0; --k) {
                int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
                int q = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
                if (p == q) continue;
                if (p > q) std::swap(p, q);
                letters.push_back({p, q});
            }
            return CactusWord(n, letters);
        };
        const CactusWord a = random_word();
        const CactusWord b = random_word();
        CHECK(project_to_symmetric(a * b) == project_to_symmetric(a) * project_to_symmetric(b));
    }
}

TEST_CASE("braid relations hold in S_n") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& rel : braid_relation_instances(n))
            CHECK(project_to_symmetric(rel.lhs) == project_to_symmetric(rel.rhs));
}

TEST_CASE("s_hat satisfies the cactus presentation") {
    for (int n = 2; n <= 6; ++n) {
        const auto failures = verify_action<CactusWord, int>(s_hat_images(n), cactus_relation_instances(n), points(n));
        CHECK(failures.empty());
    }
}

TEST_CASE("verify_action reports violations") {
    std::map<CactusGenerator, FiniteMap<int>> identity;
    for (int p = 1; p <= 3; ++p)
        for (int q = p + 1; q <= 3; ++q) identity.emplace(CactusGenerator{p, q}, [](const int& i) { return i; });
    std::vector<CactusRelation> squares;
    for (const auto& r : cactus_relation_instances(3))
        if (r.rhs.letters.empty()) squares.push_back(r);
    CHECK(verify_action<CactusWord, int>(identity, squares, points(3)).empty());

    // s(1,2) as a 3-cycle is not an involution.
    auto broken = s_hat_images(3);
    broken[{1, 2}] = [](const int& i) { return i % 3 + 1; };
    const auto failures = verify_action<CactusWord, int>(broken, squares, points(3));
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].relation.to_string() == "s(1,2).s(1,2) = e");
    CHECK(failures[0].lhs_image != failures[0].rhs_image);

    const std::string json = failures_to_json<CactusWord, int>(failures, [](const int& i) { return std::to_string(i); });
    const auto records = failure_records_from_json(json);
    REQUIRE(records.size() == 1);
    CHECK(records[0].relation == "s(1,2).s(1,2) = e");
    CHECK(records[0].witness == std::to_string(failures[0].witness));

    // An image leaving the domain is an error, not a failure.
    auto escaping = s_hat_images(3);
    escaping[{1, 3}] = [](const int& i) { return i + 10; };
    CHECK_THROWS_AS((verify_action<CactusWord, int>(escaping, squares, points(3))), GroupError);

    // Missing generator image.
    std::map<CactusGenerator, FiniteMap<int>> partial{{{1, 2}, [](const int& i) { return i; }}};
    CHECK_THROWS_AS((verify_action<CactusWord, int>(partial, cactus_relation_instances(3), points(3))), GroupError);
}

TEST_CASE("word syntax") {
    CHECK(CactusWord::parse("s(1,3).s(2,3)", 3).to_string() == "s(1,3).s(2,3)");
    CHECK(CactusWord::parse("e", 3).letters.empty());
    CHECK_THROWS_AS(CactusWord::parse("s(1,3)s(2,3)", 3), GroupError);
    CHECK_THROWS_AS(CactusWord::parse("s(3,1)", 3), GroupError);
    const BraidWord b = BraidWord::parse("g3.G3.g1", 4);
    CHECK(b.letters == std::vector<BraidLetter>{{3, 1}, {3, -1}, {1, 1}});
    CHECK(b.to_string() == "g3.G3.g1");
    CHECK(BraidWord::parse(b.to_string(), 4) == b);
    CHECK_THROWS_AS(BraidWord::parse("g4", 4), GroupError);
}
