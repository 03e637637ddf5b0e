#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "trustrec/dataset.hpp"
#include "trustrec/rating_matrix.hpp"
#include "trustrec/trust_network.hpp"

using namespace trustrec;

namespace {

UserId U(std::uint32_t v) { return UserId{v}; }
ItemId I(std::uint32_t v) { return ItemId{v}; }

RatingMatrix two_ratings() {
    RatingMatrix::Builder b;
    b.add(U(1), I(1), 4).add(U(1), I(2), 2);
    return std::move(b).build();
}

}  // namespace

TEST(RatingScale, RejectsEmptyInterval) {
    EXPECT_THROW(RatingScale(5, 5), std::invalid_argument);
    EXPECT_THROW(RatingScale(5, 1), std::invalid_argument);
    EXPECT_TRUE(RatingScale(1, 10).contains(10));
}

TEST(RatingScale, Parse) {
    EXPECT_EQ(parse_scale("1:10"), RatingScale(1, 10));
    EXPECT_EQ(parse_scale("0.5:5"), RatingScale(0.5, 5));
    EXPECT_THROW(parse_scale("1-5"), std::invalid_argument);
    EXPECT_THROW(parse_scale("5:1"), std::invalid_argument);
}

TEST(RatingMatrix, BuilderRejectsOutOfScale) {
    RatingMatrix::Builder b(RatingScale(1, 5));
    EXPECT_THROW(b.add(U(1), I(1), 6), std::out_of_range);
    EXPECT_THROW(b.add(U(1), I(1), 0.5), std::out_of_range);
}

TEST(RatingMatrix, DuplicatesKeepLastValue) {
    RatingMatrix::Builder b;
    b.add(U(1), I(10), 4).add(U(1), I(10), 2);
    EXPECT_EQ(b.duplicates(), 1u);
    const RatingMatrix m = std::move(b).build();
    EXPECT_EQ(m.rating(U(1), I(10)), 2.0);
    EXPECT_EQ(m.rating_count(), 1u);
}

TEST(RatingMatrix, UniverseIncludesUnratedUsers) {
    RatingMatrix::Builder b;
    b.add(U(1), I(1), 3).add_user(U(9)).add_item(I(7));
    const RatingMatrix m = std::move(b).build();
    EXPECT_EQ(m.user_count(), 2u);
    EXPECT_EQ(m.item_count(), 2u);
    EXPECT_EQ(m.rated_user_count(), 1u);
    EXPECT_TRUE(m.profile(U(9)).empty());
    EXPECT_TRUE(m.raters(I(7)).empty());
    EXPECT_TRUE(m.profile(U(12345)).empty());
}

TEST(MeanRating, Examples) {
    const RatingMatrix m = two_ratings();
    EXPECT_EQ(mean_rating(m, U(1)), 3.0);
    EXPECT_EQ(mean_rating(m, U(1), I(2)), 4.0);
    EXPECT_FALSE(mean_rating(m, U(2)).has_value());
    EXPECT_FALSE(mean_rating(RatingView(m).withholding(U(1), I(1)), U(1), I(2)).has_value());
}

TEST(RatingView, WithholdingHidesOneEntry) {
    const RatingMatrix m = two_ratings();
    const RatingView v = RatingView(m).withholding(U(1), I(2));
    EXPECT_FALSE(v.rating(U(1), I(2)).has_value());
    EXPECT_EQ(v.rating_count(U(1)), 1u);
    EXPECT_EQ(v.rater_count(I(2)), 0u);
    EXPECT_TRUE(v.raters(I(2)).empty());
    EXPECT_EQ(v.mean(U(1)), 4.0);
    EXPECT_EQ(v.global_mean(), 4.0);

    const RatingView both_gone = RatingView(m).withholding(U(1), I(2));
    EXPECT_EQ(both_gone.rated_user_count(), 1u);
    RatingMatrix::Builder single;
    single.add(U(3), I(3), 5);
    const RatingMatrix s = std::move(single).build();
    const RatingView empty = RatingView(s).withholding(U(3), I(3));
    EXPECT_EQ(empty.rated_user_count(), 0u);
    EXPECT_FALSE(empty.global_mean().has_value());
    EXPECT_FALSE(empty.mean(U(3)).has_value());
}

TEST(RatingView, WithholdingAbsentPairIsNoop) {
    const RatingMatrix m = two_ratings();
    const RatingView v = RatingView(m).withholding(U(1), I(99));
    EXPECT_EQ(v.rating_count(U(1)), 2u);
    EXPECT_EQ(v.mean(U(1)), 3.0);
}

TEST(ClassifyUser, Boundaries) {
    RatingMatrix::Builder b;
    for (std::uint32_t i = 0; i < 3; ++i) b.add(U(1), I(i), 3);
    for (std::uint32_t i = 0; i < 5; ++i) b.add(U(2), I(i), 3);
    for (std::uint32_t i = 0; i < 6; ++i) b.add(U(3), I(i), 3);
    b.add_user(U(4));
    const RatingMatrix m = std::move(b).build();
    EXPECT_EQ(classify_user(m, U(4)), ColdStartClass::NoRating);
    EXPECT_EQ(classify_user(m, U(1)), ColdStartClass::FewRating);
    EXPECT_EQ(classify_user(m, U(2)), ColdStartClass::FewRating);
    EXPECT_EQ(classify_user(m, U(3)), ColdStartClass::Regular);
    EXPECT_EQ(to_string(ColdStartClass::FewRating), "few");
}

TEST(RatersOf, Fixtures) {
    const Dataset b = fixtures::fixture_b();
    EXPECT_EQ(raters_of(b.ratings, I(13)), (std::vector<UserId>{U(2), U(8), U(11)}));
    const Dataset a = fixtures::fixture_a();
    EXPECT_EQ(raters_of(a.ratings, I(13)),
              (std::vector<UserId>{U(2), U(8), U(11), U(16), U(20)}));
    EXPECT_TRUE(raters_of(a.ratings, I(77)).empty());
}

TEST(CommonItems, Examples) {
    RatingMatrix::Builder b;
    b.add(U(1), I(1), 1).add(U(1), I(2), 2);
    b.add(U(2), I(2), 3).add(U(2), I(3), 4);
    b.add(U(3), I(5), 1);
    b.add(U(4), I(1), 1).add(U(4), I(2), 2).add(U(4), I(3), 3);
    b.add(U(5), I(1), 5).add(U(5), I(2), 5).add(U(5), I(3), 5);
    const RatingMatrix m = std::move(b).build();
    EXPECT_EQ(common_items(m, U(1), U(2)), std::vector<ItemId>{I(2)});
    EXPECT_TRUE(common_items(m, U(1), U(3)).empty());
    EXPECT_EQ(common_items(m, U(4), U(5)), (std::vector<ItemId>{I(1), I(2), I(3)}));
}

TEST(TrustNetwork, SelfLoopsAndParallelEdges) {
    TrustNetwork::Builder b;
    EXPECT_FALSE(b.add(U(7), U(7)));
    EXPECT_TRUE(b.add(U(5), U(2)));
    EXPECT_TRUE(b.add(U(5), U(2)));
    EXPECT_TRUE(b.add(U(5), U(10)));
    EXPECT_EQ(b.self_loops(), 1u);
    EXPECT_EQ(b.accepted(), 3u);
    const TrustNetwork t = std::move(b).build();
    EXPECT_EQ(t.statement_count(), 2u);
    EXPECT_TRUE(t.trusts(U(5), U(10)));
    EXPECT_FALSE(t.trusts(U(10), U(5)));
    EXPECT_EQ(t.endpoints(), (std::vector<UserId>{U(2), U(5), U(10)}));
}

TEST(Dataset, TrustOnlyUsersJoinUniverse) {
    RatingMatrix::Builder rb;
    rb.add(U(1), I(1), 3);
    TrustNetwork::Builder tb;
    tb.add(U(1), U(40));
    const Dataset d = make_dataset(std::move(rb).build(), std::move(tb).build());
    EXPECT_TRUE(d.ratings.has_user(U(40)));
    EXPECT_EQ(classify_user(d.ratings, U(40)), ColdStartClass::NoRating);
}

TEST(DatasetStats, TableValues) {
    const DatasetStats ep = make_stats(49290, 139738, 664824);
    EXPECT_NEAR(ep.avg_ratings_per_user, 13.488, 5e-4);
    EXPECT_NEAR(*ep.sparsity, 0.99990348, 1e-8);

    const DatasetStats ml = make_stats(943, 1682, 100000);
    EXPECT_NEAR(ml.avg_ratings_per_user, 106.0445, 1e-4);
    EXPECT_NEAR(*ml.sparsity, 0.9369533, 1e-7);

    const DatasetStats one = make_stats(1, 1, 1);
    EXPECT_EQ(*one.sparsity, 0.0);
    EXPECT_EQ(one.avg_ratings_per_user, 1.0);
    EXPECT_FALSE(make_stats(0, 3, 0).sparsity.has_value());
}

TEST(DatasetStats, FromFixture) {
    const Dataset a = fixtures::fixture_a();
    const DatasetStats s = dataset_stats(a.ratings, a.trust);
    EXPECT_EQ(s.users, 10u);
    EXPECT_EQ(s.items, 5u);
    EXPECT_EQ(s.ratings, 32u);
    EXPECT_EQ(s.trust_statements, 9u);
    EXPECT_EQ(s.no_rating_users + s.few_rating_users + s.regular_users, s.users);
    EXPECT_NEAR(*s.sparsity + 32.0 / 50.0, 1.0, 1e-12);
}

// Randomized structural checks against an exhaustive scan.
TEST(RatingMatrixProperty, RatersAndClassesMatchScan) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        std::uniform_int_distribution<std::uint32_t> uid(0, 9), iid(0, 9);
        std::uniform_int_distribution<int> star(1, 5), count(0, 100);
        RatingMatrix::Builder b;
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        const int n = count(rng);
        for (int k = 0; k < n; ++k) {
            const auto u = uid(rng), i = iid(rng);
            b.add(U(u), I(i), star(rng));
            seen.insert({u, i});
        }
        b.add_user(U(20));
        const RatingMatrix m = std::move(b).build();
        EXPECT_EQ(m.rating_count(), seen.size());
        std::size_t classes[3] = {0, 0, 0};
        for (UserId u : m.users()) {
            classes[static_cast<int>(classify_user(m, u))]++;
            for (const Rating& r : m.profile(u)) {
                EXPECT_TRUE(m.scale().contains(r.value));
            }
        }
        EXPECT_EQ(classes[0] + classes[1] + classes[2], m.user_count());
        for (ItemId i : m.items()) {
            std::vector<UserId> expect;
            for (const auto& [u, it] : seen) {
                if (it == raw(i)) expect.push_back(U(u));
            }
            EXPECT_EQ(raters_of(m, i), expect);
        }
        for (UserId a : m.users()) {
            for (UserId u : m.users()) {
                if (a != u) {
                    EXPECT_EQ(common_items(m, a, u), common_items(m, u, a));
                }
            }
        }
    }
}
