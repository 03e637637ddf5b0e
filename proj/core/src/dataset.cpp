#include "trustrec/dataset.hpp"

namespace trustrec {

Dataset make_dataset(RatingMatrix ratings, TrustNetwork trust) {
    const auto endpoints = trust.endpoints();
    bool missing = false;
    for (UserId u : endpoints) {
        if (!ratings.has_user(u)) {
            missing = true;
            break;
        }
    }
    if (!missing) return {std::move(ratings), std::move(trust)};

    RatingMatrix::Builder b(ratings);
    for (UserId u : endpoints) b.add_user(u);
    return {std::move(b).build(), std::move(trust)};
}

DatasetStats make_stats(std::size_t users, std::size_t items, std::size_t ratings,
                        std::size_t trust_statements) {
    DatasetStats s;
    s.users = users;
    s.items = items;
    s.ratings = ratings;
    s.trust_statements = trust_statements;
    if (users > 0 && items > 0) {
        const double cells = static_cast<double>(users) * static_cast<double>(items);
        s.sparsity = 1.0 - static_cast<double>(ratings) / cells;
    }
    if (users > 0) {
        s.avg_ratings_per_user = static_cast<double>(ratings) / static_cast<double>(users);
        s.avg_trustees_per_user =
            static_cast<double>(trust_statements) / static_cast<double>(users);
    }
    return s;
}

DatasetStats dataset_stats(const RatingMatrix& matrix, const TrustNetwork& trust) {
    DatasetStats s = make_stats(matrix.user_count(), matrix.item_count(), matrix.rating_count(),
                                trust.statement_count());
    for (UserId u : matrix.users()) {
        switch (classify_user(matrix, u)) {
            case ColdStartClass::NoRating: ++s.no_rating_users; break;
            case ColdStartClass::FewRating: ++s.few_rating_users; break;
            case ColdStartClass::Regular: ++s.regular_users; break;
        }
    }
    return s;
}

}  // namespace trustrec
