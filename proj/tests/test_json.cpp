#include <doctest.h>

#include "abel/error.hpp"
#include "abel/series_json.hpp"
#include "abel/series_ops.hpp"
#include "test_support.hpp"

using namespace abel;

TEST_SUITE("json") {

TEST_CASE("rationals serialize as num/den strings") {
    CHECK(to_json(Rational(-7, 12)) == nlohmann::json("-7/12"));
    CHECK(rational_from_json(nlohmann::json("-7/12")) == Rational(-7, 12));
}

TEST_CASE("q-series round trip is byte exact") {
    testing::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        QSeries<Rational> s = testing::rand_qseries(rng, 6);
        std::string dumped = to_json(s).dump();
        CHECK(to_json(qseries_rational_from_json(nlohmann::json::parse(dumped)))
                  .dump() == dumped);
    }
}

TEST_CASE("pq-series round trip keeps kind, window and validity") {
    testing::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        QSeries<PLaurent> s = testing::rand_pq_series(rng, 4, 4);
        PLaurent win = PLaurent::window(10, 7);
        win.set(3, Rational(2, 3));
        win.set(-2, Rational(-1, 5));
        s.set(0, win);
        std::string dumped = to_json(s).dump();
        QSeries<PLaurent> back =
            qseries_plaurent_from_json(nlohmann::json::parse(dumped));
        CHECK(to_json(back).dump() == dumped);
        CHECK(back[0].is_window());
        CHECK(back[0].window_bound() == 10);
        CHECK(back[0].validity() == 7);
    }
}

TEST_CASE("uq-series round trip") {
    testing::Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        QSeries<USeries> s = testing::rand_uq_series(rng, 3, 5);
        std::string dumped = to_json(s).dump();
        CHECK(to_json(qseries_useries_from_json(nlohmann::json::parse(dumped)))
                  .dump() == dumped);
    }
}

TEST_CASE("variable tags") {
    CHECK(to_json(qseries_rational(1))["var"] == "q");
    CHECK(to_json(qseries_plaurent(1))["var"] == "pq");
    CHECK(to_json(qseries_useries(1, 2))["var"] == "uq");
    CHECK_THROWS_AS(
        qseries_rational_from_json(to_json(qseries_plaurent(1))),
        regime_error);
}

}
