#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qpart/bijection.hpp"
#include "qpart/errors.hpp"
#include "qpart/overpartitions.hpp"
#include "qpart/partitions.hpp"

using qpart::Color;
using qpart::ColoredPart;
using qpart::ColoredPartition;
using qpart::Overpartition;
using qpart::OverPart;

namespace {

constexpr Color B = Color::Black;
constexpr Color R = Color::Red;

ColoredPartition cp(std::vector<ColoredPart> parts) { return ColoredPartition{std::move(parts)}; }

Overpartition op(std::vector<OverPart> parts) { return Overpartition{std::move(parts)}; }

// Serialization is injective on canonical overpartitions, so sets of
// rendered strings stand in for sets of partitions.
std::set<std::string> render_all(const std::vector<Overpartition>& v) {
    std::set<std::string> out;
    for (const auto& p : v) out.insert(qpart::to_string(p, /*ascii=*/true));
    return out;
}

} // namespace

TEST_CASE("maximal runs split at gaps") {
    // {5,4,3} is one run of consecutive values, {1} another.
    const auto runs = qpart::maximal_runs(cp({{5, B}, {4, R}, {3, B}, {1, B}}));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == std::vector<ColoredPart>{{5, B}, {4, R}, {3, B}});
    CHECK(runs[1] == std::vector<ColoredPart>{{1, B}});

    CHECK(qpart::maximal_runs(cp({})).empty());

    // A single part is its own run.
    const auto single = qpart::maximal_runs(cp({{4, R}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<ColoredPart>{{4, R}});

    // All-consecutive values collapse to one run regardless of colors.
    const auto one = qpart::maximal_runs(cp({{3, B}, {2, R}, {1, B}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 3);
}

TEST_CASE("hand-checked forward images") {
    // Within a run everything but the smallest part is overlined; the
    // smallest is overlined iff Black.
    CHECK(qpart::colored_to_over(cp({{2, B}, {1, R}})) == op({{2, true}, {1, false}}));
    CHECK(qpart::colored_to_over(cp({{2, R}, {1, B}})) == op({{2, true}, {1, true}}));
    CHECK(qpart::colored_to_over(cp({{6, B}})) == op({{6, true}}));
    CHECK(qpart::colored_to_over(cp({{6, R}})) == op({{6, false}}));
    CHECK(qpart::colored_to_over(cp({})) == op({}));

    // Two runs: {5,4,3} with red smallest and {1} black.
    CHECK(qpart::colored_to_over(cp({{5, B}, {4, R}, {3, B}, {1, B}})) ==
          op({{5, true}, {4, true}, {3, true}, {1, true}}));
    CHECK(qpart::colored_to_over(cp({{5, R}, {4, B}, {3, R}, {1, R}})) ==
          op({{5, true}, {4, true}, {3, false}, {1, false}}));
}

TEST_CASE("hand-checked inverse images") {
    CHECK(qpart::over_to_colored(op({{2, true}, {1, false}})) == cp({{2, B}, {1, R}}));
    CHECK(qpart::over_to_colored(op({{2, true}, {1, true}})) == cp({{2, R}, {1, B}}));
    CHECK(qpart::over_to_colored(op({{6, true}})) == cp({{6, B}}));
    CHECK(qpart::over_to_colored(op({{6, false}})) == cp({{6, R}}));
    CHECK(qpart::over_to_colored(op({})) == cp({}));
}

TEST_CASE("forward map is a weight-preserving injection onto the gap family") {
    for (int n = 0; n <= 18; ++n) {
        const auto domain = qpart::enumerate_2crr(n, 1);
        std::vector<Overpartition> images;
        images.reserve(domain.size());
        for (const auto& p : domain) {
            auto img = qpart::colored_to_over(p);
            CHECK(img.weight() == n);
            CHECK(qpart::is_canonical(img));
            CHECK(qpart::is_valid_D(img, 2, 2));
            images.push_back(std::move(img));
        }
        const auto image_set = render_all(images);
        CHECK(image_set.size() == domain.size()); // injective
        CHECK(image_set == render_all(qpart::enumerate_D(2, 2, n))); // surjective
    }
}

TEST_CASE("round trips are the identity") {
    for (int n = 0; n <= 18; ++n) {
        for (const auto& p : qpart::enumerate_2crr(n, 1)) {
            CHECK(qpart::over_to_colored(qpart::colored_to_over(p)) == p);
        }
        for (const auto& q : qpart::enumerate_D(2, 2, n)) {
            CHECK(qpart::colored_to_over(qpart::over_to_colored(q)) == q);
        }
    }
}

TEST_CASE("restriction: no red one maps onto the stricter family") {
    // A red 1 is the only source of a non-overlined 1, so forbidding it
    // lands exactly on the a = 1 family.
    for (int n = 0; n <= 18; ++n) {
        std::vector<Overpartition> images;
        for (const auto& p : qpart::enumerate_2crr(n, 1)) {
            const bool red_one =
                std::any_of(p.parts.begin(), p.parts.end(), [](const ColoredPart& part) {
                    return part.value == 1 && part.color == R;
                });
            auto img = qpart::colored_to_over(p);
            const bool plain_one =
                std::any_of(img.parts.begin(), img.parts.end(), [](const OverPart& part) {
                    return part.value == 1 && !part.overlined;
                });
            CHECK(red_one == plain_one);
            if (!red_one) images.push_back(std::move(img));
        }
        CHECK(render_all(images) == render_all(qpart::enumerate_D(2, 1, n)));
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(qpart::colored_to_over(cp({{2, B}, {2, R}})), qpart::PreconditionError);
    CHECK_THROWS_AS(qpart::colored_to_over(cp({{3, B}, {2, B}})), qpart::PreconditionError);

    // Plain 2 over plain 1 violates the gap rule; two plain ones exceed the
    // allowance; a non-canonical list is ill-formed outright.
    CHECK_THROWS_AS(qpart::over_to_colored(op({{2, false}, {1, false}})), qpart::PreconditionError);
    CHECK_THROWS_AS(qpart::over_to_colored(op({{2, true}, {1, false}, {1, false}})),
                    qpart::PreconditionError);
    CHECK_THROWS_AS(qpart::over_to_colored(op({{1, false}, {1, true}})), qpart::PreconditionError);
}
