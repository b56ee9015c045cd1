#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ifsquad/geometry.hpp"
#include "ifsquad/partition.hpp"
#include "ifsquad/presets.hpp"
#include "ifsquad/summation.hpp"

using namespace ifsq;

TEST_CASE("uniform partition hits the expected level") {
    const Attractor a = preset("cantor(1/3)").attractor;
    const Partition p = partition_lh(a, 0.2);
    CHECK(p.size() == 4);
    for (const VecIndex& idx : p.indices) CHECK(idx.size() == 2);
}

TEST_CASE("coarse parameter yields the whole attractor") {
    const Attractor a = preset("cantor(1/3)").attractor;
    const Partition p = partition_lh(a, 2.0 * a.diam);
    REQUIRE(p.size() == 1);
    CHECK(p.indices.front().empty());
    // ties stop refinement
    const Partition q = partition_lh(a, a.diam);
    REQUIRE(q.size() == 1);
    CHECK(q.indices.front().empty());
}

TEST_CASE("graded partition of the non-uniform cantor set") {
    const Attractor a = preset("fig3-cantor").attractor;
    const Partition p = partition_lh(a, 3.0 / 32.0);  // in [1/16, 1/8)
    const std::vector<VecIndex> expected = {{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2}, {1, 2, 1},
                                            {1, 2, 2},    {2, 1, 1},    {2, 1, 2}, {2, 2}};
    CHECK(p.indices == expected);
}

TEST_CASE("partition indices are lexicographic, non-nested and h-maximal") {
    for (const char* name : {"cantor(1/3)", "fig3-cantor", "koch-snowflake", "eq62-nonuniform"}) {
        const Attractor a = preset(name).attractor;
        const Partition p = partition_lh(a, 0.21 * a.diam);
        CAPTURE(name);
        CHECK(std::is_sorted(p.indices.begin(), p.indices.end()));
        for (const VecIndex& idx : p.indices) {
            const SubComponent sc = subcomponent(a, idx);
            CHECK(sc.diam <= p.h);
            REQUIRE(!idx.empty());
            VecIndex parent(idx.begin(), idx.end() - 1);
            CHECK(subcomponent(a, parent).diam > p.h);
        }
        for (std::size_t i = 0; i + 1 < p.indices.size(); ++i) {
            const VecIndex& cur = p.indices[i];
            const VecIndex& nxt = p.indices[i + 1];
            const bool prefix = cur.size() <= nxt.size() && std::equal(cur.begin(), cur.end(), nxt.begin());
            CHECK_FALSE(prefix);
        }
    }
}

TEST_CASE("partition measures sum to the total") {
    for (const char* name : {"cantor(1/3)", "cantor-dust(1/3)", "fig3-cantor", "koch-snowflake"}) {
        const Attractor a = preset(name).attractor;
        for (double frac : {0.5, 0.11, 0.034}) {
            const Partition p = partition_lh(a, frac * a.diam);
            KahanSum s;
            for (const VecIndex& idx : p.indices) s.add(subcomponent(a, idx).measure);
            CAPTURE(name);
            CHECK(std::abs(s.value() - a.measure) <= 1e-12 * a.measure);
        }
    }
}

TEST_CASE("uniform partition sizes follow the level formula") {
    const Attractor dust = preset("cantor-dust(1/3)").attractor;
    for (double h : {0.9, 0.4, 0.2, 0.1, 0.05, 0.01}) {
        const int ell = static_cast<int>(std::ceil(std::log(h / dust.diam) / std::log(1.0 / 3.0)));
        const Partition p = partition_lh(dust, h);
        CHECK(p.size() == static_cast<std::size_t>(std::pow(4.0, ell)));
    }
}

TEST_CASE("barycentres of symmetric presets") {
    CHECK(barycentre(preset("cantor(1/3)").attractor)[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(barycentre(preset("interval").attractor)[0] == doctest::Approx(0.5).epsilon(1e-14));
    const Vec dust_bc = barycentre(preset("cantor-dust(1/3)").attractor);
    CHECK(dust_bc[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dust_bc[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("barycentre of the rotated attractor matches the averaging iteration") {
    // The self-similar mean is the fixed point of x -> sum_m ratio_m^d s_m(x);
    // iterating that map is the telescoped deep-level one-point rule for the
    // identity integrand with non-barycentre nodes, an independent route.
    const Attractor a = preset("eq62-nonuniform").attractor;
    Vec x(0.3, -0.2);
    for (int iter = 0; iter < 120; ++iter) {
        Vec next = Vec::zero(2);
        for (const Similarity& s : a.maps) next = next + s(x) * std::pow(s.ratio(), a.dim);
        x = next;
    }
    CHECK(dist(x, barycentre(a)) < 1e-8);
}

TEST_CASE("rule nodes and weights for the cantor set") {
    const Attractor a = preset("cantor(1/3)").attractor;
    const QuadratureRule r = rule_from_partition(partition_lh(a, 0.4));
    REQUIRE(r.size() == 2);
    CHECK(r.nodes[0][0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(r.nodes[1][0] == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("single-component rule") {
    const Attractor a = preset("cantor(1/3)").attractor;
    const QuadratureRule r = rule_from_partition(partition_lh(a, 2.0));
    REQUIRE(r.size() == 1);
    CHECK(r.nodes[0][0] == doctest::Approx(0.5));
    CHECK(r.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("snowflake partition sizes match the known counts") {
    const Attractor a = preset("koch-snowflake").attractor;
    CHECK(partition_lh(a, 0.4).size() == 55);
    CHECK(partition_lh(a, 0.3).size() == 133);
}

TEST_CASE("weight sums equal the measure") {
    for (const char* name : {"cantor(1/3)", "cantor-dust(0.3)", "table1-III", "koch-snowflake"}) {
        const Attractor a = preset(name).attractor;
        for (double frac : {0.6, 0.2, 0.07}) {
            const QuadratureRule r = rule_from_partition(partition_lh(a, frac * a.diam));
            CAPTURE(name);
            CHECK(std::abs(r.weight_sum() - a.measure) <= 1e-12 * a.measure);
        }
    }
}

TEST_CASE("first moment exactness") {
    for (const char* name : {"cantor(1/3)", "cantor-dust(1/3)", "eq62-nonuniform"}) {
        const Attractor a = preset(name).attractor;
        const Vec bc = barycentre(a);
        const QuadratureRule r = rule_from_partition(partition_lh(a, 0.13 * a.diam));
        Vec moment = Vec::zero(a.ambient_dim);
        for (std::size_t i = 0; i < r.size(); ++i) moment = moment + r.nodes[i] * r.weights[i];
        CAPTURE(name);
        CHECK(dist(moment, bc * a.measure) <= 1e-12 * a.measure * (1.0 + bc.norm()));
    }
}

TEST_CASE("rules handle reflection maps") {
    const Attractor a = make_attractor({Similarity(0.4, Mat::reflection(0.0), Vec(0.0, 0.3)),
                                        Similarity(0.4, Mat::identity(2), Vec(0.6, 0.0))},
                                       2);
    const Vec bc = barycentre(a);
    const QuadratureRule r = rule_from_partition(partition_lh(a, 0.2 * a.diam));
    CHECK(std::abs(r.weight_sum() - a.measure) <= 1e-12);
    Vec moment = Vec::zero(2);
    for (std::size_t i = 0; i < r.size(); ++i) moment = moment + r.nodes[i] * r.weights[i];
    CHECK(dist(moment, bc * a.measure) <= 1e-12 * (1.0 + bc.norm()));
}

TEST_CASE("refinement nesting") {
    const Attractor a = preset("fig3-cantor").attractor;
    const Partition coarse = partition_lh(a, 0.3);
    const Partition fine = partition_lh(a, 0.04);
    for (const VecIndex& idx : fine.indices) {
        int ancestors = 0;
        for (const VecIndex& c : coarse.indices)
            if (c.size() <= idx.size() && std::equal(c.begin(), c.end(), idx.begin())) ++ancestors;
        CHECK(ancestors == 1);
    }
}

TEST_CASE("nodes lie inside the component hulls") {
    for (const char* name : {"cantor-dust(1/3)", "table1-II", "koch-snowflake"}) {
        const Attractor a = preset(name).attractor;
        const ConvexHull base = hull_approx(a, 1e-10).hull;
        const Partition p = partition_lh(a, 0.3 * a.diam);
        const QuadratureRule r = rule_from_partition(p);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const ConvexHull hull = base.transformed(compose(a, p.indices[i]));
            CAPTURE(name);
            CHECK(hull.contains(r.nodes[i], 1e-9));
        }
    }
}

TEST_CASE("subtree partitions carry the root prefix") {
    const Attractor a = preset("cantor(1/3)").attractor;
    const Partition p = partition_lh(a, 0.05, {2});
    CHECK(p.size() == 4);  // the level-3 components below map 2
    for (const VecIndex& idx : p.indices) {
        REQUIRE(!idx.empty());
        CHECK(idx.front() == 2);
    }
    const QuadratureRule r = rule_from_partition(p);
    CHECK(r.weight_sum() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("level parameter reproduces fixed-level partitions exactly") {
    const Attractor a = preset("cantor(1/3)").attractor;
    for (int ell : {1, 2, 5, 9}) {
        const Partition p = partition_lh(a, level_parameter(a, ell));
        CHECK(p.size() == static_cast<std::size_t>(1) << ell);
        for (const VecIndex& idx : p.indices) CHECK(static_cast<int>(idx.size()) == ell);
    }
}

TEST_CASE("invalid parameters") {
    const Attractor a = preset("cantor(1/3)").attractor;
    CHECK_THROWS_AS(partition_lh(a, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(partition_lh(a, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(partition_lh(a, 0.1, {5}), std::invalid_argument);
}
