#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "powergraph/verify.hpp"

using namespace powergraph;

namespace {

std::vector<std::string> names_of(const std::vector<GroupTable>& catalog) {
    std::vector<std::string> out;
    out.reserve(catalog.size());
    for (const auto& g : catalog) out.push_back(g.name());
    return out;
}

} // namespace

TEST_CASE("abelian-only catalog up to order 8") {
    CatalogSpec spec;
    spec.max_order = 8;
    spec.dihedral = spec.dicyclic = spec.symmetric_alternating = false;
    spec.semidirect = spec.products = false;
    CHECK(names_of(build_catalog(spec)) ==
          std::vector<std::string>{"Z_4", "Z_2 x Z_2", "Z_5", "Z_6", "Z_7", "Z_8", "Z_2 x Z_4",
                                   "Z_2 x Z_2 x Z_2"});
}

TEST_CASE("default catalog") {
    const auto catalog = build_catalog(CatalogSpec{});
    const auto names = names_of(catalog);
    auto has = [&](const char* n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };

    CHECK(catalog.size() > 500);
    CHECK(has("Q_8"));
    CHECK(has("Q_16"));
    CHECK(has("Q_32"));
    CHECK(has("Q_8 x Z_3"));
    CHECK(has("Dic_3"));
    CHECK(has("S_4"));
    CHECK(has("A_5"));
    CHECK(has("D_7"));
    CHECK(has("Z_9:Z_3(4)"));
    CHECK(has("Z_100"));
    CHECK_FALSE(has("Z_3"));  // below the minimum order

    // names are unique and orders stay within the bound
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    for (const auto& g : catalog) {
        CHECK(g.order() >= 4);
        CHECK(g.order() <= 100);
    }
}

TEST_CASE("catalog extras and bounds") {
    CatalogSpec spec;
    spec.max_order = 4;
    spec.dihedral = spec.dicyclic = spec.symmetric_alternating = false;
    spec.semidirect = spec.products = false;
    spec.extra_exprs = {"cyclic:2", "dicyclic:3"};
    const auto names = names_of(build_catalog(spec));
    CHECK(names == std::vector<std::string>{"Z_4", "Z_2 x Z_2", "Z_2", "Dic_3"});

    CatalogSpec bad;
    bad.max_order = 3;
    CHECK_THROWS_AS(build_catalog(bad), Error);

    CatalogSpec broken;
    broken.extra_exprs = {"nonsense:1"};
    CHECK_THROWS_AS(build_catalog(broken), ParseError);
}

TEST_CASE("verify_group on known groups") {
    SECTION("Z_12") {
        const auto [pw, en] = verify_group(build_group("cyclic:12"));
        CHECK(pw.applicable);
        CHECK(pw.match);
        CHECK(pw.predicted == std::optional<int>{3});
        CHECK(pw.measured == std::optional<int>{3});
        CHECK(pw.reason == std::optional<DiameterReason>{DiameterReason::Psi});
        CHECK(pw.nontrivial_components == 1);
        CHECK(pw.isolated_count == 5);

        CHECK_FALSE(en.applicable);
        CHECK_FALSE(en.match);
        CHECK(en.predicted == std::nullopt);
        CHECK(en.measured == std::nullopt);
        CHECK(en.isolated_count == 12);
        CHECK(en.nontrivial_components == 0);
    }

    SECTION("Q_8") {
        const auto [pw, en] = verify_group(build_group("quaternion:8"));
        CHECK(pw.match);
        CHECK(pw.predicted == std::optional<int>{2});
        CHECK(pw.measured == std::optional<int>{2});
        CHECK(pw.isolated_count == 2);
        CHECK(en.match);
        CHECK(en.predicted == std::optional<int>{2});
        CHECK(en.measured == std::optional<int>{2});
        CHECK(en.isolated_count == 2);
    }

    SECTION("Z_30") {
        const auto [pw, en] = verify_group(build_group("cyclic:30"));
        CHECK(pw.match);
        CHECK(pw.predicted == std::optional<int>{2});
        CHECK(pw.measured == std::optional<int>{2});
        CHECK(pw.isolated_count == 9); // identity plus phi(30) = 8 generators
        CHECK_FALSE(en.applicable);
    }

    SECTION("Z_8 is inapplicable on both sides") {
        const auto [pw, en] = verify_group(build_group("cyclic:8"));
        CHECK_FALSE(pw.applicable);
        CHECK_FALSE(en.applicable);
        CHECK(pw.isolated_count == 8);
    }

    SECTION("elementary abelian") {
        const auto [pw, en] = verify_group(build_group("abelian:2,2"));
        CHECK(pw.match);
        CHECK(pw.predicted == std::optional<int>{1});
        CHECK(en.match);
        CHECK(en.predicted == std::optional<int>{1});
        CHECK(en.reason == std::optional<DiameterReason>{DiameterReason::ElemAbelian2});
    }
}

TEST_CASE("sweep over a small catalog") {
    CatalogSpec spec;
    spec.max_order = 24;
    const auto catalog = build_catalog(spec);
    const SweepResult res = sweep(catalog);

    CHECK(res.success());
    CHECK(res.records.size() == 2 * catalog.size());
    for (const auto& rec : res.records) {
        if (rec.applicable) {
            CHECK(rec.match);
            CHECK(rec.nontrivial_components == 1);
            REQUIRE(rec.predicted.has_value());
            REQUIRE(rec.measured.has_value());
            CHECK(*rec.predicted == *rec.measured);
        } else {
            CHECK_FALSE(rec.match);
            CHECK(rec.predicted == std::nullopt);
            CHECK(rec.isolated_count == rec.order);
        }
    }
}

TEST_CASE("sweep of cyclic p-groups alone reports every record inapplicable") {
    CatalogSpec spec;
    spec.max_order = 4;
    spec.abelian = spec.dihedral = spec.dicyclic = false;
    spec.symmetric_alternating = spec.semidirect = spec.products = false;
    spec.extra_exprs = {"cyclic:8", "cyclic:9", "cyclic:25"};
    const SweepResult res = sweep(spec);
    CHECK(res.success());
    REQUIRE(res.records.size() == 6);
    for (const auto& rec : res.records) {
        CHECK_FALSE(rec.applicable);
        CHECK_FALSE(rec.match);
    }
}

TEST_CASE("pair cyclicity oracle") {
    const GroupTable z6 = build_group("cyclic:6");
    CHECK(oracle_pair_cyclic(z6, 2, 3));
    CHECK(oracle_pair_cyclic(z6, 0, 0));

    const GroupTable q8 = build_group("quaternion:8");
    CHECK_FALSE(oracle_pair_cyclic(q8, 1, 4)); // <x, y> = Q_8
    CHECK(oracle_pair_cyclic(q8, 1, 2));       // <x, y^2> = <x>
    CHECK(oracle_pair_cyclic(q8, 1, 3));

    const GroupTable s3 = build_group("symmetric:3");
    CHECK_FALSE(oracle_pair_cyclic(s3, 1, 2));
    CHECK(oracle_pair_cyclic(s3, 3, 4));
    CHECK_THROWS_AS(oracle_pair_cyclic(s3, 0, 6), Error);
}

TEST_CASE("enhanced adjacency agrees with the closure oracle") {
    for (const char* expr :
         {"cyclic:12", "quaternion:16", "symmetric:4", "dihedral:6", "alternating:4",
          "product(quaternion:8,cyclic:3)", "semidirect:9,3,4"}) {
        INFO(expr);
        const GroupTable g = build_group(expr);
        const SimpleGraph eg = enhanced_power_graph(g);
        for (ElementId x = 0; x < g.order(); ++x)
            for (ElementId y = x + 1; y < g.order(); ++y)
                CHECK(eg.adjacent(x, y) == oracle_pair_cyclic(g, x, y));
    }
}

TEST_CASE("phi search over a small catalog agrees with measured diameters") {
    CatalogSpec spec;
    spec.max_order = 32;
    const auto catalog = build_catalog(spec);
    const auto hits = search_phi(catalog);

    std::set<std::string> hit_names;
    for (const auto& h : hits) hit_names.insert(h.name);

    std::set<std::string> diam3;
    for (const auto& g : catalog) {
        if (g.is_cyclic()) continue;
        const StarDecomposition st = star(complement(enhanced_power_graph(g)));
        if (!st.kept.empty() && diameter(st.graph) == 3) diam3.insert(g.name());
    }
    CHECK(hit_names == diam3);
}

TEST_CASE("record json round trip") {
    VerificationRecord rec;
    rec.name = "Z_12";
    rec.order = 12;
    rec.kind = GraphKind::Power;
    rec.applicable = true;
    rec.predicted = 3;
    rec.reason = DiameterReason::Psi;
    rec.measured = 3;
    rec.nontrivial_components = 1;
    rec.isolated_count = 5;
    rec.match = true;

    const auto j = record_to_json(rec);
    CHECK(j.dump() ==
          R"({"name":"Z_12","order":12,"kind":"power","applicable":true,"predicted":3,)"
          R"("reason":"Psi","measured":3,"nontrivial_components":1,"isolated_count":5,)"
          R"("match":true})");
    CHECK(record_from_json(j) == rec);

    VerificationRecord inapplicable;
    inapplicable.name = "Z_8";
    inapplicable.order = 8;
    inapplicable.kind = GraphKind::Enhanced;
    inapplicable.isolated_count = 8;
    const auto j2 = record_to_json(inapplicable);
    CHECK(j2.dump() ==
          R"({"name":"Z_8","order":8,"kind":"enhanced","applicable":false,"predicted":null,)"
          R"("reason":null,"measured":null,"nontrivial_components":0,"isolated_count":8,)"
          R"("match":false})");
    CHECK(record_from_json(j2) == inapplicable);
}

TEST_CASE("report stream round trip") {
    CatalogSpec spec;
    spec.max_order = 16;
    const SweepResult res = sweep(spec);

    std::ostringstream out;
    write_report(res.records, out);
    const std::string text = out.str();
    CHECK(!text.empty());
    CHECK(text.back() == '\n');

    std::istringstream in(text);
    const auto parsed = parse_report(in);
    REQUIRE(parsed.size() == res.records.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == res.records[i]);

    std::ostringstream again;
    write_report(parsed, again);
    CHECK(again.str() == text);
}

TEST_CASE("report file io") {
    const std::string path = "test_report_tmp.jsonl";
    VerificationRecord rec;
    rec.name = "Q_8";
    rec.order = 8;
    write_report({rec}, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto parsed = parse_report(in);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == rec);
    in.close();
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_report({rec}, "/nonexistent/dir/report.jsonl"), IoError);
}

TEST_CASE("report parser rejects garbage") {
    std::istringstream bad("not json\n");
    CHECK_THROWS_AS(parse_report(bad), ParseError);

    std::istringstream bad_kind(
        R"({"name":"x","order":4,"kind":"weird","applicable":false,"predicted":null,)"
        R"("reason":null,"measured":null,"nontrivial_components":0,"isolated_count":4,)"
        R"("match":false})");
    CHECK_THROWS_AS(parse_report(bad_kind), ParseError);

    std::istringstream missing(R"({"name":"x"})");
    CHECK_THROWS_AS(parse_report(missing), ParseError);

    std::istringstream blank("\n\n");
    CHECK(parse_report(blank).empty());
}

TEST_CASE("graph kind names") {
    CHECK(to_string(GraphKind::Power) == "power");
    CHECK(to_string(GraphKind::Enhanced) == "enhanced");
    CHECK(reason_from_string("Psi") == std::optional<DiameterReason>{DiameterReason::Psi});
    CHECK(reason_from_string("bogus") == std::nullopt);
}
