#include "frobaut/report.hpp"
#include "frobaut/sweep.hpp"

#include <doctest.h>

#include <array>

using namespace frobaut;

TEST_CASE("spec JSON round trip") {
    KernelActionSpec spec{15, {{31, {{1, 1}, {4, 1}, {11, 1}, {14, 1}}}}};
    CHECK(spec_from_json(spec_to_json(spec)) == spec);

    auto j = json::parse(R"({"n": 2, "components": [{"p": 3,
        "constituents": [{"r": 1, "e": 1}]}]})");
    auto parsed = spec_from_json(j);
    CHECK(parsed.n == 2);
    REQUIRE(parsed.components.size() == 1);
    CHECK(parsed.components[0].p == 3);
    CHECK(parsed.components[0].constituents == std::vector<Constituent>{{1, 1}});
}

TEST_CASE("malformed spec JSON rejected") {
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"n": 2})")), ValidationError);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"n": "2", "components": []})")),
                    ValidationError);
    CHECK_THROWS_AS(
        spec_from_json(json::parse(R"({"n": 2, "components": [{"p": 3}]})")), ValidationError);
}

TEST_CASE("report JSON carries exact decimal orders") {
    auto report = analyze(KernelActionSpec{15, {{31, {{1, 4}}}}});
    auto j = report_to_json(report);
    CHECK(j["kernel_order"] == "923521");  // 31^4
    CHECK(j["aut_order"].get<std::string>() == report.aut_order.str());
    CHECK(j["structure"] == "C_31^4 : GL(4,31)");
    CHECK(j["stabilizer"]["order"] == 1);
}

TEST_CASE("report document is deterministic without timestamp") {
    KernelActionSpec spec{15, {{31, {{1, 1}, {7, 1}, {4, 1}, {13, 1}}}}};
    auto a = report_document(analyze(spec), false).dump();
    auto b = report_document(analyze(spec), false).dump();
    CHECK(a == b);
    auto with_ts = report_document(analyze(spec), true);
    CHECK(with_ts["provenance"].contains("timestamp"));
    with_ts["provenance"].erase("timestamp");
    CHECK(with_ts.dump() == a);
}

TEST_CASE("text report carries the same numbers as JSON") {
    auto report = analyze(KernelActionSpec{5, {{2, {{1, 1}}}}});
    auto text = report_to_text(report);
    auto j = report_to_json(report);
    for (const char* key : {"centralizer_order", "normalizer_order", "kernel_order", "aut_order"})
        CHECK(text.find(j[key].get<std::string>()) != std::string::npos);
    CHECK(text.find(report.structure) != std::string::npos);
}

TEST_CASE("spec_hash depends on content only") {
    KernelActionSpec a{15, {{31, {{1, 4}}}}};
    KernelActionSpec b{15, {{31, {{1, 4}}}}};
    KernelActionSpec c{15, {{31, {{1, 3}}}}};
    CHECK(spec_hash(a) == spec_hash(b));
    CHECK(spec_hash(a) != spec_hash(c));
}

TEST_CASE("enumerate_sweep_specs") {
    // p=2, n=3: one class {1,2}, so specs are e = 1..max_d/2
    auto specs = enumerate_sweep_specs(2, 3, 6);
    CHECK(specs.size() == 3);
    for (const auto& s : specs) CHECK_NOTHROW(analyze(s));

    // gcd(p, n) != 1: empty
    CHECK(enumerate_sweep_specs(3, 9, 4).empty());
    // p=2, n=7: f=3, classes {1,2,4},{3,5,6}; max_d=6 allows (e1,e2) in
    // {(1,0),(2,0),(1,1)} up to unit scaling; 3*{1,2,4}={3,5,6} so the two
    // singleton specs fuse into one canonical representative
    auto s7 = enumerate_sweep_specs(2, 7, 6);
    CHECK(s7.size() == 3);

    // every emitted spec is valid and within the bound
    for (auto [p, n, maxd] : std::vector<std::array<std::int64_t, 3>>{
             {2, 5, 8}, {3, 8, 4}, {31, 15, 4}, {2, 9, 12}}) {
        for (const auto& s : enumerate_sweep_specs(p, n, maxd)) {
            auto decs = validate_and_decompose(s);
            REQUIRE(decs.size() == 1);
            CHECK(decs[0].d <= maxd);
        }
    }
}
