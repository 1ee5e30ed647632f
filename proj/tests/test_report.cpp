#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sugauge/orders.hpp"
#include "sugauge/report.hpp"

using namespace sugauge;

namespace {

Report sample_report() {
    Report r;
    r.command = "subgroup-order";
    r.params["n"] = "25";
    r.params["k"] = "3";
    r.results["computed"] = dec(boundary_image_order(25, 3).computed);
    r.results["closed_form"] = dec(boundary_image_order(25, 3).closed_form);
    r.results["huge"] = dec(factorial(40));
    r.results["image"] = lattice_json(integral_chern_image(25, Space::TopQuotientOdd));
    r.status = "pass";
    r.notes = {"sample"};
    return r;
}

}  // namespace

TEST_CASE("json dump is deterministic") {
    const std::string a = report_dump(sample_report());
    const std::string b = report_dump(sample_report());
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("json round-trips losslessly with decimal-string numbers") {
    const Report r = sample_report();
    const std::string dumped = report_dump(r);
    const nlohmann::json parsed = nlohmann::json::parse(dumped);

    CHECK(parsed["command"] == "subgroup-order");
    CHECK(parsed["status"] == "pass");
    CHECK(parsed["params"]["n"] == "25");

    // 40! has 48 digits; a native double would mangle it.
    CHECK(parsed["results"]["huge"].get<std::string>() == factorial(40).get_str());
    CHECK(Int(parsed["results"]["huge"].get<std::string>()) == factorial(40));

    // Every leaf under results/params is a string, never a JSON number.
    std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
        if (j.is_object() || j.is_array())
            for (const auto& child : j) walk(child);
        else
            CHECK(j.is_string());
    };
    walk(parsed["params"]);
    walk(parsed["results"]);

    // Re-dump of the parse is byte-identical.
    CHECK(parsed.dump(2) + "\n" == dumped);
}

TEST_CASE("lattice serialization carries rows as decimal strings") {
    const nlohmann::json j = lattice_json(integral_chern_image(3, Space::ProjectiveSmash));
    CHECK(j["rank"] == "3");
    CHECK(j["basis"].size() == 3);
    CHECK(j["basis"][0] == nlohmann::json::array({"3", "3", "6"}));
}

TEST_CASE("matrix text layout is aligned") {
    const std::string text = matrix_text(rows_matrix({{3, 3, 6}, {0, 60, 0}}));
    CHECK(text == "  [3   3  6]\n  [0  60  0]\n");
}
