#include "doctest.h"

#include "invpoly/errors.hpp"
#include "invpoly/report.hpp"

using namespace invpoly;

namespace {

bool has_float(const nlohmann::json& j)
{
    if (j.is_number_float()) return true;
    if (j.is_structured()) {
        for (const auto& v : j) {
            if (has_float(v)) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("report of x^4y + xy^3")
{
    const Report r = build_report(InvertiblePolynomial::loop(4, 3));
    CHECK(r.polynomial == "x^4y + xy^3");
    CHECK(r.milnor == 12);
    CHECK(r.genus == 5);
    CHECK(r.boundary_windings == std::vector<int>{-12, -6, -4});
    CHECK(r.u_plus == std::vector<UnfoldingDirection>{{1, 1, 1}});
    CHECK(r.untwisted);
    CHECK(r.periodic);
    CHECK(r.sh.at(1)[1] == 12);

    const std::string text = to_text(r);
    CHECK(text.find("x^4y + xy^3") != std::string::npos);
    CHECK(text.find("genus 5") != std::string::npos);
    const auto at = text.find("twisted");
    REQUIRE(at != std::string::npos);
    CHECK(text.substr(at, text.find('\n', at) - at).ends_with("no"));
}

TEST_CASE("JSON round trip")
{
    for (const auto& w : {InvertiblePolynomial::loop(4, 3), InvertiblePolynomial::chain(3, 2),
                          InvertiblePolynomial::chain(2, 3), InvertiblePolynomial::brieskorn_pham(3, 2),
                          InvertiblePolynomial::brieskorn_pham(4, 2), InvertiblePolynomial::brieskorn_pham(5, 3)}) {
        const Report r = build_report(w);
        const nlohmann::json j = to_json(r);
        CAPTURE(w.to_string());
        CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
        CHECK_FALSE(has_float(j));
        for (const char* key : {"polynomial", "transpose", "weights", "milnor", "u_plus", "fibre", "sigma", "arf",
                                "a_tilde", "t_max", "sh", "hh", "sectors", "periodic", "untwisted", "mirror"}) {
            CHECK(j.contains(key));
        }
    }
}

TEST_CASE("absent invariants are null")
{
    const nlohmann::json j = to_json(build_report(InvertiblePolynomial::brieskorn_pham(3, 2)));
    CHECK(j["arf"].is_null());
    CHECK(j["a_tilde"] == 0);
    CHECK(j["weights"]["h"] == 6);
}

TEST_CASE("reports need log general type")
{
    try {
        build_report(InvertiblePolynomial::brieskorn_pham(2, 2));
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotLogGeneralType);
    }
}

TEST_CASE("fibre polynomials for compare")
{
    CHECK(fibre_polynomial(Family::Chain, 3, 2) == InvertiblePolynomial::dual_chain(3, 2));
    CHECK(fibre_polynomial(Family::Loop, 4, 3) == InvertiblePolynomial::loop(4, 3));
    const Comparison c = compare_fibres(fibre_polynomial(Family::Loop, 3, 3), fibre_polynomial(Family::Chain, 4, 3));
    CHECK(c.equivalent);
    CHECK(to_text(c.a).find("genus") != std::string::npos);
}
