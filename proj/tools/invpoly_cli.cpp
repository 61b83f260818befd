#include "invpoly/acceptance.hpp"
#include "invpoly/errors.hpp"
#include "invpoly/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace invpoly;

namespace {

int run_analyze(const std::string& family, int p, int q, int t_max, bool json)
{
    const InvertiblePolynomial w = InvertiblePolynomial::make(parse_family(family), p, q);
    const Report r = build_report(w, t_max);
    if (json) std::cout << to_json(r).dump(2) << "\n";
    else std::cout << to_text(r);
    return 0;
}

int run_verify(int p_max, int q_max, bool corrupt)
{
    acceptance::Config cfg;
    cfg.p_max = p_max;
    cfg.q_max = q_max;
    cfg.corrupt_permutation = corrupt;
    bool all = true;
    for (const auto& r : acceptance::run_all(cfg)) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << r.checked - r.failed
                  << "/" << r.checked << ")\n";
        for (const auto& d : r.details) std::cout << "    " << d << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

int run_compare(const std::string& fa, int pa, int qa, const std::string& fb, int pb, int qb)
{
    const InvertiblePolynomial a = fibre_polynomial(parse_family(fa), pa, qa);
    const InvertiblePolynomial b = fibre_polynomial(parse_family(fb), pb, qb);
    const Comparison c = compare_fibres(a, b);
    std::cout << "A  " << a.to_string() << ": " << to_text(c.a) << "\n";
    std::cout << "B  " << b.to_string() << ": " << to_text(c.b) << "\n";
    std::cout << (c.equivalent ? "equivalent" : "not equivalent") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invertible polynomials in two variables: Milnor fibres, gradings and Hochschild cohomology"};
    app.require_subcommand(1);

    std::string family;
    int p = 0, q = 0, t_max = 0;
    bool json = false;
    auto* analyze = app.add_subcommand("analyze", "Full report for the polynomial and the fibre of its transpose");
    analyze->add_option("family", family, "loop, chain or bp")->required();
    analyze->add_option("p", p)->required()->check(CLI::Range(2, 64));
    analyze->add_option("q", q)->required()->check(CLI::Range(2, 64));
    analyze->add_option("--tmax", t_max, "Largest cohomological degree (default: two periods)")->check(CLI::Range(1, 4096));
    analyze->add_flag("--json", json, "Structured output");

    int p_max = 0, q_max = 0;
    bool corrupt = false;
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks over a parameter grid");
    verify->add_option("p_max", p_max)->required()->check(CLI::Range(2, 12));
    verify->add_option("q_max", q_max)->required()->check(CLI::Range(2, 12));
    verify->add_flag("--corrupt-permutation", corrupt, "Inject a broken gluing permutation (negative test)");

    std::string fa, fb;
    int pa = 0, qa = 0, pb = 0, qb = 0;
    auto* compare = app.add_subcommand("compare", "Decide whether two Milnor fibres are graded symplectomorphic");
    compare->add_option("familyA", fa)->required();
    compare->add_option("pA", pa)->required()->check(CLI::Range(1, 64));
    compare->add_option("qA", qa)->required()->check(CLI::Range(1, 64));
    compare->add_option("familyB", fb)->required();
    compare->add_option("pB", pb)->required()->check(CLI::Range(1, 64));
    compare->add_option("qB", qb)->required()->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(family, p, q, t_max, json);
        if (*verify) return run_verify(p_max, q_max, corrupt);
        if (*compare) return run_compare(fa, pa, qa, fb, pb, qb);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Unrecognized ? 2 : 1;
    }
    return 2;
}
