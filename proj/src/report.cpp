#include "invpoly/report.hpp"

#include "invpoly/errors.hpp"
#include "invpoly/fibre_builder.hpp"
#include "invpoly/grading_invariants.hpp"

#include <sstream>

namespace invpoly {

namespace {

long long to_ll(const BigInt& v)
{
    return static_cast<long long>(v);
}

std::string rational_text(long long num, long long den)
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

} // namespace

Report build_report(const InvertiblePolynomial& w, int t_max)
{
    if (!w.log_general_type()) {
        throw DomainError(ErrorKind::NotLogGeneralType, w.to_string() + " is not of log general type");
    }
    const InvertiblePolynomial w_check = transpose(w);
    if (t_max <= 0) t_max = default_t_max(w);

    Report r;
    r.polynomial = w.to_string();
    r.transpose = w_check.to_string();
    r.weights = weight_system(w);
    r.milnor = milnor_number(w);
    r.milnor_transpose = milnor_number(w_check);
    r.u_plus = admissible_unfoldings(w);

    const LineFieldInvariants inv = fibre_invariants(w_check);
    r.genus = inv.genus;
    r.boundary_windings = inv.boundary_windings;
    r.sigma = inv.sigma;
    r.arf = inv.arf;
    r.a_tilde = inv.a_tilde;

    r.t_max = t_max;
    for (const auto& [t, dim] : sh_dims(w_check, t_max).dims) r.sh.push_back({t, dim});

    const HochschildTable table = hh_y0(w, t_max);
    for (const auto& [key, dim] : table.dims.entries) {
        if (dim != 0) r.hh.push_back({key.first, key.second, dim});
    }
    for (const auto& sector : table.sectors) {
        if (sector.contributions.empty()) continue;
        SectorSummary s;
        s.gamma = {to_ll(numerator(sector.gamma.a1)), to_ll(denominator(sector.gamma.a1)),
                   to_ll(numerator(sector.gamma.a2)), to_ll(denominator(sector.gamma.a2))};
        s.fixed = sector.fixed.to_string();
        for (const auto& c : sector.contributions) s.contributions.push_back({c.t, c.weight, c.dim});
        r.sectors.push_back(std::move(s));
    }
    r.periodic = t_max >= default_t_max(w) && hh_periodicity_check(table, hh_period(w));
    r.untwisted = untwisted(w);

    const MirrorUnfolding m = mirror_unfolding(w);
    for (const auto& [ij, c] : m.coefficients) {
        if (c == 0) continue;
        r.mirror.push_back({ij.first, ij.second, to_ll(numerator(c)), to_ll(denominator(c))});
    }
    r.mirror_display = m.display;
    r.mirror_note = m.note;
    return r;
}

nlohmann::json to_json(const Report& r)
{
    using nlohmann::json;
    json j;
    j["polynomial"] = r.polynomial;
    j["transpose"] = r.transpose;
    j["weights"] = {{"d0", r.weights.d0}, {"d1", r.weights.d1}, {"d2", r.weights.d2}, {"h", r.weights.h}};
    j["milnor"] = {{"w", r.milnor}, {"transpose", r.milnor_transpose}};
    json up = json::array();
    for (const auto& d : r.u_plus) up.push_back({d.i, d.j, d.w});
    j["u_plus"] = up;
    j["fibre"] = {{"genus", r.genus}, {"boundary_windings", r.boundary_windings}};
    j["sigma"] = r.sigma;
    j["arf"] = r.arf ? json(*r.arf) : json(nullptr);
    j["a_tilde"] = r.a_tilde ? json(*r.a_tilde) : json(nullptr);
    j["t_max"] = r.t_max;
    j["sh"] = r.sh;
    j["hh"] = r.hh;
    json sectors = json::array();
    for (const auto& s : r.sectors) {
        sectors.push_back({{"gamma", s.gamma}, {"fixed", s.fixed}, {"contributions", s.contributions}});
    }
    j["sectors"] = sectors;
    j["periodic"] = r.periodic;
    j["untwisted"] = r.untwisted;
    json terms = json::array();
    for (const auto& t : r.mirror) terms.push_back({t.i, t.j, t.num, t.den});
    j["mirror"] = {{"coefficients", terms}, {"display", r.mirror_display}, {"note", r.mirror_note}};
    return j;
}

Report report_from_json(const nlohmann::json& j)
{
    Report r;
    r.polynomial = j.at("polynomial").get<std::string>();
    r.transpose = j.at("transpose").get<std::string>();
    const auto& w = j.at("weights");
    r.weights = {w.at("d0").get<int>(), w.at("d1").get<int>(), w.at("d2").get<int>(), w.at("h").get<int>()};
    r.milnor = j.at("milnor").at("w").get<int>();
    r.milnor_transpose = j.at("milnor").at("transpose").get<int>();
    for (const auto& d : j.at("u_plus")) r.u_plus.push_back({d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>()});
    r.genus = j.at("fibre").at("genus").get<int>();
    r.boundary_windings = j.at("fibre").at("boundary_windings").get<std::vector<int>>();
    r.sigma = j.at("sigma").get<int>();
    if (!j.at("arf").is_null()) r.arf = j.at("arf").get<int>();
    if (!j.at("a_tilde").is_null()) r.a_tilde = j.at("a_tilde").get<int>();
    r.t_max = j.at("t_max").get<int>();
    r.sh = j.at("sh").get<std::vector<std::array<long long, 2>>>();
    r.hh = j.at("hh").get<std::vector<std::array<long long, 3>>>();
    for (const auto& s : j.at("sectors")) {
        SectorSummary ss;
        ss.gamma = s.at("gamma").get<std::array<long long, 4>>();
        ss.fixed = s.at("fixed").get<std::string>();
        ss.contributions = s.at("contributions").get<std::vector<std::array<long long, 3>>>();
        r.sectors.push_back(std::move(ss));
    }
    r.periodic = j.at("periodic").get<bool>();
    r.untwisted = j.at("untwisted").get<bool>();
    const auto& m = j.at("mirror");
    for (const auto& t : m.at("coefficients")) {
        r.mirror.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<long long>(), t.at(3).get<long long>()});
    }
    r.mirror_display = m.at("display").get<std::string>();
    r.mirror_note = m.at("note").get<std::string>();
    return r;
}

std::string to_text(const Report& r)
{
    std::ostringstream os;
    os << "polynomial      " << r.polynomial << "\n";
    os << "transpose       " << r.transpose << "\n";
    os << "weights         d0=" << r.weights.d0 << " d1=" << r.weights.d1 << " d2=" << r.weights.d2
       << " h=" << r.weights.h << "\n";
    os << "milnor number   " << r.milnor << " (transpose " << r.milnor_transpose << ")\n";
    os << "U+ directions  ";
    for (const auto& d : r.u_plus) os << " x^" << d.i << "y^" << d.j << "z^" << d.w;
    os << "\n";
    os << "fibre           genus " << r.genus << ", " << r.boundary_windings.size() << " boundary components, windings";
    for (int w : r.boundary_windings) os << " " << w;
    os << "\n";
    os << "line field      sigma=" << r.sigma << " arf=" << (r.arf ? std::to_string(*r.arf) : "-")
       << " a_tilde=" << (r.a_tilde ? std::to_string(*r.a_tilde) : "-") << "\n";

    os << "SH (t <= " << r.t_max << ")\n";
    for (const auto& [t, dim] : r.sh) {
        if (dim != 0) os << "  SH^" << t << " = C^" << dim << "\n";
    }
    os << "HH(Y0) (t <= " << r.t_max << ")\n";
    int current = -1;
    for (const auto& [t, s, dim] : r.hh) {
        if (t != current) {
            if (current >= 0) os << "\n";
            os << "  HH^" << t << " =";
            current = static_cast<int>(t);
        } else {
            os << " +";
        }
        os << " C(" << s << ")";
        if (dim > 1) os << "^" << dim;
    }
    if (current >= 0) os << "\n";
    os << "sectors\n";
    for (const auto& s : r.sectors) {
        os << "  gamma=(" << rational_text(s.gamma[0], s.gamma[1]) << "," << rational_text(s.gamma[2], s.gamma[3])
           << ") fixed=" << s.fixed << ":";
        for (const auto& [t, k, dim] : s.contributions) os << " [t=" << t << " s=" << k << " dim=" << dim << "]";
        os << "\n";
    }
    os << "periodic        " << (r.periodic ? "yes" : "no") << "\n";
    os << "twisted         " << (r.untwisted ? "no" : "yes") << "\n";
    os << "mirror          " << r.mirror_display << "\n";
    if (!r.mirror_note.empty()) os << "                " << r.mirror_note << "\n";
    return os.str();
}

} // namespace invpoly

namespace invpoly {

InvertiblePolynomial fibre_polynomial(Family family, int p, int q)
{
    return family == Family::Chain ? InvertiblePolynomial::dual_chain(p, q) : InvertiblePolynomial::make(family, p, q);
}

Comparison compare_fibres(const InvertiblePolynomial& a_check, const InvertiblePolynomial& b_check)
{
    Comparison c;
    c.a = fibre_invariants(a_check);
    c.b = fibre_invariants(b_check);
    c.equivalent = graded_symplectomorphic(c.a, c.b);
    return c;
}

std::string to_text(const LineFieldInvariants& inv)
{
    std::ostringstream os;
    os << "genus " << inv.genus << ", windings {";
    for (std::size_t i = 0; i < inv.boundary_windings.size(); ++i) {
        os << (i ? "," : "") << inv.boundary_windings[i];
    }
    os << "}, sigma " << inv.sigma << ", arf " << (inv.arf ? std::to_string(*inv.arf) : "-") << ", a_tilde "
       << (inv.a_tilde ? std::to_string(*inv.a_tilde) : "-");
    return os.str();
}

} // namespace invpoly
