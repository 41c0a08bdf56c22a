#include "report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace monadforge::report {

Json integer(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

Json rational(const Rational& v) { return to_string(v); }

Json multidegree(const MultiDegree& d) { return d.entries(); }

Json floystad(const FloystadVerdict& v) {
    return Json{{"condition1", v.condition1}, {"condition2", v.condition2}, {"satisfied", v.satisfied()},
                {"via", v.via()}};
}

Json params(const MonadParams& p) {
    return Json{{"space", p.space.to_string()},
                {"dims", p.space.dims()},
                {"dim_x", p.space.dimension()},
                {"k", p.k},
                {"mu", p.mu},
                {"N", p.big_n},
                {"alpha", p.alpha},
                {"beta", p.beta},
                {"gamma", p.gamma},
                {"floystad_on_x", floystad(p.floystad_on_x)},
                {"floystad_on_pn", floystad(p.floystad_on_pn)}};
}

namespace {
Json sheaf(const SheafSummary& s) { return Json{{"rank", s.rank}, {"c1", multidegree(s.c1)}}; }
} // namespace

Json display(const DisplaySummary& d) {
    return Json{{"M0", sheaf(d.m0)},         {"M1", sheaf(d.m1)},         {"M2", sheaf(d.m2)},
                {"T", sheaf(d.kernel)},      {"Q", sheaf(d.cokernel)},    {"E", sheaf(d.cohomology)},
                {"degenerate", d.degenerate}};
}

Json cohom_table(const CohomTable& t) {
    Json h = Json::array();
    for (const auto& v : t.values()) h.push_back(integer(v));
    return h;
}

Json vanishing(const VanishingReport& r) {
    return Json{{"twist", multidegree(r.twist)},
                {"h", cohom_table(r.table)},
                {"vanishes", r.vanishes},
                {"counterexample_degrees", r.counterexamples}};
}

Json verification(const VerificationReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back(Json{{"index", f.index},
                                {"point", f.point},
                                {"rank_a", f.rank_a},
                                {"rank_b", f.rank_b},
                                {"composition_nonzero", f.composition_nonzero}});
    }
    Json j{{"field", r.field},
           {"exhaustive", r.exhaustive},
           {"points_checked", r.points_checked},
           {"full_rank_points", r.points_checked - r.failure_count},
           {"failure_count", r.failure_count},
           {"generic_rank_a", r.generic_rank_a},
           {"generic_rank_b", r.generic_rank_b},
           {"expected_rank_a", r.expected_rank_a},
           {"expected_rank_b", r.expected_rank_b},
           {"composition_zero", r.composition_zero},
           {"valid", r.valid()},
           {"failures", failures}};
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

Json stability(const StabilityCertificate& c) {
    Json bounds = Json::array();
    for (const auto& b : c.bounds) {
        bounds.push_back(Json{{"q", b.q},
                              {"f", multidegree(b.twist)},
                              {"line_twist", multidegree(b.line_twist)},
                              {"bound", integer(b.bound)},
                              {"kunneth_bound", integer(b.kunneth_bound)}});
    }
    Json uncovered = Json::array();
    for (const auto& t : c.not_covered) uncovered.push_back(multidegree(t));
    return Json{{"kind", "stability"},
                {"space", c.params.space.to_string()},
                {"k", c.params.k},
                {"beta", c.params.beta},
                {"radius", c.radius},
                {"q_cap", c.q_cap},
                {"q_max", c.q_max},
                {"deg_L_T", integer(c.degree_kernel)},
                {"deg_L_T_negative", c.degree_negative},
                {"cross_check", c.cross_check},
                {"bounds_examined", c.bounds.size()},
                {"all_bounds_zero", std::all_of(c.bounds.begin(), c.bounds.end(),
                                                [](const StabilityBound& b) { return b.bound == 0; })},
                {"verdict", to_string(c.verdict)},
                {"ok", c.ok()},
                {"bounds", bounds},
                {"not_covered", uncovered}};
}

Json simplicity(const SimplicityCertificate& c) {
    Json facts = Json::array();
    for (const auto& f : c.facts) {
        facts.push_back(Json{{"statement", f.statement},
                             {"twist", multidegree(f.twist)},
                             {"degree", f.degree},
                             {"value", integer(f.value)},
                             {"holds", f.holds()}});
    }
    return Json{{"kind", "simplicity"}, {"space", c.space.to_string()}, {"k", c.k},
                {"facts", facts},       {"chain", c.chain},              {"conditional", c.conditional},
                {"verdict", to_string(c.verdict)}, {"ok", c.ok()}};
}

Json hoppe(const std::vector<HoppeObligation>& obligations) {
    Json list = Json::array();
    std::size_t uncovered = 0;
    for (const auto& o : obligations) {
        if (o.coverage == Coverage::none) ++uncovered;
        list.push_back(Json{{"s", o.s},
                            {"twist", multidegree(o.twist)},
                            {"delta", integer(o.delta)},
                            {"bound", rational(o.bound)},
                            {"strict", o.strict},
                            {"coverage", to_string(o.coverage)}});
    }
    return Json{{"kind", "hoppe"},
                {"obligations", obligations.size()},
                {"uncovered", uncovered},
                {"verdict", to_string(uncovered == 0 ? Verdict::steps_verified : Verdict::not_covered)},
                {"list", list}};
}

Json normalization(const Normalization& n) {
    return Json{{"d", integer(n.d)},
                {"k_E", integer(n.k)},
                {"normalized_c1", multidegree(n.normalized_c1)},
                {"normalized_degree", integer(n.normalized_degree)}};
}

Json matrix(const LinearMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json segre(const SegreTable& t) {
    Json rows = Json::array();
    for (std::size_t pn = 0; pn < t.size(); ++pn) {
        const auto digits = monomial_digits(t.space(), t.lex_index(pn));
        std::string word;
        for (std::size_t f = 0; f < digits.size(); ++f) {
            word += static_cast<char>('a' + f);
            word += std::to_string(digits[f]);
        }
        rows.push_back(Json{{"index", pn},
                            {"pn_coord", pn_coordinate_name(pn, t.mu())},
                            {"lex_index", t.lex_index(pn)},
                            {"digits", word},
                            {"monomial", to_string(t.image(pn))}});
    }
    return Json{{"space", t.space().to_string()},
                {"mu", t.mu()},
                {"convention", to_string(t.convention())},
                {"rows", rows}};
}

namespace {

bool is_scalar_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) {
               return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) {
                                                return x.is_primitive();
                                            }));
           });
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + scalar_text(j[i]);
        return s + ")";
    }
    return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array() && !is_scalar_array(j)) {
        if (j.empty()) out.emplace_back(prefix, "(none)");
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_array()) {
        const bool spaced = std::any_of(j.begin(), j.end(), [](const Json& e) {
            return e.is_string() && e.get<std::string>().find(' ') != std::string::npos;
        });
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? (spaced ? " | " : " ") : "") + scalar_text(j[i]);
        out.emplace_back(prefix, j.empty() ? "(none)" : s);
    } else {
        out.emplace_back(prefix, scalar_text(j));
    }
}

} // namespace

std::string to_text(const Json& j) {
    std::vector<std::pair<std::string, std::string>> lines;
    flatten(j, "", lines);
    std::size_t width = 0;
    for (const auto& l : lines) width = std::max(width, l.first.size());
    std::ostringstream os;
    for (const auto& [k, v] : lines) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return os.str();
}

} // namespace monadforge::report
