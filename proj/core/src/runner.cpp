#include "monadforge/runner.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monadforge/certificates.hpp"
#include "monadforge/cohomology.hpp"
#include "monadforge/errors.hpp"
#include "monadforge/polarization.hpp"
#include "monadforge/verify.hpp"
#include "report.hpp"

#ifndef MONADFORGE_VERSION
#define MONADFORGE_VERSION "unknown"
#endif

namespace monadforge {

using report::Json;

std::string tool_version() { return MONADFORGE_VERSION; }

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const auto t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw ParseError("invalid value for " + key + ": '" + text + "'");
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    const auto t = trim(text);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    throw ParseError("invalid value for " + key + ": '" + text + "'");
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
    return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& items) {
    std::vector<std::string> s;
    for (const auto& v : items) s.push_back(std::to_string(v));
    return join(s);
}

std::string multidegree_text(const MultiDegree& d) { return join_numbers(d.entries()); }

SpaceSpec space_of(const RunConfig& c) {
    if (c.dims.empty()) throw ParseError("dims is required");
    return SpaceSpec(c.dims, c.groups);
}

} // namespace

std::string RunConfig::to_config_text(bool include_output) const {
    std::ostringstream os;
    os << "command = " << command << '\n';
    os << "dims = " << join_numbers(dims) << '\n';
    os << "groups = " << join(groups) << '\n';
    os << "k = " << k << '\n';
    os << "band = " << to_string(band) << '\n';
    os << "table = " << to_string(table) << '\n';
    os << "primes = " << join_numbers(primes) << '\n';
    os << "samples = " << samples << '\n';
    os << "seed = " << seed << '\n';
    os << "budget = " << budget << '\n';
    os << "radius = " << radius << '\n';
    os << "what = " << what << '\n';
    os << "twist = " << (twist ? multidegree_text(*twist) : "") << '\n';
    os << "c1 = " << (c1 ? multidegree_text(*c1) : "") << '\n';
    os << "rank = " << rank << '\n';
    os << "s = " << s << '\n';
    os << "cas = " << (cas ? "true" : "false") << '\n';
    os << "format = " << (format == OutputFormat::json ? "json" : "text") << '\n';
    if (include_output) os << "output = " << output << '\n';
    return os.str();
}

void apply_config_value(RunConfig& c, const std::string& key, const std::string& raw) {
    const auto value = trim(raw);
    if (key == "command") c.command = value;
    else if (key == "dims") c.dims = value.empty() ? std::vector<int>{} : parse_dims(value);
    else if (key == "groups") c.groups = split_list(value);
    else if (key == "k") c.k = parse_number<std::int64_t>(key, value);
    else if (key == "band") c.band = parse_band_convention(value);
    else if (key == "table") c.table = parse_table_convention(value);
    else if (key == "primes" || key == "q") {
        c.primes.clear();
        for (const auto& p : split_list(value)) c.primes.push_back(parse_number<std::uint64_t>(key, p));
    } else if (key == "samples") c.samples = parse_number<std::uint64_t>(key, value);
    else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "budget") c.budget = parse_number<std::uint64_t>(key, value);
    else if (key == "radius") c.radius = parse_number<std::int64_t>(key, value);
    else if (key == "what") {
        if (value != "stability" && value != "simplicity" && value != "hoppe")
            throw ParseError("what must be stability, simplicity or hoppe");
        c.what = value;
    } else if (key == "twist") {
        if (value.empty()) c.twist.reset();
        else c.twist = parse_multidegree(value);
    } else if (key == "c1") {
        if (value.empty()) c.c1.reset();
        else c.c1 = parse_multidegree(value);
    } else if (key == "rank") c.rank = parse_number<std::int64_t>(key, value);
    else if (key == "s") c.s = parse_number<std::int64_t>(key, value);
    else if (key == "cas") c.cas = parse_bool(key, value);
    else if (key == "format") {
        if (value == "json") c.format = OutputFormat::json;
        else if (value == "text") c.format = OutputFormat::text;
        else throw ParseError("format must be text or json");
    } else if (key == "output") c.output = value;
    else throw ParseError("unknown config key '" + key + "'");
}

RunConfig parse_config_text(std::string_view text) {
    RunConfig c;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        apply_config_value(c, trim(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    }
    return c;
}

std::string export_cas_script(const Monad& monad) {
    if (monad.empty()) throw DomainError("cannot export an empty monad");
    const auto& space = monad.map_a.space();
    std::ostringstream os;
    os << "-- monadforge " << tool_version() << ": banded monad on " << space.to_string() << ", k = "
       << monad.params.k << ", band " << to_string(monad.band) << ", table " << to_string(monad.table) << "\n";
    os << "R = QQ[";
    for (std::size_t f = 0; f < space.factor_count(); ++f) {
        if (f) os << ", ";
        os << variable_name({f, 0}) << ".." << variable_name({f, static_cast<std::size_t>(space.dim(f))});
    }
    os << ", Degrees => {";
    bool first = true;
    for (std::size_t f = 0; f < space.factor_count(); ++f) {
        for (int c = 0; c <= space.dim(f); ++c) {
            os << (first ? "" : ",") << "{";
            for (std::size_t g = 0; g < space.factor_count(); ++g) os << (g ? "," : "") << (g == f ? 1 : 0);
            os << "}";
            first = false;
        }
    }
    os << "}];\n";
    const auto emit = [&os](const char* name, const LinearMatrix& m) {
        os << name << " = matrix{";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            os << (i ? ",\n    {" : "{");
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m.at(i, j));
            os << "}";
        }
        os << "};\n";
    };
    emit("A", monad.map_a);
    emit("B", monad.map_b);
    os << "assert(B * A == 0)\n";
    return os.str();
}

namespace {

struct CommandResult {
    int exit_code = exit_code::ok;
    Json result;
    std::vector<std::string> summary;
    std::vector<RunOutput> extra;
};

std::string fibers_line(const VerificationReport& r) {
    return r.field + ": composition_zero: " + (r.composition_zero ? "true" : "false") + "; " +
           std::to_string(r.points_checked - r.failure_count) + "/" + std::to_string(r.points_checked) +
           " points full rank";
}

CommandResult cmd_build(const RunConfig& c) {
    const auto monad = build_monad(space_of(c), c.k, c.band, c.table);
    CommandResult out;
    out.result = Json{{"params", report::params(monad.params)},
                      {"display", report::display(display_summary(monad))},
                      {"warnings", monad.warnings},
                      {"A", report::matrix(monad.map_a)},
                      {"B", report::matrix(monad.map_b)}};
    out.summary.push_back("built " + monad.params.space.to_string() + " k = " + std::to_string(c.k) + ": A " +
                          std::to_string(monad.map_a.rows()) + "x" + std::to_string(monad.map_a.cols()) + ", B " +
                          std::to_string(monad.map_b.rows()) + "x" + std::to_string(monad.map_b.cols()) +
                          ", mu = " + std::to_string(monad.params.mu));
    for (const auto& w : monad.warnings) out.summary.push_back("warning: " + w);
    out.extra.push_back({".params.json", report::params(monad.params).dump(2) + "\n"});
    if (c.cas) out.extra.push_back({".m2", export_cas_script(monad)});
    return out;
}

CommandResult cmd_verify(const RunConfig& c) {
    const auto monad = build_monad(space_of(c), c.k, c.band, c.table);
    VerifierOptions options;
    options.point_budget = c.budget;
    std::vector<VerificationReport> reports;
    for (const auto q : c.primes) reports.push_back(exhaustive_fiber_check(monad, q, options));
    if (c.samples > 0) reports.push_back(random_fiber_check(monad, c.samples, c.seed, options));

    CommandResult out;
    const bool composition_zero = check_composition_zero(monad);
    Json list = Json::array();
    Json fields = Json::array();
    Json failures = Json::array();
    std::uint64_t points = 0;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    for (const auto& r : reports) {
        auto j = report::verification(r);
        for (auto f : j["failures"]) {
            f["field"] = r.field;
            failures.push_back(std::move(f));
        }
        list.push_back(std::move(j));
        fields.push_back(r.field);
        points += r.points_checked;
        rank_a = std::max(rank_a, r.generic_rank_a);
        rank_b = std::max(rank_b, r.generic_rank_b);
        out.summary.push_back(fibers_line(r));
        if (!r.valid()) out.exit_code = exit_code::counterexample;
    }
    if (!composition_zero) out.exit_code = exit_code::counterexample;
    const auto label = evidence_label(reports);
    out.summary.push_back("evidence: " + label);
    out.result = Json{{"params", report::params(monad.params)},
                      {"composition_zero", composition_zero},
                      {"fields", fields},
                      {"ranks", Json{{"A", Json{{"expected", monad.params.alpha}, {"generic", rank_a}}},
                                     {"B", Json{{"expected", monad.params.gamma}, {"generic", rank_b}}}}},
                      {"points_checked", points},
                      {"failures", failures},
                      {"seed", c.samples > 0 ? Json(c.seed) : Json(nullptr)},
                      {"evidence", label},
                      {"reports", list}};
    if (const auto w = composition_witness(monad.map_b, monad.map_a)) {
        out.result["composition_witness"] = Json{{"row", w->row}, {"col", w->col}, {"entry", w->entry}};
        out.summary.push_back("B*A entry (" + std::to_string(w->row) + "," + std::to_string(w->col) +
                              ") = " + w->entry);
    }
    return out;
}

CommandResult cmd_cohom(const RunConfig& c) {
    if (!c.twist) throw ParseError("cohom needs a twist");
    const auto space = space_of(c);
    const auto table = kunneth_table(space, *c.twist);
    CommandResult out;
    out.result = Json{{"space", space.to_string()},
                      {"twist", report::multidegree(*c.twist)},
                      {"h", report::cohom_table(table)},
                      {"euler", report::integer(table.euler())}};
    for (std::size_t p = 0; p < table.size(); ++p) {
        if (table[p] != 0) out.summary.push_back("h" + std::to_string(p) + " = " + to_string(table[p]));
    }
    if (out.summary.empty()) out.summary.push_back("all cohomology vanishes");
    out.summary.push_back("chi = " + to_string(table.euler()));

    const auto sums = group_sums(space, -*c.twist);
    if (std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s > 0; })) {
        const auto v = check_vanishing(space, -*c.twist);
        out.result["vanishing_audit"] = report::vanishing(v);
        for (const auto p : v.counterexamples) {
            out.summary.push_back("vanishing range fails: h" + std::to_string(p) + " != 0 with p < dim X - 1");
            out.exit_code = exit_code::counterexample;
        }
    }
    return out;
}

CommandResult cmd_degree(const RunConfig& c) {
    const auto space = space_of(c);
    const ChowTruncation chow(space);
    CommandResult out;
    const auto volume = chow.polarization_volume();
    out.result = Json{{"space", space.to_string()}, {"L_volume", report::integer(volume)}};
    out.summary.push_back("L^" + std::to_string(space.dimension()) + " = " + to_string(volume));

    const auto describe = [&](const std::string& name, const BundleSummary& b) {
        Json j{{"rank", b.rank}, {"c1", report::multidegree(b.c1)}, {"deg_L", report::integer(degree_L(space, b))}};
        out.summary.push_back("deg_L " + name + " = " + to_string(degree_L(space, b)));
        if (b.rank >= 1) {
            const auto slope = slope_L(space, b);
            j["slope_L"] = report::rational(slope);
            j["normalization"] = report::normalization(normalize_L(space, b));
            out.summary.push_back("slope_L " + name + " = " + to_string(slope));
        }
        return j;
    };

    BundleSummary bundle;
    std::string name;
    if (c.c1) {
        bundle = {c.rank, *c.c1};
        name = "bundle";
        out.result["bundle"] = describe(name, bundle);
    } else {
        const auto p = monad_params(space, c.k);
        bundle = kernel_bundle(p);
        name = "T";
        out.result["k"] = c.k;
        out.result["T"] = describe("T", bundle);
        out.result["E"] = describe("E", cohomology_bundle(p));
    }
    if (c.twist) {
        const auto d = delta_L(space, *c.twist);
        out.result["twist"] = report::multidegree(*c.twist);
        out.result["delta_L"] = report::integer(d);
        out.summary.push_back("delta_L" + c.twist->to_string() + " = " + to_string(d));
        if (c.s >= 1 && c.s <= bundle.rank - 1) {
            const auto th = hoppe_threshold(space, bundle, c.s, *c.twist);
            out.result["threshold"] = Json{{"bundle", name},
                                           {"s", c.s},
                                           {"delta", report::integer(th.delta)},
                                           {"bound", report::rational(th.bound)},
                                           {"strict", th.strict},
                                           {"weak", th.weak}};
            out.summary.push_back("-s slope_L " + name + " = " + to_string(th.bound) + (th.strict ? ": strict obligation"
                                                                                    : th.weak ? ": weak obligation"
                                                                                              : ": no obligation"));
        }
    }
    return out;
}

CommandResult cmd_certify(const RunConfig& c) {
    const auto space = space_of(c);
    CommandResult out;
    if (c.what == "stability") {
        const auto cert = stability_certificate(monad_params(space, c.k), c.radius);
        out.result = report::stability(cert);
        out.summary.push_back("stability: " + to_string(cert.verdict) + " (" + std::to_string(cert.bounds.size()) +
                              " bounds, " + std::to_string(cert.not_covered.size()) + " twists not covered)");
        if (cert.verdict == Verdict::counterexample) out.exit_code = exit_code::counterexample;
    } else if (c.what == "simplicity") {
        const auto cert = simplicity_certificate(monad_params(space, c.k));
        out.result = report::simplicity(cert);
        out.summary.push_back("simplicity: " + to_string(cert.verdict));
        if (cert.verdict == Verdict::counterexample) out.exit_code = exit_code::counterexample;
    } else {
        HoppeOptions options;
        options.s_cap = c.s;
        BundleSummary bundle;
        std::string name;
        if (c.c1) {
            bundle = {c.rank, *c.c1};
            name = "bundle";
        } else {
            const auto monad = build_monad(space, c.k, c.band, c.table);
            bundle = kernel_bundle(monad.params);
            const auto h0 = kernel_sections(monad);
            options.sections_vanish = h0 == 0;
            name = "T";
            out.summary.push_back("h0(T) = " + to_string(h0));
        }
        const auto obligations = hoppe_obligations(space, bundle, c.radius, options);
        out.result = report::hoppe(obligations);
        out.result["bundle"] = Json{{"name", name}, {"rank", bundle.rank}, {"c1", report::multidegree(bundle.c1)}};
        out.summary.push_back("hoppe: " + out.result["verdict"].get<std::string>() + " (" +
                              std::to_string(obligations.size()) + " obligations, " +
                              std::to_string(out.result["uncovered"].get<std::size_t>()) + " uncovered)");
    }
    return out;
}

CommandResult cmd_segre_table(const RunConfig& c) {
    const auto table = segre_table(space_of(c), c.table);
    CommandResult out;
    out.result = report::segre(table);
    for (const auto& row : out.result["rows"]) {
        out.summary.push_back(row["pn_coord"].get<std::string>() + " -> " + row["digits"].get<std::string>() +
                              "  " + row["monomial"].get<std::string>());
    }
    return out;
}

Json envelope(const RunConfig& c) {
    Json config = Json::object();
    std::istringstream lines(c.to_config_text(false));
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find(" = ");
        config[line.substr(0, eq)] = eq == std::string::npos ? "" : line.substr(eq + 3);
    }
    return Json{{"tool", "monadforge"},
                {"version", tool_version()},
                {"command", c.command},
                {"config", config},
                {"conventions", Json{{"band", to_string(c.band)}, {"table", to_string(c.table)}}},
                {"verdict_vocabulary", verdict_vocabulary()}};
}

std::string render(const RunConfig& c, const CommandResult& r) {
    auto j = envelope(c);
    j["exit_code"] = r.exit_code;
    if (c.format == OutputFormat::json) {
        j["summary"] = r.summary;
        j["result"] = r.result;
        return j.dump(2) + "\n";
    }
    std::string text;
    for (const auto& s : r.summary) text += s + "\n";
    text += "\n" + report::to_text(j);
    text += report::to_text(Json{{"result", r.result}});
    return text;
}

std::string render_error(const RunConfig& c, int code, const std::string& message) {
    if (c.format == OutputFormat::json) {
        auto j = envelope(c);
        j["exit_code"] = code;
        j["error"] = message;
        return j.dump(2) + "\n";
    }
    return "error: " + message + "\n";
}

} // namespace

RunResult run(const RunConfig& config) {
    RunResult out;
    try {
        CommandResult r;
        if (config.command == "build") r = cmd_build(config);
        else if (config.command == "verify") r = cmd_verify(config);
        else if (config.command == "cohom") r = cmd_cohom(config);
        else if (config.command == "degree") r = cmd_degree(config);
        else if (config.command == "certify") r = cmd_certify(config);
        else if (config.command == "segre-table") r = cmd_segre_table(config);
        else if (config.command == "export") {
            const auto monad = build_monad(space_of(config), config.k, config.band, config.table);
            out.outputs.push_back({"", export_cas_script(monad)});
            return out;
        } else throw ParseError("unknown command '" + config.command + "'");
        out.exit_code = r.exit_code;
        out.outputs.push_back({"", render(config, r)});
        for (auto& e : r.extra) out.outputs.push_back(std::move(e));
    } catch (const BudgetExceeded& e) {
        out = {exit_code::budget, {{"", render_error(config, exit_code::budget, e.what())}}};
    } catch (const ConsistencyError& e) {
        out = {exit_code::counterexample, {{"", render_error(config, exit_code::counterexample, e.what())}}};
    } catch (const Error& e) {
        out = {exit_code::usage, {{"", render_error(config, exit_code::usage, e.what())}}};
    }
    return out;
}

int run_and_write(const RunConfig& config) {
    const auto result = run(config);
    const bool failed = result.exit_code == exit_code::usage || result.exit_code == exit_code::budget;
    if (config.output.empty() || failed) {
        (failed ? std::cerr : std::cout) << result.outputs.front().content;
        return result.exit_code;
    }
    for (const auto& o : result.outputs) {
        const auto path = config.output + o.suffix;
        std::ofstream file(path, std::ios::binary);
        file << o.content;
        file.close();
        if (!file) {
            std::cerr << "error: cannot write " << path << "\n";
            return exit_code::io;
        }
    }
    return result.exit_code;
}

} // namespace monadforge
