#ifndef SEIFERT_WRT_REPORT_HPP
#define SEIFERT_WRT_REPORT_HPP

#include "asymptotic.hpp"
#include "topology.hpp"
#include "wrt.hpp"

#include <json.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace swrt
{

enum class Mode { exact, asymptotic, both };
enum class OutputFormat { text, csv, json };

inline Mode parse_mode(const std::string &s)
{
    if (s == "exact") {
        return Mode::exact;
    }
    if (s == "asymptotic") {
        return Mode::asymptotic;
    }
    if (s == "both") {
        return Mode::both;
    }
    throw std::invalid_argument("unknown mode '" + s + "'");
}

inline std::string to_string(Mode m)
{
    switch (m) {
    case Mode::exact:
        return "exact";
    case Mode::asymptotic:
        return "asymptotic";
    default:
        return "both";
    }
}

inline OutputFormat parse_format(const std::string &s)
{
    if (s == "text") {
        return OutputFormat::text;
    }
    if (s == "csv") {
        return OutputFormat::csv;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("unknown format '" + s + "'");
}

inline std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::text:
        return "text";
    case OutputFormat::csv:
        return "csv";
    default:
        return "json";
    }
}

struct RunConfig
{
    std::vector<long> fibers;
    mpfr_prec_t precision_bits = default_precision;
    long tail_order = 3;
    Mode mode = Mode::both;
    /// levels (root order minus 2)
    std::vector<long> rows;
    OutputFormat output_format = OutputFormat::text;
    std::size_t chunk_size = 1;
    /// significant digits in text and CSV output
    int digits = 10;

    void validate() const
    {
        check_precision(precision_bits);
        if (tail_order < 0) {
            throw std::invalid_argument("tail order must be >= 0");
        }
        if (digits < 1 || digits > 200) {
            throw std::invalid_argument("digits must lie in 1..200");
        }
        if (chunk_size < 1) {
            throw std::invalid_argument("chunks must be >= 1");
        }
    }
};

/// "10..14", "10,11,100" or a mix such as "10..12,100".
inline std::vector<long> parse_rows(const std::string &text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    const auto number = [&](const std::string &t) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad row '" + t + "' in '" + text + "'");
        }
        if (used != t.size()) {
            throw std::invalid_argument("bad row '" + t + "' in '" + text + "'");
        }
        return v;
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item));
            continue;
        }
        const long a = number(item.substr(0, dots));
        const long b = number(item.substr(dots + 2));
        if (b < a) {
            throw std::invalid_argument("empty row range '" + item + "'");
        }
        for (long n = a; n <= b; ++n) {
            out.push_back(n);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("no rows in '" + text + "'");
    }
    for (long n : out) {
        if (n < 1) {
            throw std::invalid_argument("rows are levels and must be >= 1, got " + std::to_string(n));
        }
    }
    return out;
}

/// One table row at level N (root order N + 2).
struct WrtRow
{
    long level = 0;
    std::optional<Complex> exact;
    std::optional<Real> exact_err;
    /// (N+2) Z0 + Z1
    std::optional<Complex> asym;
    /// (N+2) Z0
    std::optional<Complex> z0;
};

struct WrtReport
{
    RunConfig config;
    std::vector<WrtRow> rows;
};

inline WrtReport compute_wrt(const RunConfig &config)
{
    config.validate();
    if (config.rows.empty()) {
        throw std::invalid_argument("no rows requested");
    }
    const SeifertData s = new_seifert(config.fibers);
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("wrt tables need four fibers");
    }
    WrtReport report{config, {}};
    for (long level : config.rows) {
        WrtRow row;
        row.level = level;
        if (config.mode != Mode::asymptotic) {
            WrtValue w = tau_exact(s, level + 2, config.precision_bits, config.chunk_size);
            row.exact = std::move(w.z_level);
            row.exact_err = std::move(w.error_bound);
        }
        if (config.mode != Mode::exact) {
            auto [both, lead] = table_asymptotics(s, level, config.precision_bits);
            row.asym = std::move(both);
            row.z0 = std::move(lead);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace detail
{

inline std::string fibers_string(const std::vector<long> &p)
{
    std::string out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        out += (j ? "," : "") + std::to_string(p[j]);
    }
    return out;
}

inline nlohmann::json complex_json(const Complex &z)
{
    return {{"re", z.re().to_full_string()}, {"im", z.im().to_full_string()}};
}

inline Complex complex_from_json(const nlohmann::json &j, mpfr_prec_t prec)
{
    return {Real(j.at("re").get<std::string>(), prec), Real(j.at("im").get<std::string>(), prec)};
}

inline std::string pad(const std::string &s, std::size_t width)
{
    return s.size() >= width ? s + "  " : s + std::string(width - s.size(), ' ');
}

} // namespace detail

inline std::string render_text(const WrtReport &r)
{
    const int d = r.config.digits;
    const std::size_t w = static_cast<std::size_t>(2 * d + 16);
    std::ostringstream os;
    os << new_seifert(r.config.fibers).label() << "  precision " << r.config.precision_bits << " bits\n";
    os << detail::pad("N", 8);
    const bool exact = r.config.mode != Mode::asymptotic;
    const bool asym = r.config.mode != Mode::exact;
    if (exact) {
        os << detail::pad("exact Z_N", w);
    }
    if (asym) {
        os << detail::pad("(N+2)Z0+Z1", w) << detail::pad("(N+2)Z0", w);
    }
    if (exact && asym) {
        os << "|exact-asym|";
    }
    os << "\n";
    for (const auto &row : r.rows) {
        std::string line = detail::pad(std::to_string(row.level), 8);
        if (exact) {
            line += detail::pad(row.exact->to_string(d), w);
        }
        if (asym) {
            line += detail::pad(row.asym->to_string(d), w) + detail::pad(row.z0->to_string(d), w);
        }
        if (exact && asym) {
            line += (*row.exact - *row.asym).abs().to_string(3);
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        os << line << "\n";
    }
    return os.str();
}

inline std::string render_csv(const WrtReport &r)
{
    const int d = r.config.digits;
    const bool exact = r.config.mode != Mode::asymptotic;
    const bool asym = r.config.mode != Mode::exact;
    std::ostringstream os;
    os << "N";
    if (exact) {
        os << ",exact_re,exact_im,exact_err";
    }
    if (asym) {
        os << ",asym_re,asym_im,z0_re,z0_im";
    }
    if (exact && asym) {
        os << ",abs_diff";
    }
    os << "\n";
    for (const auto &row : r.rows) {
        os << row.level;
        if (exact) {
            os << "," << row.exact->re().to_string(d) << "," << row.exact->im().to_string(d) << ","
               << row.exact_err->to_string(3);
        }
        if (asym) {
            os << "," << row.asym->re().to_string(d) << "," << row.asym->im().to_string(d) << ","
               << row.z0->re().to_string(d) << "," << row.z0->im().to_string(d);
        }
        if (exact && asym) {
            os << "," << (*row.exact - *row.asym).abs().to_string(3);
        }
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json config_json(const RunConfig &c)
{
    return {{"fibers", c.fibers},
            {"precision", c.precision_bits},
            {"tail", c.tail_order},
            {"mode", to_string(c.mode)},
            {"rows", c.rows},
            {"format", to_string(c.output_format)},
            {"chunks", c.chunk_size},
            {"digits", c.digits}};
}

inline RunConfig config_from_json(const nlohmann::json &j)
{
    RunConfig c;
    c.fibers = j.at("fibers").get<std::vector<long>>();
    c.precision_bits = j.at("precision").get<mpfr_prec_t>();
    c.tail_order = j.at("tail").get<long>();
    c.mode = parse_mode(j.at("mode").get<std::string>());
    c.rows = j.at("rows").get<std::vector<long>>();
    c.output_format = parse_format(j.at("format").get<std::string>());
    c.chunk_size = j.at("chunks").get<std::size_t>();
    c.digits = j.at("digits").get<int>();
    c.validate();
    return c;
}

inline nlohmann::json to_json(const WrtReport &r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : r.rows) {
        nlohmann::json j{{"N", row.level}};
        if (row.exact) {
            j["exact"] = detail::complex_json(*row.exact);
            j["exact"]["err"] = row.exact_err->to_full_string();
        }
        if (row.asym) {
            j["asym"] = detail::complex_json(*row.asym);
            j["z0"] = detail::complex_json(*row.z0);
        }
        rows.push_back(std::move(j));
    }
    return {{"config", config_json(r.config)}, {"rows", std::move(rows)}};
}

inline WrtReport wrt_report_from_json(const nlohmann::json &j)
{
    WrtReport r;
    r.config = config_from_json(j.at("config"));
    const mpfr_prec_t prec = r.config.precision_bits;
    for (const auto &jr : j.at("rows")) {
        WrtRow row;
        row.level = jr.at("N").get<long>();
        if (jr.contains("exact")) {
            row.exact = detail::complex_from_json(jr.at("exact"), prec);
            row.exact_err = Real(jr.at("exact").at("err").get<std::string>(), prec);
        }
        if (jr.contains("asym")) {
            row.asym = detail::complex_from_json(jr.at("asym"), prec);
            row.z0 = detail::complex_from_json(jr.at("z0"), prec);
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

inline std::string render(const WrtReport &r)
{
    switch (r.config.output_format) {
    case OutputFormat::text:
        return render_text(r);
    case OutputFormat::csv:
        return render_csv(r);
    default:
        return to_json(r).dump(2) + "\n";
    }
}

inline std::string render(const SeifertData &s, const InvariantReport &r, OutputFormat f)
{
    if (f == OutputFormat::json) {
        nlohmann::json oh = nlohmann::json::array();
        for (const auto &x : r.ohtsuki) {
            oh.push_back(to_string(x));
        }
        nlohmann::json j{{"fibers", s.p()},
                         {"D", r.D},
                         {"gamma", r.gamma},
                         {"lattice_points", r.lattice_points},
                         {"phi", to_string(r.phi)},
                         {"casson", to_string(r.casson)},
                         {"ohtsuki", oh}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (f == OutputFormat::csv) {
        os << "quantity,value\n";
        os << "D," << r.D << "\ngamma," << r.gamma << "\nlattice_points," << r.lattice_points << "\nphi,"
           << to_string(r.phi) << "\ncasson," << to_string(r.casson) << "\n";
        for (std::size_t n = 0; n < r.ohtsuki.size(); ++n) {
            os << "lambda_" << n << "," << to_string(r.ohtsuki[n]) << "\n";
        }
        return os.str();
    }
    os << s.label() << "\n";
    os << "D = " << r.D << "\n";
    os << "gamma = " << r.gamma << "\n";
    os << "lattice points = " << r.lattice_points << "\n";
    os << "phi = " << to_string(r.phi) << "\n";
    os << "lambda_C = " << to_string(r.casson) << "\n";
    for (std::size_t n = 0; n < r.ohtsuki.size(); ++n) {
        os << "lambda_" << n << " = " << to_string(r.ohtsuki[n]) << "\n";
    }
    return os.str();
}

inline std::string render(const SeifertData &s, const RepTable &t, OutputFormat f)
{
    if (f == OutputFormat::json) {
        nlohmann::json in = nlohmann::json::array();
        for (const auto &c : t.interior) {
            in.push_back({{"l", c.l.l}, {"sum", to_string(c.sum_l_over_p)}, {"C", to_string(c.c_value)}, {"CS", to_string(c.cs)}});
        }
        nlohmann::json mi = nlohmann::json::array();
        for (const auto &c : t.missing) {
            mi.push_back({{"l", c.l.l}, {"sum", to_string(c.sum_l_over_p)}, {"CS", to_string(c.cs)}});
        }
        return nlohmann::json{{"fibers", s.p()}, {"interior", in}, {"missing", mi}}.dump(2) + "\n";
    }
    std::ostringstream os;
    if (f == OutputFormat::csv) {
        os << "section,l,sum,C,CS\n";
        for (const auto &c : t.interior) {
            os << "interior,\"" << c.l.to_string() << "\"," << to_string(c.sum_l_over_p) << "," << to_string(c.c_value)
               << "," << to_string(c.cs) << "\n";
        }
        for (const auto &c : t.missing) {
            os << "missing,\"" << c.l.to_string() << "\"," << to_string(c.sum_l_over_p) << ",," << to_string(c.cs) << "\n";
        }
        return os.str();
    }
    os << s.label() << "\n\ninterior representatives (" << t.interior.size() << ")\n";
    os << detail::pad("l", 16) << detail::pad("sum l/p", 12) << detail::pad("C", 12) << "CS\n";
    for (const auto &c : t.interior) {
        os << detail::pad(c.l.to_string(), 16) << detail::pad(to_string(c.sum_l_over_p), 12)
           << detail::pad(to_string(c.c_value), 12) << to_string(c.cs) << "\n";
    }
    os << "\nmissing representatives (" << t.missing.size() << ")\n";
    os << detail::pad("l", 16) << detail::pad("sum l/p", 12) << "CS\n";
    for (const auto &c : t.missing) {
        os << detail::pad(c.l.to_string(), 16) << detail::pad(to_string(c.sum_l_over_p), 12) << to_string(c.cs) << "\n";
    }
    return os.str();
}

} // namespace swrt

#endif
