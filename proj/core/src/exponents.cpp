#include "strichartz/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace strichartz {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void require_unit_interval(const Rational& v, const char* what) {
    if (v < kZero || v > kOne)
        throw std::invalid_argument(std::string(what) +
                                    " must lie in [0, 1], got " + v.get_str());
}

}  // namespace

ExponentTuple make_tuple(Rational inv_r, Rational inv_rt, Rational inv_q,
                         Rational inv_qt, int n) {
    require_unit_interval(inv_r, "1/r");
    require_unit_interval(inv_rt, "1/rt");
    require_unit_interval(inv_q, "1/q");
    require_unit_interval(inv_qt, "1/qt");
    if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
    return ExponentTuple{std::move(inv_r), std::move(inv_rt), std::move(inv_q),
                         std::move(inv_qt), n};
}

ExponentTuple duality_swap(const ExponentTuple& t) {
    return ExponentTuple{t.inv_rt, t.inv_r, t.inv_qt, t.inv_q, t.n};
}

std::string_view vertex_name(VertexLabel label) {
    switch (label) {
        case VertexLabel::O: return "O";
        case VertexLabel::A: return "A";
        case VertexLabel::B: return "B";
        case VertexLabel::Bp: return "B'";
        case VertexLabel::C: return "C";
        case VertexLabel::Cp: return "C'";
        case VertexLabel::P: return "P";
        case VertexLabel::Pp: return "P'";
    }
    return "?";
}

Rational corner_p_x(int n) { return rat(n - 2, 2 * (n - 1)); }

Rational corner_p_y(int n) { return rat((n - 2) * (n - 2), 2 * n * (n - 1)); }

std::vector<RegionVertex> region_vertices(int n) {
    if (n < 3)
        throw std::invalid_argument(
            "region geometry requires dimension n >= 3");
    const Rational half = rat(1, 2);
    const Rational b = rat(n - 2, 2 * n);
    const Rational px = corner_p_x(n);
    const Rational py = corner_p_y(n);
    return {
        {VertexLabel::O, kZero, kZero}, {VertexLabel::A, half, half},
        {VertexLabel::B, half, b},      {VertexLabel::Bp, b, half},
        {VertexLabel::C, half, kZero},  {VertexLabel::Cp, kZero, half},
        {VertexLabel::P, px, py},       {VertexLabel::Pp, py, px},
    };
}

bool in_admissible_pentagon(const Rational& inv_r, const Rational& inv_rt,
                            int n) {
    if (n < 3) return false;
    const Rational half = rat(1, 2);
    const Rational b = rat(n - 2, 2 * n);
    const Rational px = corner_p_x(n);
    const Rational py = corner_p_y(n);
    // Clockwise boundary A -> B -> P -> P' -> B' -> A; inside means every
    // edge cross product is <= 0 (closed region).
    const std::array<std::pair<Rational, Rational>, 5> v = {{
        {half, half}, {half, b}, {px, py}, {py, px}, {b, half},
    }};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& [ax, ay] = v[i];
        const auto& [bx, by] = v[(i + 1) % v.size()];
        const Rational cross =
            (bx - ax) * (inv_rt - ay) - (by - ay) * (inv_r - ax);
        if (cross > kZero) return false;
    }
    return true;
}

Rational scaling_gap(const ExponentTuple& t) {
    return t.inv_q + t.inv_qt + rat(t.n, 2) * (t.inv_r + t.inv_rt) -
           rat(t.n, 2);
}

bool homogeneous_admissible(const Rational& inv_r, const Rational& inv_q,
                            int n) {
    const Rational half = rat(1, 2);
    if (inv_r > half || inv_q > half) return false;
    if (inv_r < kZero || inv_q < kZero) return false;
    if (n * inv_r + 2 * inv_q != rat(n, 2)) return false;
    if (n == 2 && inv_r == kZero && inv_q == half) return false;
    return true;
}

DecayRegime decay_regime(const Rational& inv_r, const Rational& inv_rt,
                         int n) {
    const Rational half = rat(1, 2);
    if (inv_r > half || inv_rt > half || inv_r < kZero || inv_rt < kZero)
        throw std::invalid_argument(
            "decay_regime requires 0 <= 1/r, 1/rt <= 1/2");
    // Cross-multiplied forms so n = 2 needs no special casing.
    if (n * inv_r <= (n - 2) * inv_rt) return DecayRegime::I;
    if ((n - 2) * inv_rt <= n * inv_r && inv_r <= inv_rt)
        return DecayRegime::II;
    if (inv_rt <= inv_r && (n - 2) * inv_r <= n * inv_rt)
        return DecayRegime::III;
    return DecayRegime::IV;
}

DecayExponent decay_exponent(const ExponentTuple& t) {
    const DecayRegime regime = decay_regime(t.inv_r, t.inv_rt, t.n);
    const Rational half_n = rat(t.n, 2);

    DecayExponent out;
    out.regime = regime;
    out.window_ok = true;

    auto check = [&out](bool ok, const char* text) {
        if (!ok && out.window_ok) {
            out.window_ok = false;
            out.violated = text;
        }
    };

    const Rational inv_qt_prime = t.inv_qt_prime();
    check(t.inv_q <= inv_qt_prime, "1/q <= 1/qt'");

    switch (regime) {
        case DecayRegime::I:
            out.beta = t.inv_q + t.inv_qt + (t.n - 1) * t.inv_rt - half_n;
            check(t.inv_rt <= t.inv_q, "1/rt <= 1/q");
            break;
        case DecayRegime::II:
            out.beta =
                t.inv_q + t.inv_qt - half_n * (kOne - t.inv_r - t.inv_rt);
            check(-half_n * (t.inv_r - t.inv_rt) <= t.inv_q,
                  "-(n/2)(1/r - 1/rt) <= 1/q");
            break;
        case DecayRegime::III:
            out.beta =
                t.inv_q + t.inv_qt - half_n * (kOne - t.inv_r - t.inv_rt);
            check(inv_qt_prime <= kOne - half_n * (t.inv_r - t.inv_rt),
                  "1/qt' <= 1 - (n/2)(1/r - 1/rt)");
            break;
        case DecayRegime::IV:
            out.beta = t.inv_q + t.inv_qt + (t.n - 1) * t.inv_r - half_n;
            check(inv_qt_prime <= kOne - t.inv_r, "1/qt' <= 1 - 1/r");
            break;
    }
    return out;
}

NecessaryReport necessary_conditions(const ExponentTuple& t) {
    const int n = t.n;
    auto entry = [](std::string name, Rational slack) {
        const bool ok = slack >= Rational(0);
        return ConditionCheck{std::move(name), std::move(slack), ok};
    };
    return NecessaryReport{
        entry("(n-2)/r - 2/q <= n/rt",
              n * t.inv_rt - ((n - 2) * t.inv_r - 2 * t.inv_q)),
        entry("(n-2)/rt - 2/qt <= n/r",
              n * t.inv_r - ((n - 2) * t.inv_rt - 2 * t.inv_qt)),
        entry("(n-2)/rt - 2/q <= n/r",
              n * t.inv_r - ((n - 2) * t.inv_rt - 2 * t.inv_q)),
        entry("(n-2)/r - 2/qt <= n/rt",
              n * t.inv_rt - ((n - 2) * t.inv_r - 2 * t.inv_qt)),
    };
}

bool corner_window_valid(const ExponentTuple& t) {
    if (t.n < 3) return false;
    if (t.inv_q != t.inv_qt_prime()) return false;
    const Rational px = corner_p_x(t.n);
    const Rational py = corner_p_y(t.n);
    const Rational lo = rat(t.n - 2, 2 * (t.n - 1));
    const Rational hi = rat(t.n, 2 * (t.n - 1));
    if (t.inv_r == px && t.inv_rt == py)
        return lo <= t.inv_q && t.inv_q < hi;
    if (t.inv_r == py && t.inv_rt == px)
        return lo < t.inv_q && t.inv_q <= hi;
    return false;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Valid: return "Valid";
        case Verdict::Invalid: return "Invalid";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

Classification classify(const ExponentTuple& t) {
    // A violated necessary inequality is the more specific diagnosis, so it
    // wins over a nonzero scaling gap.
    const NecessaryReport report = necessary_conditions(t);
    const auto* worst = &report[0];
    for (const auto& c : report)
        if (c.slack < worst->slack) worst = &c;
    if (!worst->satisfied) {
        const auto index = static_cast<std::size_t>(worst - report.data()) + 1;
        return Classification{
            Verdict::Invalid,
            "necessary condition " + std::to_string(index) +
                " violated: " + worst->name,
            worst->slack};
    }

    const Rational gap = scaling_gap(t);
    if (gap != kZero)
        return Classification{Verdict::Invalid, "scaling condition violated",
                              gap};

    if (corner_window_valid(t)) {
        const bool at_p = t.inv_r == corner_p_x(t.n);
        const Rational lo = rat(t.n - 2, 2 * (t.n - 1));
        const Rational hi = rat(t.n, 2 * (t.n - 1));
        const Rational left_margin = t.inv_q - lo;
        const Rational right_margin = hi - t.inv_q;
        const Rational margin =
            left_margin < right_margin ? left_margin : right_margin;
        return Classification{Verdict::Valid,
                              at_p ? "corner P" : "corner P'", margin};
    }

    const bool strict =
        std::all_of(report.begin(), report.end(),
                    [](const ConditionCheck& c) { return c.slack > kZero; });
    if (strict && in_admissible_pentagon(t.inv_r, t.inv_rt, t.n)) {
        return Classification{
            Verdict::Valid,
            "pentagon interior (advisory: sufficient q-range not encoded)",
            worst->slack};
    }

    return Classification{Verdict::Unknown, "outside encoded sufficient range",
                          kZero};
}

Rational concentration_lhs_slope(const ExponentTuple& t) {
    return Rational(t.n + 2) + (2 - t.n) * t.inv_r;
}

Rational concentration_rhs_slope(const ExponentTuple& t) {
    return 2 * t.inv_qt_prime() + t.n * t.inv_rt_prime();
}

// ---------------------------------------------------------------------------
// Parsing and formatting
// ---------------------------------------------------------------------------

namespace {

struct Token {
    std::size_t pos;
    std::string_view text;
};

std::vector<Token> split_tokens(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        tokens.push_back({start, text.substr(start, i - start)});
    }
    return tokens;
}

Rational parse_reciprocal_value(const Token& tok, std::string_view value) {
    Rational v;
    if (!parse_rational(value, v))
        throw ParseError(tok.pos, "malformed rational '" + std::string(value) +
                                      "' in '" + std::string(tok.text) + "'");
    if (v < Rational(0) || v > Rational(1))
        throw ParseError(tok.pos, "reciprocal exponent out of [0, 1] in '" +
                                      std::string(tok.text) + "'");
    return v;
}

Rational parse_direct_value(const Token& tok, std::string_view value) {
    if (value == "inf" || value == "Inf" || value == "INF") return Rational(0);
    Rational v;
    if (!parse_rational(value, v))
        throw ParseError(tok.pos, "malformed exponent '" + std::string(value) +
                                      "' in '" + std::string(tok.text) + "'");
    if (v < Rational(1))
        throw ParseError(tok.pos, "exponent must be >= 1 or 'inf' in '" +
                                      std::string(tok.text) + "'");
    return Rational(1) / v;
}

}  // namespace

ExponentTuple parse_tuple(std::string_view text) {
    std::optional<int> n;
    std::map<std::string, Rational> recips;  // keyed "r", "rt", "q", "qt"

    for (const Token& tok : split_tokens(text)) {
        const auto eq = tok.text.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(tok.pos, "expected key=value, got '" +
                                          std::string(tok.text) + "'");
        std::string_view key = tok.text.substr(0, eq);
        std::string_view value = tok.text.substr(eq + 1);

        if (key == "n") {
            Rational v;
            if (!parse_rational(value, v) || v.get_den() != 1 ||
                v < Rational(1))
                throw ParseError(tok.pos, "n must be a positive integer in '" +
                                              std::string(tok.text) + "'");
            if (n)
                throw ParseError(tok.pos, "duplicate key 'n'");
            n = static_cast<int>(v.get_num().get_si());
            continue;
        }

        bool reciprocal = false;
        if (key.substr(0, 2) == "1/") {
            reciprocal = true;
            key = key.substr(2);
        }
        if (key != "r" && key != "rt" && key != "q" && key != "qt")
            throw ParseError(tok.pos, "unknown key '" + std::string(key) +
                                          "' in '" + std::string(tok.text) +
                                          "'");
        if (recips.count(std::string(key)))
            throw ParseError(tok.pos,
                             "duplicate exponent key '" + std::string(key) +
                                 "'");
        recips.emplace(std::string(key),
                       reciprocal ? parse_reciprocal_value(tok, value)
                                  : parse_direct_value(tok, value));
    }

    if (!n) throw ParseError(text.size(), "missing key 'n'");
    for (const char* key : {"r", "rt", "q", "qt"})
        if (!recips.count(key))
            throw ParseError(text.size(),
                             std::string("missing exponent key '") + key +
                                 "'");
    return make_tuple(recips.at("r"), recips.at("rt"), recips.at("q"),
                      recips.at("qt"), *n);
}

std::string format_tuple_reciprocal(const ExponentTuple& t) {
    std::ostringstream os;
    os << "n=" << t.n << " 1/r=" << t.inv_r.get_str()
       << " 1/rt=" << t.inv_rt.get_str() << " 1/q=" << t.inv_q.get_str()
       << " 1/qt=" << t.inv_qt.get_str();
    return os.str();
}

std::string format_tuple_direct(const ExponentTuple& t) {
    auto direct = [](const Rational& inv) -> std::string {
        if (inv == Rational(0)) return "inf";
        const Rational value = Rational(1) / inv;
        return value.get_str();
    };
    std::ostringstream os;
    os << "n=" << t.n << " r=" << direct(t.inv_r) << " rt=" << direct(t.inv_rt)
       << " q=" << direct(t.inv_q) << " qt=" << direct(t.inv_qt);
    return os.str();
}

std::string classification_csv_row(const Classification& c) {
    std::ostringstream os;
    os << verdict_name(c.verdict) << "," << c.source << ","
       << c.slack.get_str();
    return os.str();
}

}  // namespace strichartz
