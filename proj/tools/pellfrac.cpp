// Command-line interface: periodic continued fractions of quadratic
// irrationals, the signature-(N,k) variety and its Pell conic fibration,
// arithmetic complexity and predicted rank, narrow class groups, and the
// elliptic-curve corroboration search.
//
// Exit codes: 0 success; 2 validation error (diagnostic on stderr);
// 3 soft failure (no known family / no stable signature) with a partial
// report on stdout.

#include <array>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pellfrac/bej.hpp"
#include "pellfrac/cfrac.hpp"
#include "pellfrac/classgroup.hpp"
#include "pellfrac/curves.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/euler.hpp"
#include "pellfrac/pell.hpp"
#include "pellfrac/surd.hpp"
#include "pellfrac/textio.hpp"

using json = nlohmann::ordered_json;
using namespace pellfrac;

namespace {

constexpr int kSchemaVersion = 1;

json jint(const Int& v) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

json jint_list(const std::vector<Int>& xs) {
    json arr = json::array();
    for (const Int& x : xs) arr.push_back(jint(x));
    return arr;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json cf_json(const PeriodicCF& cf) {
    json j;
    j["preperiod"] = jint_list(cf.preperiod());
    j["period"] = jint_list(cf.period());
    j["signature"] = {cf.preperiod().size(), cf.period().size()};
    j["text"] = cf.str();
    return j;
}

int cmd_expand(const std::string& input, const std::string& format) {
    const QuadSurd th = parse_surd(input);
    const PeriodicCF cf = expand(th);
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion}, {"theta", th.str()}};
        j.update(cf_json(cf));
        emit(j);
    } else {
        std::cout << cf.str() << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& input, const std::string& format) {
    const PeriodicCF cf = parse_cf(input);
    const QuadSurd th = evaluate(cf);
    const QuadPoly mp = th.minimal_poly();
    if (format == "json") {
        emit(json{{"schema_version", kSchemaVersion},
                  {"cf", cf.str()},
                  {"canonical_cf", cf.canonical().str()},
                  {"theta", th.str()},
                  {"minimal_poly", {jint(mp.A()), jint(mp.B()), jint(mp.C())}}});
    } else {
        std::cout << th.str() << "\n";
    }
    return 0;
}

int cmd_matrix(const std::string& input, const std::string& format) {
    const PeriodicCF cf = parse_cf(input);
    const Mat2 e = equivalence_matrix(cf);
    const QuadPoly q = induced_quadratic(e);
    if (format == "json") {
        emit(json{{"schema_version", kSchemaVersion},
                  {"cf", cf.str()},
                  {"matrix", {{jint(e.m11), jint(e.m12)}, {jint(e.m21), jint(e.m22)}}},
                  {"det", jint(e.det())},
                  {"induced_quadratic", {jint(q.A()), jint(q.B()), jint(q.C())}}});
    } else {
        std::cout << "E = [[" << e.m11 << ", " << e.m12 << "], [" << e.m21 << ", " << e.m22
                  << "]]\n"
                  << "det = " << e.det() << "\n"
                  << "induced quadratic = " << q.str() << "\n";
    }
    return 0;
}

int cmd_bej_build(long long n, long long k, const std::string& surd_input,
                  const std::string& format) {
    if (n < 0 || k < 1) throw std::invalid_argument("need preperiod length >= 0, period >= 1");
    const auto np = static_cast<std::size_t>(n);
    const auto kp = static_cast<std::size_t>(k);

    std::vector<std::string> vars;
    std::array<std::string, 3> eqs;
    json coeffs;
    if (surd_input.empty()) {
        const SymbolicSystem sys = build_system_symbolic(np, kp);
        vars = *sys.ctx;
        for (int i = 0; i < 3; ++i) eqs[i] = sys.equations[i].str();
    } else {
        const QuadSurd th = parse_surd(surd_input);
        const QuadPoly mp = th.minimal_poly();
        const BejSystem sys = build_system(np, kp, mp);
        vars = *sys.context();
        for (int i = 0; i < 3; ++i) eqs[i] = sys.equations()[i].str();
        coeffs = json{{"A", jint(mp.A())}, {"B", jint(mp.B())}, {"C", jint(mp.C())}};
    }

    if (format == "json") {
        json j{{"schema_version", kSchemaVersion},
               {"pre_len", np},
               {"period_len", kp},
               {"symbolic", surd_input.empty()}};
        if (!coeffs.is_null()) j["coefficients"] = coeffs;
        j["variables"] = vars;
        j["equations"] = {eqs[0], eqs[1], eqs[2]};
        emit(j);
    } else {
        std::cout << "variables:";
        for (const std::string& v : vars) std::cout << " " << v;
        std::cout << "\n";
        for (int i = 0; i < 3; ++i) std::cout << "eq" << i + 1 << " = " << eqs[i] << "\n";
    }
    return 0;
}

int cmd_bej_check(const std::string& input, const std::string& format) {
    const QuadSurd th = parse_surd(input);
    const PeriodicCF cf = expand(th);
    const BejSystem sys =
        build_system(cf.preperiod().size(), cf.period().size(), th.minimal_poly());
    const VarietyPoint pt{cf.preperiod(), cf.period()};
    const bool member = is_member(sys, pt);
    const auto fiber = fiber_projection(sys, pt);
    const PellConic conic(th.minimal_poly(), static_cast<int>(cf.period().size()));
    const bool on = on_conic(conic, ConicPoint{fiber.first, fiber.second});

    if (format == "json") {
        json j{{"schema_version", kSchemaVersion}, {"theta", th.str()}};
        j.update(cf_json(cf));
        j["member"] = member;
        j["fiber"] = {jint(fiber.first), jint(fiber.second)};
        j["on_conic"] = on;
        emit(j);
    } else {
        std::cout << "cf = " << cf.str() << "\n"
                  << "member of V(" << cf.preperiod().size() << ", " << cf.period().size()
                  << "): " << (member ? "yes" : "no") << "\n"
                  << "fiber = (" << fiber.first << ", " << fiber.second << ")\n"
                  << "on conic: " << (on ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_bej_classify(long long a, long long b, long long c, const std::string& format) {
    const auto comps = classify_v12(Int(a), Int(b), Int(c));
    if (format == "json") {
        json arr = json::array();
        for (const ComponentDescription& comp : comps)
            arr.push_back(json{{"kind", comp.kind},
                               {"parametrization", comp.parametrization},
                               {"dimension", comp.dimension}});
        emit(json{{"schema_version", kSchemaVersion},
                  {"A", a},
                  {"B", b},
                  {"C", c},
                  {"components", arr}});
    } else {
        for (const ComponentDescription& comp : comps)
            std::cout << comp.kind << ": " << comp.parametrization << " (dimension "
                      << comp.dimension << ")\n";
    }
    return 0;
}

int cmd_pell(const std::string& input, long long bound, const std::string& format) {
    const QuadSurd th = parse_surd(input);
    const PeriodicCF cf = expand(th);
    const QuadPoly mp = th.minimal_poly();
    const PellConic conic(mp, static_cast<int>(cf.period().size()));
    const auto sols = solutions_up_to(conic, Int(bound));

    // For theta = sqrt(D), also report the fundamental units of both signs.
    const bool pure_root = mp.A() == 1 && mp.B() == 0 && th.sign() > 0;
    std::optional<ConicPoint> plus, minus;
    Int d_value = 0;
    if (pure_root) {
        d_value = -mp.C();
        plus = fundamental_pell(d_value, 1);
        minus = fundamental_pell(d_value, -1);
    }

    if (format == "json") {
        json j{{"schema_version", kSchemaVersion},
               {"theta", th.str()},
               {"conic",
                {{"A", jint(mp.A())},
                 {"B", jint(mp.B())},
                 {"C", jint(mp.C())},
                 {"parity", conic.parity()},
                 {"rhs", jint(conic.rhs())}}},
               {"height_bound", bound}};
        json arr = json::array();
        for (const ConicPoint& p : sols) arr.push_back({jint(p.x), jint(p.y)});
        j["solutions"] = arr;
        if (pure_root) {
            json f;
            f["plus"] = plus ? json{jint(plus->x), jint(plus->y)} : json(nullptr);
            f["minus"] = minus ? json{jint(minus->x), jint(minus->y)} : json(nullptr);
            j["fundamental"] = f;
        }
        emit(j);
    } else {
        std::cout << "conic (A, B, C) = " << mp.str() << ", parity = " << conic.parity()
                  << ", rhs = " << conic.rhs() << "\n";
        if (pure_root) {
            std::cout << "fundamental y^2 - " << d_value << "*x^2 = 1: ";
            if (plus) std::cout << "(x, y) = (" << plus->x << ", " << plus->y << ")\n";
            else std::cout << "none\n";
            std::cout << "fundamental y^2 - " << d_value << "*x^2 = -1: ";
            if (minus) std::cout << "(x, y) = (" << minus->x << ", " << minus->y << ")\n";
            else std::cout << "none\n";
        }
        std::cout << "solutions with |x|, |y| <= " << bound << ":";
        if (sols.empty()) std::cout << " none";
        std::cout << "\n";
        for (const ConicPoint& p : sols) std::cout << "  (" << p.x << ", " << p.y << ")\n";
    }
    return 0;
}

json partial_report(const QuadSurd& th, const PeriodicCF& cf, const std::string& reason,
                    const std::string& what) {
    return json{{"schema_version", kSchemaVersion},
                {"theta", th.str()},
                {"signature", {cf.preperiod().size(), cf.period().size()}},
                {"error", reason},
                {"detail", what}};
}

int cmd_complexity(const std::string& input, long long max_deg, long long window, bool rank_only,
                   const std::string& format) {
    const QuadSurd th = parse_surd(input);
    const PeriodicCF cf = expand(th);
    if (max_deg < 1) throw std::invalid_argument("max-deg must be at least 1");
    if (window < 3) throw std::invalid_argument("window must be at least 3");

    ComplexityReport rep;
    try {
        rep = complexity_report(th, static_cast<std::size_t>(max_deg),
                                static_cast<std::size_t>(window));
    } catch (const no_known_family& e) {
        if (format == "json") emit(partial_report(th, cf, "no known family", e.what()));
        else std::cout << "no known family: " << e.what() << "\n";
        return 3;
    } catch (const no_stable_signature& e) {
        if (format == "json") emit(partial_report(th, cf, "no stable signature", e.what()));
        else std::cout << "no stable signature: " << e.what() << "\n";
        return 3;
    }

    if (rank_only) {
        if (format == "json") {
            emit(json{{"schema_version", kSchemaVersion},
                      {"theta", th.str()},
                      {"rank", rep.predicted_rank},
                      {"complexity", rep.complexity},
                      {"method", rep.method}});
        } else {
            std::cout << "rank = " << rep.predicted_rank << " (complexity = " << rep.complexity
                      << ", method = " << rep.method << ")\n";
        }
        return 0;
    }

    if (format == "json") {
        json params = json::object();
        for (const auto& [name, value] : rep.family_parameters) params[name] = value.str();
        emit(json{{"schema_version", kSchemaVersion},
                  {"theta", th.str()},
                  {"signature", {rep.pre_len, rep.period_len}},
                  {"method", rep.method},
                  {"dimension", rep.dimension},
                  {"complexity", rep.complexity},
                  {"predicted_rank", rep.predicted_rank},
                  {"family_parameters", params},
                  {"samples_used", rep.samples_used}});
    } else {
        std::cout << "theta = " << th.str() << "\n"
                  << "signature = (" << rep.pre_len << ", " << rep.period_len << ")\n"
                  << "method = " << rep.method << "\n"
                  << "complexity = " << rep.complexity << "\n"
                  << "predicted rank = " << rep.predicted_rank << "\n";
        if (!rep.family_parameters.empty()) {
            std::cout << "parameters:";
            for (const auto& [name, value] : rep.family_parameters)
                std::cout << " " << name << " = " << value.str();
            std::cout << "\n";
        }
        if (rep.method == "implicitization")
            std::cout << "samples used = " << rep.samples_used << "\n";
    }
    return 0;
}

int cmd_classgroup(long long d_in, const std::string& format) {
    const Int D(d_in);
    const auto forms = reduced_forms(D);
    const auto cycles = class_group_cycles(D);
    const AbelianGroupStructure group = narrow_class_group(D);
    std::vector<Int> sha_divisors;
    for (const Int& d : group.divisors) {
        sha_divisors.push_back(d);
        sha_divisors.push_back(d);
    }
    std::sort(sha_divisors.begin(), sha_divisors.end());

    if (format == "json") {
        json jcycles = json::array();
        for (const auto& cycle : cycles) {
            json jc = json::array();
            for (const BQForm& f : cycle) jc.push_back(f.str());
            jcycles.push_back(jc);
        }
        emit(json{{"schema_version", kSchemaVersion},
                  {"D", d_in},
                  {"form_count", forms.size()},
                  {"h_plus", jint(group.order)},
                  {"cycles", jcycles},
                  {"group", jint_list(group.divisors)},
                  {"sha", jint_list(sha_divisors)},
                  {"sha_order", jint(group.order * group.order)}});
    } else {
        std::cout << "D = " << D << "\n"
                  << "reduced forms = " << forms.size() << "\n"
                  << "h_plus = " << group.order << "\n"
                  << "cycles:\n";
        for (const auto& cycle : cycles) {
            std::cout << " ";
            for (const BQForm& f : cycle) std::cout << " " << f.str();
            std::cout << "\n";
        }
        std::cout << "group = [";
        for (std::size_t i = 0; i < group.divisors.size(); ++i)
            std::cout << (i ? ", " : "") << group.divisors[i];
        std::cout << "]\n";
        std::cout << "sha = [";
        for (std::size_t i = 0; i < sha_divisors.size(); ++i)
            std::cout << (i ? ", " : "") << sha_divisors[i];
        std::cout << "] (order " << group.order * group.order << ")\n";
    }
    return 0;
}

int cmd_sha(const std::string& input, const std::string& format) {
    const QuadSurd th = parse_surd(input);
    const OrderInfo info = order_info(th);
    const AbelianGroupStructure cl = narrow_class_group(info.discriminant);
    const AbelianGroupStructure sha = sha_group(th);

    if (format == "json") {
        emit(json{{"schema_version", kSchemaVersion},
                  {"theta", th.str()},
                  {"discriminant", jint(info.discriminant)},
                  {"fundamental_discriminant", jint(info.fundamental_discriminant)},
                  {"conductor", jint(info.conductor)},
                  {"monogenic", info.monogenic},
                  {"h_plus", jint(cl.order)},
                  {"sha_divisors", jint_list(sha.divisors)},
                  {"sha_order", jint(sha.order)}});
    } else {
        std::cout << "theta = " << th.str() << "\n"
                  << "discriminant = " << info.discriminant << " (fundamental "
                  << info.fundamental_discriminant << ", conductor " << info.conductor << ", "
                  << (info.monogenic ? "monogenic" : "not monogenic") << ")\n"
                  << "h_plus = " << cl.order << "\n"
                  << "sha_divisors = [";
        for (std::size_t i = 0; i < sha.divisors.size(); ++i)
            std::cout << (i ? ", " : "") << sha.divisors[i];
        std::cout << "]\n"
                  << "sha_order = " << sha.order << "\n";
    }
    return 0;
}

int cmd_verify_family(const std::string& family, long long b_max, const std::string& format) {
    if (family != "euler-cm" && family != "euler-q")
        throw std::invalid_argument("family must be euler-cm or euler-q");
    if (b_max < 1) throw std::invalid_argument("b-max must be at least 1");

    std::vector<long long> failures;
    long long checked = 0;
    if (family == "euler-cm") {
        for (long long b = 1; b <= b_max; ++b) {
            ++checked;
            const PeriodicCF expected({Int(b)}, {Int(b), Int(2 * b)});
            if (expand(QuadSurd(0, 1, 1, Int(b) * b + 2)) != expected) failures.push_back(b);
        }
    } else {
        for (long long b = 3; b <= b_max; b += 2) {
            ++checked;
            const PeriodicCF expected =
                PeriodicCF({Int(b - 1)}, {Int(1), Int(b - 2)}).canonical();
            if (expand(QuadSurd(b, 1, 2, Int(b) * b - 4)) != expected) failures.push_back(b);
        }
    }

    if (format == "json") {
        emit(json{{"schema_version", kSchemaVersion},
                  {"family", family},
                  {"b_max", b_max},
                  {"checked", checked},
                  {"failures", failures},
                  {"all_pass", failures.empty()}});
    } else {
        std::cout << family << ": " << (checked - static_cast<long long>(failures.size())) << "/"
                  << checked << " identity checks pass\n";
        if (!failures.empty()) {
            std::cout << "failures at b =";
            for (const long long b : failures) std::cout << " " << b;
            std::cout << "\n";
        }
    }
    return failures.empty() ? 0 : 1;
}

int cmd_corroborate_curve(long long b, long long bound, const std::string& format) {
    const IntegralCubicCurve curve = curve_from_b(Int(b));
    const auto points = point_search(curve, Int(bound));
    const std::string note =
        "absence of nontorsion points at this bound is evidence, not proof";

    bool all_torsion = true;
    json jpoints = json::array();
    std::vector<std::string> lines;
    for (const CurvePoint& p : points) {
        if (p.at_infinity) continue;
        const auto order = classify_torsion(curve, p);
        if (!order) all_torsion = false;
        if (format == "json") {
            json entry = json::array();
            entry.push_back(p.X.str());
            entry.push_back(p.Y.str());
            if (order) entry.push_back(*order);
            else entry.push_back("nontorsion");
            jpoints.push_back(entry);
        } else {
            lines.push_back("  " + p.str() + ": " +
                            (order ? "order " + std::to_string(*order) : "nontorsion"));
        }
    }

    if (format == "json") {
        emit(json{{"schema_version", kSchemaVersion},
                  {"b", b},
                  {"height_bound", bound},
                  {"model_roots", {jint(curve.e1()), jint(curve.e2()), jint(curve.e3())}},
                  {"points", jpoints},
                  {"all_torsion", all_torsion},
                  {"note", note}});
    } else {
        std::cout << "b = " << b << "\n"
                  << "model roots = (" << curve.e1() << ", " << curve.e2() << ", " << curve.e3()
                  << ")\n"
                  << "affine points found = " << lines.size() << " (plus the point at infinity)\n";
        for (const std::string& line : lines) std::cout << line << "\n";
        std::cout << "all torsion: " << (all_torsion ? "yes" : "no") << " (" << note << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for periodic continued fractions, Pell conics,\n"
                 "class groups of binary quadratic forms, and rank predictions"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"json", "text"}));

    int rc = 0;
    std::string surd_in, cf_in, family_in, bej_surd;
    long long n_in = 0, k_in = 0, a_in = 0, b_in = 0, c_in = 0, d_in = 0;
    long long max_deg = 2, window = 40, height_bound = 100, curve_bound = 200, b_max = 50;

    auto* c_expand = app.add_subcommand("expand", "continued fraction of a quadratic surd");
    c_expand->add_option("surd", surd_in, "e.g. \"sqrt(11)\" or \"(3+sqrt(5))/2\"")->required();
    c_expand->callback([&] { rc = cmd_expand(surd_in, format); });

    auto* c_eval = app.add_subcommand("eval", "value of a periodic continued fraction");
    c_eval->add_option("cf", cf_in, "e.g. \"[3; (3, 6)]\"")->required();
    c_eval->callback([&] { rc = cmd_eval(cf_in, format); });

    auto* c_matrix = app.add_subcommand("matrix", "equivalence matrix of a periodic expansion");
    c_matrix->add_option("cf", cf_in, "continued fraction text")->required();
    c_matrix->callback([&] { rc = cmd_matrix(cf_in, format); });

    auto* c_build = app.add_subcommand("bej-build", "equations of the signature variety");
    c_build->add_option("N", n_in, "preperiod length")->required();
    c_build->add_option("k", k_in, "period length")->required();
    c_build->add_option("surd", bej_surd, "optional surd fixing (A, B, C) numerically");
    c_build->callback([&] { rc = cmd_bej_build(n_in, k_in, bej_surd, format); });

    auto* c_check = app.add_subcommand("bej-check",
                                       "verify a surd's expansion point lies on its variety");
    c_check->add_option("surd", surd_in, "quadratic surd")->required();
    c_check->callback([&] { rc = cmd_bej_check(surd_in, format); });

    auto* c_classify = app.add_subcommand("bej-classify",
                                          "components of the (1,2) variety for (A, B, C)");
    c_classify->add_option("A", a_in, "leading coefficient")->required();
    c_classify->add_option("B", b_in, "middle coefficient")->required();
    c_classify->add_option("C", c_in, "constant coefficient")->required();
    c_classify->callback([&] { rc = cmd_bej_classify(a_in, b_in, c_in, format); });

    auto* c_pell = app.add_subcommand("pell", "Pell conic of a surd and its integer solutions");
    c_pell->add_option("surd", surd_in, "quadratic surd")->required();
    c_pell->add_option("--height-bound", height_bound, "solution scan bound (default 100)")
        ->check(CLI::PositiveNumber);
    c_pell->callback([&] { rc = cmd_pell(surd_in, height_bound, format); });

    auto* c_cx = app.add_subcommand("complexity", "arithmetic complexity of a surd");
    c_cx->add_option("surd", surd_in, "quadratic surd")->required();
    c_cx->add_option("--max-deg", max_deg, "implicitization degree bound (default 2)");
    c_cx->add_option("--window", window, "initial sampling window (default 40)");
    c_cx->callback([&] { rc = cmd_complexity(surd_in, max_deg, window, false, format); });

    auto* c_rank = app.add_subcommand("rank", "predicted Mordell-Weil rank (complexity - 1)");
    c_rank->add_option("surd", surd_in, "quadratic surd")->required();
    c_rank->add_option("--max-deg", max_deg, "implicitization degree bound (default 2)");
    c_rank->add_option("--window", window, "initial sampling window (default 40)");
    c_rank->callback([&] { rc = cmd_complexity(surd_in, max_deg, window, true, format); });

    auto* c_cg = app.add_subcommand("classgroup",
                                    "reduced forms, cycles, and narrow class group for D");
    c_cg->add_option("D", d_in, "positive non-square discriminant, 0 or 1 mod 4")->required();
    c_cg->callback([&] { rc = cmd_classgroup(d_in, format); });

    auto* c_sha = app.add_subcommand("sha", "Tate-Shafarevich group predicted for a surd");
    c_sha->add_option("surd", surd_in, "quadratic surd")->required();
    c_sha->callback([&] { rc = cmd_sha(surd_in, format); });

    auto* c_vf = app.add_subcommand("verify-family", "check a family's expansion identities");
    c_vf->add_option("family", family_in, "euler-cm or euler-q")->required();
    c_vf->add_option("--b-max", b_max, "largest family parameter to check (default 50)");
    c_vf->callback([&] { rc = cmd_verify_family(family_in, b_max, format); });

    auto* c_curve = app.add_subcommand("corroborate-curve",
                                       "bounded point search and torsion classification");
    c_curve->add_option("b", b_in, "family parameter b >= 3")->required();
    c_curve->add_option("--height-bound", curve_bound, "numerator/denominator bound (default 200)")
        ->check(CLI::PositiveNumber);
    c_curve->callback([&] { rc = cmd_corroborate_curve(b_in, curve_bound, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
