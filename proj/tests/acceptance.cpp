// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "congruent/cli.hpp"
#include "congruent/serialize.hpp"
#include "oracle.hpp"

using namespace congruent;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok)
        throw Failure(what);
}

struct Cli {
    int code;
    std::string out, err;
};

Cli cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    Cli r = cli(args);
    expect(r.code == kExitOk, "exit " + std::to_string(r.code) + " for " + args[1] + ": " + r.out + r.err);
    return json::parse(r.out);
}

Rational R(const json& j) { return Rational::parse(j.get<std::string>()); }
Rational from_mpq(const mpq_class& v) { return Rational(Integer(v.get_num()), Integer(v.get_den())); }

void fibonacci() {
    Cli v = cli({"verify", "--triangle", "3/2", "20/3", "41/6", "--n", "5"});
    expect(v.code == kExitOk, "verify rejected the triangle: " + v.err);
    json t = cli_json({"triangles", "5", "--count", "2", "--via", "point", "25/4", "75/8"});
    expect(t["triangles"].size() == 2, "expected two triangles");
    const json& t0 = t["triangles"][0];
    expect(t0["a"]["coeffs"] == json::array({"3/2"}) && t0["b"]["coeffs"] == json::array({"20/3"}) &&
               t0["c"]["coeffs"] == json::array({"41/6"}),
           "first triangle differs");
    // second triangle from doubling with plain rational arithmetic
    const mpq_class n5(5);
    oracle::QPoint p{false, mpq_class(25, 4), mpq_class(75, 8)};
    auto [a, b] = oracle::legs(n5, oracle::add(n5, p, p));
    expect(from_mpq(a) == Rational(1519, 492), "oracle leg mismatch");
    expect(R(t["triangles"][1]["a"]["coeffs"][0]) == from_mpq(a), "second triangle leg a");
    expect(R(t["triangles"][1]["b"]["coeffs"][0]) == from_mpq(b), "second triangle leg b");
}

void fermat() {
    struct Case {
        std::uint64_t n, c8, c32;
        TunnellVerdict v;
    };
    for (const Case& c : {Case{1, 2, 2, TunnellVerdict::NotCongruent}, Case{3, 4, 4, TunnellVerdict::NotCongruent},
                          Case{5, 0, 0, TunnellVerdict::ConsistentCongruent},
                          Case{7, 0, 0, TunnellVerdict::ConsistentCongruent}}) {
        TunnellCounts t = tunnell_verdict(c.n);
        expect(t.count_8 == oracle::tunnell_count(static_cast<std::int64_t>(c.n), 8), "count_8 vs enumeration");
        expect(t.count_32 == oracle::tunnell_count(static_cast<std::int64_t>(c.n), 32), "count_32 vs enumeration");
        expect(t.count_8 == c.c8 && t.count_32 == c.c32, "counts for n = " + std::to_string(c.n));
        expect(t.verdict == c.v, "verdict for n = " + std::to_string(c.n));
    }
}

void example_n1() {
    json j = cli_json({"cubic", "1"});
    expect(j["field"]["min_poly"] == json::array({"1/32", "1/4", "-1", "1"}), "minimal polynomial");
    const json& k = j["parameters"]["kappa"];
    expect(R(k["radicand_rational"]) == Rational(-35) && k["sqrt_coeff"] == 3 && k["sqrt_arg"] == 129,
           "kappa radicand");
    // lo^3 <= -35 + 3 sqrt(129) <= hi^3, squared comparisons only
    const Rational lo = R(k["enclosure"][0]).pow(3) + Rational(35), hi = R(k["enclosure"][1]).pow(3) + Rational(35);
    expect(lo.sign() < 0 || lo * lo <= Rational(1161), "kappa lower end");
    expect(hi.sign() >= 0 && hi * hi >= Rational(1161), "kappa upper end");
    ParsedBundle b = revalidate_bundle(j);
    expect(b.point.curve().residual(b.point.x(), b.point.y()).is_zero(), "on-curve check");
    expect(j["cross_checks"]["coord_agrees"] == true && j["cross_checks"]["d_equation_holds"] == true,
           "coordinate paths disagree");
    expect(j["certificate"]["verdict"] == "infinite_order", "certificate verdict");
    const json& checks = j["certificate"]["checks"];
    expect(checks.size() == 12, "expected 12 division-polynomial checks");
    for (const auto& c : checks)
        expect(c["value_nonzero"] == true, "psi value vanished");
    const FieldElement area = b.triangle.a() * b.triangle.b() / Rational(2);
    expect(area == FieldElement::from_rational(b.field, Rational(1)), "triangle area");
}

void sweep() {
    for (int n = 1; n <= 50; ++n) {
        if (n == 4) {
            std::ostringstream out, err;
            const int code = run_cli({"--json", "cubic", "4"}, out, err);
            expect(code == kExitRefused, "n = 4 should be refused");
            expect(json::parse(out.str())["error"]["kind"] == "DegenerateN4", "n = 4 error kind");
            continue;
        }
        json j = cli_json({"cubic", std::to_string(n)});
        const std::string tag = "n = " + std::to_string(n);
        expect(j["certificate"]["verdict"] == "infinite_order", tag + ": not certified");
        ParsedBundle b = revalidate_bundle(j);
        expect(b.triangle.a() * b.triangle.b() == FieldElement::from_rational(b.field, Rational(2 * n)),
               tag + ": area");
        if (n == 20) {
            expect(b.field->degree() == 1, "n = 20 should be rational");
            expect(b.point.x().to_rational() == Rational(1681, 36), "n = 20 x");
            expect(b.point.y().to_rational().abs() == Rational(62279, 216), "n = 20 y");
        }
    }
}

void identities() {
    json j = cli_json({"check-identity", "--samples", "100"});
    expect(j["desboves"]["grid_points"] == 2500, "grid size");
    expect(j["desboves"]["random_points"] == 100, "random sample count");
    expect(j["desboves"]["all_zero"] == true, "Desboves residual");
    expect(j["substituted"]["points"] == 50 && j["substituted"]["all_zero"] == true, "substituted residual");
}

void remark() {
    json miss = cli_json({"cnm", "1", "11", "--height", "20"});
    expect(miss["point"].is_null(), "found a point on 11y^2 = x^4 + 4");
    json hit = cli_json({"cnm", "1", "5", "--height", "1"});
    expect(hit["point"]["x"] == "1" && hit["point"]["y"] == "1", "expected (1, 1)");
}

void properties() {
    std::mt19937_64 rng(0x5eed2008);
    auto rq = [&] { return from_mpq(oracle::random_rational(rng, 40, 12)); };
    for (const FieldPtr& f : {NumberField::make(UniPoly{-5, 0, 1}), NumberField::make(lambda_cubic(Integer(1)))}) {
        for (int i = 0; i < 40; ++i) {
            std::vector<Rational> ca, cb, cc;
            for (int k = 0; k < f->degree(); ++k) {
                ca.push_back(rq());
                cb.push_back(rq());
                cc.push_back(rq());
            }
            FieldElement a(f, ca), b(f, cb), c(f, cc);
            expect(a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a + b == b + a, "field axioms");
            if (!a.is_zero())
                expect(a * a.inverse() == FieldElement::one(f), "inverse");
            expect((a * b).sign() == a.sign() * b.sign(), "sign multiplicativity");
        }
    }
    auto Q = NumberField::rationals();
    for (auto [n, gx, gy] : {std::tuple{5L, -4L, 6L}, std::tuple{6L, 12L, 36L}}) {
        const mpq_class nn(n);
        const oracle::QPoint g{false, gx, gy};
        const CurveEn e(Integer(n), Q);
        auto to_point = [&](const oracle::QPoint& p) {
            return p.inf ? CurvePoint::infinity(e)
                         : CurvePoint::affine(e, FieldElement::from_rational(Q, from_mpq(p.x)),
                                              FieldElement::from_rational(Q, from_mpq(p.y)));
        };
        std::vector<oracle::QPoint> pts;
        for (const oracle::QPoint& t : {oracle::QPoint{true, 0, 0}, oracle::QPoint{false, 0, 0},
                                        oracle::QPoint{false, nn, 0}})
            for (int k = 0; k <= 3; ++k)
                pts.push_back(oracle::add(nn, oracle::mul(nn, k, g), t));
        for (const auto& a : pts)
            for (const auto& b : pts) {
                const CurvePoint pa = to_point(a), pb = to_point(b);
                expect(pa + pb == pb + pa && pa + pb == to_point(oracle::add(nn, a, b)), "group law");
                expect((pa + pb) + pa == pa + (pb + pa), "associativity");
            }
        for (const auto& a : pts) {
            if (a.inf)
                continue;
            for (int m = 1; m <= 9; ++m)
                expect(division_poly_sq(Integer(n), m).eval(from_mpq(a.x)).is_zero() == oracle::mul(nn, m, a).inf,
                       "psi^2 vs scalar multiplication, m = " + std::to_string(m));
            if (a.y != 0) {
                const CurvePoint p = to_point(a);
                Triangle t = point_to_triangle(p);
                PointPair pp = triangle_to_points(t);
                expect(point_to_triangle(pp.plus).same_legs(t) && point_to_triangle(pp.minus).same_legs(t),
                       "round trip");
                Triangle c = t.canonical();
                expect((c.b() - c.a()).sign() >= 0 && c.canonical().a() == c.a(), "canonical form");
            }
        }
    }
}

void exceptional_pair() {
    json j = cli_json({"quad", "2", "--b", "2"});
    expect(j.contains("rejected_b") && j["rejected_b"].size() == 1, "b = 2 was not reported");
    expect(j["rejected_b"][0]["error"] == "ExceptionalTorsionPair" && j["rejected_b"][0]["s"] == 2,
           "rejection details");
    expect(j["parameters"]["b"] == "1" && j["parameters"]["m"] == "17", "retry parameters");
    expect(j["field"]["label"] == "Q(sqrt(17))", "retry field");
    ParsedBundle b = revalidate_bundle(j);
    expect(b.triangle.c() * b.triangle.c() == FieldElement::from_rational(b.field, Rational(17)), "hypotenuse");
    expect(j["certificate"]["verdict"] == "infinite_order", "retry certificate");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "Fibonacci reproduction", 1, [] { fibonacci(); }},
        {2, "Fermat non-congruent set", 1, [] { fermat(); }},
        {3, "cubic example n = 1", 10, [] { example_n1(); }},
        {4, "cubic sweep n = 1..50", 300, [] { sweep(); }},
        {5, "identity suite", 30, [] { identities(); }},
        {6, "quartic remark", 10, [] { remark(); }},
        {7, "property suites", 120, [] { properties(); }},
        {8, "exceptional-pair guard", 10, [] { exceptional_pair(); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs >= c.limit_s) {
            ok = false;
            detail = "over the time limit";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << secs << " s, limit "
                  << c.limit_s << " s)";
        if (!ok)
            std::cout << ": " << detail;
        std::cout << std::endl;
        failures += ok ? 0 : 1;
    }
    return failures;
}
