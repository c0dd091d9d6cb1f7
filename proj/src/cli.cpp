#include "congruent/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <random>

#include "congruent/errors.hpp"
#include "congruent/serialize.hpp"
#include "congruent/witness_cache.hpp"

namespace congruent {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_positive_integer(const std::string& s, const char* what) {
    Rational r;
    try {
        r = Rational::parse(s);
    } catch (const MathError&) {
        throw UsageError(std::string(what) + " must be a positive integer, got '" + s + "'");
    }
    if (!r.is_integer() || r.sign() <= 0)
        throw UsageError(std::string(what) + " must be a positive integer, got '" + s + "'");
    return r.numerator();
}

Integer parse_nonzero_integer(const std::string& s, const char* what) {
    Rational r;
    try {
        r = Rational::parse(s);
    } catch (const MathError&) {
        throw UsageError(std::string(what) + " must be a nonzero integer, got '" + s + "'");
    }
    if (!r.is_integer() || r.is_zero())
        throw UsageError(std::string(what) + " must be a nonzero integer, got '" + s + "'");
    return r.numerator();
}

std::uint64_t to_u64(const Integer& v, const char* what) {
    if (!mpz_fits_ulong_p(v.get_mpz_t()))
        throw UsageError(std::string(what) + " is too large");
    return v.get_ui();
}

Rational parse_rational(const std::string& s, const char* what) {
    try {
        return Rational::parse(s);
    } catch (const MathError&) {
        throw UsageError(std::string(what) + " must be a rational p/q, got '" + s + "'");
    }
}

std::string join_triangle(const Triangle& t) {
    return "a = " + t.a().to_string() + ", b = " + t.b().to_string() + ", c = " + t.c().to_string();
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, bool json_mode, unsigned digits, const std::string& cache_path)
        : out_(out), err_(err), json_(json_mode), digits_(digits) {
        if (!cache_path.empty())
            cache_ = std::make_unique<WitnessCache>(cache_path, err);
    }

    void emit(const json& payload, const std::string& text) {
        if (json_)
            out_ << payload.dump() << "\n";
        else
            out_ << text;
    }

    int tunnell(const std::string& n_arg, const std::string& range) {
        if (!range.empty()) {
            auto dots = range.find("..");
            if (dots == std::string::npos)
                throw UsageError("--range expects A..B, got '" + range + "'");
            const auto a = to_u64(parse_positive_integer(range.substr(0, dots), "range start"), "range start");
            const auto b = to_u64(parse_positive_integer(range.substr(dots + 2), "range end"), "range end");
            if (b < a)
                throw UsageError("empty range " + range);
            for (const auto& t : tunnell_scan(a, b))
                emit_tunnell(t);
            return kExitOk;
        }
        if (n_arg.empty())
            throw UsageError("tunnell needs <n> or --range A..B");
        const auto t = tunnell_verdict(to_u64(parse_positive_integer(n_arg, "n"), "n"));
        emit_tunnell(t);
        return t.verdict == TunnellVerdict::Inapplicable ? kExitRefused : kExitOk;
    }

    int quad(const std::string& n_arg, const std::string& b_arg) {
        const Integer n = parse_positive_integer(n_arg, "n");
        std::optional<Rational> requested;
        if (!b_arg.empty())
            requested = parse_rational(b_arg, "--b");
        json rejected = json::array();
        std::string text;
        auto attempt = [&](const Rational& b) -> std::optional<json> {
            try {
                return quad_bundle(n, b);
            } catch (const MathError& e) {
                if (e.kind() != ErrorKind::ExceptionalTorsionPair)
                    throw;
                const Integer s = squarefree_part(Rational(Integer(4 * n * n)) + b.pow(4));
                rejected.push_back({{"b", b.to_string()}, {"error", "ExceptionalTorsionPair"}, {"s", s.get_si()},
                                    {"message", e.what()}});
                text += "b = " + b.to_string() + " rejected: " + e.what() + "\n";
                return std::nullopt;
            }
        };
        std::optional<json> bundle;
        if (requested)
            bundle = attempt(*requested);
        for (long b = 1; !bundle && b <= 1000; ++b)
            if (!requested || *requested != Rational(b))
                bundle = attempt(Rational(b));
        if (!bundle)
            throw MathError(ErrorKind::ExceptionalTorsionPair, "no admissible b found");
        json payload = *bundle;
        if (!rejected.empty())
            payload["rejected_b"] = rejected;
        const json& p = payload["parameters"];
        text += "n = " + n.get_str() + ", b = " + p["b"].get<std::string>() + ", m = " +
                p["m"].get<std::string>() + ", field " + payload["field"]["label"].get<std::string>() + "\n";
        text += bundle_text(payload);
        emit(payload, text);
        return kExitOk;
    }

    int cubic(const std::string& n_arg) {
        const Integer n = parse_positive_integer(n_arg, "n");
        json bundle = cubic_bundle(n);
        const json& p = bundle["parameters"];
        std::string text = "n = " + n.get_str() + ", field " + bundle["field"]["label"].get<std::string>() +
                           ", lambda ~ " + p["lambda_approx"].get<std::string>() + "\n";
        text += "kappa = " + p["kappa"]["expression"].get<std::string>() + "\n";
        text += "cross checks: " + bundle["cross_checks"].dump() + "\n";
        text += bundle_text(bundle);
        emit(bundle, text);
        return kExitOk;
    }

    int triangles(const std::string& n_arg, int count, const std::vector<std::string>& via) {
        const Integer n = parse_positive_integer(n_arg, "n");
        if (count < 1)
            throw UsageError("--count must be >= 1");
        std::string mode = via.empty() ? "quad" : via.front();
        std::optional<CurvePoint> base;
        if (mode == "point") {
            if (via.size() != 3)
                throw UsageError("--via point needs X and Y");
            const FieldPtr q = NumberField::rationals();
            base = CurvePoint::affine(CurveEn(n, q),
                                      FieldElement::from_rational(q, parse_rational(via[1], "X")),
                                      FieldElement::from_rational(q, parse_rational(via[2], "Y")));
        } else if (mode == "quad" || mode == "cubic") {
            if (via.size() != 1)
                throw UsageError("--via " + mode + " takes no further values");
            json bundle = mode == "cubic" ? cubic_bundle(n) : first_quad_bundle(n);
            base = revalidate_bundle(bundle).point;
        } else {
            throw UsageError("--via must be quad, cubic or point, got '" + mode + "'");
        }
        auto tris = generate_triangles(*base, count);
        json arr = json::array();
        std::string text;
        for (std::size_t i = 0; i < tris.size(); ++i) {
            arr.push_back(to_json(tris[i], digits_));
            text += std::to_string(i + 1) + ": " + join_triangle(tris[i]) + "\n";
        }
        emit({{"n", n.get_str()}, {"via", mode}, {"point", to_json(*base)}, {"triangles", arr}}, text);
        return kExitOk;
    }

    int cnm(const std::string& n_arg, const std::string& m_arg, long height) {
        const Integer n = parse_positive_integer(n_arg, "n");
        const Integer m = parse_nonzero_integer(m_arg, "m");
        if (height < 1)
            throw UsageError("--height must be >= 1");
        auto hit = cnm_point_search(n, m, height);
        json payload{{"n", n.get_str()}, {"m", m.get_str()}, {"height", height}, {"point", nullptr},
                     {"witness", nullptr}};
        std::string text;
        if (!hit) {
            text = "no rational point on " + std::to_string(m.get_si()) + "*y^2 = x^4 + " +
                   Integer(4 * n * n).get_str() + " with height <= " + std::to_string(height) + "\n";
        } else {
            payload["point"] = {{"x", hit->x.to_string()}, {"y", hit->y.to_string()}};
            text = "point (x, y) = (" + hit->x.to_string() + ", " + hit->y.to_string() + ")\n";
            if (!hit->x.is_zero()) {
                json bundle = witness_bundle(cnm_to_witness(n, m, *hit), digits_, "cnm");
                text += bundle_text(bundle);
                payload["witness"] = std::move(bundle);
            } else {
                text += "x = 0 gives no triangle\n";
            }
        }
        emit(payload, text);
        return kExitOk;
    }

    int check_identity(int samples) {
        DesbovesCheck d = desboves_identity_check(samples);
        std::mt19937_64 rng(1981);
        std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000), den(1, 1'000'000);
        const int lambda_points = 50;
        for (int i = 0; i < lambda_points; ++i) {
            const Rational t(num(rng), den(rng));
            const Rational r = substituted_identity_check(t);
            if (!r.is_zero())
                throw MathError(ErrorKind::IdentityViolated, "substituted identity residual " + r.to_string() +
                                                                 " at lambda = " + t.to_string());
        }
        json payload{{"desboves", to_json(d)}, {"substituted", {{"points", lambda_points}, {"all_zero", true}}}};
        std::string text = "Desboves identity: " + std::to_string(d.grid_points) + " grid points + " +
                           std::to_string(d.random_points) + " random points, all residuals zero\n" +
                           "substituted identity: " + std::to_string(lambda_points) +
                           " random lambda, all residuals zero\n";
        emit(payload, text);
        return kExitOk;
    }

    int verify(const std::vector<std::string>& tri, const std::vector<std::string>& pt, const std::string& n_arg) {
        const Integer n = parse_positive_integer(n_arg, "--n");
        const FieldPtr q = NumberField::rationals();
        auto el = [&](const std::string& s, const char* what) {
            return FieldElement::from_rational(q, parse_rational(s, what));
        };
        if (tri.size() == 3 && pt.empty()) {
            Triangle t = triangle_new(el(tri[0], "a"), el(tri[1], "b"), el(tri[2], "c"), n);
            emit({{"valid", true}, {"triangle", to_json(t, digits_)}},
                 "valid right triangle of area " + n.get_str() + ": " + join_triangle(t) + "\n");
            return kExitOk;
        }
        if (pt.size() == 2 && tri.empty()) {
            CurvePoint p = CurvePoint::affine(CurveEn(n, q), el(pt[0], "x"), el(pt[1], "y"));
            OrderCertificate cert = certify_infinite_order(p);
            json payload{{"valid", true}, {"point", to_json(p)}, {"certificate", to_json(cert, p)}};
            std::string text = "point is on E_" + n.get_str() + "; order: " +
                               (cert.infinite_order() ? std::string("infinite") : std::to_string(*cert.torsion_order)) +
                               "\n";
            if (!p.y().is_zero()) {
                Triangle t = point_to_triangle(p);
                payload["triangle"] = to_json(t, digits_);
                text += join_triangle(t) + "\n";
            }
            emit(payload, text);
            return kExitOk;
        }
        throw UsageError("verify needs exactly one of --triangle A B C or --point X Y");
    }

    void report_error(std::string_view kind, const std::string& message) {
        if (json_)
            out_ << json{{"error", {{"kind", std::string(kind)}, {"message", message}}}}.dump() << "\n";
        else
            err_ << "error: " << message << "\n";
    }

private:
    void emit_tunnell(const TunnellCounts& t) {
        emit(to_json(t), "n = " + std::to_string(t.n) + ": count_8 = " + std::to_string(t.count_8) +
                             ", count_32 = " + std::to_string(t.count_32) + ", " + std::string(to_string(t.verdict)) +
                             " (" + std::string(t.note) + ")\n");
    }

    std::string bundle_text(const json& bundle) {
        const json& t = bundle["triangle"];
        const json& c = bundle["certificate"];
        std::string s = "triangle: a ~ " + t["approx"]["a"].get<std::string>() + ", b ~ " +
                        t["approx"]["b"].get<std::string>() + ", c ~ " + t["approx"]["c"].get<std::string>() + "\n";
        s += "point order: " + c["verdict"].get<std::string>() + " (" + c["reason"].get<std::string>() + ")\n";
        return s;
    }

    json cached(const json& key, const std::function<json()>& compute) {
        if (cache_) {
            if (auto hit = cache_->lookup(key))
                return *hit;
        }
        json value = compute();
        if (cache_)
            cache_->store(key, value);
        return value;
    }

    json quad_bundle(const Integer& n, const Rational& b) {
        // refuse exceptional pairs before touching the cache
        const Integer s = squarefree_part(Rational(Integer(4 * n * n)) + b.pow(4));
        if (s == 2 && (n == 1 || n == 2))
            quadratic_witness(n, b);
        return cached(WitnessCache::make_key(n, "quadratic", {{"b", b.to_string()}, {"digits", digits_}}),
                      [&] { return witness_bundle(quadratic_witness(n, b), digits_); });
    }

    json first_quad_bundle(const Integer& n) {
        for (long b = 1;; ++b) {
            try {
                return quad_bundle(n, Rational(b));
            } catch (const MathError& e) {
                if (e.kind() != ErrorKind::ExceptionalTorsionPair)
                    throw;
            }
        }
    }

    json cubic_bundle(const Integer& n) {
        return cached(WitnessCache::make_key(n, "cubic", {{"digits", digits_}}), [&] {
            CubicWitness w = cubic_witness(n);
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits_);
            KappaLambda kl = kappa_lambda_closed_form(n, Rational(Integer(1), scale));
            return witness_bundle(w, kl, digits_);
        });
    }

    std::ostream& out_;
    std::ostream& err_;
    bool json_;
    unsigned digits_;
    std::unique_ptr<WitnessCache> cache_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Congruent-number witnesses over Q, real quadratic fields and cubic fields", "congruent"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_mode = false;
    std::string cache_path;
    unsigned digits = 10;
    app.add_flag("--json", json_mode, "Emit JSON");
    app.add_option("--cache", cache_path, "JSON-lines witness cache (CONGRUENT_CACHE overrides)");
    app.add_option("--approx-digits", digits, "Fractional digits of decimal approximations")
        ->check(CLI::Range(0u, 200u));

    std::string n_arg, m_arg, range, b_arg, tn_arg;
    int count = 1, samples = 100;
    long height = 0;
    std::vector<std::string> via, tri, pt;

    auto* tunnell = app.add_subcommand("tunnell", "Tunnell representation counts");
    tunnell->add_option("n", n_arg, "Odd square-free n");
    tunnell->add_option("--range", range, "Scan A..B");

    auto* quad = app.add_subcommand("quad", "Real quadratic field witness");
    quad->add_option("n", n_arg)->required();
    quad->add_option("--b", b_arg, "Free rational parameter b > 0");

    auto* cubic = app.add_subcommand("cubic", "Cubic field witness Q(lambda)");
    cubic->add_option("n", n_arg)->required();

    auto* triangles = app.add_subcommand("triangles", "Distinct triangles from multiples of a point");
    triangles->add_option("n", n_arg)->required();
    triangles->add_option("--count", count)->required();
    triangles->add_option("--via", via, "quad | cubic | point X Y")->expected(1, 3);

    auto* cnm = app.add_subcommand("cnm", "Rational point search on m y^2 = x^4 + 4 n^2");
    cnm->add_option("n", n_arg)->required();
    cnm->add_option("m", m_arg)->required();
    cnm->add_option("--height", height)->required();

    auto* check = app.add_subcommand("check-identity", "Desboves and substituted identity checks");
    check->add_option("--samples", samples);

    auto* verify = app.add_subcommand("verify", "Validate a triangle or a curve point over Q");
    verify->add_option("--triangle", tri)->expected(3);
    verify->add_option("--point", pt)->expected(2);
    verify->add_option("--n", tn_arg)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (json_mode)
            out << json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump() << "\n";
        else
            err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    if (const char* env = std::getenv("CONGRUENT_CACHE"); env && *env)
        cache_path = env;

    Runner runner(out, err, json_mode, digits, cache_path);
    try {
        if (tunnell->parsed())
            return runner.tunnell(n_arg, range);
        if (quad->parsed())
            return runner.quad(n_arg, b_arg);
        if (cubic->parsed())
            return runner.cubic(n_arg);
        if (triangles->parsed())
            return runner.triangles(n_arg, count, via);
        if (cnm->parsed())
            return runner.cnm(n_arg, m_arg, height);
        if (check->parsed())
            return runner.check_identity(samples);
        if (verify->parsed())
            return runner.verify(tri, pt, tn_arg);
    } catch (const UsageError& e) {
        runner.report_error("UsageError", e.what());
        return kExitUsage;
    } catch (const MathError& e) {
        runner.report_error(to_string(e.kind()), e.what());
        const bool usage = e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::ParseError;
        return usage ? kExitUsage : kExitRefused;
    }
    return kExitUsage;
}

} // namespace congruent
