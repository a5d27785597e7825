#include "skeincore/eval.hpp"
#include "skeincore/ideals.hpp"
#include "skeincore/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace skeincore;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 internal, 2 parse, 3 validation, 4 unsupported,
// 5 budget exhausted, 6 a requested check failed.
enum ExitCode {
    kOk = 0,
    kInternal = 1,
    kParse = 2,
    kValidation = 3,
    kUnsupported = 4,
    kBudget = 5,
    kCheckFailed = 6,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt_complex(Cplx z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

struct Options {
    std::string manifold_path;
    std::string web_text;
    uint64_t seed = 1;
    int trials = 10;
    long budget = 100000;
    double tol = 1e-8;
    std::string format = "text";
    std::string poly_text;
    std::string ideal_text;
    std::string vars_text;
};

SkeinRing load_ring(const Options& opt) {
    if (opt.manifold_path.empty()) throw ValidationError("--manifold is required");
    return build_ring(parse_manifold(read_file(opt.manifold_path)));
}

Web load_web(const Options& opt) {
    if (opt.web_text.empty()) throw ValidationError("--web is required");
    std::string text = opt.web_text;
    if (text[0] == '@') text = read_file(text.substr(1));
    return parse_web(text);
}

// Normal form modulo the full manifold ideal when the spec carries
// constraints, modulo just the det ideal otherwise.
Poly constrained_normal_form(const SkeinRing& ring, const Poly& p, long budget) {
    if (ring.spec.group.relators.empty() && ring.spec.circles.empty()) return p;
    GroebnerBasis gb = buchberger(ring.layout, manifold_ideal(ring), budget);
    if (!gb.complete) throw BudgetError("manifold ideal basis incomplete within budget");
    return gb_reduce(gb, p);
}

int cmd_normalize(const Options& opt) {
    SkeinRing ring = load_ring(opt);
    Web web = load_web(opt);
    Poly p = constrained_normal_form(ring, normalize(ring, web), opt.budget);
    if (opt.format == "structured") {
        json out;
        out["manifold"] = manifold_str(ring.spec);
        out["web"] = web_str(web);
        out["normal_form"] = p.str();
        out["term_count"] = p.term_count();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
    return kOk;
}

int cmd_eval(const Options& opt) {
    SkeinRing ring = load_ring(opt);
    Web web = load_web(opt);
    json rows = json::array();
    for (int t = 0; t < opt.trials; ++t) {
        uint64_t s = opt.seed + (uint64_t)t;
        Representation rep = sample_representation(ring, s);
        Cplx v = phi_direct(ring, web, rep);
        if (opt.format == "structured") {
            rows.push_back({{"seed", s}, {"re", v.real()}, {"im", v.imag()}});
        } else {
            std::cout << "seed " << s << ": " << fmt_complex(v) << "\n";
        }
    }
    if (opt.format == "structured") {
        json out;
        out["web"] = web_str(web);
        out["values"] = rows;
        std::cout << out.dump(2) << "\n";
    }
    return kOk;
}

int cmd_check(const Options& opt) {
    SkeinRing ring = load_ring(opt);
    bool all_pass = true;
    json rows = json::array();
    for (const RelationCheck& rc : relation_suite(ring)) {
        all_pass = all_pass && rc.pass;
        if (opt.format == "structured") {
            rows.push_back({{"name", rc.name}, {"pass", rc.pass}, {"detail", rc.detail}});
        } else {
            std::cout << (rc.pass ? "PASS " : "FAIL ") << rc.name;
            if (!rc.detail.empty()) std::cout << " (" << rc.detail << ")";
            std::cout << "\n";
        }
    }
    double residual = -1.0;
    if (!opt.web_text.empty()) {
        Web web = load_web(opt);
        residual = tau_check(ring, web, opt.seed, opt.trials);
        bool ok = residual <= opt.tol;
        all_pass = all_pass && ok;
        if (opt.format == "structured") {
            rows.push_back({{"name", "route-consistency"},
                            {"pass", ok},
                            {"detail", "max residual " + std::to_string(residual)}});
        } else {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.3e", residual);
            std::cout << (ok ? "PASS " : "FAIL ") << "route-consistency (max residual " << buf
                      << ")\n";
        }
    }
    if (opt.format == "structured") {
        json out;
        out["checks"] = rows;
        out["all_pass"] = all_pass;
        std::cout << out.dump(2) << "\n";
    }
    return all_pass ? kOk : kCheckFailed;
}

int cmd_nilpotent(const Options& opt) {
    bool result;
    std::string poly_text;
    if (!opt.vars_text.empty()) {
        // Scratch ring of scalar variables, e.g. --vars x --ideal "x^2" --poly x.
        std::vector<std::string> vars;
        std::stringstream vs(opt.vars_text);
        std::string item;
        while (std::getline(vs, item, ',')) vars.push_back(item);
        RingPtr ring = make_layout(2, {}, vars);
        std::vector<Poly> gens;
        std::stringstream is(opt.ideal_text);
        while (std::getline(is, item, ';'))
            if (!item.empty()) gens.push_back(parse_poly(ring, item));
        Poly p = parse_poly(ring, opt.poly_text);
        poly_text = p.str();
        result = is_nilpotent(ring, gens, p, opt.budget);
    } else {
        SkeinRing ring = load_ring(opt);
        Poly p = opt.poly_text.empty() ? normalize(ring, load_web(opt))
                                       : parse_poly(ring.layout, opt.poly_text);
        poly_text = p.str();
        result = is_nilpotent(ring.layout, manifold_ideal(ring), p, opt.budget);
    }
    if (opt.format == "structured") {
        json out;
        out["poly"] = poly_text;
        out["nilpotent"] = result;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (result ? "true" : "false") << "\n";
    }
    return kOk;
}

int cmd_split(const Options& opt) {
    SkeinRing ring = load_ring(opt);
    Web web = load_web(opt);
    SplitResult split = theta_split(ring, web);
    double worst = 0.0;
    for (int t = 0; t < opt.trials; ++t)
        worst = std::max(worst, split_square_residual(ring, web, opt.seed + (uint64_t)t));
    bool ok = worst <= opt.tol;
    if (opt.format == "structured") {
        json out;
        out["cut_manifold"] = manifold_str(split.cut_spec);
        json rows = json::array();
        for (const Web& w : split.summands) rows.push_back(web_str(w));
        out["summands"] = rows;
        out["max_residual"] = worst;
        out["pass"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "cut manifold: " << manifold_str(split.cut_spec) << "\n";
        std::cout << "summands: " << split.summands.size() << "\n";
        for (const Web& w : split.summands) std::cout << "  " << web_str(w) << "\n";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3e", worst);
        std::cout << (ok ? "PASS " : "FAIL ") << "splitting square (max residual " << buf << ")\n";
    }
    return ok ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal forms and numerical evaluation of stated skein elements"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--manifold", opt.manifold_path, "manifold document file");
        sub->add_option("--web", opt.web_text, "web expression ('@file' to read from a file)");
        sub->add_option("--seed", opt.seed, "base PRNG seed");
        sub->add_option("--trials", opt.trials, "number of seeded samples");
        sub->add_option("--budget", opt.budget, "pair-reduction budget for basis completion");
        sub->add_option("--tol", opt.tol, "numerical tolerance");
        sub->add_option("--format", opt.format, "output format: text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    CLI::App* normalize_cmd = app.add_subcommand("normalize", "print the canonical normal form");
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a web at sampled representations");
    CLI::App* check_cmd = app.add_subcommand("check", "run the relation and consistency checks");
    CLI::App* nil_cmd = app.add_subcommand("nilpotent", "radical membership test");
    CLI::App* split_cmd = app.add_subcommand("split", "cut along the disk dual to the last generator");
    for (CLI::App* sub : {normalize_cmd, eval_cmd, check_cmd, nil_cmd, split_cmd}) add_common(sub);
    nil_cmd->add_option("--poly", opt.poly_text, "polynomial in canonical text form");
    nil_cmd->add_option("--ideal", opt.ideal_text, "';'-separated ideal generators (with --vars)");
    nil_cmd->add_option("--vars", opt.vars_text, "','-separated scratch scalar variables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (normalize_cmd->parsed()) return cmd_normalize(opt);
        if (eval_cmd->parsed()) return cmd_eval(opt);
        if (check_cmd->parsed()) return cmd_check(opt);
        if (nil_cmd->parsed()) return cmd_nilpotent(opt);
        if (split_cmd->parsed()) return cmd_split(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kValidation;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
