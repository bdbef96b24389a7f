// Command-line front end: compute objects, run verification suites, emit
// reports. Text output by default, JSON with --format json; exit code 0 on
// success, 1 on a failed assertion/verification, 2 on usage errors.
#include "skein/json_io.hpp"
#include "skein/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace skein;

namespace {

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

Window default_window() {
    Window win{-20, 20, 0, 12, -8, 0};
    if (const char* env = std::getenv("SKEIN_WINDOW")) {
        int q0, q1, t1, a0;
        if (std::sscanf(env, "%d,%d,%d,%d", &q0, &q1, &t1, &a0) == 4) {
            win.q_min = q0;
            win.q_max = q1;
            win.t_max = t1;
            win.a_min = a0;
        }
    }
    return win;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(parts);
}

void emit_polynomial(const Options& opt, const Polynomial& p, const std::string& key) {
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j[key] = polynomial_to_json(p);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
}

int cmd_hdet(const Options& opt, const std::string& shape_json) {
    Shape s = shape_from_json(Json::parse(shape_json));
    int n = s.size();
    RegistryBuilder rb;
    rb.add_x_family("x", n);
    for (int i = 1; i <= n; ++i) rb.add("y" + std::to_string(i), wqt(-2, 2));
    auto reg = rb.build();
    Alphabet x = Alphabet::family(reg, "x", n);
    Alphabet y = Alphabet::family(reg, "y", n);
    emit_polynomial(opt, hdet(reg, s, x, y), "hdet");
    return 0;
}

int cmd_keydet(const Options& opt, int a, int b, int l, const std::string& lambda, bool raw) {
    Partition lam = parse_partition(lambda);
    IdealFrame f = make_ideal_frame(a, b);
    std::vector<Polynomial> yvals;
    for (int j = 1; j <= a + b; ++j) yvals.push_back(f.y(j, b));
    Polynomial d = key_det(f.reg, a, b, l, lam, f.X, yvals);
    if (!raw) d = d.divide_exact(vandermonde(f.reg, f.X1()) * vandermonde(f.reg, f.X2()));
    emit_polynomial(opt, d, raw ? "keydet" : "generator");
    return 0;
}

int cmd_schur(const Options& opt, const std::string& lambda, int n) {
    RegistryBuilder rb;
    rb.add_x_family("x", n);
    auto reg = rb.build();
    emit_polynomial(opt, schur(reg, parse_partition(lambda), Alphabet::family(reg, "x", n)),
                    "schur");
    return 0;
}

int cmd_ideal_gens(const Options& opt, int a, int b) {
    IdealFrame f = make_ideal_frame(a, b);
    auto gens = key_generators(f, b);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["ideal"]["a"] = a;
        j["ideal"]["b"] = b;
        Json list = Json::array();
        for (const auto& g : gens) list.push_back(polynomial_to_json(g));
        j["ideal"]["generators"] = std::move(list);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "key generators of the (" << a << "," << b << ") ideal, cardinality "
                  << gens.size() << ":\n";
        for (const auto& g : gens) std::cout << "  " << g.str() << "\n";
    }
    return 0;
}

int cmd_ideal_member(const Options& opt, int a, int b, const std::string& poly) {
    IdealFrame f = make_ideal_frame(a, b);
    GradedIdeal ideal(f, 0, key_generators(f, b));
    Polynomial p = parse_polynomial(f.reg, poly);
    auto cert = ideal.membership(p);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["poly"] = p.str();
        j["ok"] = cert.member;
        Json coeffs = Json::array();
        if (cert.member)
            for (const auto& c : cert.coefficients) coeffs.push_back(c.str());
        j["certificate"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (cert.member ? "member" : "not a member") << "\n";
        if (cert.member)
            for (size_t i = 0; i < cert.coefficients.size(); ++i)
                std::cout << "  c[" << i << "] = " << cert.coefficients[i].str() << "\n";
    }
    return cert.member ? 0 : 1;
}

int cmd_ideal_hilbert(const Options& opt, int a, int b, Window win) {
    IdealFrame f = make_ideal_frame(a, b);
    GradedIdeal ideal(f, 0, key_generators(f, b));
    auto h = ideal.hilbert_series(win);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["ideal"]["a"] = a;
        j["ideal"]["b"] = b;
        j["window"] = {{"qmin", win.q_min}, {"qmax", win.q_max}, {"tmax", win.t_max}};
        Json rows = Json::array();
        for (const auto& [w, c] : h.coefficients())
            rows.push_back({{"q", w.q_deg}, {"t", w.t_deg}, {"dim", c.get_str()}});
        j["hilbert"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graded dimensions of the (" << a << "," << b << ") ideal:\n";
        for (const auto& [w, c] : h.coefficients())
            std::cout << "  [" << w.str() << "] " << c.get_str() << "\n";
    }
    return 0;
}

int cmd_series_unknot(const Options& opt, int b, bool deformed, bool dual, Window win) {
    auto s = unknot_series(b, deformed, dual);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["factored"] = s.str();
        j["expansion"] = series_to_json(s.expand(win));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s.str() << "\n";
    }
    return 0;
}

int cmd_series_hopf(const Options& opt, int a, int b, bool bottom, Window win) {
    auto s = hopf_parity_series(a, b, bottom);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["factored"] = s.str();
        j["expansion"] = series_to_json(s.expand(win));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s.str() << "\n";
    }
    return 0;
}

int cmd_series_compare(const Options& opt, int a, int b, Window win) {
    IdealFrame f = make_ideal_frame(a, b);
    GradedIdeal ideal(f, 0, key_generators(f, b));
    auto hilb = ideal.hilbert_series(win);
    auto hopf = hopf_parity_series(a, b, true) * deformation_factor(a) * deformation_factor(b);
    auto cmp = compare_series(hilb, hopf.expand(win), true);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["equal"] = cmp.equal;
        j["shift"] = cmp.shift.str();
        j["detail"] = cmp.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (cmp.equal ? "equal" : "different") << " (shift " << cmp.shift.str() << ")"
                  << (cmp.detail.empty() ? "" : " " + cmp.detail) << "\n";
    }
    return cmp.equal ? 0 : 1;
}

int cmd_coords_map(const Options& opt, const std::string& from, const std::string& to, int a,
                   int b) {
    auto print_map = [&](const SubstitutionMap& s, const RegistryPtr& reg) {
        if (opt.json()) {
            Json j;
            j["schema"] = 1;
            Json images = Json::object();
            for (const auto& [v, img] : s.images()) images[reg->name(v)] = img.str();
            j["images"] = std::move(images);
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& [v, img] : s.images())
                std::cout << reg->name(v) << " -> " << img.str() << "\n";
        }
    };
    if (from == "vbar" || to == "vbar" || from == "pi") {
        TwoStrandFrame f = make_two_strand_frame(a, b, true);
        print_map(reduction_pi(f), f.reg);
        return 0;
    }
    StrandFrame f = make_strand_frame(a);
    std::map<std::pair<std::string, std::string>, SubstitutionMap (*)(const StrandFrame&)> table{
        {{"u", "v"}, u_to_v},     {{"v", "u"}, v_to_u},         {{"y", "v"}, y_to_v},
        {{"y", "u"}, y_to_u},     {{"vdot", "v"}, vdot_to_v},   {{"v", "vdot"}, v_to_vdot},
        {{"y", "interp"}, y_interpolation},
    };
    auto it = table.find({from, to});
    if (it == table.end()) {
        std::cerr << "unsupported map " << from << " -> " << to << "\n";
        return 2;
    }
    print_map(it->second(f), f.reg);
    return 0;
}

int cmd_koszul_build(const Options& opt, int b) {
    KoszulFrame f = make_koszul_frame(b);
    CurvedComplex c = build_curved_koszul(f);
    if (opt.json()) {
        std::cout << curved_complex_to_json(c).dump(2) << "\n";
    } else {
        std::cout << "curved koszul complex on " << b << " odd generators\n";
        std::cout << "curvature: " << c.curvature.str() << "\n";
        std::cout << "square check: " << (c.verify_square() ? "ok" : "FAILED") << "\n";
    }
    return c.verify_square() ? 0 : 1;
}

int cmd_koszul_contract(const Options& opt, int b, const std::string& invert) {
    KoszulFrame f = make_koszul_frame(b);
    CurvedComplex c = build_curved_koszul(f);
    int unit = f.reg->find(invert);
    if (unit < 0) {
        std::cerr << "unknown parameter " << invert << "\n";
        return 2;
    }
    // generator index from the parameter name (vbK pairs with xi_K)
    int gen = 0;
    for (int i = 1; i <= b; ++i)
        if (f.Vbar.vars[size_t(i - 1)] == unit) gen = i;
    if (gen == 0) {
        std::cerr << invert << " is not a deformation parameter of the complex\n";
        return 2;
    }
    auto res = contract_if_unit(c, gen, unit);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["ok"] = res.ok;
        j["detail"] = res.reason;
        j["denominator_power"] = res.denominator_power;
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.ok)
            std::cout << "contractible: homotopy verified exactly (denominator " << invert << "^"
                      << res.denominator_power << ")\n";
        else
            std::cout << "not contractible: " << res.reason << "\n";
    }
    return res.ok ? 0 : 1;
}

int cmd_digon(const Options& opt, int a, int b, Window win) {
    auto rep = verify::detail::check_digon(a, b, win);
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        j["ok"] = rep.ok;
        j["detail"] = rep.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.ok ? "exact" : "FAILED") << ": " << rep.detail << "\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    auto names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite " << suite << "\n";
        return 2;
    }
    auto results = verify::run_suite(suite);
    bool all = true;
    if (opt.json()) {
        Json j;
        j["schema"] = 1;
        Json rows = Json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            rows.push_back({{"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
        }
        j["checks"] = std::move(rows);
        j["pass"] = all;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            all = all && r.pass;
            std::printf("%-42s %s (%.2fs)%s%s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                        r.seconds, r.detail.empty() ? "" : " ", r.detail.c_str());
        }
        std::printf("suite %s: %s\n", suite.c_str(), all ? "PASS" : "FAIL");
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational algebra for deformed link-homology coefficients"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    Window win = default_window();
    int a = 1, b = 1, l = 0, n = 2;
    std::string lambda, shape_json, poly, from, to, suite, invert = "vb1";
    bool deformed = false, dual = false, bottom = false, raw = false;

    auto add_window = [&win](CLI::App* c) {
        c->add_option("--qmin", win.q_min, "window: minimal q-degree");
        c->add_option("--qmax", win.q_max, "window: maximal q-degree");
        c->add_option("--tmax", win.t_max, "window: maximal t-degree");
    };

    auto* hdet_cmd = app.add_subcommand("hdet", "haiman determinant of a shape");
    hdet_cmd->add_option("--shape", shape_json, "cells as json, e.g. [[2,0],[1,0],[0,0],[0,1]]")
        ->required();

    auto* keydet_cmd = app.add_subcommand("keydet", "key-shape determinant");
    keydet_cmd->add_option("--a", a)->required();
    keydet_cmd->add_option("--b", b)->required();
    keydet_cmd->add_option("--l", l)->required();
    keydet_cmd->add_option("--lambda", lambda, "partition, e.g. 2,1");
    keydet_cmd->add_flag("--raw", raw, "print the determinant before dividing by the vandermondes");

    auto* schur_cmd = app.add_subcommand("schur", "schur polynomial");
    schur_cmd->add_option("--lambda", lambda)->required();
    schur_cmd->add_option("--n", n, "alphabet size")->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "graded ideal computations");
    ideal_cmd->require_subcommand(1);
    auto* gens_cmd = ideal_cmd->add_subcommand("gens", "key generators");
    auto* member_cmd = ideal_cmd->add_subcommand("member", "membership with certificate");
    auto* hilbert_cmd = ideal_cmd->add_subcommand("hilbert", "graded dimensions");
    for (auto* c : {gens_cmd, member_cmd, hilbert_cmd}) {
        c->add_option("--a", a)->required();
        c->add_option("--b", b)->required();
    }
    member_cmd->add_option("--poly", poly, "polynomial in the frame variables")->required();
    add_window(hilbert_cmd);

    auto* series_cmd = app.add_subcommand("series", "symbolic graded series");
    series_cmd->require_subcommand(1);
    auto* unknot_cmd = series_cmd->add_subcommand("unknot", "colored unknot series");
    unknot_cmd->add_option("--b", b)->required();
    unknot_cmd->add_flag("--deformed", deformed);
    unknot_cmd->add_flag("--dual", dual);
    add_window(unknot_cmd);
    auto* hopf_cmd = series_cmd->add_subcommand("hopf", "hopf parity series");
    hopf_cmd->add_option("--a", a)->required();
    hopf_cmd->add_option("--b", b)->required();
    hopf_cmd->add_flag("--bottom", bottom, "extract the a^0 part");
    add_window(hopf_cmd);
    auto* compare_cmd = series_cmd->add_subcommand("compare", "ideal hilbert vs parity series");
    compare_cmd->add_option("--a", a)->required();
    compare_cmd->add_option("--b", b)->required();
    add_window(compare_cmd);

    auto* coords_cmd = app.add_subcommand("coords", "coordinate-change maps");
    auto* map_cmd = coords_cmd->add_subcommand("map", "print a substitution");
    map_cmd->add_option("--from", from)->required();
    map_cmd->add_option("--to", to)->required();
    map_cmd->add_option("--a", a)->required();
    map_cmd->add_option("--b", b);

    auto* koszul_cmd = app.add_subcommand("koszul", "curved koszul complexes");
    koszul_cmd->require_subcommand(1);
    auto* build_cmd = koszul_cmd->add_subcommand("build", "build and check the complex");
    build_cmd->add_option("--b", b)->required();
    auto* contract_cmd = koszul_cmd->add_subcommand("contract", "contract with an inverted unit");
    contract_cmd->add_option("--b", b)->required();
    contract_cmd->add_option("--invert", invert, "parameter to invert, e.g. vb1");

    auto* digon_cmd = app.add_subcommand("digon", "digon complex exactness report");
    digon_cmd->add_option("--a", a)->required();
    digon_cmd->add_option("--b", b)->required();
    add_window(digon_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "symfun|frobdem|coords|koszul|keylemma|ideals|series|all")
        ->required();

    // let --format appear after the subcommand as well
    auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
        for (auto* sub : node->get_subcommands({})) {
            sub->fallthrough();
            self(sub, self);
        }
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // the two-strand machinery assumes a >= b; the colors are symmetric, so
    // normalize and say so
    if (a < b &&
        (keydet_cmd->parsed() || ideal_cmd->parsed() || compare_cmd->parsed() ||
         digon_cmd->parsed())) {
        std::cerr << "note: swapping colors to (" << b << "," << a << ")\n";
        std::swap(a, b);
    }

    try {
        if (hdet_cmd->parsed()) return cmd_hdet(opt, shape_json);
        if (keydet_cmd->parsed()) return cmd_keydet(opt, a, b, l, lambda, raw);
        if (schur_cmd->parsed()) return cmd_schur(opt, lambda, n);
        if (gens_cmd->parsed()) return cmd_ideal_gens(opt, a, b);
        if (member_cmd->parsed()) return cmd_ideal_member(opt, a, b, poly);
        if (hilbert_cmd->parsed()) return cmd_ideal_hilbert(opt, a, b, win);
        if (unknot_cmd->parsed()) return cmd_series_unknot(opt, b, deformed, dual, win);
        if (hopf_cmd->parsed()) return cmd_series_hopf(opt, a, b, bottom, win);
        if (compare_cmd->parsed()) return cmd_series_compare(opt, a, b, win);
        if (map_cmd->parsed()) return cmd_coords_map(opt, from, to, a, b);
        if (build_cmd->parsed()) return cmd_koszul_build(opt, b);
        if (contract_cmd->parsed()) return cmd_koszul_contract(opt, b, invert);
        if (digon_cmd->parsed()) return cmd_digon(opt, a, b, win);
        if (verify_cmd->parsed()) return cmd_verify(opt, suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
