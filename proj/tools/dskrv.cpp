// Command-line front end: compute double shuffle bases, map them to the
// derivation side, and run the exact verification suites.
//
// Exit codes: 0 everything verified, 1 a mathematical check failed,
// 2 usage or input error.

#include "dskrv/dskrv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace dskrv;

constexpr int exit_verified = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string format = "text";
    std::string out;
};

void emit(const std::string& payload, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << payload;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

Poly load_poly(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) return poly_from_json(nlohmann::json::parse(text));
    return parse_poly_text(text);
}

int report_result(const CheckList& list, const Options& opt) {
    if (opt.format == "json") {
        emit(render_json(list).dump(2) + "\n", opt);
    } else {
        std::string text = render_text(list);
        text += list.all_pass() ? "overall: PASS\n" : "overall: FAIL\n";
        emit(text, opt);
    }
    return list.all_pass() ? exit_verified : exit_check_failed;
}

int cmd_ds_basis(int weight, const Options& opt) {
    const std::vector<DsElement> basis = ds_basis(weight);
    const BasisCertificate cert = certificate_for(weight, basis);
    const std::string payload = opt.format == "json"
                                    ? certificate_to_json(cert).dump(2) + "\n"
                                    : certificate_to_text(cert);
    if (!opt.out.empty()) {
        emit(payload, opt);
        std::cout << "weight " << weight << ": dimension " << basis.size() << "\n";
    } else {
        std::cout << payload;
    }
    return exit_verified;
}

int cmd_ds_check(const std::string& path, const Options& opt) {
    const std::string text = read_file(path);
    BasisCertificate cert;
    if (looks_like_json(text)) {
        cert = certificate_from_json(nlohmann::json::parse(text));
    } else {
        std::istringstream in(text);
        cert = parse_certificate_text(in);
    }
    CheckList list;
    list.title = "certificate check: " + path;
    for (const CertificateCheck& c : verify_certificate(cert))
        list.add(c.name, c.pass);
    return report_result(list, opt);
}

int cmd_krv_map(int weight, const Options& opt) {
    const std::vector<DsElement> basis = ds_basis(weight);
    if (opt.format == "json") {
        nlohmann::json elems = nlohmann::json::array();
        for (const DsElement& e : basis) {
            const KrvCandidate k = ds_to_krv(e);
            elems.push_back(
                {{"f", poly_to_json(e.poly)},
                 {"g", poly_to_json(k.derivation.g)},
                 {"h", poly_to_json(k.derivation.h)},
                 {"special", k.special},
                 {"lambda", k.divergence_scalar ? rational_str(*k.divergence_scalar)
                                                : "none"}});
        }
        emit(nlohmann::json{{"weight", weight}, {"elements", std::move(elems)}}
                     .dump(2) +
                 "\n",
             opt);
        return exit_verified;
    }
    std::string out = "weight " + std::to_string(weight) + ": dimension " +
                      std::to_string(basis.size()) + "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const KrvCandidate k = ds_to_krv(basis[i]);
        out += "element " + std::to_string(i) + "\n";
        out += "lambda: " +
               (k.divergence_scalar ? rational_str(*k.divergence_scalar)
                                    : std::string("none")) +
               "\n";
        out += "f:\n" + poly_to_text(basis[i].poly);
        out += "g:\n" + poly_to_text(k.derivation.g);
        out += "h:\n" + poly_to_text(k.derivation.h);
    }
    emit(out, opt);
    return exit_verified;
}

int cmd_krv_check(int weight, const Options& opt) {
    const std::vector<DsElement> basis = ds_basis(weight);
    CheckList list;
    list.title = "krv membership, weight " + std::to_string(weight);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const KrvCandidate k = ds_to_krv(basis[i]);
        const std::string tag = "e" + std::to_string(i) + ".";
        list.add(tag + "special_derivation", k.special);
        list.add(tag + "divergence_on_trace_line", k.divergence_scalar.has_value(),
                 k.divergence_scalar ? "lambda = " + rational_str(*k.divergence_scalar)
                                     : "");
    }
    return report_result(list, opt);
}

std::vector<std::pair<int, int>> weight_pairs(const std::vector<int>& weights) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = i + 1; j < weights.size(); ++j)
            pairs.emplace_back(weights[i], weights[j]);
    return pairs;
}

int cmd_verify_all(int min_weight, int max_weight, int degree, const Options& opt) {
    CheckList combined;
    combined.title = "full verification, weights " + std::to_string(min_weight) +
                     ".." + std::to_string(max_weight);
    for (int w = min_weight; w <= max_weight; ++w)
        for (const Check& c : verify_chain_weight(w).checks)
            combined.add("w" + std::to_string(w) + "." + c.name, c.pass, c.detail);
    std::vector<int> tri;
    for (int w : {3, 5, 7})
        if (w >= min_weight && w <= max_weight) tri.push_back(w);
    for (const Check& c : verify_triangle(tri).checks)
        combined.add(c.name, c.pass, c.detail);
    if (min_weight <= 3 && max_weight >= 8)
        for (const Check& c : verify_morphism({{3, 5}}).checks)
            combined.add(c.name, c.pass, c.detail);
    for (const Check& c : verify_t_identity(degree).checks)
        combined.add(c.name, c.pass, c.detail);
    return report_result(combined, opt);
}

int run(int argc, char** argv) {
    CLI::App app{"exact double shuffle computations in the free Lie algebra "
                 "on two generators"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "write output to a file");

    int rc = exit_verified;

    // ds basis / ds check
    auto* ds = app.add_subcommand("ds", "double shuffle bases and certificates");
    ds->require_subcommand(1);
    {
        auto* basis = ds->add_subcommand("basis", "solve for a weight-graded basis");
        auto weight = std::make_shared<int>(3);
        basis->add_option("--weight", *weight, "weight (3..11)")
            ->required()
            ->check(CLI::Range(3, 11));
        basis->callback([&rc, weight, &opt] { rc = cmd_ds_basis(*weight, opt); });

        auto* check = ds->add_subcommand("check", "re-verify a basis certificate");
        auto path = std::make_shared<std::string>();
        check->add_option("file", *path, "certificate file")->required();
        check->callback([&rc, path, &opt] { rc = cmd_ds_check(*path, opt); });
    }

    // krv map / krv check
    auto* krv = app.add_subcommand("krv", "derivation-side images");
    krv->require_subcommand(1);
    {
        auto* map = krv->add_subcommand("map", "map the basis of a weight");
        auto weight = std::make_shared<int>(3);
        map->add_option("--weight", *weight, "weight (3..11)")
            ->required()
            ->check(CLI::Range(3, 11));
        map->callback([&rc, weight, &opt] { rc = cmd_krv_map(*weight, opt); });

        auto* check = krv->add_subcommand("check", "membership of the mapped basis");
        auto weight2 = std::make_shared<int>(3);
        check->add_option("--weight", *weight2, "weight (3..11)")
            ->required()
            ->check(CLI::Range(3, 11));
        check->callback([&rc, weight2, &opt] { rc = cmd_krv_check(*weight2, opt); });
    }

    // verify chain / triangle / morphism / all
    auto* verify = app.add_subcommand("verify", "exact verification suites");
    verify->require_subcommand(1);
    {
        auto* chain = verify->add_subcommand("chain", "identity chain for one weight");
        auto weight = std::make_shared<int>(0);
        auto in = std::make_shared<std::string>();
        chain->add_option("--weight", *weight, "weight (3..11)")
            ->check(CLI::Range(3, 11));
        chain->add_option("--in", *in, "run the chain on a certificate instead "
                                       "of a fresh solve");
        chain->callback([&rc, weight, in, &opt] {
            if (in->empty()) {
                if (*weight == 0)
                    throw CLI::RequiredError("--weight (or --in)");
                rc = report_result(verify_chain_weight(*weight), opt);
                return;
            }
            const std::string text = read_file(*in);
            BasisCertificate cert;
            if (looks_like_json(text)) {
                cert = certificate_from_json(nlohmann::json::parse(text));
            } else {
                std::istringstream is(text);
                cert = parse_certificate_text(is);
            }
            if (*weight != 0 && *weight != cert.weight)
                throw CLI::ValidationError("--weight disagrees with the certificate");
            rc = report_result(verify_chain_elements(cert.weight, cert.elements),
                               opt);
        });

        auto* triangle = verify->add_subcommand("triangle", "triangle commutativity");
        auto tw = std::make_shared<std::vector<int>>(std::vector<int>{3, 5, 7});
        triangle->add_option("--weights", *tw, "weights to check")
            ->delimiter(',')
            ->check(CLI::Range(3, 11));
        triangle->callback(
            [&rc, tw, &opt] { rc = report_result(verify_triangle(*tw), opt); });

        auto* morphism = verify->add_subcommand("morphism", "bracket intertwining");
        auto mw = std::make_shared<std::vector<int>>(std::vector<int>{3, 5});
        morphism->add_option("--weights", *mw, "weights paired up for the check")
            ->delimiter(',')
            ->check(CLI::Range(3, 11));
        morphism->callback([&rc, mw, &opt] {
            rc = report_result(verify_morphism(weight_pairs(*mw)), opt);
        });

        auto* all = verify->add_subcommand("all", "chain, triangle, morphism and "
                                                  "series identity");
        auto mn = std::make_shared<int>(3);
        auto mx = std::make_shared<int>(8);
        auto deg = std::make_shared<int>(12);
        all->add_option("--min", *mn, "lowest weight")->check(CLI::Range(3, 11));
        all->add_option("--max", *mx, "highest weight")->check(CLI::Range(3, 11));
        all->add_option("--degree", *deg, "series truncation degree")
            ->check(CLI::Range(2, 24));
        all->callback([&rc, mn, mx, deg, &opt] {
            if (*mn > *mx) throw CLI::ValidationError("--min exceeds --max");
            rc = cmd_verify_all(*mn, *mx, *deg, opt);
        });
    }

    // t identity
    auto* t = app.add_subcommand("t", "series elements over {a,b}");
    t->require_subcommand(1);
    {
        auto* identity = t->add_subcommand("identity", "t01 + t02 + t12 = 0");
        auto deg = std::make_shared<int>(12);
        identity->add_option("--degree", *deg, "truncation degree")
            ->check(CLI::Range(2, 24));
        identity->callback([&rc, deg, &opt] {
            rc = report_result(verify_t_identity(*deg), opt);
        });
    }

    // lyndon table export
    {
        auto* lyndon = app.add_subcommand("lyndon", "lyndon words of one degree "
                                                    "with their expansions");
        auto deg = std::make_shared<int>(3);
        lyndon->add_option("--degree", *deg, "degree (1..12)")
            ->required()
            ->check(CLI::Range(1, 12));
        lyndon->callback([deg, &opt] { emit(lyndon_table(*deg), opt); });
    }

    // poly utilities
    auto* poly = app.add_subcommand("poly", "polynomial file utilities");
    poly->require_subcommand(1);
    {
        auto emit_poly = [&opt](const Poly& p) {
            emit(opt.format == "json" ? poly_to_json(p).dump(2) + "\n"
                                      : poly_to_text(p),
                 opt);
        };

        auto* print = poly->add_subcommand("print", "parse and reprint");
        auto pfile = std::make_shared<std::string>();
        print->add_option("file", *pfile)->required();
        print->callback([emit_poly, pfile] { emit_poly(load_poly(*pfile)); });

        auto* br = poly->add_subcommand("bracket", "commutator of two files");
        auto ba = std::make_shared<std::string>();
        auto bb = std::make_shared<std::string>();
        br->add_option("a", *ba)->required();
        br->add_option("b", *bb)->required();
        br->callback([emit_poly, ba, bb] {
            emit_poly(lie_bracket(load_poly(*ba), load_poly(*bb)));
        });

        auto* po = poly->add_subcommand("poisson", "poisson bracket of two files");
        auto pa = std::make_shared<std::string>();
        auto pb = std::make_shared<std::string>();
        po->add_option("a", *pa)->required();
        po->add_option("b", *pb)->required();
        po->callback([emit_poly, pa, pb] {
            emit_poly(poisson_bracket(load_poly(*pa), load_poly(*pb)));
        });

        auto* sub = poly->add_subcommand("substitute",
                                         "apply x -> first image, y -> second");
        auto sf = std::make_shared<std::string>();
        auto sx = std::make_shared<std::string>();
        auto sy = std::make_shared<std::string>();
        sub->add_option("poly", *sf)->required();
        sub->add_option("image_x", *sx)->required();
        sub->add_option("image_y", *sy)->required();
        sub->callback([emit_poly, sf, sx, sy] {
            emit_poly(substitute(load_poly(*sf), load_poly(*sx), load_poly(*sy)));
        });
    }

    // top-level --format/--out remain usable after any subcommand
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dskrv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}
