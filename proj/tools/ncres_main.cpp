#include <CLI11.hpp>
#include <json.hpp>

#include "ncres/catalog.hpp"
#include "ncres/geometry.hpp"
#include "ncres/impression.hpp"
#include "ncres/serialize.hpp"
#include "ncres/verify.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace ncres;

namespace {

/// DOT diagrams of the case's family charts (the "dot" report format).
std::string case_dot(const std::string& case_id) {
    std::ostringstream os;
    if (case_id.rfind("cyclic", 0) == 0) {
        auto open = case_id.find('('), comma = case_id.find(',');
        int r = std::stoi(case_id.substr(open + 1, comma - open - 1));
        int b = std::stoi(case_id.substr(comma + 1));
        auto alg = cyclic_mckay_algebra(r, b);
        for (const auto& t : cyclic_supports(*alg, 0)) {
            FamilyChart chart = trivialize_support(*alg, t.q_m_tilde, 0);
            chart.generating_paths = {t.p_path, t.q_path};
            chart.bold_vertex = t.source;
            auto coords = family_coordinates(*alg, chart);
            os << chart_to_dot(chart,
                               "(" + coords[0].str() + ":" + coords[1].str() + ")");
        }
    } else if (case_id == "conifold") {
        auto alg = conifold_algebra();
        for (auto names : {std::vector<std::string>{"a1", "a2"},
                           std::vector<std::string>{"b1", "b2"}}) {
            FamilyChart chart = trivialize_support(
                *alg, Subquiver::from_names(alg->quiver(), names),
                names[0][0] == 'a' ? 1 : 0);
            os << chart_to_dot(chart, "");
        }
    } else if (case_id.rfind("su3", 0) == 0) {
        auto alg = abelian_su3_algebra(4);
        for (const auto& f : su3_figure_charts())
            os << subquiver_to_dot(Subquiver(&alg->quiver(), f.support_mask),
                                   "Q_" + f.name);
    } else {
        auto alg = catalog_build(case_id);
        os << quiver_to_dot(alg->quiver(), alg->name);
    }
    return os.str();
}

int emit_report(const VerificationReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.json() << "\n";
    else if (format == "dot")
        std::cout << case_dot(rep.case_id.substr(0, rep.case_id.find(' ')));
    else
        std::cout << rep.table();
    return rep.all_passed() ? 0 : 1;
}

void write_file(const std::filesystem::path& p, const std::string& text,
                std::vector<std::string>& written) {
    std::ofstream out(p);
    out << text;
    written.push_back(p.string());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative resolution toolkit"};
    app.require_subcommand(1);
    std::string format = "table";

    auto* cat = app.add_subcommand("catalog", "builtin algebras");
    auto* cat_list = cat->add_subcommand("list", "list builders");

    auto* verify = app.add_subcommand("verify", "verification workflows");
    verify->require_subcommand(1);
    int r = 7, b = 3, socle = 0, taut_n = 3;
    std::string kind = "D5";
    auto* vc = verify->add_subcommand("cyclic", "cyclic quotient surface");
    vc->add_option("--r", r, "group order")->required();
    vc->add_option("--b", b, "weight")->required();
    vc->add_option("--socle", socle, "socle vertex");
    vc->add_option("--format", format, "table|json");
    auto* vco = verify->add_subcommand("conifold", "conifold");
    vco->add_option("--format", format, "table|json");
    auto* vt = verify->add_subcommand("tautological", "tautological line bundle");
    vt->add_option("--n", taut_n, "number of a-arrows")->required();
    vt->add_option("--format", format, "table|json");
    auto* vp = verify->add_subcommand("preprojective", "D/E preprojective");
    vp->add_option("--kind", kind, "D4|D5|...|E6")->required();
    vp->add_option("--socle", socle, "socle vertex");
    vp->add_option("--format", format, "table|json");
    auto* vs = verify->add_subcommand("su3", "non-isolated su3 orbifold");
    vs->add_option("--format", format, "table|json");

    auto* oracle = app.add_subcommand("oracle", "commutative-geometry oracles");
    auto* hj = oracle->add_subcommand("hj", "Hirzebruch-Jung data");
    hj->add_option("--r", r, "group order")->required();
    hj->add_option("--b", b, "weight")->required();

    auto* exp = app.add_subcommand("export", "DOT/JSON artifacts for a case");
    std::string case_id, out_dir = ".";
    exp->add_option("--case", case_id, "conifold|cyclic-r-b|su3|D5|E6|...")->required();
    exp->add_option("--out", out_dir, "output directory");

    auto* fam = app.add_subcommand("family", "trivialize a support");
    std::string fam_algebra, fam_support;
    int fam_sink = 0;
    fam->add_option("--algebra", fam_algebra, "catalog name")->required();
    fam->add_option("--support", fam_support, "JSON array of arrow names")->required();
    fam->add_option("--sink", fam_sink, "socle vertex");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat_list->parsed()) {
            for (const auto& n : catalog_names()) std::cout << n << "\n";
            return 0;
        }
        if (vc->parsed()) return emit_report(verify_cyclic(r, b, socle), format);
        if (vco->parsed()) return emit_report(verify_conifold(), format);
        if (vt->parsed()) return emit_report(verify_tautological(taut_n), format);
        if (vp->parsed()) {
            PreprojectiveCase c;
            c.socle = socle;
            if (kind == "E6") c.is_e6 = true;
            else if (kind.size() >= 2 && kind[0] == 'D')
                c.n = std::stoi(kind.substr(1)) - 2;
            else throw std::invalid_argument("unknown kind " + kind);
            return emit_report(verify_preprojective(c), format);
        }
        if (vs->parsed()) return emit_report(verify_su3(), format);
        if (hj->parsed()) {
            auto d = hj_continued_fraction(r, b);
            std::cout << d.r << "/" << d.b << " = [";
            for (size_t i = 0; i < d.cf.size(); ++i)
                std::cout << (i ? "," : "") << d.cf[i];
            std::cout << "]  boundary points:";
            for (auto [n, m] : d.boundary) std::cout << " (" << n << "," << m << ")";
            std::cout << "\n";
            std::cout << "reconstruction: " << hj_evaluate(d.cf).str() << "\n";
            return 0;
        }
        if (exp->parsed()) {
            std::filesystem::create_directories(out_dir);
            std::vector<std::string> written;
            auto path = [&](const std::string& f) {
                return std::filesystem::path(out_dir) / f;
            };
            std::string algebra_name = case_id;
            if (case_id.rfind("cyclic-", 0) == 0) {
                auto dash = case_id.find('-', 7);
                algebra_name = "cyclic(" + case_id.substr(7, dash - 7) + "," +
                               case_id.substr(dash + 1) + ")";
            } else if (case_id == "su3") {
                algebra_name = "su3(4)";
            } else if (case_id.size() >= 2 && case_id[0] == 'D' &&
                       std::isdigit(static_cast<unsigned char>(case_id[1]))) {
                algebra_name = "D(" + case_id.substr(1) + ")";
            }
            auto alg = catalog_build(algebra_name);
            write_file(path(case_id + ".json"), algebra_to_json(*alg), written);
            write_file(path(case_id + ".dot"), quiver_to_dot(alg->quiver(), alg->name),
                       written);
            if (algebra_name.rfind("cyclic(", 0) == 0) {
                for (const auto& t : cyclic_supports(*alg, 0)) {
                    FamilyChart chart = trivialize_support(*alg, t.q_m_tilde, 0);
                    chart.generating_paths = {t.p_path, t.q_path};
                    chart.bold_vertex = t.source;
                    auto coords = family_coordinates(*alg, chart);
                    std::string label = "(" + coords[0].str() + ":" + coords[1].str() + ")";
                    write_file(path(case_id + "-Qt" + std::to_string(t.m) + ".dot"),
                               chart_to_dot(chart, label), written);
                }
            }
            for (const auto& f : written) std::cout << f << "\n";
            return 0;
        }
        if (fam->parsed()) {
            auto alg = catalog_build(fam_algebra);
            auto j = nlohmann::json::parse(fam_support);
            std::vector<std::string> names = j.get<std::vector<std::string>>();
            Subquiver s = Subquiver::from_names(alg->quiver(), names);
            FamilyChart chart = trivialize_support(*alg, s, fam_sink);
            std::cout << "parameters:";
            for (const auto& p : chart.params) std::cout << " " << p;
            std::cout << "\n";
            for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
                const Poly& v = chart.sigma.mats[size_t(a)](0, 0);
                if (!v.is_zero())
                    std::cout << "  " << alg->quiver().arrow(a).name << " = "
                              << v.str() << "\n";
            }
            auto verdict = solve_iso_parameters(chart);
            std::cout << "verdict: " << verdict.detail << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
