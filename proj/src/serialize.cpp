#include "ncres/serialize.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace ncres {

using ordered_json = nlohmann::ordered_json;

std::string algebra_to_json(const QuiverAlgebra& alg) {
    const Quiver& q = alg.quiver();
    ordered_json j;
    j["name"] = alg.name;
    j["vertices"] = q.num_vertices();
    ordered_json arrows = ordered_json::array();
    for (const Arrow& a : q.arrows()) {
        ordered_json ja;
        ja["name"] = a.name;
        ja["tail"] = a.tail;
        ja["head"] = a.head;
        if (alg.impression && alg.impression->is_thin())
            ja["label"] = alg.impression->label(a.id).str();
        arrows.push_back(ja);
    }
    j["arrows"] = arrows;
    ordered_json rels = ordered_json::array();
    for (const Relation& r : alg.relations) {
        ordered_json jr = ordered_json::array();
        for (const auto& t : r.terms) {
            ordered_json jt;
            jt["coef"] = t.coef.str();
            ordered_json path = ordered_json::array();
            // composition order: leftmost name applied last
            const auto& ids = t.path.arrows();
            for (auto it = ids.rbegin(); it != ids.rend(); ++it)
                path.push_back(q.arrow(*it).name);
            jt["path"] = path;
            if (t.path.is_trivial()) jt["vertex"] = t.path.head();
            jr.push_back(jt);
        }
        rels.push_back(jr);
    }
    j["relations"] = rels;
    j["dimension_vector"] = alg.expected_dimension_vector;
    if (alg.impression) {
        ordered_json ji;
        ji["b_vars"] = alg.impression->b_vars;
        ji["vertex_ranks"] = alg.impression->vertex_ranks;
        j["impression"] = ji;
    }
    return j.dump(2);
}

std::shared_ptr<QuiverAlgebra> algebra_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    auto alg = std::make_shared<QuiverAlgebra>();
    alg->name = j.value("name", "");
    alg->quiver_ptr = std::make_shared<Quiver>(j.at("vertices").get<int>());
    Quiver& q = *alg->quiver_ptr;
    std::vector<std::string> labels;
    bool has_labels = true;
    for (const auto& ja : j.at("arrows")) {
        q.add_arrow(ja.at("tail").get<int>(), ja.at("head").get<int>(),
                    ja.at("name").get<std::string>());
        if (ja.contains("label")) labels.push_back(ja.at("label").get<std::string>());
        else has_labels = false;
    }
    for (const auto& jr : j.at("relations")) {
        Relation r;
        for (const auto& jt : jr) {
            std::vector<std::string> names;
            for (const auto& s : jt.at("path")) names.push_back(s.get<std::string>());
            Path p = names.empty() ? Path(&q, jt.at("vertex").get<int>())
                                   : Path::from_names(q, names);
            r.terms.push_back({Rational::parse(jt.at("coef").get<std::string>()), p});
        }
        r.validate();
        alg->relations.push_back(std::move(r));
    }
    alg->expected_dimension_vector =
        j.at("dimension_vector").get<std::vector<int>>();
    if (j.contains("impression") && has_labels) {
        Impression imp;
        imp.b_vars = j.at("impression").at("b_vars").get<std::vector<std::string>>();
        imp.vertex_ranks =
            j.at("impression").at("vertex_ranks").get<std::vector<int>>();
        // thin labels parsed back as single variables or the constant 1
        for (size_t a = 0; a < labels.size(); ++a) {
            MatP m(1, 1);
            const std::string& s = labels[a];
            if (s == "1") m(0, 0) = Poly(Rational(1));
            else m(0, 0) = Poly::var(s);
            imp.arrow_labels.push_back(std::move(m));
        }
        alg->impression = std::move(imp);
    }
    alg->validate();
    return alg;
}

namespace {

std::string dot_header(const std::string& name) {
    return "digraph \"" + name + "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
}

} // namespace

std::string quiver_to_dot(const Quiver& q, const std::string& name) {
    std::ostringstream os;
    os << dot_header(name);
    for (int v = 0; v < q.num_vertices(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const Arrow& a : q.arrows())
        os << "  v" << a.tail << " -> v" << a.head << " [label=\"" << a.name << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string subquiver_to_dot(const Subquiver& s, const std::string& name) {
    const Quiver& q = *s.quiver();
    std::ostringstream os;
    os << dot_header(name);
    for (int v = 0; v < q.num_vertices(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const Arrow& a : q.arrows()) {
        os << "  v" << a.tail << " -> v" << a.head << " [label=\"" << a.name << "\"";
        if (!s.contains(a.id)) os << ", style=dotted";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string chart_to_dot(const FamilyChart& chart, const std::string& coordinates) {
    const Quiver& q = chart.algebra->quiver();
    std::ostringstream os;
    os << dot_header(chart.name);
    os << "  label=\"" << chart.name;
    if (!coordinates.empty()) os << "  " << coordinates;
    os << "\";\n";
    for (int v = 0; v < q.num_vertices(); ++v) {
        os << "  v" << v << " [label=\"" << v << "\"";
        if (v == chart.bold_vertex) os << ", style=bold, peripheries=2";
        if (v == chart.sink) os << ", shape=doublecircle";
        os << "];\n";
    }
    // arrows on the generating paths are solid, other support arrows dashed,
    // deleted (zero) arrows dotted
    std::set<int> generating;
    for (const Path& p : chart.generating_paths)
        for (int a : p.arrows()) generating.insert(a);
    for (const Arrow& a : q.arrows()) {
        os << "  v" << a.tail << " -> v" << a.head << " [label=\"" << a.name;
        if (chart.thin) {
            const Poly& val = chart.sigma.mats[size_t(a.id)](0, 0);
            if (!val.is_zero() && !(val == Poly(Rational(1))))
                os << " = " << val.str();
        }
        os << "\"";
        if (chart.thin && chart.sigma.mats[size_t(a.id)](0, 0).is_zero())
            os << ", style=dotted";
        else if (!generating.empty() && !generating.count(a.id))
            os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ncres
