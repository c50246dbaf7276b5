#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "surg/cobordism.hpp"
#include "surg/collar.hpp"
#include "surg/covers.hpp"
#include "surg/decomposition.hpp"
#include "surg/homology.hpp"
#include "surg/reference_complexes.hpp"
#include "surg/st_classifier.hpp"
#include "surg/type_system.hpp"

using nlohmann::json;
using namespace surg;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

Complex read_complex_arg(const std::string& path) { return load_complex(path); }

std::string maybe_canonical(const Complex& c, bool canonical) {
    return canonical ? canonical_form(c).text(true) : c.text(true);
}

json graph_json(const MultiGraph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    if (auto name = catalog_match(g)) j["name"] = *name;
    return j;
}

int cmd_links(const std::string& file, bool as_json) {
    Complex c = read_complex_arg(file);
    json out = json::array();
    for (int v = 0; v < c.vertex_count(); ++v) {
        auto lk = c.link(v);
        if (as_json) {
            json entry = graph_json(lk);
            entry["vertex"] = v;
            entry["interior"] = c.is_interior_vertex(v);
            out.push_back(entry);
        } else {
            std::cout << "vertex " << v << (c.is_interior_vertex(v) ? "" : " (boundary)") << '\n'
                      << graph_text(lk);
        }
    }
    if (as_json) std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_check_type(const std::string& file, const std::string& type_name, bool strict,
                   bool as_json) {
    Complex c = read_complex_arg(file);
    TypeSpec spec = TypeSpec::by_name(type_name);
    auto verdict = check_type(c, spec, strict);
    bool pass = strict ? verdict.strict_pass : verdict.pass;
    if (as_json) {
        json j;
        j["type"] = spec.name;
        j["strict"] = strict;
        j["pass"] = pass;
        j["vertices"] = json::array();
        for (const auto& d : verdict.diagnostics)
            j["vertices"].push_back({{"vertex", d.vertex},
                                     {"interior", d.interior},
                                     {"link_allowed", d.link_allowed},
                                     {"girth", d.link_girth}});
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& d : verdict.diagnostics)
            std::cout << "vertex " << d.vertex << ": " << (d.interior ? "interior" : "boundary")
                      << " link " << (d.link_allowed ? "allowed" : "not allowed") << " girth "
                      << d.link_girth << '\n';
        std::cout << (pass ? "pass" : "fail") << '\n';
    }
    return pass ? kOk : kCheckFailed;
}

int cmd_curvature(const std::string& file, bool as_json) {
    Complex c = read_complex_arg(file);
    auto verdict = curvature_check(c);
    if (as_json) {
        json j;
        j["pass"] = verdict.pass;
        j["failures"] = json::array();
        for (const auto& d : verdict.failures)
            j["failures"].push_back({{"vertex", d.vertex}, {"girth", d.link_girth}});
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& d : verdict.failures)
            std::cout << "vertex " << d.vertex << ": girth " << d.link_girth << '\n';
        std::cout << (verdict.pass ? "pass" : "fail") << '\n';
    }
    return verdict.pass ? kOk : kCheckFailed;
}

int cmd_homology(const std::string& file, const std::string& coeff, bool as_json) {
    Complex c = read_complex_arg(file);
    Coefficients co = Coefficients::integers();
    if (coeff == "Q" || coeff == "q") co = Coefficients::rationals();
    else if (coeff != "Z" && coeff != "z") co = Coefficients::mod(std::stoll(coeff));
    auto res = homology(c, co);
    if (as_json) {
        json j;
        auto grp = [](const HomologyGroup& g) {
            return json{{"rank", g.rank}, {"torsion", g.torsion}};
        };
        j["H0"] = grp(res.h0);
        j["H1"] = grp(res.h1);
        j["H2"] = grp(res.h2);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << res.text();
    }
    return kOk;
}

int cmd_euler(const std::string& file, bool as_json) {
    Complex c = read_complex_arg(file);
    if (as_json) {
        json j;
        j["euler"] = c.euler_characteristic();
        j["vertices"] = c.vertex_count();
        j["edges"] = c.edge_count();
        j["faces"] = c.face_count();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << c.euler_characteristic() << '\n';
    }
    return kOk;
}

int cmd_covers(const std::string& file, const std::string& outdir, bool canonical, bool as_json) {
    Complex c = read_complex_arg(file);
    auto covers = enumerate_double_covers(c);
    if (as_json) {
        json j;
        j["classes"] = covers.size();
        j["dim"] = double_cover_class_dim(c);
        j["covers"] = json::array();
        for (const auto& dc : covers) {
            json entry;
            entry["complex"] = (canonical ? canonical_form(dc.cover) : dc.cover).text();
            json m = json::object();
            for (const auto& [e, img] : dc.projection) m[std::to_string(e)] = img;
            entry["projection"] = m;
            j["covers"].push_back(entry);
        }
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "classes " << covers.size() << " (dim " << double_cover_class_dim(c) << ")\n";
    int k = 0;
    for (const auto& dc : covers) {
        std::string name = "cover" + std::to_string(k++);
        if (!outdir.empty()) {
            std::ofstream out(outdir + "/" + name + ".cplx");
            out << maybe_canonical(dc.cover, canonical) << '\n';
            std::ofstream map(outdir + "/" + name + ".map");
            for (const auto& [e, img] : dc.projection) map << e << " -> " << img << '\n';
        } else {
            std::cout << name << ":\n" << maybe_canonical(dc.cover, canonical) << '\n';
            for (const auto& [e, img] : dc.projection) std::cout << e << " -> " << img << '\n';
        }
    }
    return kOk;
}

int cmd_verify_cover(const std::string& cover_file, const std::string& base_file,
                     const std::string& map_file, bool as_json) {
    Complex cover = read_complex_arg(cover_file);
    Complex base = read_complex_arg(base_file);
    std::map<int, int> edge_map;
    std::ifstream in(map_file);
    if (!in) throw std::runtime_error("cannot open " + map_file);
    std::string line;
    while (std::getline(in, line)) {
        auto arrow = line.find("->");
        if (arrow == std::string::npos) continue;
        int from = std::stoi(line.substr(0, arrow));
        int to = std::stoi(line.substr(arrow + 2));
        edge_map[from] = to;
    }
    auto verdict = verify_cover(cover, base, edge_map);
    if (as_json) {
        std::cout << json{{"pass", verdict.pass}, {"reason", verdict.reason}}.dump(2) << '\n';
    } else {
        std::cout << (verdict.pass ? "pass" : "fail: " + verdict.reason) << '\n';
    }
    return verdict.pass ? kOk : kCheckFailed;
}

int cmd_involution(const std::string& file, bool as_json) {
    Complex c = read_complex_arg(file);
    auto iso = find_free_involution(c);
    if (as_json) {
        json j;
        j["found"] = iso.has_value();
        if (iso) {
            json m = json::object();
            for (const auto& [e, img] : iso->edge_map) m[std::to_string(e)] = img;
            j["edge_map"] = m;
        }
        std::cout << j.dump(2) << '\n';
        return iso ? kOk : kCheckFailed;
    }
    if (!iso) {
        std::cout << "none\n";
        return kCheckFailed;
    }
    for (const auto& [e, img] : iso->edge_map) std::cout << e << " -> " << img << '\n';
    return kOk;
}

int cmd_collar(const std::string& file, int x, int y, bool as_json) {
    Complex c = read_complex_arg(file);
    if (x < 0 || y < 0) {
        if (c.vertex_count() != 2)
            throw std::runtime_error("collar: specify --x and --y unless the complex has two vertices");
        x = 0;
        y = 1;
    }
    Collar col = separating_collar(c, x, y);
    std::string kind = classify_nerve(col);
    if (as_json) {
        json j;
        j["faces"] = col.faces;
        j["crossing_edges"] = col.crossing_edges;
        j["nerve"] = graph_json(col.nerve.graph);
        j["colors"] = col.nerve.edge_colors;
        j["nerve_type"] = kind;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "faces:";
        for (int f : col.faces) std::cout << ' ' << f;
        std::cout << "\ncrossing:";
        for (int e : col.crossing_edges) std::cout << ' ' << e;
        std::cout << '\n' << graph_text(col.nerve.graph);
        std::cout << "color=";
        for (int cidx : col.nerve.edge_colors) std::cout << cidx;
        std::cout << "\nnerve: " << kind << '\n';
        if (kind == "unknown") std::cout << "canonical: " << canonical_graph_key(col.nerve.graph) << '\n';
    }
    return kOk;
}

int cmd_predicates(const std::string& file, int x, int y, bool as_json) {
    Complex c = read_complex_arg(file);
    if (x < 0 || y < 0) {
        x = 0;
        y = 1;
    }
    Collar col = separating_collar(c, x, y);
    auto p = collar_predicates(col);
    bool h = h_collar_certificate(col).has_value();
    if (as_json) {
        std::cout << json{{"thick", p.thick},
                          {"acylindrical", p.acylindrical},
                          {"boundary_injective", p.boundary_injective},
                          {"treeable", p.treeable},
                          {"spans_two", p.spans_two},
                          {"h_collar", h}}.dump(2)
                  << '\n';
        return kOk;
    }
    std::cout << "thick " << p.thick << "\nacylindrical " << p.acylindrical
              << "\nboundary_injective " << p.boundary_injective << "\ntreeable " << p.treeable
              << "\nspans_two " << p.spans_two << '\n';
    std::cout << "h_collar " << h << '\n';
    return kOk;
}

int cmd_surgery_flip(const std::string& file, const std::vector<std::string>& reps,
                     bool canonical) {
    Complex c = read_complex_arg(file);
    std::vector<std::tuple<int, int, SignedEdge>> replacements;
    for (const auto& r : reps) {
        int face, pos, edge;
        if (sscanf(r.c_str(), "%d:%d:%d", &face, &pos, &edge) != 3)
            throw std::runtime_error("bad replacement (want face:pos:edge): " + r);
        replacements.emplace_back(face, pos, edge);
    }
    Complex out = flip_surgery(c, replacements);
    std::cout << maybe_canonical(out, canonical) << '\n';
    return kOk;
}

int cmd_compose(const std::string& xf, const std::string& yf, bool require_unique,
                const std::string& matching_file, const std::string& out_file) {
    Cobordism x = load_cobordism(xf);
    Cobordism y = load_cobordism(yf);
    ComposeOptions opts;
    opts.require_unique = require_unique;
    if (!matching_file.empty()) {
        // explicit matching: `a -> b` edge lines between the two closures;
        // the face correspondence is derived from the transported words
        ComplexIso m;
        std::ifstream in(matching_file);
        if (!in) throw std::runtime_error("cannot open " + matching_file);
        std::string line;
        while (std::getline(in, line)) {
            auto arrow = line.find("->");
            if (arrow == std::string::npos) continue;
            m.edge_map[std::stoi(line.substr(0, arrow))] = std::stoi(line.substr(arrow + 2));
        }
        std::vector<char> used(y.left.faces.size(), 0);
        for (int fx : x.right.faces) {
            std::vector<SignedEdge> w;
            for (SignedEdge s : x.body.faces()[fx].word()) w.push_back(m.map_signed(s));
            FaceWord transported(w);
            int hit = -1;
            for (size_t j = 0; j < y.left.faces.size(); ++j) {
                if (used[j]) continue;
                if (transported.same_face(y.body.faces()[y.left.faces[j]])) {
                    hit = static_cast<int>(j);
                    break;
                }
            }
            if (hit < 0) throw std::runtime_error("matching file does not induce a face bijection");
            used[hit] = 1;
            m.face_map.push_back(hit);
        }
        opts.matching = m;
    }
    Cobordism z = compose(x, y, opts);
    if (out_file.empty()) std::cout << z.text();
    else {
        std::ofstream out(out_file);
        out << z.text();
    }
    return kOk;
}

int cmd_split(const std::string& file, const std::string& outdir) {
    Complex c = read_complex_arg(file);
    Collar col = separating_collar(c, 0, 1);
    auto [minus, plus] = split_along_collar(c, col);
    if (outdir.empty()) {
        std::cout << "# minus filling\n" << minus.text() << "# plus filling\n" << plus.text();
    } else {
        std::ofstream a(outdir + "/filling_minus.cob");
        a << minus.text();
        std::ofstream b(outdir + "/filling_plus.cob");
        b << plus.text();
    }
    return kOk;
}

std::pair<Cobordism, Cobordism> standard_blocks(const StClassification& cls) {
    const Cobordism* first = nullptr;
    const Cobordism* second = nullptr;
    for (const auto& cs : cls.cases) {
        if (cs.classes.empty()) continue;
        if (cs.shape == ComplementShape::RootPlusEdge) first = &cs.classes.front();
        if (cs.shape == ComplementShape::Segment5) second = &cs.classes.front();
    }
    if (!first || !second) throw std::runtime_error("classification did not produce both blocks");
    return {*first, *second};
}

std::pair<Cobordism, Cobordism> standard_fillings() {
    Complex xp = complex_xprime();
    Collar col = separating_collar(xp, 0, 1);
    return split_along_collar(xp, col);
}

OmegaSpec parse_omega(const std::string& seq, const std::string& shape, int base) {
    OmegaSpec spec;
    std::stringstream in(seq);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "3/2") spec.sequence.push_back(0);
        else if (tok == "2") spec.sequence.push_back(1);
        else throw std::runtime_error("omega entries must be 3/2 or 2");
    }
    if (shape == "segment") spec.shape = OmegaSpec::Segment;
    else if (shape == "circle") spec.shape = OmegaSpec::Circle;
    else throw std::runtime_error("shape must be segment or circle");
    spec.basepoint_index = base;
    return spec;
}

int cmd_omega(const std::string& seq, const std::string& shape, int base, bool canonical) {
    auto cls = classify_st();
    auto blocks = standard_blocks(cls);
    auto fillings = standard_fillings();
    auto spec = parse_omega(seq, shape, base);
    auto pc = build_omega(spec, blocks, fillings);
    std::cout << maybe_canonical(pc.complex, canonical) << '\n';
    std::cout << "# basepoint vertex " << pc.basepoint << '\n';
    return kOk;
}

int cmd_fibers(int n, const std::string& shape, bool as_json) {
    auto cls = classify_st();
    auto blocks = standard_blocks(cls);
    auto fillings = standard_fillings();
    OmegaSpec::Shape sh = shape == "circle" ? OmegaSpec::Circle : OmegaSpec::Segment;
    auto rep = orbit_map_fibers(n, sh, blocks, fillings);
    if (as_json) {
        json j;
        j["total"] = rep.total;
        j["max_fiber"] = rep.max_fiber;
        j["reflection_pairs_only"] = rep.reflection_pairs_only;
        j["fibers"] = rep.fibers;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "total " << rep.total << " fibers " << rep.fibers.size() << " max "
                  << rep.max_fiber << " reflection_pairs_only " << rep.reflection_pairs_only
                  << '\n';
    }
    return kOk;
}

int cmd_iso(const std::string& af, const std::string& bf, bool as_json) {
    Complex a = read_complex_arg(af);
    Complex b = read_complex_arg(bf);
    auto iso = isomorphic(a, b);
    if (as_json) {
        json j;
        j["isomorphic"] = iso.has_value();
        if (iso) {
            json m = json::object();
            for (const auto& [e, img] : iso->edge_map) m[std::to_string(e)] = img;
            j["edge_map"] = m;
        }
        std::cout << j.dump(2) << '\n';
        return iso ? kOk : kCheckFailed;
    }
    if (!iso) {
        std::cout << "none\n";
        return kCheckFailed;
    }
    for (const auto& [e, img] : iso->edge_map) std::cout << e << " -> " << img << '\n';
    return kOk;
}

int cmd_classify_st(const std::string& outdir, bool as_json) {
    auto cls = classify_st();
    if (as_json) {
        json j;
        j["roots"] = cls.root_count;
        j["orbits"] = cls.orbits.size();
        j["classes"] = cls.classes.size();
        j["checkpoints_pass"] = cls.checkpoints_pass();
        j["cases"] = json::array();
        for (const auto& cs : cls.cases)
            j["cases"].push_back({{"shape", shape_name(cs.shape)},
                                  {"raw_partners", cs.raw_partner_candidates},
                                  {"partners", cs.partners.size()},
                                  {"raw_configurations", cs.raw_configurations},
                                  {"classes", cs.classes.size()},
                                  {"collar_types", cs.collar_types},
                                  {"self_dual", cs.self_dual}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << cls.report();
    }
    if (!outdir.empty()) {
        for (size_t i = 0; i < cls.classes.size(); ++i) {
            std::ofstream out(outdir + "/cobordism" + std::to_string(i) + ".cob");
            out << cls.classes[i].text();
        }
    }
    return cls.checkpoints_pass() ? kOk : kCheckFailed;
}

int cmd_st_enum(bool raw, bool as_json) {
    auto minimal = st_lemma_enumerate();
    if (as_json) {
        json j;
        j["minimal"] = json::array();
        for (const auto& g : minimal) j["minimal"].push_back(graph_json(g));
        if (raw) {
            auto r = st_lemma_enumerate_raw();
            j["two_vertices"] = json::array();
            for (const auto& g : r.two_vertices) j["two_vertices"].push_back(graph_json(g));
            j["three_vertices"] = json::array();
            for (const auto& g : r.three_vertices) j["three_vertices"].push_back(graph_json(g));
        }
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "# minimal thick nerves on 4 vertices\n";
    for (const auto& g : minimal) std::cout << graph_text(g) << '\n';
    if (raw) {
        auto r = st_lemma_enumerate_raw();
        std::cout << "# excluded cases: 2 vertices\n";
        for (const auto& g : r.two_vertices) std::cout << graph_text(g) << '\n';
        std::cout << "# excluded cases: 3 vertices\n";
        for (const auto& g : r.three_vertices) std::cout << graph_text(g) << '\n';
    }
    return kOk;
}

int cmd_weights(const std::string& file, bool as_json) {
    Complex c = read_complex_arg(file);
    auto rep = weight_equation_check(c);
    if (as_json) {
        json j;
        j["lhs"] = rep.lhs;
        j["rhs"] = rep.rhs;
        j["crossing_faces"] = rep.crossing_faces;
        j["pass"] = rep.pass;
        j["vertices"] = json::array();
        for (int v = 0; v < c.vertex_count(); ++v) {
            auto m = model_geometry(c, v);
            json slots = json::array();
            for (const auto& slot : m.boundary_edges)
                slots.push_back({{"edge", slot.edge}, {"face", slot.face}, {"weight", slot.weight}});
            j["vertices"].push_back({{"vertex", v},
                                     {"loops", m.loops.size()},
                                     {"half_edges", m.half_edges.size()},
                                     {"core_faces", m.core_faces.size()},
                                     {"boundary", slots}});
        }
        std::cout << j.dump(2) << '\n';
        return rep.pass ? kOk : kCheckFailed;
    }
    for (int v = 0; v < c.vertex_count(); ++v) {
        auto m = model_geometry(c, v);
        std::cout << "vertex " << v << ": loops " << m.loops.size() << " half " << m.half_edges.size()
                  << " core " << m.core_faces.size() << " boundary";
        for (const auto& slot : m.boundary_edges)
            std::cout << ' ' << slot.edge << "(w=" << slot.weight << ")";
        std::cout << '\n';
    }
    std::cout << "weight equation: lhs " << rep.lhs << " rhs " << rep.rhs << ' '
              << (rep.pass ? "pass" : "fail") << '\n';
    return rep.pass ? kOk : kCheckFailed;
}

int cmd_base_graph(const std::string& file, bool as_json) {
    Complex c = read_complex_arg(file);
    if (as_json) std::cout << graph_json(base_graph(c)).dump(2) << '\n';
    else std::cout << graph_text(base_graph(c));
    return kOk;
}

int cmd_model_group(const std::string& file, int vertex, bool as_json) {
    Complex c = read_complex_arg(file);
    auto p = model_group(c, vertex);
    if (as_json) {
        json j;
        j["generators"] = p.generators;
        j["relators"] = json::array();
        for (const auto& r : p.relators) j["relators"].push_back(r);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << p.text();
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial surgery on 2-complexes presented by face words"};
    app.require_subcommand(1);

    std::string file, file2, file3, type_name = "rank74", coeff = "Z", outdir, seq, shape = "segment";
    std::vector<std::string> reps;
    bool strict = false, as_json = false, canonical = false, raw = false, require_unique = false;
    int x = -1, y = -1, base = 0, n = 1, vertex = 0;

    auto* links = app.add_subcommand("links", "links at every vertex");
    links->add_option("complex", file)->required();
    links->add_flag("--json", as_json);

    auto* check = app.add_subcommand("check-type", "type membership of a complex");
    check->add_option("complex", file)->required();
    check->add_option("--type", type_name, "rank74, A2q2, rank158 or fake74");
    check->add_flag("--strict", strict);
    check->add_flag("--json", as_json);

    auto* curv = app.add_subcommand("curvature", "link girth condition");
    curv->add_option("complex", file)->required();
    curv->add_flag("--json", as_json);

    auto* hom = app.add_subcommand("homology", "cellular homology");
    hom->add_option("complex", file)->required();
    hom->add_option("--coeff", coeff, "Z, Q, or a prime p");
    hom->add_flag("--json", as_json);

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    euler->add_option("complex", file)->required();
    euler->add_flag("--json", as_json);

    auto* covers = app.add_subcommand("covers", "enumerate double covers");
    covers->add_option("complex", file)->required();
    covers->add_option("--out", outdir);
    covers->add_flag("--canonical", canonical);
    covers->add_flag("--json", as_json);

    auto* vc = app.add_subcommand("verify-cover", "check a degree-2 covering map");
    vc->add_option("cover", file)->required();
    vc->add_option("base", file2)->required();
    vc->add_option("map", file3)->required();
    vc->add_flag("--json", as_json);

    auto* inv = app.add_subcommand("involution", "search for a free involution");
    inv->add_option("complex", file)->required();
    inv->add_flag("--json", as_json);

    auto* collar = app.add_subcommand("collar", "separating collar and its nerve");
    collar->add_option("complex", file)->required();
    collar->add_option("--x", x);
    collar->add_option("--y", y);
    collar->add_flag("--json", as_json);

    auto* preds = app.add_subcommand("predicates", "collar predicate flags");
    preds->add_option("complex", file)->required();
    preds->add_option("--x", x);
    preds->add_option("--y", y);
    preds->add_flag("--json", as_json);

    auto* flip = app.add_subcommand("surgery-flip", "replace face-word entries");
    flip->add_option("complex", file)->required();
    flip->add_option("--replace", reps, "face:pos:signed_edge")->required();
    flip->add_flag("--canonical", canonical);

    auto* comp = app.add_subcommand("compose", "compose two cobordisms");
    comp->add_option("x", file)->required();
    comp->add_option("y", file2)->required();
    comp->add_flag("--require-unique", require_unique);
    comp->add_option("--matching", file3, "explicit closure matching (edge lines `a -> b`)");
    comp->add_option("--out", outdir);

    auto* split = app.add_subcommand("split", "split a two-vertex complex into fillings");
    split->add_option("complex", file)->required();
    split->add_option("--out", outdir);

    auto* omega = app.add_subcommand("omega", "build a parametrized complex");
    omega->add_option("--seq", seq, "comma-separated word over {3/2, 2}")->required();
    omega->add_option("--shape", shape, "segment or circle");
    omega->add_option("--base", base);
    omega->add_flag("--canonical", canonical);

    auto* fibers = app.add_subcommand("fibers", "pointed-isomorphism fibers");
    fibers->add_option("--n", n)->required();
    fibers->add_option("--shape", shape);
    fibers->add_flag("--json", as_json);

    auto* iso = app.add_subcommand("iso", "complex isomorphism");
    iso->add_option("a", file)->required();
    iso->add_option("b", file2)->required();
    iso->add_flag("--json", as_json);

    auto* classify = app.add_subcommand("classify-st", "the one-vertex non-filling classification");
    classify->add_option("--out", outdir);
    classify->add_flag("--json", as_json);

    auto* stenum = app.add_subcommand("st-enum", "minimal thick nerve enumeration");
    stenum->add_flag("--raw", raw);
    stenum->add_flag("--json", as_json);

    auto* weights = app.add_subcommand("weights", "model geometries and the weight equation");
    weights->add_option("complex", file)->required();
    weights->add_flag("--json", as_json);

    auto* bg = app.add_subcommand("base-graph", "stack base graph");
    bg->add_option("complex", file)->required();
    bg->add_flag("--json", as_json);

    auto* mg = app.add_subcommand("model-group", "raw model group presentation");
    mg->add_option("complex", file)->required();
    mg->add_option("--vertex", vertex);
    mg->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (links->parsed()) return cmd_links(file, as_json);
        if (check->parsed()) return cmd_check_type(file, type_name, strict, as_json);
        if (curv->parsed()) return cmd_curvature(file, as_json);
        if (hom->parsed()) return cmd_homology(file, coeff, as_json);
        if (euler->parsed()) return cmd_euler(file, as_json);
        if (covers->parsed()) return cmd_covers(file, outdir, canonical, as_json);
        if (vc->parsed()) return cmd_verify_cover(file, file2, file3, as_json);
        if (inv->parsed()) return cmd_involution(file, as_json);
        if (collar->parsed()) return cmd_collar(file, x, y, as_json);
        if (preds->parsed()) return cmd_predicates(file, x, y, as_json);
        if (flip->parsed()) return cmd_surgery_flip(file, reps, canonical);
        if (comp->parsed()) return cmd_compose(file, file2, require_unique, file3, outdir);
        if (split->parsed()) return cmd_split(file, outdir);
        if (omega->parsed()) return cmd_omega(seq, shape, base, canonical);
        if (fibers->parsed()) return cmd_fibers(n, shape, as_json);
        if (iso->parsed()) return cmd_iso(file, file2, as_json);
        if (classify->parsed()) return cmd_classify_st(outdir, as_json);
        if (stenum->parsed()) return cmd_st_enum(raw, as_json);
        if (weights->parsed()) return cmd_weights(file, as_json);
        if (bg->parsed()) return cmd_base_graph(file, as_json);
        if (mg->parsed()) return cmd_model_group(file, vertex, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
