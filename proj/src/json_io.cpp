#include "dyb/json_io.hpp"

#include <fstream>
#include <unordered_map>

namespace dyb {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error("malformed JSON: " + what);
}

}  // namespace

Json quasigroup_to_json(const Quasigroup& q) {
    Json j;
    j["n"] = q.order();
    j["table"] = q.table();
    return j;
}

Quasigroup quasigroup_from_json(const Json& j) {
    require(j.contains("n") && j.contains("table"), "quasigroup needs n and table");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    require(static_cast<int>(table.size()) == j.at("n").get<int>(), "n does not match table");
    return Quasigroup::validate(table);
}

Json sset_to_json(const FiniteSSet& s) {
    Json j;
    j["n"] = s.size();
    j["maps"] = s.rows();
    return j;
}

FiniteSSet sset_from_json(const Json& j) {
    if (j.contains("modulus")) {
        require(j.contains("dim") && j.contains("r"), "affine s-set needs modulus, dim, r");
        return FiniteSSet::affine(j.at("modulus").get<long long>(), j.at("dim").get<int>(),
                                  j.at("r").get<long long>());
    }
    require(j.contains("n") && j.contains("maps"), "s-set needs n and maps");
    auto rows = j.at("maps").get<std::vector<Perm>>();
    require(static_cast<int>(rows.size()) == j.at("n").get<int>(), "n does not match maps");
    return FiniteSSet::validate(std::move(rows));
}

Word word_from_json(const Json& j) {
    require(j.is_array(), "word must be an integer array");
    return Word(j.get<std::vector<long long>>());
}

Json word_to_json(const Word& w) { return Json(w.exps); }

Json ternary_to_json(const TernaryOp& t) {
    int n = t.size();
    Json j;
    j["n"] = n;
    Json tbl = Json::array();
    for (int x = 0; x < n; ++x) {
        Json jx = Json::array();
        for (int y = 0; y < n; ++y) {
            Json jy = Json::array();
            for (int z = 0; z < n; ++z) jy.push_back(t.eval(x, y, z));
            jx.push_back(std::move(jy));
        }
        tbl.push_back(std::move(jx));
    }
    j["table"] = std::move(tbl);
    if (t.affine()) {
        const AffineCoeffs& a = *t.affine();
        j["affine"] = Json{{"modulus", a.modulus},
                           {"dim", a.dim},
                           {"alpha", a.alpha},
                           {"beta", a.beta},
                           {"gamma", a.gamma}};
    }
    return j;
}

TernaryOp ternary_from_json(const Json& j) {
    std::optional<AffineCoeffs> affine;
    if (j.contains("affine")) {
        const Json& a = j.at("affine");
        affine = AffineCoeffs{a.at("modulus").get<long long>(), a.at("dim").get<int>(),
                              a.at("alpha").get<long long>(), a.at("beta").get<long long>(),
                              a.at("gamma").get<long long>()};
    }
    if (!j.contains("table")) {
        require(affine.has_value(), "ternary operation needs a table or an affine form");
        return TernaryOp::from_affine(*affine);
    }
    require(j.contains("n"), "ternary operation needs n");
    int n = j.at("n").get<int>();
    std::vector<std::int32_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                 static_cast<std::size_t>(n));
    const Json& tbl = j.at("table");
    require(static_cast<int>(tbl.size()) == n, "table size does not match n");
    for (auto& jx : tbl) {
        require(static_cast<int>(jx.size()) == n, "table size does not match n");
        for (auto& jy : jx) {
            require(static_cast<int>(jy.size()) == n, "table size does not match n");
            for (auto& v : jy) flat.push_back(v.get<std::int32_t>());
        }
    }
    TernaryOp t = TernaryOp::from_table(n, std::move(flat));
    if (affine) {
        TernaryOp closed = TernaryOp::from_affine(*affine);
        require(closed.table() == t.table(), "affine form disagrees with table");
        return closed;
    }
    return t;
}

Json sigma_to_json(const DynamicalMap& m, bool include_quasigroup) {
    int n = m.size();
    Json j;
    j["n"] = n;
    Json tbl = Json::array();
    for (int l = 0; l < n; ++l) {
        Json jl = Json::array();
        for (int u = 0; u < n; ++u) {
            Json ju = Json::array();
            for (int v = 0; v < n; ++v) {
                auto [a, c] = m.apply(l, u, v);
                ju.push_back(Json::array({a, c}));
            }
            jl.push_back(std::move(ju));
        }
        tbl.push_back(std::move(jl));
    }
    j["sigma"] = std::move(tbl);
    if (include_quasigroup) j["quasigroup"] = quasigroup_to_json(m.quasigroup());
    return j;
}

DynamicalMap sigma_from_json(const Json& j, std::optional<Quasigroup> quasigroup) {
    require(j.contains("n") && j.contains("sigma"), "sigma needs n and sigma");
    int n = j.at("n").get<int>();
    Quasigroup q = quasigroup   ? std::move(*quasigroup)
                   : j.contains("quasigroup")
                       ? quasigroup_from_json(j.at("quasigroup"))
                       : throw Error("sigma file has no quasigroup; pass one explicitly");
    require(q.order() == n, "quasigroup order does not match sigma");

    std::vector<std::int32_t> a_tab, c_tab;
    a_tab.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                  static_cast<std::size_t>(n));
    c_tab.reserve(a_tab.capacity());
    const Json& tbl = j.at("sigma");
    require(static_cast<int>(tbl.size()) == n, "sigma table size does not match n");
    for (auto& jl : tbl) {
        require(static_cast<int>(jl.size()) == n, "sigma table size does not match n");
        for (auto& ju : jl) {
            require(static_cast<int>(ju.size()) == n, "sigma table size does not match n");
            for (auto& pair : ju) {
                require(pair.is_array() && pair.size() == 2, "sigma entries are [a, c] pairs");
                a_tab.push_back(pair.at(0).get<std::int32_t>());
                c_tab.push_back(pair.at(1).get<std::int32_t>());
            }
        }
    }
    return DynamicalMap::from_table(std::move(q), std::move(a_tab), std::move(c_tab));
}

Json bijection_to_json(const Bijection& b) { return Json(b.pi); }

Bijection bijection_from_json(const Json& j) {
    require(j.is_array(), "bijection must be an integer array");
    return Bijection::from_perm(j.get<Perm>());
}

namespace {

std::string coeff_str(const PresTerm& t) {
    if (t.den == 1) return std::to_string(t.num);
    return std::to_string(t.num) + "/" + std::to_string(t.den);
}

PresTerm parse_term(const Json& j, const std::unordered_map<std::string, int>& gen_of_name) {
    PresTerm t;
    std::string c = j.at("coeff").get<std::string>();
    auto slash = c.find('/');
    t.num = std::stoll(c.substr(0, slash));
    t.den = slash == std::string::npos ? 1 : std::stoll(c.substr(slash + 1));
    for (auto& w : j.at("word")) {
        std::string name = w.get<std::string>();
        auto it = gen_of_name.find(name);
        require(it != gen_of_name.end(), "unknown generator " + name);
        t.gens.push_back(it->second);
    }
    return t;
}

}  // namespace

Json presentation_to_json(const Presentation& p) {
    Json j;
    j["n"] = p.n;
    Json gens = Json::array();
    for (auto& g : p.generators) gens.push_back(g.name());
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (auto& r : p.relations) {
        Json jr;
        jr["family"] = r.family;
        Json terms = Json::array();
        for (auto& t : r.terms) {
            Json jt;
            jt["coeff"] = coeff_str(t);
            Json word = Json::array();
            for (int g : t.gens) word.push_back(p.generators[static_cast<std::size_t>(g)].name());
            jt["word"] = std::move(word);
            terms.push_back(std::move(jt));
        }
        jr["terms"] = std::move(terms);
        rels.push_back(std::move(jr));
    }
    j["relations"] = std::move(rels);
    return j;
}

Presentation presentation_from_json(const Json& j) {
    Presentation p;
    p.n = j.at("n").get<int>();
    for (auto& g : j.at("generators")) {
        std::string name = g.get<std::string>();
        auto open = name.find('(');
        auto comma = name.find(',');
        auto close = name.find(')');
        require(open != std::string::npos && comma != std::string::npos && close != std::string::npos,
                "bad generator name " + name);
        std::string kind = name.substr(0, open);
        GenId::Kind k = kind == "B"      ? GenId::Kind::B
                        : kind == "L"    ? GenId::Kind::L
                        : kind == "Linv" ? GenId::Kind::Linv
                                         : throw Error("bad generator kind " + kind);
        p.generators.push_back(GenId{k, std::stoi(name.substr(open + 1, comma - open - 1)),
                                     std::stoi(name.substr(comma + 1, close - comma - 1))});
    }
    std::unordered_map<std::string, int> gen_of_name;
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        gen_of_name[p.generators[g].name()] = static_cast<int>(g);
    for (auto& jr : j.at("relations")) {
        PresRelation r;
        r.family = jr.at("family").get<int>();
        for (auto& jt : jr.at("terms")) r.terms.push_back(parse_term(jt, gen_of_name));
        p.relations.push_back(std::move(r));
    }
    return p;
}

Json report_to_json(const Report& r) {
    Json results = Json::array();
    for (auto& part : r.parts) {
        Json jp;
        jp["check"] = part.check;
        jp["pass"] = part.pass;
        jp["witness"] = part.witness;
        results.push_back(std::move(jp));
    }
    Json j;
    j["pass"] = r.pass();
    j["results"] = std::move(results);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace dyb
