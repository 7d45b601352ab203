#include "obstr/io.hpp"

#include "obstr/errors.hpp"

#include <fstream>
#include <stdexcept>

namespace obstr {

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Rat q(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    q.canonicalize();
    return q;
}

const std::array<int, 3>& TensorFile::dims() const {
    if (tensor) return tensor->dims;
    if (decomposition) return decomposition->dims;
    throw std::invalid_argument("empty tensor file");
}

static Json entries_json(const SparseTensor3& t) {
    Json arr = Json::array();
    for (const auto& [idx, v] : t.entries) {
        Json e;
        e["idx"] = {idx[0], idx[1], idx[2]};
        e["num"] = v.get_num().get_str();
        e["den"] = v.get_den().get_str();
        arr.push_back(std::move(e));
    }
    return arr;
}

static Json vec_json(const RatVec& v) {
    Json arr = Json::array();
    for (const Rat& x : v) arr.push_back(rat_str(x));
    return arr;
}

static RatVec vec_parse(const Json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(rat_parse(x.get<std::string>()));
    return v;
}

Json tensor_to_json(const Rank1Decomposition& d, bool include_entries) {
    Json j;
    j["dims"] = {d.dims[0], d.dims[1], d.dims[2]};
    if (include_entries) j["entries"] = entries_json(assemble(d));
    Json terms = Json::array();
    for (const auto& tr : d.triples) {
        Json term;
        term["u"] = vec_json(tr[0]);
        term["v"] = vec_json(tr[1]);
        term["x"] = vec_json(tr[2]);
        terms.push_back(std::move(term));
    }
    j["decomposition"] = std::move(terms);
    return j;
}

Json tensor_to_json(const SparseTensor3& t) {
    Json j;
    j["dims"] = {t.dims[0], t.dims[1], t.dims[2]};
    j["entries"] = entries_json(t);
    return j;
}

TensorFile tensor_from_json(const Json& j) {
    TensorFile f;
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3)
        throw std::invalid_argument("tensor file needs dims[3]");
    std::array<int, 3> dims{j["dims"][0].get<int>(), j["dims"][1].get<int>(),
                            j["dims"][2].get<int>()};
    if (j.contains("entries")) {
        SparseTensor3 t;
        t.dims = dims;
        for (const auto& e : j["entries"]) {
            auto idx = e["idx"];
            Rat v(Int(e["num"].get<std::string>()), Int(e["den"].get<std::string>()));
            v.canonicalize();
            t.set(idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(), v);
        }
        f.tensor = std::move(t);
    }
    if (j.contains("decomposition")) {
        Rank1Decomposition d;
        d.dims = dims;
        for (const auto& term : j["decomposition"]) {
            std::array<RatVec, 3> tr{vec_parse(term["u"]), vec_parse(term["v"]),
                                     vec_parse(term["x"])};
            for (int k = 0; k < 3; ++k)
                if (static_cast<int>(tr[k].size()) != dims[k])
                    throw std::invalid_argument("decomposition vector length mismatch");
            d.triples.push_back(std::move(tr));
        }
        f.decomposition = std::move(d);
    }
    if (!f.tensor && !f.decomposition)
        throw std::invalid_argument("tensor file needs entries or a decomposition");
    if (f.tensor && f.decomposition && assemble(*f.decomposition).entries != f.tensor->entries)
        throw std::invalid_argument("decomposition does not assemble to the stored entries");
    return f;
}

Json design_to_json(const ObstructionDesign& h) {
    Json j;
    j["box"] = {h.box()[0], h.box()[1], h.box()[2]};
    Json pts = Json::array();
    for (const auto& p : h.points()) pts.push_back({p[0], p[1], p[2]});
    j["points"] = std::move(pts);
    return j;
}

ObstructionDesign design_from_json(const Json& j) {
    if (!j.contains("box") || !j.contains("points"))
        throw std::invalid_argument("design file needs box and points");
    std::array<int, 3> box{j["box"][0].get<int>(), j["box"][1].get<int>(),
                           j["box"][2].get<int>()};
    std::vector<std::array<int, 3>> pts;
    for (const auto& p : j["points"])
        pts.push_back({p[0].get<int>(), p[1].get<int>(), p[2].get<int>()});
    return ObstructionDesign(box, std::move(pts));
}

static Json int_list(const std::vector<int>& v) {
    Json arr = Json::array();
    for (int x : v) arr.push_back(std::to_string(x));
    return arr;
}

static std::vector<int> int_list_parse(const Json& j) {
    std::vector<int> v;
    for (const auto& x : j) v.push_back(std::stoi(x.get<std::string>()));
    return v;
}

Json certificate_to_json(const BoundCertificate& c) {
    Json j;
    j["schema"] = "bound-certificate-v1";
    j["design"] = design_to_json(c.design);
    j["chromatic_index"] = std::to_string(c.chromatic_index);
    j["coloring"] = int_list(c.coloring);
    j["clique"] = int_list(c.clique);
    j["implied_bound"] = c.implied_bound.get_str();
    Json w;
    if (c.strategy == WitnessStrategy::Direct) {
        w["kind"] = "direct";
        if (!c.target || !c.target->rank_bound())
            throw std::invalid_argument("direct certificate needs a target decomposition");
        w["tensor"] = tensor_to_json(*c.target);
        w["value"] = rat_str(c.value);
    } else {
        if (!c.hook) throw std::invalid_argument("symbolic certificate needs coefficients");
        w["kind"] = "matmul-symbolic";
        w["m"] = std::to_string(c.hook->m);
        w["kappa"] = std::to_string(c.hook->kappa);
        w["monomial"] = int_list(c.hook->monomial);
        Json per = Json::array();
        for (const Int& x : c.hook->per_set) per.push_back(x.get_str());
        w["per_set"] = std::move(per);
        w["multiplicity"] = c.hook->multiplicity.get_str();
        w["total"] = c.hook->total.get_str();
    }
    j["witness"] = std::move(w);
    return j;
}

BoundCertificate certificate_from_json(const Json& j) {
    if (j.value("schema", "") != "bound-certificate-v1")
        throw std::invalid_argument("unknown certificate schema");
    BoundCertificate c{design_from_json(j.at("design")), 0, {}, {}, Int(0)};
    c.chromatic_index = std::stoi(j.at("chromatic_index").get<std::string>());
    c.coloring = int_list_parse(j.at("coloring"));
    c.clique = int_list_parse(j.at("clique"));
    c.implied_bound = Int(j.at("implied_bound").get<std::string>());
    const Json& w = j.at("witness");
    std::string kind = w.at("kind").get<std::string>();
    if (kind == "direct") {
        c.strategy = WitnessStrategy::Direct;
        TensorFile f = tensor_from_json(w.at("tensor"));
        if (!f.decomposition)
            throw std::invalid_argument("direct witness needs a decomposition");
        c.target = *f.decomposition;
        c.value = rat_parse(w.at("value").get<std::string>());
    } else if (kind == "matmul-symbolic") {
        c.strategy = WitnessStrategy::Symbolic;
        HookCoefficient hc;
        hc.m = std::stoi(w.at("m").get<std::string>());
        hc.kappa = std::stoi(w.at("kappa").get<std::string>());
        hc.monomial = int_list_parse(w.at("monomial"));
        for (const auto& x : w.at("per_set")) hc.per_set.push_back(Int(x.get<std::string>()));
        hc.multiplicity = Int(w.at("multiplicity").get<std::string>());
        hc.total = Int(w.at("total").get<std::string>());
        c.hook = std::move(hc);
        c.target = mamu_tensor(c.hook->m);
    } else {
        throw std::invalid_argument("unknown witness kind: " + kind);
    }
    return c;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace obstr
