#include "waldkit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace waldkit {

using nlohmann::json;

namespace {

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    json parse(const std::string& text) const {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw StructuralError(origin_ + ": " + e.what());
        }
    }
    [[noreturn]] void fail(const std::string& path, const std::string& what) const {
        throw StructuralError(origin_ + ": " + (path.empty() ? "" : path + ": ") + what);
    }
    const json& field(const json& j, const std::string& key, const std::string& path) const {
        if (!j.is_object())
            fail(path, "expected an object");
        auto it = j.find(key);
        if (it == j.end())
            fail(path, "missing field '" + key + "'");
        return *it;
    }
    const json& array(const json& j, const std::string& key, const std::string& path) const {
        const json& a = field(j, key, path);
        if (!a.is_array())
            fail(path.empty() ? key : path + "." + key, "expected an array");
        return a;
    }
    std::string str(const json& j, const std::string& path) const {
        if (!j.is_string())
            fail(path, "expected a string");
        return j.get<std::string>();
    }
    int integer(const json& j, const std::string& path) const {
        if (!j.is_number_integer())
            fail(path, "expected an integer");
        return j.get<int>();
    }
    std::vector<int> ints(const json& j, const std::string& path) const {
        if (!j.is_array())
            fail(path, "expected an array of integers");
        std::vector<int> out;
        for (std::size_t k = 0; k < j.size(); ++k)
            out.push_back(integer(j[k], path + "[" + std::to_string(k) + "]"));
        return out;
    }
    const std::string& origin() const { return origin_; }

private:
    std::string origin_;
};

std::string idx(const std::string& key, std::size_t k) { return key + "[" + std::to_string(k) + "]"; }

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

OrdMap read_map(const Reader& R, const json& e, const std::string& p, int src, int dst) {
    try {
        return OrdMap(src, dst, R.ints(R.field(e, "images", p), p + ".images"));
    } catch (const StructuralError& err) {
        if (std::string(err.what()).rfind(R.origin(), 0) == 0)
            throw;
        R.fail(p, err.what());
    }
}

// Y names inside homotopy files resolve against the file's directory first.
SimplicialOrd resolve_Y(const std::string& ref, const std::string& origin, int cap) {
    if (is_builtin_Y(ref))
        return builtin_Y(ref, cap);
    auto path = std::filesystem::path(origin).parent_path() / ref;
    if (!std::filesystem::exists(path))
        path = ref;
    SimplicialOrd Y = load_Y(path.string());
    return Y.cap > cap ? truncate(Y, cap) : Y;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw StructuralError(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw StructuralError(path + ": cannot write file");
    out << text;
}

FinCofCategory read_category(const std::string& text, const std::string& origin) {
    const Reader R(origin);
    const json doc = R.parse(text);
    FinCofCategory C;
    C.name = doc.contains("name") ? R.str(doc["name"], "name") : stem(origin);
    FinCategory& B = C.base;

    const json& objs = R.array(doc, "objects", "");
    for (std::size_t k = 0; k < objs.size(); ++k) {
        const std::string n = R.str(objs[k], idx("objects", k));
        if (B.find_object(n))
            R.fail(idx("objects", k), "duplicate object '" + n + "'");
        B.add_object(n);
    }
    auto obj = [&](const json& j, const std::string& p) {
        const std::string n = R.str(j, p);
        auto o = B.find_object(n);
        if (!o)
            R.fail(p, "unknown object '" + n + "'");
        return *o;
    };
    auto mor = [&](const json& j, const std::string& p) {
        const std::string n = R.str(j, p);
        auto m = B.find_morphism(n);
        if (!m)
            R.fail(p, "unknown morphism '" + n + "'");
        return *m;
    };

    const json& mors = R.array(doc, "morphisms", "");
    for (std::size_t k = 0; k < mors.size(); ++k) {
        const std::string p = idx("morphisms", k);
        const std::string n = R.str(R.field(mors[k], "id", p), p + ".id");
        if (B.find_morphism(n))
            R.fail(p, "duplicate morphism '" + n + "'");
        B.add_morphism(n, obj(R.field(mors[k], "src", p), p + ".src"), obj(R.field(mors[k], "dst", p), p + ".dst"));
    }

    const json& ids = R.field(doc, "identities", "");
    if (!ids.is_object())
        R.fail("identities", "expected an object mapping object names to morphisms");
    for (auto it = ids.begin(); it != ids.end(); ++it) {
        const std::string p = "identities." + it.key();
        auto o = B.find_object(it.key());
        if (!o)
            R.fail(p, "unknown object '" + it.key() + "'");
        const MorId m = mor(it.value(), p);
        if (B.src(m) != *o || B.dst(m) != *o)
            R.fail(p, "identity is not an endomorphism of " + it.key());
        B.set_identity(*o, m);
    }
    for (int o = 0; o < B.num_objects(); ++o)
        if (B.identity(o) == kNone)
            R.fail("identities", "no identity for object '" + B.object_name(o) + "'");

    const json& comp = R.array(doc, "compose", "");
    for (std::size_t k = 0; k < comp.size(); ++k) {
        const std::string p = idx("compose", k);
        const MorId g = mor(R.field(comp[k], "g", p), p + ".g");
        const MorId f = mor(R.field(comp[k], "f", p), p + ".f");
        const MorId gf = mor(R.field(comp[k], "gf", p), p + ".gf");
        if (B.dst(f) != B.src(g))
            R.fail(p, "g and f are not composable");
        if (B.src(gf) != B.src(f) || B.dst(gf) != B.dst(g))
            R.fail(p, "gf has the wrong source or target");
        B.set_composite(g, f, gf);
    }
    B.set_zero(obj(R.field(doc, "zero", ""), "zero"));

    C.cofibration.assign(B.num_morphisms(), 0);
    if (doc.contains("cofibrations")) {
        const json& cof = R.array(doc, "cofibrations", "");
        for (std::size_t k = 0; k < cof.size(); ++k)
            C.cofibration[mor(cof[k], idx("cofibrations", k))] = 1;
    }
    if (doc.contains("pushouts")) {
        const json& po = R.array(doc, "pushouts", "");
        for (std::size_t k = 0; k < po.size(); ++k) {
            const std::string p = idx("pushouts", k);
            const MorId c = mor(R.field(po[k], "cof", p), p + ".cof");
            const MorId f = mor(R.field(po[k], "along", p), p + ".along");
            PushoutWitness w;
            w.obj = obj(R.field(po[k], "obj", p), p + ".obj");
            w.inc_cof = mor(R.field(po[k], "inc_cof", p), p + ".inc_cof");
            w.inc_other = mor(R.field(po[k], "inc_other", p), p + ".inc_other");
            if (B.src(c) != B.src(f))
                R.fail(p, "cof and along have different sources");
            if (B.src(w.inc_cof) != B.dst(c) || B.dst(w.inc_cof) != w.obj || B.src(w.inc_other) != B.dst(f) ||
                B.dst(w.inc_other) != w.obj)
                R.fail(p, "witness legs do not form a square on obj");
            C.add_witness(c, f, w);
        }
    }
    return C;
}

std::string write_category(const FinCofCategory& C) {
    const FinCategory& B = C.base;
    json doc;
    doc["name"] = C.name;
    doc["objects"] = json::array();
    for (int o = 0; o < B.num_objects(); ++o)
        doc["objects"].push_back(B.object_name(o));
    doc["morphisms"] = json::array();
    doc["compose"] = json::array();
    doc["cofibrations"] = json::array();
    for (int m = 0; m < B.num_morphisms(); ++m) {
        doc["morphisms"].push_back(
            {{"id", B.morphism_name(m)}, {"src", B.object_name(B.src(m))}, {"dst", B.object_name(B.dst(m))}});
        if (C.is_cofibration(m))
            doc["cofibrations"].push_back(B.morphism_name(m));
    }
    for (int f = 0; f < B.num_morphisms(); ++f)
        for (MorId g : B.out(B.dst(f))) {
            const MorId gf = B.composite(g, f);
            if (gf != kNone)
                doc["compose"].push_back(
                    {{"g", B.morphism_name(g)}, {"f", B.morphism_name(f)}, {"gf", B.morphism_name(gf)}});
        }
    doc["identities"] = json::object();
    for (int o = 0; o < B.num_objects(); ++o)
        doc["identities"][B.object_name(o)] = B.morphism_name(B.identity(o));
    doc["zero"] = B.object_name(B.zero());
    doc["pushouts"] = json::array();
    for (const auto& [key, w] : C.witnesses)
        doc["pushouts"].push_back({{"cof", B.morphism_name(key.first)},
                                   {"along", B.morphism_name(key.second)},
                                   {"obj", B.object_name(w.obj)},
                                   {"inc_cof", B.morphism_name(w.inc_cof)},
                                   {"inc_other", B.morphism_name(w.inc_other)}});
    return doc.dump(1) + "\n";
}

FinCofCategory load_category(const std::string& path) {
    if (is_builtin_category(path) && !std::filesystem::exists(path))
        return builtin_category(path);
    return read_category(read_file(path), path);
}

SimplicialOrd read_Y(const std::string& text, const std::string& origin) {
    const Reader R(origin);
    const json doc = R.parse(text);
    SimplicialOrd Y;
    Y.name = doc.contains("name") ? R.str(doc["name"], "name") : stem(origin);
    Y.cap = R.integer(R.field(doc, "cap", ""), "cap");
    if (Y.cap < 0)
        R.fail("cap", "negative cap");
    Y.levels = R.ints(R.field(doc, "levels", ""), "levels");
    if (static_cast<int>(Y.levels.size()) != Y.cap + 1)
        R.fail("levels", "expected cap+1 = " + std::to_string(Y.cap + 1) + " sizes, got " +
                             std::to_string(Y.levels.size()));
    for (std::size_t n = 0; n < Y.levels.size(); ++n)
        if (Y.levels[n] < 0)
            R.fail(idx("levels", n), "negative size");

    auto table = [&](const char* key, bool faces) {
        std::vector<std::vector<std::optional<OrdMap>>> tmp(Y.cap + 1);
        for (int n = 0; n <= Y.cap; ++n)
            tmp[n].resize(faces ? (n > 0 ? n + 1 : 0) : (n < Y.cap ? n + 1 : 0));
        const json& arr = R.array(doc, key, "");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string p = idx(key, k);
            const int n = R.integer(R.field(arr[k], "n", p), p + ".n");
            const int i = R.integer(R.field(arr[k], "i", p), p + ".i");
            if (n < 0 || n > Y.cap || i < 0 || i >= static_cast<int>(tmp[n].size()))
                R.fail(p, "no structure map (" + std::to_string(n) + "," + std::to_string(i) + ") within cap");
            if (tmp[n][i])
                R.fail(p, "duplicate entry");
            tmp[n][i] = read_map(R, arr[k], p, Y.levels[n], Y.levels[faces ? n - 1 : n + 1]);
        }
        std::vector<std::vector<OrdMap>> out(faces ? Y.cap + 1 : Y.cap);
        for (int n = 0; n < static_cast<int>(out.size()); ++n)
            for (std::size_t i = 0; i < tmp[n].size(); ++i) {
                if (!tmp[n][i])
                    R.fail(key, "missing map n=" + std::to_string(n) + " i=" + std::to_string(i));
                out[n].push_back(*tmp[n][i]);
            }
        return out;
    };
    Y.faces = table("faces", true);
    Y.degeneracies = table("degeneracies", false);
    return Y;
}

std::string write_Y(const SimplicialOrd& Y) {
    json doc;
    doc["name"] = Y.name;
    doc["cap"] = Y.cap;
    doc["levels"] = Y.levels;
    doc["faces"] = json::array();
    doc["degeneracies"] = json::array();
    for (int n = 0; n <= Y.cap; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i)
            doc["faces"].push_back({{"n", n}, {"i", i}, {"images", Y.d(n, i).images()}});
        for (int i = 0; n < Y.cap && i <= n; ++i)
            doc["degeneracies"].push_back({{"n", n}, {"i", i}, {"images", Y.s(n, i).images()}});
    }
    return doc.dump(1) + "\n";
}

SimplicialOrd load_Y(const std::string& path) { return read_Y(read_file(path), path); }

HomotopyInstance read_homotopy(const std::string& text, const std::string& origin, int cap) {
    const Reader R(origin);
    const json doc = R.parse(text);
    HomotopyInstance H;
    H.Y = resolve_Y(R.str(R.field(doc, "source", ""), "source"), origin, cap);
    H.Y2 = resolve_Y(R.str(R.field(doc, "target", ""), "target"), origin, cap);
    if (H.Y.cap < cap || H.Y2.cap < cap)
        R.fail("source", "Y caps below the requested cap " + std::to_string(cap));
    auto levels = [&](const char* key) {
        LevelMap f;
        const json& arr = R.array(doc, key, "");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string p = idx(key, k);
            const int n = R.integer(R.field(arr[k], "n", p), p + ".n");
            if (n != static_cast<int>(k))
                R.fail(p, "levels must be listed in order from 0");
            if (n > cap)
                break;
            f.push_back(read_map(R, arr[k], p, H.Y.levels[n], H.Y2.levels[n]));
        }
        if (static_cast<int>(f.size()) < cap + 1)
            R.fail(key, "levels 0.." + std::to_string(cap) + " required");
        return f;
    };
    H.f = levels("f");
    H.g = levels("g");
    H.H.h.resize(cap);
    const json& arr = R.array(doc, "h", "");
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string p = idx("h", k);
        const int n = R.integer(R.field(arr[k], "n", p), p + ".n");
        const int i = R.integer(R.field(arr[k], "i", p), p + ".i");
        if (n >= cap)
            continue;
        if (n < 0 || i != static_cast<int>(H.H.h[n].size()))
            R.fail(p, "entries must run over n, then i = 0..n, in order");
        H.H.h[n].push_back(read_map(R, arr[k], p, H.Y.levels[n], H.Y2.levels[n + 1]));
    }
    for (int n = 0; n < cap; ++n)
        if (static_cast<int>(H.H.h[n].size()) != n + 1)
            R.fail("h", "level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " maps");
    return H;
}

std::string write_homotopy(const HomotopyInstance& H, const std::string& source, const std::string& target) {
    json doc;
    doc["source"] = source;
    doc["target"] = target;
    for (const char* key : {"f", "g"}) {
        doc[key] = json::array();
        const LevelMap& f = std::string(key) == "f" ? H.f : H.g;
        for (std::size_t n = 0; n < f.size(); ++n)
            doc[key].push_back({{"n", n}, {"images", f[n].images()}});
    }
    doc["h"] = json::array();
    for (std::size_t n = 0; n < H.H.h.size(); ++n)
        for (std::size_t i = 0; i < H.H.h[n].size(); ++i)
            doc["h"].push_back({{"n", n}, {"i", i}, {"images", H.H.h[n][i].images()}});
    return doc.dump(1) + "\n";
}

bool is_builtin_Y(const std::string& name) {
    return name == "circle" || name == "const0" || name == "point_plus" || name == "interval_plus";
}

SimplicialOrd builtin_Y(const std::string& name, int cap) {
    if (name == "circle")
        return simplicial_circle(cap);
    if (name == "const0")
        return constant_point(cap);
    if (name == "point_plus")
        return point_plus(cap);
    if (name == "interval_plus")
        return interval_plus(cap);
    throw StructuralError("unknown builtin Y '" + name + "' (circle, const0, point_plus, interval_plus)");
}

bool is_builtin_category(const std::string& name) {
    return name == "trivial" || name == "chain2" || name == "chain3" || name == "diamond";
}

FinCofCategory builtin_category(const std::string& name) {
    if (name == "trivial")
        return trivial_category();
    if (name == "chain2")
        return lattice_category(chain_poset(1), "chain2");
    if (name == "chain3")
        return lattice_category(chain_poset(2), "chain3");
    if (name == "diamond")
        return lattice_category(diamond_poset(), "diamond");
    throw StructuralError("unknown builtin category '" + name + "' (trivial, chain2, chain3, diamond)");
}

}  // namespace waldkit
