#include "segalkit/json_io.hpp"

#include <map>

namespace segalkit {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    fail(ErrorCode::InvalidInput, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
    std::vector<int> out;
    std::size_t k = 0;
    for (const auto& v : as_array(j, path)) out.push_back(as_int(v, path + "/" + std::to_string(k++)));
    return out;
}

void check_schema(const Json& j, const char* expected) {
    if (!j.is_object()) bad("", "expected an object");
    auto it = j.find("$schema");
    if (it != j.end() && (!it->is_string() || *it != expected))
        bad("/$schema", std::string("expected \"") + expected + "\"");
}

// Runs a constructor, prefixing its validation message with the document path.
template <class F>
auto located(const std::string& path, F&& make) -> decltype(make()) {
    try {
        return make();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidInput) throw;
        bad(path, e.what());
    }
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("; "); pos != std::string::npos) what = what.substr(pos + 2);
        fail(ErrorCode::InvalidInput, "malformed JSON at line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + what);
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string document_kind(const Json& j) {
    if (!j.is_object()) return {};
    if (auto it = j.find("$schema"); it != j.end() && it->is_string()) {
        const std::string tag = *it;
        for (const char* kind : {"simplex-map", "relative-category", "category", "functor", "sset-map", "sset", "space",
                                 "report", "batch", "result"})
            if (tag == std::string("segalkit/") + kind + "/v1") return kind;
        return {};
    }
    if (j.contains("outerTruncation")) return "space";
    if (j.contains("objects") && j.contains("weq")) return "relative-category";
    if (j.contains("objects") && j.contains("arrows") && j.contains("identities")) return "category";
    if (j.contains("source") && j.contains("target") && j.contains("cells")) return "sset-map";
    if (j.contains("truncation") && j.contains("cells")) return "sset";
    if (j.contains("images")) return "simplex-map";
    return {};
}

Json to_json(const SimplexMap& f) {
    Json j;
    j["$schema"] = schema::kSimplexMap;
    j["text"] = f.to_string();
    j["domain"] = f.domain();
    j["codomain"] = f.codomain();
    j["images"] = std::vector<int>(f.images().begin(), f.images().end());
    return j;
}

SimplexMap simplex_map_from_json(const Json& j) {
    if (j.is_string()) return located("/", [&] { return SimplexMap::parse(j.get<std::string>()); });
    check_schema(j, schema::kSimplexMap);
    const int codomain = as_int(field(j, "codomain", ""), "/codomain");
    auto images = int_list(field(j, "images", ""), "/images");
    if (j.contains("domain") && as_int(j["domain"], "/domain") + 1 != static_cast<int>(images.size()))
        bad("/domain", "does not match the number of images");
    return located("/images", [&] { return SimplexMap(codomain, std::move(images)); });
}

Json to_json(const FinCategory& c, bool tagged) {
    Json j;
    if (tagged) j["$schema"] = schema::kCategory;
    j["objects"] = c.objects();
    Json arrows = Json::array();
    for (const auto& a : c.arrows()) arrows.push_back({{"id", a.id}, {"src", c.object(a.source)}, {"tgt", c.object(a.target)}});
    j["arrows"] = std::move(arrows);
    Json ids = Json::object();
    for (int x = 0; x < c.object_count(); ++x) ids[c.object(x)] = c.arrow(c.identity(x)).id;
    j["identities"] = std::move(ids);
    Json compose = Json::array();
    for (const auto& e : c.composites())
        compose.push_back({c.arrow(e.second).id, c.arrow(e.first).id, c.arrow(e.result).id});
    j["compose"] = std::move(compose);
    return j;
}

FinCategory category_from_json(const Json& j) {
    check_schema(j, j.contains("weq") ? schema::kRelCategory : schema::kCategory);
    std::vector<std::string> objects;
    std::map<std::string, int> object_index;
    {
        std::size_t k = 0;
        for (const auto& o : as_array(field(j, "objects", ""), "/objects")) {
            const std::string path = "/objects/" + std::to_string(k++);
            auto name = as_string(o, path);
            if (!object_index.emplace(name, static_cast<int>(objects.size())).second) bad(path, "duplicate object '" + name + "'");
            objects.push_back(std::move(name));
        }
    }
    auto object_of = [&](const Json& v, const std::string& path) {
        auto it = object_index.find(as_string(v, path));
        if (it == object_index.end()) bad(path, "unknown object '" + v.get<std::string>() + "'");
        return it->second;
    };
    std::vector<Arrow> arrows;
    std::map<std::string, int> arrow_index;
    {
        std::size_t k = 0;
        for (const auto& a : as_array(field(j, "arrows", ""), "/arrows")) {
            const std::string path = "/arrows/" + std::to_string(k++);
            Arrow arrow{as_string(field(a, "id", path), path + "/id"), object_of(field(a, "src", path), path + "/src"),
                        object_of(field(a, "tgt", path), path + "/tgt")};
            if (!arrow_index.emplace(arrow.id, static_cast<int>(arrows.size())).second) bad(path, "duplicate arrow '" + arrow.id + "'");
            arrows.push_back(std::move(arrow));
        }
    }
    auto arrow_of = [&](const Json& v, const std::string& path) {
        auto it = arrow_index.find(as_string(v, path));
        if (it == arrow_index.end()) bad(path, "unknown arrow '" + v.get<std::string>() + "'");
        return it->second;
    };
    std::vector<int> identities(objects.size(), -1);
    const Json& ids = field(j, "identities", "");
    if (!ids.is_object()) bad("/identities", "expected an object");
    for (const auto& [name, id] : ids.items()) {
        auto it = object_index.find(name);
        if (it == object_index.end()) bad("/identities/" + name, "unknown object '" + name + "'");
        identities[sz(it->second)] = arrow_of(id, "/identities/" + name);
    }
    for (std::size_t x = 0; x < objects.size(); ++x)
        if (identities[x] < 0) bad("/identities", "no identity for '" + objects[x] + "'");
    std::vector<Composite> composites;
    if (j.contains("compose")) {
        std::size_t k = 0;
        for (const auto& e : as_array(j["compose"], "/compose")) {
            const std::string path = "/compose/" + std::to_string(k++);
            if (!e.is_array() || e.size() != 3) bad(path, "expected [second, first, composite]");
            composites.push_back({arrow_of(e[0], path + "/0"), arrow_of(e[1], path + "/1"), arrow_of(e[2], path + "/2")});
        }
    }
    return located("", [&] { return FinCategory(std::move(objects), std::move(arrows), std::move(identities), composites); });
}

Json to_json(const RelCategory& r, bool tagged) {
    Json j;
    if (tagged) j["$schema"] = schema::kRelCategory;
    const Json base = to_json(r.base(), false);
    for (const auto& [key, value] : base.items()) j[key] = value;
    Json weq = Json::array();
    for (int a : r.weq()) weq.push_back(r.base().arrow(a).id);
    j["weq"] = std::move(weq);
    return j;
}

RelCategory relative_category_from_json(const Json& j) {
    check_schema(j, schema::kRelCategory);
    auto base = category_from_json(j);
    std::vector<int> weq;
    std::size_t k = 0;
    for (const auto& id : as_array(field(j, "weq", ""), "/weq")) {
        const std::string path = "/weq/" + std::to_string(k++);
        const int a = base.find_arrow(as_string(id, path));
        if (a < 0) bad(path, "unknown arrow '" + id.get<std::string>() + "'");
        weq.push_back(a);
    }
    return located("/weq", [&] { return RelCategory(std::move(base), std::move(weq)); });
}

Json to_json(const Functor& f, const FinCategory& a, const FinCategory& b, bool tagged) {
    Json j;
    if (tagged) j["$schema"] = schema::kFunctor;
    Json objects = Json::object(), arrows = Json::object();
    for (int x = 0; x < a.object_count(); ++x) objects[a.object(x)] = b.object(f.on_objects[sz(x)]);
    for (int u = 0; u < a.arrow_count(); ++u) arrows[a.arrow(u).id] = b.arrow(f.on_arrows[sz(u)]).id;
    j["objects"] = std::move(objects);
    j["arrows"] = std::move(arrows);
    return j;
}

Functor functor_from_json(const Json& j, const FinCategory& a, const FinCategory& b) {
    check_schema(j, schema::kFunctor);
    Functor f;
    f.on_objects.assign(sz(a.object_count()), -1);
    f.on_arrows.assign(sz(a.arrow_count()), -1);
    const Json& objects = field(j, "objects", "");
    const Json& arrows = field(j, "arrows", "");
    for (int x = 0; x < a.object_count(); ++x) {
        const std::string path = "/objects/" + a.object(x);
        if (!objects.is_object() || !objects.contains(a.object(x))) bad(path, "missing");
        f.on_objects[sz(x)] = b.find_object(as_string(objects[a.object(x)], path));
        if (f.on_objects[sz(x)] < 0) bad(path, "unknown target object");
    }
    for (int u = 0; u < a.arrow_count(); ++u) {
        const std::string path = "/arrows/" + a.arrow(u).id;
        if (!arrows.is_object() || !arrows.contains(a.arrow(u).id)) bad(path, "missing");
        f.on_arrows[sz(u)] = b.find_arrow(as_string(arrows[a.arrow(u).id], path));
        if (f.on_arrows[sz(u)] < 0) bad(path, "unknown target arrow");
    }
    if (!is_functor(a, b, f)) bad("", "not a functor");
    return f;
}

Json to_json(const FinSSet& x, bool tagged) {
    Json j;
    if (tagged) j["$schema"] = schema::kSSet;
    j["truncation"] = x.truncation();
    Json cells = Json::object(), faces = Json::object(), degens = Json::object();
    for (int n = 0; n <= x.truncation(); ++n) {
        const std::string key = std::to_string(n);
        cells[key] = x.labels()[sz(n)];
        Json fs = Json::array(), ds = Json::array();
        for (int c = 0; c < x.count(n); ++c) {
            if (n > 0) {
                Json row = Json::array();
                for (int i = 0; i <= n; ++i) row.push_back(x.face(n, i, c));
                fs.push_back(std::move(row));
            }
            if (n < x.truncation()) {
                Json row = Json::array();
                for (int i = 0; i <= n; ++i) row.push_back(x.degen(n, i, c));
                ds.push_back(std::move(row));
            }
        }
        if (n > 0) faces[key] = std::move(fs);
        if (n < x.truncation()) degens[key] = std::move(ds);
    }
    j["cells"] = std::move(cells);
    j["faces"] = std::move(faces);
    j["degens"] = std::move(degens);
    return j;
}

FinSSet sset_from_json(const Json& j) {
    check_schema(j, schema::kSSet);
    const int D = as_int(field(j, "truncation", ""), "/truncation");
    if (D < 0 || D > 8) bad("/truncation", "must lie in 0..8");
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    std::vector<std::vector<std::vector<int>>> faces(sz(D) + 1), degens(sz(D) + 1);
    const Json& cells = field(j, "cells", "");
    const Json& fj = field(j, "faces", "");
    const Json& dj = field(j, "degens", "");
    for (int n = 0; n <= D; ++n) {
        const std::string key = std::to_string(n);
        const std::string path = "/cells/" + key;
        if (!cells.is_object() || !cells.contains(key)) bad(path, "missing");
        for (const auto& l : as_array(cells[key], path)) labels[sz(n)].push_back(as_string(l, path));
        const int count = static_cast<int>(labels[sz(n)].size());
        auto table = [&](const Json& src, const char* name, int arity, bool present) {
            std::vector<std::vector<int>> cols(sz(arity));
            if (!present) return cols;
            const std::string tpath = std::string("/") + name + "/" + key;
            if (!src.is_object() || !src.contains(key)) bad(tpath, "missing");
            const Json& rows = as_array(src[key], tpath);
            if (static_cast<int>(rows.size()) != count) bad(tpath, "expected one row per cell of degree " + key);
            for (int c = 0; c < count; ++c) {
                const auto row = int_list(rows[sz(c)], tpath + "/" + std::to_string(c));
                if (static_cast<int>(row.size()) != arity) bad(tpath + "/" + std::to_string(c), "expected " + std::to_string(arity) + " entries");
                for (int i = 0; i < arity; ++i) cols[sz(i)].push_back(row[sz(i)]);
            }
            return cols;
        };
        faces[sz(n)] = table(fj, "faces", n == 0 ? 0 : n + 1, n > 0);
        degens[sz(n)] = table(dj, "degens", n < D ? n + 1 : 0, n < D);
    }
    return located("", [&] { return FinSSet(D, std::move(labels), std::move(faces), std::move(degens)); });
}

Json assignment_json(const SSetMap& f) {
    Json j = Json::object();
    for (std::size_t n = 0; n < f.cells().size(); ++n) j[std::to_string(n)] = f.cells()[n];
    return j;
}

SSetMap sset_map_from_assignment(const Json& j, const FinSSet& source, const FinSSet& target) {
    if (!j.is_object()) bad("", "expected a per-degree assignment object");
    std::vector<std::vector<int>> cells;
    for (int n = 0; n <= source.truncation(); ++n) {
        const std::string key = std::to_string(n);
        if (!j.contains(key)) bad("/" + key, "missing");
        cells.push_back(int_list(j[key], "/" + key));
    }
    return located("", [&] { return SSetMap(source, target, std::move(cells)); });
}

Json to_json(const SSetMap& f, bool tagged) {
    Json j;
    if (tagged) j["$schema"] = schema::kSSetMap;
    j["source"] = to_json(f.source(), false);
    j["target"] = to_json(f.target(), false);
    j["cells"] = assignment_json(f);
    return j;
}

SSetMap sset_map_from_json(const Json& j) {
    check_schema(j, schema::kSSetMap);
    const auto source = located("/source", [&] { return sset_from_json(field(j, "source", "")); });
    const auto target = located("/target", [&] { return sset_from_json(field(j, "target", "")); });
    return located("/cells", [&] { return sset_map_from_assignment(field(j, "cells", ""), source, target); });
}

Json to_json(const SimplicialSpace& x, bool tagged) {
    Json j;
    if (tagged) j["$schema"] = schema::kSpace;
    j["outerTruncation"] = x.outer_truncation();
    j["innerTruncation"] = x.inner_truncation();
    Json levels = Json::array(), faces = Json::array(), degens = Json::array();
    for (int n = 0; n <= x.outer_truncation(); ++n) {
        levels.push_back(to_json(x.level(n), false));
        Json fs = Json::array(), ds = Json::array();
        for (const auto& f : x.faces()[sz(n)]) fs.push_back(assignment_json(f));
        for (const auto& d : x.degens()[sz(n)]) ds.push_back(assignment_json(d));
        faces.push_back(std::move(fs));
        degens.push_back(std::move(ds));
    }
    j["levels"] = std::move(levels);
    j["outerFaces"] = std::move(faces);
    j["outerDegens"] = std::move(degens);
    return j;
}

SimplicialSpace space_from_json(const Json& j) {
    check_schema(j, schema::kSpace);
    const int N = as_int(field(j, "outerTruncation", ""), "/outerTruncation");
    if (N < 0 || N > 8) bad("/outerTruncation", "must lie in 0..8");
    const Json& lj = as_array(field(j, "levels", ""), "/levels");
    if (static_cast<int>(lj.size()) != N + 1) bad("/levels", "expected " + std::to_string(N + 1) + " levels");
    std::vector<FinSSet> levels;
    for (int n = 0; n <= N; ++n) {
        const std::string path = "/levels/" + std::to_string(n);
        levels.push_back(located(path, [&] { return sset_from_json(lj[sz(n)]); }));
    }
    if (j.contains("innerTruncation") && as_int(j["innerTruncation"], "/innerTruncation") != levels[0].truncation())
        bad("/innerTruncation", "does not match the levels");
    auto maps = [&](const char* name, bool face) {
        const Json& all = as_array(field(j, name, ""), std::string("/") + name);
        if (static_cast<int>(all.size()) != N + 1) bad(std::string("/") + name, "expected one list per level");
        std::vector<std::vector<SSetMap>> out(sz(N) + 1);
        for (int n = 0; n <= N; ++n) {
            const std::string lpath = std::string("/") + name + "/" + std::to_string(n);
            const int expected = face ? (n == 0 ? 0 : n + 1) : (n < N ? n + 1 : 0);
            const Json& list = as_array(all[sz(n)], lpath);
            if (static_cast<int>(list.size()) != expected) bad(lpath, "expected " + std::to_string(expected) + " maps");
            for (int i = 0; i < expected; ++i) {
                const FinSSet& tgt = levels[sz(face ? n - 1 : n + 1)];
                out[sz(n)].push_back(located(lpath + "/" + std::to_string(i),
                                             [&] { return sset_map_from_assignment(list[sz(i)], levels[sz(n)], tgt); }));
            }
        }
        return out;
    };
    auto faces = maps("outerFaces", true);
    auto degens = maps("outerDegens", false);
    return located("", [&] { return SimplicialSpace(std::move(levels), std::move(faces), std::move(degens)); });
}

}  // namespace segalkit
