#include "hopfcyc/json_io.hpp"

namespace hopfcyc {

json fieldToJson(FieldTag f) {
    if (f.isRationals()) return json("Q");
    return json{{"Fp", f.p}};
}

FieldTag fieldFromJson(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldTag::rationals();
        throw ParseError("unknown field \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
        return FieldTag::primeField(j["Fp"].get<unsigned long>());
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

json mapToJson(const Matrix& m) {
    json rows = json::array();
    for (int src = 0; src < m.cols(); ++src) {
        json row = json::array();
        for (int tgt = 0; tgt < m.rows(); ++tgt) row.push_back(m(tgt, src).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix mapFromJson(const json& j, FieldTag field, int srcDim, int tgtDim,
                   const std::string& what) {
    if (!j.is_array() || int(j.size()) != srcDim)
        throw ParseError(what + ": expected " + std::to_string(srcDim) + " rows");
    Matrix m(tgtDim, srcDim, field);
    for (int src = 0; src < srcDim; ++src) {
        const json& row = j[src];
        if (!row.is_array() || int(row.size()) != tgtDim)
            throw ParseError(what + " row " + std::to_string(src) + ": expected " +
                             std::to_string(tgtDim) + " entries");
        for (int tgt = 0; tgt < tgtDim; ++tgt) {
            if (!row[tgt].is_string())
                throw ParseError(what + " entry (" + std::to_string(src) + "," +
                                 std::to_string(tgt) + ") must be a scalar string");
            m.set(tgt, src, Scalar::fromString(row[tgt].get<std::string>(), field));
        }
    }
    return m;
}

json hopfToJson(const HopfAlgebraData& h, const std::vector<Character>& characters,
                const std::vector<GrouplikeElement>& grouplikes) {
    json j;
    j["field"] = fieldToJson(h.field());
    j["basis"] = h.space.labels;
    j["mult"] = mapToJson(h.mult);
    j["unit"] = mapToJson(h.unit);
    j["comult"] = mapToJson(h.comult);
    j["counit"] = mapToJson(h.counit);
    j["antipode"] = mapToJson(h.antipode);
    if (!characters.empty()) {
        json cs;
        for (const auto& c : characters) {
            json row = json::array();
            for (int i = 0; i < h.dim(); ++i) row.push_back(c.functional(0, i).str());
            cs[c.name] = std::move(row);
        }
        j["characters"] = std::move(cs);
    }
    if (!grouplikes.empty()) {
        json gs;
        for (const auto& g : grouplikes) {
            json row = json::array();
            for (int i = 0; i < h.dim(); ++i) row.push_back(g.vector(i, 0).str());
            gs[g.name] = std::move(row);
        }
        j["grouplikes"] = std::move(gs);
    }
    return j;
}

HopfFile hopfFromJson(const json& j) {
    for (const char* key : {"field", "basis", "mult", "unit", "comult", "counit", "antipode"})
        if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    FieldTag field = fieldFromJson(j["field"]);
    if (!j["basis"].is_array() || j["basis"].empty())
        throw ParseError("basis must be a non-empty array of labels");
    std::vector<std::string> labels = j["basis"].get<std::vector<std::string>>();
    int d = int(labels.size());

    HopfFile out{HopfAlgebraData{BasedSpace::make(d, field, labels),
                                 mapFromJson(j["mult"], field, d * d, d, "mult"),
                                 mapFromJson(j["unit"], field, 1, d, "unit"),
                                 mapFromJson(j["comult"], field, d, d * d, "comult"),
                                 mapFromJson(j["counit"], field, d, 1, "counit"),
                                 mapFromJson(j["antipode"], field, d, d, "antipode"),
                                 std::nullopt},
                 {},
                 {}};

    if (j.contains("characters")) {
        for (auto& [name, row] : j["characters"].items()) {
            Matrix f(1, d, field);
            if (!row.is_array() || int(row.size()) != d)
                throw ParseError("character \"" + name + "\" needs " + std::to_string(d) +
                                 " values");
            for (int i = 0; i < d; ++i)
                f.set(0, i, Scalar::fromString(row[i].get<std::string>(), field));
            out.characters.push_back(Character{name, std::move(f)});
        }
    }
    if (j.contains("grouplikes")) {
        for (auto& [name, row] : j["grouplikes"].items()) {
            Matrix v(d, 1, field);
            if (!row.is_array() || int(row.size()) != d)
                throw ParseError("grouplike \"" + name + "\" needs " + std::to_string(d) +
                                 " values");
            for (int i = 0; i < d; ++i)
                v.set(i, 0, Scalar::fromString(row[i].get<std::string>(), field));
            out.grouplikes.push_back(GrouplikeElement{name, std::move(v)});
        }
    }
    return out;
}

json saydToJson(const SAYDModuleData& m) {
    json j;
    j["field"] = fieldToJson(m.field());
    j["dim"] = m.dim();
    j["labels"] = m.space.labels;
    j["variant"] = saydVariantName(m.variant);
    j["action"] = mapToJson(m.action);
    j["coaction"] = mapToJson(m.coaction);
    return j;
}

SAYDModuleData saydFromJson(const json& j, const HopfAlgebraData& h) {
    for (const char* key : {"field", "dim", "variant", "action", "coaction"})
        if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    FieldTag field = fieldFromJson(j["field"]);
    if (!(field == h.field())) throw ParseError("module field differs from Hopf field");
    int md = j["dim"].get<int>();
    if (md <= 0) throw ParseError("module dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    SaydVariant variant = saydVariantFromName(j["variant"].get<std::string>());
    int d = h.dim();
    bool leftMod = variant == SaydVariant::LL || variant == SaydVariant::LR;
    bool leftCo = variant == SaydVariant::LL || variant == SaydVariant::RL;
    Matrix action = mapFromJson(j["action"], field, leftMod ? d * md : md * d, md, "action");
    Matrix coaction =
        mapFromJson(j["coaction"], field, md, leftCo ? d * md : md * d, "coaction");
    return SAYDModuleData{BasedSpace::make(md, field, labels), variant, std::move(action),
                          std::move(coaction)};
}

namespace {

json operatorFamilyToJson(const std::vector<std::vector<Matrix>>& fam) {
    json out = json::array();
    for (const auto& degree : fam) {
        json mats = json::array();
        for (const auto& m : degree) mats.push_back(mapToJson(m));
        out.push_back(std::move(mats));
    }
    return out;
}

}  // namespace

json moduleToJson(const ParaCyclicModule& x) {
    json j;
    j["type"] = "paracyclic";
    j["field"] = fieldToJson(x.field);
    j["N"] = x.N;
    j["dims"] = x.dims;
    j["faces"] = operatorFamilyToJson(x.faces);
    j["degeneracies"] = operatorFamilyToJson(x.degens);
    json cyc = json::array();
    for (const auto& m : x.cyclic) cyc.push_back(mapToJson(m));
    j["cyclic"] = std::move(cyc);
    return j;
}

json moduleToJson(const ParaCocyclicModule& x) {
    json j;
    j["type"] = "paracocyclic";
    j["field"] = fieldToJson(x.field);
    j["N"] = x.N;
    j["dims"] = x.dims;
    j["cofaces"] = operatorFamilyToJson(x.cofaces);
    j["codegeneracies"] = operatorFamilyToJson(x.codegens);
    json cyc = json::array();
    for (const auto& m : x.cyclic) cyc.push_back(mapToJson(m));
    j["cyclic"] = std::move(cyc);
    return j;
}

bool jsonIsCocyclicModule(const json& j) {
    return j.contains("type") && j["type"].is_string() &&
           j["type"].get<std::string>() == "paracocyclic";
}

namespace {

void moduleHeaderFromJson(const json& j, const char* expectType, int& N, FieldTag& field,
                          std::vector<int>& dims) {
    for (const char* key : {"type", "field", "N", "dims", "cyclic"})
        if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    if (j["type"].get<std::string>() != expectType)
        throw ParseError("expected a " + std::string(expectType) + " module file");
    field = fieldFromJson(j["field"]);
    N = j["N"].get<int>();
    dims = j["dims"].get<std::vector<int>>();
    if (N < 0 || int(dims.size()) != N + 1)
        throw ParseError("dims length must be N + 1");
}

}  // namespace

ParaCyclicModule cyclicModuleFromJson(const json& j) {
    ParaCyclicModule x;
    moduleHeaderFromJson(j, "paracyclic", x.N, x.field, x.dims);
    if (!j.contains("faces") || !j.contains("degeneracies"))
        throw ParseError("missing faces/degeneracies");
    x.faces.resize(x.N + 1);
    x.degens.resize(x.N + 1);
    for (int n = 1; n <= x.N; ++n)
        for (int i = 0; i <= n; ++i)
            x.faces[n].push_back(mapFromJson(j["faces"][n][i], x.field, x.dims[n],
                                             x.dims[n - 1],
                                             "faces[" + std::to_string(n) + "][" +
                                                 std::to_string(i) + "]"));
    for (int n = 0; n < x.N; ++n)
        for (int i = 0; i <= n; ++i)
            x.degens[n].push_back(mapFromJson(j["degeneracies"][n][i], x.field, x.dims[n],
                                              x.dims[n + 1],
                                              "degeneracies[" + std::to_string(n) + "][" +
                                                  std::to_string(i) + "]"));
    for (int n = 0; n <= x.N; ++n)
        x.cyclic.push_back(mapFromJson(j["cyclic"][n], x.field, x.dims[n], x.dims[n],
                                       "cyclic[" + std::to_string(n) + "]"));
    validateShapes(x);
    return x;
}

ParaCocyclicModule cocyclicModuleFromJson(const json& j) {
    ParaCocyclicModule x;
    moduleHeaderFromJson(j, "paracocyclic", x.N, x.field, x.dims);
    if (!j.contains("cofaces") || !j.contains("codegeneracies"))
        throw ParseError("missing cofaces/codegeneracies");
    x.cofaces.resize(x.N + 1);
    x.codegens.resize(x.N + 1);
    for (int n = 0; n < x.N; ++n)
        for (int i = 0; i <= n + 1; ++i)
            x.cofaces[n].push_back(mapFromJson(j["cofaces"][n][i], x.field, x.dims[n],
                                               x.dims[n + 1],
                                               "cofaces[" + std::to_string(n) + "][" +
                                                   std::to_string(i) + "]"));
    for (int n = 1; n <= x.N; ++n)
        for (int i = 0; i < n; ++i)
            x.codegens[n].push_back(mapFromJson(j["codegeneracies"][n][i], x.field,
                                                x.dims[n], x.dims[n - 1],
                                                "codegeneracies[" + std::to_string(n) +
                                                    "][" + std::to_string(i) + "]"));
    for (int n = 0; n <= x.N; ++n)
        x.cyclic.push_back(mapFromJson(j["cyclic"][n], x.field, x.dims[n], x.dims[n],
                                       "cyclic[" + std::to_string(n) + "]"));
    validateShapes(x);
    return x;
}

json reportToJson(const Report& r) {
    json items = json::array();
    for (const auto& it : r.items) {
        json o;
        o["name"] = it.name;
        if (it.degree >= 0) o["degree"] = it.degree;
        if (it.index >= 0) o["index"] = it.index;
        o["status"] = it.status == CheckItem::Status::Pass     ? "pass"
                      : it.status == CheckItem::Status::Fail   ? "fail"
                                                               : "skipped";
        items.push_back(std::move(o));
    }
    json j;
    j["allPass"] = r.allPass();
    j["checks"] = std::move(items);
    return j;
}

json relationReportToJson(const RelationReport& r) {
    json j;
    j["simplicialOk"] = r.simplicialOk;
    j["paracyclicOk"] = r.paracyclicOk;
    j["isCyclic"] = r.isCyclic;
    json orders = json::array();
    for (const auto& o : r.cyclicOrder)
        orders.push_back(o ? json(*o) : json("paracyclic only"));
    j["cyclicOrder"] = std::move(orders);
    j["details"] = reportToJson(r.report);
    return j;
}

json homologyReportToJson(const HomologyReport& r) {
    json j;
    j["kind"] = r.kind == HomologyKind::Hochschild ? "hochschild" : "cyclic";
    j["direction"] = r.direction == Direction::Homology ? "homology" : "cohomology";
    json dims = json::array();
    for (auto& [n, dim] : r.dims) dims.push_back(json::array({n, dim}));
    j["dims"] = std::move(dims);
    j["guaranteedUpTo"] = r.guaranteedUpTo;
    j["truncationNote"] = r.truncationNote;
    return j;
}

}  // namespace hopfcyc
