#pragma once

#include "cobalt/canonical.hpp"
#include "cobalt/evaldatum.hpp"
#include "cobalt/finite.hpp"
#include "cobalt/frobenius.hpp"
#include "cobalt/pentagon.hpp"
#include "cobalt/report.hpp"
#include "cobalt/star.hpp"
#include "cobalt/suspension.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

// JSON forms of every value crossing the tool boundary.  nlohmann::json
// keeps object keys sorted, which together with canonical number handling
// makes all emitted output byte-stable.

namespace cobalt {

using json = nlohmann::json;

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- scalars ----------------------------------------------------------------

inline BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw io_error("zero denominator in rational literal");
    return BigRat(num, den);
}

inline RigValue value_from_json(const json& j, Rig rig) {
    switch (rig) {
        case Rig::natural:
        case Rig::integer: {
            BigInt n = j.is_string() ? BigInt(j.get<std::string>())
                                     : BigInt(j.get<long long>());
            return rig == Rig::natural ? RigValue::natural(n) : RigValue::integer(n);
        }
        case Rig::rational: {
            if (j.is_string()) return RigValue::rational(parse_rat(j.get<std::string>()));
            return RigValue::rational(BigRat(j.get<long long>()));
        }
        case Rig::complex_rational: {
            if (j.is_object()) {
                BigRat re = j.contains("re") ? parse_rat(j.at("re").get<std::string>()) : BigRat(0);
                BigRat im = j.contains("im") ? parse_rat(j.at("im").get<std::string>()) : BigRat(0);
                return RigValue::complex(re, im);
            }
            if (j.is_string()) return RigValue::complex(parse_rat(j.get<std::string>()), BigRat(0));
            return RigValue::complex(BigRat(j.get<long long>()), BigRat(0));
        }
        case Rig::float64:
            return RigValue::f64(j.get<double>());
    }
    throw io_error("bad rig");
}

inline json value_to_json(const RigValue& v) {
    switch (v.rig()) {
        case Rig::natural:
        case Rig::integer: {
            const BigInt& n = v.as_int();
            // Stay numeric while exactly representable.
            if (n >= std::numeric_limits<long long>::min() / 2 &&
                n <= std::numeric_limits<long long>::max() / 2)
                return json(static_cast<long long>(n));
            return json(n.str());
        }
        case Rig::rational:
            return json(RigValue::rat_str(v.as_rat()));
        case Rig::complex_rational: {
            json j;
            j["re"] = RigValue::rat_str(v.as_complex().re);
            j["im"] = RigValue::rat_str(v.as_complex().im);
            return j;
        }
        case Rig::float64:
            return json(v.as_f64());
    }
    throw io_error("bad rig");
}

// --- matrices ---------------------------------------------------------------

inline RigMatrix matrix_from_json(const json& j) {
    Rig rig = rig_from_name(j.at("rig").get<std::string>());
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    std::vector<RigValue> entries;
    for (const auto& e : j.at("entries")) entries.push_back(value_from_json(e, rig));
    return RigMatrix(rows, cols, std::move(entries));
}

inline json matrix_to_json(const RigMatrix& m) {
    json j;
    j["rig"] = rig_name(m.rig());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json es = json::array();
    for (const auto& v : m.entries()) es.push_back(value_to_json(v));
    j["entries"] = es;
    return j;
}

// Flat entry list with known shape and rig, used for the cup/cap vectors.
inline RigMatrix vector_from_json(const json& j, Rig rig, std::size_t rows, std::size_t cols) {
    std::vector<RigValue> entries;
    for (const auto& e : j) entries.push_back(value_from_json(e, rig));
    return RigMatrix(rows, cols, std::move(entries));
}

inline json entries_to_json(const RigMatrix& m) {
    json es = json::array();
    for (const auto& v : m.entries()) es.push_back(value_to_json(v));
    return es;
}

// --- canonical forms ----------------------------------------------------------

inline json canonical_to_json(const CanonicalForm& cf) {
    json j;
    j["k"] = cf.k;
    json matching = json::array();
    for (const auto& p : cf.matching) {
        json row = json::array();
        row.push_back(p.a.side == 0 ? "dom" : "cod");
        row.push_back(p.a.index);
        row.push_back(p.b.side == 0 ? "dom" : "cod");
        row.push_back(p.b.index);
        row.push_back(p.fwd ? "fwd" : "rev");
        matching.push_back(row);
    }
    j["matching"] = matching;
    if (cf.loops_merged)
        j["loops"] = json{{"any", cf.any}};
    else
        j["loops"] = json{{"cw", cf.cw}, {"ccw", cf.ccw}};
    return j;
}

// --- reports ------------------------------------------------------------------

inline json report_to_json(const Report& rep) {
    json j;
    j["valid"] = rep.valid();
    json items = json::array();
    for (const auto& it : rep.items) {
        json e;
        e["name"] = it.name;
        e["pass"] = it.pass;
        e["required"] = it.required;
        if (!it.detail.empty()) e["detail"] = it.detail;
        items.push_back(e);
    }
    j["items"] = items;
    return j;
}

// --- Frobenius data and movies --------------------------------------------------

inline FrobeniusData frobenius_from_json(const json& j) {
    FrobeniusData fd;
    fd.rig = rig_from_name(j.at("rig").get<std::string>());
    fd.dim = j.at("dim").get<std::size_t>();
    fd.unit = matrix_from_json(j.at("unit"));
    fd.mult = matrix_from_json(j.at("mult"));
    fd.trace_cov = matrix_from_json(j.at("trace"));
    fd.copairing = matrix_from_json(j.at("copairing"));
    return fd;
}

inline json frobenius_to_json(const FrobeniusData& fd) {
    json j;
    j["rig"] = rig_name(fd.rig);
    j["dim"] = fd.dim;
    j["unit"] = matrix_to_json(fd.unit);
    j["mult"] = matrix_to_json(fd.mult);
    j["trace"] = matrix_to_json(fd.trace_cov);
    j["copairing"] = matrix_to_json(fd.copairing);
    return j;
}

inline Movie movie_from_json(const json& j) {
    Movie mv;
    mv.in_circles = j.at("in").get<std::size_t>();
    for (const auto& s : j.at("slices")) {
        std::string op = s.at("op").get<std::string>();
        std::size_t pos = s.at("pos").get<std::size_t>();
        SliceOp o;
        if (op == "birth") o = SliceOp::Birth;
        else if (op == "death") o = SliceOp::Death;
        else if (op == "merge") o = SliceOp::Merge;
        else if (op == "split") o = SliceOp::Split;
        else if (op == "swap") o = SliceOp::Swap;
        else throw io_error("unknown slice op: " + op);
        mv.slices.push_back({o, pos});
    }
    return mv;
}

inline json movie_to_json(const Movie& mv) {
    json j;
    j["in"] = mv.in_circles;
    json slices = json::array();
    for (const auto& s : mv.slices)
        slices.push_back(json{{"op", slice_op_name(s.op)}, {"pos", s.pos}});
    j["slices"] = slices;
    return j;
}

// --- evaluation data -------------------------------------------------------------

inline EvalDatum datum_from_json(const json& j) {
    EvalDatum ed;
    ed.rig = rig_from_name(j.at("rig").get<std::string>());
    ed.dim = j.at("dim").get<std::size_t>();
    ed.k = j.at("k").get<int>();
    std::size_t dd = ed.dim * ed.dim;
    ed.cup = vector_from_json(j.at("cup"), ed.rig, dd, 1);
    ed.cup_star = vector_from_json(j.at("cup_star"), ed.rig, dd, 1);
    ed.cap = vector_from_json(j.at("cap"), ed.rig, 1, dd);
    ed.cap_star = vector_from_json(j.at("cap_star"), ed.rig, 1, dd);
    if (j.contains("braid")) ed.braid_xx = matrix_from_json(j.at("braid"));
    if (j.contains("braid_xs")) ed.braid_xs = matrix_from_json(j.at("braid_xs"));
    if (j.contains("braid_sx")) ed.braid_sx = matrix_from_json(j.at("braid_sx"));
    if (j.contains("braid_ss")) ed.braid_ss = matrix_from_json(j.at("braid_ss"));
    return ed;
}

inline json datum_to_json(const EvalDatum& ed) {
    json j;
    j["rig"] = rig_name(ed.rig);
    j["dim"] = ed.dim;
    j["k"] = ed.k;
    j["cup"] = entries_to_json(ed.cup);
    j["cup_star"] = entries_to_json(ed.cup_star);
    j["cap"] = entries_to_json(ed.cap);
    j["cap_star"] = entries_to_json(ed.cap_star);
    if (ed.braid_xx) j["braid"] = matrix_to_json(*ed.braid_xx);
    if (ed.braid_xs) j["braid_xs"] = matrix_to_json(*ed.braid_xs);
    if (ed.braid_sx) j["braid_sx"] = matrix_to_json(*ed.braid_sx);
    if (ed.braid_ss) j["braid_ss"] = matrix_to_json(*ed.braid_ss);
    return j;
}

// --- finite structures --------------------------------------------------------

inline FiniteMonoid monoid_from_json(const json& j) {
    std::vector<std::string> elems = j.at("elems").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == name) return i;
        throw io_error("unknown monoid element: " + name);
    };
    std::size_t unit = index_of(j.at("unit").get<std::string>());
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : j.at("table")) {
        std::vector<std::size_t> r;
        for (const auto& cell : row) r.push_back(index_of(cell.get<std::string>()));
        table.push_back(std::move(r));
    }
    return FiniteMonoid::make(std::move(elems), unit, std::move(table));
}

inline json monoid_to_json(const FiniteMonoid& m) {
    json j;
    j["elems"] = m.elems;
    j["unit"] = m.elems[m.unit];
    json table = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < m.size(); ++jj) row.push_back(m.elems[m.mul(i, jj)]);
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

inline FiniteCategory category_from_json(const json& j) {
    std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
    auto oindex = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == name) return i;
        throw io_error("unknown object: " + name);
    };
    std::vector<FiniteCategory::Mor> mors;
    for (const auto& m : j.at("morphisms"))
        mors.push_back(FiniteCategory::Mor{m.at("id").get<std::string>(),
                                           oindex(m.at("dom").get<std::string>()),
                                           oindex(m.at("cod").get<std::string>())});
    auto mindex = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < mors.size(); ++i)
            if (mors[i].id == name) return i;
        throw io_error("unknown morphism: " + name);
    };
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : j.at("compose")) {
        std::vector<std::size_t> r;
        for (const auto& cell : row)
            r.push_back(cell.is_null() ? npos : mindex(cell.get<std::string>()));
        table.push_back(std::move(r));
    }
    std::vector<std::size_t> identities(objects.size(), npos);
    for (const auto& [obj, mor] : j.at("identities").items())
        identities[oindex(obj)] = mindex(mor.get<std::string>());
    return FiniteCategory::make(std::move(objects), std::move(mors), std::move(table),
                                std::move(identities));
}

inline json category_to_json(const FiniteCategory& c) {
    json j;
    j["objects"] = c.objects;
    json mors = json::array();
    for (const auto& m : c.morphisms)
        mors.push_back(json{{"id", m.id}, {"dom", c.objects[m.dom]}, {"cod", c.objects[m.cod]}});
    j["morphisms"] = mors;
    json table = json::array();
    for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
        json row = json::array();
        for (std::size_t g = 0; g < c.morphisms.size(); ++g) {
            std::size_t fg = c.compose(f, g);
            if (fg == npos)
                row.push_back(nullptr);
            else
                row.push_back(c.morphisms[fg].id);
        }
        table.push_back(row);
    }
    j["compose"] = table;
    json ids;
    for (std::size_t x = 0; x < c.objects.size(); ++x)
        ids[c.objects[x]] = c.morphisms[c.identities[x]].id;
    j["identities"] = ids;
    return j;
}

inline Finite2Category twocategory_from_json(const json& j) {
    Finite2Category tc;
    tc.objects = j.at("objects").get<std::vector<std::string>>();
    auto oindex = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < tc.objects.size(); ++i)
            if (tc.objects[i] == name) return i;
        throw io_error("unknown object: " + name);
    };
    for (const auto& m : j.at("morphisms"))
        tc.morphisms.push_back({m.at("id").get<std::string>(),
                                oindex(m.at("dom").get<std::string>()),
                                oindex(m.at("cod").get<std::string>())});
    auto mindex = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < tc.morphisms.size(); ++i)
            if (tc.morphisms[i].id == name) return i;
        throw io_error("unknown 1-morphism: " + name);
    };
    for (const auto& a : j.at("two_morphisms"))
        tc.two_morphisms.push_back({a.at("id").get<std::string>(),
                                    mindex(a.at("src").get<std::string>()),
                                    mindex(a.at("tgt").get<std::string>())});
    auto aindex = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < tc.two_morphisms.size(); ++i)
            if (tc.two_morphisms[i].id == name) return i;
        throw io_error("unknown 2-morphism: " + name);
    };
    for (const auto& [obj, mor] : j.at("identities").items()) {
        tc.identities.resize(tc.objects.size(), npos);
        tc.identities[oindex(obj)] = mindex(mor.get<std::string>());
    }
    tc.identities2.resize(tc.morphisms.size(), npos);
    for (const auto& [mor, two] : j.at("identities2").items())
        tc.identities2[mindex(mor)] = aindex(two.get<std::string>());
    auto read_table = [&](const json& rows) {
        std::vector<std::vector<std::size_t>> t;
        for (const auto& row : rows) {
            std::vector<std::size_t> r;
            for (const auto& cell : row)
                r.push_back(cell.is_null() ? npos : aindex(cell.get<std::string>()));
            t.push_back(std::move(r));
        }
        return t;
    };
    tc.vcompose = read_table(j.at("vcompose"));
    tc.hcompose = read_table(j.at("hcompose"));
    return Finite2Category::make(std::move(tc));
}

inline MonoidalAssocData pentagon_from_json(const json& j) {
    FiniteMonoid m = monoid_from_json(j.at("monoid"));
    std::vector<std::vector<std::vector<BigRat>>> assoc;
    for (const auto& plane : j.at("associator")) {
        std::vector<std::vector<BigRat>> p;
        for (const auto& row : plane) {
            std::vector<BigRat> r;
            for (const auto& cell : row) r.push_back(parse_rat(cell.get<std::string>()));
            p.push_back(std::move(r));
        }
        assoc.push_back(std::move(p));
    }
    return MonoidalAssocData::make(std::move(m), std::move(assoc));
}

struct EHInput {
    std::vector<std::string> elems;
    std::size_t unit;
    BinOp op1, op2;
};

inline EHInput eh_from_json(const json& j) {
    EHInput in;
    in.elems = j.at("elems").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < in.elems.size(); ++i)
            if (in.elems[i] == name) return i;
        throw io_error("unknown element: " + name);
    };
    in.unit = index_of(j.at("unit").get<std::string>());
    auto read_op = [&](const json& rows) {
        BinOp op;
        for (const auto& row : rows) {
            std::vector<std::size_t> r;
            for (const auto& cell : row) r.push_back(index_of(cell.get<std::string>()));
            op.table.push_back(std::move(r));
        }
        return op;
    };
    in.op1 = read_op(j.at("op1"));
    in.op2 = read_op(j.at("op2"));
    return in;
}

inline StarData star_from_json(const json& j) {
    StarData sd;
    sd.dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis")) sd.basis = j.at("basis").get<std::vector<std::string>>();
    sd.mult = matrix_from_json(j.at("mult"));
    sd.m1 = matrix_from_json(j.at("m1"));
    sd.m2 = matrix_from_json(j.at("m2"));
    return sd;
}

inline json star_to_json(const StarData& sd) {
    json j;
    j["dim"] = sd.dim;
    if (!sd.basis.empty()) j["basis"] = sd.basis;
    j["mult"] = matrix_to_json(sd.mult);
    j["m1"] = matrix_to_json(sd.m1);
    j["m2"] = matrix_to_json(sd.m2);
    return j;
}

// --- files ----------------------------------------------------------------------

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cobalt
