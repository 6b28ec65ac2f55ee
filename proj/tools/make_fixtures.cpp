// Regenerates the JSON fixtures under data/.  Run from the repository root:
//   build/tools/cobalt_fixtures data

#include "cobalt/json_io.hpp"

#include <iostream>
#include <string>

using namespace cobalt;

namespace {

void write(const std::string& dir, const std::string& name, const json& j) {
    save_json(dir + "/" + name, j);
    std::cout << "wrote " << dir << "/" << name << "\n";
}

json monoid_json(const FiniteMonoid& m) { return monoid_to_json(m); }

FiniteMonoid z2_monoid() { return FiniteMonoid::make({"e", "g"}, 0, {{0, 1}, {1, 0}}); }

FiniteMonoid z4_monoid() {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t[i][j] = (i + j) % 4;
    return FiniteMonoid::make({"0", "1", "2", "3"}, 0, t);
}

FiniteMonoid s3_monoid() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    auto find = [&](const std::array<int, 3>& p) -> std::size_t {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw table_error("not a permutation");
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int e = 0; e < 3; ++e) comp[e] = perms[j][perms[i][e]];
            table[i][j] = find(comp);
        }
    return FiniteMonoid::make(std::move(names), 0, std::move(table));
}

json twocat_json(const Finite2Category& tc) {
    json j;
    j["objects"] = tc.objects;
    json mors = json::array();
    for (const auto& m : tc.morphisms)
        mors.push_back(json{{"id", m.id}, {"dom", tc.objects[m.dom]}, {"cod", tc.objects[m.cod]}});
    j["morphisms"] = mors;
    json twos = json::array();
    for (const auto& a : tc.two_morphisms)
        twos.push_back(json{{"id", a.id},
                            {"src", tc.morphisms[a.src].id},
                            {"tgt", tc.morphisms[a.tgt].id}});
    j["two_morphisms"] = twos;
    json ids;
    for (std::size_t x = 0; x < tc.objects.size(); ++x)
        ids[tc.objects[x]] = tc.morphisms[tc.identities[x]].id;
    j["identities"] = ids;
    json ids2;
    for (std::size_t f = 0; f < tc.morphisms.size(); ++f)
        ids2[tc.morphisms[f].id] = tc.two_morphisms[tc.identities2[f]].id;
    j["identities2"] = ids2;
    auto table_json = [&](const std::vector<std::vector<std::size_t>>& t) {
        json rows = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (std::size_t v : row)
                r.push_back(v == npos ? json(nullptr) : json(tc.two_morphisms[v].id));
            rows.push_back(r);
        }
        return rows;
    };
    j["vcompose"] = table_json(tc.vcompose);
    j["hcompose"] = table_json(tc.hcompose);
    return j;
}

json pentagon_json(const MonoidalAssocData& mad) {
    json j;
    j["monoid"] = monoid_json(mad.objects);
    json planes = json::array();
    for (const auto& plane : mad.assoc) {
        json p = json::array();
        for (const auto& row : plane) {
            json r = json::array();
            for (const auto& v : row) r.push_back(RigValue::rat_str(v));
            p.push_back(r);
        }
        planes.push_back(p);
    }
    j["associator"] = planes;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";

    // Frobenius algebras.
    write(dir, "frobenius_trivial.json", frobenius_to_json(trivial_frobenius()));
    write(dir, "frobenius_z2.json", frobenius_to_json(cyclic_group_algebra(2)));
    write(dir, "frobenius_z3.json", frobenius_to_json(cyclic_group_algebra(3)));
    write(dir, "frobenius_qq.json", frobenius_to_json(product_field_algebra(2)));
    {
        FrobeniusData broken = cyclic_group_algebra(2);
        broken.mult.at(0, 0) = RigValue::of_int(2, broken.rig);
        write(dir, "frobenius_broken.json", frobenius_to_json(broken));
    }

    // Movies.
    {
        Movie sphere;
        sphere.in_circles = 0;
        sphere.slices = {{SliceOp::Birth, 0}, {SliceOp::Death, 0}};
        write(dir, "movie_sphere.json", movie_to_json(sphere));
        write(dir, "movie_torus.json", movie_to_json(surface_movie(1)));
        Movie pants;  // two circles merging into one
        pants.in_circles = 2;
        pants.slices = {{SliceOp::Merge, 0}};
        write(dir, "movie_pair_of_pants.json", movie_to_json(pants));
    }

    // Evaluation data.
    write(dir, "datum_k2_separating.json", datum_to_json(separating_datum_k2()));
    write(dir, "datum_k3_rational_d2.json", datum_to_json(standard_datum(2, Rig::rational, 3)));
    write(dir, "datum_k3_complex_d2.json",
          datum_to_json(standard_datum(2, Rig::complex_rational, 3)));

    // Monoids, categories, centers.
    write(dir, "monoid_z2.json", monoid_json(z2_monoid()));
    write(dir, "monoid_z4.json", monoid_json(z4_monoid()));
    write(dir, "monoid_s3.json", monoid_json(s3_monoid()));
    write(dir, "set2.json", json{{"elems", {"p", "q"}}});
    write(dir, "category_s3.json", category_to_json(FiniteCategory::from_monoid(s3_monoid())));

    // Exchange fixtures: a commutative monoid as 2-cells, and a broken one.
    write(dir, "twocat_z4.json", twocat_json(Finite2Category::from_monoid_2cell(z4_monoid())));
    {
        FiniteMonoid lz = FiniteMonoid::make({"e", "a", "b"}, 0,
                                             {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
        write(dir, "twocat_leftzero.json",
              twocat_json(Finite2Category::from_monoid_2cell(lz)));
    }

    // Naturality fixture: one-object category on Z/4, components = element 2
    // (central, passes) and a bad component file.
    {
        FiniteCategory c = FiniteCategory::from_monoid(z4_monoid());
        json j;
        j["c"] = category_to_json(c);
        j["d"] = category_to_json(c);
        json fo, fm;
        fo["*"] = "*";
        for (const auto& m : c.morphisms) fm[m.id] = m.id;
        j["F"] = json{{"objects", fo}, {"morphisms", fm}};
        j["G"] = json{{"objects", fo}, {"morphisms", fm}};
        j["alpha"] = json{{"*", "2"}};
        write(dir, "natural_center.json", j);
    }
    {
        FiniteCategory c = FiniteCategory::from_monoid(s3_monoid());
        json j;
        j["c"] = category_to_json(c);
        j["d"] = category_to_json(c);
        json fo, fm;
        fo["*"] = "*";
        for (const auto& m : c.morphisms) fm[m.id] = m.id;
        j["F"] = json{{"objects", fo}, {"morphisms", fm}};
        j["G"] = json{{"objects", fo}, {"morphisms", fm}};
        j["alpha"] = json{{"*", "120"}};  // a 3-cycle is not central
        write(dir, "natural_noncentral.json", j);
    }

    // Pentagon fixtures.
    write(dir, "pentagon_trivial.json",
          pentagon_json(MonoidalAssocData::trivial(z2_monoid())));
    {
        MonoidalAssocData coc = MonoidalAssocData::trivial(z2_monoid());
        coc.assoc[1][1][1] = -1;
        write(dir, "pentagon_z2_cocycle.json", pentagon_json(coc));
        MonoidalAssocData bad = coc;
        bad.assoc[0][1][1] = -1;
        write(dir, "pentagon_broken.json", pentagon_json(bad));
    }

    // Eckmann-Hilton fixtures.
    {
        json j;
        j["elems"] = {"0", "1"};
        j["unit"] = "0";
        j["op1"] = {{"0", "1"}, {"1", "0"}};
        j["op2"] = {{"0", "1"}, {"1", "0"}};
        write(dir, "eh_xor.json", j);
        json k;
        k["elems"] = {"e", "a", "b"};
        k["unit"] = "e";
        k["op1"] = {{"e", "a", "b"}, {"a", "a", "a"}, {"b", "b", "b"}};
        k["op2"] = {{"e", "a", "b"}, {"a", "a", "a"}, {"b", "b", "b"}};
        write(dir, "eh_leftzero.json", k);
    }

    // Star products: the derivative pair on the bare quotient (fails by
    // design, see the tests) and its weighted repair.
    write(dir, "star_moyal_truncated.json", star_to_json(truncated_poly_star()));
    write(dir, "star_weighted.json", star_to_json(truncated_poly_star(2, 0)));

    return 0;
}
