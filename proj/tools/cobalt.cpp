// Command-line front end: parse terms, load JSON data, dispatch to the
// library, print stable output.
//
// Exit codes: 0 = success / all checks pass, 1 = a checker found a violation
// (or equality answered distinct/unknown), 2 = usage, parse or I/O error.

#include "cobalt/equality.hpp"
#include "cobalt/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace cobalt;

constexpr int kExitOk = 0;
constexpr int kExitChecked = 1;
constexpr int kExitUsage = 2;

void print_matrix(const RigMatrix& m, bool as_json) {
    if (as_json) {
        std::cout << matrix_to_json(m).dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " ";
            std::cout << m.at(i, j).str();
        }
        std::cout << "\n";
    }
}

void print_report(const Report& rep, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return;
    }
    for (const auto& it : rep.items) {
        std::cout << (it.pass ? "PASS " : "FAIL ") << it.name;
        if (!it.required) std::cout << " (informational)";
        if (!it.detail.empty()) std::cout << ": " << it.detail;
        std::cout << "\n";
    }
    std::cout << (rep.valid() ? "valid" : "invalid") << "\n";
}

void print_canonical(const CanonicalForm& cf, bool as_json) {
    if (as_json) {
        std::cout << canonical_to_json(cf).dump(2) << "\n";
        return;
    }
    std::cout << "k=" << cf.k << " matching:";
    if (cf.matching.empty()) std::cout << " (none)";
    for (const auto& p : cf.matching)
        std::cout << " " << (p.a.side == 0 ? "dom" : "cod") << p.a.index << "-"
                  << (p.b.side == 0 ? "dom" : "cod") << p.b.index << (p.fwd ? "(fwd)" : "(rev)");
    if (cf.loops_merged)
        std::cout << " loops: any=" << cf.any;
    else
        std::cout << " loops: cw=" << cf.cw << " ccw=" << cf.ccw;
    std::cout << "\n";
}

int cmd_normalize(int k, int n, const std::string& text, bool as_json) {
    if (n == 0) {
        C0Word w = normalize_c0(parse_c0_word(text), Level::of(k, 0));
        if (as_json) {
            json j;
            j["k"] = w.k;
            if (w.k <= 1)
                j["word"] = word_str(w.word);
            else {
                j["x"] = w.n;
                j["x_star"] = w.m;
            }
            std::cout << j.dump(2) << "\n";
        } else if (w.k <= 1) {
            std::cout << word_str(w.word) << "\n";
        } else {
            std::cout << "x^" << w.n << " x*^" << w.m << "\n";
        }
        return kExitOk;
    }
    Term t = parse_term(text);
    print_canonical(canonical_form(t, Level::of(k)), as_json);
    return kExitOk;
}

int cmd_equal(int k, const std::string& lhs, const std::string& rhs, std::size_t budget,
              bool as_json) {
    EqualOptions opts;
    opts.budget = budget;
    EqVerdict v = equal(parse_term(lhs), parse_term(rhs), Level::of(k), opts);
    if (as_json)
        std::cout << json{{"verdict", verdict_name(v)}}.dump(2) << "\n";
    else
        std::cout << verdict_name(v) << "\n";
    return v == EqVerdict::equal ? kExitOk : kExitChecked;
}

int cmd_eval(const std::string& datum_path, const std::string& text, bool as_json) {
    EvalDatum ed = datum_from_json(load_json(datum_path));
    Report rep = validate_datum(ed);
    if (!rep.valid()) {
        std::cerr << "datum is invalid:\n";
        print_report(rep, false);
        return kExitChecked;
    }
    print_matrix(eval_term(parse_term(text), ed), as_json);
    return kExitOk;
}

int cmd_surface(std::size_t genus, const std::string& algebra_path, bool as_json) {
    FrobeniusData fd = frobenius_from_json(load_json(algebra_path));
    Report rep = validate_frobenius(fd);
    if (!rep.valid()) {
        std::cerr << "algebra is invalid:\n";
        print_report(rep, false);
        return kExitChecked;
    }
    RigValue v = surface_invariant(genus, fd);
    if (as_json)
        std::cout << json{{"genus", genus}, {"value", value_to_json(v)}}.dump(2) << "\n";
    else
        std::cout << v.str() << "\n";
    return kExitOk;
}

int cmd_movie(const std::string& movie_path, const std::string& algebra_path, bool as_json) {
    FrobeniusData fd = frobenius_from_json(load_json(algebra_path));
    Report rep = validate_frobenius(fd);
    if (!rep.valid()) {
        std::cerr << "algebra is invalid:\n";
        print_report(rep, false);
        return kExitChecked;
    }
    Movie mv = movie_from_json(load_json(movie_path));
    print_matrix(eval_movie(mv, fd), as_json);
    return kExitOk;
}

int cmd_check(const std::string& what, const std::vector<std::string>& paths, bool as_json) {
    Report rep;
    if (what == "frobenius") {
        rep = validate_frobenius(frobenius_from_json(load_json(paths.at(0))));
    } else if (what == "datum") {
        rep = validate_datum(datum_from_json(load_json(paths.at(0))));
    } else if (what == "moves") {
        FrobeniusData fd = frobenius_from_json(load_json(paths.at(0)));
        Report vr = validate_frobenius(fd);
        if (!vr.valid()) {
            print_report(vr, as_json);
            return kExitChecked;
        }
        rep = check_movie_moves(fd);
    } else if (what == "pentagon") {
        rep = check_pentagon(pentagon_from_json(load_json(paths.at(0))));
    } else if (what == "exchange") {
        rep = check_exchange(twocategory_from_json(load_json(paths.at(0))));
    } else if (what == "natural") {
        json j = load_json(paths.at(0));
        FiniteCategory c = category_from_json(j.at("c"));
        FiniteCategory d = category_from_json(j.at("d"));
        auto read_functor = [&](const json& jf) {
            FunctorTable F;
            F.on_objects.resize(c.objects.size());
            for (const auto& [from, to] : jf.at("objects").items())
                F.on_objects[*c.obj_index(from)] = *d.obj_index(to.get<std::string>());
            F.on_morphisms.resize(c.morphisms.size());
            for (const auto& [from, to] : jf.at("morphisms").items())
                F.on_morphisms[*c.mor_index(from)] = *d.mor_index(to.get<std::string>());
            return F;
        };
        FunctorTable F = read_functor(j.at("F"));
        FunctorTable G = read_functor(j.at("G"));
        std::vector<std::size_t> alpha(c.objects.size());
        for (const auto& [obj, mor] : j.at("alpha").items())
            alpha[*c.obj_index(obj)] = *d.mor_index(mor.get<std::string>());
        rep = check_natural(c, d, F, G, alpha);
    } else if (what == "star") {
        rep = star_check(star_from_json(load_json(paths.at(0))));
    } else {
        std::cerr << "unknown check: " << what << "\n";
        return kExitUsage;
    }
    print_report(rep, as_json);
    return rep.valid() ? kExitOk : kExitChecked;
}

int cmd_center(const std::string& kind, const std::string& path, bool as_json) {
    FiniteMonoid z;
    if (kind == "set") {
        json j = load_json(path);
        z = center_of_set(j.at("elems").get<std::vector<std::string>>());
    } else if (kind == "monoid") {
        z = center_of_monoid(monoid_from_json(load_json(path)));
    } else if (kind == "category") {
        z = center_of_category(category_from_json(load_json(path)));
    } else {
        std::cerr << "unknown center kind: " << kind << "\n";
        return kExitUsage;
    }
    if (as_json) {
        std::cout << monoid_to_json(z).dump(2) << "\n";
    } else {
        std::cout << "order " << z.size() << ":";
        for (const auto& e : z.elems) std::cout << " " << e;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_suspend(const std::vector<std::string>& letters, bool as_json) {
    FreeWord w = free_monoid_normalize(letters);
    auto ab = abelianize(w);
    if (as_json) {
        json j;
        j["word"] = w;
        json counts;
        for (const auto& [l, n] : ab) counts[l] = n;
        j["abelianized"] = counts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word:";
        for (const auto& l : w) std::cout << " " << l;
        std::cout << "\nabelianized:";
        for (const auto& [l, n] : ab) std::cout << " " << l << ":" << n;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_eh(const std::string& path, bool as_json) {
    EHInput in = eh_from_json(load_json(path));
    EHVerdict v = eckmann_hilton(in.elems.size(), in.op1, in.op2, in.unit);
    const char* status = v.status == EHVerdict::ok ? "ok"
                         : v.status == EHVerdict::precondition_failed ? "precondition_failed"
                                                                      : "interchange_failed";
    if (as_json) {
        json j;
        j["status"] = status;
        if (!v.detail.empty()) j["detail"] = v.detail;
        if (v.status == EHVerdict::ok) {
            j["ops_equal"] = v.ops_equal;
            j["commutative"] = v.commutative;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << status;
        if (!v.detail.empty()) std::cout << ": " << v.detail;
        if (v.status == EHVerdict::ok) std::cout << " (operations equal and commutative)";
        std::cout << "\n";
    }
    return v.status == EHVerdict::ok ? kExitOk : kExitChecked;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for low-dimensional monoidal structures and 2d field theories"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // normalize
    auto* nrm = app.add_subcommand("normalize", "canonical form of a term");
    int nrm_k = 1, nrm_n = 1;
    std::string nrm_term;
    nrm->add_option("--k", nrm_k, "monoidal level")->required();
    nrm->add_option("--n", nrm_n, "0 for object words, 1 for morphism terms");
    nrm->add_option("term", nrm_term, "term text (or object word at n=0)")->required();

    // equal
    auto* eq = app.add_subcommand("equal", "decide equality of two terms");
    int eq_k = 1;
    std::size_t eq_budget = 10000;
    std::string eq_lhs, eq_rhs;
    eq->add_option("--k", eq_k)->required();
    eq->add_option("--budget", eq_budget, "rewrite budget for k=2");
    eq->add_option("lhs", eq_lhs)->required();
    eq->add_option("rhs", eq_rhs)->required();

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a term under a datum");
    std::string ev_datum, ev_term;
    ev->add_option("--datum", ev_datum)->required();
    ev->add_option("term", ev_term)->required();

    // surface
    auto* sf = app.add_subcommand("surface", "closed surface invariant");
    std::size_t sf_genus = 0;
    std::string sf_algebra;
    sf->add_option("--genus", sf_genus)->required();
    sf->add_option("--algebra", sf_algebra)->required();

    // movie
    auto* mvc = app.add_subcommand("movie", "evaluate a movie");
    std::string mv_movie, mv_algebra;
    mvc->add_option("--movie", mv_movie)->required();
    mvc->add_option("--algebra", mv_algebra)->required();

    // check
    auto* ck = app.add_subcommand("check", "run a validator");
    std::string ck_what;
    std::vector<std::string> ck_paths;
    ck->add_option("what", ck_what, "frobenius|datum|moves|pentagon|exchange|natural|star")
        ->required();
    ck->add_option("paths", ck_paths)->required();

    // center
    auto* ct = app.add_subcommand("center", "generalized center");
    std::string ct_kind, ct_path;
    ct->add_option("--kind", ct_kind, "set|monoid|category")->required();
    ct->add_option("path", ct_path)->required();

    // suspend
    auto* sp = app.add_subcommand("suspend", "free monoid word and its abelianization");
    std::vector<std::string> sp_words;
    sp->add_option("words", sp_words)->required();

    // eckmann-hilton
    auto* eh = app.add_subcommand("eckmann-hilton", "two unital operations with interchange");
    std::string eh_path;
    eh->add_option("path", eh_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (nrm->parsed()) return cmd_normalize(nrm_k, nrm_n, nrm_term, as_json);
        if (eq->parsed()) return cmd_equal(eq_k, eq_lhs, eq_rhs, eq_budget, as_json);
        if (ev->parsed()) return cmd_eval(ev_datum, ev_term, as_json);
        if (sf->parsed()) return cmd_surface(sf_genus, sf_algebra, as_json);
        if (mvc->parsed()) return cmd_movie(mv_movie, mv_algebra, as_json);
        if (ck->parsed()) return cmd_check(ck_what, ck_paths, as_json);
        if (ct->parsed()) return cmd_center(ct_kind, ct_path, as_json);
        if (sp->parsed()) return cmd_suspend(sp_words, as_json);
        if (eh->parsed()) return cmd_eh(eh_path, as_json);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const canonical_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
