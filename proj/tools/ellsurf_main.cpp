#include <CLI11.hpp>
#include <json.hpp>

#include "ellsurf/lattice.hpp"
#include "ellsurf/octahedral.hpp"
#include "ellsurf/pencil.hpp"
#include "ellsurf/weierstrass.hpp"

#include <chrono>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace ellsurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Output {
    std::string format = "json";
    bool meta = false;

    void emit(const json& data, const std::string& text) const {
        if (format == "json")
            std::cout << data.dump(2) << "\n";
        else
            std::cout << text;
        if (meta) {
            auto now = std::chrono::system_clock::now().time_since_epoch();
            json m{{"meta",
                    {{"unix_millis",
                      std::chrono::duration_cast<std::chrono::milliseconds>(now).count()}}}};
            std::cout << m.dump() << "\n";
        }
    }
};

json fiber_to_json(const FiberRecord& f) {
    return json{{"position", {f.position.first.str(), f.position.second.str()}},
                {"type", f.type.name()},
                {"orders", {f.orders[0], f.orders[1], f.orders[2]}},
                {"j_class", f.j.str()},
                {"e_p", f.ep.value},
                {"e_p_exact", f.ep.exact}};
}

std::vector<long long> parse_index(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty()) throw ParseError("empty component in index list");
        long long value;
        try {
            value = std::stoll(piece);
        } catch (const std::exception&) {
            throw ParseError("bad integer in index list: " + piece);
        }
        // keeps every machine-integer intermediate of the lattice code exact
        if (value < -10000 || value > 10000)
            throw std::domain_error("section index out of supported range [-10000, 10000]");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != 3) throw ParseError("expected three comma-separated integers");
    return out;
}

json class_to_json(const DivisorClass& d) {
    json arr = json::array();
    for (long long v : d.c) arr.push_back(v);
    return arr;
}

int run_classify(const Output& out, const std::string& a_text, const std::string& b_text,
                 const std::string& alpha_text, const std::string& beta_text) {
    bool have_ab = !a_text.empty() || !b_text.empty();
    bool have_cover = !alpha_text.empty() || !beta_text.empty();
    if (have_ab == have_cover)
        throw std::domain_error("specify either --a/--b or --alpha/--beta");
    json data;
    std::vector<FiberRecord> fibers;
    K a, b;
    if (have_cover) {
        K alpha = K::parse(alpha_text.empty() ? "0" : alpha_text);
        K beta = K::parse(beta_text.empty() ? "0" : beta_text);
        std::map<Var, K> pt{{Var::alpha, alpha}, {Var::beta, beta}};
        if (alpha.is_zero() && beta.is_zero()) throw DegenerateParameter();
        a = invariants::E().eval(pt).pow(2);
        b = invariants::F().eval(pt).pow(3);
        data["params"] = {{"alpha", alpha.str()}, {"beta", beta.str()},
                          {"a", a.str()},         {"b", b.str()}};
    } else {
        a = K::parse(a_text.empty() ? "0" : a_text);
        b = K::parse(b_text.empty() ? "0" : b_text);
        data["params"] = {{"a", a.str()}, {"b", b.str()}};
    }
    fibers = fiber_configuration(a, b);
    data["J0"] = a.is_zero() ? std::string("inf") : (b / a).str();
    data["fibers"] = json::array();
    std::string text = "fibers for (a : b) = (" + a.str() + " : " + b.str() + ")\n";
    for (const auto& f : fibers) {
        data["fibers"].push_back(fiber_to_json(f));
        text += "  " + f.type.name() + " at (" + f.position.first.str() + " : " +
                f.position.second.str() + ")  orders (" + std::to_string(f.orders[0]) + "," +
                std::to_string(f.orders[1]) + "," + std::to_string(f.orders[2]) + ")  J = " +
                f.j.str() + "\n";
    }
    out.emit(data, text);
    return kExitOk;
}

int run_fibers(const Output& out, const std::string& which) {
    ConfigCase c;
    if (which == "generic")
        c = ConfigCase::generic;
    else if (which == "e0")
        c = ConfigCase::e_zero;
    else if (which == "f0")
        c = ConfigCase::f_zero;
    else if (which == "v0")
        c = ConfigCase::v_zero;
    else
        throw std::domain_error("unknown case: " + which);
    auto r = shioda_tate_report(c);
    json data{{"case", which},
              {"configuration", r.configuration},
              {"L", {{"type", r.l_type}, {"rank", r.l_rank}}},
              {"MW", {{"rank", r.mw_rank}, {"lattice", r.mw_lattice}}},
              {"oguiso_shioda_number", r.oguiso_shioda_number}};
    std::string text = r.configuration + std::string(": L = ") + r.l_type + " (rank " +
                       std::to_string(r.l_rank) + "), MW rank " + std::to_string(r.mw_rank) +
                       ", lattice " + r.mw_lattice + ", No. " +
                       std::to_string(r.oguiso_shioda_number) + "\n";
    out.emit(data, text);
    return kExitOk;
}

int run_section(const Output& out, const std::string& n_text) {
    auto n = parse_index(n_text);
    SectionIndex idx{n[0], n[1], n[2]};
    DivisorClass s = section_class(idx);
    FiberMeeting fm = fiber_intersections(idx);
    auto proj = mw_project(s);
    json data{{"n", {idx.n1, idx.n2, idx.n3}},
              {"class", class_to_json(s)},
              {"class_text", s.str()},
              {"numerical", is_numerical_section(s)},
              {"intersections",
               {{"u0", fm.u0},
                {"u1", fm.u1},
                {"v0", fm.v[0]},
                {"v1", fm.v[1]},
                {"v2", fm.v[2]},
                {"v3", fm.v[3]},
                {"v4", fm.v4}}},
              {"projection", {K(proj[0]).str(), K(proj[1]).str(), K(proj[2]).str()}},
              {"height", K(height_pairing(idx, idx)).str()}};
    std::string text = "section (" + std::to_string(idx.n1) + "," + std::to_string(idx.n2) +
                       "," + std::to_string(idx.n3) + ") = " + s.str() + "\n";
    out.emit(data, text);
    return kExitOk;
}

int run_mw_add(const Output& out, const std::string& lhs_text, const std::string& rhs_text) {
    auto ln = parse_index(lhs_text);
    auto rn = parse_index(rhs_text);
    SectionIndex lx{ln[0], ln[1], ln[2]}, rx{rn[0], rn[1], rn[2]};
    DivisorClass sum = mw_add(section_class(lx), section_class(rx));
    SectionIndex ix = lx + rx;
    DivisorClass canonical = section_class(ix);
    DivisorClass deviation = sum - canonical;
    static const char* names[6] = {"f", "u1", "v1", "v2", "v3", "v4"};
    std::vector<DivisorClass> gens;
    for (const char* g : names) gens.push_back(named_class(g));
    auto sol = solve_in_span(gens, deviation);
    if (!sol) throw std::logic_error("sum deviates from the fiber-component span");
    json coeffs;
    for (int k = 0; k < 6; ++k) {
        if (denominator((*sol)[k]) != 1)
            throw std::logic_error("non-integral fiber-span certificate");
        coeffs[names[k]] = (*sol)[k].convert_to<long long>();
    }
    json data{{"lhs", {lx.n1, lx.n2, lx.n3}},
              {"rhs", {rx.n1, rx.n2, rx.n3}},
              {"sum_index", {ix.n1, ix.n2, ix.n3}},
              {"sum_class", class_to_json(sum)},
              {"canonical_class", class_to_json(canonical)},
              {"deviation", coeffs}};
    std::string text = "sum class " + sum.str() + "\ncanonical " + canonical.str() + "\n";
    out.emit(data, text);
    return kExitOk;
}

int run_molien(const Output& out, const std::string& group, int degree) {
    Subgroup g;
    if (group == "quaternion")
        g = Subgroup::quaternion;
    else if (group == "tetrahedral")
        g = Subgroup::tetrahedral;
    else if (group == "octahedral")
        g = Subgroup::octahedral;
    else
        throw std::domain_error("unknown group: " + group);
    if (degree < 0) throw std::domain_error("degree must be non-negative");
    auto coeffs = molien_series(g, degree);
    json arr = json::array();
    std::string text = "Molien coefficients for " + group + ":";
    for (const Rat& c : coeffs) {
        arr.push_back(c.convert_to<long long>());
        text += " " + K(c).str();
    }
    text += "\n";
    json data{{"group", group}, {"degree", degree}, {"coefficients", arr}};
    out.emit(data, text);
    return kExitOk;
}

int run_group_table(const Output& out) {
    const auto& reps = octahedral_coset_reps();
    json rows = json::array();
    std::string text;
    for (size_t k = 0; k < reps.size(); ++k) {
        SignedPerm sp = action_signature(reps[k]);
        json images = json::array(), signs = json::array();
        for (int t = 0; t < 3; ++t) {
            images.push_back(sp.image[t] + 1);
            signs.push_back(sp.sign[t]);
        }
        json matrix = json::array({json::array({reps[k].a.str(), reps[k].b.str()}),
                                   json::array({reps[k].c.str(), reps[k].d.str()})});
        rows.push_back({{"index", k + 1},
                        {"matrix", matrix},
                        {"images", images},
                        {"signs", signs},
                        {"signature", sp.str()}});
        text += std::to_string(k + 1) + ": " + sp.str() + "\n";
    }
    json data{{"rows", rows}};
    out.emit(data, text);
    return kExitOk;
}

int run_verify(const Output& out, const std::string& suite) {
    std::vector<Check> checks;
    if (suite == "sections")
        checks = verify_sections_suite();
    else if (suite == "fibergroups")
        checks = verify_fibergroups_suite();
    else if (suite == "modulus")
        checks = verify_modulus_suite();
    else if (suite == "all")
        checks = verify_all();
    else
        throw std::domain_error("unknown suite: " + suite);
    int failed = 0;
    json arr = json::array();
    std::string text;
    for (const Check& c : checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) {
            ++failed;
            entry["detail"] = c.detail;
        }
        arr.push_back(entry);
        text += std::string(c.pass ? "pass  " : "FAIL  ") + c.name + "\n";
    }
    json data{{"suite", suite},
              {"total", checks.size()},
              {"failed", failed},
              {"pass", failed == 0},
              {"checks", arr}};
    out.emit(data, text);
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run_eval_section(const Output& out, const std::string& alpha_text,
                     const std::string& beta_text, const std::string& s_text,
                     const std::string& t_text, const std::string& pair, const std::string& sign) {
    if (pair.size() != 2 || pair[0] < '1' || pair[0] > '3' || pair[1] < '1' || pair[1] > '3' ||
        pair[0] >= pair[1])
        throw std::domain_error("--pair must be one of 12, 13, 23");
    if (sign != "+" && sign != "-") throw std::domain_error("--sign must be + or -");
    K alpha = K::parse(alpha_text), beta = K::parse(beta_text);
    K s = K::parse(s_text), t = K::parse(t_text);
    auto p = eval_section(alpha, beta, s, t, pair[0] - '0', pair[1] - '0',
                          sign == "+" ? 1 : -1);
    json data{{"pair", pair},
              {"sign", sign},
              {"point", {p[0].str(), p[1].str(), p[2].str()}}};
    std::string text =
        "(" + p[0].str() + " : " + p[1].str() + " : " + p[2].str() + ")\n";
    out.emit(data, text);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact models, sections, and invariants of rational elliptic surfaces "
                 "with degree-one J-invariant"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--meta", out.meta, "append a metadata line after the payload");

    std::string a_text, b_text, alpha_text, beta_text;
    auto* classify = app.add_subcommand("classify", "classify the singular fibers of a member")->fallthrough();
    classify->add_option("--a", a_text, "family parameter a (exact field element)");
    classify->add_option("--b", b_text, "family parameter b");
    classify->add_option("--alpha", alpha_text, "octahedral cover parameter alpha");
    classify->add_option("--beta", beta_text, "octahedral cover parameter beta");

    std::string case_text = "generic";
    auto* fibers = app.add_subcommand("fibers", "configuration and Mordell-Weil report")->fallthrough();
    fibers->add_option("--case", case_text, "generic | e0 | f0 | v0")
        ->capture_default_str();

    std::string n_text;
    auto* section = app.add_subcommand("section", "divisor class of a section index")->fallthrough();
    section->add_option("--n", n_text, "comma-separated n1,n2,n3")->required();

    std::string mw_lhs, mw_rhs;
    auto* mw = app.add_subcommand("mw", "Mordell-Weil addition with fiber-span certificate")->fallthrough();
    mw->add_option("--add", mw_lhs, "left index n1,n2,n3")->required();
    mw->add_option("rhs", mw_rhs, "right index n1,n2,n3")->required();

    std::string group_text = "octahedral";
    int degree = 24;
    auto* molien = app.add_subcommand("molien", "Molien series coefficients")->fallthrough();
    molien->add_option("--group", group_text, "quaternion | tetrahedral | octahedral")
        ->capture_default_str();
    molien->add_option("--degree", degree, "top degree")->capture_default_str();

    auto* table = app.add_subcommand("group-table", "signed permutation table of the action")->fallthrough();

    std::string suite_text = "all";
    auto* verify = app.add_subcommand("verify", "run the symbolic identity suites")->fallthrough();
    verify->add_option("--suite", suite_text, "sections | fibergroups | modulus | all")
        ->capture_default_str();

    std::string es_alpha, es_beta, es_s, es_t, es_pair = "12", es_sign = "+";
    auto* evalsec = app.add_subcommand("eval-section", "exact Weierstrass point of a generator")->fallthrough();
    evalsec->add_option("--alpha", es_alpha)->required();
    evalsec->add_option("--beta", es_beta)->required();
    evalsec->add_option("--s", es_s)->required();
    evalsec->add_option("--t", es_t)->required();
    evalsec->add_option("--pair", es_pair, "12 | 13 | 23")->capture_default_str();
    evalsec->add_option("--sign", es_sign, "+ | -")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (*classify) return run_classify(out, a_text, b_text, alpha_text, beta_text);
        if (*fibers) return run_fibers(out, case_text);
        if (*section) return run_section(out, n_text);
        if (*mw) return run_mw_add(out, mw_lhs, mw_rhs);
        if (*molien) return run_molien(out, group_text, degree);
        if (*table) return run_group_table(out);
        if (*verify) return run_verify(out, suite_text);
        if (*evalsec)
            return run_eval_section(out, es_alpha, es_beta, es_s, es_t, es_pair, es_sign);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
