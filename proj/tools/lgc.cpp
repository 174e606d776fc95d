// Command-line front end: tables, JSON, and DOT output for the component,
// diagram, Serre-weight, cycle, group-algebra, and phi-gamma calculators.
#include "CLI11.hpp"
#include "json.hpp"

#include "lgc/conjugacy.hpp"
#include "lgc/cycles.hpp"
#include "lgc/fq.hpp"
#include "lgc/isotypic.hpp"
#include "lgc/phigamma.hpp"
#include "lgc/serre.hpp"
#include "lgc/weyl.hpp"

#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct Validation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdentityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

lgc::StdParabolic parse_parabolic(int n, const std::vector<int>& levi, bool borel) {
    if (borel && !levi.empty()) throw Validation("choose either --levi or --borel");
    if (borel) return lgc::StdParabolic::borel(n);
    if (levi.empty()) return lgc::StdParabolic::full(n);
    int total = 0;
    for (int b : levi) total += b;
    if (total != n) throw Validation("block sizes must sum to n");
    return lgc::StdParabolic::from_blocks(levi);
}

std::string fnv1a(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "v" << std::hex << h;
    return os.str();
}

std::string bs_str(const std::vector<lgc::Int>& bs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < bs.size(); ++i) os << (i ? "," : "") << bs[i];
    return os.str();
}

int cmd_pc_table(int n, int f, const lgc::StdParabolic& P, const std::string& format) {
    auto sys = lgc::build_system(n, f);
    auto comps = lgc::components(sys, P);
    json out;
    out["schema"] = "lgc/1";
    out["n"] = n;
    out["f"] = f;
    json rows = json::array();
    for (const auto& C : comps) {
        auto pc = lgc::parabolic_of(C);
        json row;
        row["zchar"] = bs_str(C.blocksums);
        row["dim"] = C.dim.str();
        row["lambda_prime"] = lgc::to_string(pc.lambda_prime);
        std::vector<std::string> ws;
        for (const auto& w : pc.W) ws.push_back(lgc::to_string(w));
        row["W"] = ws;
        std::vector<int> simple(pc.PC.simple.begin(), pc.PC.simple.end());
        row["PC_simple"] = simple;
        row["PC_blocks"] = pc.PC.blocks;
        rows.push_back(row);
    }
    out["components"] = rows;
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "zchar | dim | lambda' | P(C) blocks | W(C)\n";
    for (const auto& row : rows) {
        std::cout << row["zchar"].get<std::string>() << " | " << row["dim"].get<std::string>()
                  << " | " << row["lambda_prime"].get<std::string>() << " | ";
        auto blocks = row["PC_blocks"].get<std::vector<int>>();
        for (std::size_t i = 0; i < blocks.size(); ++i) std::cout << (i ? "," : "") << blocks[i];
        std::cout << " |";
        for (const auto& w : row["W"]) std::cout << " " << w.get<std::string>();
        std::cout << "\n";
    }
    return 0;
}

int cmd_diagram(int n, int f, const lgc::StdParabolic& P, const std::set<lgc::Root>& X,
                const std::string& format) {
    lgc::validate(P, X);
    auto sys = lgc::build_system(n, f);
    auto g = lgc::good_lattice(sys, P, X);
    if (format == "dot") {
        std::cout << "digraph constituents {\n";
        for (const auto& v : g.vertices) {
            std::cout << "  " << fnv1a(bs_str(v.blocksums)) << " [label=\"" << bs_str(v.blocksums)
                      << " " << v.tag << "\"];\n";
        }
        for (auto [u, v] : g.edges)
            std::cout << "  " << fnv1a(bs_str(g.vertices[u].blocksums)) << " -> "
                      << fnv1a(bs_str(g.vertices[v].blocksums)) << ";\n";
        std::cout << "}\n";
        return 0;
    }
    json out;
    out["schema"] = "lgc/1";
    out["n"] = n;
    out["f"] = f;
    json vs = json::array();
    for (const auto& v : g.vertices) {
        json jv;
        jv["zchar"] = bs_str(v.blocksums);
        jv["dim"] = v.dim.str();
        jv["blocks"] = v.levi_blocks;
        std::vector<std::string> tw;
        for (const auto& t : v.twists) tw.push_back(t.str());
        jv["twists"] = tw;
        jv["tag"] = v.tag;
        jv["socle"] = v.socle;
        vs.push_back(jv);
    }
    out["vertices"] = vs;
    json es = json::array();
    for (auto [u, v] : g.edges) es.push_back({u, v});
    out["edges"] = es;
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " covering edges\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        std::cout << i << ": (" << bs_str(v.blocksums) << ") " << v.tag
                  << (v.socle ? " socle" : "") << "\n";
    }
    for (auto [u, v] : g.edges) std::cout << u << " -> " << v << "\n";
    return 0;
}

lgc::RhoKind parse_kind(const std::string& kind, int f, long p, const std::vector<int>& jrho) {
    lgc::RhoKind k;
    k.f = f;
    k.p = p;
    if (kind == "split")
        k.kind = lgc::Kind::Split;
    else if (kind == "irred" || kind == "irreducible")
        k.kind = lgc::Kind::Irreducible;
    else if (kind == "nonsplit")
        k.kind = lgc::Kind::Nonsplit;
    else
        throw Validation("unknown kind: " + kind);
    for (int j : jrho) {
        if (j < 0 || j >= f) throw Validation("--jrho index out of range");
        k.Jrho.insert(j);
    }
    return k;
}

int cmd_serre(const lgc::RhoKind& k, const std::string& format) {
    auto D = lgc::build_D(k);
    auto P = lgc::build_P(k);
    json out;
    out["schema"] = "lgc/1";
    out["f"] = k.f;
    out["p"] = k.p;
    json jd = json::array();
    for (const auto& d : D) {
        json r;
        r["J"] = std::vector<int>(d.J.begin(), d.J.end());
        r["forms"] = lgc::to_string(d.t);
        r["ell"] = lgc::length_of(d.t, k);
        jd.push_back(r);
    }
    out["D"] = jd;
    json jp = json::array();
    for (const auto& t : P) {
        json r;
        r["forms"] = lgc::to_string(t);
        auto a = lgc::ideal_of(t, k);
        r["ideal"] = lgc::to_string(a);
        auto A = lgc::yz_positions(a);
        r["A"] = std::vector<int>(A.begin(), A.end());
        jp.push_back(r);
    }
    out["P"] = jp;
    if (k.kind != lgc::Kind::Nonsplit) {
        json jo = json::array();
        for (const auto& orb : lgc::delta_orbits(k)) {
            json r;
            json cyc = json::array();
            for (const auto& J : orb.Js) cyc.push_back(std::vector<int>(J.begin(), J.end()));
            r["cycle"] = cyc;
            r["m"] = orb.m;
            r["s"] = orb.s;
            jo.push_back(r);
        }
        out["orbits"] = jo;
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "D (" << jd.size() << "):\n";
    for (const auto& r : jd)
        std::cout << "  " << r["forms"].get<std::string>() << "  ell=" << r["ell"] << "\n";
    std::cout << "P (" << jp.size() << "):\n";
    for (const auto& r : jp)
        std::cout << "  " << r["forms"].get<std::string>() << "  " << r["ideal"].get<std::string>()
                  << "\n";
    if (out.contains("orbits")) {
        std::cout << "orbits:\n";
        for (const auto& r : out["orbits"])
            std::cout << "  m=" << r["m"] << " s=" << r["s"].dump() << "\n";
    }
    return 0;
}

int cmd_cycles(const lgc::RhoKind& k, const std::string& format) {
    auto P = lgc::build_P(k);
    long total = 0, at_p0 = 0;
    json rows = json::array();
    for (const auto& t : P) {
        auto a = lgc::ideal_of(t, k);
        lgc::MonModule M;
        M.f = k.f;
        M.pieces[a] = 1;
        auto cyc = lgc::char_cycle(M);
        long mass = 0;
        for (const auto& [q, m] : cyc) mass += m;
        long expect = 1L << lgc::yz_positions(a).size();
        if (mass != expect) throw IdentityFailure("cycle mass mismatch");
        total += mass;
        at_p0 += lgc::mult_at(M, lgc::MinPrime{});
        json r;
        r["forms"] = lgc::to_string(t);
        r["mass"] = mass;
        rows.push_back(r);
    }
    long fourf = 1;
    for (int i = 0; i < k.f; ++i) fourf *= 4;
    if (total != fourf) throw IdentityFailure("total cycle mass != 4^f");
    if (at_p0 != (1L << k.f)) throw IdentityFailure("mass at the z-prime != 2^f");
    if (format == "json") {
        json out;
        out["schema"] = "lgc/1";
        out["rows"] = rows;
        out["total"] = total;
        out["at_p0"] = at_p0;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& r : rows)
        std::cout << r["forms"].get<std::string>() << "  mass=" << r["mass"] << "\n";
    std::cout << "total=" << total << " at_p0=" << at_p0 << "\n";
    return 0;
}

int cmd_groupalg(long p, int f) {
    lgc::Fq F(p, f);
    for (long i = 0; i < F.q - 1; ++i)
        if (lgc::theta(F, i).c != lgc::theta_closed(F, i).c)
            throw IdentityFailure("theta identity fails at i=" + std::to_string(i));
    for (int i = 0; i < f; ++i) {
        long pi = 1;
        for (int t = 0; t < i; ++t) pi *= p;
        if (lgc::theta(F, F.q - 1 - pi).c != lgc::y_element(F, i).c)
            throw IdentityFailure("theta(q-1-p^i) != Y_i");
    }
    if (f > 1 && lgc::trace_zero_sum(F).c != lgc::trace_zero_sum_closed(F).c)
        throw IdentityFailure("trace-zero sum identity fails");
    if (f % p != 0)
        for (int j0 = 0; j0 < f; ++j0) lgc::nsum(F, j0);  // throws on mismatch
    lgc::xy_series(F);  // throws on mismatch
    std::cout << "groupalg checks passed for p=" << p << " f=" << f << "\n";
    return 0;
}

int cmd_phigamma(const lgc::RhoKind& k) {
    auto orbits = lgc::delta_orbits(k);
    std::vector<std::vector<long>> gammas = {{1, 1}, {2, 1, 3}};
    int N = 4 * (int)k.p;
    auto r = lgc::default_points(k);
    long ranks = 0;
    for (const auto& orb : orbits) {
        auto M = lgc::build_MD(orb.s, orb.m, k.p, gammas, N);
        if (!lgc::is_etale(M)) throw IdentityFailure("module not etale");
        lgc::twist_N(orb.s, orb.m, k.f, r, k.p, gammas, N);
        ranks += M.n;
        std::cout << "orbit: rank " << M.n << " m=" << orb.m << " s=[";
        for (std::size_t i = 0; i < orb.s.size(); ++i) std::cout << (i ? "," : "") << orb.s[i];
        std::cout << "]\n";
    }
    if (ranks != (1L << k.f)) throw IdentityFailure("orbit ranks do not sum to 2^f");
    std::cout << "phigamma checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculators for parabolic components, Serre weights, cycles, "
                 "group algebras, and phi-gamma modules"};
    app.require_subcommand(1);

    int n = 2, f = 1;
    long p = 29;
    std::vector<int> levi, jrho;
    bool borel = false, split = false;
    std::string format = "table", shape, kind = "split";

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", format)->check(CLI::IsMember({"table", "json", "dot"}));
    };

    auto* pc = app.add_subcommand("pc-table", "components with their parabolic data");
    pc->add_option("--n", n)->required();
    pc->add_option("--f", f)->required();
    pc->add_option("--levi", levi)->delimiter(',');
    pc->add_flag("--borel", borel);
    add_common(pc);

    auto* dg = app.add_subcommand("diagram", "constituent graph of a shape");
    dg->add_option("--n", n)->required();
    dg->add_option("--f", f)->required();
    dg->add_option("--levi", levi)->delimiter(',');
    dg->add_flag("--borel", borel);
    dg->add_flag("--split", split);  // X = R(P)+ only
    dg->add_option("--shape", shape);
    add_common(dg);

    auto* se = app.add_subcommand("serre", "Serre-weight tables");
    se->add_option("--kind", kind);
    se->add_option("--f", f)->required();
    se->add_option("--p", p);
    se->add_option("--jrho", jrho)->delimiter(',');
    add_common(se);

    auto* cy = app.add_subcommand("cycles", "characteristic cycles of the weight ideals");
    cy->add_option("--kind", kind);
    cy->add_option("--f", f)->required();
    cy->add_option("--p", p);
    cy->add_option("--jrho", jrho)->delimiter(',');
    add_common(cy);

    auto* ga = app.add_subcommand("groupalg", "group-algebra identity suite");
    ga->add_option("--p", p)->required();
    ga->add_option("--f", f)->required();

    auto* pg = app.add_subcommand("phigamma", "orbit modules and twist checks");
    pg->add_option("--kind", kind);
    pg->add_option("--f", f)->required();
    pg->add_option("--p", p);

    try {
        app.parse(argc, argv);
        if (pc->parsed()) return cmd_pc_table(n, f, parse_parabolic(n, levi, borel), format);
        if (dg->parsed()) {
            lgc::StdParabolic P = parse_parabolic(n, levi, borel);
            std::set<lgc::Root> X;
            if (shape == "example5") {
                if (n != 4) throw Validation("--shape example5 requires --n 4");
                P = lgc::StdParabolic::from_blocks({1, 2, 1});
                X = {{2, 3}, {1, 2}, {1, 3}, {1, 4}};
            } else if (!shape.empty()) {
                throw Validation("unknown shape: " + shape);
            } else if (split) {
                for (const auto& a : P.positive_levi_roots()) X.insert(a);
            } else {
                for (const auto& a : lgc::positive_roots(n)) X.insert(a);
            }
            return cmd_diagram(n, f, P, X, format);
        }
        if (se->parsed()) return cmd_serre(parse_kind(kind, f, p, jrho), format);
        if (cy->parsed()) return cmd_cycles(parse_kind(kind, f, p, jrho), format);
        if (ga->parsed()) return cmd_groupalg(p, f);
        if (pg->parsed()) return cmd_phigamma(parse_kind(kind, f, p, jrho));
        return 1;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const IdentityFailure& e) {
        std::cerr << "identity check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
