#include "lgc/serre.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lgc {

namespace {

bool in(const std::set<int>& s, int j) { return s.count(j) != 0; }

AffineForm split_entry(bool cur, bool prev) {
    if (cur && prev) return {-1, -3};   // p-3-x
    if (cur && !prev) return {-1, -2};  // p-2-x
    if (!cur && prev) return {1, 1};    // x+1
    return {1, 0};                      // x
}

// Per-coordinate generator menus: pairs (form -> generator class).
Gen classify(const AffineForm& a, const RhoKind& k, int j) {
    const bool irred0 = (k.kind == Kind::Irreducible && j == 0);
    if (k.kind == Kind::Nonsplit && !in(k.Jrho, j)) {
        if (a == AffineForm{1, 0} || a == AffineForm{-1, -1} || a == AffineForm{1, 1} ||
            a == AffineForm{-1, -2})
            return Gen::YZ;
        throw std::invalid_argument("ideal_of: form outside the nonsplit menu at coordinate " +
                                    std::to_string(j));
    }
    if (irred0) {
        if (a == AffineForm{1, -1} || a == AffineForm{-1, -2}) return Gen::Z;
        if (a == AffineForm{1, 1} || a == AffineForm{-1, 0}) return Gen::Y;
        if (a == AffineForm{1, 0} || a == AffineForm{-1, -1}) return Gen::YZ;
        throw std::invalid_argument("ideal_of: form outside the menu at coordinate 0");
    }
    if (a == AffineForm{1, 0} || a == AffineForm{-1, -3}) return Gen::Z;
    if (a == AffineForm{1, 2} || a == AffineForm{-1, -1}) return Gen::Y;
    if (a == AffineForm{1, 1} || a == AffineForm{-1, -2}) return Gen::YZ;
    throw std::invalid_argument("ideal_of: form outside the menu at coordinate " +
                                std::to_string(j));
}

std::vector<std::set<int>> all_subsets(int f) {
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
        std::set<int> J;
        for (int j = 0; j < f; ++j)
            if (mask & (1u << j)) J.insert(j);
        out.push_back(std::move(J));
    }
    return out;
}

}  // namespace

std::string to_string(const AffineForm& a) {
    std::ostringstream os;
    if (a.eps < 0) {
        os << "p";
        if (a.c < 0)
            os << a.c;
        else if (a.c > 0)
            os << "+" << a.c;
        os << "-x";
    } else {
        os << "x";
        if (a.c < 0)
            os << a.c;
        else if (a.c > 0)
            os << "+" << a.c;
    }
    return os.str();
}

std::string to_string(const SerreTuple& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < t.forms.size(); ++j) os << (j ? "," : "") << to_string(t.forms[j]);
    os << ")";
    return os.str();
}

std::string to_string(const MonIdeal& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < a.gens.size(); ++j) {
        if (j) os << ",";
        switch (a.gens[j]) {
            case Gen::Y: os << "y" << j; break;
            case Gen::Z: os << "z" << j; break;
            case Gen::YZ: os << "y" << j << "z" << j; break;
        }
    }
    os << ")";
    return os.str();
}

long eval_form(const AffineForm& a, long r, long p) {
    return a.eps * r + a.c + (a.eps < 0 ? p : 0);
}

std::vector<long> default_points(const RhoKind& k) {
    if (k.p < 5L * k.f + 1)
        throw std::invalid_argument("default_points: p too small for the genericity window");
    std::vector<long> r(k.f);
    for (int j = 0; j < k.f; ++j) r[j] = 2L * k.f + j;
    return r;
}

std::vector<DTuple> build_D(const RhoKind& k) {
    std::vector<DTuple> out;
    for (const auto& J : all_subsets(k.f)) {
        SerreTuple t;
        t.forms.resize(k.f);
        for (int j = 0; j < k.f; ++j) {
            bool cur, prev;
            if (k.kind == Kind::Irreducible && j == 0) {
                cur = in(J, 0);
                prev = !in(J, k.f - 1);
            } else {
                cur = in(J, j);
                prev = in(J, (j - 1 + k.f) % k.f);
            }
            t.forms[j] = split_entry(cur, prev);
        }
        if (k.kind == Kind::Irreducible) t.forms[0].c -= t.forms[0].eps;
        if (k.kind == Kind::Nonsplit)
            for (int j = 0; j < k.f; ++j)
                if (!in(k.Jrho, j) && t.forms[j] == AffineForm{-1, -3}) t.forms[j] = {-1, -1};
        out.push_back(DTuple{J, std::move(t)});
    }
    return out;
}

std::vector<SerreTuple> build_P(const RhoKind& k) {
    std::set<SerreTuple> out;
    for (const DTuple& d : build_D(k)) {
        MonIdeal a = ideal_of(d.t, k);
        std::vector<SerreTuple> lifts{d.t};
        for (int j = 0; j < k.f; ++j) {
            if (a.gens[j] != Gen::Z) continue;
            std::vector<SerreTuple> next;
            for (SerreTuple t : lifts) {
                next.push_back(t);
                t.forms[j].c += 2;  // x -> x+2, p-3-x -> p-1-x: the Y-partner
                next.push_back(std::move(t));
            }
            lifts = std::move(next);
        }
        for (auto& t : lifts) out.insert(std::move(t));
    }
    return std::vector<SerreTuple>(out.begin(), out.end());
}

MonIdeal ideal_of(const SerreTuple& t, const RhoKind& k) {
    if ((int)t.forms.size() != k.f) throw std::invalid_argument("ideal_of: length mismatch");
    MonIdeal a;
    for (int j = 0; j < k.f; ++j) a.gens.push_back(classify(t.forms[j], k, j));
    return a;
}

std::set<int> yz_positions(const MonIdeal& a) {
    std::set<int> out;
    for (std::size_t j = 0; j < a.gens.size(); ++j)
        if (a.gens[j] == Gen::YZ) out.insert((int)j);
    return out;
}

SerreTuple dual_tuple(const SerreTuple& t, const RhoKind& k) {
    MonIdeal a = ideal_of(t, k);
    SerreTuple out = t;
    for (int j = 0; j < k.f; ++j) {
        long kk = a.gens[j] == Gen::Z ? -3 : a.gens[j] == Gen::Y ? 1 : -1;
        out.forms[j] = {-t.forms[j].eps, kk - t.forms[j].c};
    }
    if (!(ideal_of(out, k) == a)) throw std::logic_error("dual_tuple: ideal not preserved");
    return out;
}

int length_of(const SerreTuple& t, const RhoKind& k) {
    int by_sign = 0, by_menu = 0;
    for (const AffineForm& a : t.forms) {
        if (a.eps < 0) ++by_sign;
        if (a == AffineForm{1, 1} || a == AffineForm{1, -1} || a == AffineForm{-1, -1} ||
            a == AffineForm{-1, -3})
            ++by_menu;
    }
    if (k.kind != Kind::Nonsplit && by_sign != by_menu)
        throw std::logic_error("length_of: the two defining formulas disagree");
    return by_sign;
}

std::set<int> delta_J(const std::set<int>& J, const RhoKind& k) {
    std::set<int> out;
    if (k.kind == Kind::Split || k.kind == Kind::Nonsplit) {
        for (int j : J) out.insert((j - 1 + k.f) % k.f);
        return out;
    }
    // Irreducible: work in Z/2f on J' = J + (complement + f).
    std::set<int> Jp = J;
    for (int j = 0; j < k.f; ++j)
        if (!in(J, j)) Jp.insert(j + k.f);
    for (int j : Jp) {
        int s = (j - 1 + 2 * k.f) % (2 * k.f);
        if (s < k.f) out.insert(s);
    }
    return out;
}

std::vector<DeltaOrbit> delta_orbits(const RhoKind& k) {
    if (k.kind == Kind::Nonsplit)
        throw std::invalid_argument("delta_orbits: defined for semisimple kinds only");
    std::vector<long> r = default_points(k);
    std::map<std::set<int>, SerreTuple> D;
    for (auto& d : build_D(k)) D[d.J] = d.t;

    std::vector<DeltaOrbit> out;
    std::set<std::set<int>> seen;
    for (const auto& [J0, t0] : D) {
        if (seen.count(J0)) continue;
        DeltaOrbit orb;
        std::set<int> J = J0;
        do {
            seen.insert(J);
            orb.Js.push_back(J);
            orb.sigma.push_back(D.at(J));
            J = delta_J(J, k);
        } while (J != J0);
        int n = (int)orb.Js.size();
        for (int i = 0; i < n; ++i) {
            const auto& A = orb.Js[i];
            const auto& B = orb.Js[(i + 1) % n];
            std::set<int> sym;
            for (int j = 0; j < k.f; ++j)
                if (in(A, j) != in(B, j)) sym.insert(j);
            orb.Jmax.push_back(std::move(sym));
        }
        orb.m = (int)orb.Jmax[0].size();
        for (const auto& jm : orb.Jmax)
            if ((int)jm.size() != orb.m)
                throw std::logic_error("delta_orbits: |J^max| not constant on the orbit");

        for (int i = 0; i < n; ++i) {
            const SerreTuple& cur = orb.sigma[i];
            const SerreTuple& nxt = orb.sigma[(i + 1) % n];
            std::vector<long> sj;
            long total = 0;
            for (int j = 0; j < k.f; ++j) {
                long tnum = eval_form(cur.forms[j], r[j], k.p);
                long snum = eval_form(nxt.forms[j], r[j], k.p);
                bool prev_in = in(orb.Jmax[i], (j - 1 + k.f) % k.f);
                if (in(orb.Jmax[i], j)) {
                    if (snum != k.p - 2 - tnum + (prev_in ? 1 : 0))
                        throw std::logic_error("delta_orbits: s/t relation fails on J^max");
                    sj.push_back(snum);
                    total += snum;
                } else if (snum != tnum - (prev_in ? 1 : 0)) {
                    throw std::logic_error("delta_orbits: s/t relation fails off J^max");
                }
            }
            orb.s_coords.push_back(std::move(sj));
            orb.s.push_back(n == 1 ? k.p - 1 : total);
        }
        long sum = 0;
        for (long si : orb.s) sum += si;
        if (sum % (k.p - 1) != 0)
            throw std::logic_error("delta_orbits: sum of s_i not divisible by p-1");
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<long> xdelta_exponents(const DeltaOrbit& orbit, int i, const RhoKind& k) {
    std::vector<long> out(k.f, k.p - 1);
    auto it = orbit.s_coords[i].begin();
    for (int j : orbit.Jmax[i]) out[j] = *it++;
    for (long e : out)
        if (e < 0 || e > k.p - 1)
            throw std::logic_error("xdelta_exponents: exponent outside [0, p-1]");
    return out;
}

}  // namespace lgc
