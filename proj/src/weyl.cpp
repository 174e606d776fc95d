#include "lgc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lgc {

Perm Perm::identity(int n) {
    Perm w;
    w.img.resize(n);
    std::iota(w.img.begin(), w.img.end(), 0);
    return w;
}

Perm Perm::inverse() const {
    Perm w;
    w.img.resize(img.size());
    for (int k = 0; k < n(); ++k) w.img[img[k]] = k;
    return w;
}

Perm Perm::then(const Perm& second) const {
    if (second.n() != n()) throw std::invalid_argument("perm size mismatch");
    Perm w;
    w.img.resize(img.size());
    for (int k = 0; k < n(); ++k) w.img[k] = second.img[img[k]];
    return w;
}

bool Perm::is_identity() const {
    for (int k = 0; k < n(); ++k)
        if (img[k] != k) return false;
    return true;
}

Weight apply_perm(const Perm& w, const Weight& lam) {
    Weight out(lam.size());
    for (size_t k = 0; k < lam.size(); ++k) out[w.img[k]] = lam[k];
    return out;
}

RationalWeight apply_perm(const Perm& w, const RationalWeight& lam) {
    RationalWeight out(lam.size());
    for (size_t k = 0; k < lam.size(); ++k) out[w.img[k]] = lam[k];
    return out;
}

Root apply_perm(const Perm& w, const Root& a) {
    return Root{w.img[a.i - 1] + 1, w.img[a.j - 1] + 1};
}

StdParabolic::StdParabolic(int n_, std::set<int> simple_) : n(n_), simple(std::move(simple_)) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    for (int k : simple)
        if (k < 1 || k > n - 1) throw std::invalid_argument("simple root index out of range");
    int start = 0;
    for (int k = 1; k <= n; ++k) {
        if (k == n || !simple.count(k)) {  // block boundary after position k
            blocks.push_back(k - start);
            start = k;
        }
    }
    block_of.resize(n);
    int pos = 0;
    for (int b = 0; b < (int)blocks.size(); ++b)
        for (int t = 0; t < blocks[b]; ++t) block_of[pos++] = b;
}

StdParabolic StdParabolic::from_blocks(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("block sizes must be positive");
        n += s;
    }
    std::set<int> simple;
    int acc = 0;
    for (size_t b = 0; b + 1 < sizes.size() + 0; ++b) {
        acc += sizes[b];
        if (b + 1 < sizes.size()) { /* boundary at acc */ }
    }
    acc = 0;
    for (size_t b = 0; b < sizes.size(); ++b) {
        for (int k = 1; k < sizes[b]; ++k) simple.insert(acc + k);
        acc += sizes[b];
    }
    return StdParabolic(n, simple);
}

StdParabolic StdParabolic::full(int n) {
    std::set<int> all;
    for (int k = 1; k < n; ++k) all.insert(k);
    return StdParabolic(n, all);
}

int StdParabolic::block_start(int b) const {
    int s = 0;
    for (int t = 0; t < b; ++t) s += blocks[t];
    return s;
}

bool StdParabolic::contains(const StdParabolic& other) const {
    if (other.n != n) return false;
    return std::includes(simple.begin(), simple.end(), other.simple.begin(), other.simple.end());
}

std::vector<Root> StdParabolic::positive_levi_roots() const {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (block_of[i - 1] == block_of[j - 1]) out.push_back(Root{i, j});
    return out;
}

bool StdParabolic::in_levi(const Root& a) const {
    return block_of[a.i - 1] == block_of[a.j - 1];
}

Perm StdParabolic::block_shuffle(const std::vector<int>& order) const {
    if ((int)order.size() != d()) throw std::invalid_argument("block order size mismatch");
    std::vector<int> newstart(d());
    int pos = 0;
    for (int t = 0; t < d(); ++t) {
        newstart[order[t]] = pos;
        pos += blocks[order[t]];
    }
    Perm w;
    w.img.resize(n);
    for (int b = 0; b < d(); ++b) {
        int s = block_start(b);
        for (int t = 0; t < blocks[b]; ++t) w.img[s + t] = newstart[b] + t;
    }
    return w;
}

std::vector<Perm> StdParabolic::all_block_shuffles() const {
    std::vector<int> order(d());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(block_shuffle(order));
    } while (std::next_permutation(order.begin(), order.end()));
    std::sort(out.begin(), out.end());
    return out;
}

StdParabolic StdParabolic::shuffled(const std::vector<int>& order) const {
    std::vector<int> sizes;
    for (int t : order) sizes.push_back(blocks[t]);
    return from_blocks(sizes);
}

StdParabolic StdParabolic::conjugate(const Perm& w) const {
    std::set<int> img;
    for (int k : simple) {
        Root a = apply_perm(w, Root{k, k + 1});
        if (a.j != a.i + 1) throw std::invalid_argument("w(S(P)) not contained in S");
        img.insert(a.i);
    }
    return StdParabolic(n, img);
}

std::vector<Perm> StdParabolic::levi_generators() const {
    std::vector<Perm> out;
    for (int k : simple) {
        Perm w = Perm::identity(n);
        std::swap(w.img[k - 1], w.img[k]);
        out.push_back(w);
    }
    return out;
}

Rat pairing(const RationalWeight& lam, const Root& a) {
    if (a.i < 1 || a.j < 1 || a.i > (int)lam.size() || a.j > (int)lam.size())
        throw std::invalid_argument("root index exceeds rank");
    return lam[a.i - 1] - lam[a.j - 1];
}

Int pairing(const Weight& lam, const Root& a) {
    if (a.i < 1 || a.j < 1 || a.i > (int)lam.size() || a.j > (int)lam.size())
        throw std::invalid_argument("root index exceeds rank");
    return lam[a.i - 1] - lam[a.j - 1];
}

bool is_dominant(const RationalWeight& lam) {
    for (size_t k = 0; k + 1 < lam.size(); ++k)
        if (lam[k] < lam[k + 1]) return false;
    return true;
}

bool is_dominant(const Weight& lam) {
    for (size_t k = 0; k + 1 < lam.size(); ++k)
        if (lam[k] < lam[k + 1]) return false;
    return true;
}

std::pair<std::vector<Rat>, Rat> simple_coords(const RationalWeight& lam) {
    std::vector<Rat> n_alpha;
    Rat acc = 0;
    for (size_t k = 0; k + 1 < lam.size(); ++k) {
        acc += lam[k];
        n_alpha.push_back(acc);
    }
    if (!lam.empty()) acc += lam.back();
    return {n_alpha, acc};
}

std::set<int> support(const RationalWeight& lam) {
    auto [n_alpha, residue] = simple_coords(lam);
    if (residue != 0) throw std::invalid_argument("support requires residue 0 (root-lattice weight)");
    std::set<int> out;
    for (size_t k = 0; k < n_alpha.size(); ++k)
        if (n_alpha[k] != 0) out.insert((int)k + 1);
    return out;
}

RationalWeight to_rational(const Weight& lam) {
    RationalWeight out(lam.size());
    for (size_t k = 0; k < lam.size(); ++k) out[k] = Rat(lam[k]);
    return out;
}

RationalWeight weyl_average(const RationalWeight& lam, const StdParabolic& P) {
    if ((int)lam.size() != P.n) throw std::invalid_argument("rank mismatch");
    RationalWeight out(lam.size());
    int pos = 0;
    for (int b = 0; b < P.d(); ++b) {
        Rat s = 0;
        for (int t = 0; t < P.blocks[b]; ++t) s += lam[pos + t];
        s /= P.blocks[b];
        for (int t = 0; t < P.blocks[b]; ++t) out[pos + t] = s;
        pos += P.blocks[b];
    }
    return out;
}

RationalWeight weyl_average(const Weight& lam, const StdParabolic& P) {
    return weyl_average(to_rational(lam), P);
}

Weight theta_G(int n) {
    Weight out(n);
    for (int k = 0; k < n; ++k) out[k] = n - 1 - k;
    return out;
}

Weight theta_P(const StdParabolic& P) {
    // theta_P = sum over alpha in S(P) of lambda_{alpha,P}, where for
    // alpha = e_j - e_{j+1} the weight lambda_{alpha,P} = sum of e_i over
    // positive Levi roots e_i - e_{j+1}.
    Weight out(P.n, 0);
    for (int j : P.simple) {
        // alpha = e_j - e_{j+1} in S(P): i ranges over the same block, i < j+1
        for (int i = 1; i < j + 1; ++i)
            if (P.block_of[i - 1] == P.block_of[j]) out[i - 1] += 1;
    }
    return out;
}

Weight theta_upper(const StdParabolic& P) { return sub_weights(theta_G(P.n), theta_P(P)); }

RationalWeight sub_weights(const RationalWeight& a, const RationalWeight& b) {
    RationalWeight out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

RationalWeight add_weights(const RationalWeight& a, const RationalWeight& b) {
    RationalWeight out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

Weight sub_weights(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

Weight add_weights(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

Weight scale(const Weight& a, const Int& c) {
    Weight out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] * c;
    return out;
}

std::string to_string(const Weight& lam) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < lam.size(); ++k) os << (k ? "," : "") << lam[k];
    os << ")";
    return os.str();
}

std::string to_string(const RationalWeight& lam) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < lam.size(); ++k) os << (k ? "," : "") << lam[k];
    os << ")";
    return os.str();
}

std::string to_string(const Root& a) {
    std::ostringstream os;
    os << "e" << a.i << "-e" << a.j;
    return os.str();
}

std::string to_string(const Perm& w) {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k < w.n(); ++k) os << (k ? " " : "") << w.img[k] + 1;
    os << "]";
    return os.str();
}

}  // namespace lgc
