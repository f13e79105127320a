#include "qborel/root_datum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace qb {

int QDegree::height() const { return std::accumulate(n.begin(), n.end(), 0); }

bool QDegree::is_zero() const {
    return std::all_of(n.begin(), n.end(), [](int x) { return x == 0; });
}

bool QDegree::nonneg() const {
    return std::all_of(n.begin(), n.end(), [](int x) { return x >= 0; });
}

bool QDegree::leq(const QDegree& o) const {
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] > o.n[i]) return false;
    return true;
}

QDegree QDegree::operator+(const QDegree& o) const {
    QDegree r = *this;
    for (size_t i = 0; i < n.size(); ++i) r.n[i] += o.n[i];
    return r;
}

QDegree QDegree::operator-(const QDegree& o) const {
    QDegree r = *this;
    for (size_t i = 0; i < n.size(); ++i) r.n[i] -= o.n[i];
    return r;
}

std::ostream& operator<<(std::ostream& os, const QDegree& d) {
    os << "(";
    for (int i = 0; i < d.rank(); ++i) os << (i ? "," : "") << d.n[i];
    return os << ")";
}

namespace {

struct TypeSpec {
    char family;
    int rank;
};

TypeSpec parse_label(const std::string& s) {
    if (s.size() < 2) throw ConfigError("type label must look like A2, B3, ...");
    char fam = s[0];
    int rank = 0;
    try {
        rank = std::stoi(s.substr(1));
    } catch (...) {
        throw ConfigError("unparseable rank in type label '" + s + "'");
    }
    return {fam, rank};
}

}  // namespace

RootDatum::RootDatum(const std::string& type_label, int l) : label_(type_label), l_(l) {
    if (l < 3 || l % 2 == 0) throw ConfigError("order l must be odd and >= 3");
    auto [fam, rank] = parse_label(type_label);
    family_ = fam;
    rank_ = rank;

    auto chain = [&](const std::vector<int>& dd, std::map<std::pair<int, int>, int> edges) {
        d_ = dd;
        sym_.assign(rank_, std::vector<int>(rank_, 0));
        for (int i = 0; i < rank_; ++i) sym_[i][i] = 2 * d_[i];
        for (auto& [e, v] : edges) {
            sym_[e.first][e.second] = v;
            sym_[e.second][e.first] = v;
        }
    };

    switch (fam) {
        case 'A': {
            if (rank < 1) throw ConfigError("A_n requires n >= 1");
            std::map<std::pair<int, int>, int> edges;
            for (int i = 0; i + 1 < rank; ++i) edges[{i, i + 1}] = -1;
            chain(std::vector<int>(rank, 1), edges);
            break;
        }
        case 'B': {
            if (rank < 2) throw ConfigError("B_n requires n >= 2");
            std::vector<int> dd(rank, 2);
            dd[rank - 1] = 1;  // last simple root short
            std::map<std::pair<int, int>, int> edges;
            for (int i = 0; i + 1 < rank; ++i) edges[{i, i + 1}] = -2;
            chain(dd, edges);
            break;
        }
        case 'C': {
            if (rank < 2) throw ConfigError("C_n requires n >= 2");
            std::vector<int> dd(rank, 1);
            dd[rank - 1] = 2;  // last simple root long
            std::map<std::pair<int, int>, int> edges;
            for (int i = 0; i + 2 < rank; ++i) edges[{i, i + 1}] = -1;
            edges[{rank - 2, rank - 1}] = -2;
            chain(dd, edges);
            break;
        }
        case 'D': {
            if (rank < 4) throw ConfigError("D_n requires n >= 4");
            std::map<std::pair<int, int>, int> edges;
            for (int i = 0; i + 1 < rank - 1; ++i) edges[{i, i + 1}] = -1;
            edges[{rank - 3, rank - 1}] = -1;
            chain(std::vector<int>(rank, 1), edges);
            break;
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw ConfigError("E_n requires n in {6,7,8}");
            // node 2 hangs off node 4; chain 1-3-4-5-...-n (0-based below)
            std::map<std::pair<int, int>, int> edges;
            edges[{0, 2}] = -1;
            edges[{1, 3}] = -1;
            for (int i = 2; i + 1 < rank; ++i) edges[{i, i + 1}] = -1;
            chain(std::vector<int>(rank, 1), edges);
            break;
        }
        case 'F': {
            if (rank != 4) throw ConfigError("F_4 has rank 4");
            chain({2, 2, 1, 1}, {{{0, 1}, -2}, {{1, 2}, -2}, {{2, 3}, -1}});
            break;
        }
        case 'G': {
            if (rank != 2) throw ConfigError("G_2 has rank 2");
            chain({1, 3}, {{{0, 1}, -3}});
            break;
        }
        default:
            throw ConfigError("unknown family '" + std::string(1, fam) + "'");
    }

    D_ = *std::max_element(d_.begin(), d_.end());
    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            if (sym_[i][j] % d_[i] != 0) throw ConfigError("inconsistent length data");
            cartan_[i][j] = sym_[i][j] / d_[i];
        }

    build_roots();
    build_lyndon();
}

int RootDatum::sym_pair(const QDegree& a, const QDegree& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.n[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b.n[j] != 0) s += a.n[i] * b.n[j] * sym_[i][j];
    }
    return s;
}

void RootDatum::build_roots() {
    std::set<std::vector<int>> known;
    std::vector<QDegree> by_height;
    for (int i = 0; i < rank_; ++i) {
        by_height.push_back(QDegree::simple(rank_, i));
        known.insert(by_height.back().n);
    }
    // closure under addition of simple roots via root strings
    for (size_t head = 0; head < by_height.size(); ++head) {
        QDegree mu = by_height[head];
        for (int i = 0; i < rank_; ++i) {
            QDegree cand = mu + QDegree::simple(rank_, i);
            if (known.count(cand.n)) continue;
            int p = 0;  // length of the string below mu in direction alpha_i
            QDegree down = mu - QDegree::simple(rank_, i);
            while (down.nonneg() && known.count(down.n)) {
                ++p;
                down = down - QDegree::simple(rank_, i);
            }
            int pairing = sym_pair(mu, QDegree::simple(rank_, i)) / d_[i];
            if (p - pairing >= 1) {
                known.insert(cand.n);
                by_height.push_back(cand);
            }
        }
        if (by_height.size() > 300) throw EngineError("runaway root closure");
    }
    // keep heights weakly increasing before the Lyndon sort so that the
    // factorization pass below sees smaller roots first
    std::stable_sort(by_height.begin(), by_height.end(),
                     [](const QDegree& a, const QDegree& b) { return a.height() < b.height(); });
    pos_roots_ = std::move(by_height);
}

void RootDatum::build_lyndon() {
    // standard Lyndon word of a positive root: the letter itself for a simple
    // root, otherwise the lexicographically largest concatenation w(b)w(c)
    // over decompositions mu = b + c into positive roots with w(b) < w(c)
    std::map<std::vector<int>, std::vector<int>> word_of;
    for (const auto& mu : pos_roots_) {
        if (mu.height() == 1) {
            int i = 0;
            while (mu.n[i] == 0) ++i;
            word_of[mu.n] = {i};
            continue;
        }
        std::vector<int> best;
        for (const auto& beta : pos_roots_) {
            if (beta.height() >= mu.height()) continue;
            QDegree gamma = mu - beta;
            if (!gamma.nonneg()) continue;
            auto ib = word_of.find(beta.n), ig = word_of.find(gamma.n);
            if (ib == word_of.end() || ig == word_of.end()) continue;
            if (!(ib->second < ig->second)) continue;
            std::vector<int> cat = ib->second;
            cat.insert(cat.end(), ig->second.begin(), ig->second.end());
            if (cat > best) best = cat;
        }
        if (best.empty()) throw EngineError("no standard Lyndon factorization found");
        word_of[mu.n] = best;
    }
    std::sort(pos_roots_.begin(), pos_roots_.end(),
              [&](const QDegree& a, const QDegree& b) { return word_of[a.n] < word_of[b.n]; });
    words_.clear();
    for (const auto& mu : pos_roots_) words_.push_back(word_of[mu.n]);
}

int RootDatum::root_index(const QDegree& mu) const {
    for (size_t k = 0; k < pos_roots_.size(); ++k)
        if (pos_roots_[k] == mu) return static_cast<int>(k);
    return -1;
}

int RootDatum::root_d(int root_idx) const {
    const QDegree& mu = pos_roots_[root_idx];
    return sym_pair(mu, mu) / 2;
}

bool RootDatum::admissible_order() const {
    if (l_ % 2 == 0 || l_ < 3) return false;
    switch (family_) {
        case 'A':
        case 'D':
        case 'E':
            return l_ != 3;
        case 'B':
        case 'C':
        case 'F':
            return l_ != 3 && l_ != 5;
        case 'G':
            return l_ % 3 != 0 && l_ != 7;
    }
    return false;
}

std::set<int> RootDatum::serre_exponent_set() const {
    std::set<int> out;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            int c = cartan_[i][j];
            out.insert((1 - c) * (1 - c) * sym_[i][i] + 2 * (1 - c) * sym_[i][j] + sym_[j][j]);
        }
    return out;
}

std::vector<std::vector<int>> RootDatum::killing_matrix() const {
    std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) m[i][j] = ((sym_[i][j] % l_) + l_) % l_;
    return m;
}

bool RootDatum::killing_invertible() const {
    // determinant of the symmetrized form over Z, fraction-free
    int n = rank_;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = sym_[i][j];
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return false;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1] * sign;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), det.get_mpz_t(), mpz_class(l_).get_mpz_t());
    return g == 1;
}

int RootDatum::top_height_small() const {
    int s = 0;
    for (const auto& mu : pos_roots_) s += mu.height();
    return (l_ - 1) * s;
}

std::ostream& operator<<(std::ostream& os, const RootDatum& rd) {
    os << rd.label_ << " at l=" << rd.l_;
    return os;
}

RootDatum build_root_datum(const std::string& type_label, int l) { return RootDatum(type_label, l); }

}  // namespace qb
