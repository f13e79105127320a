#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "qborel/errors.hpp"

namespace qb {

// Element of the root lattice Q: exponent vector over the simple roots.
struct QDegree {
    std::vector<int> n;

    QDegree() = default;
    explicit QDegree(int rank) : n(rank, 0) {}
    explicit QDegree(std::vector<int> v) : n(std::move(v)) {}
    static QDegree simple(int rank, int i) {
        QDegree d(rank);
        d.n[i] = 1;
        return d;
    }

    int rank() const { return static_cast<int>(n.size()); }
    // height |mu| = sum of coordinates
    int height() const;
    bool is_zero() const;
    bool nonneg() const;
    // componentwise partial order
    bool leq(const QDegree& o) const;

    QDegree operator+(const QDegree& o) const;
    QDegree operator-(const QDegree& o) const;
    bool operator==(const QDegree& o) const { return n == o.n; }
    bool operator!=(const QDegree& o) const { return n != o.n; }
    bool operator<(const QDegree& o) const { return n < o.n; }

    friend std::ostream& operator<<(std::ostream& os, const QDegree& d);
};

// Cartan/root data for a simple type at a fixed odd order l, with the convex
// (Lyndon) order on the positive roots shared by all PBW machinery.
class RootDatum {
  public:
    RootDatum(const std::string& type_label, int l);

    const std::string& label() const { return label_; }
    char family() const { return family_; }
    int rank() const { return rank_; }
    int order() const { return l_; }

    // symmetrized form (alpha_i, alpha_j)
    int sym(int i, int j) const { return sym_[i][j]; }
    // Cartan integer <alpha_i, alpha_j> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
    int cartan(int i, int j) const { return cartan_[i][j]; }
    // d_i = (alpha_i,alpha_i)/2 in {1,2,3}
    int d(int i) const { return d_[i]; }
    // long/short length ratio, 1, 2 or 3
    int length_ratio() const { return D_; }
    // (mu, nu) extended bilinearly
    int sym_pair(const QDegree& a, const QDegree& b) const;

    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
    const std::vector<QDegree>& positive_roots() const { return pos_roots_; }
    const QDegree& positive_root(int k) const { return pos_roots_[k]; }
    // index into positive_roots(), or -1
    int root_index(const QDegree& mu) const;
    bool is_positive_root(const QDegree& mu) const { return root_index(mu) >= 0; }
    // standard Lyndon word (letters = simple-root indices) of a positive root
    const std::vector<int>& lyndon_word(int root_idx) const { return words_[root_idx]; }
    // d_mu = (mu,mu)/2 for a positive root
    int root_d(int root_idx) const;

    // order of q restricted as in the underlying construction
    bool admissible_order() const;
    // values (1-<a,b>)^2(a,a)+2(1-<a,b>)(a,b)+(b,b) over ordered simple pairs a != b
    std::set<int> serre_exponent_set() const;

    // matrix of the Killing map G -> G^dual (symmetrized form mod l), and
    // whether it is invertible mod l
    std::vector<std::vector<int>> killing_matrix() const;
    bool killing_invertible() const;

    // height of the top degree of the small positive part: (l-1) * sum of root heights
    int top_height_small() const;

    friend std::ostream& operator<<(std::ostream& os, const RootDatum& rd);

  private:
    void build_roots();
    void build_lyndon();

    std::string label_;
    char family_;
    int rank_;
    int l_;
    int D_;
    std::vector<int> d_;
    std::vector<std::vector<int>> sym_;
    std::vector<std::vector<int>> cartan_;
    std::vector<QDegree> pos_roots_;       // in Lyndon-lex order
    std::vector<std::vector<int>> words_;  // standard Lyndon word per root
};

// Parse "A2", "B2", ... and construct; ConfigError on bad input.
RootDatum build_root_datum(const std::string& type_label, int l);

}  // namespace qb
