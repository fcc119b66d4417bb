#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace invar {

// Finite group given by its full multiplication table. Subsets are sorted element-index lists.
class TableGroup {
public:
    using Subset = std::vector<int>;

    TableGroup() = default;
    // Builds the table from a product rule on element indices 0..n-1; checks the group axioms.
    TableGroup(int n, const std::function<int(int, int)>& mul, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int h, int x) const { return mul(mul(x, h), inv(x)); }  // x h x^-1
    int element_order(int a) const;
    const std::string& label(int a) const { return labels_[a]; }

    Subset all() const;
    Subset closure(const Subset& gens) const;
    Subset center() const { return centralizer(all(), all()); }
    // Elements of k commuting with every element of s.
    Subset centralizer(const Subset& k, const Subset& s) const;
    bool is_subgroup(const Subset& s) const;
    bool is_normal(const Subset& h, const Subset& k) const;
    bool is_elementary_abelian(const Subset& h) const;
    Subset conjugate(const Subset& h, int x) const;
    // Some x in k with x h1 x^-1 = h2.
    std::optional<int> conjugating_element(const Subset& k, const Subset& h1, const Subset& h2) const;
    // Every elementary abelian subgroup of order 2^rank inside the subgroup k.
    std::vector<Subset> elementary_abelian_subgroups(const Subset& k, int rank) const;

private:
    int n_ = 0;
    int e_ = 0;
    std::vector<uint16_t> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

// The order-256 group UT_3(4):<g, A> with the field {0, 1, w, w+1}, w^2 = w+1.
struct SylowModel {
    TableGroup group;
    int g = 0, A = 0, T = 0, Z = 0;
    TableGroup::Subset ut;       // UT_3(4)
    TableGroup::Subset ut_g;     // UT_3(4):<g>
    TableGroup::Subset ut_gA;    // UT_3(4):<gA>
    TableGroup::Subset four_I;   // entries (a, b, 0)
    TableGroup::Subset four_II;  // entries (0, a, b)
    static int encode(int a, int b, int c, int eg, int eA);
};

SylowModel sylow2_ly_model();

namespace f4 {
inline int add(int a, int b) { return a ^ b; }
int mul(int a, int b);
inline int frob(int a) { return mul(a, a); }
}  // namespace f4

}  // namespace invar
