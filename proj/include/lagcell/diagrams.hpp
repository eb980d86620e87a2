#pragma once
/**
 * @file diagrams.hpp
 * @brief Shifted Young diagrams: subsets of [n], containment, corners, covers.
 *
 * Boxes are (row, col) with 1-based indices and row <= col. A diagram with
 * parts p_1 > p_2 > ... > p_r occupies (k, l) for k <= l <= k + p_k - 1.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lagcell/errors.hpp"

namespace lagcell {

struct Box {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Box&, const Box&) = default;
};

using BoxSet = std::vector<Box>;  // always kept sorted lexicographically

inline bool contains(const BoxSet& s, Box b) { return std::binary_search(s.begin(), s.end(), b); }

inline BoxSet intersect(const BoxSet& a, const BoxSet& b) {
    BoxSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline BoxSet subtract(const BoxSet& a, const BoxSet& b) {
    BoxSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class ShiftedDiagram {
public:
    ShiftedDiagram() = default;

    ShiftedDiagram(int ambient_n, std::vector<int> parts) : n_(ambient_n), parts_(std::move(parts)) {
        if (n_ < 1) throw domain_error("ambient rank must be positive");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw domain_error("diagram parts must be positive");
            if (i > 0 && parts_[i] >= parts_[i - 1]) throw domain_error("diagram parts must strictly decrease");
        }
        if (!parts_.empty() && parts_[0] > n_) throw domain_error("first part exceeds ambient rank");
    }

    static ShiftedDiagram empty(int ambient_n) { return ShiftedDiagram(ambient_n, {}); }

    int ambient_n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool is_empty() const { return parts_.empty(); }

    // 1-based row length; 0 beyond the last row.
    int part(int k) const { return (k >= 1 && k <= rows()) ? parts_[k - 1] : 0; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    BoxSet boxes() const {
        BoxSet out;
        for (int k = 1; k <= rows(); ++k)
            for (int l = k; l <= k + part(k) - 1; ++l) out.push_back({k, l});
        return out;
    }

    bool has_box(Box b) const { return b.row >= 1 && b.row <= rows() && b.col >= b.row && b.col <= b.row + part(b.row) - 1; }

    std::string str() const {
        if (parts_.empty()) return "φ";
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const ShiftedDiagram&, const ShiftedDiagram&) = default;

    // Orders by ambient rank then parts lexicographically.
    friend auto operator<=>(const ShiftedDiagram& a, const ShiftedDiagram& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }

private:
    int n_ = 1;
    std::vector<int> parts_;
};

inline ShiftedDiagram diagram_from_subset(const std::vector<int>& J, int n) {
    if (n < 1) throw domain_error("ambient rank must be positive");
    std::vector<int> parts;
    for (int j : J) {
        if (j < 1 || j > n) throw domain_error("subset element " + std::to_string(j) + " outside [1, n]");
        parts.push_back(n - j + 1);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) throw domain_error("repeated subset element");
    return ShiftedDiagram(n, std::move(parts));
}

// Increasing list of J with parts j^vee = n - j + 1.
inline std::vector<int> subset_from_diagram(const ShiftedDiagram& d) {
    std::vector<int> J;
    for (int p : d.parts()) J.push_back(d.ambient_n() - p + 1);
    return J;
}

inline std::vector<int> complement_subset(const std::vector<int>& J, int n) {
    std::vector<int> I;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(J.begin(), J.end(), i)) I.push_back(i);
    return I;
}

inline bool leq(const ShiftedDiagram& a, const ShiftedDiagram& b) {
    if (a.ambient_n() != b.ambient_n()) throw domain_error("diagrams live in different ambient ranks");
    if (a.rows() > b.rows()) return false;
    for (int k = 1; k <= a.rows(); ++k)
        if (a.part(k) > b.part(k)) return false;
    return true;
}

// Removable boxes: row ends whose deletion keeps the parts strictly decreasing.
inline BoxSet corners(const ShiftedDiagram& mu) {
    BoxSet out;
    for (int b = 1; b <= mu.rows(); ++b)
        if (b == mu.rows() || mu.part(b) - 1 > mu.part(b + 1)) out.push_back({b, b + mu.part(b) - 1});
    return out;
}

// All 2^n diagrams of ambient rank n, ordered by size then parts.
inline std::vector<ShiftedDiagram> all_diagrams(int n) {
    if (n < 1) throw domain_error("ambient rank must be positive");
    std::vector<ShiftedDiagram> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> J;
        for (int j = 1; j <= n; ++j)
            if (mask & (1u << (j - 1))) J.push_back(j);
        out.push_back(diagram_from_subset(J, n));
    }
    std::sort(out.begin(), out.end(), [](const ShiftedDiagram& a, const ShiftedDiagram& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() < b.parts();
    });
    return out;
}

enum class CoverKind { NewRow, SameRows };

struct RegionData {
    int star = 0;
    Box new_box;
    CoverKind kind = CoverKind::NewRow;
    int jstar_vee = 0;  // part of the lower diagram in row star; 0 for NewRow
    BoxSet alpha;       // arch, empty for NewRow
    BoxSet column;
    BoxSet roof;
};

inline RegionData region_data(const ShiftedDiagram& lam, const ShiftedDiagram& lamp) {
    if (!leq(lam, lamp) || lamp.size() != lam.size() + 1) throw domain_error(lam.str() + " -> " + lamp.str() + " is not a cover");
    RegionData rd;
    if (lamp.rows() > lam.rows()) {
        rd.kind = CoverKind::NewRow;
        rd.star = lamp.rows();
    } else {
        rd.kind = CoverKind::SameRows;
        for (int k = 1; k <= lam.rows(); ++k)
            if (lamp.part(k) == lam.part(k) + 1) { rd.star = k; break; }
        rd.jstar_vee = lam.part(rd.star);
    }
    const int s = rd.star;
    const int col = s + lamp.part(s) - 1;
    rd.new_box = {s, col};
    for (int k = 1; k <= s; ++k) rd.column.push_back({k, col});
    if (rd.kind == CoverKind::SameRows) {
        for (int k = 1; k <= s; ++k) {
            rd.alpha.push_back({k, s});
            rd.alpha.push_back({k, col});
        }
        for (int l = s; l <= col; ++l) rd.alpha.push_back({s, l});
        std::sort(rd.alpha.begin(), rd.alpha.end());
        rd.alpha.erase(std::unique(rd.alpha.begin(), rd.alpha.end()), rd.alpha.end());
    }
    for (Box b : lam.boxes())
        if (b.row > s) rd.roof.push_back(b);
    return rd;
}

inline std::vector<std::pair<ShiftedDiagram, RegionData>> covers_above(const ShiftedDiagram& lam) {
    std::vector<std::pair<ShiftedDiagram, RegionData>> out;
    const int n = lam.ambient_n();
    const auto& p = lam.parts();
    for (int k = 0; k <= lam.rows(); ++k) {
        std::vector<int> q = p;
        if (k == lam.rows()) q.push_back(1);
        else q[k] += 1;
        bool ok = q[0] <= n;
        for (std::size_t i = 1; i < q.size() && ok; ++i) ok = q[i] < q[i - 1];
        if (!ok) continue;
        ShiftedDiagram up(n, q);
        out.emplace_back(up, region_data(lam, up));
    }
    return out;
}

inline std::vector<ShiftedDiagram> covers_below(const ShiftedDiagram& lam) {
    std::vector<ShiftedDiagram> out;
    for (Box b : corners(lam)) {
        std::vector<int> q = lam.parts();
        if (--q[b.row - 1] == 0) q.pop_back();
        out.emplace_back(lam.ambient_n(), q);
    }
    return out;
}

}  // namespace lagcell
