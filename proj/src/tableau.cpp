#include "modrep/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace modrep {

bool node_in_diagram(const Partition& lam, Node a, DiagramKind kind) {
    if (a.row < 1 || a.row > lam.length()) return false;
    int len = lam.part(a.row);
    if (kind == DiagramKind::Straight) return a.col >= 1 && a.col <= len;
    return a.col >= a.row && a.col <= a.row + len - 1;
}

bool Tableau::contains(int i, int j) const {
    return node_in_diagram(shape, Node{i, j}, kind);
}

int Tableau::entry(int i, int j) const {
    if (!contains(i, j))
        throw std::invalid_argument("Tableau::entry: cell outside the diagram");
    return rows[static_cast<std::size_t>(i - 1)]
               [static_cast<std::size_t>(j - col_begin(i))];
}

Node Tableau::position_of(int k) const {
    for (int i = 1; i <= shape.length(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t] == k) return Node{i, col_begin(i) + static_cast<int>(t)};
    }
    throw std::invalid_argument("Tableau::position_of: no such entry");
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
}

bool Tableau::is_standard() const {
    int ell = shape.length();
    for (int i = 1; i <= ell; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        for (std::size_t t = 1; t < row.size(); ++t)
            if (row[t] <= row[t - 1]) return false;
        if (i > 1) {
            for (std::size_t t = 0; t < row.size(); ++t) {
                int j = col_begin(i) + static_cast<int>(t);
                if (contains(i - 1, j) && entry(i - 1, j) >= row[t]) return false;
            }
        }
    }
    return true;
}

Tableau Tableau::swapped(int k) const {
    Tableau t = *this;
    for (auto& r : t.rows)
        for (auto& e : r) {
            if (e == k)
                e = k + 1;
            else if (e == k + 1)
                e = k;
        }
    return t;
}

std::string Tableau::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += "/";
        for (std::size_t t = 0; t < rows[i].size(); ++t) {
            if (t) s += ",";
            s += std::to_string(rows[i][t]);
        }
    }
    return s;
}

bool operator<(const Tableau& a, const Tableau& b) {
    return a.reading_word() < b.reading_word();
}

Tableau row_reading_tableau(const Partition& lam, DiagramKind kind) {
    Tableau t;
    t.shape = lam;
    t.kind = kind;
    int next = 1;
    for (int part : lam.parts) {
        std::vector<int> row(static_cast<std::size_t>(part));
        for (int& e : row) e = next++;
        t.rows.push_back(std::move(row));
    }
    return t;
}

int hook_length(const Partition& lam, Node a, DiagramKind kind) {
    if (!node_in_diagram(lam, a, kind))
        throw std::invalid_argument("hook_length: cell outside the diagram");
    if (kind == DiagramKind::Straight) {
        Partition conj = conjugate(lam);
        return lam.part(a.row) + conj.part(a.col) - a.row - a.col + 1;
    }
    // shifted: arm, column below, and the wrapped row j+1 when (j,j) is in
    // the hook -- which happens exactly when row j exists
    PartitionClassification c = classify(lam, 2);
    if (!c.strict)
        throw std::invalid_argument("hook_length: shifted diagrams need a strict partition");
    int arm = a.row + lam.part(a.row) - 1 - a.col;
    int below = 0;
    for (int i = a.row + 1; i <= lam.length(); ++i)
        if (node_in_diagram(lam, Node{i, a.col}, kind)) ++below;
    int wrap = (a.col <= lam.length()) ? lam.part(a.col + 1) : 0;
    return 1 + arm + below + wrap;
}

unsigned long long count_standard_hook(const Partition& lam, DiagramKind kind) {
    int n = lam.n();
    unsigned __int128 num = 1;
    for (int i = 2; i <= n; ++i) num *= static_cast<unsigned>(i);
    for (int i = 1; i <= lam.length(); ++i) {
        int cb = kind == DiagramKind::Shifted ? i : 1;
        for (int j = cb; j <= cb + lam.part(i) - 1; ++j) {
            int h = hook_length(lam, Node{i, j}, kind);
            if (num % static_cast<unsigned>(h) != 0)
                throw std::logic_error("count_standard_hook: inexact division");
            num /= static_cast<unsigned>(h);
        }
    }
    if (num > static_cast<unsigned __int128>(~0ULL))
        throw std::logic_error("count_standard_hook: overflow");
    return static_cast<unsigned long long>(num);
}

namespace {

// grow fillings by placing 1..n; a cell is addable when its row prefix allows
// it and the cell above is already filled
void grow(const Partition& lam, DiagramKind kind, std::vector<int>& filled,
          int next, Tableau& work, std::vector<Tableau>& out) {
    int n = lam.n();
    if (next > n) {
        out.push_back(work);
        return;
    }
    for (int i = 1; i <= lam.length(); ++i) {
        int r = filled[static_cast<std::size_t>(i - 1)];
        if (r >= lam.part(i)) continue;
        if (i > 1) {
            int above = filled[static_cast<std::size_t>(i - 2)];
            int need = kind == DiagramKind::Shifted ? r + 2 : r + 1;
            if (above < need) continue;
        }
        work.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(r)] = next;
        filled[static_cast<std::size_t>(i - 1)] = r + 1;
        grow(lam, kind, filled, next + 1, work, out);
        filled[static_cast<std::size_t>(i - 1)] = r;
    }
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition& lam, DiagramKind kind) {
    if (kind == DiagramKind::Shifted && !classify(lam, 2).strict)
        throw std::invalid_argument("standard_tableaux: shifted shape must be strict");
    Tableau work;
    work.shape = lam;
    work.kind = kind;
    for (int part : lam.parts)
        work.rows.emplace_back(static_cast<std::size_t>(part), 0);
    std::vector<int> filled(static_cast<std::size_t>(lam.length()), 0);
    std::vector<Tableau> out;
    grow(lam, kind, filled, 1, work, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_p_standard(const Tableau& t, int p) {
    const Partition& lam = t.shape;
    if (t.kind == DiagramKind::Straight) {
        int ell = lam.length();
        for (int i2 = 1; i2 <= ell; ++i2)
            for (int j2 = 1; j2 <= lam.part(i2); ++j2)
                for (int i1 = 1; i1 < i2; ++i1)
                    for (int j1 = j2 + 1; j1 <= lam.part(i1); ++j1) {
                        // (i2, j2) lower-left, (i1, j1) upper-right
                        if (i2 + j1 + 1 - i1 - j2 != p) continue;
                        if (t.entry(i1, j1) <= t.entry(i2, j2)) return false;
                    }
        return true;
    }
    // shifted: filtered exactly when xi_1 = p-u and xi_2 = u for some
    // 1 <= u <= (p-3)/2 (for n <= p that forces the two-row shape (p-u, u))
    if (lam.length() >= 2) {
        int u = p - lam.part(1);
        if (u >= 1 && u <= (p - 3) / 2 && lam.part(2) == u)
            return t.entry(2, u + 1) > t.entry(1, p - u);
    }
    return true;
}

std::vector<Tableau> p_standard_tableaux(const Partition& lam, DiagramKind kind,
                                         int p) {
    PartitionClassification c = classify(lam, p);
    if (kind == DiagramKind::Straight) {
        if (!c.p_regular)
            throw std::invalid_argument("p_standard_tableaux: " + lam.str() +
                                        " is not p-regular for p=" + std::to_string(p));
        if (!c.in_cp)
            throw std::invalid_argument("p_standard_tableaux: " + lam.str() +
                                        " has chi > p (not completely splittable)");
    } else {
        if (!c.strict)
            throw std::invalid_argument("p_standard_tableaux: " + lam.str() +
                                        " is not strict");
        if (!c.in_cps)
            throw std::invalid_argument("p_standard_tableaux: " + lam.str() +
                                        " is not in CP^s_p for p=" + std::to_string(p));
    }
    std::vector<Tableau> out;
    for (auto& t : standard_tableaux(lam, kind))
        if (is_p_standard(t, p)) out.push_back(std::move(t));
    return out;
}

int residue(Node a, int p, DiagramKind kind) {
    int d = a.col - a.row;
    int r = ((d % p) + p) % p;
    if (kind == DiagramKind::Straight) return r;
    return r <= (p - 1) / 2 ? r : p - 1 - r;
}

std::vector<int> residue_sequence(const Tableau& t, int p) {
    std::vector<int> seq(static_cast<std::size_t>(t.n()));
    for (int i = 1; i <= t.shape.length(); ++i) {
        const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
        for (std::size_t x = 0; x < row.size(); ++x) {
            Node a{i, t.col_begin(i) + static_cast<int>(x)};
            seq[static_cast<std::size_t>(row[x] - 1)] = residue(a, p, t.kind);
        }
    }
    return seq;
}

} // namespace modrep
