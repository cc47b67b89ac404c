#pragma once

#include "modrep/partition.hpp"

#include <string>
#include <vector>

namespace modrep {

enum class DiagramKind { Straight, Shifted };

/// 1-based cell coordinates. Straight diagrams have 1 <= j <= lambda_i;
/// shifted diagrams (strict lambda) have i <= j <= i + lambda_i - 1.
struct Node {
    int row = 0;
    int col = 0;
    friend bool operator==(const Node&, const Node&) = default;
};

bool node_in_diagram(const Partition& lam, Node a, DiagramKind kind);

/// Bijective filling of a (shifted) Young diagram with 1..n.
struct Tableau {
    Partition shape;
    DiagramKind kind = DiagramKind::Straight;
    std::vector<std::vector<int>> rows; // rows[i] left to right

    int n() const { return shape.n(); }
    int col_begin(int i) const { return kind == DiagramKind::Shifted ? i : 1; }
    bool contains(int i, int j) const;
    int entry(int i, int j) const; // throws outside the diagram
    Node position_of(int k) const;

    std::vector<int> reading_word() const; // rows concatenated, top to bottom
    bool is_standard() const;
    Tableau swapped(int k) const; // exchange entries k and k+1

    std::string str() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Reading-word order; used for every canonical basis ordering.
bool operator<(const Tableau& a, const Tableau& b);

/// Row-reading filling 1,2,... left to right, top to bottom.
Tableau row_reading_tableau(const Partition& lam, DiagramKind kind);

/// Hook length; shifted hooks adjoin row j+1 when the diagonal cell (j,j)
/// lies in the hook.
int hook_length(const Partition& lam, Node a, DiagramKind kind);

/// n! / (product of hook lengths), exactly; throws std::logic_error if the
/// division were inexact.
unsigned long long count_standard_hook(const Partition& lam, DiagramKind kind);

std::vector<Tableau> standard_tableaux(const Partition& lam, DiagramKind kind);

/// Whether the pair condition for p-standardness holds (input assumed
/// standard). Straight: every pair of cells with i > i', j < j' and
/// i + j' + 1 - i' - j = p has T(i',j') > T(i,j). Shifted: the extra
/// condition only bites for the shape (p-u, u), 1 <= u <= (p-3)/2.
bool is_p_standard(const Tableau& t, int p);

/// Std_p(lambda) / Std^s_p(xi); validates the class preconditions and
/// reports the failing class by name.
std::vector<Tableau> p_standard_tableaux(const Partition& lam, DiagramKind kind,
                                         int p);

/// Residue of a cell: straight (j - i) mod p; shifted folds (j - i) mod p
/// into I = {0..(p-1)/2} by r -> min(r, p-1-r).
int residue(Node a, int p, DiagramKind kind);

/// k-th entry is the residue of the cell containing k.
std::vector<int> residue_sequence(const Tableau& t, int p);

} // namespace modrep
