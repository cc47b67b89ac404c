#pragma once

#include <string>
#include <vector>

namespace modrep {

/// Weakly decreasing sequence of positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int part(int i) const { // 1-based, 0 beyond the last row
        return (i >= 1 && i <= length()) ? parts[static_cast<std::size_t>(i - 1)] : 0;
    }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& x, const Partition& y) {
        return x.parts < y.parts;
    }
};

enum class PartitionMode { All, Strict };

/// All partitions of n, reverse-lexicographic ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n, PartitionMode mode = PartitionMode::All);

Partition conjugate(const Partition& lam);

struct PartitionClassification {
    bool p_regular = false;    // no part repeated p or more times
    bool strict = false;       // strictly decreasing parts
    bool p_strict = false;     // repeated parts divisible by p
    bool p_restricted = false; // part gaps < p at multiples of p, <= p otherwise
    bool in_cp = false;        // p-regular and chi <= p
    bool in_cps = false;       // strict and the first-part condition of CP^s_p
    bool in_rp = false;        // p_strict and p_restricted
    int chi = 0;               // lambda_1 - lambda_l + l
    int b = 0;                 // parts not divisible by p
};

PartitionClassification classify(const Partition& lam, int p);

unsigned long long binomial(int n, int k);
unsigned long long factorial(int n);

} // namespace modrep
