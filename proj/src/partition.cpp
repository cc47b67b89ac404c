#include "modrep/partition.hpp"

#include <stdexcept>

namespace modrep {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::n() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

namespace {

void gen_parts(int remaining, int max_part, bool strict, std::vector<int>& cur,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        cur.push_back(first);
        gen_parts(remaining - first, strict ? first - 1 : first, strict, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, PartitionMode mode) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_parts(n, n, mode == PartitionMode::Strict, cur, out);
    return out;
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) return lam;
    std::vector<int> cols(static_cast<std::size_t>(lam.parts[0]), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int cnt = 0;
        for (int part : lam.parts)
            if (part >= static_cast<int>(j) + 1) ++cnt;
        cols[j] = cnt;
    }
    return Partition(cols);
}

PartitionClassification classify(const Partition& lam, int p) {
    if (lam.empty()) throw std::invalid_argument("classify: partition must be nonempty");
    if (p < 2) throw std::invalid_argument("classify: p must be >= 2");
    PartitionClassification c;
    const auto& parts = lam.parts;
    int ell = lam.length();

    c.p_regular = true;
    int run = 1;
    for (int i = 1; i < ell; ++i) {
        run = (parts[i] == parts[i - 1]) ? run + 1 : 1;
        if (run >= p) c.p_regular = false;
    }

    c.strict = true;
    for (int i = 1; i < ell; ++i)
        if (parts[i] >= parts[i - 1]) c.strict = false;

    c.p_strict = true;
    for (int i = 0; i + 1 < ell; ++i)
        if (parts[i] == parts[i + 1] && parts[i] % p != 0) c.p_strict = false;

    c.p_restricted = true;
    for (int i = 0; i < ell; ++i) {
        int gap = lam.part(i + 1) - lam.part(i + 2);
        if (parts[i] % p == 0) {
            if (gap >= p) c.p_restricted = false;
        } else {
            if (gap > p) c.p_restricted = false;
        }
    }

    c.chi = parts[0] - parts[static_cast<std::size_t>(ell - 1)] + ell;
    c.in_cp = c.p_regular && c.chi <= p;
    c.in_rp = c.p_strict && c.p_restricted;

    c.in_cps = false;
    if (c.strict) {
        int xi1 = parts[0];
        int xi2 = lam.part(2);
        if (xi1 <= (p + 1) / 2) {
            c.in_cps = true;
        } else {
            int u = p - xi1;
            if (u >= 1 && u <= (p - 3) / 2 && xi2 <= u) c.in_cps = true;
        }
    }

    c.b = 0;
    for (int x : parts)
        if (x % p != 0) ++c.b;
    return c;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(r) *
                              static_cast<unsigned long long>(n - k + i);
        r = static_cast<unsigned long long>(t / static_cast<unsigned>(i));
    }
    return r;
}

unsigned long long factorial(int n) {
    if (n < 0 || n > 20)
        throw std::invalid_argument("factorial: n out of exact 64-bit range");
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long long>(i);
    return r;
}

} // namespace modrep
