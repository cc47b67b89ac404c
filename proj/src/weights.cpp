#include "modrep/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace modrep {

namespace {

// value v+j must occur at r and t and nowhere strictly between; the chain
// climbs to the peak (p-1)/2 at some q inside the innermost pair
bool chain_level(const Weight& w, int v, int peak, int j, int m, int lo, int hi) {
    int want = v + j;
    for (int r = lo; r <= hi; ++r) {
        if (w[static_cast<std::size_t>(r - 1)] != want) continue;
        for (int t = hi; t > r; --t) {
            if (w[static_cast<std::size_t>(t - 1)] != want) continue;
            bool clean = true;
            for (int x = r + 1; x < t; ++x)
                if (w[static_cast<std::size_t>(x - 1)] == want) {
                    clean = false;
                    break;
                }
            if (!clean) continue;
            if (j == m) {
                for (int q = r + 1; q < t; ++q)
                    if (w[static_cast<std::size_t>(q - 1)] == peak) return true;
            } else {
                if (chain_level(w, v, peak, j + 1, m, r + 1, t - 1)) return true;
            }
        }
    }
    return false;
}

} // namespace

bool is_cs_weight(const Weight& w, int p) {
    int n = static_cast<int>(w.size());
    int peak = (p - 1) / 2;
    for (int x : w)
        if (x < 0 || x > peak)
            throw std::invalid_argument("is_cs_weight: entry outside 0..(p-1)/2");
    // (1) no equal neighbours
    for (int k = 0; k + 1 < n; ++k)
        if (w[static_cast<std::size_t>(k)] == w[static_cast<std::size_t>(k + 1)])
            return false;
    // (2) the peak at most once
    if (std::count(w.begin(), w.end(), peak) > 1) return false;
    // (3)/(4) pair conditions
    for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
            int v = w[static_cast<std::size_t>(k - 1)];
            if (w[static_cast<std::size_t>(l - 1)] != v) continue;
            bool has_lo = false, has_hi = false;
            for (int x = k + 1; x < l; ++x) {
                int y = w[static_cast<std::size_t>(x - 1)];
                if (y == v - 1) has_lo = true;
                if (y == v + 1) has_hi = true;
            }
            if (v == 0) {
                if (!has_hi) return false;
            } else {
                if (has_lo && has_hi) continue; // (4a)
                int m = (p - 3) / 2 - v;
                if (m < 0 || !chain_level(w, v, peak, 0, m, k, l)) return false;
            }
        }
    }
    return true;
}

bool is_admissible(const Weight& w, int k) {
    int a = w[static_cast<std::size_t>(k - 1)];
    int b = w[static_cast<std::size_t>(k)];
    return a != b + 1 && a != b - 1;
}

Weight apply_simple(Weight w, int k) {
    std::swap(w[static_cast<std::size_t>(k - 1)], w[static_cast<std::size_t>(k)]);
    return w;
}

namespace {

std::vector<int> compose_simple(const std::vector<int>& perm, int k) {
    // new tau = s_k o tau in one-line form
    std::vector<int> out = perm;
    for (int& v : out) {
        if (v == k)
            v = k + 1;
        else if (v == k + 1)
            v = k;
    }
    return out;
}

void sort_parallel(WeightOrbit& o, const std::vector<std::size_t>& order) {
    WeightOrbit s;
    for (std::size_t i : order) {
        s.weights.push_back(o.weights[i]);
        s.words.push_back(o.words[i]);
        s.perms.push_back(o.perms[i]);
        if (!o.tableaux.empty()) s.tableaux.push_back(o.tableaux[i]);
    }
    o = std::move(s);
}

} // namespace

WeightOrbit weight_orbit(const Weight& seed, int p) {
    if (!is_cs_weight(seed, p))
        throw std::invalid_argument("weight_orbit: seed is not a completely splittable weight");
    int n = static_cast<int>(seed.size());
    WeightOrbit orbit;
    std::map<Weight, std::size_t> index;
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    orbit.weights.push_back(seed);
    orbit.words.push_back({});
    orbit.perms.push_back(id);
    index[seed] = 0;
    for (std::size_t head = 0; head < orbit.weights.size(); ++head) {
        Weight cur = orbit.weights[head];
        for (int k = 1; k < n; ++k) {
            if (!is_admissible(cur, k)) continue;
            Weight nxt = apply_simple(cur, k);
            std::vector<int> nperm = compose_simple(orbit.perms[head], k);
            auto it = index.find(nxt);
            if (it != index.end()) {
                if (orbit.perms[it->second] != nperm)
                    throw std::logic_error(
                        "weight_orbit: weight reached by two distinct permutations");
                continue;
            }
            std::vector<int> nword = orbit.words[head];
            nword.push_back(k);
            index[nxt] = orbit.weights.size();
            orbit.weights.push_back(std::move(nxt));
            orbit.words.push_back(std::move(nword));
            orbit.perms.push_back(std::move(nperm));
        }
    }
    std::vector<std::size_t> order(orbit.weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return orbit.weights[x] < orbit.weights[y];
    });
    sort_parallel(orbit, order);
    return orbit;
}

WeightOrbit weight_orbit(const Tableau& seed, int p) {
    if (seed.kind != DiagramKind::Shifted)
        throw std::invalid_argument("weight_orbit: tableau seed must be shifted");
    if (!seed.is_standard() || !is_p_standard(seed, p))
        throw std::invalid_argument("weight_orbit: tableau seed must be shifted p-standard");
    PartitionClassification c = classify(seed.shape, p);
    if (!c.in_cps)
        throw std::invalid_argument("weight_orbit: shape not in CP^s_p");
    int n = seed.n();
    WeightOrbit orbit;
    std::map<std::vector<int>, std::size_t> index; // by reading word
    std::map<Weight, std::size_t> windex;
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    orbit.weights.push_back(residue_sequence(seed, p));
    orbit.words.push_back({});
    orbit.perms.push_back(id);
    orbit.tableaux.push_back(seed);
    index[seed.reading_word()] = 0;
    windex[orbit.weights[0]] = 0;
    if (!is_cs_weight(orbit.weights[0], p))
        throw std::logic_error("weight_orbit: residue sequence of seed not splittable");
    for (std::size_t head = 0; head < orbit.tableaux.size(); ++head) {
        Tableau cur = orbit.tableaux[head];
        Weight wcur = orbit.weights[head];
        for (int k = 1; k < n; ++k) {
            Tableau nxt = cur.swapped(k);
            bool tab_ok = nxt.is_standard() && is_p_standard(nxt, p);
            if (tab_ok != is_admissible(wcur, k))
                throw std::logic_error(
                    "weight_orbit: admissibility disagrees with the tableau move");
            if (!tab_ok) continue;
            auto it = index.find(nxt.reading_word());
            if (it != index.end()) continue;
            Weight nw = residue_sequence(nxt, p);
            if (nw != apply_simple(wcur, k))
                throw std::logic_error("weight_orbit: residue equivariance failed");
            auto wit = windex.find(nw);
            if (wit != windex.end())
                throw std::logic_error(
                    "weight_orbit: two tableaux share a residue sequence");
            std::vector<int> nword = orbit.words[head];
            nword.push_back(k);
            index[nxt.reading_word()] = orbit.tableaux.size();
            windex[nw] = orbit.tableaux.size();
            orbit.perms.push_back(compose_simple(orbit.perms[head], k));
            orbit.weights.push_back(std::move(nw));
            orbit.words.push_back(std::move(nword));
            orbit.tableaux.push_back(std::move(nxt));
        }
    }
    std::vector<std::size_t> order(orbit.tableaux.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return orbit.tableaux[x] < orbit.tableaux[y];
    });
    sort_parallel(orbit, order);
    return orbit;
}

} // namespace modrep
