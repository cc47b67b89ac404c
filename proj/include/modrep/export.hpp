#pragma once

#include "modrep/sergeev.hpp"
#include "modrep/symrep.hpp"
#include "modrep/verify.hpp"

#include <string>

namespace modrep {

/// Export documents are JSON with a fixed key order and Scalars as [a, b]
/// pairs, so identical inputs serialize byte-identically.
std::string export_sym(const SymRep& rep, const FieldCtx& F);
std::string export_sergeev(const SergeevRep& rep, const FieldCtx& F);

std::string export_orbit(const Partition& shape, const WeightOrbit& orbit);

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string data;
};

std::string export_report(int p, const std::string& algebra,
                          const std::vector<std::pair<Partition, std::vector<CheckOutcome>>>& results,
                          const std::vector<CrossCheckRow>& suite);

/// Write-temp-then-rename; the destination never holds a partial document.
void atomic_write(const std::string& path, const std::string& contents);

} // namespace modrep
