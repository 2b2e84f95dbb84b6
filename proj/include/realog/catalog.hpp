#pragma once

#include <string>
#include <vector>

#include "realog/degeneration.hpp"
#include "realog/patchwork.hpp"

namespace realog {

struct CatalogEntry {
    std::string name;
    bool patchwork = false;  // emits patchwork JSON; SDD obtained through to_sdd
    std::string summary;
};

/// Built-in examples, in listing order.
const std::vector<CatalogEntry>& catalog_entries();

/// UnknownName unless `name` is a patchwork entry.
PatchworkInput catalog_patchwork(const std::string& name);

/// The degeneration of any entry; patchwork entries are converted on the fly.
StratifiedDegeneration catalog_sdd(const std::string& name);

}  // namespace realog
