#pragma once

// Registry of reference systems stored as JSON files, with a runner that
// recomputes each expected field and reports the differences.

#include <string>
#include <vector>

#include "aifs/io.hpp"

namespace aifs {

struct CatalogEntry {
    std::string name;
    std::string anchor;
    std::string path;
    json doc;
};

/// Explicit argument, then $AIFS_CATALOG_DIR, then the directory baked in at build time.
std::string catalog_dir(const std::string &override_dir = {});

std::vector<CatalogEntry> list_catalog(const std::string &dir);
/// Throws index for an unknown name.
CatalogEntry find_entry(const std::string &dir, const std::string &name);

struct CheckResult {
    std::string check;
    bool ok = false;
    json expected, actual;
    std::string note;
};

struct CatalogRun {
    std::string name;
    std::vector<CheckResult> checks;
    bool ok = true;
    double seconds = 0;
};

CatalogRun run_catalog(const CatalogEntry &entry);

json to_json(const CatalogRun &run);

} // namespace aifs
