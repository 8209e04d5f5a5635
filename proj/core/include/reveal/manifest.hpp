#pragma once

#include <string>
#include <vector>

#include "reveal/forensics.hpp"

namespace reveal {

/// Parses a JSON-lines manifest: one object per line with fields `id`,
/// `image_path`, `label` (authentic|tampered), `domain`, `dataset`.
/// Relative image paths resolve against the manifest's directory.
/// Throws ManifestError (with the 1-based line number) on malformed
/// lines, duplicate ids, or image files that do not exist; all checks
/// run before any sample is returned.
std::vector<Sample> load_manifest(const std::string& path);

}  // namespace reveal
