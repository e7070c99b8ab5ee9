#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "syzlab/homalg.hpp"

namespace syzlab {

/// Module files:
///   ring: t w deg 1 1
///   ambient: rank 2 twists 0,-1
///   relations:
///   t;0
///   t^2+t*w;w
/// `#` starts a comment. The `relations:` header is optional.
PresentedModule parse_module_text(std::string_view text);
PresentedModule load_module_file(const std::filesystem::path& path);

std::string write_module_text(const PresentedModule& M);
void save_module_file(const PresentedModule& M, const std::filesystem::path& path);

}  // namespace syzlab
