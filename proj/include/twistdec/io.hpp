#pragma once

#include <filesystem>
#include <string>

#include "twistdec/code.hpp"
#include "twistdec/group.hpp"
#include "twistdec/ubb.hpp"

namespace twistdec {

// Text formats. Lines starting with '#' and blank lines are ignored.
//
// Group file:
//   degree 8
//   name ASL32_rho1
//   gen (2,5)(4,7)
//   ...
//
// Representation-tuple file (paths are relative to the tuple file):
//   tuple ASL32
//   lambda 2
//   component groups/asl32_rho1.grp
//   component groups/asl32_rho2.grp
//   map 2
//   (1,3)(2,7)(4,5)(6,8)     <- one image per generator of component 1
//   ...
//   endmap
//   psi 2 [1,2,3,4,5,6,7,8]  <- optional point bijection, default identity
//
// UBB file:
//   ubb ASL32 strength 2
//   1 2 3                     <- one base per line, 1-based points
//
// Covering-design file:
//   cover 8 5 2
//   4 6 7 8 5                 <- one block per line

PermutationGroup parse_group_file(const std::filesystem::path& path);
TwistedCode parse_tuple_file(const std::filesystem::path& path,
                             uint64_t budget = kDefaultEnumerationBudget);
Ubb parse_ubb_file(const std::filesystem::path& path);
// validate_cover: exhaustively confirm the covering property when C(n,r) is
// within budget (always true at fixture sizes).
CoveringDesign parse_cover_file(const std::filesystem::path& path,
                                bool validate_cover = true);

std::string format_group_file(const std::string& name, int degree,
                              const std::vector<Permutation>& generators);
std::string format_ubb_file(const Ubb& ubb);
std::string format_cover_file(const CoveringDesign& cover);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace twistdec
