// Copyright 2026 The metacat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace metacat::text {

/// Decodes UTF-8 into code points. Malformed bytes decode as U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

/// Simple case folding for Latin, Greek and Cyrillic blocks. Other code points
/// pass through unchanged.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }
bool is_space(char32_t cp);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
/// Collapses internal whitespace runs to one space and trims the ends.
std::string collapse_whitespace(std::string_view s);

/// Lowercased word tokens: maximal runs of letters and digits.
std::vector<std::string> words(std::string_view s);

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

}  // namespace metacat::text
